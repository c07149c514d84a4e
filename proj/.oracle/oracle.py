#!/usr/bin/env python3
"""Independent numerical oracle for the graphene-DNC artifact.

Validates the physics before the C++ build and freezes DERIVED golden values.
Natural units: hbar = v_F = l_B = 1, so Gamma = 1/sqrt(2), kappa = 1/2.
"""
import numpy as np

SQ2 = np.sqrt(2.0)


def build_basis(N):
    states = [(nd, ng) for nd in range(N + 1) for ng in range(N + 1)]
    index = {s: i for i, s in enumerate(states)}
    return states, index


def ladder(N, mode):
    states, index = build_basis(N)
    dim = len(states)
    a = np.zeros((dim, dim), dtype=complex)
    for (nd, ng), j in index.items():
        if mode == 'd' and nd > 0:
            a[index[(nd - 1, ng)], j] = np.sqrt(nd)
        if mode == 'g' and ng > 0:
            a[index[(nd - 1 if False else nd, ng - 1)], j] = np.sqrt(ng)
    return a


def phase_space(N, hbar=1.0, Gamma=1.0 / SQ2):
    ad = ladder(N, 'd'); ag = ladder(N, 'g')
    add = ad.conj().T; agd = ag.conj().T
    x = (ad + add + ag + agd) / (2 * Gamma)
    y = 1j * (ad - add - ag + agd) / (2 * Gamma)
    px = 1j * hbar * Gamma / 2 * (-ad + add - ag + agd)
    py = hbar * Gamma / 2 * (ad + add - ag - agd)
    return x, y, px, py, ad, ag


def interior_mask(N, margin):
    states, _ = build_basis(N)
    return np.array([(nd <= N - margin and ng <= N - margin) for nd, ng in states])


def max_interior(M, N, margin):
    m = interior_mask(N, margin)
    return np.abs(M[np.ix_(m, m)]).max() if m.any() else 0.0


def main():
    N = 14
    hbar = 1.0; Gamma = 1.0 / SQ2; kappa = 0.5
    x, y, px, py, ad, ag = phase_space(N)
    I = np.eye((N + 1) ** 2)

    print("== canonical algebra (interior margin 2) ==")
    for name, lhs, rhs in [
        ("[x,px]", x @ px - px @ x, 1j * hbar * I),
        ("[y,py]", y @ py - py @ y, 1j * hbar * I),
        ("[x,y]", x @ y - y @ x, 0 * I),
        ("[px,py]", px @ py - py @ px, 0 * I),
        ("[x,py]", x @ py - py @ x, 0 * I),
        ("[y,px]", y @ px - px @ y, 0 * I),
    ]:
        print(f"  {name}: {max_interior(lhs - rhs, N, 2):.3e}")
    for name, A in [("x", x), ("y", y), ("px", px), ("py", py)]:
        print(f"  herm {name}: {np.abs(A - A.conj().T).max():.3e}")
    print(f"  <0,0|x^2|0,0> = {(x @ x)[0, 0].real:.15f} (expect 1.0 = l_B^2)")

    print("== H0 block structure ==")
    h21 = px + 1j * py + kappa * (y - 1j * x)
    print(f"  ||h21 - (-i*sqrt(2)*a_g)||max = {np.abs(h21 - (-1j * SQ2 * ag)).max():.3e}")
    ax = (ad + ag) / SQ2
    ay = 1j * (ad - ag) / SQ2
    rebuilt = np.sqrt(2 * kappa * hbar) * (ay - 1j * ax)
    print(f"  ||h21 - sqrt(2*kappa*hbar)(a_y - i a_x)||max = {np.abs(h21 - rebuilt).max():.3e}")

    dim = (N + 1) ** 2
    def spinor(h12, h21):
        H = np.zeros((2 * dim, 2 * dim), dtype=complex)
        H[:dim, dim:] = h12; H[dim:, :dim] = h21
        return H

    h12 = h21.conj().T
    H0 = spinor(h12, h21)
    evalsH0, evecsH0 = np.linalg.eigh(H0)
    exact = sorted([s * np.sqrt(2 * ng) for ng in range(N + 1) for nd in range(N + 1) for s in ([1, -1] if ng else [1])])
    print(f"  ED eigcount={len(evalsH0)}, sample near sqrt2: {[f'{e:.12f}' for e in evalsH0 if abs(e - SQ2) < 1e-6][:3]}")
    zero_count = np.sum(np.abs(evalsH0) < 1e-10)
    print(f"  zero modes: {zero_count} (N+1={N+1} physical + {zero_count - (N+1)} edge artifacts)")

    print("== Eq.56 identity (interior margin 3) ==")
    sym = y @ y @ py + py @ y @ y
    alt = 2 * py @ y @ y + 2j * hbar * y
    print(f"  ||sym - alt||interior = {max_interior(sym - alt, N, 3):.3e}")

    print("== tau perturbation, scalar generator ==")
    xyy = 0.5 * (x @ y @ y + y @ y @ x)  # hermitian symmetrization
    W1 = sym - (hbar / 1.0) * xyy  # {y^2 py + py y^2 - (hbar/l_B^2) x y^2}, tau/2 factored out
    Vhat = 0.5 * W1  # V = tau * Vhat
    states, index = build_basis(N)
    print("  nonzero <s|Vhat|0,0> elements:")
    for s, i in index.items():
        v = Vhat[i, index[(0, 0)]]
        if abs(v) > 1e-13:
            print(f"    <{s[0]},{s[1]}|Vhat|0,0> = {v:.12f}")
    # shell nullity: shells n = nd+ng <= 3
    for n in range(4):
        shell = [index[s] for s in states if sum(s) == n]
        sub = Vhat[np.ix_(shell, shell)]
        print(f"  shell n={n} (deg {len(shell)}): max|proj| = {np.abs(sub).max():.3e}")

    print("== scalar shell-model ED sweep (ground state) ==")
    E_shell = np.array([np.sqrt(2.0 * (nd + ng)) for nd, ng in states])
    Hs0 = np.diag(E_shell)
    taus = np.array([1e-4, 2e-4, 4e-4, 7e-4, 1e-3])
    gs = []
    for t in taus:
        ev = np.linalg.eigvalsh(Hs0 + t * Vhat)
        gs.append(ev[0])
    gs = np.array(gs)
    c = np.polyfit(taus, gs, 2)
    print(f"  fit c2={c[0]:.9f} c1={c[1]:.3e} c0={c[2]:.3e}")
    # Eq. 68-1 second order
    i0 = index[(0, 0)]
    e2 = 0.0
    for s, i in index.items():
        if i == i0:
            continue
        v = Vhat[i, i0]
        if abs(v) > 1e-14:
            e2 += abs(v) ** 2 / (0.0 - E_shell[i])
    print(f"  Eq.68-1 coefficient = {e2:.9f}  (rel diff vs fit c2: {abs(c[0] - e2) / abs(e2):.2e})")

    print("== spinor ED under tau: zero level & sqrt2 level ==")
    for t in [0.0, 5e-4, 1e-3, 2e-3]:
        HT = spinor(1j * t * Vhat, -1j * t * Vhat)  # alpha2 * W: blocks (0, -iW; iW, 0)
        ev = np.linalg.eigvalsh(H0 + HT)
        z = ev[np.abs(ev) < 1e-8]
        near = ev[np.abs(ev - SQ2) < 0.3]
        print(f"  tau={t:g}: #E==0 {len(z)}, sqrt2 cluster spread = {near.max() - near.min():.6e}, "
              f"mean-sqrt2 = {near.mean() - SQ2:.3e}")
    # first-order projected matrix on sqrt2 level at tau -> slopes
    lvl = [i for i, e in enumerate(evalsH0) if abs(e - SQ2) < 1e-9]
    V1 = spinor(1j * Vhat, -1j * Vhat)
    P = evecsH0[:, lvl]
    M = P.conj().T @ V1 @ P
    w = np.linalg.eigvalsh(M)
    print(f"  projected Vhat on sqrt2 level: eig range [{w.min():.6f}, {w.max():.6f}] (expect nonzero)")
    t = 1e-4
    ev = np.linalg.eigvalsh(H0 + t * V1)
    near = np.sort(ev[np.abs(ev - SQ2) < 0.2])
    slopes = (near - SQ2) / t
    print(f"  ED slopes at tau=1e-4 (sorted, first/last 3): {slopes[:3]} ... {slopes[-3:]}")
    print(f"  PT slopes (sorted, first/last 3): {np.sort(w)[:3]} ... {np.sort(w)[-3:]}")

    print("== HTheta on sqrt2 level ==")
    BTh = 0.25 * (px - 1j * py)  # Theta factored out; h12 block of (alpha1 px + alpha2 py)/4
    VTh = spinor(BTh, BTh.conj().T)
    M2 = P.conj().T @ VTh @ P
    w2 = np.linalg.eigvalsh(M2)
    print(f"  projected: eigs in [{w2.min():.9f}, {w2.max():.9f}], expect flat {1/(4*SQ2):.9f}")
    th = 1e-4
    ev = np.linalg.eigvalsh(H0 + th * VTh)
    near = np.sort(ev[np.abs(ev - SQ2) < 0.2])
    print(f"  ED slope: {((near - SQ2) / th)[:3]}")
    # ground (zero) level projection: expect exactly 0
    lvl0 = [i for i, e in enumerate(evalsH0) if abs(e) < 1e-10]
    P0 = evecsH0[:, lvl0]
    print(f"  zero-level projected HTheta max = {np.abs(P0.conj().T @ VTh @ P0).max():.3e}, "
          f"HTau max = {np.abs(P0.conj().T @ V1 @ P0).max():.3e}")

    print("== DNC construction and residual scaling ==")
    def dnc(theta, tau):
        xd = x - theta / (2 * hbar) * py + tau / 2 * (y @ y @ x + x @ y @ y)
        yd = y + theta / (2 * hbar) * px
        pxd = px.copy()
        pyd = py + tau / 2 * (y @ y @ py + py @ y @ y)
        return xd, yd, pxd, pyd

    def residuals(theta, tau, margin=6):
        xd, yd, pxd, pyd = dnc(theta, tau)
        y2 = yd @ yd
        rel = {
            "[x,y]-iTh(1+ty^2)": (xd @ yd - yd @ xd) - 1j * theta * (I + tau * y2),
            "[y,py]-ih(1+ty^2)": (yd @ pyd - pyd @ yd) - 1j * hbar * (I + tau * y2),
            "[x,px]-ih(1+ty^2)": (xd @ pxd - pxd @ xd) - 1j * hbar * (I + tau * y2),
            "[y,px]": yd @ pxd - pxd @ yd,
            "[x,py]-2it y(Th py + h x)": (xd @ pyd - pyd @ xd) - 2j * tau * (theta * (yd @ pyd + pyd @ yd) / 2 + hbar * (yd @ xd + xd @ yd) / 2),
            "[px,py]": pxd @ pyd - pyd @ pxd,
        }
        return {k: max_interior(v, N, margin) for k, v in rel.items()}

    r1 = residuals(0.01, 0.01)
    r2 = residuals(0.005, 0.005)
    for k in r1:
        ratio = r1[k] / r2[k] if r2[k] > 1e-14 else float('inf')
        print(f"  {k}: r(0.01)={r1[k]:.3e} r(0.005)={r2[k]:.3e} ratio={ratio:.2f}")

    print("== bound arithmetic ==")
    dE, lB, vF, hb = 1e-3, 2.5e-8, 1e6, 6e-15
    G = 1.0 / (SQ2 * lB)
    tau_max = np.sqrt(dE * G ** 3 / (hb * vF))
    print(f"  tau_max = {tau_max:.6e} m^-2, sqrt(tau)={np.sqrt(tau_max):.6e} m^-1, "
          f"in eV: {np.sqrt(tau_max) * 200e6 / 1e15:.4f}")
    hb2 = 6.582e-16
    tau_max2 = np.sqrt(dE * G ** 3 / (hb2 * vF))
    print(f"  codata: sqrt(tau)={np.sqrt(tau_max2):.6e} m^-1")

    print("== catalog golden values ==")
    add = ad.conj().T; agd = ag.conj().T
    words = {
        "<3,0|ad'^3|0,0>": (index[(3, 0)], add @ add @ add),
        "<0,3|ag'^3|0,0>": (index[(0, 3)], agd @ agd @ agd),
        "<2,1|ad'ag'ad'|0,0>": (index[(2, 1)], add @ agd @ add),
        "<1,2|ag'ad'ag'|0,0>": (index[(1, 2)], agd @ add @ agd),
        "<0,1|ad ag' ad'|0,0>": (index[(0, 1)], ad @ agd @ add),
        "<0,1|ad ad' ag'|0,0>": (index[(0, 1)], ad @ add @ agd),
        "<0,1|ag' ad ad'|0,0>": (index[(0, 1)], agd @ ad @ add),
        "<1,0|ad' ag ag'|0,0>": (index[(1, 0)], add @ ag @ agd),
        "<1,0|ag ad' ag'|0,0>": (index[(1, 0)], ag @ add @ agd),
        "<1,0|ag ag' ad'|0,0>": (index[(1, 0)], ag @ agd @ add),
        "<1,0|ad'|0,0>": (index[(1, 0)], add),
        "<0,1|ag'|0,0>": (index[(0, 1)], agd),
    }
    for k, (i, Wd) in words.items():
        print(f"  {k} = {Wd[i, index[(0, 0)]]:.12f}")

    print("== valley K' spectrum equality, particle-hole ==")
    t = 5e-4; th = 0.01
    A_K = h12 + th * BTh + 1j * t * Vhat
    H_K = spinor(A_K, A_K.conj().T)
    A_Kp_12 = (h21 + th * BTh.conj().T - 1j * t * Vhat)  # alpha2 -> -alpha2 swaps i-parts
    H_Kp = spinor(A_Kp_12, A_Kp_12.conj().T)
    eK = np.sort(np.linalg.eigvalsh(H_K)); eKp = np.sort(np.linalg.eigvalsh(H_Kp))
    print(f"  max|eK - eKp| = {np.abs(eK - eKp).max():.3e}")
    print(f"  max|sorted(eK) + sorted(-eK)| = {np.abs(eK + eK[::-1]).max():.3e}")

    print("== convergence: scalar ground shift N=10 vs 14 at tau=5e-4 ==")
    for Nc in [6, 10, 14]:
        st, ix = build_basis(Nc)
        xx, yy_, pxx, pyy, add_, agg_ = phase_space(Nc)
        sym_ = yy_ @ yy_ @ pyy + pyy @ yy_ @ yy_
        xyy_ = 0.5 * (xx @ yy_ @ yy_ + yy_ @ yy_ @ xx)
        Vh = 0.5 * (sym_ - xyy_)
        Es = np.array([np.sqrt(2.0 * (a + b)) for a, b in st])
        ev = np.linalg.eigvalsh(np.diag(Es) + 5e-4 * Vh)
        print(f"  N={Nc}: ground = {ev[0]:.12e}")


if __name__ == "__main__":
    main()
