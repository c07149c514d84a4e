#!/usr/bin/env python3
"""Study quadratic-fit c1 leakage on the scalar ground level, and time eigh."""
import numpy as np, time

SQ2 = np.sqrt(2.0)

def build(N):
    states = [(nd, ng) for nd in range(N + 1) for ng in range(N + 1)]
    index = {s: i for i, s in enumerate(states)}
    dim = len(states)
    ad = np.zeros((dim, dim)); ag = np.zeros((dim, dim))
    for (nd, ng), j in index.items():
        if nd > 0: ad[index[(nd - 1, ng)], j] = np.sqrt(nd)
        if ng > 0: ag[index[(nd, ng - 1)], j] = np.sqrt(ng)
    G = 1 / SQ2
    x = (ad + ad.T + ag + ag.T) / (2 * G)
    y = 1j * (ad - ad.T - ag + ag.T) / (2 * G)
    py = G / 2 * (ad + ad.T - ag - ag.T)
    sym = y @ y @ py + py @ y @ y
    xyy = 0.5 * (x @ y @ y + y @ y @ x)
    Vhat = 0.5 * (sym - xyy)
    Es = np.array([np.sqrt(2.0 * (a + b)) for a, b in states])
    return np.diag(Es) + 0j, Vhat

H0, V = build(10)

def ground(t):
    return np.linalg.eigvalsh(H0 + t * V)[0]

# cubic coefficient?
ts = np.array([1e-4, 2e-4, 4e-4, 7e-4, 1e-3])
gs = np.array([ground(t) for t in ts])
c4fit = np.polyfit(ts, gs, 4)
print("deg-4 fit coeffs (c4..c0):", c4fit)

for label, grid in [
    ("decade 1e-4..1e-3, 5pts", np.array([1e-4, 2e-4, 4e-4, 7e-4, 1e-3])),
    ("decade 1e-4..1e-3, 9pts", np.linspace(1e-4, 1e-3, 9)),
    ("decade 1e-4..1e-3 log 8pts", np.logspace(-4, -3, 8)),
    ("with zero anchor", np.array([0.0, 1e-4, 2e-4, 4e-4, 7e-4, 1e-3])),
]:
    gsv = np.array([ground(t) for t in grid])
    # scaled fit for conditioning
    s = grid.max()
    c = np.polyfit(grid / s, gsv, 2)
    c2, c1, c0 = c[0] / s**2, c[1] / s, c[2]
    thr = 1e-6 * abs(c2) * grid.max()
    print(f"{label}: c2={c2:.8f} c1={c1:.3e} c0={c0:.3e} thr={thr:.3e} pass={abs(c1)<thr}")

# timing for dense complex hermitian eigh at n=3362
for n in [1681, 3362]:
    A = np.random.randn(n, n) + 1j * np.random.randn(n, n)
    A = A + A.conj().T
    t0 = time.time()
    np.linalg.eigh(A)
    print(f"eigh n={n}: {time.time() - t0:.2f}s")
