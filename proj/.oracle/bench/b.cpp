#define EIGEN_USE_LAPACKE
#include <Eigen/Dense>
#include <chrono>
#include <cstdio>
#include <random>

using Clock = std::chrono::steady_clock;
static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main() {
    const int n = 1681;
    std::mt19937 rng(1);
    std::normal_distribution<double> nd;
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = std::complex<double>(nd(rng), nd(rng));
    Eigen::MatrixXcd H = A + A.adjoint();

    auto t0 = Clock::now();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    auto t1 = Clock::now();
    std::printf("eigh full n=%d: %.2fs (info %d)\n", n, secs(t0, t1), (int)es.info());

    t0 = Clock::now();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ev(H, Eigen::EigenvaluesOnly);
    t1 = Clock::now();
    std::printf("eigh values-only: %.2fs\n", secs(t0, t1));

    t0 = Clock::now();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    t1 = Clock::now();
    std::printf("jacobisvd(LAPACKE gesvd) full: %.2fs\n", secs(t0, t1));
    std::printf("sigma0=%.6f\n", svd.singularValues()(0));
    return 0;
}
