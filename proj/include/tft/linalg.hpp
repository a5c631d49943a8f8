#pragma once
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace tft {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline double max_abs(const Mat& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vec& v) {
    if (v.size() == 0) return 0.0;
    return v.cwiseAbs().maxCoeff();
}

/* Kronecker product with row-major index convention:
   (A kron B)((ia,ib),(ja,jb)) = A(ia,ja) B(ib,jb), flat index ia*rowsB+ib. */
inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/* Deterministic RNG: fixed bit-level mapping from mt19937_64 output so that
   streams do not depend on library internals of std distributions. */
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    double uniform01() {  // in [0,1)
        return double(gen() >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    /* standard complex gaussian via Box-Muller */
    cplx cgauss() {
        double u1 = uniform01(), u2 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return cplx(r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2)) / std::sqrt(2.0);
    }
    Vec cgauss_vec(int n) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v(i) = cgauss();
        return v;
    }
    uint64_t integer(uint64_t n) { return gen() % n; }  // small n only
};

}  // namespace tft
