#include "trexp/pauli.hpp"

#include <cmath>

namespace trexp {

bool is_finite(double x) { return std::isfinite(x); }
bool is_finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

HermitianMatrix2::HermitianMatrix2(double d11, double d22, cplx off)
    : a11(d11), a22(d22), a12(off) {
    if (!is_finite(d11) || !is_finite(d22) || !is_finite(off))
        throw domain_error("HermitianMatrix2: non-finite entry");
}

Matrix2 mat_add(const Matrix2& a, const Matrix2& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

Matrix2 mat_sub(const Matrix2& a, const Matrix2& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21,
            a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21,
            a.m21 * b.m12 + a.m22 * b.m22};
}

Matrix2 mat_scale(const cplx& c, const Matrix2& a) {
    return {c * a.m11, c * a.m12, c * a.m21, c * a.m22};
}

Matrix2 adjoint(const Matrix2& a) {
    return {std::conj(a.m11), std::conj(a.m21), std::conj(a.m12), std::conj(a.m22)};
}

cplx trace(const Matrix2& a) { return a.m11 + a.m22; }

double max_abs(const Matrix2& a) {
    return std::max(std::max(std::abs(a.m11), std::abs(a.m12)),
                    std::max(std::abs(a.m21), std::abs(a.m22)));
}

HermitianMatrix2 herm_add(const HermitianMatrix2& a, const HermitianMatrix2& b) {
    return {a.a11 + b.a11, a.a22 + b.a22, a.a12 + b.a12};
}

HermitianMatrix2 herm_scale(double c, const HermitianMatrix2& a) {
    if (!is_finite(c)) throw domain_error("herm_scale: non-finite scalar");
    return {c * a.a11, c * a.a22, c * a.a12};
}

HermitianMatrix2 pauli_sigma() { return {1.0, -1.0, 0.0}; }
HermitianMatrix2 pauli_tau() { return {0.0, 0.0, 1.0}; }

double sinhc(double r) {
    if (!is_finite(r) || r < 0.0) throw domain_error("sinhc: requires finite r >= 0");
    if (r < 1e-4) {
        const double r2 = r * r;
        return 1.0 + r2 / 6.0 + r2 * r2 / 120.0;
    }
    return std::sinh(r) / r;
}

Matrix2 herm_exp(const HermitianMatrix2& h) {
    const double lambda = h.tr() / 2.0;
    // traceless part: diag +/- a, off-diagonal b
    const double a = (h.a11 - h.a22) / 2.0;
    const cplx b = h.a12;
    const double r = std::sqrt(a * a + std::norm(b)); // tr(h0^2)/2 = a^2 + |b|^2
    const double el = std::exp(lambda);
    const double ch = std::cosh(r);
    const double sh = sinhc(r);
    return {el * (ch + sh * a), el * sh * b,
            el * sh * std::conj(b), el * (ch - sh * a)};
}

namespace {

// Rotate v = (v1, v2) so its first nonzero component is real positive,
// then return the adjoint row (conj of components).
void phase_fix(cplx& v1, cplx& v2) {
    cplx pivot = (std::abs(v1) > 0.0) ? v1 : v2;
    const double n = std::abs(pivot);
    if (n == 0.0) return;
    const cplx phase = std::conj(pivot) / n;
    v1 *= phase;
    v2 *= phase;
}

} // namespace

Eigen2Result eigen2(const HermitianMatrix2& h) {
    const double mean = (h.a11 + h.a22) / 2.0;
    const double d = (h.a11 - h.a22) / 2.0;
    const double off = std::abs(h.a12);
    const double r = std::hypot(d, off);
    const double l1 = mean + r;
    const double l2 = mean - r;

    if (off == 0.0) {
        if (h.a11 >= h.a22) return {l1, l2, Matrix2::identity()};
        return {l1, l2, {0.0, 1.0, 1.0, 0.0}};
    }

    // eigenvector for l1: (a12, l1 - a11); for l2 the orthogonal complement
    cplx v1a = h.a12, v1b = cplx(l1 - h.a11, 0.0);
    double n1 = std::sqrt(std::norm(v1a) + std::norm(v1b));
    v1a /= n1; v1b /= n1;
    phase_fix(v1a, v1b);

    cplx v2a = -std::conj(v1b), v2b = std::conj(v1a);
    phase_fix(v2a, v2b);

    // rows of U are the conjugated eigenvectors: U h U^* diagonal
    return {l1, l2, {std::conj(v1a), std::conj(v1b), std::conj(v2a), std::conj(v2b)}};
}

} // namespace trexp
