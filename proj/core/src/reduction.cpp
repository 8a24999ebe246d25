#include "trexp/reduction.hpp"

#include <cmath>

namespace trexp {

namespace {
constexpr double kDegenerateTol = 1e-24; // threshold on tr(A0^2)
}

TracelessSplit traceless_split(const HermitianMatrix2& a) {
    const double lambda = (a.a11 + a.a22) / 2.0;
    const double d = (a.a11 - a.a22) / 2.0;
    return {lambda, HermitianMatrix2{d, -d, a.a12}};
}

double herm_trace_product(const HermitianMatrix2& a, const HermitianMatrix2& b) {
    // tr(ab) = a11 b11 + a22 b22 + 2 Re(a12 conj(b12))
    return a.a11 * b.a11 + a.a22 * b.a22 +
           2.0 * (a.a12.real() * b.a12.real() + a.a12.imag() * b.a12.imag());
}

double compute_t0(const HermitianMatrix2& a0, const HermitianMatrix2& b) {
    const double n2 = herm_trace_product(a0, a0);
    if (n2 <= kDegenerateTol)
        throw degenerate_error("compute_t0: tr(A0^2) vanishes");
    return herm_trace_product(a0, b) / n2;
}

CanonicalDecomposition reduce(const HermitianMatrix2& a, const HermitianMatrix2& b) {
    CanonicalDecomposition dec;
    const auto [lambda, a0] = traceless_split(a);
    const auto [mu, b_center] = traceless_split(b);
    dec.lambda = lambda;
    dec.mu = mu;
    dec.c = std::exp(mu);

    if (herm_trace_product(a0, a0) <= kDegenerateTol) {
        // A is scalar: f(t) = e^{t lambda} tr e^B = c e^{t lambda} 2 cosh(mu')
        // with mu' the eigenvalue half-spread of B. alpha = 0 keeps the
        // canonical evaluation formula valid.
        dec.degenerate = true;
        dec.alpha = 0.0;
        dec.t0 = 0.0;
        const auto eb = eigen2(b_center);
        dec.beta = eb.lambda1; // half-spread, >= 0 since tr b_center = 0
        dec.u = eb.u;
        return dec;
    }

    dec.t0 = compute_t0(a0, b);
    const HermitianMatrix2 b0 = herm_add(b_center, herm_scale(-dec.t0, a0));

    const auto ea = eigen2(a0);
    dec.alpha = ea.lambda1; // > 0, eigenvalues are +/- alpha

    // B0 in the sigma-frame is purely off-diagonal; rotate its phase away.
    const Matrix2 bt = mat_mul(ea.u, mat_mul(b0.to_matrix(), adjoint(ea.u)));
    const cplx b12 = bt.m12;
    dec.beta = std::abs(b12);
    Matrix2 u = ea.u;
    if (dec.beta > 0.0) {
        const cplx phase = std::conj(b12) / dec.beta; // e^{i theta}, theta = -arg(b12)
        u.m11 *= phase;
        u.m12 *= phase;
    }
    dec.u = u;
    return dec;
}

double f_direct(const HermitianMatrix2& a, const HermitianMatrix2& b, double t) {
    if (!is_finite(t)) throw domain_error("f_direct: non-finite t");
    const HermitianMatrix2 m = herm_add(herm_scale(t, a), b);
    return trace(herm_exp(m)).real();
}

double f_canonical(const CanonicalDecomposition& dec, double t) {
    const double u = dec.alpha * (t + dec.t0);
    const double r = std::sqrt(u * u + dec.beta * dec.beta);
    return dec.c * std::exp(t * dec.lambda) * 2.0 * std::cosh(r);
}

} // namespace trexp
