#include "trexp/closed_form.hpp"

#include "trexp/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace trexp {

double f_closed(double alpha, double beta, double t) {
    if (!is_finite(alpha) || !is_finite(beta) || !is_finite(t))
        throw domain_error("f_closed: non-finite argument");
    return 2.0 * std::cosh(std::hypot(alpha * t, beta));
}

double e1(double t, double beta) {
    const double r = std::hypot(t, beta);
    return std::cosh(r) + t * sinhc(r);
}

double e2(double t, double beta) {
    const double r = std::hypot(t, beta);
    return std::cosh(r) - t * sinhc(r);
}

double bessel_I1(double z) {
    if (!is_finite(z) || z < 0.0 || z > 100.0)
        throw domain_error("bessel_I1: requires 0 <= z <= 100");
    // sum (z/2)^{2k+1} / (k! (k+1)!)
    const double q = 0.25 * z * z;
    double term = 0.5 * z;
    double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term <= 1e-17 * sum) break;
    }
    return sum;
}

double density_dhat(double mu, double beta) {
    if (!is_finite(mu) || std::abs(mu) > 1.0)
        throw domain_error("density_dhat: requires |mu| <= 1");
    if (beta < 0.0 || !is_finite(beta))
        throw domain_error("density_dhat: requires beta >= 0");
    const double w2 = 1.0 - mu * mu;
    if (w2 < 1e-12) {
        // I1(z) ~ (z/2)(1 + z^2/8) near the endpoints
        const double z2 = beta * beta * w2;
        return 0.25 * beta * beta * (1.0 + z2 / 8.0);
    }
    const double w = std::sqrt(w2);
    return 0.5 * beta / w * bessel_I1(beta * w);
}

double HybridMeasure::total_mass() const {
    if (!density) return atom_weight_at_one;
    return atom_weight_at_one + integrate(density, -1.0, 1.0);
}

HybridMeasure rho_closed(double beta) {
    if (beta < 0.0 || !is_finite(beta))
        throw domain_error("rho_closed: requires beta >= 0");
    HybridMeasure m;
    m.atom_weight_at_one = 1.0;
    m.beta = beta;
    if (beta > 0.0)
        m.density = [beta](double mu) { return (1.0 + mu) * density_dhat(mu, beta); };
    return m;
}

double laplace_eval(const HybridMeasure& m, double t, int sign) {
    if (!is_finite(t)) throw domain_error("laplace_eval: non-finite t");
    const double s = sign >= 0 ? 1.0 : -1.0;
    double out = m.atom_weight_at_one * std::exp(s * t);
    if (m.density) {
        const auto& d = m.density;
        out += integrate([&](double mu) { return std::exp(s * t * mu) * d(mu); },
                         -1.0, 1.0);
    }
    return out;
}

double moment(const HybridMeasure& m, int k) {
    double out = m.atom_weight_at_one; // atom sits at mu = 1
    if (m.density) {
        const auto& d = m.density;
        out += integrate([&](double mu) { return std::pow(mu, k) * d(mu); },
                         -1.0, 1.0);
    }
    return out;
}

double SpectralMeasure::total_mass() const {
    double out = 0.0;
    for (const auto& a : atoms) out += a.weight;
    for (const auto& p : pieces) out += integrate(p.density, p.lo, p.hi);
    return out;
}

double SpectralMeasure::transform(double t) const {
    double out = 0.0;
    for (const auto& a : atoms) out += a.weight * std::exp(t * a.nu);
    for (const auto& p : pieces) {
        const auto& d = p.density;
        out += integrate([&](double nu) { return std::exp(t * nu) * d(nu); },
                         p.lo, p.hi);
    }
    return out;
}

SpectralMeasure spectral_measure(const HermitianMatrix2& a, const HermitianMatrix2& b) {
    const CanonicalDecomposition dec = reduce(a, b);
    SpectralMeasure sm;

    if (dec.degenerate) {
        // A scalar: one atom at lambda of mass tr e^B
        sm.support_lo = sm.support_hi = dec.lambda;
        sm.atoms.push_back({dec.lambda, dec.c * 2.0 * std::cosh(dec.beta)});
        return sm;
    }

    sm.support_lo = dec.lambda - dec.alpha;
    sm.support_hi = dec.lambda + dec.alpha;

    const double c = dec.c, t0 = dec.t0, alpha = dec.alpha, beta = dec.beta;
    // rho's atom at mu = 1 maps to both endpoints
    sm.atoms.push_back({dec.lambda - alpha, c * std::exp(-t0 * alpha)});
    sm.atoms.push_back({dec.lambda + alpha, c * std::exp(t0 * alpha)});

    if (beta > 0.0) {
        const double lambda = dec.lambda;
        // image of (1+mu) dhat under nu = lambda + alpha*mu, weight e^{t0 alpha mu}
        sm.pieces.push_back({sm.support_lo, sm.support_hi, [=](double nu) {
            const double mu = std::clamp((nu - lambda) / alpha, -1.0, 1.0);
            return c * std::exp(t0 * alpha * mu) * (1.0 + mu) * density_dhat(mu, beta) / alpha;
        }});
        // image under nu = lambda - alpha*mu, weight e^{-t0 alpha mu}
        sm.pieces.push_back({sm.support_lo, sm.support_hi, [=](double nu) {
            const double mu = std::clamp((lambda - nu) / alpha, -1.0, 1.0);
            return c * std::exp(-t0 * alpha * mu) * (1.0 + mu) * density_dhat(mu, beta) / alpha;
        }});
    }
    return sm;
}

} // namespace trexp
