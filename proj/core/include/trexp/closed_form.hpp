#pragma once

#include "trexp/pauli.hpp"
#include "trexp/reduction.hpp"

#include <functional>
#include <vector>

namespace trexp {

/// 2 cosh sqrt(alpha^2 t^2 + beta^2).
double f_closed(double alpha, double beta, double t);

/// Diagonal entries of (1/2)[e^{t sigma + beta tau} + e^{t sigma - beta tau}]:
/// e1 = cosh r + t sinh(r)/r, e2 = cosh r - t sinh(r)/r, r = sqrt(t^2 + beta^2).
double e1(double t, double beta);
double e2(double t, double beta);

/// Modified Bessel function I_1 by its power series, 0 <= z <= 100.
double bessel_I1(double z);

/// Density kernel (beta / 2 sqrt(1-mu^2)) I_1(beta sqrt(1-mu^2)) on [-1, 1];
/// endpoint limit beta^2/4.
double density_dhat(double mu, double beta);

/// One point mass at mu = 1 plus a continuous density on [-1, 1].
struct HybridMeasure {
    double atom_weight_at_one{};
    double beta{};
    std::function<double(double)> density; // >= 0 on [-1, 1]

    double total_mass() const;
};

/// The limiting representing measure: unit atom at 1 plus (1+mu) dhat(mu, beta).
HybridMeasure rho_closed(double beta);

/// Bilateral Laplace transform slot: atom e^{sign t} + int e^{sign t mu} density.
/// sign = +1 reproduces e1(t, beta), sign = -1 reproduces e2(t, beta).
double laplace_eval(const HybridMeasure& m, double t, int sign);

/// k-th moment int mu^k (atom + density).
double moment(const HybridMeasure& m, int k);

/// Weighted piece of a measure on the real line: either an atom or a
/// continuous density over [lo, hi], sampled on demand.
struct SpectralAtom {
    double nu;
    double weight;
};
struct SpectralDensity {
    double lo, hi;
    std::function<double(double)> density; // in the nu variable
};

struct SpectralMeasure {
    double support_lo{};
    double support_hi{};
    std::vector<SpectralAtom> atoms;
    std::vector<SpectralDensity> pieces;

    double total_mass() const;
    /// Bilateral Laplace transform at t; reproduces tr e^{tA+B}.
    double transform(double t) const;
};

/// Pushforward of the representing measure through the canonical form of
/// (A, B): masses c e^{+/- t0 alpha mu} at nu = lambda +/- alpha mu.
/// Support equals the eigenvalue interval of A.
SpectralMeasure spectral_measure(const HermitianMatrix2& a, const HermitianMatrix2& b);

} // namespace trexp
