#pragma once

#include "trexp/pauli.hpp"

namespace trexp {

struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical form of a Hermitian pair (A, B):
///   f_{A,B}(t) = c e^{t lambda} 2 cosh sqrt(alpha^2 (t+t0)^2 + beta^2)
/// with U mapping the traceless parts onto multiples of the Pauli matrices.
struct CanonicalDecomposition {
    double lambda{};  // tr A / 2
    double mu{};      // tr B / 2
    double t0{};
    double c{};       // e^mu > 0
    double alpha{};   // > 0 unless degenerate
    double beta{};    // >= 0
    Matrix2 u{Matrix2::identity()};
    bool degenerate{false}; // traceless part of A vanished
};

/// Split a = lambda I + a0 with tr a0 = 0 exactly.
struct TracelessSplit {
    double lambda;
    HermitianMatrix2 a0;
};
TracelessSplit traceless_split(const HermitianMatrix2& a);

/// t0 = tr(a0 b) / tr(a0^2); throws degenerate_error when tr(a0^2) is
/// below the degeneracy threshold.
double compute_t0(const HermitianMatrix2& a0, const HermitianMatrix2& b);

CanonicalDecomposition reduce(const HermitianMatrix2& a, const HermitianMatrix2& b);

/// tr exp(tA + B), evaluated directly. Strictly positive.
double f_direct(const HermitianMatrix2& a, const HermitianMatrix2& b, double t);

/// The same function evaluated through the canonical form.
double f_canonical(const CanonicalDecomposition& dec, double t);

/// Real part of tr(a b) for Hermitian a, b (the trace is real).
double herm_trace_product(const HermitianMatrix2& a, const HermitianMatrix2& b);

} // namespace trexp
