#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace trexp {

using cplx = std::complex<double>;

/// Thrown when a public entry point receives NaN/Inf.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_finite(double x);
bool is_finite(const cplx& z);

/// Dense 2x2 complex matrix, value type.
struct Matrix2 {
    cplx m11{}, m12{}, m21{}, m22{};

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 zero() { return {}; }
};

Matrix2 mat_add(const Matrix2& a, const Matrix2& b);
Matrix2 mat_sub(const Matrix2& a, const Matrix2& b);
Matrix2 mat_mul(const Matrix2& a, const Matrix2& b);
Matrix2 mat_scale(const cplx& c, const Matrix2& a);
Matrix2 adjoint(const Matrix2& a);
cplx trace(const Matrix2& a);

/// Largest absolute entry, for residual checks.
double max_abs(const Matrix2& a);

/// 2x2 Hermitian matrix stored by its free parameters; the (2,1) entry
/// is implied as conj(a12), so the embedding is Hermitian exactly.
struct HermitianMatrix2 {
    double a11{};
    double a22{};
    cplx a12{};

    HermitianMatrix2() = default;
    HermitianMatrix2(double d11, double d22, cplx off);

    Matrix2 to_matrix() const { return {a11, a12, std::conj(a12), a22}; }
    double tr() const { return a11 + a22; }
};

HermitianMatrix2 herm_add(const HermitianMatrix2& a, const HermitianMatrix2& b);
HermitianMatrix2 herm_scale(double c, const HermitianMatrix2& a);

/// Pauli matrix diag(1, -1).
HermitianMatrix2 pauli_sigma();
/// Pauli matrix antidiag(1, 1).
HermitianMatrix2 pauli_tau();

/// sinh(r)/r, continuous through r = 0.
double sinhc(double r);

/// Matrix exponential of a 2x2 Hermitian matrix via the traceless split:
/// h = lambda*I + h0, r^2 = tr(h0^2)/2, e^h = e^lambda (cosh(r) I + sinhc(r) h0).
Matrix2 herm_exp(const HermitianMatrix2& h);

struct Eigen2Result {
    double lambda1; // >= lambda2
    double lambda2;
    Matrix2 u; // unitary, u * h * u^* = diag(lambda1, lambda2)
};

/// Closed-form eigendecomposition with deterministic eigenvector phases:
/// the first nonzero component of each eigenvector row is rotated real positive.
Eigen2Result eigen2(const HermitianMatrix2& h);

} // namespace trexp
