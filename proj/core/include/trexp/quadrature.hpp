#pragma once

#include <functional>
#include <stdexcept>

namespace trexp {

struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Composite Gauss-Legendre integration of f over [a, b]: 32 nodes per
/// panel, panel count doubled until two successive estimates agree to
/// rel_tol, hard cap 1024 panels. Throws quadrature_error on stall.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-11);

} // namespace trexp
