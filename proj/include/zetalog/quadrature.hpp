// Adaptive Gauss-Kronrod (G7, K15) integration of complex-valued
// integrands over real intervals, plus a dyadic scheme for integrable
// endpoint singularities.
#ifndef ZETALOG_QUADRATURE_HPP
#define ZETALOG_QUADRATURE_HPP

#include <functional>

#include "zetalog/numeric.hpp"

namespace zetalog {

using Integrand = std::function<Complex(double)>;

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_depth = 60;
};

struct QuadratureResult {
    Complex value;
    double error_estimate;
};

// Adaptive bisection with a G7/K15 pair on each subinterval. The integrand
// must be finite on [lo, hi].
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureOptions& opts = {});

// Integral over (lo, hi] of an integrand with an integrable singularity at
// lo (e.g. x^(-a) ln^(j-1)x at 0). Sums Gauss-Kronrod results over dyadic
// pieces shrinking toward lo until the pieces are negligible. Throws
// std::runtime_error if the pieces fail to die out.
QuadratureResult integrate_singular_lower(const Integrand& f, double lo, double hi,
                                          const QuadratureOptions& opts = {});

} // namespace zetalog

#endif
