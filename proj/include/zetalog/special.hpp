// Reference evaluators: complex Riemann zeta with derivatives
// (Euler-Maclaurin), Hurwitz zeta at integer order, digamma, log-gamma,
// and a Cauchy-integral numerical differentiation oracle.
#ifndef ZETALOG_SPECIAL_HPP
#define ZETALOG_SPECIAL_HPP

#include <functional>
#include <span>
#include <vector>

#include "zetalog/numeric.hpp"

namespace zetalog {

struct PrecisionConfig {
    // Baseline Euler-Maclaurin main-sum length; the effective length grows
    // with |Im s| as max(em_cutoff, ceil(2|Im s|) + 20).
    int em_cutoff = 20;
    // Number of B_2k correction terms; beyond ~15 the asymptotic series
    // diverges for moderate cutoffs.
    int bernoulli_order = 10;
    int cauchy_points = 64;
    double cauchy_radius = 0.25;
    double quad_rel_tol = 1e-12;

    void validate() const;
};

// [zeta(s), zeta'(s), ..., zeta^(order)(s)] by termwise s-differentiation
// of the Euler-Maclaurin expression (finite Dirichlet sum, pole term,
// half term, Bernoulli corrections). order <= 8.
std::vector<Complex> zeta_with_derivatives(Complex s, int order, const PrecisionConfig& cfg = {});

// [(ln zeta)'(s), ..., (ln zeta)^(order)(s)], obtained from
// zeta_with_derivatives through the logarithmic-derivative recursion.
// Refuses |zeta(s)| < 1e-12.
std::vector<Complex> log_zeta_derivatives(Complex s, int order, const PrecisionConfig& cfg = {});

// The recursion alone: given f(s), f'(s), ..., f^(n)(s) with f(s) != 0,
// solve f^(k) = sum_{j=0}^{k-1} C(k-1,j) g^(k-j) f^(j) for the derivatives
// g', ..., g^(n) of g = ln f.
std::vector<Complex> log_derivatives_from(std::span<const Complex> f_derivatives);

// Hurwitz zeta(j, q) = sum_{m>=0} (m+q)^(-j) for integer j >= 2, Re q > 0.
Complex hurwitz_zeta(int j, Complex q, const PrecisionConfig& cfg = {});

// Digamma via recurrence lift to Re z >= 12 plus the asymptotic series.
Complex digamma(Complex z, const PrecisionConfig& cfg = {});

// Log-gamma on Re z > 0: the branch continuous on the right half-plane,
// real on the positive real axis.
Complex log_gamma(Complex z, const PrecisionConfig& cfg = {});

using AnalyticFn = std::function<Complex(Complex)>;

// n-th derivative of f at center via trapezoidal quadrature of the Cauchy
// integral on the circle of radius cfg.cauchy_radius. f must be analytic
// on the closed disk -- that part of the contract belongs to the caller:
// a singularity on or near the circle is caught by the point-doubling
// check (std::runtime_error), but a pole deep inside the disk converges
// cleanly to a residue-shifted value and cannot be detected here.
Complex cauchy_derivative(const AnalyticFn& f, Complex center, int order,
                          const PrecisionConfig& cfg = {});

} // namespace zetalog

#endif
