// Conditional approximation of d^n/ds^n ln zeta(s) from truncated von
// Mangoldt sums with the compensating integral, residual/bound reports,
// convergence scans, the eta coefficients at s = 1, and the Re s = 1
// oscillation combination.
#ifndef ZETALOG_LOGDERIV_HPP
#define ZETALOG_LOGDERIV_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "zetalog/arithmetic.hpp"
#include "zetalog/special.hpp"

namespace zetalog {

// One approximation experiment at fixed (order, point, cutoff).
struct ApproxReport {
    int order = 0;
    Complex point;
    std::uint64_t cutoff = 0;
    Complex approximation;
    Complex reference;
    double residual_abs = 0.0; // |approximation - reference|
    double bound = 0.0;        // BoundParameters::bound(order, point, cutoff)
    double ratio = 0.0;        // residual_abs / bound
};

enum class ScanAxis { grid_in_a, grid_in_n };

struct ScanSeries {
    ScanAxis axis = ScanAxis::grid_in_a;
    std::vector<ApproxReport> entries;
};

// Throws std::domain_error unless a lies in one of the two evaluation
// regimes: the strip 1/2 < Re a < 1 or the convergent half-plane
// Re a > 1. Lets callers fail fast before any heavy computation.
void validate_approximation_point(Complex a);

// (-1)^n [ sum_{m<=N} Lambda(m) ln^(n-1)m / m^a  -  int_0^N x^(-a) ln^(n-1)x dx ]
// for 1/2 < Re a < 1; in the convergent regime Re a > 1 the integral term
// is dropped (it has no role there) and the bare truncated sum is used.
// For n = 1 this is -sum Lambda(m)/m^a + N^(1-a)/(1-a).
Complex approx_log_derivative(const MangoldtTable& table, int order, Complex a,
                              std::uint64_t n_cut);

// Approximation vs. the Euler-Maclaurin reference, with the tolerance-model
// bound and the residual/bound ratio.
ApproxReport residual_report(const MangoldtTable& table, int order, Complex a,
                             std::uint64_t n_cut, const BoundParameters& bp,
                             const PrecisionConfig& cfg = {});

// One report per grid point a (strictly increasing reals in the validity
// domain), fixed cutoff. An empty grid yields an empty series. Grid points
// may be evaluated concurrently; entries always come back in grid order.
ScanSeries scan_over_a(const MangoldtTable& table, int order, std::span<const double> a_grid,
                       std::uint64_t n_cut, const BoundParameters& bp,
                       const PrecisionConfig& cfg = {});

// One report per cutoff (strictly increasing), fixed a; the reference is
// computed once and reused.
ScanSeries scan_over_n_cut(const MangoldtTable& table, int order, Complex a,
                           std::span<const std::uint64_t> n_grid, const BoundParameters& bp,
                           const PrecisionConfig& cfg = {});

// (-1)^n [ sum_{m<=N} Lambda(m) ln^(n-1)m / m  -  ln^n N / n ]; its limit
// in N is d^n/ds^n ln((s-1) zeta(s)) at s = 1.
double eta_coefficient(const MangoldtTable& table, int order, std::uint64_t n_cut);

// sum_{m<=N} Lambda(m)/m^(1+it) + (zeta'/zeta)(1+it) - i N^(-it)/t,
// whose magnitude is o(1) as N grows.
Complex line_one_oscillation(const MangoldtTable& table, double t, std::uint64_t n_cut,
                             const PrecisionConfig& cfg = {});

} // namespace zetalog

#endif
