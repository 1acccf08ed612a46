#include "zetalog/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zetalog {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15). Nodes 1, 3, 5 and the center are the Gauss nodes.
constexpr std::array<double, 8> kron_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kron_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    Complex kronrod;
    double error;
};

PanelResult gk15(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const Complex fc = f(center);
    Complex kron = fc * kron_w[7];
    Complex gauss = fc * gauss_w[3];
    for (int i = 0; i < 7; ++i) {
        const Complex fa = f(center - half * kron_x[i]);
        const Complex fb = f(center + half * kron_x[i]);
        kron += (fa + fb) * kron_w[i];
        if (i % 2 == 1)
            gauss += (fa + fb) * gauss_w[(i - 1) / 2];
    }
    kron *= half;
    gauss *= half;
    return {kron, std::abs(kron - gauss)};
}

void refine(const Integrand& f, double lo, double hi, double budget, int depth, int max_depth,
            ComplexKahanAccumulator& acc, double& err_acc) {
    const PanelResult r = gk15(f, lo, hi);
    if (!std::isfinite(r.kronrod.real()) || !std::isfinite(r.kronrod.imag()))
        throw std::runtime_error("integrate: integrand not finite on [" + std::to_string(lo) +
                                 ", " + std::to_string(hi) + "]");
    if (r.error <= budget || depth >= max_depth) {
        acc.add(r.kronrod);
        err_acc += r.error;
        return;
    }
    const double mid = 0.5 * (lo + hi);
    refine(f, lo, mid, 0.5 * budget, depth + 1, max_depth, acc, err_acc);
    refine(f, mid, hi, 0.5 * budget, depth + 1, max_depth, acc, err_acc);
}

} // namespace

QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureOptions& opts) {
    if (!(lo <= hi))
        throw std::invalid_argument("integrate: requires lo <= hi");
    if (lo == hi)
        return {Complex(0.0), 0.0};
    const PanelResult first = gk15(f, lo, hi);
    const double budget =
        std::max(opts.abs_tol, opts.rel_tol * std::max(std::abs(first.kronrod), 1e-300));
    ComplexKahanAccumulator acc;
    double err = 0.0;
    refine(f, lo, hi, budget, 0, opts.max_depth, acc, err);
    return {acc.value(), err};
}

QuadratureResult integrate_singular_lower(const Integrand& f, double lo, double hi,
                                          const QuadratureOptions& opts) {
    if (!(lo < hi))
        throw std::invalid_argument("integrate_singular_lower: requires lo < hi");
    ComplexKahanAccumulator acc;
    double err = 0.0;
    double upper = hi;
    int quiet = 0;
    constexpr int max_pieces = 4000;
    for (int k = 0; k < max_pieces; ++k) {
        const double lower = lo + 0.5 * (upper - lo);
        const QuadratureResult piece = integrate(f, lower, upper, opts);
        acc.add(piece.value);
        err += piece.error_estimate;
        const double scale = std::max(std::abs(acc.value()), 1e-300);
        if (std::abs(piece.value) <= 0.01 * opts.rel_tol * scale) {
            if (++quiet >= 3)
                return {acc.value(), err};
        } else {
            quiet = 0;
        }
        upper = lower;
    }
    throw std::runtime_error("integrate_singular_lower: dyadic pieces did not become "
                             "negligible; singularity too strong or integral divergent");
}

} // namespace zetalog
