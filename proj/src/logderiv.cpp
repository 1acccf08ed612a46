#include "zetalog/logderiv.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace zetalog {

namespace {

enum class Regime { strip, convergent };

Regime classify_point(Complex a) {
    if (a == Complex(1.0, 0.0))
        throw std::domain_error("approx_log_derivative: a = 1 is the pole of zeta");
    if (a.real() <= 0.5)
        throw std::domain_error("approx_log_derivative: Re a <= 1/2 is outside the "
                                "conditional-validity domain");
    if (a.real() < 1.0)
        return Regime::strip;
    if (a.real() > 1.0)
        return Regime::convergent;
    throw std::domain_error("approx_log_derivative: Re a = 1 lies between the strip and "
                            "convergent regimes");
}

} // namespace

void validate_approximation_point(Complex a) { classify_point(a); }

namespace {

// Run fn(0..count-1), possibly on several threads. Each index is handled
// by exactly one worker and writes only its own slot, so results do not
// depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace

Complex approx_log_derivative(const MangoldtTable& table, int order, Complex a,
                              std::uint64_t n_cut) {
    if (order < 1)
        throw std::domain_error("approx_log_derivative: order must be at least 1");
    const Regime regime = classify_point(a);
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    const Complex lambda_sum = lambda_weighted_sum(table, a, order, n_cut);
    if (regime == Regime::convergent)
        return sign * lambda_sum;
    return sign * (lambda_sum - compensating_integral(a, order, static_cast<double>(n_cut)));
}

ApproxReport residual_report(const MangoldtTable& table, int order, Complex a,
                             std::uint64_t n_cut, const BoundParameters& bp,
                             const PrecisionConfig& cfg) {
    bp.validate();
    ApproxReport r;
    r.order = order;
    r.point = a;
    r.cutoff = n_cut;
    r.approximation = approx_log_derivative(table, order, a, n_cut);
    r.reference = log_zeta_derivatives(a, order, cfg)[order - 1];
    r.residual_abs = std::abs(r.approximation - r.reference);
    r.bound = bp.bound(order, a, static_cast<double>(n_cut));
    r.ratio = r.residual_abs / r.bound;
    return r;
}

ScanSeries scan_over_a(const MangoldtTable& table, int order, std::span<const double> a_grid,
                       std::uint64_t n_cut, const BoundParameters& bp,
                       const PrecisionConfig& cfg) {
    bp.validate();
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        if (a_grid[i] <= 0.5)
            throw std::domain_error("scan_over_a: grid point <= 1/2 is outside the "
                                    "conditional-validity domain");
        if (a_grid[i] == 1.0)
            throw std::domain_error("scan_over_a: grid point a = 1 is the pole of zeta");
        if (i > 0 && !(a_grid[i] > a_grid[i - 1]))
            throw std::invalid_argument("scan_over_a: grid must be strictly increasing");
    }
    ScanSeries series;
    series.axis = ScanAxis::grid_in_a;
    series.entries.resize(a_grid.size());
    parallel_for(a_grid.size(), [&](std::size_t i) {
        series.entries[i] = residual_report(table, order, Complex(a_grid[i], 0.0), n_cut, bp, cfg);
    });
    return series;
}

ScanSeries scan_over_n_cut(const MangoldtTable& table, int order, Complex a,
                           std::span<const std::uint64_t> n_grid, const BoundParameters& bp,
                           const PrecisionConfig& cfg) {
    bp.validate();
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        if (n_grid[i] > table.limit())
            throw std::out_of_range("scan_over_n_cut: grid cutoff exceeds table limit");
        if (i > 0 && !(n_grid[i] > n_grid[i - 1]))
            throw std::invalid_argument("scan_over_n_cut: grid must be strictly increasing");
    }
    ScanSeries series;
    series.axis = ScanAxis::grid_in_n;
    series.entries.resize(n_grid.size());
    if (n_grid.empty())
        return series;

    classify_point(a); // fail fast before the reference evaluation
    const Complex reference = log_zeta_derivatives(a, order, cfg)[order - 1];
    parallel_for(n_grid.size(), [&](std::size_t i) {
        ApproxReport r;
        r.order = order;
        r.point = a;
        r.cutoff = n_grid[i];
        r.approximation = approx_log_derivative(table, order, a, n_grid[i]);
        r.reference = reference;
        r.residual_abs = std::abs(r.approximation - r.reference);
        r.bound = bp.bound(order, a, static_cast<double>(n_grid[i]));
        r.ratio = r.residual_abs / r.bound;
        series.entries[i] = r;
    });
    return series;
}

double eta_coefficient(const MangoldtTable& table, int order, std::uint64_t n_cut) {
    if (order < 1)
        throw std::domain_error("eta_coefficient: order must be at least 1");
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    const double lambda_sum = lambda_weighted_sum(table, Complex(1.0, 0.0), order, n_cut).real();
    const double log_term =
        pow_int(std::log(static_cast<double>(n_cut)), order) / static_cast<double>(order);
    return sign * (lambda_sum - log_term);
}

Complex line_one_oscillation(const MangoldtTable& table, double t, std::uint64_t n_cut,
                             const PrecisionConfig& cfg) {
    if (t == 0.0)
        throw std::domain_error("line_one_oscillation: t must be nonzero");
    const Complex a(1.0, t);
    const Complex lambda_sum = lambda_weighted_sum(table, a, 1, n_cut);
    const Complex log_deriv = log_zeta_derivatives(a, 1, cfg)[0];
    const double ln_n = std::log(static_cast<double>(n_cut));
    const Complex n_pow_minus_it = std::exp(Complex(0.0, -t * ln_n));
    return lambda_sum + log_deriv - Complex(0.0, 1.0) * n_pow_minus_it / t;
}

} // namespace zetalog
