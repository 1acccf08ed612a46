#include "zetalog/li.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zetalog/quadrature.hpp"

namespace zetalog {

namespace {

void check_base_point(Complex a, const char* where) {
    if (a == Complex(0.0, 0.0) || a == Complex(1.0, 0.0))
        throw std::domain_error(std::string(where) + ": a in {0, 1} hits a pole");
    if (a == Complex(0.5, 0.0))
        throw std::domain_error(std::string(where) + ": a = 1/2 degenerates every formula "
                                                     "(2a-1 = 0)");
}

// Shared constant + digamma + Hurwitz block of both Li-sum sides:
//   2 - (-1+1/a)^n - (-1+1/(1-a))^n + (n/2)(2a-1)(psi(a/2) - ln pi)
//   + sum_{j=2}^{n} C(n,j) (-1)^j 2^(-j) (2a-1)^j zeta(j, a/2).
Complex li_common_terms(int order, Complex a, const PrecisionConfig& cfg) {
    const Complex two_a_minus_1 = 2.0 * a - 1.0;
    Complex v = 2.0 - cpow_int(-1.0 + 1.0 / a, order) - cpow_int(-1.0 + 1.0 / (1.0 - a), order);
    v += 0.5 * static_cast<double>(order) * two_a_minus_1 *
         (digamma(0.5 * a, cfg) - std::log(std::numbers::pi));
    double half_pow = 1.0; // 2^(-j)
    Complex amp = 1.0;     // (2a-1)^j
    double sign = 1.0;     // (-1)^j
    for (int j = 1; j <= order; ++j) {
        half_pow *= 0.5;
        amp *= two_a_minus_1;
        sign = -sign;
        if (j >= 2)
            v += binomial(order, j) * sign * half_pow * amp * hurwitz_zeta(j, 0.5 * a, cfg);
    }
    return v;
}

} // namespace

void LiParameters::validate() const {
    if (order < 1)
        throw std::domain_error("LiParameters: order must be at least 1");
    check_base_point(a, "LiParameters");
    if (!(a.real() > 0.5))
        throw std::domain_error("LiParameters: requires Re a > 1/2");
}

Complex mellin_kernel(int order, Complex a, Complex s) {
    if (order < 1)
        throw std::domain_error("mellin_kernel: order must be at least 1");
    if (s + a == Complex(1.0, 0.0))
        throw std::domain_error("mellin_kernel: s + a = 1 is the pole of the kernel");
    const Complex inner = 1.0 - (2.0 * a - 1.0) / (s + a - 1.0);
    return 1.0 - cpow_int(inner, order);
}

namespace {

// sum_{j=1}^{n} C(n,j) (2a-1)^j L^(j-1) / (j-1)!; P and P-tilde differ only
// in the sign of the log argument and the outer power of x.
Complex p_inner_sum(int order, Complex a, double log_arg) {
    const Complex two_a_minus_1 = 2.0 * a - 1.0;
    Complex amp = 1.0;
    double inv_fact = 1.0;
    Complex log_pow = 1.0;
    Complex sum = 0.0;
    for (int j = 1; j <= order; ++j) {
        amp *= two_a_minus_1;
        if (j >= 2) {
            inv_fact /= static_cast<double>(j - 1);
            log_pow *= log_arg;
        }
        sum += binomial(order, j) * amp * log_pow * inv_fact;
    }
    return sum;
}

} // namespace

Complex p_polynomial(int order, Complex a, double x) {
    if (order < 1)
        throw std::domain_error("p_polynomial: order must be at least 1");
    if (!(x > 0.0))
        throw std::domain_error("p_polynomial: requires x > 0");
    const double lx = std::log(x);
    return std::exp((a - 1.0) * lx) * p_inner_sum(order, a, lx);
}

Complex p_tilde(int order, Complex a, double x) {
    if (order < 1)
        throw std::domain_error("p_tilde: order must be at least 1");
    if (!(x > 0.0))
        throw std::domain_error("p_tilde: requires x > 0");
    const double lx = std::log(x);
    return std::exp(-a * lx) * p_inner_sum(order, a, -lx);
}

Complex laguerre_assoc1(int degree, Complex x) {
    if (degree < 0)
        throw std::domain_error("laguerre_assoc1: degree must be nonnegative");
    Complex prev = 1.0;     // L^1_0
    if (degree == 0)
        return prev;
    Complex curr = 2.0 - x; // L^1_1
    for (int m = 1; m < degree; ++m) {
        const Complex next =
            ((static_cast<double>(2 * m + 2) - x) * curr - static_cast<double>(m + 1) * prev) /
            static_cast<double>(m + 1);
        prev = curr;
        curr = next;
    }
    return curr;
}

MellinCheck mellin_consistency(int order, Complex a, Complex s, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!((s + a).real() > 1.0))
        throw std::domain_error("mellin_consistency: requires Re(s + a) > 1, the integral "
                                "diverges otherwise");
    MellinCheck check;
    check.kernel = mellin_kernel(order, a, s);
    QuadratureOptions opts;
    opts.rel_tol = cfg.quad_rel_tol;
    check.quadrature =
        integrate_singular_lower(
            [order, a, s](double x) {
                return p_polynomial(order, a, x) * std::exp((s - 1.0) * std::log(x));
            },
            0.0, 1.0, opts)
            .value;
    return check;
}

Complex gamma_term_value(int order, Complex a, const PrecisionConfig& cfg) {
    cfg.validate();
    if (order < 1)
        throw std::domain_error("gamma_term_value: order must be at least 1");
    if (!(a.real() > cfg.cauchy_radius))
        throw std::domain_error("gamma_term_value: differentiation disk must stay inside "
                                "the right half-plane (Re a > cauchy_radius)");
    const auto integrand = [order, a, &cfg](Complex z) {
        return cpow_int(z + a - 1.0, order - 1) * (std::log(z) + log_gamma(0.5 * z, cfg));
    };
    return cauchy_derivative(integrand, a, order, cfg) / factorial(order - 1);
}

Complex gamma_term_closed_form(int order, Complex a, const PrecisionConfig& cfg) {
    if (order < 1)
        throw std::domain_error("gamma_term_closed_form: order must be at least 1");
    check_base_point(a, "gamma_term_closed_form");
    const Complex two_a_minus_1 = 2.0 * a - 1.0;
    Complex bracket = 1.0 - cpow_int(-1.0 + 1.0 / a, order);
    double half_pow = 1.0;
    Complex amp = 1.0;
    double sign = 1.0;
    for (int l = 1; l <= order; ++l) {
        half_pow *= 0.5;
        amp *= two_a_minus_1;
        sign = -sign;
        if (l >= 2)
            bracket += binomial(order, l) * sign * half_pow * amp * hurwitz_zeta(l, 0.5 * a, cfg);
    }
    return 0.5 * static_cast<double>(order) * digamma(0.5 * a, cfg) + bracket / two_a_minus_1;
}

Complex pole_term_value(int order, Complex a) {
    if (order < 1)
        throw std::domain_error("pole_term_value: order must be at least 1");
    check_base_point(a, "pole_term_value");
    const Complex ratio = a / (1.0 - a);
    return (1.0 - cpow_int(ratio, order)) / (2.0 * a - 1.0);
}

Complex pole_term_oracle(int order, Complex a, const PrecisionConfig& cfg) {
    cfg.validate();
    if (order < 1)
        throw std::domain_error("pole_term_oracle: order must be at least 1");
    // Keep the circle at most halfway to the logarithmic singularity at
    // z = 1; trapezoid accuracy degrades as (radius/distance)^points.
    PrecisionConfig local = cfg;
    local.cauchy_radius = std::min(cfg.cauchy_radius, 0.5 * std::abs(a - 1.0));
    if (!(local.cauchy_radius > 0.0))
        throw std::domain_error("pole_term_oracle: a = 1 leaves no room for the "
                                "differentiation disk");
    const bool right_of_pole = a.real() >= 1.0;
    const auto integrand = [order, a, right_of_pole](Complex z) {
        const Complex log_term = right_of_pole ? std::log(z - 1.0) : std::log(1.0 - z);
        return cpow_int(z + a - 1.0, order - 1) * log_term;
    };
    return cauchy_derivative(integrand, a, order, local) / factorial(order - 1);
}

Complex li_sum_derivative_side(int order, Complex a, const PrecisionConfig& cfg) {
    if (order < 1)
        throw std::domain_error("li_sum_derivative_side: order must be at least 1");
    check_base_point(a, "li_sum_derivative_side");
    if (!(a.real() > 0.0))
        throw std::domain_error("li_sum_derivative_side: requires Re a > 0 for the digamma "
                                "and Hurwitz terms");
    const std::vector<Complex> log_derivs = log_zeta_derivatives(a, order, cfg);
    const Complex two_a_minus_1 = 2.0 * a - 1.0;
    Complex v = li_common_terms(order, a, cfg);
    Complex amp = 1.0;
    double inv_fact = 1.0;
    for (int j = 1; j <= order; ++j) {
        amp *= two_a_minus_1;
        if (j >= 2)
            inv_fact /= static_cast<double>(j - 1);
        v += binomial(order, j) * amp * inv_fact * log_derivs[j - 1];
    }
    return v;
}

Complex li_sum_arithmetic_side(const MangoldtTable& table, int order, Complex a,
                               std::uint64_t n_cut, const PrecisionConfig& cfg) {
    if (order < 1)
        throw std::domain_error("li_sum_arithmetic_side: order must be at least 1");
    check_base_point(a, "li_sum_arithmetic_side");
    const bool strip = a.real() > 0.5 && a.real() < 1.0;
    const bool convergent = a.real() > 1.0;
    if (!strip && !convergent)
        throw std::domain_error("li_sum_arithmetic_side: requires 1/2 < Re a < 1 or Re a > 1");

    const Complex two_a_minus_1 = 2.0 * a - 1.0;
    Complex v = li_common_terms(order, a, cfg);
    Complex amp = 1.0;
    double inv_fact = 1.0;
    double sign = 1.0;
    for (int j = 1; j <= order; ++j) {
        amp *= two_a_minus_1;
        sign = -sign;
        if (j >= 2)
            inv_fact /= static_cast<double>(j - 1);
        Complex truncated = lambda_weighted_sum(table, a, j, n_cut);
        if (strip)
            truncated -= compensating_integral(a, j, static_cast<double>(n_cut));
        v += binomial(order, j) * amp * sign * inv_fact * truncated;
    }
    return v;
}

} // namespace zetalog
