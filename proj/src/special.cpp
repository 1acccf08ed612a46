#include "zetalog/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zetalog {

namespace {

// B_2, B_4, ..., B_30.
constexpr std::array<double, 15> bernoulli_2k = {
    1.0 / 6.0,         -1.0 / 30.0,          1.0 / 42.0,
    -1.0 / 30.0,       5.0 / 66.0,           -691.0 / 2730.0,
    7.0 / 6.0,         -3617.0 / 510.0,      43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0,     -236364091.0 / 2730.0,
    8553103.0 / 6.0,   -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};

constexpr int max_derivative_order = 8;

// Truncated Taylor expansion in the offset e around the evaluation point:
// coeff[k] holds f^(k)(s)/k!. Products are plain convolutions, so every
// Euler-Maclaurin term is differentiated termwise by construction.
using Jet = std::vector<Complex>;

Jet jet_mul(const Jet& x, const Jet& y) {
    Jet out(x.size(), Complex(0.0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; i + j < out.size() && j < y.size(); ++j)
            out[i + j] += x[i] * y[j];
    return out;
}

// Multiply in place by the linear factor (c + e).
void jet_mul_linear(Jet& x, Complex c) {
    for (std::size_t k = x.size(); k-- > 1;)
        x[k] = x[k] * c + x[k - 1];
    x[0] *= c;
}

Jet jet_reciprocal(const Jet& x) {
    Jet out(x.size());
    out[0] = 1.0 / x[0];
    for (std::size_t k = 1; k < x.size(); ++k) {
        Complex s = 0.0;
        for (std::size_t i = 1; i <= k; ++i)
            s += x[i] * out[k - i];
        out[k] = -s * out[0];
    }
    return out;
}

// Jet of b^(w-e) = exp((w-e) ln b) for real b > 0: coeff k is
// b^w (-ln b)^k / k!. Every Euler-Maclaurin exponent is linear in s with
// slope -1, hence the fixed -e.
Jet jet_real_pow_falling(double base, Complex w, std::size_t n_coeffs) {
    const double lb = std::log(base);
    Jet out(n_coeffs);
    out[0] = std::exp(w * lb);
    for (std::size_t k = 1; k < n_coeffs; ++k)
        out[k] = out[k - 1] * (-lb / static_cast<double>(k));
    return out;
}

int effective_main_length(const PrecisionConfig& cfg, double im) {
    return std::max(cfg.em_cutoff, static_cast<int>(std::ceil(2.0 * std::abs(im))) + 20);
}

} // namespace

void PrecisionConfig::validate() const {
    if (em_cutoff < 10)
        throw std::domain_error("PrecisionConfig: em_cutoff must be at least 10");
    if (bernoulli_order < 1 || bernoulli_order > 15)
        throw std::domain_error("PrecisionConfig: bernoulli_order must lie in 1..15");
    if (cauchy_points < 4)
        throw std::domain_error("PrecisionConfig: cauchy_points must be at least 4");
    if (!(cauchy_radius > 0.0))
        throw std::domain_error("PrecisionConfig: cauchy_radius must be positive");
    if (!(quad_rel_tol > 0.0))
        throw std::domain_error("PrecisionConfig: quad_rel_tol must be positive");
}

std::vector<Complex> zeta_with_derivatives(Complex s, int order, const PrecisionConfig& cfg) {
    cfg.validate();
    if (order < 0)
        throw std::domain_error("zeta_with_derivatives: order must be nonnegative");
    if (order > max_derivative_order)
        throw std::invalid_argument("zeta_with_derivatives: orders above 8 are unsupported "
                                    "(accuracy loss in double precision)");
    if (s == Complex(1.0, 0.0))
        throw std::domain_error("zeta_with_derivatives: s = 1 is the pole of zeta");

    const std::size_t nc = static_cast<std::size_t>(order) + 1;
    const int main_len = effective_main_length(cfg, s.imag());
    const double big_m = static_cast<double>(main_len);

    // Main sum over m < M, compensated per coefficient.
    std::vector<ComplexKahanAccumulator> acc(nc);
    for (int m = 1; m < main_len; ++m) {
        const Jet t = jet_real_pow_falling(static_cast<double>(m), -s, nc);
        for (std::size_t k = 0; k < nc; ++k)
            acc[k].add(t[k]);
    }
    Jet total(nc);
    for (std::size_t k = 0; k < nc; ++k)
        total[k] = acc[k].value();

    // Half term M^(-s)/2.
    const Jet m_pow = jet_real_pow_falling(big_m, -s, nc);
    for (std::size_t k = 0; k < nc; ++k)
        total[k] += 0.5 * m_pow[k];

    // Pole term M^(1-s)/(s-1).
    {
        Jet denom(nc, Complex(0.0));
        denom[0] = s - 1.0;
        if (nc > 1)
            denom[1] = 1.0;
        const Jet pole = jet_mul(jet_real_pow_falling(big_m, 1.0 - s, nc), jet_reciprocal(denom));
        for (std::size_t k = 0; k < nc; ++k)
            total[k] += pole[k];
    }

    // Bernoulli corrections: B_2k/(2k)! * s(s+1)...(s+2k-2) * M^(-s-2k+1).
    {
        Jet poly(nc, Complex(0.0));
        poly[0] = 1.0;
        double fact = 1.0; // (2k)!
        for (int k = 1; k <= cfg.bernoulli_order; ++k) {
            if (k == 1) {
                jet_mul_linear(poly, s);
            } else {
                jet_mul_linear(poly, s + static_cast<double>(2 * k - 3));
                jet_mul_linear(poly, s + static_cast<double>(2 * k - 2));
            }
            fact *= static_cast<double>(2 * k - 1) * static_cast<double>(2 * k);
            const double c = bernoulli_2k[k - 1] / fact;
            const Jet tail = jet_mul(poly, jet_real_pow_falling(big_m, -s - static_cast<double>(2 * k - 1), nc));
            for (std::size_t i = 0; i < nc; ++i)
                total[i] += c * tail[i];
        }
    }

    // Convert Taylor coefficients to derivatives.
    std::vector<Complex> out(nc);
    double kfact = 1.0;
    for (std::size_t k = 0; k < nc; ++k) {
        if (k > 0)
            kfact *= static_cast<double>(k);
        out[k] = total[k] * kfact;
    }
    return out;
}

std::vector<Complex> log_derivatives_from(std::span<const Complex> f_derivatives) {
    if (f_derivatives.size() < 2)
        throw std::invalid_argument("log_derivatives_from: need at least f and f'");
    const Complex f0 = f_derivatives[0];
    if (f0 == Complex(0.0))
        throw std::domain_error("log_derivatives_from: f(s) = 0");
    const std::size_t n = f_derivatives.size() - 1;
    std::vector<Complex> g(n); // g[k-1] = (ln f)^(k)
    for (std::size_t k = 1; k <= n; ++k) {
        Complex s = f_derivatives[k];
        for (std::size_t j = 1; j + 1 <= k; ++j)
            s -= binomial(static_cast<int>(k) - 1, static_cast<int>(j)) * g[k - j - 1] *
                 f_derivatives[j];
        g[k - 1] = s / f0;
    }
    return g;
}

std::vector<Complex> log_zeta_derivatives(Complex s, int order, const PrecisionConfig& cfg) {
    if (order < 1)
        throw std::domain_error("log_zeta_derivatives: order must be at least 1");
    const std::vector<Complex> f = zeta_with_derivatives(s, order, cfg);
    if (std::abs(f[0]) < 1e-12)
        throw std::domain_error("log_zeta_derivatives: |zeta(s)| below 1e-12, refusing division");
    return log_derivatives_from(f);
}

Complex hurwitz_zeta(int j, Complex q, const PrecisionConfig& cfg) {
    cfg.validate();
    if (j < 2)
        throw std::domain_error("hurwitz_zeta: integer order j must be at least 2");
    if (!(q.real() > 0.0))
        throw std::domain_error("hurwitz_zeta: requires Re q > 0");

    const int main_len = effective_main_length(cfg, q.imag());
    ComplexKahanAccumulator acc;
    for (int m = 0; m < main_len; ++m)
        acc.add(cpow_int(1.0 / (static_cast<double>(m) + q), j));

    const Complex mq = static_cast<double>(main_len) + q;
    const Complex w = 1.0 / mq;
    const Complex p = cpow_int(w, j); // (M+q)^(-j)
    acc.add(mq * p / static_cast<double>(j - 1));
    acc.add(0.5 * p);

    double rising = static_cast<double>(j); // j(j+1)...(j+2k-2)
    double fact = 2.0;                      // (2k)!
    Complex pw = p * w;                     // (M+q)^(-j-2k+1)
    for (int k = 1; k <= cfg.bernoulli_order; ++k) {
        if (k > 1) {
            rising *= static_cast<double>(j + 2 * k - 3) * static_cast<double>(j + 2 * k - 2);
            fact *= static_cast<double>(2 * k - 1) * static_cast<double>(2 * k);
        }
        acc.add((bernoulli_2k[k - 1] / fact) * rising * pw);
        pw *= w * w;
    }
    return acc.value();
}

Complex digamma(Complex z, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(z.real() > 0.0))
        throw std::domain_error("digamma: requires Re z > 0");

    // psi(z) = psi(z+m) - sum_{i<m} 1/(z+i), lifting to Re >= 12.
    ComplexKahanAccumulator shift;
    Complex w = z;
    while (w.real() < 12.0) {
        shift.add(-1.0 / w);
        w += 1.0;
    }
    Complex result = std::log(w) - 0.5 / w;
    const Complex v = 1.0 / (w * w);
    Complex pw = v;
    const int terms = std::min(cfg.bernoulli_order, 15);
    for (int k = 1; k <= terms; ++k) {
        result -= bernoulli_2k[k - 1] / static_cast<double>(2 * k) * pw;
        pw *= v;
    }
    return result + shift.value();
}

Complex log_gamma(Complex z, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(z.real() > 0.0))
        throw std::domain_error("log_gamma: requires Re z > 0");

    // ln Gamma(z) = ln Gamma(z+m) - sum_{i<m} ln(z+i). Every z+i stays in
    // the right half-plane, so principal logs keep the branch continuous.
    ComplexKahanAccumulator shift;
    Complex w = z;
    while (w.real() < 12.0) {
        shift.add(-std::log(w));
        w += 1.0;
    }
    constexpr double half_ln_two_pi = 0.91893853320467274178032973640562;
    Complex result = (w - 0.5) * std::log(w) - w + half_ln_two_pi;
    const Complex v = 1.0 / (w * w);
    Complex pw = 1.0 / w;
    const int terms = std::min(cfg.bernoulli_order, 15);
    for (int k = 1; k <= terms; ++k) {
        result += bernoulli_2k[k - 1] /
                  (static_cast<double>(2 * k) * static_cast<double>(2 * k - 1)) * pw;
        pw *= v;
    }
    return result + shift.value();
}

namespace {

Complex cauchy_trapezoid(const AnalyticFn& f, Complex center, int order, double radius,
                         int points) {
    ComplexKahanAccumulator acc;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(points);
    for (int k = 0; k < points; ++k) {
        const double theta = step * static_cast<double>(k);
        const Complex node = center + std::polar(radius, theta);
        acc.add(f(node) * std::polar(1.0, -static_cast<double>(order) * theta));
    }
    return factorial(order) * acc.value() /
           (static_cast<double>(points) * pow_int(radius, order));
}

} // namespace

Complex cauchy_derivative(const AnalyticFn& f, Complex center, int order,
                          const PrecisionConfig& cfg) {
    cfg.validate();
    if (order < 1)
        throw std::domain_error("cauchy_derivative: order must be at least 1");
    const Complex coarse = cauchy_trapezoid(f, center, order, cfg.cauchy_radius, cfg.cauchy_points);
    const Complex fine = cauchy_trapezoid(f, center, order, cfg.cauchy_radius, 2 * cfg.cauchy_points);
    const double drift = std::abs(fine - coarse);
    if (drift > 1e-9 * std::max(1.0, std::abs(fine)))
        throw std::runtime_error("cauchy_derivative: point-doubling changed the result by " +
                                 std::to_string(drift) +
                                 "; integrand likely not analytic on the disk");
    return fine;
}

} // namespace zetalog
