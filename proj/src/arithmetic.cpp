#include "zetalog/arithmetic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zetalog {

MangoldtTable build_mangoldt(std::uint64_t n_max, std::uint64_t memory_ceiling) {
    if (n_max == 0)
        throw std::length_error("build_mangoldt: n_max must be at least 1");
    if (n_max > memory_ceiling)
        throw std::length_error("build_mangoldt: n_max " + std::to_string(n_max) +
                                " exceeds memory ceiling " + std::to_string(memory_ceiling));

    std::vector<double> values(n_max + 1, 0.0);
    std::vector<bool> composite(n_max + 1, false);
    for (std::uint64_t p = 2; p <= n_max; ++p) {
        if (composite[p])
            continue;
        if (p <= n_max / p)
            for (std::uint64_t q = p * p; q <= n_max; q += p)
                composite[q] = true;
        const double ln_p = std::log(static_cast<double>(p));
        std::uint64_t pk = p;
        while (true) {
            values[pk] = ln_p;
            if (pk > n_max / p)
                break;
            pk *= p;
        }
    }
    return MangoldtTable(std::move(values));
}

Complex lambda_weighted_sum(const MangoldtTable& table, Complex a, int j, std::uint64_t n_cut) {
    if (j < 1)
        throw std::domain_error("lambda_weighted_sum: j must be at least 1");
    if (n_cut > table.limit())
        throw std::out_of_range("lambda_weighted_sum: n_cut " + std::to_string(n_cut) +
                                " exceeds table limit " + std::to_string(table.limit()));

    const std::vector<double>& lam = table.values();
    if (a.imag() == 0.0) {
        // Real-axis fast path; also keeps the result exactly real.
        const double ar = a.real();
        KahanAccumulator acc;
        for (std::uint64_t m = 2; m <= n_cut; ++m) {
            if (lam[m] == 0.0)
                continue;
            const double lm = std::log(static_cast<double>(m));
            acc.add(lam[m] * pow_int(lm, j - 1) * std::exp(-ar * lm));
        }
        return {acc.value(), 0.0};
    }
    ComplexKahanAccumulator acc;
    for (std::uint64_t m = 2; m <= n_cut; ++m) {
        if (lam[m] == 0.0)
            continue;
        const double lm = std::log(static_cast<double>(m));
        acc.add(lam[m] * pow_int(lm, j - 1) * std::exp(-a * lm));
    }
    return acc.value();
}

Complex compensating_integral(Complex a, int j, double big_n) {
    if (j < 1)
        throw std::domain_error("compensating_integral: j must be at least 1");
    if (a == Complex(1.0, 0.0))
        throw std::domain_error("compensating_integral: a = 1 is a pole of the closed form");
    if (a.real() >= 1.0)
        throw std::domain_error("compensating_integral: requires Re a < 1 "
                                "(integral diverges at 0 otherwise)");
    if (!(big_n >= 1.0))
        throw std::out_of_range("compensating_integral: big_n must be at least 1");

    const double ln_n = std::log(big_n);
    const Complex one_minus_a = 1.0 - a;
    const Complex inv = 1.0 / one_minus_a;

    Complex sum = 0.0;
    Complex inv_pow = inv;  // (1-a)^(-l)
    double coeff = 1.0;     // (j-1)! / (j-l)! = (j-1)(j-2)...(j-l+1)
    double sign = 1.0;      // (-1)^(l-1)
    for (int l = 1; l <= j; ++l) {
        sum += sign * coeff * pow_int(ln_n, j - l) * inv_pow;
        inv_pow *= inv;
        coeff *= static_cast<double>(j - l);
        sign = -sign;
    }
    return std::exp(one_minus_a * ln_n) * sum;
}

void BoundParameters::validate() const {
    if (!(delta >= 0.0 && delta < 0.5))
        throw std::domain_error("BoundParameters: delta must lie in [0, 1/2)");
    if (!(delta0 > 0.0) || !(delta + delta0 < 0.5))
        throw std::domain_error("BoundParameters: requires delta0 > 0 and delta + delta0 < 1/2");
    if (!(constant_c > 0.0))
        throw std::domain_error("BoundParameters: constant_c must be positive");
}

double BoundParameters::bound(int order, Complex a, double n_cut) const {
    return constant_c * std::pow(n_cut, 0.5 + delta - a.real()) *
           pow_int(std::log(n_cut), order - 1);
}

} // namespace zetalog
