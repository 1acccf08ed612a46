// Small numeric building blocks shared across the library: compensated
// (Neumaier) summation, exact binomial coefficients, and integer powers.
#ifndef ZETALOG_NUMERIC_HPP
#define ZETALOG_NUMERIC_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace zetalog {

using Complex = std::complex<double>;

// Neumaier variant of Kahan summation: the running compensation also
// absorbs the case |x| > |sum|, so the accumulated rounding error stays
// O(1) ulp independent of the number of terms.
struct KahanAccumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

struct ComplexKahanAccumulator {
    KahanAccumulator re, im;

    void add(Complex z) {
        re.add(z.real());
        im.add(z.imag());
    }

    Complex value() const { return {re.value(), im.value()}; }
};

// C(n, k) evaluated in exact integer arithmetic (Pascal's rule), then
// converted to double. Alternating binomial sums elsewhere rely on these
// being exact, so the row limit is a hard error, not a silent fallback.
inline double binomial(int n, int k) {
    constexpr int max_n = 40;
    if (n < 0 || k < 0 || k > n)
        return 0.0;
    if (n > max_n)
        throw std::invalid_argument("binomial: n exceeds exact-integer limit 40");
    static const auto table = [] {
        std::array<std::array<std::uint64_t, max_n + 1>, max_n + 1> t{};
        for (int i = 0; i <= max_n; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    return static_cast<double>(table[n][k]);
}

inline double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// x^k for small nonnegative integer k; pow_int(0, 0) == 1.
inline double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= x;
    return r;
}

inline Complex cpow_int(Complex z, int k) {
    Complex r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= z;
    return r;
}

} // namespace zetalog

#endif
