// Von Mangoldt table, weighted prime-power sums, and the closed-form
// compensating integral int_0^N x^(-a) ln^(j-1)x dx.
#ifndef ZETALOG_ARITHMETIC_HPP
#define ZETALOG_ARITHMETIC_HPP

#include <cstdint>
#include <vector>

#include "zetalog/numeric.hpp"

namespace zetalog {

// Precomputed Lambda(m) for m = 1..limit. Entry m holds ln p when
// m = p^k and 0 otherwise; the stored value is the same double for every
// power of the same prime. Immutable after construction, safe to share
// across threads.
class MangoldtTable {
  public:
    static constexpr std::uint64_t default_memory_ceiling = 100'000'000;

    std::uint64_t limit() const { return values_.size() - 1; }

    // Lambda(m); valid for 1 <= m <= limit().
    double operator[](std::uint64_t m) const { return values_[m]; }

    const std::vector<double>& values() const { return values_; }

  private:
    explicit MangoldtTable(std::vector<double> values) : values_(std::move(values)) {}
    friend MangoldtTable build_mangoldt(std::uint64_t, std::uint64_t);

    std::vector<double> values_; // index 0 unused
};

// Sieve primes up to n_max and mark every prime power p^k with ln p.
// Throws std::length_error when n_max is 0 or exceeds the memory ceiling.
MangoldtTable build_mangoldt(std::uint64_t n_max,
                             std::uint64_t memory_ceiling = MangoldtTable::default_memory_ceiling);

// sum_{m<=n_cut} Lambda(m) ln^(j-1)m / m^a, ascending m, compensated
// summation. For j = 1 the factor ln^0 m is 1, including at m = 1.
Complex lambda_weighted_sum(const MangoldtTable& table, Complex a, int j, std::uint64_t n_cut);

// Closed form of int_0^N x^(-a) ln^(j-1)x dx for Re a < 1:
//
//   N^(1-a) sum_{l=1}^{j} (-1)^(l-1) (j-1)! ln^(j-l)N / ((1-a)^l (j-l)!)
//
// The alternating factor is (-1)^(l-1); the variant with (-1)^(l+j) flips
// the overall sign for even j and disagrees with direct quadrature.
Complex compensating_integral(Complex a, int j, double big_n);

// Zero-free-strip width Delta, margin delta0, and the multiplier C of the
// tolerance model  bound(n, a, N) = C * N^(1/2 + Delta - Re a) * ln^(n-1)N.
struct BoundParameters {
    double delta = 0.0;
    double delta0 = 0.01;
    double constant_c = 1.0;

    void validate() const;
    double bound(int order, Complex a, double n_cut) const;
};

} // namespace zetalog

#endif
