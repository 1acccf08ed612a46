// Generalized-Li framework: the Mellin kernel k_{n,a}(s), the P and
// P-tilde polynomials with their associated-Laguerre forms, the gamma and
// pole derivative terms, and the two independent evaluations of the Li sum
// (truncated von Mangoldt arithmetic vs. ln-zeta derivatives).
#ifndef ZETALOG_LI_HPP
#define ZETALOG_LI_HPP

#include <cstdint>

#include "zetalog/arithmetic.hpp"
#include "zetalog/special.hpp"

namespace zetalog {

// Index n, base point a, and arithmetic-side truncation N. The base point
// must avoid 1/2 (2a-1 = 0 degenerates every formula) and the poles 0, 1.
struct LiParameters {
    int order = 1;
    Complex a;
    std::uint64_t n_cut = 0;

    void validate() const;
};

// k_{n,a}(s) = 1 - (1 - (2a-1)/(s+a-1))^n; pole at s + a = 1.
Complex mellin_kernel(int order, Complex a, Complex s);

// P_{n,a}(x)       = x^(a-1) sum_{j=1}^{n} C(n,j) (2a-1)^j ln^(j-1)x / (j-1)!
// P~_{n,a}(x)      = x^(-a)  sum_{j=1}^{n} C(n,j) (-1)^(j-1) (2a-1)^j ln^(j-1)x / (j-1)!
// so that P~(x) = P(1/x)/x. Defined for x > 0.
Complex p_polynomial(int order, Complex a, double x);
Complex p_tilde(int order, Complex a, double x);

// Associated Laguerre polynomial L^1_k by the standard three-term
// recurrence; P_{n,a}(x) = x^(a-1) (2a-1) L^1_{n-1}(-(2a-1) ln x) and
// P~_{n,a}(x) = x^(-a) (2a-1) L^1_{n-1}((2a-1) ln x).
Complex laguerre_assoc1(int degree, Complex x);

// Kernel value alongside the quadrature of int_0^1 P_{n,a}(x) x^(s-1) dx,
// which equals it for Re(s+a) > 1.
struct MellinCheck {
    Complex kernel;
    Complex quadrature;
};
MellinCheck mellin_consistency(int order, Complex a, Complex s, const PrecisionConfig& cfg = {});

// (1/(n-1)!) d^n/dz^n [ (z+a-1)^(n-1) ln(z Gamma(z/2)) ] at z = a,
// computed by the Cauchy-derivative oracle on ln z + ln Gamma(z/2).
Complex gamma_term_value(int order, Complex a, const PrecisionConfig& cfg = {});

// Closed form of the same quantity assembled from digamma and Hurwitz
// zeta:  (n/2) psi(a/2)
//        + (1/(2a-1)) [ 1 - (-1+1/a)^n
//                       + sum_{l=2}^{n} C(n,l) (-1)^l 2^(-l) (2a-1)^l zeta(l, a/2) ].
Complex gamma_term_closed_form(int order, Complex a, const PrecisionConfig& cfg = {});

// (1/(n-1)!) d^n/dz^n [ (z+a-1)^(n-1) ln(z-1) ] at z = a, in closed form:
// (1/(2a-1)) (1 - (a/(1-a))^n). Direct differentiation fixes this form
// (n=1 gives 1/(a-1), n=2 gives -1/(1-a)^2).
Complex pole_term_value(int order, Complex a);

// Cauchy-oracle evaluation of the same quantity. The circle must avoid
// z = 1; the branch of ln(z-1) is chosen per disk, which is harmless
// because the degree-(n-1) prefactor annihilates the underivated log.
Complex pole_term_oracle(int order, Complex a, const PrecisionConfig& cfg = {});

// Li sum from the ln-zeta derivative side:
//   2 - (-1+1/a)^n - (-1+1/(1-a))^n
//   + sum_{j=1}^{n} C(n,j) (2a-1)^j (ln zeta)^(j)(a) / (j-1)!
//   + (n/2)(2a-1)(psi(a/2) - ln pi)
//   + sum_{j=2}^{n} C(n,j) (-1)^j 2^(-j) (2a-1)^j zeta(j, a/2).
Complex li_sum_derivative_side(int order, Complex a, const PrecisionConfig& cfg = {});

// Li sum from the arithmetic side: same constant, digamma and Hurwitz
// blocks, with (ln zeta)^(j)(a) replaced by (-1)^j T_j where
// T_j = lambda_weighted_sum(a, j, N) - compensating_integral(a, j, N) in
// the strip 1/2 < Re a < 1, and the bare truncated sum for Re a > 1.
Complex li_sum_arithmetic_side(const MangoldtTable& table, int order, Complex a,
                               std::uint64_t n_cut, const PrecisionConfig& cfg = {});

} // namespace zetalog

#endif
