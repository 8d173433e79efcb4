#pragma once

#include <cstdint>
#include <vector>

#include "cmroots/int_polynomial.hpp"

namespace cmroots {

/* Largest p accepted by list_fp_roots' exhaustive scan. */
inline constexpr std::uint64_t kListRootsCap = 1'000'000;

/*
 * Nonzero polynomial over F_p for an odd prime p. Coefficients live in
 * [0, p), ascending degree, no leading zeros; products are formed through
 * 128-bit intermediates, so any 64-bit p works. The zero polynomial is
 * rejected at construction.
 */
class FpPoly {
  public:
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static FpPoly x(std::uint64_t p); /* the monomial x */

    std::uint64_t p() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::size_t degree() const { return c_.size() - 1; }
    std::uint64_t leading() const { return c_.back(); }

    std::uint64_t eval(std::uint64_t t) const;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

  private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/* Coefficientwise reduction of H into [0, p); requires a prime p > 3. */
FpPoly reduce_mod_p(const IntPolynomial& H, std::uint64_t p);

/* base^e mod m by binary exponentiation; m must be nonconstant. */
FpPoly poly_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

/* Monic gcd. */
FpPoly poly_gcd(const FpPoly& f, const FpPoly& g);

/* Number of distinct roots in F_p: deg gcd(x^p - x mod f, f). */
std::uint64_t count_fp_roots(const FpPoly& f);

/* Sorted distinct roots by exhaustive evaluation; requires p <= 10^6. */
std::vector<std::uint64_t> list_fp_roots(const FpPoly& f);

/* True iff gcd(f, f') is constant; f must be nonconstant. */
bool is_squarefree(const FpPoly& f);

}  // namespace cmroots
