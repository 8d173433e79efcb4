#pragma once

/*
 * Test-only oracles: independent brute-force routes to the answers the
 * library computes by cleverer means. Deliberately naive; nothing here may
 * call the implementation path it is used to check.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace cmroots::oracle {

struct Form {
    std::int64_t a, b, c;
    friend bool operator==(const Form&, const Form&) = default;
    friend auto operator<=>(const Form&, const Form&) = default;
};

/*
 * Reduced representative of f found by enumerating SL2(Z) matrices with
 * entries bounded by `bound` and keeping the transforms that satisfy the
 * reduced-form inequalities. Returns nullopt if none was found within the
 * bound, or if two distinct reduced transforms appeared (which would
 * falsify reduced-representative uniqueness).
 */
std::optional<Form> sl2_reduced_equivalent(const Form& f, std::int64_t bound);

/* Values n = f(x, y) with x, y in [-range, range], kept when 0 < n <= cap. */
std::set<std::int64_t> represented_values(const Form& f, std::int64_t range,
                                          std::int64_t cap);

/* Legendre symbol of a mod odd prime p by scanning all squares. */
int legendre_by_squares(std::int64_t a, std::int64_t p);

/* Roots of the polynomial (ascending coefficients) in F_p by evaluating
 * every residue. */
std::vector<std::uint64_t> roots_by_scan(const std::vector<std::uint64_t>& poly,
                                         std::uint64_t p);

/* base^e mod m by e-fold repeated multiplication (no binary splitting). */
std::vector<std::uint64_t> powmod_by_iteration(
    const std::vector<std::uint64_t>& base, std::uint64_t e,
    const std::vector<std::uint64_t>& m, std::uint64_t p);

}  // namespace cmroots::oracle
