#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cmroots/quadform.hpp"

namespace cmroots {

/* Kronecker symbol (a|n), n != 0; equals the Legendre symbol for odd prime n. */
int kronecker(std::int64_t a, std::int64_t n);

/* p inert in Q(sqrt(D)) <=> (D|p) = -1. Requires an odd prime p. */
bool is_inert(Discriminant d, std::uint64_t p);

/* Condition for an odd prime ell | D: (-p|ell) = 1. */
bool odd_prime_condition(Discriminant d, std::uint64_t p, std::uint64_t ell);

/* Subcases of the 2-adic condition, tried in order:
 *   a:  p = 7 (mod 8)
 *   b:  -p + D/4 = 0, 1 or 4 (mod 8)
 *   c:  -p + D = 1 (mod 8)
 */
enum class TwoAdicSubcase { a, b, c };

const char* to_string(TwoAdicSubcase s);

/* Condition for ell = 2 (requires 4 | D); returns the first satisfied
 * subcase, or nullopt when none holds. */
std::optional<TwoAdicSubcase> two_adic_condition(Discriminant d, std::uint64_t p);

struct EllCondition {
    std::uint64_t ell = 0;
    bool met = false;
    std::optional<TwoAdicSubcase> subcase; /* set for ell = 2 when met */
};

enum class Applicability {
    ok,
    p_not_above_disc, /* p <= |D| */
    split,            /* (D|p) = 1 */
    ramified          /* p | D */
};

const char* to_string(Applicability a);

/*
 * Per-pair prediction: when p is inert and p > |D|, the F_p-root set of the
 * reduced class polynomial is nonempty iff the per-ell condition holds for
 * every prime ell | D, and then has exactly 2^(mu-1) elements. Outside that
 * range the prediction fields stay unset and `why` says what failed.
 */
struct CriterionReport {
    std::int64_t D = 0;
    std::uint64_t p = 0;
    bool inert = false;
    bool applicable = false;
    Applicability why = Applicability::ok;
    std::vector<EllCondition> per_ell;
    std::optional<bool> predicted_nonempty;
    std::optional<std::uint64_t> predicted_count;
};

/* Requires an odd prime p > 3. */
CriterionReport predict(Discriminant d, std::uint64_t p);

/*
 * Solvability of  x^2 - y^2 D/4 = -p  over the ell-adic integers, decided by
 * residue search plus the Hensel lifting criterion -- independent of the
 * congruence shortcuts above, whose agreement with this oracle is checked
 * by the test suite rather than assumed.
 *
 * For odd ell: search (x, y) mod ell for a solution with a nonzero partial
 * derivative (a simple point), which lifts by Hensel's lemma. For ell = 2:
 * search (x, y) mod 8 for a solution with x or y*(D/4) a unit, which lifts
 * by the multivariate version.
 *
 * Requires: ell prime, ell | D, p an odd prime not dividing ell*D, p inert.
 */
bool local_norm_solvable(Discriminant d, std::uint64_t p, std::uint64_t ell);

}  // namespace cmroots
