#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cmroots {

/*
 * Discriminant of an imaginary quadratic order: a negative integer congruent
 * to 0 or 1 mod 4. Non-fundamental discriminants are first-class; nothing in
 * the library checks fundamentality.
 */
class Discriminant {
  public:
    explicit Discriminant(std::int64_t d);

    std::int64_t value() const { return d_; }
    std::uint64_t abs() const { return static_cast<std::uint64_t>(-d_); }
    bool is_odd() const { return (d_ & 1) != 0; }

    friend bool operator==(const Discriminant&, const Discriminant&) = default;

  private:
    std::int64_t d_;
};

/*
 * Integral binary quadratic form a x^2 + b x y + c y^2. The library works
 * with primitive forms (gcd(a,b,c) = 1) of negative discriminant, so a > 0
 * and c > 0 throughout. Comparison is lexicographic on (a, b, c).
 */
struct QuadForm {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadForm& f);

/* Validates a > 0, b^2 - 4ac < 0 and primitivity; throws std::domain_error. */
QuadForm make_form(std::int64_t a, std::int64_t b, std::int64_t c);

std::int64_t discriminant_of(const QuadForm& f);

/* |b| <= a <= c, with b >= 0 whenever |b| = a or a = c. */
bool is_reduced(const QuadForm& f);

/* b = 0, a = b or a = c; ambiguous classes are exactly the 2-torsion. */
bool is_ambiguous(const QuadForm& f);

/* (1, 0, -D/4) for even D, (1, 1, (1-D)/4) for odd D. */
QuadForm principal_form(Discriminant d);

/* The unique reduced representative of the class of f (Gauss reduction).
 * Idempotent on reduced forms; rejects non-primitive input. */
QuadForm reduce(const QuadForm& f);

/* Gauss/Dirichlet composition of classes; inputs may be any primitive forms
 * of the same discriminant, the result is reduced. */
QuadForm compose(const QuadForm& f, const QuadForm& g);

/* Class inverse: the reduced form of (a, -b, c). */
QuadForm inverse(const QuadForm& f);

struct ClassGroupTable {
    Discriminant disc;
    std::vector<QuadForm> forms;        /* all reduced forms, principal first */
    std::vector<QuadForm> two_torsion;  /* forms whose square is principal */
    unsigned mu = 0;

    std::size_t h() const { return forms.size(); }
};

/*
 * Exhaustive enumeration over 0 < a <= sqrt(|D|/3), |b| <= a. Forms are
 * sorted lexicographically, which puts the principal form first. 2-torsion
 * is found by explicit squaring through compose(), not the ambiguous-form
 * shortcut.
 */
ClassGroupTable enumerate_class_group(Discriminant d);

/*
 * Genus-theory invariant: with r the number of distinct odd primes dividing
 * D, mu = r for D odd; for D = -4n, mu = r, r+1, r+1, r+2 according as
 * n = 3 (mod 4), n = 1,2 (mod 4), n = 4 (mod 8), n = 0 (mod 8).
 */
unsigned gauss_mu(Discriminant d);

/* |Pic(O)[2]| = 2^(mu - 1). */
std::uint64_t two_torsion_order(Discriminant d);

}  // namespace cmroots
