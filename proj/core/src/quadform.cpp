#include "cmroots/quadform.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "cmroots/primes.hpp"

namespace cmroots {

namespace {

using i128 = __int128;

/* Coefficients are validated to |.| < 2^62 so that b^2 - 4ac and the
 * intermediates of reduction and composition stay inside a signed
 * 128-bit word. */
constexpr std::int64_t kCoeffLimit = std::int64_t{1} << 62;

i128 iabs(i128 v) { return v < 0 ? -v : v; }

/* floor division, divisor > 0 */
i128 floor_div(i128 num, i128 den) {
    i128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

i128 gcd2(i128 x, i128 y) {
    x = iabs(x);
    y = iabs(y);
    while (y != 0) {
        i128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

i128 gcd3(i128 a, i128 b, i128 c) { return gcd2(gcd2(a, b), c); }

struct WideForm {
    i128 a, b, c;
};

/* Translate b into (-a, a], adjusting c to keep the discriminant. */
void normalize(WideForm& f) {
    i128 twoa = 2 * f.a;
    i128 k = floor_div(f.a - f.b, twoa);
    if (k != 0) {
        f.c += (f.b + f.a * k) * k;
        f.b += twoa * k;
    }
}

/* Gauss reduction; terminates because a strictly decreases at each flip. */
void reduce_wide(WideForm& f) {
    normalize(f);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize(f);
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
}

QuadForm narrow(const WideForm& f) {
    if (f.a >= kCoeffLimit || iabs(f.b) >= kCoeffLimit || f.c >= kCoeffLimit)
        throw std::overflow_error("quadratic form coefficients out of range");
    return QuadForm{static_cast<std::int64_t>(f.a),
                    static_cast<std::int64_t>(f.b),
                    static_cast<std::int64_t>(f.c)};
}

void check_coeff_range(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (std::llabs(a) >= kCoeffLimit || std::llabs(b) >= kCoeffLimit ||
        std::llabs(c) >= kCoeffLimit)
        throw std::domain_error("form coefficients exceed supported range");
}

void check_valid_primitive(const QuadForm& f) {
    check_coeff_range(f.a, f.b, f.c);
    if (f.a <= 0) throw std::domain_error("form must have a > 0");
    if (i128(f.b) * f.b - 4 * i128(f.a) * f.c >= 0)
        throw std::domain_error("form must have negative discriminant");
    if (gcd3(f.a, f.b, f.c) != 1)
        throw std::domain_error("form is not primitive");
}

struct Xgcd {
    i128 g, x, y; /* g = x*a + y*b, g >= 0 */
};

Xgcd xgcd(i128 a, i128 b) {
    i128 old_r = a, r = b;
    i128 old_x = 1, x = 0;
    i128 old_y = 0, y = 1;
    while (r != 0) {
        i128 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_x = std::exchange(x, old_x - q * x);
        old_y = std::exchange(y, old_y - q * y);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

}  // namespace

Discriminant::Discriminant(std::int64_t d) : d_(d) {
    if (d >= 0) throw std::domain_error("discriminant must be negative");
    std::int64_t r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw std::domain_error("discriminant must be 0 or 1 mod 4");
}

std::ostream& operator<<(std::ostream& os, const QuadForm& f) {
    return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
}

std::int64_t discriminant_of(const QuadForm& f) {
    check_coeff_range(f.a, f.b, f.c);
    i128 d = i128(f.b) * f.b - 4 * i128(f.a) * f.c;
    if (iabs(d) >= kCoeffLimit) throw std::overflow_error("discriminant out of range");
    return static_cast<std::int64_t>(d);
}

QuadForm make_form(std::int64_t a, std::int64_t b, std::int64_t c) {
    QuadForm f{a, b, c};
    check_valid_primitive(f);
    return f;
}

bool is_reduced(const QuadForm& f) {
    std::int64_t ab = std::llabs(f.b);
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

bool is_ambiguous(const QuadForm& f) {
    return f.b == 0 || f.a == f.b || f.a == f.c;
}

QuadForm principal_form(Discriminant d) {
    std::int64_t D = d.value();
    if (d.is_odd()) return QuadForm{1, 1, (1 - D) / 4};
    return QuadForm{1, 0, -D / 4};
}

QuadForm reduce(const QuadForm& f) {
    check_valid_primitive(f);
    WideForm w{f.a, f.b, f.c};
    reduce_wide(w);
    return narrow(w);
}

/*
 * Classical Dirichlet composition. With s = (b1+b2)/2,
 *   g = gcd(a1, a2) = u0 a1 + v0 a2,    d = gcd(g, s) = v1 g + w s,
 * the composite class is represented by
 *   A = (a1/d)(a2/d),
 *   B = b2 + 2 (a2/d) ((s - b2) v0 v1 - w c2)   (mod 2A),
 * with C determined by the discriminant. B is brought into (-A, A] before
 * C is formed so that B^2 stays in 128 bits.
 */
QuadForm compose(const QuadForm& f0, const QuadForm& g0) {
    if (discriminant_of(f0) != discriminant_of(g0))
        throw std::domain_error("discriminant mismatch in composition");
    QuadForm f = reduce(f0);
    QuadForm g = reduce(g0);

    i128 a1 = f.a, b1 = f.b, c1 = f.c;
    i128 a2 = g.a, b2 = g.b, c2 = g.c;

    i128 s = (b1 + b2) / 2;
    Xgcd e1 = xgcd(a1, a2);
    Xgcd e2 = xgcd(e1.g, s);
    i128 d = e2.g, v = e1.y * e2.x, w = e2.y;

    i128 a2d = a2 / d;
    i128 A = a1 / d * a2d;
    i128 B = b2 + 2 * a2d * ((s - b2) * v - w * c2);
    i128 D = b1 * b1 - 4 * a1 * c1;

    B += 2 * A * floor_div(A - B, 2 * A); /* B in (-A, A] */
    WideForm r{A, B, (B * B - D) / (4 * A)};
    reduce_wide(r);
    return narrow(r);
}

QuadForm inverse(const QuadForm& f) {
    return reduce(QuadForm{f.a, -f.b, f.c});
}

unsigned gauss_mu(Discriminant d) {
    std::uint64_t n_abs = d.abs();
    unsigned r = 0;
    for (std::uint64_t q : distinct_prime_factors(n_abs))
        if (q != 2) ++r;
    if (d.is_odd()) return r;
    std::uint64_t n = n_abs / 4;
    switch (n % 4) {
        case 3: return r;
        case 1:
        case 2: return r + 1;
        default: return n % 8 == 4 ? r + 1 : r + 2;
    }
}

std::uint64_t two_torsion_order(Discriminant d) {
    return std::uint64_t{1} << (gauss_mu(d) - 1);
}

ClassGroupTable enumerate_class_group(Discriminant d) {
    const std::int64_t D = d.value();
    ClassGroupTable table{d, {}, {}, gauss_mu(d)};

    for (std::int64_t a = 1; i128(a) * a * 3 <= -i128(D); ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            if (((b ^ D) & 1) != 0) continue; /* need b = D (mod 2) */
            i128 num = i128(b) * b - D;
            if (num % (4 * i128(a)) != 0) continue;
            i128 c = num / (4 * i128(a));
            if (c < a) continue;
            if (b < 0 && (-b == a || c == a)) continue; /* boundary convention */
            if (gcd3(a, b, c) != 1) continue;
            table.forms.push_back(QuadForm{a, b, static_cast<std::int64_t>(c)});
        }
    }
    std::sort(table.forms.begin(), table.forms.end());

    const QuadForm one = principal_form(d);
    for (const QuadForm& f : table.forms)
        if (compose(f, f) == one) table.two_torsion.push_back(f);
    return table;
}

}  // namespace cmroots
