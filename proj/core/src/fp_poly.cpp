#include "cmroots/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmroots/primes.hpp"

namespace cmroots {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void strip(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool is_zero(const Coeffs& c) { return c.empty(); }

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    return powmod_u64(a, p - 2, p); /* p prime, a != 0 */
}

Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
    if (is_zero(a) || is_zero(b)) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    strip(r);
    return r;
}

/* remainder of a by b, b nonzero */
Coeffs rem(Coeffs a, const Coeffs& b, std::uint64_t p) {
    std::uint64_t lead_inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t q = mulmod_u64(a.back(), lead_inv, p);
        if (q != 0) {
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = submod(a[off + i], mulmod_u64(q, b[i], p), p);
        }
        a.pop_back();
        strip(a);
        if (is_zero(a)) break;
    }
    return a;
}

Coeffs gcd_raw(Coeffs a, Coeffs b, std::uint64_t p) {
    while (!is_zero(b)) {
        Coeffs t = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(t);
    }
    if (!is_zero(a) && a.back() != 1) {
        std::uint64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod_u64(c, inv, p);
    }
    return a;
}

Coeffs derivative_raw(const Coeffs& c, std::uint64_t p) {
    Coeffs r;
    for (std::size_t k = 1; k < c.size(); ++k)
        r.push_back(mulmod_u64(c[k], k % p, p));
    strip(r);
    return r;
}

Coeffs powmod_raw(const Coeffs& base, std::uint64_t e, const Coeffs& m,
                  std::uint64_t p) {
    Coeffs result{1};
    Coeffs b = rem(base, m, p);
    while (e > 0) {
        if (e & 1) result = rem(mul(result, b, p), m, p);
        e >>= 1;
        if (e > 0) b = rem(mul(b, b, p), m, p);
    }
    return result;
}

/* x^p - x mod f, then gcd with f; degree of the result counts the
 * distinct F_p-roots. */
Coeffs distinct_root_factor(const FpPoly& f) {
    Coeffs diff = powmod_raw({0, 1}, f.p(), f.coeffs(), f.p());
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = submod(diff[1], 1, f.p());
    strip(diff);
    diff = rem(std::move(diff), f.coeffs(), f.p());
    return gcd_raw(std::move(diff), f.coeffs(), f.p());
}

}  // namespace

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::domain_error("modulus must be an odd prime");
    for (auto& c : c_)
        if (c >= p_) c %= p_;
    strip(c_);
    if (c_.empty()) throw std::domain_error("zero polynomial rejected");
}

FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

std::uint64_t FpPoly::eval(std::uint64_t t) const {
    std::uint64_t acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = (mulmod_u64(acc, t, p_) + c_[k]) % p_;
    return acc;
}

FpPoly reduce_mod_p(const IntPolynomial& H, std::uint64_t p) {
    if (p <= 3) throw std::domain_error("p must exceed 3");
    if (!is_prime_u64(p)) throw std::domain_error("p must be prime");
    std::vector<std::uint64_t> c;
    c.reserve(H.coeffs.size());
    for (const mpz_class& z : H.coeffs)
        c.push_back(mpz_fdiv_ui(z.get_mpz_t(), p));
    return FpPoly(p, std::move(c));
}

FpPoly poly_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
    if (base.p() != m.p()) throw std::domain_error("modulus mismatch");
    if (m.degree() == 0) throw std::domain_error("modulus must be nonconstant");
    Coeffs result = powmod_raw(base.coeffs(), e, m.coeffs(), m.p());
    return FpPoly(m.p(), std::move(result)); /* throws if the residue is zero */
}

FpPoly poly_gcd(const FpPoly& f, const FpPoly& g) {
    if (f.p() != g.p()) throw std::domain_error("modulus mismatch");
    Coeffs r = gcd_raw(f.coeffs(), g.coeffs(), f.p());
    return FpPoly(f.p(), std::move(r));
}

std::uint64_t count_fp_roots(const FpPoly& f) {
    if (f.degree() == 0) return 0;
    Coeffs g = distinct_root_factor(f);
    return g.size() - 1;
}

std::vector<std::uint64_t> list_fp_roots(const FpPoly& f) {
    if (f.p() > kListRootsCap)
        throw std::domain_error("p exceeds the exhaustive root-listing cap");
    std::vector<std::uint64_t> roots;
    for (std::uint64_t t = 0; t < f.p(); ++t)
        if (f.eval(t) == 0) roots.push_back(t);
    return roots;
}

bool is_squarefree(const FpPoly& f) {
    if (f.degree() == 0) throw std::domain_error("f must be nonconstant");
    Coeffs d = derivative_raw(f.coeffs(), f.p());
    if (is_zero(d)) return false; /* f is a p-th power */
    Coeffs g = gcd_raw(f.coeffs(), std::move(d), f.p());
    return g.size() == 1;
}

}  // namespace cmroots
