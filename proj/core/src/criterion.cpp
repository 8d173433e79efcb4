#include "cmroots/criterion.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "cmroots/primes.hpp"

namespace cmroots {

namespace {

std::int64_t emod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

void require_odd_prime(std::uint64_t p, const char* what) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::domain_error(std::string(what) + " must be an odd prime");
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) throw std::domain_error("kronecker symbol needs n != 0");
    int k = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int v = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++v;
        }
        /* (a|2) = 1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8) */
        if (v % 2 == 1) {
            std::int64_t am8 = emod(a, 8);
            if (am8 == 3 || am8 == 5) k = -k;
        }
    }
    a = emod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

bool is_inert(Discriminant d, std::uint64_t p) {
    require_odd_prime(p, "p");
    return kronecker(d.value(), static_cast<std::int64_t>(p)) == -1;
}

bool odd_prime_condition(Discriminant d, std::uint64_t p, std::uint64_t ell) {
    if (ell % 2 == 0) throw std::domain_error("ell must be odd");
    if (d.abs() % ell != 0) throw std::domain_error("ell must divide D");
    return kronecker(-static_cast<std::int64_t>(p),
                     static_cast<std::int64_t>(ell)) == 1;
}

const char* to_string(TwoAdicSubcase s) {
    switch (s) {
        case TwoAdicSubcase::a: return "a";
        case TwoAdicSubcase::b: return "b";
        default: return "c";
    }
}

const char* to_string(Applicability a) {
    switch (a) {
        case Applicability::ok: return "ok";
        case Applicability::p_not_above_disc: return "p <= |D|";
        case Applicability::split: return "p splits";
        default: return "p ramifies";
    }
}

std::optional<TwoAdicSubcase> two_adic_condition(Discriminant d, std::uint64_t p) {
    if (d.is_odd()) throw std::domain_error("2-adic condition needs 2 | D");
    const std::int64_t D = d.value(); /* D = 0 (mod 4) here */
    const std::int64_t ps = static_cast<std::int64_t>(p);
    if (p % 8 == 7) return TwoAdicSubcase::a;
    std::int64_t rb = emod(-ps + D / 4, 8);
    if (rb == 0 || rb == 1 || rb == 4) return TwoAdicSubcase::b;
    if (emod(-ps + D, 8) == 1) return TwoAdicSubcase::c;
    return std::nullopt;
}

CriterionReport predict(Discriminant d, std::uint64_t p) {
    require_odd_prime(p, "p");
    if (p == 3) throw std::domain_error("p must exceed 3");

    CriterionReport rep;
    rep.D = d.value();
    rep.p = p;

    int sym = kronecker(d.value(), static_cast<std::int64_t>(p));
    rep.inert = (sym == -1);
    if (p <= d.abs()) {
        rep.why = Applicability::p_not_above_disc;
        return rep;
    }
    if (!rep.inert) {
        /* p > |D| rules out p | D, but classify anyway */
        rep.why = sym == 0 ? Applicability::ramified : Applicability::split;
        return rep;
    }

    rep.applicable = true;
    rep.why = Applicability::ok;
    bool all_met = true;
    for (std::uint64_t ell : distinct_prime_factors(d.abs())) {
        EllCondition cond{ell, false, std::nullopt};
        if (ell == 2) {
            cond.subcase = two_adic_condition(d, p);
            cond.met = cond.subcase.has_value();
        } else {
            cond.met = odd_prime_condition(d, p, ell);
        }
        all_met = all_met && cond.met;
        rep.per_ell.push_back(cond);
    }
    rep.predicted_nonempty = all_met;
    rep.predicted_count = all_met ? two_torsion_order(d) : 0;
    return rep;
}

bool local_norm_solvable(Discriminant d, std::uint64_t p, std::uint64_t ell) {
    if (!is_prime_u64(ell)) throw std::domain_error("ell must be prime");
    if (d.abs() % ell != 0) throw std::domain_error("ell must divide D");
    require_odd_prime(p, "p");
    if (p == ell || d.abs() % p == 0)
        throw std::domain_error("p must not divide ell*D");
    if (!is_inert(d, p)) throw std::domain_error("p must be inert");

    if (ell != 2) {
        const std::int64_t m = static_cast<std::int64_t>(ell);
        /* D/4 is an ell-adic integer: 4 is a unit mod odd ell */
        std::int64_t inv4 = static_cast<std::int64_t>(
            powmod_u64(4 % ell, ell - 2, ell));
        std::int64_t d4 = emod(emod(d.value(), m) * inv4, m);
        std::int64_t target = emod(-static_cast<std::int64_t>(p), m);
        for (std::int64_t x = 0; x < m; ++x) {
            for (std::int64_t y = 0; y < m; ++y) {
                if (emod(x * x - y * y % m * d4, m) != target) continue;
                /* simple point: some partial derivative is a unit */
                if (emod(2 * x, m) != 0 || emod(2 * y * d4, m) != 0)
                    return true;
            }
        }
        return false;
    }

    /* ell = 2 forces 4 | D; enumerate residues mod 8 and demand a unit in
     * x or y*(D/4) so the multivariate lift applies. */
    const std::int64_t d4 = d.value() / 4;
    const std::int64_t d4m8 = emod(d4, 8);
    const std::int64_t target = emod(-static_cast<std::int64_t>(p), 8);
    for (std::int64_t x = 0; x < 8; ++x) {
        for (std::int64_t y = 0; y < 8; ++y) {
            if (emod(x * x - y * y * d4m8, 8) != target) continue;
            if (x % 2 == 1 || (y * d4m8) % 2 == 1) return true;
        }
    }
    return false;
}

}  // namespace cmroots
