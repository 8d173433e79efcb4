#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cmroots/classpoly.hpp"

using namespace cmroots;

namespace {

/* |x| < 2^bound */
bool below_pow2(const BigFloat& x, long bound) {
    return x.exponent2() <= bound;
}

bool complex_close_to_int(const BigComplex& z, long value, long bound) {
    BigFloat diff = z.re() - BigFloat(value, z.precision());
    return below_pow2(diff, bound) && below_pow2(z.im(), bound);
}

IntPolynomial golden(std::initializer_list<const char*> coeffs) {
    IntPolynomial H;
    for (const char* c : coeffs) H.coeffs.emplace_back(c);
    return H;
}

/* The 14 frozen class polynomials, ascending coefficients. */
const std::vector<std::pair<std::int64_t, IntPolynomial>> kGolden = {
    {-3, golden({"0", "1"})},
    {-4, golden({"-1728", "1"})},
    {-7, golden({"3375", "1"})},
    {-8, golden({"-8000", "1"})},
    {-11, golden({"32768", "1"})},
    {-12, golden({"-54000", "1"})},
    {-15, golden({"-121287375", "191025", "1"})},
    {-16, golden({"-287496", "1"})},
    {-19, golden({"884736", "1"})},
    {-20, golden({"-681472000", "-1264000", "1"})},
    {-23, golden({"12771880859375", "-5151296875", "3491750", "1"})},
    {-43, golden({"884736000", "1"})},
    {-67, golden({"147197952000", "1"})},
    {-163, golden({"262537412640768000", "1"})},
};

}  // namespace

TEST_CASE("form_to_tau puts the CM point in the upper half-plane") {
    BigComplex t1 = form_to_tau(QuadForm{1, 0, 1}, 128); /* D = -4 */
    CHECK(t1.re().is_zero());
    CHECK(std::abs(t1.im().to_double() - 1.0) < 1e-15);

    BigComplex t2 = form_to_tau(QuadForm{1, 1, 4}, 128); /* D = -15 */
    CHECK(std::abs(t2.re().to_double() + 0.5) < 1e-15);
    CHECK(std::abs(t2.im().to_double() - std::sqrt(15.0) / 2) < 1e-12);

    BigComplex t3 = form_to_tau(QuadForm{2, 1, 2}, 128);
    CHECK(std::abs(t3.re().to_double() + 0.25) < 1e-15);
    CHECK(std::abs(t3.im().to_double() - std::sqrt(15.0) / 4) < 1e-12);
}

TEST_CASE("j at classical points, checked at two precisions") {
    for (mpfr_prec_t prec : {128L, 256L}) {
        /* tau built with headroom so its own error is negligible */
        const mpfr_prec_t tp = prec + 64;

        BigComplex i(BigFloat(0, tp), BigFloat(1, tp));
        CHECK(complex_close_to_int(j_invariant(i, prec), 1728, -prec + 8));

        BigComplex rho(BigFloat(1, tp).div_ui(2),
                       BigFloat::sqrt_ui(3, tp).div_ui(2));
        CHECK(complex_close_to_int(j_invariant(rho, prec), 0, -prec + 8));

        BigComplex isqrt2(BigFloat(0, tp), BigFloat::sqrt_ui(2, tp));
        CHECK(complex_close_to_int(j_invariant(isqrt2, prec), 8000, -prec + 8));
    }

    /* agreement between precisions, up to the 128-bit output quantum */
    BigComplex tau = form_to_tau(QuadForm{3, 1, 5}, 512); /* D = -59 */
    BigComplex lo = j_invariant(tau, 128);
    BigComplex hi = j_invariant(tau, 256);
    long quantum = std::max(lo.exponent2(), 0L) - 128 + 2;
    CHECK(below_pow2(lo.re() - hi.re(), quantum));
    CHECK(below_pow2(lo.im() - hi.im(), quantum));

    CHECK_THROWS_AS(j_invariant(tau, 63), std::domain_error);
    BigComplex low_tau(BigFloat(0, 128), BigFloat(1, 128).div_ui(4));
    CHECK_THROWS_AS(j_invariant(low_tau, 128), std::domain_error);
}

TEST_CASE("precision bound formula") {
    auto bound_by_hand = [](Discriminant d) {
        ClassGroupTable t = enumerate_class_group(d);
        double sum = 0;
        for (const QuadForm& f : t.forms) sum += 1.0 / double(f.a);
        double main = std::numbers::pi * std::sqrt(double(d.abs())) /
                      std::numbers::ln2 * sum;
        long v = long(std::ceil(main)) + 33 + long(t.h());
        return std::max(v, 64L);
    };
    for (std::int64_t n : {4, 15, 23, 163, 420}) {
        Discriminant d(-n);
        CHECK(precision_bound(d, enumerate_class_group(d)) == bound_by_hand(d));
    }
    /* small discriminants clamp to the 64-bit floor */
    CHECK(precision_bound(Discriminant(-4),
                          enumerate_class_group(Discriminant(-4))) == 64);
}

TEST_CASE("golden class polynomials, cross-checked at doubled precision") {
    for (const auto& [D, expect] : kGolden) {
        Discriminant d(D);
        CAPTURE(D);
        IntPolynomial H = hilbert_class_polynomial(d);
        REQUIRE(H == expect);

        ClassGroupTable table = enumerate_class_group(d);
        mpfr_prec_t prec = precision_bound(d, table);
        auto doubled = hilbert_class_polynomial_at(table, 2 * prec);
        REQUIRE(doubled.has_value());
        REQUIRE(*doubled == expect);
    }
}

TEST_CASE("pretty printing") {
    CHECK(to_pretty_string(golden({"0", "1"})) == "x");
    CHECK(to_pretty_string(golden({"-1728", "1"})) == "x - 1728");
    CHECK(to_pretty_string(golden({"3375", "1"})) == "x + 3375");
    CHECK(to_pretty_string(golden({"-121287375", "191025", "1"})) ==
          "x^2 + 191025*x - 121287375");
    CHECK(to_pretty_string(
              golden({"12771880859375", "-5151296875", "3491750", "1"})) ==
          "x^3 + 3491750*x^2 - 5151296875*x + 12771880859375");
}

TEST_CASE("determinism at fixed precision") {
    Discriminant d(-971);
    ClassGroupTable table = enumerate_class_group(d);
    mpfr_prec_t prec = precision_bound(d, table);
    auto a = hilbert_class_polynomial_at(table, prec);
    auto b = hilbert_class_polynomial_at(table, prec);
    REQUIRE(a.has_value());
    REQUIRE(*a == *b);
}

TEST_CASE("rounding residual check rejects inadequate precision") {
    /* needs ~472 bits; at the 64-bit floor every route must refuse */
    ClassGroupTable table = enumerate_class_group(Discriminant(-971));
    CHECK_FALSE(hilbert_class_polynomial_at(table, 64).has_value());
}

TEST_CASE("conjugate pairing and assembly sanity on sampled discriminants") {
    for (std::int64_t n : {15, 23, 56, 84, 120, 163, 195, 260, 419}) {
        Discriminant d(-n);
        ClassGroupTable table = enumerate_class_group(d);
        const mpfr_prec_t prec = precision_bound(d, table);
        CAPTURE(n);

        /* j at (a,b,c) and (a,-b,c) are complex conjugates */
        std::vector<BigComplex> roots;
        for (const QuadForm& f : table.forms)
            roots.push_back(j_invariant(form_to_tau(f, prec + 64), prec));
        for (std::size_t k = 0; k < table.forms.size(); ++k) {
            const QuadForm& f = table.forms[k];
            if (is_ambiguous(f)) {
                /* real root: imaginary part drowned by the error floor */
                CHECK(below_pow2(roots[k].im(),
                                 roots[k].exponent2() - prec / 2));
                continue;
            }
            QuadForm conj_form = inverse(f);
            std::size_t j = 0;
            while (table.forms[j] != conj_form) ++j;
            BigComplex diff = roots[k] - roots[j].conj();
            long scale = std::max(roots[k].exponent2(), 0L);
            CHECK(below_pow2(diff.re(), scale - prec / 2));
            CHECK(below_pow2(diff.im(), scale - prec / 2));
        }

        /* assemble the product and check coefficient imaginary parts are
         * below 2^(-prec/2) relative to coefficient scale */
        std::vector<BigComplex> coeffs{BigComplex::one(prec)};
        for (const BigComplex& r : roots) {
            std::vector<BigComplex> next(coeffs.size() + 1, BigComplex(prec));
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                next[k + 1] = next[k + 1] + coeffs[k];
                next[k] = next[k] - r * coeffs[k];
            }
            coeffs = std::move(next);
        }
        long coeff_scale = 0;
        for (const BigComplex& c : coeffs)
            coeff_scale = std::max(coeff_scale, c.re().exponent2());
        for (const BigComplex& c : coeffs)
            CHECK(below_pow2(c.im(), coeff_scale - prec / 2));

        /* every root nearly annihilates the assembled polynomial:
         * |H(j_f)| below 2^(-prec/4) relative to the Horner magnitude sum */
        for (const BigComplex& r : roots) {
            BigComplex acc(prec);
            BigFloat mag(prec);
            BigFloat rabs = r.re() * r.re() + r.im() * r.im();
            for (std::size_t k = coeffs.size(); k-- > 0;) {
                acc = acc * r + coeffs[k];
                BigFloat cabs =
                    coeffs[k].re() * coeffs[k].re() +
                    coeffs[k].im() * coeffs[k].im();
                mag = mag * rabs + cabs;
            }
            /* compare |acc|^2 against 2^(-prec/2) * mag (squared scales) */
            BigFloat acc2 = acc.re() * acc.re() + acc.im() * acc.im();
            BigFloat budget = mag.mul_2exp(-static_cast<long>(prec) / 2);
            CHECK(acc2.cmp(budget) < 0);
        }
    }
}

TEST_CASE("degree equals the class number and doubled precision is stable, "
          "|D| <= 2000") {
    for (std::int64_t n = 3; n <= 2000; ++n) {
        if (n % 4 != 0 && n % 4 != 3) continue;
        Discriminant d(-n);
        ClassGroupTable table = enumerate_class_group(d);
        mpfr_prec_t prec = precision_bound(d, table);
        auto H = hilbert_class_polynomial_at(table, prec);
        CAPTURE(n);
        REQUIRE(H.has_value());
        REQUIRE(H->degree() == table.h());
        REQUIRE(H->is_monic());
        auto H2 = hilbert_class_polynomial_at(table, 2 * prec);
        REQUIRE(H2.has_value());
        REQUIRE(*H == *H2);
    }
}
