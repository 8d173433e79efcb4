#include "cmroots/classpoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cmroots {

namespace {

constexpr long kTailGuardBits = 16;
/* Internal headroom so the value returned at prec carries no visible
 * evaluation noise (exactly representable j-values come out exact). */
constexpr mpfr_prec_t kWorkPadBits = 64;

std::string coeff_str(const mpz_class& c) { return c.get_str(); }

}  // namespace

std::string to_pretty_string(const IntPolynomial& f) {
    if (f.coeffs.empty()) return "0";
    std::string out;
    for (std::size_t k = f.coeffs.size(); k-- > 0;) {
        const mpz_class& c = f.coeffs[k];
        if (c == 0 && f.coeffs.size() > 1) continue;
        mpz_class mag = ::abs(c);
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = (mag == 1) && k > 0;
        if (!unit) out += coeff_str(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

BigComplex form_to_tau(const QuadForm& f, mpfr_prec_t prec) {
    std::int64_t D = discriminant_of(f);
    if (D >= 0) throw std::domain_error("form must have negative discriminant");
    BigFloat re(-f.b, prec);
    BigFloat im = BigFloat::sqrt_ui(static_cast<std::uint64_t>(-D), prec);
    unsigned long twoa = static_cast<unsigned long>(2 * f.a);
    return BigComplex(re.div_ui(twoa), im.div_ui(twoa));
}

BigComplex j_invariant(const BigComplex& tau, mpfr_prec_t prec) {
    if (prec < 64) throw std::domain_error("precision below the 64-bit floor");
    if (tau.im().cmp(0.5) < 0)
        throw std::domain_error("tau too low in the upper half-plane");

    const mpfr_prec_t wp = prec + kWorkPadBits;

    /* q = exp(2 pi i tau) = e^(-2 pi Im tau) (cos(2 pi Re tau) + i sin(..)) */
    BigFloat two_pi = BigFloat::pi(wp).mul_ui(2);
    BigFloat angle = two_pi * tau.re();
    BigFloat modulus = exp(-(two_pi * tau.im()));
    BigFloat s(wp), c(wp);
    angle.sin_cos(s, c);
    const BigComplex q(modulus * c, modulus * s);

    const BigComplex one = BigComplex::one(wp);
    const long cutoff = -static_cast<long>(wp) - kTailGuardBits;

    /* eta product without its q^(1/24) head: P = prod (1 - q^n).
     * Each factor perturbs the product by a relative |q|^n. */
    BigComplex P = one;
    BigComplex qn = q;
    while (qn.exponent2() > cutoff) {
        P = P * (one - qn);
        qn = qn * q;
    }
    BigComplex p2 = P * P;
    BigComplex p4 = p2 * p2;
    BigComplex p8 = p4 * p4;
    BigComplex p16 = p8 * p8;
    BigComplex delta = q * (p16 * p8); /* Delta = q P^24 */

    /* E4 = 1 + 240 sum n^3 q^n / (1 - q^n); terms decay like n^3 |q|^n. */
    BigComplex e4 = one;
    qn = q;
    for (unsigned long n = 1;; ++n) {
        BigComplex term = qn.mul_ui(240 * n * n * n) / (one - qn);
        if (term.exponent2() <= cutoff) break;
        e4 = e4 + term;
        qn = qn * q;
    }

    return ((e4 * e4 * e4) / delta).rounded_to(prec);
}

mpfr_prec_t precision_bound(Discriminant d, const ClassGroupTable& table) {
    double inv_a_sum = 0.0;
    for (const QuadForm& f : table.forms) inv_a_sum += 1.0 / static_cast<double>(f.a);
    double main_term = std::numbers::pi * std::sqrt(static_cast<double>(d.abs())) /
                       std::numbers::ln2 * inv_a_sum;
    long bits = static_cast<long>(std::ceil(main_term)) + 33 +
                static_cast<long>(table.h());
    return std::max<long>(bits, 64);
}

std::optional<IntPolynomial> hilbert_class_polynomial_at(
    const ClassGroupTable& table, mpfr_prec_t prec) {
    if (table.forms.empty()) throw std::domain_error("empty class group table");

    /* sequential fold of prod (x - j_f), coefficients ascending */
    std::vector<BigComplex> coeffs;
    coeffs.push_back(BigComplex::one(prec));
    for (const QuadForm& f : table.forms) {
        BigComplex root = j_invariant(form_to_tau(f, prec + kWorkPadBits), prec);
        std::vector<BigComplex> next(coeffs.size() + 1, BigComplex(prec));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] = next[k + 1] + coeffs[k];
            next[k] = next[k] - root * coeffs[k];
        }
        coeffs = std::move(next);
    }

    IntPolynomial out;
    out.coeffs.reserve(coeffs.size());
    for (const BigComplex& c : coeffs) {
        mpz_class z = c.re().round_nearest();
        if (c.re().distance_to(z).cmp(0.25) >= 0) return std::nullopt;
        if (abs(c.im()).cmp(0.25) >= 0) return std::nullopt;
        out.coeffs.push_back(std::move(z));
    }
    if (!out.is_monic())
        throw std::runtime_error("class polynomial assembly lost monicity");
    return out;
}

IntPolynomial hilbert_class_polynomial(Discriminant d) {
    ClassGroupTable table = enumerate_class_group(d);
    mpfr_prec_t prec = precision_bound(d, table);
    for (int attempt = 0; attempt < 4; ++attempt) {
        if (auto H = hilbert_class_polynomial_at(table, prec)) return *H;
        prec *= 2;
    }
    throw std::runtime_error(
        "class polynomial rounding failed after precision retries (D = " +
        std::to_string(d.value()) + ")");
}

}  // namespace cmroots
