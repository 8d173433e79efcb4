#include "cmroots/bigfloat.hpp"

#include <algorithm>

namespace cmroots {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt_ui(std::uint64_t n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_sqrt_ui(r.v_, n, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul_ui(unsigned long k) const {
    BigFloat r(precision());
    mpfr_mul_ui(r.v_, v_, k, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::div_ui(unsigned long k) const {
    BigFloat r(precision());
    mpfr_div_ui(r.v_, v_, k, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul_2exp(long e) const {
    BigFloat r(precision());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

void BigFloat::sin_cos(BigFloat& s, BigFloat& c) const {
    mpfr_set_prec(s.v_, precision());
    mpfr_set_prec(c.v_, precision());
    mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
}

BigFloat BigFloat::rounded_to(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long BigFloat::exponent2() const {
    if (mpfr_zero_p(v_)) return kZeroExponent;
    return static_cast<long>(mpfr_get_exp(v_));
}

mpz_class BigFloat::round_nearest() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

BigFloat BigFloat::distance_to(const mpz_class& z) const {
    BigFloat r(precision());
    mpfr_sub_z(r.v_, v_, z.get_mpz_t(), MPFR_RNDN);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(std::size_t digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0)
        return "<mpfr-error>";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigComplex::BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}

BigComplex::BigComplex(BigFloat re, BigFloat im)
    : re_(std::move(re)), im_(std::move(im)) {}

BigComplex BigComplex::one(mpfr_prec_t prec) {
    return BigComplex(BigFloat(1, prec), BigFloat(prec));
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_,
                      a.re_ * b.im_ + a.im_ * b.re_);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat den = b.re_ * b.re_ + b.im_ * b.im_;
    return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / den,
                      (a.im_ * b.re_ - a.re_ * b.im_) / den);
}

BigComplex BigComplex::mul_ui(unsigned long k) const {
    return BigComplex(re_.mul_ui(k), im_.mul_ui(k));
}

BigComplex BigComplex::conj() const { return BigComplex(re_, -im_); }

BigComplex BigComplex::rounded_to(mpfr_prec_t prec) const {
    return BigComplex(re_.rounded_to(prec), im_.rounded_to(prec));
}

long BigComplex::exponent2() const {
    return std::max(re_.exponent2(), im_.exponent2());
}

std::string BigComplex::str(std::size_t digits) const {
    return re_.str(digits) + " + " + im_.str(digits) + "i";
}

}  // namespace cmroots
