#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>

namespace cmroots {

/*
 * Correctly rounded arbitrary-precision real, an RAII wrapper over mpfr_t.
 * Every operation rounds to nearest at the larger precision of its operands,
 * so per-operation relative error is at most 2^(1-prec).
 */
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(long value, mpfr_prec_t prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat sqrt_ui(std::uint64_t n, mpfr_prec_t prec);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat mul_ui(unsigned long k) const;
    BigFloat div_ui(unsigned long k) const;
    BigFloat mul_2exp(long e) const; /* exact scaling by 2^e */

    friend BigFloat exp(const BigFloat& x);
    friend BigFloat abs(const BigFloat& x);
    /* s = sin(x), c = cos(x), both at the precision of x */
    void sin_cos(BigFloat& s, BigFloat& c) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(double o) const { return mpfr_cmp_d(v_, o); }

    /* Value re-rounded to the given precision. */
    BigFloat rounded_to(mpfr_prec_t prec) const;

    /* Exponent e with |x| in [2^(e-1), 2^e); kZeroExponent for x = 0. */
    static constexpr long kZeroExponent = -(1L << 50);
    long exponent2() const;

    mpz_class round_nearest() const;
    /* |x - z| */
    BigFloat distance_to(const mpz_class& z) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(std::size_t digits = 24) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
};

class BigComplex {
  public:
    explicit BigComplex(mpfr_prec_t prec);
    BigComplex(BigFloat re, BigFloat im);

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }

    static BigComplex one(mpfr_prec_t prec);

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigComplex mul_ui(unsigned long k) const;
    BigComplex conj() const;
    BigComplex rounded_to(mpfr_prec_t prec) const;

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    /* max of the component exponents: log2 of magnitude up to half a bit */
    long exponent2() const;

    std::string str(std::size_t digits = 24) const;

  private:
    BigFloat re_, im_;
};

}  // namespace cmroots
