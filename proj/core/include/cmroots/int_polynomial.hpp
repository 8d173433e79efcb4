#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cmroots {

/* Polynomial with exact integer coefficients, ascending degree order.
 * Class polynomials produced by this library are monic of degree h. */
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/* "x^2 + 191025*x - 121287375" */
std::string to_pretty_string(const IntPolynomial& f);

}  // namespace cmroots
