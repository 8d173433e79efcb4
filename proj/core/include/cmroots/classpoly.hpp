#pragma once

#include <optional>

#include "cmroots/bigfloat.hpp"
#include "cmroots/int_polynomial.hpp"
#include "cmroots/quadform.hpp"

namespace cmroots {

/* CM point of a form: tau = (-b + sqrt(D)) / (2a) in the upper half-plane. */
BigComplex form_to_tau(const QuadForm& f, mpfr_prec_t prec);

/*
 * Klein j-invariant via j = E4(q)^3 / Delta(q) with q = exp(2 pi i tau),
 * Delta = q prod(1 - q^n)^24 and E4 = 1 + 240 sum n^3 q^n / (1 - q^n).
 * Series tails are cut 16 guard bits below 2^-prec. Reduced forms give
 * Im tau >= sqrt(3)/2, so |q| <= exp(-pi sqrt(3)) and both series converge
 * geometrically. Rejects prec < 64.
 */
BigComplex j_invariant(const BigComplex& tau, mpfr_prec_t prec);

/*
 * Working precision for assembling the class polynomial of d:
 *   ceil( pi sqrt(|D|) / ln 2 * sum over forms of 1/a ) + 33 + h,
 * floored at 64 bits. A height heuristic, not a proven bound; the rounding
 * residual check below is what enforces correctness.
 */
mpfr_prec_t precision_bound(Discriminant d, const ClassGroupTable& table);

/*
 * Expand prod (x - j(tau_f)) over all reduced forms at the given precision
 * and round coefficients to integers. Returns nullopt if any coefficient
 * lands further than 1/4 from an integer.
 */
std::optional<IntPolynomial> hilbert_class_polynomial_at(
    const ClassGroupTable& table, mpfr_prec_t prec);

/*
 * Monic degree-h class polynomial of d with exact integer coefficients.
 * Starts at precision_bound and retries at doubled precision (at most three
 * times) if rounding fails; throws std::runtime_error on persistent failure,
 * which would indicate a bug in the precision bound.
 */
IntPolynomial hilbert_class_polynomial(Discriminant d);

}  // namespace cmroots
