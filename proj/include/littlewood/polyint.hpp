#pragma once

// Exact integer-polynomial arithmetic on dense coefficient vectors:
// evaluation, derivative, gcd over the rationals, exact divisibility,
// cyclotomic polynomials and Euler's totient.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace littlewood {

// Dense polynomial with arbitrary-precision integer coefficients.
// coeff(j) is the coefficient of z^j. The representation is canonical:
// no stored coefficient above degree() is nonzero, and the zero
// polynomial (degree() == -1) is distinct from constants.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& c);
    // c * z^k
    static IntPoly monomial(const mpz_class& c, std::size_t k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Coefficient of z^j; zero beyond the degree.
    const mpz_class& coeff(std::size_t j) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    // Number of zero coefficients below the first nonzero one
    // (the multiplicity of the root at 0); 0 for the zero polynomial.
    std::size_t trailing_zeros() const;

    bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;

    // Human-readable form, e.g. "1 - 2*z + z^3".
    std::string to_string() const;

  private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// Horner evaluation, exact.
mpz_class evaluate(const IntPoly& p, const mpz_class& x);

IntPoly derivative(const IntPoly& p);

// Coefficient reversal z^deg * p(1/z). Trailing zeros of p drop the degree.
IntPoly reciprocal(const IntPoly& p);

// Primitive gcd (content 1, positive leading coefficient) of p and q as
// polynomials over the rationals. Fast path: gcd modulo a word-size prime
// not dividing either leading coefficient; a constant modular gcd
// certifies a constant rational gcd. Nonconstant modular gcds fall back
// to an exact primitive pseudo-remainder sequence.
// Throws std::invalid_argument when both inputs are zero.
IntPoly gcd_rational(const IntPoly& p, const IntPoly& q);

// True iff division of b by a over the rationals leaves zero remainder.
// Throws std::invalid_argument when a is zero.
bool divides(const IntPoly& a, const IntPoly& b);

// Quotient of exact division by a monic divisor; remainder must be zero.
IntPoly divide_exact(const IntPoly& p, const IntPoly& monic_divisor);

// k-th cyclotomic polynomial via the recurrence
// Phi_k = (z^k - 1) / prod_{d | k, d < k} Phi_d. Throws for k == 0.
IntPoly cyclotomic(unsigned long k);

// Euler's totient by trial-division factorization. Throws for k == 0.
unsigned long totient(unsigned long k);

}  // namespace littlewood
