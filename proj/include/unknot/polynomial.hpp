#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace unknot {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in one variable with integer coefficients.
///
/// Exponents are stored as integers in units of 1/denominator, so a
/// polynomial in t^(1/4) keeps denominator 4. Zero coefficients are never
/// stored.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(char variable, int denominator = 1);

  static LaurentPolynomial constant(const BigInt& c, char variable = 't');
  static LaurentPolynomial monomial(const BigInt& c, int exponent, char variable = 't',
                                    int denominator = 1);

  char variable() const noexcept { return variable_; }
  int denominator() const noexcept { return denominator_; }
  const std::map<int, BigInt>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  int min_exponent() const;
  int max_exponent() const;
  BigInt coefficient(int exponent) const;

  void add_term(int exponent, const BigInt& c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  bool operator==(const LaurentPolynomial& o) const;
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  /// Multiplies every exponent by `factor` (the substitution x -> x^factor).
  LaurentPolynomial substitute_power(int factor) const;
  /// Multiplies by x^shift.
  LaurentPolynomial shifted(int shift) const;
  /// Reduces the denominator when every exponent allows it.
  LaurentPolynomial reduced() const;
  /// Exact division; throws std::domain_error when the divisor does not divide.
  LaurentPolynomial divided_by(const LaurentPolynomial& divisor) const;

  /// Formal derivative d/dx. Requires denominator 1.
  LaurentPolynomial derivative() const;
  BigInt evaluate_at_minus_one() const;
  BigInt evaluate_at_one() const;
  std::complex<double> evaluate(std::complex<double> x) const;
  std::int64_t sum_abs_coefficients() const;

  /// `{exponent: coefficient}` JSON-style map, exponents ascending.
  std::string to_json() const;
  std::string to_string() const;

private:
  char variable_ = 't';
  int denominator_ = 1;
  std::map<int, BigInt> terms_;
};

}  // namespace unknot
