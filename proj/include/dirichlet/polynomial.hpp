#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dirichlet/common.hpp"

namespace dirichlet {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree with trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial constant(const BigInt& c);
  /// c * t^k
  static IntPolynomial monomial(const BigInt& c, int k);
  /// t - a
  static IntPolynomial linear_root(const BigInt& a);

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  BigInt coefficient(int k) const;
  const BigInt& leading() const { return coefficients_.back(); }

  BigInt operator()(const BigInt& t) const;
  Rational operator()(const Rational& t) const;

  IntPolynomial derivative() const;

  /// Division by a polynomial with leading coefficient +-1; returns
  /// (quotient, remainder).
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const;

  /// Human form in the variable `var`, e.g. "t^2 - 5t + 6".
  std::string to_string(char var = 't') const;
  /// Ascending coefficients as decimal strings.
  std::vector<std::string> coefficient_strings() const;

  friend IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator-(const IntPolynomial& x);
  friend bool operator==(const IntPolynomial& x, const IntPolynomial& y) {
    return x.coefficients_ == y.coefficients_;
  }

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

/// (t)_m = t (t - 1) ... (t - m + 1); (t)_0 = 1.
IntPolynomial falling_factorial(int m);

/// Interpolating polynomial through integer points (x_k, y_k); throws
/// InvalidArgument if the interpolant has a non-integer coefficient.
IntPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

}  // namespace dirichlet
