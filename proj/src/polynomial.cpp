#include "dirichlet/polynomial.hpp"

#include <algorithm>

namespace dirichlet {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coefficients_(std::move(ascending)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int k) {
  std::vector<BigInt> coeffs(k + 1, BigInt(0));
  coeffs[k] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear_root(const BigInt& a) { return IntPolynomial({-a, BigInt(1)}); }

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[k];
}

BigInt IntPolynomial::operator()(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational IntPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> out;
  for (int k = 1; k <= degree(); ++k) out.push_back(coefficients_[k] * k);
  return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || abs(divisor.leading()) != 1) {
    throw Error(ErrorCode::InvalidArgument, "divisor must have leading coefficient +-1");
  }
  std::vector<BigInt> rem = coefficients_;
  const int dd = divisor.degree();
  if (degree() < dd) return {IntPolynomial(), *this};
  std::vector<BigInt> quot(degree() - dd + 1, BigInt(0));
  for (int k = degree(); k >= dd; --k) {
    BigInt q = rem[k] * divisor.leading();  // leading is +-1
    quot[k - dd] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coefficients_[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coefficients_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coefficients_) out.push_back(c.get_str());
  if (out.empty()) out.push_back("0");
  return out;
}

IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<BigInt> out(std::max(x.coefficients_.size(), y.coefficients_.size()), BigInt(0));
  for (std::size_t k = 0; k < x.coefficients_.size(); ++k) out[k] += x.coefficients_[k];
  for (std::size_t k = 0; k < y.coefficients_.size(); ++k) out[k] += y.coefficients_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& x) {
  std::vector<BigInt> out = x.coefficients_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y) { return x + (-y); }

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(x.coefficients_.size() + y.coefficients_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < y.coefficients_.size(); ++j) {
      out[i + j] += x.coefficients_[i] * y.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial falling_factorial(int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "falling factorial of negative order");
  IntPolynomial out = IntPolynomial::constant(1);
  for (int r = 0; r < m; ++r) out = out * IntPolynomial::linear_root(r);
  return out;
}

IntPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "interpolation needs matching, non-empty point lists");
  }
  // Lagrange form accumulated with rational coefficients.
  const std::size_t count = xs.size();
  std::vector<Rational> total(count, Rational(0));
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == k) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t r = 0; r < basis.size(); ++r) {
        next[r + 1] += basis[r];
        next[r] -= basis[r] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[k] - xs[j]);
    }
    if (denom == 0) throw Error(ErrorCode::InvalidArgument, "interpolation nodes must be distinct");
    Rational scale = Rational(ys[k]) / denom;
    for (std::size_t r = 0; r < basis.size(); ++r) total[r] += basis[r] * scale;
  }
  std::vector<BigInt> coeffs;
  for (auto& c : total) {
    c.canonicalize();
    if (c.get_den() != 1) {
      throw Error(ErrorCode::InvalidArgument, "interpolant has a non-integer coefficient");
    }
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace dirichlet
