#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in x and y with exact integer coefficients. Zero coefficients
/// are never stored, so equality is coefficient-wise.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (x-degree, y-degree)

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const BigInt& c);
  static BivariatePolynomial x();
  static BivariatePolynomial y();

  void add_term(int x_degree, int y_degree, const BigInt& coefficient);
  BigInt coefficient(int x_degree, int y_degree) const;
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// e.g. "x^2 + 2*x*y + y^2 + x + y"; terms by total degree, then x-degree,
  /// both descending.
  std::string to_string() const;

 private:
  std::map<Exponents, BigInt> terms_;
};

/// (x+y)(x+y+1)...(x+y+n-2); the empty product (n = 1) is 1.
BivariatePolynomial rising_factorial(int n);

}  // namespace permstat
