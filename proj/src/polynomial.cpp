#include "permstat/polynomial.hpp"

#include <algorithm>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c) {
  BivariatePolynomial p;
  p.add_term(0, 0, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::x() {
  BivariatePolynomial p;
  p.add_term(1, 0, 1);
  return p;
}

BivariatePolynomial BivariatePolynomial::y() {
  BivariatePolynomial p;
  p.add_term(0, 1, 1);
  return p;
}

void BivariatePolynomial::add_term(int x_degree, int y_degree, const BigInt& coefficient) {
  if (x_degree < 0 || y_degree < 0) throw InputError("negative exponent in polynomial term");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace({x_degree, y_degree}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BivariatePolynomial::coefficient(int x_degree, int y_degree) const {
  auto it = terms_.find({x_degree, y_degree});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second;
    const int dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });

  std::string out;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (magnitude != 1 || (e.first == 0 && e.second == 0)) factors.push_back(magnitude.str());
    if (e.first == 1) factors.emplace_back("x");
    if (e.first > 1) factors.push_back("x^" + std::to_string(e.first));
    if (e.second == 1) factors.emplace_back("y");
    if (e.second > 1) factors.push_back("y^" + std::to_string(e.second));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

BivariatePolynomial rising_factorial(int n) {
  if (n < 1) throw InputError("rising factorial index must be >= 1");
  auto product = BivariatePolynomial::constant(1);
  for (int j = 0; j <= n - 2; ++j) {
    product = product * (BivariatePolynomial::x() + BivariatePolynomial::y() + BivariatePolynomial::constant(j));
  }
  return product;
}

}  // namespace permstat
