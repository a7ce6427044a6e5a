#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quivgr {

/// Integer polynomial in q. Coefficient k of a Poincaré polynomial is b_{2k}.
/// Stored without trailing zeros; the zero polynomial has no coefficients.
class PoincarePoly {
 public:
  PoincarePoly() = default;
  PoincarePoly(std::initializer_list<std::int64_t> coefficients) : coeffs_(coefficients) { trim(); }
  explicit PoincarePoly(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static PoincarePoly one() { return PoincarePoly{1}; }
  static PoincarePoly monomial(int degree, std::int64_t c = 1) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return PoincarePoly(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  std::int64_t coefficient(int k) const { return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0; }

  bool nonnegative() const {
    for (auto c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  /// Coefficientwise <=.
  bool leq(const PoincarePoly& other) const {
    const int top = std::max(degree(), other.degree());
    for (int k = 0; k <= top; ++k)
      if (coefficient(k) > other.coefficient(k)) return false;
    return true;
  }

  mpz_class evaluate(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + mpz_class(static_cast<long>(*it));
    return r;
  }
  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto c : coeffs_) s += c;
    return s;
  }

  /// Multiply by q^k (k >= 0).
  PoincarePoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> v(k, 0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return PoincarePoly(std::move(v));
  }

  PoincarePoly& operator+=(const PoincarePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  PoincarePoly& operator-=(const PoincarePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend PoincarePoly operator+(PoincarePoly a, const PoincarePoly& b) { return a += b; }
  friend PoincarePoly operator-(PoincarePoly a, const PoincarePoly& b) { return a -= b; }
  friend PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PoincarePoly(std::move(v));
  }
  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

  /// "1 + 2q + 2q^2 + q^3"; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
      const std::int64_t c = coeffs_[k];
      if (c == 0) continue;
      const std::int64_t mag = c < 0 ? -c : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (k == 0 || mag != 1) s += std::to_string(mag);
      if (k >= 1) s += "q";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

}  // namespace quivgr
