#pragma once

#include "rsl/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rsl {

// Laurent polynomial in one variable A with rational coefficients.
// Terms are kept sorted by exponent with no zero coefficients.
class Laurent {
public:
  using Term = std::pair<int, Rational>;

  Laurent() = default;
  Laurent(int c) : Laurent(Rational(c)) {}
  Laurent(const Rational& c) {
    if (!c.is_zero()) t_.emplace_back(0, c);
  }
  static Laurent monomial(int e, const Rational& c = Rational(1)) {
    Laurent r;
    if (!c.is_zero()) r.t_.emplace_back(e, c);
    return r;
  }
  static Laurent A(int e = 1) { return monomial(e); }

  static Laurent from_map(const std::map<int, Rational>& m) {
    Laurent r;
    for (auto& [e, c] : m)
      if (!c.is_zero()) r.t_.emplace_back(e, c);
    return r;
  }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second.is_one(); }
  Rational coeff(int e) const {
    for (auto& [k, c] : t_)
      if (k == e) return c;
    return Rational();
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
        r.t_.push_back(b.t_[j++]);
      } else {
        Rational c = a.t_[i].second + b.t_[j].second;
        if (!c.is_zero()) r.t_.emplace_back(a.t_[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    std::map<int, Rational> acc;
    for (auto& [e1, c1] : a.t_)
      for (auto& [e2, c2] : b.t_) acc[e1 + e2].add_mul(c1, c2);
    return from_map(acc);
  }
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
  void add_mul(const Laurent& a, const Laurent& b) { *this += a * b; }

  // Only monomials are invertible in the Laurent ring.
  Laurent inverse() const {
    if (t_.size() != 1) throw std::domain_error("Laurent inverse of a non-monomial");
    return monomial(-t_[0].first, t_[0].second.inverse());
  }
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }

  // Human-readable form, highest exponent first, e.g. "-A^3 + 2*A^-1 + 1/2".
  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      auto [e, c] = *it;
      bool neg = c.sign() < 0;
      Rational ac = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (e == 0) {
        out += ac.str();
        continue;
      }
      if (!ac.is_one()) out += ac.str() + "*";
      out += "A";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 17;
    for (auto& [e, c] : t_) h = h * 31 + std::hash<int>()(e) * 7 + c.hash();
    return h;
  }

  friend std::ostream& operator<<(std::ostream& os, const Laurent& l) { return os << l.str(); }

private:
  std::vector<Term> t_;
};

template <class S>
inline S scalar_one() {
  return S(1);
}
template <class S>
inline S scalar_zero() {
  return S();
}

} // namespace rsl
