#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rsl {

// Exact rational. Values that fit in int64 numerator/denominator stay on the
// fast path; anything larger is carried by an mpq_class.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : n_(n), d_(1) {}
  Rational(int n) : n_(n), d_(1) {}
  Rational(long long n, long long d) { set128(n, d); }
  explicit Rational(const mpq_class& q) { set_big(q); }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        mpz_class n(s, 10);
        return Rational(mpq_class(n));
      }
      mpz_class n(s.substr(0, slash), 10), d(s.substr(slash + 1), 10);
      if (d == 0) throw std::invalid_argument("zero denominator");
      mpq_class q(n, d);
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad rational: '" + s + "'");
    }
  }

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), n_);
    mpz_set_si(q.get_den_mpz_t(), d_);
    return q;
  }

  std::string str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  Rational operator-() const {
    if (big_ || n_ == INT64_MIN) return Rational(mpq_class(-to_mpq()));
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == 1 && b.d_ == 1) {
        long long s;
        if (!__builtin_add_overflow(a.n_, b.n_, &s)) return Rational(s);
      }
      __int128 n = (__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_;
      __int128 d = (__int128)a.d_ * b.d_;
      return from128(n, d);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.n_ == 0 || b.n_ == 0) return Rational();
      if (a.d_ == 1 && b.d_ == 1) {
        long long p;
        if (!__builtin_mul_overflow(a.n_, b.n_, &p)) return Rational(p);
      }
      __int128 n = (__int128)a.n_ * b.n_;
      __int128 d = (__int128)a.d_ * b.d_;
      return from128(n, d);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * b.inverse();
  }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    if (n_ == INT64_MIN) return Rational(mpq_class(1 / to_mpq()));
    Rational r;
    r.n_ = n_ < 0 ? -d_ : d_;
    r.d_ = n_ < 0 ? -n_ : n_;
    return r;
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  // acc += a * b without building the temporary product on the small path
  void add_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_) {
      if (d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        long long p, s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &p) && !__builtin_add_overflow(n_, p, &s)) {
          n_ = s;
          return;
        }
      }
    }
    *this += a * b;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return a.to_mpq() == b.to_mpq();
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      __int128 l = (__int128)a.n_ * b.d_, r = (__int128)b.n_ * a.d_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  std::size_t hash() const {
    if (big_) return std::hash<std::string>()(big_->get_str());
    return std::hash<long long>()(n_) * 1000003u ^ std::hash<long long>()(d_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  long long n_ = 0, d_ = 1;
  std::shared_ptr<const mpq_class> big_;

  static unsigned __int128 ugcd(unsigned __int128 a, unsigned __int128 b) {
    while (b) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from128(__int128 n, __int128 d) {
    Rational r;
    r.set128(n, d);
    return r;
  }

  void set128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      n_ = 0;
      d_ = 1;
      big_.reset();
      return;
    }
    unsigned __int128 un = n < 0 ? (unsigned __int128)(-n) : (unsigned __int128)n;
    auto g = ugcd(un, (unsigned __int128)d);
    n /= (__int128)g;
    d /= (__int128)g;
    if (n >= INT64_MIN + 1 && n <= INT64_MAX && d <= INT64_MAX) {
      n_ = (long long)n;
      d_ = (long long)d;
      big_.reset();
      return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    set_big(q);
  }

  static mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    mpz_class hi((unsigned long)(u >> 64)), lo((unsigned long)(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  void set_big(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
        q.get_num().get_si() != INT64_MIN) {
      n_ = q.get_num().get_si();
      d_ = q.get_den().get_si();
      big_.reset();
    } else {
      big_ = std::make_shared<const mpq_class>(q);
      n_ = 0;
      d_ = 1;
    }
  }
};

} // namespace rsl

template <>
struct std::hash<rsl::Rational> {
  std::size_t operator()(const rsl::Rational& r) const { return r.hash(); }
};
