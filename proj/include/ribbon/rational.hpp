#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "ribbon/errors.hpp"

namespace ribbon {

// Exact rational in lowest terms with positive denominator.  Values that fit
// in 64-bit numerator/denominator stay inline; anything larger lives in a GMP
// mpq.  A value is never stored big when it fits small, so the representation
// is canonical.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : n_(v), d_(1) {}  // NOLINT: implicit by design
  Rational(int v) : n_(v), d_(1) {}        // NOLINT
  Rational(long long num, long long den) { *this = make(num, den); }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  static Rational parse(std::string_view s) {
    std::string str(s);
    if (str.empty()) throw precondition_error("empty rational literal");
    mpq_class v;
    if (v.set_str(str, 10) != 0 || v.get_den() == 0)
      throw precondition_error("bad rational literal: " + str);
    v.canonicalize();
    return from_mpq(v);
  }

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
  }
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class v;
    mpz_set_si(v.get_num_mpz_t(), n_);
    mpz_set_si(v.get_den_mpz_t(), d_);
    return v;
  }

  std::string str() const {
    if (big_) return big_->get_str(10);
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  Rational operator-() const {
    if (!big_ && n_ != INT64_MIN) {
      Rational r;
      r.n_ = -n_;
      r.d_ = d_;
      return r;
    }
    return from_mpq(-to_mpq());
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == 1 && b.d_ == 1) {
        long long s;
        if (!__builtin_add_overflow(a.n_, b.n_, &s)) return Rational(s);
      }
      return make128(static_cast<__int128>(a.n_) * b.d_ +
                         static_cast<__int128>(b.n_) * a.d_,
                     static_cast<__int128>(a.d_) * b.d_);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == 1 && b.d_ == 1) {
        long long s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &s)) return Rational(s);
      }
      return make128(static_cast<__int128>(a.n_) * b.n_,
                     static_cast<__int128>(a.d_) * b.d_);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw precondition_error("division by zero");
    return a * b.inverse();
  }
  Rational inverse() const {
    if (is_zero()) throw precondition_error("inverse of zero");
    if (!big_) return make(d_, n_);
    mpq_class v = 1 / *big_;
    return from_mpq(v);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (!a.big_ || !b.big_) return false;  // canonical: big never fits small
    return *a.big_ == *b.big_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return static_cast<__int128>(a.n_) * b.d_ <
             static_cast<__int128>(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static Rational make(long long num, long long den) {
    return make128(num, den);
  }

  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make128(__int128 num, __int128 den) {
    if (den == 0) throw precondition_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return Rational();
    unsigned __int128 an = num < 0 ? -static_cast<unsigned __int128>(num)
                                   : static_cast<unsigned __int128>(num);
    unsigned __int128 g = gcd128(an, static_cast<unsigned __int128>(den));
    if (g > 1) {
      num /= static_cast<__int128>(g);
      den /= static_cast<__int128>(g);
    }
    if (num >= INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
      Rational r;
      r.n_ = static_cast<long long>(num);
      r.d_ = static_cast<long long>(den);
      return r;
    }
    mpq_class v;
    set_mpz128(v.get_num_mpz_t(), num);
    set_mpz128(v.get_den_mpz_t(), den);
    Rational r;
    r.big_ = std::make_unique<mpq_class>(std::move(v));
    return r;
  }

  static void set_mpz128(mpz_ptr z, __int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    auto hi = static_cast<unsigned long>(u >> 64);
    auto lo = static_cast<unsigned long>(u);
    mpz_set_ui(z, hi);
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, lo);
    if (neg) mpz_neg(z, z);
  }

  static Rational from_mpq(const mpq_class& v) {
    if (mpz_fits_slong_p(v.get_num_mpz_t()) &&
        mpz_fits_slong_p(v.get_den_mpz_t())) {
      Rational r;
      r.n_ = mpz_get_si(v.get_num_mpz_t());
      r.d_ = mpz_get_si(v.get_den_mpz_t());
      return r;
    }
    Rational r;
    r.big_ = std::make_unique<mpq_class>(v);
    return r;
  }

  long long n_ = 0;
  long long d_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace ribbon
