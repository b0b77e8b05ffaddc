#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "clonelab/errors.hpp"

namespace clonelab {

// Exact rational arithmetic on int64 plus a positive-infinity value.
// Denominator is always positive for finite values; infinity is 1/0.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  static Rational infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  bool is_infinite() const { return den_ == 0; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const {
    if (is_infinite()) throw Error("floor of infinity");
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }

  std::int64_t ceil() const {
    if (is_infinite()) throw Error("ceil of infinity");
    if (num_ >= 0) return (num_ + den_ - 1) / den_;
    return -((-num_) / den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (b.is_infinite()) throw Error("subtracting infinity");
    if (a.is_infinite()) return infinity();
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      Rational other = a.is_infinite() ? b : a;
      if (other.num_ <= 0 && !other.is_infinite())
        throw Error("infinity times non-positive");
      return infinity();
    }
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_infinite()) throw Error("dividing by infinity");
    if (b.num_ == 0) throw Error("division by zero");
    if (a.is_infinite()) {
      if (b.num_ < 0) throw Error("infinity divided by negative");
      return infinity();
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts integers ("3"), fractions ("3/4") and decimals ("0.25").
  static Rational parse(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    if (s == "inf") return infinity();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::int64_t n = std::stoll(s.substr(0, slash));
      std::int64_t d = std::stoll(s.substr(slash + 1));
      if (d == 0) throw Error("zero denominator in '" + s + "'");
      return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      if (frac.empty()) throw Error("malformed decimal '" + s + "'");
      bool neg = !whole.empty() && whole[0] == '-';
      std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) {
        if (frac[i] < '0' || frac[i] > '9')
          throw Error("malformed decimal '" + s + "'");
        den *= 10;
      }
      std::int64_t f = std::stoll(frac);
      std::int64_t n = (neg ? -1 : 1) * ((neg ? -w : w) * den + f);
      return Rational(n, den);
    }
    return Rational(std::stoll(s));
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace clonelab
