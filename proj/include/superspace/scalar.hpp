#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace superspace {

using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q(i). Every coefficient in the engine is one of these,
// so expression equality is decidable with zero tolerance.
//
// cpp_rational keeps values in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT: implicit integers are convenient
  explicit Scalar(Rational re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  // num/den with den > 0 not required; normalization happens via division.
  static Scalar ratio(long num, long den) {
    return Scalar(Rational(num) / Rational(den));
  }
  static Scalar imag_ratio(long num, long den) {
    return Scalar(Rational(0), Rational(num) / Rational(den));
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ * b.re_ - a.im_ * b.im_,
                  a.re_ * b.im_ + a.im_ * b.re_);
  }

  // Multiplicative inverse; caller guarantees nonzero.
  Scalar inverse() const {
    Rational n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

  // "a/b", "c/d*i" or "a/b+c/d*i"; "0" for zero.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out += rat_str(re_);
    if (!im_.is_zero()) {
      if (!re_.is_zero() && im_ > 0) out += "+";
      if (im_ == -1) {
        out += "-";
      } else if (im_ != 1) {
        out += rat_str(im_);
        out += "*";
      }
      out += "i";
    }
    return out;
  }

 private:
  static std::string rat_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
      s += "/";
      s += denominator(q).str();
    }
    return s;
  }

  Rational re_{0};
  Rational im_{0};
};

}  // namespace superspace
