#pragma once

#include <array>
#include <string>

#include "forge/rational.hpp"

namespace forge {

/// a + b*sqrt(3) with rational a, b.
class Q3 {
 public:
  Q3() = default;
  Q3(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  Q3(long long a) : a_(a) {}  // NOLINT: integer literals convert implicitly

  static Q3 sqrt3() { return {0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  Q3 conj() const { return {a_, -b_}; }  // sqrt3 -> -sqrt3
  Rational norm() const { return a_ * a_ - 3 * b_ * b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend Q3 operator+(const Q3& x, const Q3& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend Q3 operator-(const Q3& x, const Q3& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend Q3 operator-(const Q3& x) { return {-x.a_, -x.b_}; }
  friend Q3 operator*(const Q3& x, const Q3& y) {
    return {x.a_ * y.a_ + 3 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend Q3 operator/(const Q3& x, const Q3& y);
  Q3& operator+=(const Q3& y) { return *this = *this + y; }
  Q3& operator-=(const Q3& y) { return *this = *this - y; }
  Q3& operator*=(const Q3& y) { return *this = *this * y; }
  friend bool operator==(const Q3& x, const Q3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const Q3& x, const Q3& y) { return (x - y).sign() < 0; }

 private:
  Rational a_ = 0, b_ = 0;
};

/// x + y*i over Q3, i.e. a + b*sqrt3 + c*i + d*i*sqrt3.
class QField {
 public:
  QField() = default;
  QField(Q3 re, Q3 im = Q3()) : re_(std::move(re)), im_(std::move(im)) {}
  QField(long long a) : re_(a) {}  // NOLINT

  static QField i() { return {Q3(), Q3(1)}; }
  /// sqrt(3) - 1.
  static QField r() { return {Q3(-1, 1)}; }

  const Q3& re() const { return re_; }
  const Q3& im() const { return im_; }
  /// The coordinates (a, b, c, d).
  std::array<Rational, 4> coords() const { return {re_.a(), re_.b(), im_.a(), im_.b()}; }

  QField conj_i() const { return {re_, -im_}; }
  QField conj_sqrt3() const { return {re_.conj(), im_.conj()}; }
  /// Absolute norm down to the rationals (product of the four conjugates).
  Rational norm() const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string to_string() const;

  friend QField operator+(const QField& x, const QField& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
  friend QField operator-(const QField& x, const QField& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
  friend QField operator-(const QField& x) { return {-x.re_, -x.im_}; }
  friend QField operator*(const QField& x, const QField& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend QField operator/(const QField& x, const QField& y);
  friend bool operator==(const QField& x, const QField& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

 private:
  Q3 re_, im_;
};

using Q3Vec = std::array<Q3, 4>;
using Q3Matrix = std::array<Q3Vec, 4>;

Q3Matrix identity_q3();
Q3Matrix multiply(const Q3Matrix& x, const Q3Matrix& y);
Q3Vec multiply(const Q3Vec& row, const Q3Matrix& m);
Q3 dot(const Q3Vec& x, const Q3Vec& y);
Q3Matrix transpose(const Q3Matrix& m);
Q3Matrix scale(const Q3Matrix& m, const Q3& s);
/// Exact Gauss-Jordan inverse; throws std::domain_error when singular.
Q3Matrix invert(const Q3Matrix& m);

}  // namespace forge
