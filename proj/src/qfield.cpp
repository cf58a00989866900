#include "forge/qfield.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace forge {

namespace {

std::string rat(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

int Q3::sign() const {
  // sign(a + b sqrt3): compare a^2 with 3 b^2 when the signs differ.
  const int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
  const int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  const Rational n = norm();
  return n > 0 ? sa : (n < 0 ? sb : 0);
}

double Q3::to_double() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(3.0);
}

std::string Q3::to_string() const {
  if (b_ == 0) return rat(a_);
  std::string s = a_ == 0 ? "" : rat(a_) + (b_ > 0 ? "+" : "");
  if (b_ == 1) return s + "√3";
  if (b_ == -1) return s + "-√3";
  return s + rat(b_) + "√3";
}

Q3 operator/(const Q3& x, const Q3& y) {
  const Rational n = y.norm();
  if (n == 0) throw std::domain_error("division by zero in Q(sqrt3)");
  const Q3 num = x * y.conj();
  return {num.a() / n, num.b() / n};
}

Rational QField::norm() const {
  const Q3 n1 = re_ * re_ + im_ * im_;
  return n1.norm();
}

std::string QField::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  const std::string im = im_ == Q3(1) ? "i" : (im_ == Q3(-1) ? "-i" : "(" + im_.to_string() + ")i");
  if (re_.is_zero()) return im;
  return re_.to_string() + (im.front() == '-' ? "" : "+") + im;
}

QField operator/(const QField& x, const QField& y) {
  const Q3 d = y.re_ * y.re_ + y.im_ * y.im_;
  if (d.is_zero()) throw std::domain_error("division by zero in Q(sqrt3, i)");
  const QField num = x * y.conj_i();
  return {num.re_ / d, num.im_ / d};
}

Q3Matrix identity_q3() {
  Q3Matrix m;
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

Q3Matrix multiply(const Q3Matrix& x, const Q3Matrix& y) {
  Q3Matrix out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

Q3Vec multiply(const Q3Vec& row, const Q3Matrix& m) {
  Q3Vec out;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) out[j] += row[k] * m[k][j];
  }
  return out;
}

Q3 dot(const Q3Vec& x, const Q3Vec& y) {
  Q3 s;
  for (int k = 0; k < 4; ++k) s += x[k] * y[k];
  return s;
}

Q3Matrix transpose(const Q3Matrix& m) {
  Q3Matrix out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = m[j][i];
  }
  return out;
}

Q3Matrix scale(const Q3Matrix& m, const Q3& s) {
  Q3Matrix out = m;
  for (auto& row : out) {
    for (auto& x : row) x *= s;
  }
  return out;
}

Q3Matrix invert(const Q3Matrix& m) {
  Q3Matrix a = m, inv = identity_q3();
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && a[p][c].is_zero()) ++p;
    if (p == 4) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Q3 piv = a[c][c];
    for (int k = 0; k < 4; ++k) {
      a[c][k] = a[c][k] / piv;
      inv[c][k] = inv[c][k] / piv;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Q3 f = a[r][c];
      for (int k = 0; k < 4; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

}  // namespace forge
