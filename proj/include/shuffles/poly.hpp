#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shuffles/rational.hpp"

namespace shuffles {

// Univariate polynomial over the rationals, coefficients stored low degree
// first.  The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero.
struct UniPoly {
  std::vector<Rational> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

  const Rational& leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c.back();
  }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
    return c[k];
  }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly({Rational(1)}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
  // x - root
  static UniPoly linear_root(const Rational& root) { return UniPoly({-root, Rational(1)}); }

  Rational eval(const Rational& v) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  bool operator==(const UniPoly& o) const { return c == o.c; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }
};

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return UniPoly(std::move(r));
}

inline UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return UniPoly(std::move(r));
}

inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero();
  std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return UniPoly(std::move(r));
}

inline UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> r = a.c;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

// Quotient and remainder; divisor must be nonzero.
inline std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  UniPoly rem = a;
  if (a.degree() < b.degree()) return {UniPoly::zero(), rem};
  std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational f = rem.leading() / b.leading();
    q[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) rem.c[i + shift] -= f * b.c[i];
    rem.normalize();
  }
  return {UniPoly(std::move(q)), rem};
}

inline UniPoly make_monic(const UniPoly& a) {
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

// Monic gcd via the Euclidean algorithm.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

inline UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero();
  UniPoly g = poly_gcd(a, b);
  return make_monic(poly_divmod(a * b, g).first);
}

inline UniPoly poly_derivative(const UniPoly& a) {
  if (a.degree() <= 0) return UniPoly::zero();
  std::vector<Rational> r(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * a.c[i];
  return UniPoly(std::move(r));
}

// A nonzero polynomial is squarefree iff gcd with its derivative is constant.
inline bool poly_squarefree(const UniPoly& a) {
  if (a.is_zero()) return false;
  if (a.degree() == 0) return true;
  return poly_gcd(a, poly_derivative(a)).degree() == 0;
}

inline std::string poly_str(const UniPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int k = a.degree(); k >= 0; --k) {
    Rational ck = a.coeff(k);
    if (ck == 0) continue;
    bool neg = ck < 0;
    Rational mag = neg ? Rational(-ck) : ck;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string ms = rat_str(mag);
    if (k == 0) {
      out += ms;
    } else {
      if (mag != 1) out += ms + "*";
      out += (k == 1) ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace shuffles
