#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cycas {

using Rational = mpq_class;

// Element of Q(i). Denominators are kept positive and in lowest terms by mpq.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long n) : re(n) {}
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return im == 0 && re == 1; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const {
    Rational n = re * re + im * im;
    return {re / n, -im / n};
  }
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

// i^k for any integer k, folded into the coefficient field.
inline GaussianRational ipow(long k) {
  long r = ((k % 4) + 4) % 4;
  switch (r) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::unit_i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::unit_i();
  }
}

inline GaussianRational gr_pow(GaussianRational base, long e) {
  GaussianRational acc(1);
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string to_string(const Rational& r);
std::string to_string(const GaussianRational& c);

}  // namespace cycas
