#pragma once

// Exact rational scalars. Everything in the library is computed over Q (or
// Q[i] for the few places that need complex conjugation), backed by GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace upqn {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" (b > 0). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Canonical text form: integers bare, otherwise "a/b" with b > 0.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// True iff r is a non-negative integer.
inline bool is_nonneg_integer(const Rational& r) { return is_integer(r) && sgn(r) >= 0; }

/// Floor of a rational as a GMP integer.
Integer floor(const Rational& r);

/// Converts a small integral rational to int; throws std::out_of_range otherwise.
long to_long(const Rational& r);

/// Gaussian rational re + i*im; only used where a star map's anti-linearity matters.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] GaussianRational conj() const { return {re, -im}; }

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
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& z);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

}  // namespace upqn
