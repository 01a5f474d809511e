#include "upqn/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace upqn {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;
using IntVector = std::vector<Integer>;

void reduce_content(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

PsdResult negative(const RationalMatrix& a, IntVector v) {
  reduce_content(v);
  PsdResult r;
  r.psd = false;
  r.witness = to_rational(v);
  r.witness_norm = quadratic_form(a, *r.witness);
  if (sgn(*r.witness_norm) >= 0) throw std::logic_error("psd_exact produced a witness of non-negative norm");
  return r;
}

}  // namespace

Rational quadratic_form(const RationalMatrix& a, const RationalVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) row += a[i][j] * v[j];
    s += v[i] * row;
  }
  return s;
}

PsdResult psd_exact(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("psd_exact needs a square matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j] != a[j][i]) throw std::invalid_argument("psd_exact needs a symmetric matrix");
    }
  }

  // Cheap witnesses first: a negative diagonal entry, or e_i -/+ e_j.
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i][i]) < 0) {
      IntVector v(n, 0);
      v[i] = 1;
      return negative(a, v);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      const int s = sgn(a[i][j]) > 0 ? -1 : 1;
      if (sgn(a[i][i] + a[j][j] + 2 * s * a[i][j]) < 0) {
        IntVector v(n, 0);
        v[i] = 1;
        v[j] = s;
        return negative(a, v);
      }
    }
  }

  // Scale to an integer matrix; a positive scalar changes no signs.
  Integer den = 1;
  for (const auto& row : a) {
    for (const auto& x : row) den = lcm(den, x.get_den());
  }
  IntMatrix s(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s[i][j] = a[i][j].get_num() * (den / a[i][j].get_den());
  }

  // Symmetric Bareiss elimination on positive diagonal pivots. Row t of `basis`
  // is the vector whose pairing with the others is (a positive multiple of) s.
  IntMatrix basis(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  std::vector<bool> active(n, true);
  Integer prev = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (sgn(s[i][i]) < 0) return negative(a, basis[i]);
      if (piv == n && sgn(s[i][i]) > 0) piv = i;
    }
    if (piv == n) {
      // Every active diagonal entry is zero; any nonzero off-diagonal pairing is indefinite.
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!active[j] || sgn(s[i][j]) == 0) continue;
          IntVector v(n);
          const int sign = sgn(s[i][j]) > 0 ? 1 : -1;
          for (std::size_t k = 0; k < n; ++k) v[k] = basis[i][k] - sign * basis[j][k];
          return negative(a, v);
        }
      }
      break;
    }
    active[piv] = false;
    const Integer p = s[piv][piv];
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i]) rest.push_back(i);
    }
    for (std::size_t x = 0; x < rest.size(); ++x) {
      const std::size_t j = rest[x];
      for (std::size_t y = x; y < rest.size(); ++y) {
        const std::size_t k = rest[y];
        Integer v = p * s[j][k] - s[j][piv] * s[piv][k];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) {
          throw std::logic_error("psd_exact: inexact Bareiss division");
        }
        v /= prev;
        s[j][k] = v;
        s[k][j] = v;
      }
    }
    // The active rows share one scale factor relative to s, so they may only be
    // reduced by a common divisor.
    Integer common = 0;
    for (std::size_t j : rest) {
      const Integer c = s[j][piv];
      for (std::size_t k = 0; k < n; ++k) {
        basis[j][k] = p * basis[j][k] - c * basis[piv][k];
        common = gcd(common, basis[j][k]);
      }
    }
    if (common > 1) {
      for (std::size_t j : rest) {
        for (auto& x : basis[j]) x /= common;
      }
    }
    for (std::size_t j : rest) {
      s[j][piv] = 0;
      s[piv][j] = 0;
    }
    prev = p;
  }
  return {};
}

std::vector<RationalVector> nullspace(const RationalMatrix& a, std::size_t cols) {
  RationalMatrix m = a;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][c]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t k = c; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const RationalMatrix& a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  return cols - nullspace(a, cols).size();
}

}  // namespace upqn
