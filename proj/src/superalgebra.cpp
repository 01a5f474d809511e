#include "upqn/superalgebra.hpp"

#include <random>

namespace upqn {

MatrixUnit::MatrixUnit(Signature s, int a_, int b_) : sig(s), a(a_), b(b_) {
  if (a < 1 || b < 1 || a > sig.dim() || b > sig.dim()) {
    throw std::out_of_range("matrix unit index out of range for " + to_string(sig));
  }
}

std::string to_string(const MatrixUnit& x) {
  return "E[" + std::to_string(x.a) + "," + std::to_string(x.b) + "]";
}

std::vector<MatrixUnit> basis(const Signature& sig) {
  std::vector<MatrixUnit> out;
  for (int a = 1; a <= sig.dim(); ++a) {
    for (int b = 1; b <= sig.dim(); ++b) out.emplace_back(sig, a, b);
  }
  return out;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : x.terms()) {
    if (sgn(c) < 0) {
      out += out.empty() ? "-" : " - ";
    } else if (!out.empty()) {
      out += " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += to_string(mag) + "*";
    out += "E[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
  }
  return out;
}

Element bracket(const MatrixUnit& x, const MatrixUnit& y) {
  if (!(x.sig == y.sig)) throw SignatureMismatch("bracket of matrix units over different signatures");
  return bracket(Element(x), Element(y));
}

int star_sign(const Signature& sig, int a) { return a <= sig.p ? 1 : -1; }

Element star(const MatrixUnit& x) { return star(Element(x)); }

Element dual_star(const MatrixUnit& x) {
  Element out = star(x);
  if (x.parity()) out *= Rational(-1);
  return out;
}

Element dual_star(const Element& x) {
  Element out(x.sig());
  for (const auto& [k, c] : x.terms()) out += c * dual_star(MatrixUnit(x.sig(), k.first, k.second));
  return out;
}

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::compact_even:
      return "compact_even";
    case RootClass::compact_odd:
      return "compact_odd";
    case RootClass::noncompact_even:
      return "noncompact_even";
    case RootClass::noncompact_odd:
      return "noncompact_odd";
  }
  return "?";
}

RootClass root_class(const Signature& sig, const Root& r) {
  if (r.a < 1 || r.b > sig.dim() || !r.positive()) {
    throw std::invalid_argument("root_class needs a positive root");
  }
  const bool odd = r.parity(sig) == 1;
  if (r.noncompact(sig)) return odd ? RootClass::noncompact_odd : RootClass::noncompact_even;
  return odd ? RootClass::compact_odd : RootClass::compact_even;
}

Rational killing(const MatrixUnit& x, const MatrixUnit& y) {
  if (!(x.sig == y.sig)) throw SignatureMismatch("killing form of units over different signatures");
  const Signature& sig = x.sig;
  // Str(ad x ad y) = sum_c (-1)^[c] <coefficient of x_c in [x,[y,x_c]]>.
  Rational out = 0;
  for (int c = 1; c <= sig.dim(); ++c) {
    for (int d = 1; d <= sig.dim(); ++d) {
      const MatrixUnit xc(sig, c, d);
      const Element inner = bracket(y, xc);
      Rational coeff = 0;
      for (const auto& [k, v] : inner.terms()) {
        coeff += v * bracket(x, MatrixUnit(sig, k.first, k.second)).coeff(c, d);
      }
      if (xc.parity()) {
        out -= coeff;
      } else {
        out += coeff;
      }
    }
  }
  return out;
}

bool star_killing_check(const Signature& sig, int samples, unsigned seed) {
  const auto units = basis(sig);
  // Basis sweep: a table of Killing values lets the random part reuse it.
  const std::size_t N = units.size();
  std::vector<Rational> table(N * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) table[i * N + j] = killing(units[i], units[j]);
  }
  auto index = [&](int a, int b) { return static_cast<std::size_t>((a - 1) * sig.dim() + (b - 1)); };
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const auto& x = units[i];
      const auto& y = units[j];
      const int sx = star_sign(sig, x.a) * star_sign(sig, x.b);
      const int sy = star_sign(sig, y.a) * star_sign(sig, y.b);
      const Rational lhs = Rational(sx * sy) * table[index(x.b, x.a) * N + index(y.b, y.a)];
      const Rational rhs = x.parity() ? -table[i * N + j] : table[i * N + j];
      if (lhs != rhs) return false;
    }
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&](int parity) {
    ComplexElement e(sig);
    for (const auto& u : units) {
      if (u.parity() != parity) continue;
      e.add(u.a, u.b, GaussianRational(Rational(coef(rng)), Rational(coef(rng))));
    }
    return e;
  };
  for (int s = 0; s < samples; ++s) {
    const int px = static_cast<int>(rng() % 2);
    const int py = static_cast<int>(rng() % 2);
    const ComplexElement x = random_element(px);
    const ComplexElement y = random_element(py);
    const GaussianRational lhs = killing(star(x), star(y));
    GaussianRational rhs = killing(x, y).conj();
    if (px) rhs = -rhs;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

int tau_index(const Signature& sig, int a) {
  if (a < 1 || a > sig.dim()) throw std::out_of_range("tau index out of range");
  return sig.dim() + 1 - a;
}

int tilde_star_sign(const Signature& sig, int a) { return a > sig.n + sig.q ? -1 : 1; }

TildeUnit::TildeUnit(Signature s, int a_, int b_) : sig(s), a(a_), b(b_) {
  if (a < 1 || b < 1 || a > sig.dim() || b > sig.dim()) {
    throw std::out_of_range("gl(n|q+p) index out of range");
  }
}

MatrixUnit tau(const TildeUnit& x) { return {x.sig, tau_index(x.sig, x.a), tau_index(x.sig, x.b)}; }

std::vector<std::pair<Rational, TildeUnit>> tilde_bracket(const TildeUnit& x, const TildeUnit& y) {
  std::vector<std::pair<Rational, TildeUnit>> out;
  if (x.b == y.a) out.emplace_back(Rational(1), TildeUnit(x.sig, x.a, y.b));
  if (y.b == x.a) {
    const int s = (x.parity() * y.parity()) % 2 ? 1 : -1;
    out.emplace_back(Rational(s), TildeUnit(x.sig, y.a, x.b));
  }
  return out;
}

std::pair<int, TildeUnit> tilde_star(const TildeUnit& x) {
  return {tilde_star_sign(x.sig, x.a) * tilde_star_sign(x.sig, x.b), TildeUnit(x.sig, x.b, x.a)};
}

std::pair<int, TildeUnit> tilde_dual_star(const TildeUnit& x) {
  auto [s, u] = tilde_star(x);
  return {x.parity() ? -s : s, u};
}

}  // namespace upqn
