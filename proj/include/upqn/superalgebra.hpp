#pragma once

// gl(m|n) in the matrix-unit basis: brackets, the u(p,q|n) star and its dual,
// the super Killing form and the tau isomorphism gl(n|q+p) -> gl(p+q|n).

#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "upqn/rational.hpp"
#include "upqn/superweights.hpp"

namespace upqn {

/// Raised by parity-sensitive operations handed a mixed-parity element.
struct InhomogeneousElement : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// E_ab of gl(m|n), indices 1..m+n.
struct MatrixUnit {
  Signature sig;
  int a = 1;
  int b = 1;

  MatrixUnit() = default;
  MatrixUnit(Signature s, int a_, int b_);

  [[nodiscard]] int parity() const { return (sig.parity(a) + sig.parity(b)) % 2; }
  [[nodiscard]] bool raising() const { return a < b; }
  [[nodiscard]] bool lowering() const { return a > b; }
  [[nodiscard]] bool cartan() const { return a == b; }

  friend bool operator==(const MatrixUnit& x, const MatrixUnit& y) {
    return x.sig == y.sig && x.a == y.a && x.b == y.b;
  }
};

std::string to_string(const MatrixUnit& x);

/// All (m+n)^2 matrix units, ordered lexicographically on (a, b).
std::vector<MatrixUnit> basis(const Signature& sig);

/// A finite linear combination of matrix units. Zero coefficients are never stored.
template <class C>
class AlgebraElement {
 public:
  using Key = std::pair<int, int>;

  AlgebraElement() = default;
  explicit AlgebraElement(Signature sig) : sig_(sig) {}
  AlgebraElement(const MatrixUnit& x, C c = C(1)) : sig_(x.sig) {  // NOLINT(google-explicit-constructor)
    add(x.a, x.b, c);
  }

  [[nodiscard]] const Signature& sig() const { return sig_; }
  [[nodiscard]] const std::map<Key, C>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] C coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? C() : it->second;
  }

  void add(int a, int b, const C& c) {
    if (upqn::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (upqn::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// 0 or 1; throws InhomogeneousElement for mixed sums. The zero element is even.
  [[nodiscard]] int parity() const {
    int par = -1;
    for (const auto& [k, c] : terms_) {
      const int pk = (sig_.parity(k.first) + sig_.parity(k.second)) % 2;
      if (par >= 0 && pk != par) throw InhomogeneousElement("element mixes even and odd matrix units");
      par = pk;
    }
    return par < 0 ? 0 : par;
  }

  [[nodiscard]] bool is_homogeneous() const {
    try {
      (void)parity();
      return true;
    } catch (const InhomogeneousElement&) {
      return false;
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  AlgebraElement& operator*=(const C& s) {
    if (upqn::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c = c * s;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const C& s, AlgebraElement x) { return x *= s; }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.sig_ == y.sig_ && x.terms_ == y.terms_;
  }

 private:
  void check(const AlgebraElement& o) const {
    if (!(sig_ == o.sig_)) throw SignatureMismatch("algebra elements over different signatures");
  }

  Signature sig_;
  std::map<Key, C> terms_;
};

using Element = AlgebraElement<Rational>;
using ComplexElement = AlgebraElement<GaussianRational>;

std::string to_string(const Element& x);

/// [E_ab, E_cd] = delta_bc E_ad - (-1)^{([a]+[b])([c]+[d])} delta_da E_cb.
Element bracket(const MatrixUnit& x, const MatrixUnit& y);

/// Bilinear extension; both arguments must be homogeneous.
template <class C>
AlgebraElement<C> bracket(const AlgebraElement<C>& x, const AlgebraElement<C>& y) {
  if (!(x.sig() == y.sig())) throw SignatureMismatch("bracket of elements over different signatures");
  const Signature& sig = x.sig();
  AlgebraElement<C> out(sig);
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const auto [a, b] = kx;
      const auto [c, d] = ky;
      const C prod = cx * cy;
      if (b == c) out.add(a, d, prod);
      if (d == a) {
        const bool both_odd = ((sig.parity(a) + sig.parity(b)) * (sig.parity(c) + sig.parity(d))) % 2 != 0;
        out.add(c, b, both_odd ? prod : -prod);
      }
    }
  }
  return out;
}

/// Sign function of the real form: +1 on indices 1..p, -1 on p+1..m+n.
int star_sign(const Signature& sig, int a);

/// star(E_ab) = s(a)s(b) E_ba.
Element star(const MatrixUnit& x);
/// Anti-linear extension (coefficients conjugated).
template <class C>
AlgebraElement<C> star(const AlgebraElement<C>& x) {
  AlgebraElement<C> out(x.sig());
  for (const auto& [k, c] : x.terms()) {
    const int s = star_sign(x.sig(), k.first) * star_sign(x.sig(), k.second);
    C cc = c;
    if constexpr (std::is_same_v<C, GaussianRational>) cc = c.conj();
    out.add(k.second, k.first, s == 1 ? cc : -cc);
  }
  return out;
}

/// (-1)^{[a]+[b]} star(E_ab).
Element dual_star(const MatrixUnit& x);
Element dual_star(const Element& x);

enum class RootClass { compact_even, compact_odd, noncompact_even, noncompact_odd };

std::string to_string(RootClass c);

/// Throws std::invalid_argument for a non-positive root.
RootClass root_class(const Signature& sig, const Root& r);

/// Super Killing form Str(ad x o ad y), from structure constants.
Rational killing(const MatrixUnit& x, const MatrixUnit& y);
template <class C>
C killing(const AlgebraElement<C>& x, const AlgebraElement<C>& y) {
  C out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const Rational k =
          killing(MatrixUnit(x.sig(), kx.first, kx.second), MatrixUnit(y.sig(), ky.first, ky.second));
      if (sgn(k) != 0) out += cx * cy * C(k);
    }
  }
  return out;
}

/// Checks (x*, y*) = (-1)^[x] conj((x, y)) on every pair of basis elements, then on
/// `samples` random homogeneous pairs with Gaussian-rational coefficients.
bool star_killing_check(const Signature& sig, int samples, unsigned seed = 1);

/// The index map of the tau isomorphism: a -> m+n+1-a.
int tau_index(const Signature& sig, int a);

/// Sign function on gl(n|q+p) indices: -1 exactly on the last p indices.
int tilde_star_sign(const Signature& sig, int a);

/// A matrix unit of gl(n|q+p); sig is the partner gl(p+q|n) signature.
/// Indices 1..n are even, n+1..m+n odd.
struct TildeUnit {
  Signature sig;
  int a = 1;
  int b = 1;

  TildeUnit() = default;
  TildeUnit(Signature s, int a_, int b_);

  [[nodiscard]] int parity_of(int c) const { return c > sig.n ? 1 : 0; }
  [[nodiscard]] int parity() const { return (parity_of(a) + parity_of(b)) % 2; }
};

/// tau(E~_ab) = E_{a~, b~}.
MatrixUnit tau(const TildeUnit& x);

/// Bracket in gl(n|q+p), written in the gl(p+q|n)-index-free form on TildeUnits:
/// returned as a list of (coefficient, unit).
std::vector<std::pair<Rational, TildeUnit>> tilde_bracket(const TildeUnit& x, const TildeUnit& y);
/// star on gl(n|q+p): s~(a) s~(b) E~_ba, returned with its sign.
std::pair<int, TildeUnit> tilde_star(const TildeUnit& x);
std::pair<int, TildeUnit> tilde_dual_star(const TildeUnit& x);

}  // namespace upqn
