#include "upqn/sampling.hpp"

namespace upqn {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_start(Rng& rng, bool integral, long spread) {
  if (integral) return Rational(uniform(rng, -spread, spread));
  const long den = uniform(rng, 0, 5) == 0 ? 3 : 2;
  Rational r(uniform(rng, -spread * den, spread * den), den);
  r.canonicalize();
  return r;
}

void fill_block(std::vector<Rational>& out, std::size_t from, std::size_t count, Rng& rng, bool integral, long spread) {
  if (count == 0) return;
  Rational v = random_start(rng, integral, spread);
  for (std::size_t t = 0; t < count; ++t) {
    if (t > 0) v -= uniform(rng, 0, 2);
    out[from + t] = v;
  }
}

}  // namespace

Weight random_dominant_weight(const Signature& sig, Rng& rng, bool integral, long spread) {
  std::vector<Rational> lambda(static_cast<std::size_t>(sig.m()));
  std::vector<Rational> omega(static_cast<std::size_t>(sig.n));
  fill_block(lambda, 0, static_cast<std::size_t>(sig.p), rng, integral, spread);
  fill_block(lambda, static_cast<std::size_t>(sig.p), static_cast<std::size_t>(sig.q), rng, integral, spread);
  fill_block(omega, 0, static_cast<std::size_t>(sig.n), rng, integral, spread);
  return Weight(sig, std::move(lambda), std::move(omega));
}

Signature random_signature(Rng& rng, int lo, int hi) {
  const int p = static_cast<int>(uniform(rng, lo, hi));
  const int q = static_cast<int>(uniform(rng, lo, hi));
  const int n = static_cast<int>(uniform(rng, lo, hi));
  return Signature(p, q, n);
}

}  // namespace upqn
