#include "upqn/verma.hpp"

#include <algorithm>
#include <functional>

namespace upqn {

namespace {

// Simple-root coordinates k_s = beta_1 + ... + beta_s, s = 1..D-1.
std::optional<std::vector<long>> simple_coordinates(const Weight& drop) {
  const int dim = drop.sig().dim();
  std::vector<long> k(static_cast<std::size_t>(dim - 1));
  Rational partial = 0;
  for (int s = 1; s <= dim; ++s) {
    partial += drop.at(s);
    if (s == dim) break;
    if (!is_nonneg_integer(partial)) return std::nullopt;
    k[static_cast<std::size_t>(s - 1)] = to_long(partial);
  }
  if (sgn(partial) != 0) return std::nullopt;
  return k;
}

void add_to(VermaVector& out, const Monomial& mono, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = out.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) out.erase(it);
  }
}

}  // namespace

std::optional<long> drop_height(const Weight& drop) {
  auto k = simple_coordinates(drop);
  if (!k) return std::nullopt;
  long h = 0;
  for (long x : *k) h += x;
  return h;
}

std::vector<Weight> enumerate_drops(const Signature& sig, long max_height) {
  const int simple = sig.dim() - 1;
  std::vector<Weight> out;
  std::vector<long> k(static_cast<std::size_t>(simple), 0);
  std::function<void(int, long)> rec = [&](int s, long budget) {
    if (s == simple) {
      Weight w(sig);
      for (int t = 0; t < simple; ++t) {
        w.at(t + 1) += k[static_cast<std::size_t>(t)];
        w.at(t + 2) -= k[static_cast<std::size_t>(t)];
      }
      out.push_back(std::move(w));
      return;
    }
    for (long c = 0; c <= budget; ++c) {
      k[static_cast<std::size_t>(s)] = c;
      rec(s + 1, budget - c);
    }
    k[static_cast<std::size_t>(s)] = 0;
  };
  rec(0, max_height);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    const long ha = *drop_height(a);
    const long hb = *drop_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

VermaOracle::VermaOracle(Weight hw) : hw_(std::move(hw)) {
  require_dominant(hw_);
  const int dim = sig().dim();
  for (int b = 1; b <= dim; ++b) {
    for (int a = 1; a < b; ++a) {
      gens_.emplace_back(sig(), b, a);
      std::vector<long> k(static_cast<std::size_t>(dim - 1), 0);
      for (int s = a; s < b; ++s) k[static_cast<std::size_t>(s - 1)] = 1;
      gen_simple_.push_back(std::move(k));
    }
  }
}

int VermaOracle::generator_index(int a, int b) const {
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (gens_[g].a == a && gens_[g].b == b) return static_cast<int>(g);
  }
  throw std::invalid_argument("E[" + std::to_string(a) + "," + std::to_string(b) + "] is not a lowering generator");
}

Weight VermaOracle::drop_of(const Monomial& mono) const {
  Weight w(sig());
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (mono[g] == 0) continue;
    // E_ba lowers by eps_a - eps_b
    w.at(gens_[g].b) += mono[g];
    w.at(gens_[g].a) -= mono[g];
  }
  return w;
}

std::string VermaOracle::to_string(const Monomial& mono) const {
  std::string out;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (mono[g] == 0) continue;
    out += upqn::to_string(gens_[g]);
    if (mono[g] > 1) out += "^" + std::to_string(mono[g]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> VermaOracle::weight_space_basis(const Weight& drop) const {
  if (!(drop.sig() == sig())) throw SignatureMismatch("drop signature differs from the highest weight's");
  auto target = simple_coordinates(drop);
  if (!target) throw std::invalid_argument("invalid drop " + upqn::to_string(drop));
  std::vector<Monomial> out;
  Monomial mono(gens_.size(), 0);
  std::vector<long> rest = *target;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == gens_.size()) {
      if (std::all_of(rest.begin(), rest.end(), [](long x) { return x == 0; })) out.push_back(mono);
      return;
    }
    const auto& k = gen_simple_[g];
    long cap = gens_[g].parity() ? 1 : -1;
    for (std::size_t s = 0; s < k.size(); ++s) {
      if (k[s] == 0) continue;
      cap = cap < 0 ? rest[s] : std::min(cap, rest[s]);
    }
    for (long c = 0; c <= cap; ++c) {
      mono[g] = static_cast<int>(c);
      for (std::size_t s = 0; s < k.size(); ++s) rest[s] -= c * k[s];
      rec(g + 1);
      for (std::size_t s = 0; s < k.size(); ++s) rest[s] += c * k[s];
    }
    mono[g] = 0;
  };
  rec(0);
  return out;
}

const VermaVector& VermaOracle::act(const MatrixUnit& x, const Monomial& mono) {
  const auto key = std::make_tuple(x.a, x.b, mono);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  VermaVector out;
  if (x.cartan()) {
    add_to(out, mono, (hw_ - drop_of(mono)).at(x.a));
    return memo_.emplace(key, std::move(out)).first->second;
  }
  std::size_t first = 0;
  while (first < mono.size() && mono[first] == 0) ++first;

  if (first == mono.size()) {
    if (x.lowering()) {
      Monomial m(mono.size(), 0);
      m[static_cast<std::size_t>(generator_index(x.a, x.b))] = 1;
      add_to(out, m, Rational(1));
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  if (x.lowering()) {
    const auto gx = static_cast<std::size_t>(generator_index(x.a, x.b));
    if (gx <= first) {
      if (gx == first && x.parity()) return memo_.emplace(key, std::move(out)).first->second;
      Monomial m = mono;
      ++m[gx];
      add_to(out, m, Rational(1));
      return memo_.emplace(key, std::move(out)).first->second;
    }
  }

  // x f_g rest = (-1)^{|x||g|} f_g (x rest) + [x, f_g] rest
  const MatrixUnit& g = gens_[first];
  Monomial rest = mono;
  --rest[first];
  const VermaVector inner = act(x, rest);
  const bool swap_sign = x.parity() && g.parity();
  for (const auto& [m, c] : inner) {
    const VermaVector moved = act(g, m);
    for (const auto& [m2, c2] : moved) add_to(out, m2, swap_sign ? Rational(-(c * c2)) : Rational(c * c2));
  }
  const Element commutator = bracket(x, g);
  for (const auto& [k, c] : commutator.terms()) {
    const VermaVector tail = act(MatrixUnit(sig(), k.first, k.second), rest);
    for (const auto& [m2, c2] : tail) add_to(out, m2, c * c2);
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

VermaVector VermaOracle::act(const MatrixUnit& x, const VermaVector& v) {
  VermaVector out;
  for (const auto& [m, c] : v) {
    const VermaVector image = act(x, m);
    for (const auto& [m2, c2] : image) add_to(out, m2, c * c2);
  }
  return out;
}

const VermaOracle::Space& VermaOracle::space(const Weight& drop) {
  if (auto it = spaces_.find(drop); it != spaces_.end()) return it->second;
  Space sp;
  sp.basis = weight_space_basis(drop);
  for (std::size_t i = 0; i < sp.basis.size(); ++i) sp.index.emplace(sp.basis[i], i);
  const std::size_t dim = sp.basis.size();
  sp.matrix.assign(dim, RationalVector(dim, Rational(0)));
  if (drop.is_zero()) {
    sp.matrix[0][0] = 1;
  } else {
    // <f_g F_I' v, F_J v> = <F_I' v, star(f_g) F_J v>
    for (std::size_t i = 0; i < dim; ++i) {
      const Monomial& mi = sp.basis[i];
      std::size_t first = 0;
      while (mi[first] == 0) ++first;
      const MatrixUnit& g = gens_[first];
      Monomial shorter = mi;
      --shorter[first];
      const Weight lower = drop_of(shorter);
      const Space& sub = space(lower);
      const Rational s(star_sign(sig(), g.a) * star_sign(sig(), g.b));
      const MatrixUnit raise_unit(sig(), g.b, g.a);
      const std::size_t row = sub.index.at(shorter);
      for (std::size_t j = 0; j < dim; ++j) {
        Rational value = 0;
        for (const auto& [mk, ck] : act(raise_unit, sp.basis[j])) value += ck * sub.matrix[row][sub.index.at(mk)];
        sp.matrix[i][j] = s * value;
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) {
        if (sp.matrix[i][j] != sp.matrix[j][i]) {
          throw std::logic_error("Gram matrix is not symmetric at drop " + upqn::to_string(drop));
        }
      }
    }
  }
  return spaces_.emplace(drop, std::move(sp)).first->second;
}

GramReport VermaOracle::gram(const Weight& drop) {
  const Space& sp = space(drop);
  GramReport r;
  r.hw = hw_;
  r.drop = drop;
  r.dim = sp.basis.size();
  r.basis = sp.basis;
  r.matrix = sp.matrix;
  const PsdResult psd = psd_exact(sp.matrix);
  r.psd = psd.psd;
  r.witness = psd.witness;
  r.witness_norm = psd.witness_norm;
  return r;
}

Rational VermaOracle::pairing(const VermaVector& u, const VermaVector& v) {
  Rational out = 0;
  for (const auto& [mu, cu] : u) {
    const Weight du = drop_of(mu);
    const Space& sp = space(du);
    const std::size_t i = sp.index.at(mu);
    for (const auto& [mv, cv] : v) {
      if (!(drop_of(mv) == du)) continue;
      out += cu * cv * sp.matrix[i][sp.index.at(mv)];
    }
  }
  return out;
}

GammaCheck VermaOracle::gamma_action(const Weight& drop) {
  const Signature& s = sig();
  const std::vector<Monomial> basis = weight_space_basis(drop);
  GammaCheck out;
  out.gamma = bilinear(hw_ + rho(s), drop) - bilinear(drop, drop) / 2;
  if (basis.empty()) return out;

  // rows: (compact raising unit, image monomial); columns: basis monomials
  std::map<std::tuple<int, int, Monomial>, std::size_t> row_of;
  RationalMatrix rows;
  for (int a = 1; a <= s.dim(); ++a) {
    for (int b = a + 1; b <= s.dim(); ++b) {
      const bool compact = (a <= s.p && b <= s.p) || (a > s.p && b > s.p);
      if (!compact) continue;
      const MatrixUnit x(s, a, b);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& [m, c] : act(x, basis[j])) {
          auto key = std::make_tuple(a, b, m);
          auto it = row_of.find(key);
          if (it == row_of.end()) {
            it = row_of.emplace(key, rows.size()).first;
            rows.emplace_back(basis.size(), Rational(0));
          }
          rows[it->second][j] += c;
        }
      }
    }
  }
  const auto singular = nullspace(rows, basis.size());
  out.singular_dim = singular.size();
  for (const auto& coeffs : singular) {
    VermaVector v;
    for (std::size_t j = 0; j < basis.size(); ++j) add_to(v, basis[j], coeffs[j]);
    VermaVector gv;
    for (int i = 1; i <= s.p; ++i) {
      for (int a = s.p + 1; a <= s.dim(); ++a) {
        const VermaVector up = act(MatrixUnit(s, i, a), v);
        for (const auto& [m, c] : act(MatrixUnit(s, a, i), up)) add_to(gv, m, c);
      }
    }
    VermaVector expected;
    for (const auto& [m, c] : v) add_to(expected, m, out.gamma * c);
    if (gv != expected) out.ok = false;
  }
  return out;
}

bool gamma_action_check(const Weight& hw, const Weight& drop) { return VermaOracle(hw).gamma_action(drop).ok; }

CertifyResult certify(const Weight& hw, long max_height) {
  VermaOracle oracle(hw);
  CertifyResult out;
  for (const Weight& drop : enumerate_drops(hw.sig(), max_height)) {
    out.reports.push_back(oracle.gram(drop));
    if (!out.reports.back().psd) {
      out.verdict = CertifyVerdict::negative_witness;
      break;
    }
  }
  return out;
}

}  // namespace upqn
