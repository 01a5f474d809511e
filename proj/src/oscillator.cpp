#include "upqn/oscillator.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace upqn {

OscSpace::OscSpace(int d_, Signature s) : d(d_), sig(s) {
  if (d < 1) throw std::invalid_argument("oscillator needs d >= 1");
}

int OscMonomial::degree() const {
  int deg = 0;
  for (int e : x) deg += e;
  for (int e : y) deg += e;
  for (auto e : eta) deg += e;
  return deg;
}

OscMonomial unit_monomial(const OscSpace& s) {
  OscMonomial m;
  m.x.assign(static_cast<std::size_t>(s.nx()), 0);
  m.y.assign(static_cast<std::size_t>(s.ny()), 0);
  m.eta.assign(static_cast<std::size_t>(s.neta()), 0);
  return m;
}

std::string to_string(const OscSpace& s, const OscMonomial& m) {
  std::ostringstream out;
  auto emit = [&](const char* name, int a, int k, int e) {
    if (e == 0) return;
    out << name << a << "_" << k;
    if (e > 1) out << "^" << e;
  };
  for (int a = 1; a <= s.d; ++a) {
    for (int k = 1; k <= s.sig.q; ++k) emit("x", a, k, m.x[static_cast<std::size_t>(s.x_slot(a, k))]);
    for (int i = 1; i <= s.sig.p; ++i) emit("y", a, i, m.y[static_cast<std::size_t>(s.y_slot(a, i))]);
  }
  for (int a = 1; a <= s.d; ++a) {
    for (int mu = 1; mu <= s.sig.n; ++mu) emit("eta", a, mu, m.eta[static_cast<std::size_t>(s.eta_slot(a, mu))]);
  }
  const std::string text = out.str();
  return text.empty() ? "1" : text;
}

SuperPolynomial constant(const OscSpace& space, const Rational& c) {
  SuperPolynomial f;
  if (sgn(c) != 0) f.emplace(unit_monomial(space), c);
  return f;
}

SuperPolynomial monomial(const OscMonomial& m, const Rational& c) {
  SuperPolynomial f;
  if (sgn(c) != 0) f.emplace(m, c);
  return f;
}

namespace {

void accumulate(SuperPolynomial& out, const OscMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) out.erase(it);
  }
}

int etas_before(const OscMonomial& m, int slot) {
  int count = 0;
  for (int t = 0; t < slot; ++t) count += m.eta[static_cast<std::size_t>(t)];
  return count;
}

// f -> sum over monomials of c * op(monomial), op returning a scalar factor (0 kills).
template <class Op>
SuperPolynomial map_terms(const SuperPolynomial& f, Op op) {
  SuperPolynomial out;
  for (const auto& [m, c] : f) {
    OscMonomial image = m;
    const long factor = op(image);
    if (factor != 0) accumulate(out, image, c * factor);
  }
  return out;
}

void check_range(const char* what, int a, int d, int k, int bound) {
  if (a < 1 || a > d || k < 1 || k > bound) {
    throw std::out_of_range(std::string(what) + " index (" + std::to_string(a) + "," + std::to_string(k) + ") out of range");
  }
}

}  // namespace

SuperPolynomial mul_x(const OscSpace& s, int a, int k, const SuperPolynomial& f) {
  check_range("x", a, s.d, k, s.sig.q);
  const auto slot = static_cast<std::size_t>(s.x_slot(a, k));
  return map_terms(f, [&](OscMonomial& m) -> long { return ++m.x[slot], 1; });
}

SuperPolynomial d_x(const OscSpace& s, int a, int k, const SuperPolynomial& f) {
  check_range("x", a, s.d, k, s.sig.q);
  const auto slot = static_cast<std::size_t>(s.x_slot(a, k));
  return map_terms(f, [&](OscMonomial& m) -> long { return m.x[slot]-- ; });
}

SuperPolynomial mul_y(const OscSpace& s, int a, int i, const SuperPolynomial& f) {
  check_range("y", a, s.d, i, s.sig.p);
  const auto slot = static_cast<std::size_t>(s.y_slot(a, i));
  return map_terms(f, [&](OscMonomial& m) -> long { return ++m.y[slot], 1; });
}

SuperPolynomial d_y(const OscSpace& s, int a, int i, const SuperPolynomial& f) {
  check_range("y", a, s.d, i, s.sig.p);
  const auto slot = static_cast<std::size_t>(s.y_slot(a, i));
  return map_terms(f, [&](OscMonomial& m) -> long { return m.y[slot]--; });
}

SuperPolynomial mul_eta(const OscSpace& s, int a, int mu, const SuperPolynomial& f) {
  check_range("eta", a, s.d, mu, s.sig.n);
  const int slot = s.eta_slot(a, mu);
  return map_terms(f, [&](OscMonomial& m) -> long {
    auto& e = m.eta[static_cast<std::size_t>(slot)];
    if (e) return 0;
    e = 1;
    return etas_before(m, slot) % 2 ? -1 : 1;
  });
}

SuperPolynomial d_eta(const OscSpace& s, int a, int mu, const SuperPolynomial& f) {
  check_range("eta", a, s.d, mu, s.sig.n);
  const int slot = s.eta_slot(a, mu);
  return map_terms(f, [&](OscMonomial& m) -> long {
    auto& e = m.eta[static_cast<std::size_t>(slot)];
    if (!e) return 0;
    e = 0;
    return etas_before(m, slot) % 2 ? -1 : 1;
  });
}

SuperPolynomial add(const SuperPolynomial& f, const SuperPolynomial& g, const Rational& c) {
  SuperPolynomial out = f;
  for (const auto& [m, v] : g) accumulate(out, m, c * v);
  return out;
}

SuperPolynomial act_gld(const OscSpace& s, int a, int b, const SuperPolynomial& f) {
  if (a < 1 || a > s.d || b < 1 || b > s.d) throw std::out_of_range("gl_d index out of range");
  SuperPolynomial out;
  for (int k = 1; k <= s.sig.q; ++k) out = add(out, mul_x(s, a, k, d_x(s, b, k, f)));
  for (int i = 1; i <= s.sig.p; ++i) out = add(out, mul_y(s, b, i, d_y(s, a, i, f)), -1);
  for (int mu = 1; mu <= s.sig.n; ++mu) out = add(out, mul_eta(s, a, mu, d_eta(s, b, mu, f)));
  return out;
}

SuperPolynomial act_gl(const OscSpace& s, const MatrixUnit& e, const SuperPolynomial& f) {
  if (!(e.sig == s.sig)) throw SignatureMismatch("matrix unit and oscillator space have different signatures");
  const int p = s.sig.p;
  const int m = s.sig.m();
  enum class Kind { y, x, eta };
  auto kind = [&](int c) { return c <= p ? Kind::y : c <= m ? Kind::x : Kind::eta; };
  auto local = [&](int c) { return c <= p ? c : c <= m ? c - p : c - m; };
  const Kind row = kind(e.a);
  const Kind col = kind(e.b);
  const int r = local(e.a);
  const int c = local(e.b);

  SuperPolynomial out;
  for (int a = 1; a <= s.d; ++a) {
    // the column index acts first: multiplication by y for a y-column, a derivative otherwise
    SuperPolynomial g;
    switch (col) {
      case Kind::y: g = mul_y(s, a, c, f); break;
      case Kind::x: g = d_x(s, a, c, f); break;
      case Kind::eta: g = d_eta(s, a, c, f); break;
    }
    switch (row) {
      case Kind::y: g = d_y(s, a, r, g); break;
      case Kind::x: g = mul_x(s, a, r, g); break;
      case Kind::eta: g = mul_eta(s, a, r, g); break;
    }
    out = add(out, g, col == Kind::y ? -1 : 1);
  }
  return out;
}

SuperPolynomial act_gl(const OscSpace& s, const Element& x, const SuperPolynomial& f) {
  SuperPolynomial out;
  for (const auto& [k, c] : x.terms()) out = add(out, act_gl(s, MatrixUnit(s.sig, k.first, k.second), f), c);
  return out;
}

Integer monomial_norm(const OscMonomial& m) {
  Integer out = 1;
  auto fact = [&](int e) {
    for (int t = 2; t <= e; ++t) out *= t;
  };
  for (int e : m.x) fact(e);
  for (int e : m.y) fact(e);
  return out;
}

Rational herm(const SuperPolynomial& f, const SuperPolynomial& g) {
  Rational out = 0;
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  for (const auto& [m, c] : small) {
    auto it = large.find(m);
    if (it != large.end()) out += c * it->second * Rational(monomial_norm(m));
  }
  return out;
}

Weight gl_weight(const OscSpace& s, const OscMonomial& mono) {
  Weight w(s.sig);
  for (int i = 1; i <= s.sig.p; ++i) {
    long count = 0;
    for (int a = 1; a <= s.d; ++a) count += mono.y[static_cast<std::size_t>(s.y_slot(a, i))];
    w.at(i) = -s.d - count;
  }
  for (int k = 1; k <= s.sig.q; ++k) {
    long count = 0;
    for (int a = 1; a <= s.d; ++a) count += mono.x[static_cast<std::size_t>(s.x_slot(a, k))];
    w.at(s.sig.p + k) = count;
  }
  for (int mu = 1; mu <= s.sig.n; ++mu) {
    long count = 0;
    for (int a = 1; a <= s.d; ++a) count += mono.eta[static_cast<std::size_t>(s.eta_slot(a, mu))];
    w.at(s.sig.m() + mu) = count;
  }
  return w;
}

std::vector<long> gld_weight(const OscSpace& s, const OscMonomial& mono) {
  std::vector<long> w(static_cast<std::size_t>(s.d), 0);
  for (int a = 1; a <= s.d; ++a) {
    long& v = w[static_cast<std::size_t>(a - 1)];
    for (int k = 1; k <= s.sig.q; ++k) v += mono.x[static_cast<std::size_t>(s.x_slot(a, k))];
    for (int mu = 1; mu <= s.sig.n; ++mu) v += mono.eta[static_cast<std::size_t>(s.eta_slot(a, mu))];
    for (int i = 1; i <= s.sig.p; ++i) v -= mono.y[static_cast<std::size_t>(s.y_slot(a, i))];
  }
  return w;
}

std::vector<OscMonomial> monomials_of_degree(const OscSpace& s, int deg) {
  std::vector<OscMonomial> out;
  if (deg < 0) return out;
  OscMonomial m = unit_monomial(s);
  const int even = s.nx() + s.ny();
  const int odd = s.neta();
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == even + odd) {
      if (left == 0) out.push_back(m);
      return;
    }
    if (slot >= even) {
      auto& e = m.eta[static_cast<std::size_t>(slot - even)];
      rec(slot + 1, left);
      if (left >= 1) {
        e = 1;
        rec(slot + 1, left - 1);
        e = 0;
      }
      return;
    }
    int& e = slot < s.nx() ? m.x[static_cast<std::size_t>(slot)] : m.y[static_cast<std::size_t>(slot - s.nx())];
    for (int v = 0; v <= left; ++v) {
      e = v;
      rec(slot + 1, left - v);
    }
    e = 0;
  };
  rec(0, deg);
  return out;
}

std::size_t monomial_count(const OscSpace& s, int max_degree) {
  // coefficients of (1 + t)^odd / (1 - t)^even up to t^max_degree
  const int even = s.nx() + s.ny();
  const int odd = s.neta();
  std::vector<Integer> c(static_cast<std::size_t>(max_degree) + 1, 0);
  c[0] = 1;
  for (int v = 0; v < odd; ++v) {
    for (int t = max_degree; t >= 1; --t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - 1)];
  }
  for (int v = 0; v < even; ++v) {
    for (int t = 1; t <= max_degree; ++t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - 1)];
  }
  Integer total = 0;
  for (const auto& x : c) total += x;
  return total.fits_ulong_p() ? total.get_ui() : static_cast<std::size_t>(-1);
}

namespace {

// Total degree of the joint highest weight vector with gl(p+q|n) weight flat.
long flat_degree(const Signature& sig, int d, const Weight& flat) {
  Rational deg = 0;
  for (int i = 1; i <= sig.p; ++i) deg += -flat.at(i) - d;
  for (int a = sig.p + 1; a <= sig.dim(); ++a) deg += flat.at(a);
  return to_long(deg);
}

// All generalized partitions of length d in the Howe range with flat degree <= max_degree.
std::vector<GeneralizedPartition> howe_partitions(int d, const Signature& sig, int max_degree) {
  std::vector<GeneralizedPartition> out;
  std::vector<long> parts(static_cast<std::size_t>(d));
  std::function<void(int, long)> rec = [&](int t, long upper) {
    if (t == d) {
      GeneralizedPartition lam(parts);
      if (!in_howe_range(lam, d, sig)) return;
      if (flat_degree(sig, d, lambda_flat(lam, d, sig)) <= max_degree) out.push_back(lam);
      return;
    }
    for (long v = upper; v >= -max_degree; --v) {
      parts[static_cast<std::size_t>(t)] = v;
      rec(t + 1, v);
    }
  };
  rec(0, max_degree);
  return out;
}

}  // namespace

HoweReport joint_hwv(int d, const Signature& sig, int max_degree) {
  const OscSpace space(d, sig);
  HoweReport report;
  std::vector<MatrixUnit> raising;
  for (int a = 1; a <= sig.dim(); ++a) {
    for (int b = a + 1; b <= sig.dim(); ++b) raising.emplace_back(sig, a, b);
  }

  for (int deg = 0; deg <= max_degree; ++deg) {
    std::map<std::pair<std::vector<long>, Weight>, std::vector<OscMonomial>> blocks;
    for (auto& mono : monomials_of_degree(space, deg)) {
      blocks[{gld_weight(space, mono), gl_weight(space, mono)}].push_back(std::move(mono));
    }
    for (const auto& [key, basis] : blocks) {
      const auto& [lam_parts, flat] = key;
      // rows indexed by (operator, image monomial)
      std::map<std::pair<int, OscMonomial>, std::size_t> row_of;
      RationalMatrix rows;
      auto record = [&](int op, std::size_t col, const SuperPolynomial& image) {
        for (const auto& [m, c] : image) {
          auto it = row_of.find({op, m});
          if (it == row_of.end()) {
            it = row_of.emplace(std::make_pair(op, m), rows.size()).first;
            rows.emplace_back(basis.size(), Rational(0));
          }
          rows[it->second][col] += c;
        }
      };
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const SuperPolynomial f = monomial(basis[col]);
        int op = 0;
        for (int a = 1; a <= d; ++a) {
          for (int b = a + 1; b <= d; ++b) record(op++, col, act_gld(space, a, b, f));
        }
        for (const auto& e : raising) record(op++, col, act_gl(space, e, f));
      }
      const auto kernel = nullspace(rows, basis.size());
      if (kernel.empty()) continue;

      HoweEntry entry;
      entry.partition = GeneralizedPartition(lam_parts);
      entry.flat = flat;
      entry.degree = deg;
      entry.multiplicity = kernel.size();
      for (std::size_t col = 0; col < basis.size(); ++col) accumulate(entry.vector, basis[col], kernel.front()[col]);

      const std::string label = "lambda=" + to_string(entry.partition) + " flat=" + to_string(flat);
      bool ok = true;
      if (!std::is_sorted(lam_parts.begin(), lam_parts.end(), std::greater<>())) {
        report.failures.push_back(label + ": gl_d weight is not dominant");
        ok = false;
      } else if (!in_howe_range(entry.partition, d, sig)) {
        report.failures.push_back(label + ": partition outside the Howe range");
        ok = false;
      } else if (!(lambda_flat(entry.partition, d, sig) == flat)) {
        report.failures.push_back(label + ": lambda_flat gives " + to_string(lambda_flat(entry.partition, d, sig)));
        ok = false;
      }
      if (kernel.size() != 1) {
        report.failures.push_back(label + ": joint singular space has dimension " + std::to_string(kernel.size()));
        ok = false;
      }
      entry.verified = ok;
      report.entries.push_back(std::move(entry));
    }
  }

  // every partition whose summand starts within the degree cap must have appeared
  for (const auto& lam : howe_partitions(d, sig, max_degree)) {
    const bool found = std::any_of(report.entries.begin(), report.entries.end(),
                                   [&](const HoweEntry& e) { return e.partition == lam; });
    if (!found) report.failures.push_back("lambda=" + to_string(lam) + ": no joint highest weight vector found");
  }
  return report;
}

namespace {

bool same(const SuperPolynomial& f, const SuperPolynomial& g) { return f == g; }

}  // namespace

bool commutation_fuzz(int d, const Signature& sig, std::size_t samples, int max_degree, std::uint64_t seed) {
  const OscSpace space(d, sig);
  std::mt19937_64 rng(seed);
  std::vector<OscMonomial> tests;
  for (int deg = 0; deg <= max_degree; ++deg) {
    auto all = monomials_of_degree(space, deg);
    if (samples == 0 || all.size() <= samples) {
      tests.insert(tests.end(), all.begin(), all.end());
      continue;
    }
    std::shuffle(all.begin(), all.end(), rng);
    tests.insert(tests.end(), all.begin(), all.begin() + static_cast<std::ptrdiff_t>(samples));
  }

  const auto gl_basis = basis(sig);
  for (const auto& mono : tests) {
    const SuperPolynomial f = monomial(mono);
    std::vector<SuperPolynomial> gl_images;
    gl_images.reserve(gl_basis.size());
    for (const auto& x : gl_basis) gl_images.push_back(act_gl(space, x, f));

    for (std::size_t i = 0; i < gl_basis.size(); ++i) {
      const auto& x = gl_basis[i];
      for (std::size_t j = 0; j < gl_basis.size(); ++j) {
        const auto& y = gl_basis[j];
        const Rational sign = x.parity() && y.parity() ? -1 : 1;
        const SuperPolynomial lhs = add(act_gl(space, x, gl_images[j]), act_gl(space, y, gl_images[i]), -sign);
        if (!same(lhs, act_gl(space, bracket(x, y), f))) return false;
      }
    }
    for (int a = 1; a <= d; ++a) {
      for (int b = 1; b <= d; ++b) {
        const SuperPolynomial eab = act_gld(space, a, b, f);
        for (int c = 1; c <= d; ++c) {
          for (int e = 1; e <= d; ++e) {
            SuperPolynomial lhs = add(act_gld(space, a, b, act_gld(space, c, e, f)), act_gld(space, c, e, eab), -1);
            SuperPolynomial rhs;
            if (b == c) rhs = add(rhs, act_gld(space, a, e, f));
            if (e == a) rhs = add(rhs, act_gld(space, c, b, f), -1);
            if (!same(lhs, rhs)) return false;
          }
        }
        for (std::size_t i = 0; i < gl_basis.size(); ++i) {
          if (!same(act_gld(space, a, b, gl_images[i]), act_gl(space, gl_basis[i], eab))) return false;
        }
      }
    }
  }
  return true;
}

bool psi_sigma_check(int d, const Signature& sig, int max_degree) {
  const OscSpace space(d, sig);
  std::vector<OscMonomial> monos;
  for (int deg = 0; deg <= max_degree; ++deg) {
    auto part = monomials_of_degree(space, deg);
    monos.insert(monos.end(), part.begin(), part.end());
  }
  // <X f, g> over all g equals herm of X f with each monomial; compare coefficientwise.
  for (const auto& x : basis(sig)) {
    const Element sx = star(Element(x));
    for (const auto& fm : monos) {
      const SuperPolynomial f = monomial(fm);
      const SuperPolynomial xf = act_gl(space, x, f);
      for (const auto& gm : monos) {
        const SuperPolynomial g = monomial(gm);
        if (herm(xf, g) != herm(f, act_gl(space, sx, g))) return false;
      }
    }
  }
  for (int a = 1; a <= d; ++a) {
    for (int b = 1; b <= d; ++b) {
      for (const auto& fm : monos) {
        const SuperPolynomial f = monomial(fm);
        const SuperPolynomial xf = act_gld(space, a, b, f);
        for (const auto& gm : monos) {
          const SuperPolynomial g = monomial(gm);
          if (herm(xf, g) != herm(f, act_gld(space, b, a, g))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace upqn
