#include "upqn/classifier.hpp"

#include <algorithm>

namespace upqn {

namespace {

// (w, e_a - e_b) in the unified indexing, where (e_a, e_a) = +1 for even a and -1 for odd a.
Rational pair(const Weight& w, int a, int b) {
  const Signature& sig = w.sig();
  Rational out = sig.parity(a) ? -w.at(a) : w.at(a);
  out -= sig.parity(b) ? -w.at(b) : w.at(b);
  return out;
}

struct Shifted {
  const Weight& lam;
  Weight lr;  // Lambda + rho

  explicit Shifted(const Weight& w) : lam(w), lr(w + rho(w.sig())) {}

  [[nodiscard]] int m() const { return lam.sig().m(); }
  [[nodiscard]] int n() const { return lam.sig().n; }
  [[nodiscard]] int p() const { return lam.sig().p; }
  // (Lambda+rho, eps_i - delta_mu)
  [[nodiscard]] Rational odd(int i, int mu) const { return pair(lr, i, m() + mu); }
  // (Lambda, eps_i - delta_mu)
  [[nodiscard]] Rational lam_odd(int i, int mu) const { return pair(lam, i, m() + mu); }
  // (Lambda, eps_i - eps_j)
  [[nodiscard]] Rational eps(int i, int j) const { return pair(lam, i, j); }
  // (Lambda, delta_mu - delta_nu)
  [[nodiscard]] Rational del(int mu, int nu) const { return pair(lam, m() + mu, m() + nu); }
};

// The existential of U2/U4: smallest i in 1..p with (L+rho, eps_i-delta_1) = (L, eps_i-eps_1) = 0.
std::optional<int> top_witness(const Shifted& s) {
  for (int i = 1; i <= s.p(); ++i) {
    if (sgn(s.odd(i, 1)) == 0 && sgn(s.eps(i, 1)) == 0) return i;
  }
  return std::nullopt;
}

// The existential of U3/U4: smallest mu in 2..n with (L+rho, eps_m-delta_mu) = (L, delta_mu-delta_n) = 0.
std::optional<int> bottom_witness(const Shifted& s) {
  for (int mu = 2; mu <= s.n(); ++mu) {
    if (sgn(s.odd(s.m(), mu)) == 0 && sgn(s.del(mu, s.n())) == 0) return mu;
  }
  return std::nullopt;
}

bool atypical_floor(const Shifted& s) { return sgn(s.odd(s.m(), 1)) == 0 && sgn(s.del(1, s.n())) == 0; }

std::optional<int> u5_witness(const Shifted& s) {
  for (int j = s.p(); j <= s.m() - 1; ++j) {
    if (s.lam_odd(1, 1) < 1 - j && sgn(s.eps(j + 1, s.m())) == 0) return j;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> u6_witness(const Shifted& s) {
  for (int i = 1; i <= s.p(); ++i) {
    if (sgn(s.eps(i, 1)) != 0) continue;
    for (int j = s.p(); j <= s.m() - 1; ++j) {
      if (sgn(s.eps(j + 1, s.m())) == 0 && s.lam_odd(i, 1) == i - j) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

void require_noncompact(const Signature& sig) {
  if (sig.q < 1 || sig.n < 1) {
    throw UnsupportedSignature("the U1-U6 classification needs q >= 1 and n >= 1, got " + to_string(sig) +
                               "; use the classical or finite-dimensional modes");
  }
}

void require_dominant_even(const Weight& w) {
  const Signature& sig = w.sig();
  for (int i = 1; i < sig.m(); ++i) {
    if (!is_nonneg_integer(w.at(i) - w.at(i + 1))) {
      throw NotDominant("weight " + to_string(w) + " is not gl_m dominant integral at lambda_" + std::to_string(i));
    }
  }
  for (int mu = 1; mu < sig.n; ++mu) {
    if (!is_nonneg_integer(w.at(sig.m() + mu) - w.at(sig.m() + mu + 1))) {
      throw NotDominant("weight " + to_string(w) + " is not gl_n dominant integral at omega_" + std::to_string(mu));
    }
  }
}

bool all_equal(const Weight& w, int from, int to) {
  for (int a = from; a < to; ++a) {
    if (w.at(a) != w.at(a + 1)) return false;
  }
  return true;
}

}  // namespace

std::string to_string(Condition c) { return "U" + std::to_string(static_cast<int>(c)); }

std::array<bool, 6> evaluate_conditions(const Weight& w) {
  require_noncompact(w.sig());
  const Shifted s(w);
  const bool top_pos = sgn(s.odd(s.m(), s.n())) > 0;
  const bool bottom_neg = sgn(s.odd(1, 1)) < 0;
  const bool has_i = top_witness(s).has_value();
  const bool has_mu = bottom_witness(s).has_value();
  const bool floor = atypical_floor(s);
  return {top_pos && bottom_neg,
          top_pos && has_i,
          bottom_neg && has_mu,
          has_mu && has_i,
          floor && u5_witness(s).has_value(),
          floor && u6_witness(s).has_value()};
}

bool u5_u6_share_j(const Weight& w) {
  require_noncompact(w.sig());
  const Shifted s(w);
  if (!atypical_floor(s)) return false;
  for (int j = s.p(); j <= s.m() - 1; ++j) {
    if (sgn(s.eps(j + 1, s.m())) != 0 || !(s.lam_odd(1, 1) < 1 - j)) continue;
    for (int i = 1; i <= s.p(); ++i) {
      if (sgn(s.eps(i, 1)) == 0 && s.lam_odd(i, 1) == i - j) return true;
    }
  }
  return false;
}

Verdict check_U(const Weight& w) {
  require_noncompact(w.sig());
  require_dominant(w);
  const Shifted s(w);
  Verdict v;
  const bool top_pos = sgn(s.odd(s.m(), s.n())) > 0;
  const bool bottom_neg = sgn(s.odd(1, 1)) < 0;
  const auto i = top_witness(s);
  const auto mu = bottom_witness(s);
  auto accept = [&](Condition c) {
    v.unitary = true;
    v.condition = c;
  };
  if (top_pos && bottom_neg) {
    accept(Condition::U1);
  } else if (top_pos && i) {
    accept(Condition::U2);
    v.i = i;
  } else if (bottom_neg && mu) {
    accept(Condition::U3);
    v.mu = mu;
  } else if (mu && i) {
    accept(Condition::U4);
    v.i = i;
    v.mu = mu;
  } else if (atypical_floor(s)) {
    if (auto j = u5_witness(s)) {
      accept(Condition::U5);
      v.j = j;
    } else if (auto ij = u6_witness(s)) {
      accept(Condition::U6);
      v.i = ij->first;
      v.j = ij->second;
    }
  }
  return v;
}

IntegralVerdict integral_classify(const Weight& w) {
  if (!is_integral(w)) throw std::invalid_argument("integral_classify needs an integral dominant weight, got " + to_string(w));
  require_noncompact(w.sig());
  const Signature& sig = w.sig();
  const int m = sig.m();
  const int n = sig.n;
  const int p = sig.p;
  const Rational top = w.l(1) + w.w(1);
  const Rational bottom = w.l(m) + w.w(n);

  auto leading_i = [&](const Rational& target_shift) -> std::optional<int> {
    // smallest i with lambda_1 = ... = lambda_i and lambda_1 + omega_1 = i - target_shift
    for (int i = 1; i <= p; ++i) {
      if (all_equal(w, 1, i) && top == i - target_shift) return i;
    }
    return std::nullopt;
  };

  IntegralVerdict v;
  // branch one
  {
    const bool strict_top = top < 1 - m;
    const auto i = strict_top ? std::nullopt : leading_i(Rational(m));
    const bool strict_bottom = bottom > n - 1;
    std::optional<int> mu;
    if (!strict_bottom) {
      for (int k = 2; k <= n; ++k) {
        if (all_equal(w, m + k, m + n) && bottom == k - 1) {
          mu = k;
          break;
        }
      }
    }
    if ((strict_top || i) && (strict_bottom || mu)) {
      v.unitary = true;
      v.branch = 1;
      v.i = i;
      v.mu = mu;
      return v;
    }
  }
  // branch two
  if (all_equal(w, m + 1, m + n) && sgn(bottom) == 0) {
    for (int j = p; j <= m - 1; ++j) {
      if (!all_equal(w, j + 1, m)) continue;
      const bool strict = top < 1 - j;
      const auto i = strict ? std::nullopt : leading_i(Rational(j));
      if (strict || i) {
        v.unitary = true;
        v.branch = 2;
        v.j = j;
        v.i = i;
        return v;
      }
    }
  }
  return v;
}

bool is_dominant_even(const Weight& w) {
  try {
    require_dominant_even(w);
    return true;
  } catch (const NotDominant&) {
    return false;
  }
}

std::optional<int> type1_atypical_index(const Weight& w) {
  require_dominant_even(w);
  const Shifted s(w);
  for (int mu = 1; mu <= s.n(); ++mu) {
    if (sgn(s.odd(s.m(), mu)) == 0 && sgn(s.del(mu, s.n())) == 0) return mu;
  }
  return std::nullopt;
}

bool type1_finite(const Weight& w) {
  require_dominant_even(w);
  if (w.sig().n == 0) return true;
  const Shifted s(w);
  return sgn(s.odd(s.m(), s.n())) > 0 || type1_atypical_index(w).has_value();
}

bool type2_finite(const Weight& w) {
  require_dominant_even(w);
  if (w.sig().n == 0) return true;
  const Shifted s(w);
  if (sgn(s.odd(1, 1)) < 0) return true;
  for (int k = 1; k <= s.m(); ++k) {
    if (sgn(s.odd(k, 1)) == 0 && sgn(s.eps(1, k)) == 0) return true;
  }
  return false;
}

bool is_typical(const Weight& w) {
  const Shifted s(w);
  for (int i = 1; i <= s.m(); ++i) {
    for (int mu = 1; mu <= s.n(); ++mu) {
      if (sgn(s.odd(i, mu)) == 0) return false;
    }
  }
  return true;
}

bool kmod_type1(const Weight& w) {
  require_dominant(w);
  if (w.sig().n == 0) throw UnsupportedSignature("kmod_type1 needs n >= 1");
  const Shifted s(w);
  if (sgn(s.odd(s.m(), s.n())) > 0) return true;
  for (int mu = 1; mu <= s.n(); ++mu) {
    if (sgn(s.odd(s.m(), mu)) == 0 && sgn(s.del(mu, s.n())) == 0) return true;
  }
  return false;
}

Rational gamma(const Weight& w, const ThetaShift& theta) {
  const Weight t = theta.weight(w.sig());
  return bilinear(w + rho(w.sig()), t) - bilinear(t, t) / 2;
}

void enumerate_theta(const Signature& sig, long cap, const std::function<bool(const ThetaShift&)>& visit) {
  struct Slot {
    int i;
    int k;  // 1..q for even slots, 1..n for odd slots
    bool odd;
    long height;
  };
  std::vector<Slot> slots;
  for (int i = 1; i <= sig.p; ++i) {
    for (int k = 1; k <= sig.q; ++k) slots.push_back({i, k, false, sig.p + k - i});
    for (int mu = 1; mu <= sig.n; ++mu) slots.push_back({i, mu, true, sig.m() + mu - i});
  }
  ThetaShift theta = ThetaShift::zero(sig);
  bool stop = false;
  std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long budget) {
    if (stop) return;
    if (idx == slots.size()) {
      if (!visit(theta)) stop = true;
      return;
    }
    const Slot& s = slots[idx];
    const long max_count = s.odd ? std::min(1L, budget / s.height) : budget / s.height;
    for (long c = 0; c <= max_count && !stop; ++c) {
      if (s.odd) {
        theta.b[s.i - 1][s.k - 1] = static_cast<int>(c);
      } else {
        theta.a[s.i - 1][s.k - 1] = c;
      }
      rec(idx + 1, budget - c * s.height);
    }
    if (s.odd) {
      theta.b[s.i - 1][s.k - 1] = 0;
    } else {
      theta.a[s.i - 1][s.k - 1] = 0;
    }
  };
  rec(0, cap);
}

std::optional<ThetaShift> gamma_bound_violation(const Weight& w, long cap) {
  require_dominant(w);
  if (!kmod_type1(w)) throw std::invalid_argument("gamma bound needs a type-1 unitary k-module L_0(Lambda)");
  std::optional<ThetaShift> found;
  enumerate_theta(w.sig(), cap, [&](const ThetaShift& t) {
    if (sgn(gamma(w, t)) > 0) {
      found = t;
      return false;
    }
    return true;
  });
  return found;
}

bool gamma_bound_sufficient(const Weight& w, long cap) { return !gamma_bound_violation(w, cap).has_value(); }

bool classical_upq(const Weight& w) {
  const Signature& sig = w.sig();
  if (sig.n != 0) throw UnsupportedSignature("classical_upq needs n = 0");
  if (sig.q < 1) throw UnsupportedSignature("classical_upq needs q >= 1");
  require_dominant(w);
  const int m = sig.m();
  const Rational spread = w.l(m) - w.l(1);
  for (int i = 1; i <= sig.p; ++i) {
    if (w.l(1) != w.l(i)) break;
    for (int j = 1; j <= sig.q; ++j) {
      if (w.l(m - j + 1) != w.l(m)) break;
      const bool c1 = spread == m - j - i;
      const bool c2 = spread > std::min(m - i, m - j) - 1;
      if (c1 || c2) return true;
    }
  }
  return false;
}

Weight lambda_bar(const Weight& w) {
  if (!type1_finite(w)) throw std::invalid_argument("lambda_bar needs a type-1 unitary weight, got " + to_string(w));
  const Signature& sig = w.sig();
  const int m = sig.m();
  const int n = sig.n;
  const int mu = type1_atypical_index(w).value_or(n + 1);
  Weight out = w;
  for (int i = 1; i <= m; ++i) {
    const long mu_i = i == m ? mu - 1 : std::min<long>(n, mu - 1 + to_long(pair(w, i, m)));
    for (long nu = 1; nu <= mu_i; ++nu) out -= Weight::root(sig, i, m + static_cast<int>(nu));
  }
  return out;
}

Weight lambda_qn(const Weight& w) {
  if (!kmod_type1(w)) throw std::invalid_argument("lambda_qn needs a type-1 unitary k-module, got " + to_string(w));
  const Signature& sig = w.sig();
  const int m = sig.m();
  const int n = sig.n;
  const Shifted s(w);
  int mu = n + 1;
  if (sgn(s.odd(m, n)) <= 0) {
    for (int k = 1; k <= n; ++k) {
      if (sgn(s.odd(m, k)) == 0 && sgn(s.del(k, n)) == 0) {
        mu = k;
        break;
      }
    }
  }
  Weight out = w;
  for (int j = sig.p + 1; j <= m; ++j) {
    const long mu_j = j == m ? mu - 1 : std::min<long>(n, mu - 1 + to_long(pair(w, j, m)));
    for (long nu = 1; nu <= mu_j; ++nu) out -= Weight::root(sig, j, m + static_cast<int>(nu));
  }
  return out;
}

IntuniConstruction intuni_construction(const Weight& w) {
  const IntegralVerdict v = integral_classify(w);
  if (!v.unitary) throw std::invalid_argument("weight " + to_string(w) + " is not integrally unitary");
  const Signature& sig = w.sig();
  const int p = sig.p;
  const int m = sig.m();
  const int n = sig.n;
  const long d = -to_long(w.l(1) + w.w(n));
  const int i = v.i.value_or(0);

  std::vector<long> parts;
  std::vector<long> tail;  // lambda^3
  for (int t = i + 1; t <= p; ++t) tail.push_back(to_long(w.l(t) - w.l(1)));
  if (*v.branch == 1) {
    for (int k = p + 1; k <= m; ++k) parts.push_back(to_long(w.l(k) + w.w(n)));
    const int mu = v.mu.value_or(n);
    std::vector<long> omega_part;
    for (int nu = 1; nu < mu; ++nu) omega_part.push_back(to_long(w.w(nu) - w.w(n)));
    const GeneralizedPartition om(omega_part);
    if (om.at(1) > 0) {
      const GeneralizedPartition conj = conjugate(om);
      parts.insert(parts.end(), conj.parts().begin(), conj.parts().end());
    }
  } else {
    for (int k = p + 1; k <= *v.j; ++k) parts.push_back(to_long(w.l(k) + w.w(n)));
  }

  IntuniConstruction out;
  out.d = static_cast<int>(d);
  out.shift = Rational(d) + w.l(1);
  if (d == 0) {
    // one-dimensional module: only the scalar shift remains
    if (!parts.empty() || !tail.empty()) throw std::logic_error("intuni construction: nonempty shape with d = 0");
    out.flat = Weight(sig);
  } else {
    const long pad = d - static_cast<long>(parts.size() + tail.size());
    if (pad < 0) throw std::logic_error("intuni construction: shape longer than d for " + to_string(w));
    parts.insert(parts.end(), static_cast<std::size_t>(pad), 0L);
    parts.insert(parts.end(), tail.begin(), tail.end());
    out.lam = GeneralizedPartition(parts);
    out.flat = lambda_flat(out.lam, out.d, sig);
  }
  if (!(shift_scalar(out.flat, out.shift) == w)) {
    throw std::logic_error("intuni construction does not reproduce " + to_string(w) + ": flat " +
                           to_string(out.flat) + ", shift " + to_string(out.shift));
  }
  return out;
}

Verdict dual_unitary_lowest(const Weight& w) {
  const Weight neg = -w;
  require_dominant(neg);
  return check_U(neg);
}

Verdict gl_nqp_unitary_lowest(const NqpWeight& u) { return check_U(tau_weight(u)); }

Verdict gl_nqp_dual_unitary_highest(const NqpWeight& u) { return check_U(-tau_weight(u)); }

bool pqrs_is_trivial_only(int p, int q, int r, int s) { return p * q != 0 && r * s != 0; }

}  // namespace upqn
