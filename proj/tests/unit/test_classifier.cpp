#include <algorithm>

#include "support.hpp"
#include "upqn/classifier.hpp"
#include "upqn/sampling.hpp"
#include "upqn/verma.hpp"

using namespace upqn;
using testing_support::Q;
using testing_support::S;
using testing_support::W;

namespace {

const std::vector<Signature> kSmall = {Signature(1, 1, 1), Signature(2, 1, 1), Signature(1, 2, 1),
                                       Signature(1, 1, 2), Signature(2, 2, 2)};

}  // namespace

TEST_CASE("check_U examples") {
  Verdict v = check_U(W("1,1,1", "-3,1;1/2"));
  CHECK(v.unitary);
  CHECK(v.condition == Condition::U1);

  v = check_U(W("1,1,1", "0,0;0"));
  CHECK(v.unitary);
  CHECK(v.condition == Condition::U6);
  CHECK(v.i == 1);
  CHECK(v.j == 1);
  CHECK_FALSE(v.mu.has_value());

  v = check_U(W("1,1,1", "0,0;1"));
  CHECK_FALSE(v.unitary);
  CHECK_FALSE(v.condition.has_value());

  CHECK_THROWS_AS(check_U(W("2,1,1", "0,1/2,0;0")), NotDominant);
  CHECK_THROWS_AS(check_U(W("1,1,0", "0,0")), UnsupportedSignature);
  CHECK_THROWS_AS(check_U(W("1,0,1", "0;0")), UnsupportedSignature);
}

TEST_CASE("U5 and U6 can hold together through different j") {
  // U5 holds with j = 1 and U6 with (i, j) = (1, 2); the module is unitary either way.
  const Weight w = W("1,2,1", "-1,0,0;0");
  const auto c = evaluate_conditions(w);
  CHECK(c[4]);
  CHECK(c[5]);
  CHECK_FALSE(u5_u6_share_j(w));
  const Verdict v = check_U(w);
  CHECK(v.condition == Condition::U5);
  CHECK(v.j == 1);
  CHECK(certify(w, 5).verdict == CertifyVerdict::psd_up_to_cap);
}

TEST_CASE("exclusivity apart from split-j U5/U6 overlaps") {
  Rng rng(17);
  for (int t = 0; t < 20000; ++t) {
    const Weight w = random_dominant_weight(random_signature(rng, 1, 3), rng);
    const auto c = evaluate_conditions(w);
    const auto holding = std::count(c.begin(), c.end(), true);
    if (holding <= 1) continue;
    CHECK(holding == 2);
    CHECK(c[4]);
    CHECK(c[5]);
    CHECK_FALSE(u5_u6_share_j(w));
  }
}

TEST_CASE("verdicts agree with the Gram oracle on small weights") {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const Signature sig = kSmall[static_cast<std::size_t>(t % 4)];
    const Weight w = random_dominant_weight(sig, rng, false, 3);
    const bool psd = certify(w, 4).verdict == CertifyVerdict::psd_up_to_cap;
    INFO(to_string(w));
    CHECK(check_U(w).unitary == psd);
  }
}

TEST_CASE("ordering consequence of unitarity") {
  Rng rng(31);
  for (int t = 0; t < 5000; ++t) {
    const Weight w = random_dominant_weight(kSmall[static_cast<std::size_t>(t) % kSmall.size()], rng);
    if (!check_U(w).unitary) continue;
    const Signature& sig = w.sig();
    // lambda_{p+1} >= ... >= lambda_m >= -omega_n >= ... >= -omega_1 >= lambda_1 >= ... >= lambda_p
    std::vector<Rational> chain;
    for (int k = sig.p + 1; k <= sig.m(); ++k) chain.push_back(w.l(k));
    for (int mu = sig.n; mu >= 1; --mu) chain.push_back(-w.w(mu));
    for (int i = 1; i <= sig.p; ++i) chain.push_back(w.l(i));
    INFO(to_string(w));
    CHECK(std::is_sorted(chain.rbegin(), chain.rend()));
  }
}

TEST_CASE("scalar shifts preserve unitarity") {
  Rng rng(37);
  for (int t = 0; t < 3000; ++t) {
    const Weight w = random_dominant_weight(kSmall[static_cast<std::size_t>(t) % kSmall.size()], rng);
    for (const Rational s : {Q("1/2"), Q("-3"), Q("2/3")}) CHECK(check_U(shift_scalar(w, s)).unitary == check_U(w).unitary);
  }
}

TEST_CASE("integral classification") {
  IntegralVerdict v = integral_classify(W("1,1,1", "-2,0;0"));
  CHECK(v.unitary);
  CHECK(v.branch == 2);
  CHECK(v.j == 1);
  v = integral_classify(W("1,1,1", "-3,1;1"));
  CHECK(v.unitary);
  CHECK(v.branch == 1);
  CHECK_FALSE(integral_classify(W("1,1,1", "0,0;1")).unitary);
  CHECK_THROWS_AS(integral_classify(W("1,1,1", "-3,1;1/2")), std::invalid_argument);

  Rng rng(41);
  for (int t = 0; t < 3000; ++t) {
    const Weight w = random_dominant_weight(kSmall[static_cast<std::size_t>(t) % kSmall.size()], rng, true);
    const IntegralVerdict iv = integral_classify(w);
    INFO(to_string(w));
    CHECK(iv.unitary == check_U(w).unitary);
    CHECK(iv.branch.has_value() == iv.unitary);
  }
}

TEST_CASE("intuni construction") {
  IntuniConstruction c = intuni_construction(W("1,1,1", "-2,0;0"));
  CHECK(c.d == 2);
  CHECK(c.lam == GeneralizedPartition({0, 0}));
  CHECK(c.flat == W("1,1,1", "-2,0;0"));
  CHECK(c.shift == 0);

  c = intuni_construction(W("1,1,1", "-3,1;1"));
  CHECK(c.d == 2);
  CHECK(c.lam == GeneralizedPartition({2, 0}));
  CHECK(c.shift == -1);
  CHECK(c.flat + Weight::scalar(c.flat.sig(), c.shift) == W("1,1,1", "-3,1;1"));

  c = intuni_construction(W("1,1,1", "0,0;0"));
  CHECK(c.d == 0);
  CHECK(c.shift == 0);
  CHECK_THROWS_AS(intuni_construction(W("1,1,1", "0,0;1")), std::invalid_argument);

  Rng rng(43);
  for (int t = 0; t < 3000; ++t) {
    const Weight w = random_dominant_weight(kSmall[static_cast<std::size_t>(t) % kSmall.size()], rng, true);
    if (!integral_classify(w).unitary) continue;
    const IntuniConstruction k = intuni_construction(w);
    INFO(to_string(w));
    CHECK(k.flat + Weight::scalar(w.sig(), k.shift) == w);
    if (k.d > 0) {
      CHECK(in_howe_range(k.lam, k.d, w.sig()));
      CHECK(lambda_flat(k.lam, k.d, w.sig()) == k.flat);
    }
  }
}

TEST_CASE("finite-dimensional criteria") {
  CHECK(type1_finite(W("1,0,1", "1;0")));
  CHECK(type1_finite(W("1,0,1", "0;0")));
  CHECK(type1_atypical_index(W("1,0,1", "0;0")) == 1);
  CHECK_FALSE(type1_finite(W("1,0,1", "-1;0")));
  CHECK(type2_finite(W("1,0,1", "-1;0")));
  CHECK(type2_finite(W("1,0,1", "0;0")));
  CHECK_FALSE(type2_finite(W("1,0,1", "1;0")));

  CHECK(is_typical(W("1,0,1", "1;0")));
  CHECK_FALSE(is_typical(W("1,0,1", "0;0")));
  // Lambda_s pairs to zero with every root, so typicality survives the shift
  CHECK(is_typical(shift_scalar(W("1,0,1", "1;0"), 1)));

  Rng rng(47);
  for (int t = 0; t < 3000; ++t) {
    const Weight w = random_dominant_weight(Signature(static_cast<int>(1 + t % 3), 0, static_cast<int>(1 + t % 2)), rng);
    if (!type1_finite(w)) continue;
    const Signature& sig = w.sig();
    const bool first = bilinear(w + rho(sig), Weight::root(sig, sig.m(), sig.m() + sig.n)) > 0;
    const bool second = type1_atypical_index(w).has_value();
    INFO(to_string(w));
    CHECK(first != second);
    if (first) CHECK(is_typical(w));
  }
}

TEST_CASE("k-module test and gamma") {
  CHECK(kmod_type1(W("1,1,1", "-3,1;1/2")));
  CHECK(kmod_type1(W("1,1,1", "0,0;0")));
  CHECK_FALSE(kmod_type1(W("1,1,1", "5,-2;1")));

  const Signature sig = S("1,1,1");
  ThetaShift th = ThetaShift::zero(sig);
  CHECK(gamma(W("1,1,1", "-3,1;1/2"), th) == 0);
  th.b[0][0] = 1;
  CHECK(gamma(W("1,1,1", "-3,1;1/2"), th) == Q("-3/2"));
  ThetaShift even = ThetaShift::zero(sig);
  even.a[0][0] = 1;
  CHECK(gamma(W("1,1,1", "0,0;0"), even) == 0);

  CHECK(gamma_bound_sufficient(W("1,1,1", "-3,1;1/2"), 4));
  CHECK_FALSE(gamma_bound_sufficient(W("1,1,1", "0,0;1"), 2));
  CHECK(gamma_bound_sufficient(W("1,1,1", "0,0;1"), 0));

  // gamma on a theta equals (1/2)(Lambda - xi, Lambda + xi + 2 rho)
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const Weight w = random_dominant_weight(S("2,1,2"), rng);
    enumerate_theta(w.sig(), 3, [&](const ThetaShift& theta) {
      const Weight xi = w - theta.weight(w.sig());
      CHECK(gamma(w, theta) == bilinear(w - xi, w + xi + Rational(2) * rho(w.sig())) / 2);
      return true;
    });
  }
}

TEST_CASE("classical u(p,q)") {
  CHECK(classical_upq(W("1,1,0", "0,0")));
  CHECK(classical_upq(W("1,1,0", "-1,0")));
  CHECK_FALSE(classical_upq(W("1,1,0", "1,0")));
  CHECK_THROWS_AS(classical_upq(W("1,1,1", "0,0;0")), std::invalid_argument);
}

TEST_CASE("minimal graded components") {
  CHECK(lambda_bar(W("1,0,1", "1;0")) == W("1,0,1", "0;1"));
  CHECK(lambda_bar(W("1,0,1", "0;0")) == W("1,0,1", "0;0"));
  CHECK(lambda_bar(W("1,0,2", "2;0,0")) == W("1,0,2", "0;1,1"));
  CHECK_THROWS_AS(lambda_bar(W("1,0,1", "-1;0")), std::invalid_argument);

  CHECK(lambda_qn(W("1,1,1", "-3,1;1/2")) == W("1,1,1", "-3,0;3/2"));
  CHECK(lambda_qn(W("1,1,1", "0,0;0")) == W("1,1,1", "0,0;0"));
  CHECK_THROWS_AS(lambda_qn(W("1,1,1", "5,-2;1")), std::invalid_argument);
}

TEST_CASE("dualities") {
  CHECK(dual_unitary_lowest(W("1,1,1", "3,-1;-1/2")).condition == Condition::U1);
  CHECK(dual_unitary_lowest(W("1,1,1", "0,0;0")).condition == Condition::U6);
  CHECK_FALSE(dual_unitary_lowest(W("1,1,1", "0,0;-1")).unitary);

  const Weight u1 = W("1,1,1", "-3,1;1/2");
  CHECK(gl_nqp_unitary_lowest(tau_weight(u1)).condition == Condition::U1);
  CHECK(gl_nqp_unitary_lowest(tau_weight(Weight(S("1,1,1")))).unitary);
  CHECK(gl_nqp_dual_unitary_highest(tau_weight(-u1)).condition == Condition::U1);
  CHECK(gl_nqp_dual_unitary_highest(tau_weight(Weight(S("1,1,1")))).unitary);

  Rng rng(59);
  for (int t = 0; t < 3000; ++t) {
    const Weight w = random_dominant_weight(kSmall[static_cast<std::size_t>(t) % kSmall.size()], rng);
    const Verdict a = check_U(w);
    const Verdict b = dual_unitary_lowest(-w);
    const Verdict c = gl_nqp_unitary_lowest(tau_weight(w));
    const Verdict d = gl_nqp_dual_unitary_highest(tau_weight(-w));
    for (const Verdict* v : {&b, &c, &d}) {
      CHECK(v->unitary == a.unitary);
      CHECK(v->condition == a.condition);
      CHECK(v->i == a.i);
      CHECK(v->mu == a.mu);
      CHECK(v->j == a.j);
    }
  }

  CHECK(pqrs_is_trivial_only(1, 1, 1, 1));
  CHECK_FALSE(pqrs_is_trivial_only(1, 0, 1, 1));
  CHECK_FALSE(pqrs_is_trivial_only(2, 3, 0, 4));
}
