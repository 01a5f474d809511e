#include <random>

#include "support.hpp"
#include "upqn/sampling.hpp"

using namespace upqn;
using testing_support::Q;
using testing_support::S;
using testing_support::W;

TEST_CASE("signature and weight text round trip") {
  CHECK(to_string(S("2,1,3")) == "2,1,3");
  const Weight w = W("1,1,1", "-3,1;1/2");
  CHECK(to_string(w) == "-3,1;1/2");
  CHECK(w.l(1) == -3);
  CHECK(w.w(1) == Q("1/2"));
  CHECK(parse_weight(S("2,1,0"), "1,0,-1") == parse_weight(S("2,1,0"), "1,0,-1;"));
  CHECK_THROWS_AS(parse_weight(S("1,1,1"), "1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight(S("1,1,1"), "1,x;0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("0,1,1"), std::invalid_argument);
  CHECK(to_root_string(Weight::root(S("1,1,1"), 1, 3)) == "eps1-delta1");
}

TEST_CASE("bilinear form") {
  const Signature sig = S("1,1,1");
  CHECK(bilinear(Weight::root(sig, 1, 2), Weight::root(sig, 1, 2)) == 2);
  CHECK(bilinear(Weight::root(sig, 1, 3), Weight::root(sig, 1, 3)) == 0);
  CHECK(bilinear(Weight::unit(sig, 3), Weight::unit(sig, 3)) == -1);
  CHECK_THROWS_AS(bilinear(Weight(sig), Weight(S("2,1,1"))), SignatureMismatch);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Weight u = random_dominant_weight(S("2,1,2"), rng);
    const Weight v = random_dominant_weight(S("2,1,2"), rng);
    const Weight x = random_dominant_weight(S("2,1,2"), rng);
    CHECK(bilinear(u, v) == bilinear(v, u));
    CHECK(bilinear(u + Q("3/2") * v, x) == bilinear(u, x) + Q("3/2") * bilinear(v, x));
  }
}

TEST_CASE("rho") {
  const Weight r = rho(2, 1);
  CHECK(r.lambda() == std::vector<Rational>{0, -1});
  CHECK(r.omega() == std::vector<Rational>{1});
  CHECK(bilinear(r, Weight::root(r.sig(), 1, 3)) == 1);
  CHECK(rho(1, 0).lambda() == std::vector<Rational>{0});

  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      if (m + n < 2) continue;
      const Weight rr = rho(m, n);
      const Signature& sig = rr.sig();
      Weight two_rho(sig);
      for (int a = 1; a <= m + n; ++a) {
        for (int b = a + 1; b <= m + n; ++b) {
          const Weight alpha = Weight::root(sig, a, b);
          const bool odd = (a <= m) != (b <= m);
          two_rho = odd ? two_rho - alpha : two_rho + alpha;
          // the shifted pairings, read off the index positions
          if (a <= m && b <= m) CHECK(bilinear(rr, alpha) == b - a);
          if (a <= m && b > m) CHECK(bilinear(rr, alpha) == m + 1 - a - (b - m));
          if (a > m) CHECK(bilinear(rr, alpha) == (a - m) - (b - m));
        }
      }
      CHECK(two_rho == Rational(2) * rr);
    }
  }
}

TEST_CASE("dominance and integrality") {
  CHECK(is_dominant(W("1,1,1", "-3,1;1/2")));
  CHECK_FALSE(is_dominant(W("2,1,1", "0,1/2,0;0")));
  CHECK(is_dominant(W("2,1,2", "3,1,0;2,2")));
  CHECK(dominance_violation(W("2,1,1", "0,1/2,0;0")).has_value());
  CHECK_THROWS_AS(require_dominant(W("2,1,1", "0,1/2,0;0")), NotDominant);

  CHECK(is_integral(W("1,1,1", "-2,0;0")));
  CHECK_FALSE(is_integral(W("1,1,1", "-3,1;1/2")));
  CHECK(is_integral(W("1,1,1", "1,0;0")));
}

TEST_CASE("scalar and block shifts") {
  CHECK(shift_scalar(W("1,1,1", "0,0;0"), 2) == W("1,1,1", "2,2;-2"));
  CHECK(shift_scalar(W("1,1,1", "-3,1;1/2"), 3) == W("1,1,1", "0,4;-5/2"));
  CHECK(shift_block(W("1,1,1", "-2,0;0"), Q("1/2"), BlockSide::plus) == W("1,1,1", "-2,1/2;0"));
  CHECK(shift_block(W("1,1,1", "-2,0;0"), 1, BlockSide::minus) == W("1,1,1", "-3,0;0"));
  CHECK_THROWS_AS(shift_block(W("1,1,1", "0,0;0"), 2, BlockSide::plus), std::invalid_argument);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Weight w = random_dominant_weight(S("2,2,1"), rng);
    const Rational s = Q("2/3");
    CHECK(shift_scalar(shift_scalar(w, s), -s) == w);
    CHECK(shift_block(w, 0, BlockSide::minus) == w);
    CHECK(shift_scalar(shift_block(w, Q("1/3"), BlockSide::plus), s) ==
          shift_block(shift_scalar(w, s), Q("1/3"), BlockSide::plus));
    CHECK(is_dominant(shift_scalar(w, s)));
    CHECK(is_dominant(shift_block(w, Q("1/2"), BlockSide::minus)));
  }
}

TEST_CASE("partitions") {
  using GP = GeneralizedPartition;
  CHECK(conjugate(GP({2, 1})) == GP({2, 1}));
  CHECK(conjugate(GP({3, 1})) == GP({2, 1, 1}));
  CHECK(conjugate(GP({0})) == GP({0}));
  CHECK_THROWS_AS(conjugate(GP({1, -1})), std::invalid_argument);
  CHECK(GP({2, 1, 0, 0}) == GP({2, 1}));
  CHECK(GP({2, 1}).at(5) == 0);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> parts(static_cast<std::size_t>(1 + rng() % 5));
    long v = static_cast<long>(rng() % 5);
    for (auto& x : parts) {
      x = v;
      v -= static_cast<long>(rng() % 3);
    }
    const GP lam(parts);
    CHECK(lam.plus_part() + lam.minus_part() == lam);
    CHECK(lam.minus_star().is_partition());
    CHECK(lam.plus_part().is_partition());
    CHECK(conjugate(conjugate(lam.plus_part())) == lam.plus_part());
  }
}

TEST_CASE("lambda flat") {
  using GP = GeneralizedPartition;
  const Signature sig = S("1,1,1");
  CHECK(lambda_flat(GP({1, -1}), 2, sig) == W("1,1,1", "-3,1;0"));
  CHECK(lambda_flat(GP({0}), 1, sig) == W("1,1,1", "-1,0;0"));
  // (lambda'_+)_1 = 1 and max(1 - q, 0) = 0, confirmed by the oscillator joint highest weight search
  CHECK(lambda_flat(GP({2, 0}), 2, sig) == W("1,1,1", "-2,2;0"));
  CHECK(lambda_flat(GP({1, 1}), 2, sig) == W("1,1,1", "-2,1;1"));
  CHECK_THROWS_AS(lambda_flat(GP({2, 2}), 2, sig), std::invalid_argument);
  CHECK_FALSE(in_howe_range(GP({2, 2}), 2, S("1,1,0")));
  CHECK_THROWS_AS(lambda_flat(GP({2, 2}), 2, S("1,1,0")), std::invalid_argument);
  CHECK_THROWS_AS(lambda_flat(GP({-1, -1}), 2, sig), std::invalid_argument);
}

TEST_CASE("tau on weights") {
  const Weight w = W("1,1,1", "4,2;7");
  const NqpWeight t = tau_weight(w);
  CHECK(t.even == std::vector<Rational>{7});
  CHECK(t.odd == std::vector<Rational>{2, 4});
  CHECK(tau_weight(t) == w);
  CHECK(tau_weight(Weight(S("2,1,2"))).even == std::vector<Rational>{0, 0});

  std::mt19937_64 rng(4);
  for (int t2 = 0; t2 < 50; ++t2) {
    const Weight u = random_dominant_weight(S("2,3,2"), rng);
    CHECK(tau_weight(tau_weight(u)) == u);
  }
}

TEST_CASE("theta shifts") {
  const Signature sig = S("2,1,1");
  ThetaShift th = ThetaShift::zero(sig);
  CHECK(th.weight(sig).is_zero());
  th.a[0][0] = 2;  // 2(eps1 - eps3)
  th.b[1][0] = 1;  // eps2 - delta1
  CHECK(th.weight(sig) == W("2,1,1", "2,1,-2;-1"));
  CHECK(th.height(sig) == 2 * 2 + 2);
}
