#include "support.hpp"
#include "upqn/linalg.hpp"
#include "upqn/sampling.hpp"

using namespace upqn;

namespace {

RationalMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix out;
  for (const auto& r : rows) {
    RationalVector row;
    for (long v : r) row.emplace_back(v);
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST_CASE("psd_exact examples") {
  CHECK(psd_exact(M({{2, 0}, {0, 3}})).psd);
  CHECK(psd_exact(RationalMatrix{}).psd);

  for (const auto& a : {M({{0, 1}, {1, 0}}), M({{1, 2}, {2, 1}})}) {
    const PsdResult r = psd_exact(a);
    REQUIRE_FALSE(r.psd);
    REQUIRE(r.witness);
    CHECK(*r.witness_norm == -2);
    CHECK(quadratic_form(a, *r.witness) == *r.witness_norm);
    const RationalVector& v = *r.witness;
    CHECK(v[0] == -v[1]);
  }

  CHECK_FALSE(psd_exact(M({{-1}})).psd);
  CHECK(psd_exact(M({{1, 1}, {1, 1}})).psd);
  CHECK(psd_exact(M({{0, 0}, {0, 0}})).psd);
  CHECK_THROWS_AS(psd_exact(M({{1, 2}, {3, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(psd_exact(M({{1, 2}})), std::invalid_argument);
}

TEST_CASE("psd_exact against Gram and indefinite constructions") {
  Rng rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    const std::size_t k = 1 + static_cast<std::size_t>(t % 3);
    // A = B^T D B with D = diag(+-1); PSD exactly when no negative sign survives in the image
    RationalMatrix b(k, RationalVector(n));
    for (auto& row : b)
      for (auto& x : row) x = coef(rng);
    const bool negative = t % 2 == 1;
    RationalMatrix a(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < k; ++r) {
          const Rational sign = (negative && r == 0) ? -1 : 1;
          a[i][j] += sign * b[r][i] * b[r][j];
        }
    const PsdResult res = psd_exact(a);
    if (res.psd) {
      // no negative direction among the rows of B is possible then
      for (const auto& row : b) CHECK(quadratic_form(a, row) >= 0);
    } else {
      REQUIRE(res.witness);
      CHECK(*res.witness_norm < 0);
      CHECK(quadratic_form(a, *res.witness) == *res.witness_norm);
    }
    if (!negative) CHECK(res.psd);
  }
}

TEST_CASE("nullspace and rank") {
  const RationalMatrix a = M({{1, 2, 3}, {2, 4, 6}});
  const auto ns = nullspace(a, 3);
  CHECK(ns.size() == 2);
  CHECK(rank(a) == 1);
  for (const auto& v : ns) {
    for (const auto& row : a) {
      Rational s = 0;
      for (std::size_t j = 0; j < 3; ++j) s += row[j] * v[j];
      CHECK(s == 0);
    }
  }
  CHECK(nullspace(RationalMatrix{}, 4).size() == 4);
  CHECK(nullspace(M({{1, 0}, {0, 1}}), 2).empty());
}
