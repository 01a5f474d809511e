#pragma once

// Brute-force contravariant forms on the Verma module M(Lambda) of gl(m|n) for the
// standard Borel, with the u(p,q|n) star. PBW monomials in the lowering generators
// E_ba (b > a), ordered lexicographically on (b, a).

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "upqn/linalg.hpp"
#include "upqn/superalgebra.hpp"
#include "upqn/superweights.hpp"

namespace upqn {

/// Exponent of each lowering generator, in generator order. Odd exponents are 0 or 1.
using Monomial = std::vector<int>;
/// A weight-space vector: coefficients of F_I v_Lambda.
using VermaVector = std::map<Monomial, Rational>;

/// Height of a root-lattice element in simple roots, or nullopt when it is not a
/// non-negative integral combination of simple roots.
std::optional<long> drop_height(const Weight& drop);

/// All non-negative simple-root combinations of height <= max_height (the zero drop
/// included), sorted by height and then lexicographically.
std::vector<Weight> enumerate_drops(const Signature& sig, long max_height);

struct GramReport {
  Weight hw;
  Weight drop;
  std::size_t dim = 0;
  std::vector<Monomial> basis;
  RationalMatrix matrix;
  bool psd = true;
  std::optional<RationalVector> witness;
  std::optional<Rational> witness_norm;
};

struct GammaCheck {
  bool ok = true;
  std::size_t singular_dim = 0;
  Rational gamma;
};

class VermaOracle {
 public:
  /// Throws NotDominant for a weight outside D^+.
  explicit VermaOracle(Weight hw);

  [[nodiscard]] const Weight& hw() const { return hw_; }
  [[nodiscard]] const Signature& sig() const { return hw_.sig(); }
  [[nodiscard]] const std::vector<MatrixUnit>& generators() const { return gens_; }

  /// Index of a lowering unit among the generators.
  [[nodiscard]] int generator_index(int a, int b) const;

  [[nodiscard]] Weight drop_of(const Monomial& mono) const;
  [[nodiscard]] std::string to_string(const Monomial& mono) const;

  /// PBW monomials whose root sum equals drop; throws for an invalid drop.
  [[nodiscard]] std::vector<Monomial> weight_space_basis(const Weight& drop) const;

  /// x . F_I v_Lambda in normal order.
  const VermaVector& act(const MatrixUnit& x, const Monomial& mono);
  VermaVector act(const MatrixUnit& x, const VermaVector& v);

  /// Contravariant Gram matrix on the weight space Lambda - drop.
  GramReport gram(const Weight& drop);

  /// <u, v> for vectors in any weight spaces (distinct weights pair to zero).
  Rational pairing(const VermaVector& u, const VermaVector& v);

  /// Gamma acts on every k-singular vector at this drop by gamma(Lambda, drop).
  GammaCheck gamma_action(const Weight& drop);

 private:
  struct Space {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
    RationalMatrix matrix;
  };

  const Space& space(const Weight& drop);

  Weight hw_;
  std::vector<MatrixUnit> gens_;
  std::vector<std::vector<long>> gen_simple_;  // simple-root coordinates of each generator's root
  std::map<std::tuple<int, int, Monomial>, VermaVector> memo_;
  std::map<Weight, Space> spaces_;
};

bool gamma_action_check(const Weight& hw, const Weight& drop);

enum class CertifyVerdict { psd_up_to_cap, negative_witness };

struct CertifyResult {
  CertifyVerdict verdict = CertifyVerdict::psd_up_to_cap;
  std::vector<GramReport> reports;
};

/// Gram matrices over enumerate_drops(max_height), stopping at the first negative witness.
CertifyResult certify(const Weight& hw, long max_height);

}  // namespace upqn
