#pragma once

// Exact rational matrices: PSD certification with a negative-norm witness, and
// nullspaces by reduced row echelon form.

#include <optional>
#include <vector>

#include "upqn/rational.hpp"

namespace upqn {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

struct PsdResult {
  bool psd = true;
  std::optional<RationalVector> witness;  // integer entries with content 1
  std::optional<Rational> witness_norm;   // witness^T A witness, exactly
};

/// v^T A v.
Rational quadratic_form(const RationalMatrix& a, const RationalVector& v);

/// Decides positive-semidefiniteness exactly. Throws std::invalid_argument for
/// non-square or asymmetric input.
PsdResult psd_exact(const RationalMatrix& a);

/// Basis of {v : A v = 0} for an r x c matrix (c given so r may be 0).
std::vector<RationalVector> nullspace(const RationalMatrix& a, std::size_t cols);

std::size_t rank(const RationalMatrix& a);

}  // namespace upqn
