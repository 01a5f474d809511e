#pragma once

// Decision procedures for unitarity of L(Lambda) over u(p,q|n), together with
// the finite-dimensional gl(m|n) criteria they are built from.

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "upqn/superweights.hpp"

namespace upqn {

/// Raised when a classification entry point is handed a signature it does not cover.
struct UnsupportedSignature : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Condition { U1 = 1, U2, U3, U4, U5, U6 };

std::string to_string(Condition c);

struct Verdict {
  bool unitary = false;
  std::optional<Condition> condition;
  std::optional<int> i;
  std::optional<int> mu;
  std::optional<int> j;
};

/// Which of U1..U6 hold, each evaluated independently. Used by the exclusivity checks.
std::array<bool, 6> evaluate_conditions(const Weight& w);

/// U5 and U6 holding with one common index j.
bool u5_u6_share_j(const Weight& w);

/// The unique satisfied condition with smallest witnesses, or unitary=false.
/// Needs a dominant weight and q, n >= 1.
Verdict check_U(const Weight& w);

struct IntegralVerdict {
  bool unitary = false;
  std::optional<int> branch;  // 1 or 2
  std::optional<int> i;
  std::optional<int> mu;
  std::optional<int> j;
};

/// The two integral-weight conditions, read off the entries directly.
IntegralVerdict integral_classify(const Weight& w);

/// Dominance for gl_m + gl_n (the p|q split ignored).
bool is_dominant_even(const Weight& w);

/// Type-1 unitarity of the finite-dimensional gl(m|n)-module L(Lambda).
bool type1_finite(const Weight& w);
/// The atypical index mu of the second type-1 condition, when that condition holds.
std::optional<int> type1_atypical_index(const Weight& w);
/// Type-2 unitarity of the finite-dimensional gl(m|n)-module L(Lambda).
bool type2_finite(const Weight& w);

bool is_typical(const Weight& w);

/// Type-1 unitarity of the k-module L_0(Lambda), k = gl_p + gl(q|n).
bool kmod_type1(const Weight& w);

/// (Lambda+rho, theta) - (theta, theta)/2.
Rational gamma(const Weight& w, const ThetaShift& theta);

/// Calls visit on every theta of height <= cap, in a fixed order; stops when visit returns false.
void enumerate_theta(const Signature& sig, long cap, const std::function<bool(const ThetaShift&)>& visit);

/// First theta of height <= cap with gamma > 0, if any.
std::optional<ThetaShift> gamma_bound_violation(const Weight& w, long cap);

/// True iff gamma <= 0 for every theta of height <= cap.
bool gamma_bound_sufficient(const Weight& w, long cap);

/// The Enright-Howe-Wallach criterion for u(p,q), n = 0.
bool classical_upq(const Weight& w);

/// Highest weight of the minimal graded component of a type-1 unitary gl(m|n)-module.
Weight lambda_bar(const Weight& w);

/// The (gl_{p|n} + gl_q)-highest weight of Omega_{q|n}.
Weight lambda_qn(const Weight& w);

struct IntuniConstruction {
  int d = 0;
  GeneralizedPartition lam;
  Weight flat;
  Rational shift;
};

/// The Howe-duality realisation of an integral unitary weight: w = flat + Lambda_shift.
IntuniConstruction intuni_construction(const Weight& w);

/// Dual-unitary lowest-weight modules with lowest weight w.
Verdict dual_unitary_lowest(const Weight& w);
/// Unitary lowest-weight gl(n|q+p)-modules.
Verdict gl_nqp_unitary_lowest(const NqpWeight& u);
/// Dual-unitary highest-weight gl(n|q+p)-modules.
Verdict gl_nqp_dual_unitary_highest(const NqpWeight& u);

/// True when u(p,q|r,s) admits only one-dimensional (dual) unitary modules.
bool pqrs_is_trivial_only(int p, int q, int r, int s);

}  // namespace upqn
