#pragma once

// Weights, roots and partitions for gl(p+q|n) with the real form u(p,q|n).
//
// Indices are 1-based throughout, matching the ordered basis e_1..e_{m+n} of
// C^{m|n}: a <= m is even (epsilon_a), a > m is odd (delta_{a-m}).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "upqn/rational.hpp"

namespace upqn {

/// Raised when two objects built for different signatures are combined.
struct SignatureMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation needs a Phi_c^+-dominant weight; what() names the
/// violated inequality.
struct NotDominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The triple (p, q, n) fixing u(p,q|n). gl(m|n) without a real-form split is
/// represented as (m, 0, n).
struct Signature {
  int p = 1;
  int q = 0;
  int n = 0;

  Signature() = default;
  Signature(int p_, int q_, int n_);

  [[nodiscard]] int m() const { return p + q; }
  [[nodiscard]] int dim() const { return p + q + n; }
  /// Z_2 degree of basis index a (0 even, 1 odd).
  [[nodiscard]] int parity(int a) const { return a > m() ? 1 : 0; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature parse_signature(std::string_view text);
std::string to_string(const Signature& sig);

/// A weight sum_i lambda_i eps_i + sum_mu omega_mu delta_mu with exact rational entries.
class Weight {
 public:
  Weight() = default;
  explicit Weight(Signature sig);  // zero weight
  Weight(Signature sig, std::vector<Rational> lambda, std::vector<Rational> omega);

  /// eps_a for a <= m, delta_{a-m} for a > m.
  static Weight unit(const Signature& sig, int a);
  /// eps_a - eps_b in the unified 1..m+n indexing.
  static Weight root(const Signature& sig, int a, int b);
  /// The weight Lambda_s = (s,...,s, -s,...,-s) of the one-dimensional module C_s.
  static Weight scalar(const Signature& sig, const Rational& s);

  [[nodiscard]] const Signature& sig() const { return sig_; }
  [[nodiscard]] const std::vector<Rational>& lambda() const { return lambda_; }
  [[nodiscard]] const std::vector<Rational>& omega() const { return omega_; }

  /// Entry in the unified indexing: lambda_a for a <= m, omega_{a-m} otherwise.
  [[nodiscard]] const Rational& at(int a) const;
  Rational& at(int a);
  /// lambda_i, 1-based.
  [[nodiscard]] const Rational& l(int i) const { return lambda_.at(i - 1); }
  /// omega_mu, 1-based.
  [[nodiscard]] const Rational& w(int mu) const { return omega_.at(mu - 1); }

  [[nodiscard]] bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& c);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b);

 private:
  Signature sig_;
  std::vector<Rational> lambda_;
  std::vector<Rational> omega_;
};

/// "l1,...,lm;w1,...,wn" with entries as integers or "a/b".
Weight parse_weight(const Signature& sig, std::string_view text);
std::string to_string(const Weight& w);
/// Root-lattice style text, e.g. "eps1-delta1" or "2eps1-eps2".
std::string to_root_string(const Weight& w);

/// A root eps_a - eps_b (a != b) of gl(m|n).
struct Root {
  int a = 1;
  int b = 2;

  [[nodiscard]] bool positive() const { return a < b; }
  [[nodiscard]] int parity(const Signature& sig) const { return (sig.parity(a) + sig.parity(b)) % 2; }
  /// Non-compact positive iff a <= p < b.
  [[nodiscard]] bool noncompact(const Signature& sig) const { return a <= sig.p && b > sig.p; }
  [[nodiscard]] Weight weight(const Signature& sig) const { return Weight::root(sig, a, b); }
};

/// The supersymmetric bilinear form: (eps_i,eps_j)=delta_ij, (delta_mu,delta_nu)=-delta_mu,nu.
Rational bilinear(const Weight& u, const Weight& v);

/// Graded half-sum of positive roots of gl(m|n), returned on Signature(m, 0, n).
Weight rho(int m, int n);
/// The same rho, carried on the given signature.
Weight rho(const Signature& sig);

/// Phi_c^+-dominance: integral non-negative differences inside the gl_p, gl_q and gl_n blocks.
bool is_dominant(const Weight& w);
/// The first violated dominance inequality, if any.
std::optional<std::string> dominance_violation(const Weight& w);
/// Throws NotDominant with the violated inequality.
void require_dominant(const Weight& w);

/// Membership in P^+_{p,q|n}: dominant with all entries integers.
bool is_integral(const Weight& w);

/// Lambda + Lambda_s, the highest weight of L(Lambda) (x) C_s.
Weight shift_scalar(const Weight& w, const Rational& s);

enum class BlockSide { plus, minus };

/// Lambda_(s+) adds s to lambda_{p+1..m}; Lambda_(s-) subtracts s from lambda_{1..p}. Needs 0 <= s <= 1.
Weight shift_block(const Weight& w, const Rational& s, BlockSide side);

/// A non-increasing finite integer sequence. Equality ignores trailing zeros.
class GeneralizedPartition {
 public:
  GeneralizedPartition() = default;
  explicit GeneralizedPartition(std::vector<long> parts);

  [[nodiscard]] const std::vector<long>& parts() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  /// 1-based part; indices outside 1..length read as 0.
  [[nodiscard]] long at(long i) const;

  [[nodiscard]] GeneralizedPartition plus_part() const;
  [[nodiscard]] GeneralizedPartition minus_part() const;
  /// lambda_-^* = (-min(lambda_k,0), ..., -min(lambda_1,0)).
  [[nodiscard]] GeneralizedPartition minus_star() const;
  [[nodiscard]] bool is_partition() const;

  friend bool operator==(const GeneralizedPartition& a, const GeneralizedPartition& b);
  friend GeneralizedPartition operator+(const GeneralizedPartition& a, const GeneralizedPartition& b);

 private:
  std::vector<long> parts_;
};

std::string to_string(const GeneralizedPartition& p);

/// Conjugate of an ordinary partition; conjugate of a zero partition is (0).
GeneralizedPartition conjugate(const GeneralizedPartition& p);

/// Membership in P^d_{p,q|n}: length d, lambda_{q+1} <= n and lambda_{d-p} >= 0.
bool in_howe_range(const GeneralizedPartition& lam, int d, const Signature& sig);

/// The gl(p+q|n) highest weight paired with lam under (gl_d, gl(p+q|n)) Howe duality.
Weight lambda_flat(const GeneralizedPartition& lam, int d, const Signature& sig);

/// theta = sum_i sum_k a_ik (eps_i - eps_k) + sum_i sum_mu b_imu (eps_i - delta_mu),
/// i <= p < k <= m, with a_ik >= 0 and b_imu in {0,1}.
struct ThetaShift {
  std::vector<std::vector<long>> a;  // p x q
  std::vector<std::vector<int>> b;   // p x n

  static ThetaShift zero(const Signature& sig);
  [[nodiscard]] Weight weight(const Signature& sig) const;
  /// Height in simple roots: eps_a - eps_b has height b - a.
  [[nodiscard]] long height(const Signature& sig) const;
};

/// A weight of gl(n|q+p): n even entries followed by q+p odd entries. sig is the
/// signature of the partner algebra gl(p+q|n).
struct NqpWeight {
  Signature sig;
  std::vector<Rational> even;  // n entries
  std::vector<Rational> odd;   // q+p entries

  friend bool operator==(const NqpWeight&, const NqpWeight&) = default;
};

NqpWeight parse_nqp_weight(const Signature& sig, std::string_view text);
std::string to_string(const NqpWeight& w);

/// Lambda^tau = (omega_n..omega_1, lambda_m..lambda_1), read as a gl(n|q+p) weight.
NqpWeight tau_weight(const Weight& w);
/// Inverse direction: Upsilon^tau, read as a gl(p+q|n) weight.
Weight tau_weight(const NqpWeight& u);

}  // namespace upqn
