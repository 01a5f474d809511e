#pragma once

// The oscillator polynomial superalgebra C^d_{p,q|n}[x, y, eta] with the commuting
// gl_d x gl(p+q|n) actions by differential operators, its Hermitian form, and the
// joint highest weight vectors of Howe duality.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "upqn/linalg.hpp"
#include "upqn/superalgebra.hpp"
#include "upqn/superweights.hpp"

namespace upqn {

struct OscSpace {
  int d = 1;
  Signature sig;

  OscSpace(int d_, Signature s);

  [[nodiscard]] int nx() const { return d * sig.q; }
  [[nodiscard]] int ny() const { return d * sig.p; }
  [[nodiscard]] int neta() const { return d * sig.n; }
  // flat variable slots, a and k/i/mu 1-based
  [[nodiscard]] int x_slot(int a, int k) const { return (a - 1) * sig.q + (k - 1); }
  [[nodiscard]] int y_slot(int a, int i) const { return (a - 1) * sig.p + (i - 1); }
  [[nodiscard]] int eta_slot(int a, int mu) const { return (a - 1) * sig.n + (mu - 1); }
};

/// Exponents of x^a_k, y^a_i and the set of eta^a_mu present, in canonical order
/// (sorted by (a, mu)).
struct OscMonomial {
  std::vector<int> x;
  std::vector<int> y;
  std::vector<std::uint8_t> eta;

  [[nodiscard]] int degree() const;
  auto operator<=>(const OscMonomial&) const = default;
};

OscMonomial unit_monomial(const OscSpace& space);
std::string to_string(const OscSpace& space, const OscMonomial& m);

using SuperPolynomial = std::map<OscMonomial, Rational>;

SuperPolynomial constant(const OscSpace& space, const Rational& c = 1);
SuperPolynomial monomial(const OscMonomial& m, const Rational& c = 1);

// Elementary operators. Odd ones follow the canonical eta order: multiplying or
// taking the left derivative by eta^a_mu picks up (-1)^(number of eta factors before it).
SuperPolynomial mul_x(const OscSpace& s, int a, int k, const SuperPolynomial& f);
SuperPolynomial d_x(const OscSpace& s, int a, int k, const SuperPolynomial& f);
SuperPolynomial mul_y(const OscSpace& s, int a, int i, const SuperPolynomial& f);
SuperPolynomial d_y(const OscSpace& s, int a, int i, const SuperPolynomial& f);
SuperPolynomial mul_eta(const OscSpace& s, int a, int mu, const SuperPolynomial& f);
SuperPolynomial d_eta(const OscSpace& s, int a, int mu, const SuperPolynomial& f);

SuperPolynomial add(const SuperPolynomial& f, const SuperPolynomial& g, const Rational& c = 1);

/// rho(e_ab) for the gl_d unit e_ab; throws std::out_of_range for bad indices.
SuperPolynomial act_gld(const OscSpace& s, int a, int b, const SuperPolynomial& f);

/// rho(E) for a gl(p+q|n) matrix unit, from the nine-case operator table.
SuperPolynomial act_gl(const OscSpace& s, const MatrixUnit& e, const SuperPolynomial& f);
SuperPolynomial act_gl(const OscSpace& s, const Element& x, const SuperPolynomial& f);

/// Norm of a monomial: product of factorials of its even exponents.
Integer monomial_norm(const OscMonomial& m);

/// The Hermitian form with <1,1> = 1 and <z f, g> = <f, d_z g>.
Rational herm(const SuperPolynomial& f, const SuperPolynomial& g);

/// gl(p+q|n) weight of a monomial: lambda_i = -d - #y_i, lambda_{p+k} = #x_k, omega_mu = #eta_mu.
Weight gl_weight(const OscSpace& s, const OscMonomial& m);
/// gl_d weight of a monomial: #x^a + #eta^a - #y^a.
std::vector<long> gld_weight(const OscSpace& s, const OscMonomial& m);

/// All monomials of total degree exactly deg, in a fixed order.
std::vector<OscMonomial> monomials_of_degree(const OscSpace& s, int deg);

struct HoweEntry {
  GeneralizedPartition partition;
  Weight flat;
  int degree = 0;
  std::size_t multiplicity = 0;  // dimension of the joint singular space
  bool verified = false;
  SuperPolynomial vector;  // a joint highest weight vector
};

struct HoweReport {
  std::vector<HoweEntry> entries;       // ordered by (degree, gl_d weight)
  std::vector<std::string> failures;    // falsifications, empty when everything matched
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Number of monomials of degree <= max_degree.
std::size_t monomial_count(const OscSpace& s, int max_degree);

/// Joint kernel of all gl_d and gl(p+q|n) raising operators, per degree and weight block.
/// Mismatches against Howe duality are reported in failures, not thrown.
HoweReport joint_hwv(int d, const Signature& sig, int max_degree);

/// Checks [rho X, rho Y] = rho [X, Y] within each algebra and supercommutation across
/// them, over all basis pairs, on `samples` random monomials per degree up to max_degree
/// (every monomial when samples is 0).
bool commutation_fuzz(int d, const Signature& sig, std::size_t samples, int max_degree, std::uint64_t seed = 1);

/// Checks <rho(X) f, g> = <f, rho(sigma X) g> for all basis X of both algebras and all
/// monomials f, g of degree <= max_degree.
bool psi_sigma_check(int d, const Signature& sig, int max_degree = 2);

}  // namespace upqn
