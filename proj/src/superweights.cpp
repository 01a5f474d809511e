#include "upqn/superweights.hpp"

#include <algorithm>
#include <sstream>

namespace upqn {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Rational> parse_list(std::string_view s, std::size_t expected, const char* what) {
  std::vector<Rational> out;
  bool blank = s.find_first_not_of(" \t") == std::string_view::npos;
  if (!blank) {
    for (auto item : split(s, ',')) out.push_back(parse_rational(item));
  }
  if (out.size() != expected) {
    throw std::invalid_argument(std::string(what) + " block has " + std::to_string(out.size()) +
                                " entries, expected " + std::to_string(expected));
  }
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out;
}

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) {
    throw SignatureMismatch("signature mismatch: " + to_string(a) + " vs " + to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------- Signature

Signature::Signature(int p_, int q_, int n_) : p(p_), q(q_), n(n_) {
  if (p < 1 || q < 0 || n < 0) {
    throw std::invalid_argument("signature needs p >= 1, q >= 0, n >= 0; got " + to_string(*this));
  }
}

Signature parse_signature(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("signature must be \"p,q,n\"");
  int v[3];
  for (int i = 0; i < 3; ++i) v[i] = static_cast<int>(to_long(parse_rational(parts[i])));
  return {v[0], v[1], v[2]};
}

std::string to_string(const Signature& sig) {
  return std::to_string(sig.p) + "," + std::to_string(sig.q) + "," + std::to_string(sig.n);
}

// ------------------------------------------------------------------- Weight

Weight::Weight(Signature sig) : sig_(sig), lambda_(sig.m()), omega_(sig.n) {}

Weight::Weight(Signature sig, std::vector<Rational> lambda, std::vector<Rational> omega)
    : sig_(sig), lambda_(std::move(lambda)), omega_(std::move(omega)) {
  if (lambda_.size() != static_cast<std::size_t>(sig_.m()) ||
      omega_.size() != static_cast<std::size_t>(sig_.n)) {
    throw std::invalid_argument("weight shape does not match signature " + to_string(sig_));
  }
}

Weight Weight::unit(const Signature& sig, int a) {
  Weight w(sig);
  w.at(a) = 1;
  return w;
}

Weight Weight::root(const Signature& sig, int a, int b) {
  Weight w(sig);
  w.at(a) += 1;
  w.at(b) -= 1;
  return w;
}

Weight Weight::scalar(const Signature& sig, const Rational& s) {
  Weight w(sig);
  for (auto& x : w.lambda_) x = s;
  for (auto& x : w.omega_) x = -s;
  return w;
}

const Rational& Weight::at(int a) const {
  if (a < 1 || a > sig_.dim()) throw std::out_of_range("weight index out of range");
  return a <= sig_.m() ? lambda_[a - 1] : omega_[a - sig_.m() - 1];
}

Rational& Weight::at(int a) {
  if (a < 1 || a > sig_.dim()) throw std::out_of_range("weight index out of range");
  return a <= sig_.m() ? lambda_[a - 1] : omega_[a - sig_.m() - 1];
}

bool Weight::is_zero() const {
  auto z = [](const Rational& r) { return sgn(r) == 0; };
  return std::all_of(lambda_.begin(), lambda_.end(), z) && std::all_of(omega_.begin(), omega_.end(), z);
}

Weight& Weight::operator+=(const Weight& o) {
  require_same(sig_, o.sig_);
  for (std::size_t i = 0; i < lambda_.size(); ++i) lambda_[i] += o.lambda_[i];
  for (std::size_t i = 0; i < omega_.size(); ++i) omega_[i] += o.omega_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same(sig_, o.sig_);
  for (std::size_t i = 0; i < lambda_.size(); ++i) lambda_[i] -= o.lambda_[i];
  for (std::size_t i = 0; i < omega_.size(); ++i) omega_[i] -= o.omega_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : lambda_) x *= c;
  for (auto& x : omega_) x *= c;
  return *this;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.lambda_ != b.lambda_) return a.lambda_ < b.lambda_;
  return a.omega_ < b.omega_;
}

Weight parse_weight(const Signature& sig, std::string_view text) {
  const auto blocks = split(text, ';');
  if (blocks.size() > 2) throw std::invalid_argument("weight has more than one ';'");
  if (blocks.size() == 1 && sig.n != 0) {
    throw std::invalid_argument("weight needs a ';' separating the eps and delta blocks");
  }
  auto lambda = parse_list(blocks[0], static_cast<std::size_t>(sig.m()), "eps");
  auto omega = blocks.size() == 2 ? parse_list(blocks[1], static_cast<std::size_t>(sig.n), "delta")
                                  : std::vector<Rational>{};
  return {sig, std::move(lambda), std::move(omega)};
}

std::string to_string(const Weight& w) { return join(w.lambda()) + ";" + join(w.omega()); }

std::string to_root_string(const Weight& w) {
  std::string out;
  const auto& sig = w.sig();
  for (int a = 1; a <= sig.dim(); ++a) {
    const Rational& c = w.at(a);
    if (sgn(c) == 0) continue;
    const std::string name =
        a <= sig.m() ? "eps" + std::to_string(a) : "delta" + std::to_string(a - sig.m());
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += to_string(mag);
    out += name;
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------- Form and rho

Rational bilinear(const Weight& u, const Weight& v) {
  require_same(u.sig(), v.sig());
  Rational s = 0;
  for (std::size_t i = 0; i < u.lambda().size(); ++i) s += u.lambda()[i] * v.lambda()[i];
  for (std::size_t i = 0; i < u.omega().size(); ++i) s -= u.omega()[i] * v.omega()[i];
  return s;
}

Weight rho(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("rho needs m >= 1 and n >= 0");
  return rho(Signature(m, 0, n));
}

Weight rho(const Signature& sig) {
  const int m = sig.m();
  const int n = sig.n;
  Weight r(sig);
  for (int i = 1; i <= m; ++i) r.at(i) = Rational(m - n - 2 * i + 1, 2);
  for (int mu = 1; mu <= n; ++mu) r.at(m + mu) = Rational(m + n - 2 * mu + 1, 2);
  for (int a = 1; a <= sig.dim(); ++a) r.at(a).canonicalize();
  return r;
}

// ---------------------------------------------------------------- Dominance

std::optional<std::string> dominance_violation(const Weight& w) {
  const auto& sig = w.sig();
  auto check = [&](int a, const char* name, int i, int shift) -> std::optional<std::string> {
    const Rational diff = w.at(a) - w.at(a + 1);
    if (is_nonneg_integer(diff)) return std::nullopt;
    return std::string(name) + "_" + std::to_string(i) + " - " + name + "_" + std::to_string(i + 1) + " = " +
           to_string(diff) + " is not a non-negative integer" + (shift ? "" : "");
  };
  for (int i = 1; i < sig.p; ++i) {
    if (auto v = check(i, "lambda", i, 0)) return v;
  }
  for (int i = sig.p + 1; i < sig.m(); ++i) {
    if (auto v = check(i, "lambda", i, 0)) return v;
  }
  for (int mu = 1; mu < sig.n; ++mu) {
    if (auto v = check(sig.m() + mu, "omega", mu, 1)) return v;
  }
  return std::nullopt;
}

bool is_dominant(const Weight& w) { return !dominance_violation(w).has_value(); }

void require_dominant(const Weight& w) {
  if (auto v = dominance_violation(w)) throw NotDominant("weight " + to_string(w) + " is not dominant: " + *v);
}

bool is_integral(const Weight& w) {
  auto integral = [](const Rational& r) { return is_integer(r); };
  return std::all_of(w.lambda().begin(), w.lambda().end(), integral) &&
         std::all_of(w.omega().begin(), w.omega().end(), integral) && is_dominant(w);
}

// ------------------------------------------------------------------- Shifts

Weight shift_scalar(const Weight& w, const Rational& s) { return w + Weight::scalar(w.sig(), s); }

Weight shift_block(const Weight& w, const Rational& s, BlockSide side) {
  if (sgn(s) < 0 || s > 1) throw std::invalid_argument("block shift needs 0 <= s <= 1, got " + to_string(s));
  Weight out = w;
  const auto& sig = w.sig();
  if (side == BlockSide::plus) {
    for (int k = sig.p + 1; k <= sig.m(); ++k) out.at(k) += s;
  } else {
    for (int i = 1; i <= sig.p; ++i) out.at(i) -= s;
  }
  return out;
}

// --------------------------------------------------------------- Partitions

GeneralizedPartition::GeneralizedPartition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) throw std::invalid_argument("generalized partition must be non-increasing");
  }
}

long GeneralizedPartition::at(long i) const {
  if (i < 1 || i > static_cast<long>(parts_.size())) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

GeneralizedPartition GeneralizedPartition::plus_part() const {
  std::vector<long> v(parts_.size());
  std::transform(parts_.begin(), parts_.end(), v.begin(), [](long x) { return std::max(x, 0L); });
  return GeneralizedPartition(std::move(v));
}

GeneralizedPartition GeneralizedPartition::minus_part() const {
  std::vector<long> v(parts_.size());
  std::transform(parts_.begin(), parts_.end(), v.begin(), [](long x) { return std::min(x, 0L); });
  return GeneralizedPartition(std::move(v));
}

GeneralizedPartition GeneralizedPartition::minus_star() const {
  std::vector<long> v(parts_.rbegin(), parts_.rend());
  for (auto& x : v) x = -std::min(x, 0L);
  return GeneralizedPartition(std::move(v));
}

bool GeneralizedPartition::is_partition() const {
  return std::all_of(parts_.begin(), parts_.end(), [](long x) { return x >= 0; });
}

bool operator==(const GeneralizedPartition& a, const GeneralizedPartition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 1; i <= len; ++i) {
    if (a.at(static_cast<long>(i)) != b.at(static_cast<long>(i))) return false;
  }
  return true;
}

GeneralizedPartition operator+(const GeneralizedPartition& a, const GeneralizedPartition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  std::vector<long> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = a.at(static_cast<long>(i + 1)) + b.at(static_cast<long>(i + 1));
  return GeneralizedPartition(std::move(v));
}

std::string to_string(const GeneralizedPartition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << ")";
  return os.str();
}

GeneralizedPartition conjugate(const GeneralizedPartition& p) {
  if (!p.is_partition()) throw std::invalid_argument("conjugate needs non-negative parts, got " + to_string(p));
  const long first = p.at(1);
  if (first == 0) return GeneralizedPartition({0});
  std::vector<long> out(static_cast<std::size_t>(first), 0);
  for (long part : p.parts()) {
    for (long i = 1; i <= part; ++i) ++out[static_cast<std::size_t>(i - 1)];
  }
  return GeneralizedPartition(std::move(out));
}

bool in_howe_range(const GeneralizedPartition& lam, int d, const Signature& sig) {
  return static_cast<int>(lam.length()) == d && lam.at(sig.q + 1) <= sig.n && lam.at(d - sig.p) >= 0;
}

Weight lambda_flat(const GeneralizedPartition& lam, int d, const Signature& sig) {
  if (d < 1) throw std::invalid_argument("lambda_flat needs d >= 1");
  if (!in_howe_range(lam, d, sig)) {
    throw std::invalid_argument("partition " + to_string(lam) + " is not in P^" + std::to_string(d) + "_{" +
                                to_string(sig) + "}");
  }
  Weight flat(sig);
  for (int t = 1; t <= sig.p; ++t) flat.at(t) = -d + std::min(lam.at(d - sig.p + t), 0L);
  const GeneralizedPartition plus = lam.plus_part();
  for (int k = 1; k <= sig.q; ++k) flat.at(sig.p + k) = plus.at(k);
  const GeneralizedPartition plus_conj = conjugate(plus);
  for (int mu = 1; mu <= sig.n; ++mu) flat.at(sig.m() + mu) = std::max(plus_conj.at(mu) - sig.q, 0L);
  return flat;
}

// -------------------------------------------------------------------- Theta

ThetaShift ThetaShift::zero(const Signature& sig) {
  ThetaShift t;
  t.a.assign(static_cast<std::size_t>(sig.p), std::vector<long>(static_cast<std::size_t>(sig.q), 0));
  t.b.assign(static_cast<std::size_t>(sig.p), std::vector<int>(static_cast<std::size_t>(sig.n), 0));
  return t;
}

Weight ThetaShift::weight(const Signature& sig) const {
  Weight w(sig);
  for (int i = 1; i <= sig.p; ++i) {
    for (int k = 1; k <= sig.q; ++k) {
      const long c = a.at(i - 1).at(k - 1);
      w.at(i) += c;
      w.at(sig.p + k) -= c;
    }
    for (int mu = 1; mu <= sig.n; ++mu) {
      const int c = b.at(i - 1).at(mu - 1);
      if (c != 0 && c != 1) throw std::invalid_argument("theta odd coefficients must be 0 or 1");
      w.at(i) += c;
      w.at(sig.m() + mu) -= c;
    }
  }
  return w;
}

long ThetaShift::height(const Signature& sig) const {
  long h = 0;
  for (int i = 1; i <= sig.p; ++i) {
    for (int k = 1; k <= sig.q; ++k) h += a[i - 1][k - 1] * (sig.p + k - i);
    for (int mu = 1; mu <= sig.n; ++mu) h += b[i - 1][mu - 1] * (sig.m() + mu - i);
  }
  return h;
}

// ---------------------------------------------------------------------- tau

NqpWeight parse_nqp_weight(const Signature& sig, std::string_view text) {
  const auto blocks = split(text, ';');
  if (blocks.size() != 2) throw std::invalid_argument("gl(n|q+p) weight must be \"even;odd\"");
  return {sig, parse_list(blocks[0], static_cast<std::size_t>(sig.n), "even"),
          parse_list(blocks[1], static_cast<std::size_t>(sig.m()), "odd")};
}

std::string to_string(const NqpWeight& w) { return join(w.even) + ";" + join(w.odd); }

NqpWeight tau_weight(const Weight& w) {
  return {w.sig(), {w.omega().rbegin(), w.omega().rend()}, {w.lambda().rbegin(), w.lambda().rend()}};
}

Weight tau_weight(const NqpWeight& u) {
  if (u.even.size() != static_cast<std::size_t>(u.sig.n) || u.odd.size() != static_cast<std::size_t>(u.sig.m())) {
    throw std::invalid_argument("gl(n|q+p) weight shape does not match signature");
  }
  return {u.sig, {u.odd.rbegin(), u.odd.rend()}, {u.even.rbegin(), u.even.rend()}};
}

}  // namespace upqn
