#include "upqn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <iostream>
#include <sstream>

#include "upqn/classifier.hpp"
#include "upqn/oscillator.hpp"
#include "upqn/parallel.hpp"
#include "upqn/sampling.hpp"
#include "upqn/superalgebra.hpp"
#include "upqn/verma.hpp"

namespace upqn {

using json = nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

json verdict_json(const Verdict& v) {
  json j;
  j["unitary"] = v.unitary;
  if (v.condition) j["condition"] = to_string(*v.condition);
  if (v.i) j["i"] = *v.i;
  if (v.mu) j["mu"] = *v.mu;
  if (v.j) j["j"] = *v.j;
  return j;
}

json integral_json(const IntegralVerdict& v) {
  json j;
  j["unitary"] = v.unitary;
  if (v.branch) j["branch"] = *v.branch;
  if (v.i) j["i"] = *v.i;
  if (v.mu) j["mu"] = *v.mu;
  if (v.j) j["j"] = *v.j;
  return j;
}

bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.unitary == b.unitary && a.condition == b.condition && a.i == b.i && a.mu == b.mu && a.j == b.j;
}

json rational_row(const RationalVector& v) {
  json row = json::array();
  for (const auto& x : v) row.push_back(to_string(x));
  return row;
}

json drop_json(const Weight& drop) {
  json out = json::array();
  for (int a = 1; a <= drop.sig().dim(); ++a) out.push_back(to_long(drop.at(a)));
  return out;
}

json report_json(const GramReport& r) {
  json j;
  j["drop"] = drop_json(r.drop);
  j["drop_root"] = to_root_string(r.drop);
  j["dim"] = r.dim;
  json matrix = json::array();
  for (const auto& row : r.matrix) matrix.push_back(rational_row(row));
  j["matrix"] = std::move(matrix);
  j["psd"] = r.psd;
  j["witness"] = r.witness ? rational_row(*r.witness) : json(nullptr);
  if (r.witness_norm) j["witness_norm"] = to_string(*r.witness_norm);
  return j;
}

// proved-negative when L_0(Lambda) already fails, otherwise whether every theta shape up to
// the cap keeps gamma <= 0. Shapes over-approximate the k-highest weights, so a violation
// proves nothing.
std::string gamma_bound_status(const Weight& w, long cap) {
  if (!kmod_type1(w)) return "proved-negative";
  return gamma_bound_sufficient(w, cap) ? "evidence-positive-at-cap" : "inconclusive";
}

int cmd_classify(const std::string& sig_text, const std::string& weight_text, const std::string& mode,
                 std::optional<long> gamma_cap, std::ostream& out) {
  const Signature sig = parse_signature(sig_text);
  json result;
  if (mode == "nqp-lw" || mode == "nqp-hw-dual") {
    const NqpWeight u = parse_nqp_weight(sig, weight_text);
    result = verdict_json(mode == "nqp-lw" ? gl_nqp_unitary_lowest(u) : gl_nqp_dual_unitary_highest(u));
  } else {
    const Weight w = parse_weight(sig, weight_text);
    if (mode == "hw") {
      result = verdict_json(check_U(w));
      if (gamma_cap) {
        if (*gamma_cap < 0) throw InputError("--gamma-cap must be non-negative");
        result["gamma_bound"] = gamma_bound_status(w, *gamma_cap);
      }
    } else if (mode == "lw-dual") {
      result = verdict_json(dual_unitary_lowest(w));
    } else if (mode == "classical") {
      require_dominant(w);
      result["unitary"] = classical_upq(w);
    } else if (mode == "finite-t1") {
      result["unitary"] = type1_finite(w);
      if (auto mu = type1_atypical_index(w)) result["mu"] = *mu;
    } else if (mode == "finite-t2") {
      result["unitary"] = type2_finite(w);
    } else if (mode == "integral") {
      if (!is_integral(w)) throw InputError("weight " + to_string(w) + " is not dominant integral");
      result = integral_json(integral_classify(w));
    } else {
      throw InputError("unknown mode " + mode);
    }
  }
  out << result.dump() << "\n";
  return 0;
}

struct ScanRow {
  std::string weight;
  bool dominant = false;
  Verdict verdict;
  std::optional<bool> agreement;
};

int cmd_scan(const std::string& sig_text, const std::string& range_text, const std::string& format, long height_cap,
             std::ostream& out) {
  const Signature sig = parse_signature(sig_text);
  if (sig.q < 1 || sig.n < 1) throw InputError("scan needs q >= 1 and n >= 1");
  const auto ranges = parse_scan_ranges(sig, range_text);
  std::vector<std::vector<Rational>> axes;
  std::size_t total = 1;
  for (const auto& r : ranges) {
    axes.push_back(r.points());
    total *= axes.back().size();
  }

  std::vector<ScanRow> rows(total);
  parallel_for(total, thread_count(), [&](std::size_t index) {
    std::vector<Rational> coords(axes.size());
    std::size_t rest = index;
    for (std::size_t t = axes.size(); t-- > 0;) {
      coords[t] = axes[t][rest % axes[t].size()];
      rest /= axes[t].size();
    }
    const Weight w(sig, std::vector<Rational>(coords.begin(), coords.begin() + sig.m()),
                   std::vector<Rational>(coords.begin() + sig.m(), coords.end()));
    ScanRow& row = rows[index];
    row.weight = to_string(w);
    row.dominant = is_dominant(w);
    if (!row.dominant) return;
    row.verdict = check_U(w);
    if (height_cap > 0) {
      const bool psd = certify(w, height_cap).verdict == CertifyVerdict::psd_up_to_cap;
      row.agreement = psd == row.verdict.unitary;
    }
  });

  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  if (format == "csv") {
    out << "signature,weight,dominant,unitary,condition,i,mu,j,oracle_agreement\n";
    for (const auto& r : rows) {
      out << csv_field(to_string(sig)) << ',' << csv_field(r.weight) << ',' << (r.dominant ? "true" : "false") << ','
          << (r.verdict.unitary ? "true" : "false") << ','
          << (r.verdict.condition ? to_string(*r.verdict.condition) : "") << ',' << opt(r.verdict.i) << ','
          << opt(r.verdict.mu) << ',' << opt(r.verdict.j) << ','
          << (r.agreement ? (*r.agreement ? "true" : "false") : "") << "\n";
    }
  } else if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json j;
      j["signature"] = to_string(sig);
      j["weight"] = r.weight;
      j["dominant"] = r.dominant;
      j["unitary"] = r.verdict.unitary;
      j["condition"] = r.verdict.condition ? json(to_string(*r.verdict.condition)) : json(nullptr);
      j["i"] = r.verdict.i ? json(*r.verdict.i) : json(nullptr);
      j["mu"] = r.verdict.mu ? json(*r.verdict.mu) : json(nullptr);
      j["j"] = r.verdict.j ? json(*r.verdict.j) : json(nullptr);
      j["oracle_agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
      arr.push_back(std::move(j));
    }
    out << arr.dump() << "\n";
  } else {
    throw InputError("unknown format " + format);
  }
  return 0;
}

int cmd_gram(const std::string& sig_text, const std::string& weight_text, long max_height, std::ostream& out) {
  if (max_height < 0) throw InputError("--max-height must be non-negative");
  const Weight w = parse_weight(parse_signature(sig_text), weight_text);
  require_dominant(w);
  const CertifyResult res = certify(w, max_height);
  json j;
  j["weight"] = to_string(w);
  j["max_height"] = max_height;
  const bool negative = res.verdict == CertifyVerdict::negative_witness;
  j["verdict"] = negative ? "negative_witness" : "psd_up_to_cap";
  j["witness_drop"] = negative ? json(to_root_string(res.reports.back().drop)) : json(nullptr);
  json reports = json::array();
  for (const auto& r : res.reports) reports.push_back(report_json(r));
  j["reports"] = std::move(reports);
  out << j.dump() << "\n";
  return negative ? 3 : 0;
}

int cmd_howe(int d, const std::string& sig_text, int max_degree, std::ostream& out, std::ostream& err) {
  const Signature sig = parse_signature(sig_text);
  if (d < 1) throw InputError("--d must be at least 1");
  if (max_degree < 0) throw InputError("--max-degree must be non-negative");
  const std::size_t count = monomial_count(OscSpace(d, sig), max_degree);
  if (count > kHoweMonomialLimit) {
    throw InputError("degree cap needs " + std::to_string(count) + " monomials, limit is " +
                     std::to_string(kHoweMonomialLimit));
  }
  const HoweReport report = joint_hwv(d, sig, max_degree);
  json arr = json::array();
  bool all = report.ok();
  for (const auto& e : report.entries) {
    json j;
    j["partition"] = e.partition.parts();
    j["flat"] = to_string(e.flat);
    j["degree"] = e.degree;
    j["verified"] = e.verified;
    all = all && e.verified;
    arr.push_back(std::move(j));
  }
  out << arr.dump() << "\n";
  for (const auto& f : report.failures) err << "falsified: " << f << "\n";
  return all ? 0 : 1;
}

int cmd_selftest(std::uint64_t seed, std::ostream& out) {
  Rng rng(seed);
  int failed = 0;
  auto line = [&](const std::string& name, bool ok, const std::string& detail) {
    out << name << ": " << (ok ? "pass" : "FAIL") << " (" << detail << ")\n";
    if (!ok) ++failed;
  };

  {
    const std::size_t samples = 5000;
    std::size_t bad = 0;
    std::size_t split_j = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const Weight w = random_dominant_weight(random_signature(rng, 1, 3), rng);
      const auto c = evaluate_conditions(w);
      if (std::count(c.begin(), c.end(), true) <= 1) continue;
      // U5 and U6 may both hold through different j; only a shared j contradicts the lemma's argument
      const bool only_u5_u6 = std::count(c.begin(), c.begin() + 4, true) == 0;
      if (only_u5_u6 && !u5_u6_share_j(w)) {
        ++split_j;
      } else {
        ++bad;
      }
    }
    line("exclusivity", bad == 0,
         std::to_string(samples) + " weights, " + std::to_string(bad) + " contradictions, " + std::to_string(split_j) +
             " U5/U6 overlaps through distinct j");
  }
  {
    const std::size_t samples = 2000;
    std::size_t bad = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const Weight w = random_dominant_weight(random_signature(rng, 1, 2), rng);
      if (!same_verdict(check_U(w), dual_unitary_lowest(-w))) ++bad;
    }
    line("duality", bad == 0, std::to_string(samples) + " weights, " + std::to_string(bad) + " mismatches");
  }
  {
    bool ok = true;
    for (const auto& sig : {Signature(2, 0, 1), Signature(1, 0, 2), Signature(1, 1, 1), Signature(1, 2, 1)}) {
      ok = ok && star_killing_check(sig, 20, static_cast<unsigned>(rng()));
    }
    line("star-killing", ok, "gl(2|1), gl(1|2), u(1,1|1), u(1,2|1)");
  }
  {
    const bool ok = commutation_fuzz(1, Signature(1, 1, 1), 0, 3, rng()) &&
                    commutation_fuzz(2, Signature(1, 1, 1), 8, 2, rng());
    line("commutation", ok, "d=1 exhaustive to degree 3, d=2 sampled to degree 2");
  }
  out << "summary: " << (4 - failed) << "/4 passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

std::vector<Rational> AxisRange::points() const {
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

std::vector<AxisRange> parse_scan_ranges(const Signature& sig, std::string_view text) {
  const auto halves = split(text, ';');
  if (halves.size() > 2 || (halves.size() == 1 && sig.n > 0)) {
    throw std::invalid_argument("scan ranges need the form \"lambda ranges;omega ranges\"");
  }
  std::vector<std::string> fields = split(halves[0], ',');
  if (halves.size() == 2) {
    const auto odd = split(halves[1], ',');
    if (!(odd.size() == 1 && trim(odd[0]).empty() && sig.n == 0)) fields.insert(fields.end(), odd.begin(), odd.end());
  }
  if (fields.size() != static_cast<std::size_t>(sig.dim())) {
    throw std::invalid_argument("expected " + std::to_string(sig.dim()) + " scan ranges, got " +
                                std::to_string(fields.size()));
  }
  std::vector<AxisRange> out;
  for (const auto& f : fields) {
    const auto parts = split(trim(f), ':');
    if (parts.size() > 3) throw std::invalid_argument("bad range \"" + f + "\"");
    AxisRange r;
    r.lo = parse_rational(trim(parts[0]));
    r.hi = parts.size() >= 2 ? parse_rational(trim(parts[1])) : r.lo;
    if (parts.size() == 3) r.step = parse_rational(trim(parts[2]));
    if (sgn(r.step) <= 0) throw std::invalid_argument("range step must be positive in \"" + f + "\"");
    if (r.hi < r.lo) throw std::invalid_argument("empty range \"" + f + "\"");
    out.push_back(r);
  }
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitarity of highest weight modules over u(p,q|n)", "upqn"};
  app.require_subcommand(1);

  std::string sig_text;
  std::string weight_text;
  std::string mode = "hw";
  auto* classify = app.add_subcommand("classify", "Classify a highest weight");
  classify->add_option("--signature", sig_text, "p,q,n")->required();
  classify->add_option("--weight", weight_text, "\"l1,...,lm;w1,...,wn\"")->required();
  classify->add_option("--mode", mode)
      ->check(CLI::IsMember({"hw", "lw-dual", "nqp-lw", "nqp-hw-dual", "classical", "finite-t1", "finite-t2",
                             "integral"}));
  std::optional<long> gamma_cap;
  classify->add_option("--gamma-cap", gamma_cap, "also report the gamma bound up to this height (hw mode)");

  std::string ranges;
  std::string format = "csv";
  long height_cap = 0;
  auto* scan = app.add_subcommand("scan", "Classify every point of a weight lattice box");
  scan->add_option("--signature", sig_text)->required();
  scan->add_option("--ranges", ranges, "\"lo:hi[:step],...;...\" in weight layout")->required();
  scan->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--height-cap", height_cap, "cross-check against the Gram oracle up to this height");

  long max_height = 4;
  auto* gram = app.add_subcommand("gram", "Certify the contravariant form up to a height");
  gram->add_option("--signature", sig_text)->required();
  gram->add_option("--weight", weight_text)->required();
  gram->add_option("--max-height", max_height);

  int d = 1;
  int max_degree = 2;
  auto* howe = app.add_subcommand("howe", "Verify the Howe duality pairing");
  howe->add_option("--d", d)->required();
  howe->add_option("--signature", sig_text)->required();
  howe->add_option("--max-degree", max_degree);

  std::uint64_t seed = 1;
  auto* selftest = app.add_subcommand("selftest", "Run the invariant batteries");
  selftest->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*classify) return cmd_classify(sig_text, weight_text, mode, gamma_cap, out);
    if (*scan) return cmd_scan(sig_text, ranges, format, height_cap, out);
    if (*gram) return cmd_gram(sig_text, weight_text, max_height, out);
    if (*howe) return cmd_howe(d, sig_text, max_degree, out, err);
    if (*selftest) return cmd_selftest(seed, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace upqn
