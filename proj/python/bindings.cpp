// Python bindings. Weights and rationals cross the boundary as strings in the CLI
// syntax, so nothing is lost to floating point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "upqn/classifier.hpp"
#include "upqn/cli.hpp"
#include "upqn/oscillator.hpp"
#include "upqn/verma.hpp"

namespace py = pybind11;
using namespace upqn;

namespace {

Signature sig_of(const py::object& s) {
  if (py::isinstance<py::str>(s)) return parse_signature(s.cast<std::string>());
  const auto t = s.cast<std::tuple<int, int, int>>();
  return Signature(std::get<0>(t), std::get<1>(t), std::get<2>(t));
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["unitary"] = v.unitary;
  if (v.condition) d["condition"] = to_string(*v.condition);
  if (v.i) d["i"] = *v.i;
  if (v.mu) d["mu"] = *v.mu;
  if (v.j) d["j"] = *v.j;
  return d;
}

std::vector<std::vector<std::string>> matrix_strings(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_upqn, m) {
  m.doc() = "Unitary highest weight modules of u(p,q|n)";

  py::register_exception<NotDominant>(m, "NotDominant", PyExc_ValueError);
  py::register_exception<UnsupportedSignature>(m, "UnsupportedSignature", PyExc_ValueError);

  m.def(
      "check_u", [](const py::object& sig, const std::string& w) { return verdict_dict(check_U(parse_weight(sig_of(sig), w))); },
      py::arg("signature"), py::arg("weight"));

  m.def(
      "integral_classify",
      [](const py::object& sig, const std::string& w) {
        const IntegralVerdict v = integral_classify(parse_weight(sig_of(sig), w));
        py::dict d;
        d["unitary"] = v.unitary;
        if (v.branch) d["branch"] = *v.branch;
        if (v.i) d["i"] = *v.i;
        if (v.mu) d["mu"] = *v.mu;
        if (v.j) d["j"] = *v.j;
        return d;
      },
      py::arg("signature"), py::arg("weight"));

  m.def(
      "is_dominant", [](const py::object& sig, const std::string& w) { return is_dominant(parse_weight(sig_of(sig), w)); },
      py::arg("signature"), py::arg("weight"));

  m.def(
      "lambda_flat",
      [](std::vector<long> parts, int d, const py::object& sig) {
        return to_string(lambda_flat(GeneralizedPartition(std::move(parts)), d, sig_of(sig)));
      },
      py::arg("partition"), py::arg("d"), py::arg("signature"));

  m.def(
      "gamma_bound_sufficient",
      [](const py::object& sig, const std::string& w, long cap) {
        return gamma_bound_sufficient(parse_weight(sig_of(sig), w), cap);
      },
      py::arg("signature"), py::arg("weight"), py::arg("cap"));

  m.def(
      "certify",
      [](const py::object& sig, const std::string& w, long max_height) {
        CertifyResult r;
        {
          py::gil_scoped_release release;
          r = certify(parse_weight(sig_of(sig), w), max_height);
        }
        py::list reports;
        for (const GramReport& g : r.reports) {
          py::dict d;
          d["drop"] = to_root_string(g.drop);
          d["dim"] = g.dim;
          d["matrix"] = matrix_strings(g.matrix);
          d["psd"] = g.psd;
          if (g.witness) {
            std::vector<std::string> v;
            for (const auto& x : *g.witness) v.push_back(to_string(x));
            d["witness"] = v;
            d["witness_norm"] = to_string(*g.witness_norm);
          }
          reports.append(d);
        }
        py::dict out;
        out["verdict"] = r.verdict == CertifyVerdict::psd_up_to_cap ? "psd_up_to_cap" : "negative_witness";
        out["reports"] = reports;
        return out;
      },
      py::arg("signature"), py::arg("weight"), py::arg("max_height"));

  m.def(
      "joint_hwv",
      [](int d, const py::object& sig, int max_degree) {
        const HoweReport r = joint_hwv(d, sig_of(sig), max_degree);
        py::list entries;
        for (const HoweEntry& e : r.entries) {
          py::dict x;
          x["partition"] = e.partition.parts();
          x["flat"] = to_string(e.flat);
          x["degree"] = e.degree;
          x["verified"] = e.verified;
          entries.append(x);
        }
        py::dict out;
        out["entries"] = entries;
        out["failures"] = r.failures;
        return out;
      },
      py::arg("d"), py::arg("signature"), py::arg("max_degree"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
