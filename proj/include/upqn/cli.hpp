#pragma once

// Command-line front end. Subcommands: classify, scan, gram, howe, selftest.
//
// Exit codes: 0 success, 1 selftest/howe failure, 2 input or precondition error,
// 3 negative Gram certificate.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "upqn/rational.hpp"
#include "upqn/superweights.hpp"

namespace upqn {

struct AxisRange {
  Rational lo;
  Rational hi;
  Rational step = 1;

  [[nodiscard]] std::vector<Rational> points() const;
};

/// Scan ranges in weight layout, e.g. "-3:0,0:2;0:2:1/2". A bare value is a one-point range.
std::vector<AxisRange> parse_scan_ranges(const Signature& sig, std::string_view text);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

/// Largest monomial count howe accepts.
inline constexpr std::size_t kHoweMonomialLimit = 200000;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace upqn
