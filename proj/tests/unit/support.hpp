#pragma once

#include <doctest.h>

#include <string>

#include "upqn/superweights.hpp"

namespace testing_support {

inline upqn::Signature S(const char* text) { return upqn::parse_signature(text); }
inline upqn::Weight W(const char* sig, const char* text) { return upqn::parse_weight(S(sig), text); }
inline upqn::Rational Q(const char* text) { return upqn::parse_rational(text); }

}  // namespace testing_support
