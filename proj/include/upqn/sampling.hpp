#pragma once

// Seeded random weights for property sweeps. Entries are small multiples of 1/2
// (sometimes 1/3) so that the boundary equalities of the classifier are hit often.

#include <cstdint>
#include <random>

#include "upqn/superweights.hpp"

namespace upqn {

using Rng = std::mt19937_64;

/// A Phi_c^+-dominant weight: each of the gl_p, gl_q, gl_n blocks is a random start
/// followed by non-increasing integer steps in {0,1,2}.
Weight random_dominant_weight(const Signature& sig, Rng& rng, bool integral = false, long spread = 4);

/// A uniformly chosen signature with p, q, n in [lo, hi].
Signature random_signature(Rng& rng, int lo, int hi);

}  // namespace upqn
