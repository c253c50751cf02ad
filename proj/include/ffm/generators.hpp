#pragma once

#include "ffm/pomdp.hpp"

namespace ffm {

/// Two states, two deterministic actions (stay, swap), one observation.
/// Reward 1 for staying in s1, 0 otherwise; start is a point mass on s0.
/// The minimal instance where memory must act as a clock: no 1-memory
/// policy scores above 0 at horizon 2, while two memory states reach 1.
Pomdp gen_clockwork();

/// Corridor with a hidden signal g in {A, B}, revealed by the observation
/// at position 0 only. Advancing walks positions 0..n+1; committing at the
/// far end pays 1 iff the committed letter matches g, and any commit drops
/// into an absorbing terminal. Carrying the signal across the corridor
/// takes one bit of memory, so the 1-memory optimum is 0.5 and the
/// 2-memory optimum is 1 at horizon n+2. States: 2(n+2) + 1.
Pomdp gen_signal_corridor(int hallway_length);

} // namespace ffm
