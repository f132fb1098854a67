#pragma once

namespace placement {

// Caps for the enumeration-facing operations. Anything beyond a cap is
// refused with Errc::size_limit instead of degrading into an open-ended
// computation. The variable universe itself is hard-capped at 64 (bitmask
// representation); these limits only tune how much of that range the
// enumerators accept.
struct EnumerationLimits {
  // Boards handed to position enumeration (transform, play).
  int max_board_vertices = 24;
  // Vertex count for face-family enumeration on a complex (f-vector,
  // minimal non-faces, Stanley-Reisner complex).
  int max_complex_vertices = 48;
  // Variable count for full powerset sweeps (strong-placement check walks
  // all 2^n subsets).
  int max_exhaustive_variables = 22;

  static EnumerationLimits with_board_cap(int cap) {
    EnumerationLimits limits;
    limits.max_board_vertices = cap;
    limits.max_complex_vertices = 2 * cap;
    return limits;
  }
};

}  // namespace placement
