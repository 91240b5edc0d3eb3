#pragma once

#include "stt/io.hpp"

// Shared sample machines, given in the text format so every test run also
// exercises the parser.

inline stt::Transducer min5_sample() {
  // 5-state length-preserving-on-circuits automorphism representative over
  // {0,1}; synchronizes at level 3 and carries weights {0,0,0,-1,-1}.
  return stt::parse_document_string(R"(
alphabet 2
states a0 a1 a2 a3 a4
edge a0 0 a0 0
edge a0 1 a1 1
edge a1 0 a3 -
edge a1 1 a4 -
edge a2 0 a0 0
edge a2 1 a2 1
edge a3 0 a0 1,0
edge a3 1 a1 0,1
edge a4 0 a0 0,0
edge a4 1 a2 1,1
)").t;
}

inline stt::Transducer sync6_sample() {
  // Synchronous 6-state machine equivalent to min5_sample after the pending
  // output prefixes are delivered; extent lengths 2,2,1,1,2,2.
  return stt::parse_document_string(R"(
alphabet 2
states d0 d1 d2 d3 d4 d5
edge d0 0 d0 0
edge d0 1 d1 0
edge d1 0 d3 0
edge d1 1 d2 0
edge d2 0 d0 1
edge d2 1 d4 1
edge d3 0 d5 1
edge d3 1 d1 1
edge d4 0 d5 1
edge d4 1 d4 1
edge d5 0 d0 1
edge d5 1 d1 1
)").t;
}

inline stt::Transducer necklace_swap_sample() {
  // Order-2 element over {0,1,2} exchanging the cycles of 1 and 001 and
  // fixing every other cycle; synchronizes at level 3, not Lipschitz.
  return stt::parse_document_string(R"(
alphabet 3
states q0 q1 q2 q5
edge q0 0 q1 -
edge q0 1 q0 0,0,1
edge q0 2 q0 2
edge q1 0 q2 -
edge q1 1 q0 0,1
edge q1 2 q0 0,2
edge q2 0 q5 0,0,0
edge q2 1 q0 1
edge q2 2 q0 0,0,2
edge q5 0 q5 0
edge q5 1 q0 1
edge q5 2 q0 2
)").t;
}

// Single-state machine applying a letter permutation.
inline stt::Transducer permutation_sample(int n, const std::vector<int>& img) {
  stt::Transducer t;
  t.n = n;
  t.names = {"p"};
  t.step_to.assign(n, 0);
  for (int x = 0; x < n; ++x) t.out.push_back({img[x]});
  return t;
}
