#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stt/block_map.hpp"
#include "stt/words.hpp"

namespace stt {

// Complete deterministic letter-to-word transducer over {0..n-1}, no
// distinguished start state. Transitions and outputs are total, indexed by
// state * n + letter.
struct Transducer {
  int n = 2;
  std::vector<std::string> names;
  std::vector<int> step_to;
  std::vector<Word> out;

  int states() const { return static_cast<int>(names.size()); }
  int next(int q, Letter x) const { return step_to[q * n + x]; }
  const Word& output(int q, Letter x) const { return out[q * n + x]; }

  bool synchronous() const;
  int max_output_len() const;
  int state_index(const std::string& name) const;  // -1 when absent

  bool operator==(const Transducer&) const = default;
};

// Equality of transition and output structure, state names ignored.
bool same_shape(const Transducer& a, const Transducer& b);

// Structural problems as report lines; empty means valid. Covers array
// sizes, target and letter ranges, duplicate names, and rejects cycles that
// read forever while writing nothing.
std::vector<std::string> validate(const Transducer& t);

// Throws std::invalid_argument with the first report line.
void require_valid(const Transducer& t);

// State reached and output accumulated reading w from q.
std::pair<int, Word> run(const Transducer& t, int q, const Word& w);

// Pair product: the first factor's output word is fed through the second.
// State (p, q) gets index p * u.states() + q.
Transducer product_raw(const Transducer& t, const Transducer& u);

// States are the words of length m, edge a0..a_{m-1} --x--> a1..a_{m-1}x.
// Outputs are left empty for callers to fill in.
Transducer de_bruijn(int n, int m);

Transducer identity_transducer(int n);
Transducer shift_transducer(int n);

// Single state writing x on every input letter.
Transducer constant_transducer(int n, const Word& x);

// f has width m+1; reads on de_bruijn(n, m) and outputs f(state . letter).
Transducer transducer_from_block_map(const BlockMap& f);

// Defined when every state's letter-to-output-letter map is a bijection;
// swaps input and output on each edge. nullopt otherwise.
std::optional<Transducer> invert_synchronous(const Transducer& t);

}  // namespace stt
