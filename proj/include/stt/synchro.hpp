#pragma once

#include <optional>

#include "stt/transducer.hpp"

namespace stt {

// Smallest k at which every length-k input word forces a unique state,
// regardless of where reading starts. Found by driving the family {Q}
// under single-letter reads; nullopt when the family revisits a value
// before collapsing to singletons.
std::optional<int> sync_level(const Transducer& t);

bool is_strongly_synchronizing(const Transducer& t);

// State forced by w, using its length-level suffix. |w| must be >= level.
int forced_state(const Transducer& t, int level, const Word& w);

// Lexicographically least length-level word forcing each state; states no
// length-level word forces get nullopt.
std::vector<std::optional<Word>> forcing_words(const Transducer& t, int level);

// Subtransducer on the states some long word forces. Throws when t is not
// strongly synchronizing.
Transducer core(const Transducer& t);

struct CoreResult {
  Transducer t;
  std::vector<int> from;  // core state -> original state index
};
CoreResult core_with_map(const Transducer& t);

bool is_core(const Transducer& t);

// States reordered by least forcing word and renamed q0, q1, ... The result
// is a canonical representative of the isomorphism class; input must be a
// strongly synchronizing core.
Transducer canonical_form(const Transducer& t);

struct CanonicalResult {
  Transducer t;
  std::vector<int> rank;  // original state -> canonical index
};
CanonicalResult canonical_with_map(const Transducer& t);

bool isomorphic(const Transducer& a, const Transducer& b);

}  // namespace stt
