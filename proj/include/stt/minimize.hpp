#pragma once

#include "stt/synchro.hpp"

namespace stt {

// Longest common prefix of everything a state can ever emit: a finite word,
// or (when the state's image is a single stream) the cycle root of that
// stream.
struct Extent {
  bool finite = true;
  Word value;

  bool operator==(const Extent&) const = default;
};

std::vector<Extent> extents(const Transducer& t);
Extent extent(const Transducer& t, int q);

// Direct fixed-depth definition: lcp of run outputs over all length-d
// inputs. Exponential in d; oracle and diagnostics only.
Word lcp_at_depth(const Transducer& t, int q, int d);

// Output of w from q extended by the landing state's extent. Throws when an
// infinite extent makes the value a stream.
Word big_lambda(const Transducer& t, int q, const Word& w);

struct Initial {
  Transducer t;
  int start = 0;
};

// Fresh start state replaying q with every pending common prefix delivered
// as early as possible: run(res.t, res.start, w) == big_lambda(t, q, w).
// All extents must be finite.
Initial remove_incomplete_response(const Transducer& t, int q);

// Whether two states induce the same map on streams.
bool omega_equivalent(const Transducer& t, int p, int q);

struct MinimizeResult {
  bool constant = false;
  Word constant_root;                 // prime necklace when constant
  Transducer minimal;                 // canonical form; single state when constant
  std::vector<int> kappa;             // input state -> minimal state
  std::vector<Extent> state_extents;  // extents of the input's states
};

// Minimal representative of a strongly synchronizing core's stream
// semantics: deliver pending prefixes, merge equal-behaviour states,
// canonicalize. Machines whose image is one stream come back as the
// constant on the stream's cycle root.
MinimizeResult minimize(const Transducer& t);

// Merge states with identical letter behaviour, no prefix shifting;
// synchronous strongly synchronizing input, canonicalized result.
Transducer weak_minimize(const Transducer& t);

// Classes of exact-output bisimilarity (Moore refinement).
std::vector<int> behaviour_classes(const Transducer& t);

}  // namespace stt
