#pragma once

#include "stt/monoid.hpp"

namespace stt {

// Integer weights on the carrier's states obeying
//   a[next(q,x)] = a[q] + |out(q,x)| - 1
// on every edge, or the infinite annotation carried by constants.
struct Annotation {
  bool infinite = false;
  std::vector<long long> values;

  bool operator==(const Annotation&) const = default;
};

struct Annotated {
  MonoidElement elem;
  Annotation ann;
};

bool validate_annotation(const Transducer& t, const std::vector<long long>& a);

// The unique state fixed by reading 0; strongly synchronizing cores have
// exactly one.
int zero_loop_state(const Transducer& t);

// Weight propagation from an anchor; nullopt when the edge rule conflicts
// (the transducer is not Lipschitz) or some state is unreachable.
std::optional<std::vector<long long>> propagate_annotation(const Transducer& t,
                                                           int anchor,
                                                           long long value);

// Zero at the state with the least forcing word, propagated.
std::vector<long long> canonical_annotation_of(const Transducer& t);
Annotation canonical_annotation(const MonoidElement& e);

// Zero at the zero-loop state, propagated.
Annotation zero_loop_annotation(const MonoidElement& e);

// Minimize p and weight each class by i + |extent|; the constant branch
// gets the infinite annotation. p must be synchronous.
Annotated annotation_from_extents(const Transducer& p, long long i);

// The shift-power decomposition map: the pair representing "shift i times
// after the sliding action of p".
Annotated phi(long long i, const Transducer& p);

Annotated asl_identity(int n);
bool asl_equal(const Annotated& a, const Annotated& b);

// Composite annotated element: the product carrier weighted by
// a(s) + b(t) + |extent(s,t)| at the class of (s, t). Constant branches
// absorb into the infinite annotation.
Annotated asl_product(const Annotated& a, const Annotated& b);

// Length of the extent at the (zero-loop, zero-loop) pair state of the raw
// product. Both inputs non-constant; throws when the pair state's extent is
// infinite.
long long cocycle_c(const MonoidElement& t, const MonoidElement& u);

// Checks that the section annotations bt, bu, btu reproduce the product
// annotation up to the shift c' = bt(q0) + bu(p0) + cocycle_c - btu(t0),
// and that c' - c equals d(t) + d(u) - d(tu) with d = value at the
// zero-loop state.
bool coboundary_check(const MonoidElement& t, const std::vector<long long>& bt,
                      const MonoidElement& u, const std::vector<long long>& bu,
                      const std::vector<long long>& btu);

// Whether n is not a proper integral power of a smaller integer.
bool splits(int n);

}  // namespace stt
