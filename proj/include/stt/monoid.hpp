#pragma once

#include <optional>
#include <set>

#include "stt/minimize.hpp"

namespace stt {

// Element of the product monoid: a canonical minimal strongly synchronizing
// core, or the constant map onto one stream (held by its prime cycle root).
struct MonoidElement {
  int n = 2;
  bool constant = false;
  Word root;     // meaningful when constant
  Transducer t;  // meaningful otherwise

  bool operator==(const MonoidElement&) const = default;
};

MonoidElement monoid_identity(int n);
MonoidElement constant_element(int n, const Word& root);

// Canonical element of an arbitrary strongly synchronizing transducer.
MonoidElement to_element(const Transducer& t);

// Composite map, first factor applied first. Constants absorb on the right;
// a constant first factor yields the constant on its image's cycle root.
MonoidElement m_product(const MonoidElement& a, const MonoidElement& b);

// Synchronous composite without prefix shifting: weak_minimize of the core
// of the pair product. Both inputs synchronous strongly synchronizing.
Transducer spn_product(const Transducer& a, const Transducer& b);

// Circuits preserve output length, witnessed by an integer potential with
// pot(next(q,x)) = pot(q) + |out(q,x)| - 1 on every edge.
bool transducer_lipschitz(const Transducer& t);
bool is_lipschitz(const MonoidElement& e);

// Every state induces an injective map on streams; synchronous input.
bool states_injective(const Transducer& t);

struct ImageBasis {
  std::vector<Word> basis;  // minimal words whose cylinders fill the image
  bool clopen = true;       // false comes with an empty basis
};
ImageBasis image_basis(const Transducer& t, int q);

// Cylinder count of a state's image reduced mod n-1 into {1..n-1}; equal
// across states, which is verified. Requires clopen images.
int sig(const Transducer& t);

// Multiplicative closure mod n-1 of the divisors of n, in {1..n-1}.
std::set<int> divisor_subgroup(int n);

// Whether s fixes residue r under the scaling action mod n-1 (with 0 and
// n-1 identified).
bool stabilizer_check(long long s, long long r, int n);

// Least m <= bound with the m-th power equal to the identity.
std::optional<int> order_bounded(const MonoidElement& e, int bound);

}  // namespace stt
