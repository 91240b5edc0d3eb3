#pragma once

#include "stt/annotate.hpp"
#include "stt/block_map.hpp"

namespace stt {

// The last letter of the block determines the output once the rest is fixed
// (right), resp. the first letter (left).
bool is_right_permutive(const BlockMap& f);
bool is_left_permutive(const BlockMap& f);

// Bi-infinite point x_i = period[i mod |period|].
struct PeriodicPoint {
  Word period;
};

// Same bi-infinite sequence; periods compare by primitive root.
bool points_equal(const PeriodicPoint& a, const PeriodicPoint& b);

// y_i = f(x_{i-width+1} .. x_i).
PeriodicPoint apply_block_map_periodic(const BlockMap& f, const PeriodicPoint& x);

// Image of a periodic point under an annotated element: the letter read at
// position i lands at position i + weight(state). Constants give their
// letter's fixed point.
PeriodicPoint act_periodic(const Annotated& e, const PeriodicPoint& x);

// Image letters at the positions of center inside the window context.center,
// where the forced states determine them; errors name the missing margin.
Word act_window(const Annotated& e, const Word& context, const Word& center);

// Sliding map plus shift power: action(x) = shift^shift applied to the
// sliding image of x.
struct AlignedBlockMap {
  long long shift = 0;
  BlockMap map;
};

// Total synthesis from the tiling of outputs; width is
// sync level + (max weight - min weight) + 1 and shift is the min weight.
AlignedBlockMap to_block_map(const Annotated& e);

// Image necklace of a prime circuit word: read gamma around its forced
// circuit and reduce the output to its necklace. Constants send everything
// to their root's necklace.
Word pi_word(const MonoidElement& e, const Word& gamma);
std::vector<std::pair<Word, Word>> pi_table(const MonoidElement& e, int k);

// Injectivity plus length-multiset preservation of the necklace map over
// all prime necklaces of length <= k.
bool pi_bijective_upto(const MonoidElement& e, int k);

// Search widths up to dmax for an inverse, certified by both annotated
// products equalling the identity pair. nullopt when none is found.
std::optional<Annotated> invert_automorphism(const Annotated& e, int dmax);

}  // namespace stt
