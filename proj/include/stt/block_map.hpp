#pragma once

#include "stt/words.hpp"

namespace stt {

// Total map from width-sized blocks over {0..n-1} to letters, stored as a
// table in radix-n block order.
struct BlockMap {
  int n = 2;
  int width = 1;
  std::vector<Letter> table;

  Letter apply(const Word& block) const;

  bool operator==(const BlockMap&) const = default;
};

}  // namespace stt
