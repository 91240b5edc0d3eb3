#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "stt/block_map.hpp"
#include "stt/transducer.hpp"

namespace stt {

// Text form of a transducer plus the optional initial state and state
// weights. Format, one directive per line, '#' starts a comment:
//   alphabet <n>
//   states <id> ...
//   initial <id>                  (optional)
//   edge <state> <letter> <target> <output>   (output: comma letters or -)
//   annot <state> <integer>       (all states or none)
struct Document {
  Transducer t;
  std::optional<int> initial;
  std::optional<std::vector<long long>> annot;
};

// Throws std::runtime_error with "line L, col C: ..." on malformed input;
// every (state, letter) pair must have exactly one edge.
Document parse_document(std::istream& in);
Document parse_document_string(const std::string& text);
Document load_document(const std::string& path);

std::string serialize_document(const Document& d);

// Graphviz digraph; edges are labelled "x|output", states show their weight
// when present.
std::string dot_export(const Document& d);

// Block map table file:
//   alphabet <n>
//   width <m>
//   shift <i>                     (optional)
//   entry <block> <letter>        (one per block, comma or digit form)
struct BlockMapDocument {
  BlockMap map;
  std::optional<long long> shift;
};

BlockMapDocument parse_block_map(std::istream& in);
BlockMapDocument load_block_map(const std::string& path);
std::string serialize_block_map(const BlockMap& f, std::optional<long long> shift);

}  // namespace stt
