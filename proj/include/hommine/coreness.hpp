#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "hommine/pattern.hpp"
#include "hommine/trie.hpp"

namespace hommine {

struct CoreVerdict {
  bool is_core = true;
  /// The first reducing sibling pair in DFS order; present iff !is_core.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

inline constexpr std::size_t kCoreOracleCap = 64;

/// Sibling-pair test: a tree is a core iff no sibling subtree maps
/// homomorphically into another. Throws OracleCapError above `cap` nodes.
CoreVerdict is_core_bruteforce(CodeView c, std::size_t cap = kCoreOracleCap);

/// The same test with injective sibling containment.
bool is_core_iso_reading(CodeView c);

/// Core test for a pattern reached by the miner. Paths are cores; else
/// the pattern obtained by removing the split node's leftmost subtree is
/// looked up in `trie`. A non-core ancestor makes the pattern non-core;
/// otherwise the pattern is a core iff the rightmost subtree of the split
/// node does not map into its leftmost subtree.
/// Throws std::logic_error when the ancestor is not in the trie.
bool is_core_incremental(CodeView c, const TreeView& view, const Trie& trie);
bool is_core_incremental(CodeView c, const Trie& trie);

/// True iff two siblings that are both off the rightmost path reduce one
/// another; no extension of such a code is a core.
bool unavoidably_reducible(CodeView c);
bool unavoidably_reducible(CodeView c, const TreeView& view);

/// Incremental form for a child of an avoidably reducible parent: the new
/// node creates unavoidable reducibility iff the parent was not a core and
/// the new node hangs from the parent's split node or above it.
bool unavoidably_reducible_incremental(bool parent_is_core, std::optional<std::uint32_t> parent_split_depth,
                                       const Token& added);

/// Deletes reducible sibling subtrees (always the DFS-latest one first)
/// until a core remains; returns its canonical code. Accepts any
/// structurally valid code, canonical or not.
Code reduce_to_core(CodeView c);

}  // namespace hommine
