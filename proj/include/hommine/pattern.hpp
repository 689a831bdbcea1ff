#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hommine/graph.hpp"

namespace hommine {

/// One node of a depth-first tree encoding.
///
/// Field order defines the token order: a deeper token is greater; at
/// equal depth the edge label decides, then the node label.
struct Token {
  std::uint32_t depth = 0;
  EdgeLabelId edge = kNoEdgeLabel;
  LabelId label = 0;

  auto operator<=>(const Token&) const = default;
};

inline Token make_token(std::uint32_t depth, LabelId label, EdgeLabelId edge = kNoEdgeLabel) {
  return Token{depth, edge, label};
}

/// Depth/label sequence of an ordered rooted tree. Ordered
/// lexicographically; a proper prefix is less than its extensions.
using Code = std::vector<Token>;
using CodeView = std::span<const Token>;

std::strong_ordering compare(CodeView a, CodeView b);

/// Depth of the first token is 0 and no token is more than one level
/// deeper than its predecessor.
bool is_valid_code(CodeView c);

/// Structural view of a code. Node i is tokens[i].
struct TreeView {
  explicit TreeView(CodeView c);

  std::size_t size() const { return parent.size(); }
  bool is_path() const { return !split_node.has_value(); }
  /// One past the last token of node v's subtree block.
  std::size_t subtree_end(std::size_t v) const { return end[v]; }
  /// Sibling immediately to the left of v, if any.
  std::optional<std::size_t> left_sibling(std::size_t v) const;

  std::vector<int> parent;  // -1 for the root
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> end;
  std::vector<std::size_t> rightmost_path;  // root first
  std::vector<bool> on_rightmost_path;
  std::optional<std::size_t> split_node;
};

/// Unordered labeled rooted tree. Node 0 is the root.
struct LabeledTree {
  std::vector<LabelId> label;
  std::vector<EdgeLabelId> edge;  // edge from the parent; kNoEdgeLabel at the root
  std::vector<int> parent;        // -1 at the root

  std::size_t add_node(int parent_node, LabelId l, EdgeLabelId e = kNoEdgeLabel);
  std::size_t size() const { return label.size(); }
  std::vector<std::vector<std::size_t>> children() const;

  static LabeledTree from_code(CodeView c);
};

/// Greatest code over all depth-first orders of `tree`.
Code canonical_code(const LabeledTree& tree);
/// Canonical code of the tree encoded (in any order) by `c`.
Code canonicalize(CodeView c);

/// True iff every left sibling's subtree code is >= its right sibling's.
bool is_canonical(CodeView c);

/// Root path to v followed by v's descendants, depths preserved.
Code subtree_code(CodeView c, std::size_t v);

std::optional<std::size_t> split_node(CodeView c);

/// Deletes the token block of the first child subtree of `s`.
Code remove_leftmost_subtree(CodeView c, std::size_t s);

/// Deletes the token block of the subtree rooted at `v` (v != root).
Code remove_subtree(CodeView c, std::size_t v);

/// Space-separated rendering: "0 a 1 b 2 c". With edge labels each
/// non-root token is "depth edge label", "-" standing for no edge label.
std::string format_code(CodeView c, const Graph& g, bool edge_labels = false);
Code parse_code(std::string_view text, const Graph& g, bool edge_labels = false);

}  // namespace hommine
