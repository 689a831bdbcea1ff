#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

#include "hommine/pattern.hpp"

namespace hommine {

/// Prefix tree over canonical codes explored by the miner.
///
/// A node stores the pattern spelled by its token path. Children are kept
/// in descending token order.
class Trie {
 public:
  struct Node {
    Token edge;
    Node* parent = nullptr;
    std::map<Token, std::unique_ptr<Node>, std::greater<>> children;
    std::size_t support = 0;
    bool is_core = false;
    bool has_core_descendant = false;  // self included
    bool stored = false;               // false for the virtual root
  };

  Trie();

  /// All proper prefixes of `c` must already be stored (std::logic_error
  /// otherwise). Re-inserting a code overwrites its metadata.
  void insert(CodeView c, std::size_t support, bool is_core);

  const Node* find(CodeView c) const;
  bool contains(CodeView c) const { return find(c) != nullptr; }

  /// Child tokens of the node spelled by `c`, descending; empty if absent.
  std::vector<Token> children_of(CodeView c) const;

  /// Drops the node spelled by `c` unless some stored pattern in its
  /// subtree is a core. Call once the search below `c` is finished.
  void prune_on_backtrack(CodeView c);

  /// Stored patterns currently held.
  std::size_t size() const { return size_; }
  /// Insertions of new patterns over the lifetime of the trie.
  std::size_t inserted_total() const { return inserted_total_; }

  /// Indented listing, one stored code per line, in enumeration order.
  void dump(std::ostream& out, const Graph& g, bool edge_labels = false) const;

 private:
  Node* locate(CodeView c) const;

  std::unique_ptr<Node> root_;
  std::size_t size_ = 0;
  std::size_t inserted_total_ = 0;
};

}  // namespace hommine
