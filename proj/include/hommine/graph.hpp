#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hommine {

using NodeId = std::uint32_t;
using LabelId = std::uint32_t;
using EdgeLabelId = std::int32_t;
using TxnId = std::uint32_t;

/// Edge label value for edges that carry no label.
inline constexpr EdgeLabelId kNoEdgeLabel = -1;

/// Malformed input text. Carries the 1-based line number when one applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Invalid option combination, detected before any mining work starts.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutEdge {
  NodeId target;
  EdgeLabelId label;
  bool operator==(const OutEdge&) const = default;
};

/// Immutable labeled directed multigraph.
///
/// Node labels are interned densely; labels declared as property labels
/// always receive the smallest ids. Successor lookups are served from a
/// label-partitioned index in which parallel edges are collapsed.
class Graph {
 public:
  std::size_t node_count() const { return node_labels_.size(); }
  std::size_t edge_count() const { return edge_targets_.size(); }
  std::size_t label_count() const { return label_names_.size(); }
  std::size_t edge_label_count() const { return edge_label_names_.size(); }
  std::size_t property_label_count() const { return property_label_count_; }

  LabelId label(NodeId v) const { return node_labels_[v]; }
  std::span<const LabelId> labels() const { return node_labels_; }
  std::span<const OutEdge> out_edges(NodeId v) const;

  /// Successors of `v` labeled `label`, ascending and deduplicated.
  std::span<const NodeId> successors_with_label(NodeId v, LabelId label) const;
  /// As above, restricted to edges labeled `edge` (kNoEdgeLabel selects
  /// unlabeled edges).
  std::span<const NodeId> successors_with_label(NodeId v, LabelId label, EdgeLabelId edge) const;
  std::span<const NodeId> nodes_with_label(LabelId label) const {
    if (label >= by_label_.size()) return {};
    return by_label_[label];
  }

  const std::string& label_name(LabelId l) const { return label_names_[l]; }
  std::optional<LabelId> find_label(std::string_view name) const;
  const std::string& edge_label_name(EdgeLabelId e) const { return edge_label_names_[e]; }
  std::optional<EdgeLabelId> find_edge_label(std::string_view name) const;
  bool is_property_label(LabelId l) const { return l < property_label_count_; }

  bool has_transactions() const { return !node_txn_.empty(); }
  TxnId txn(NodeId v) const { return node_txn_[v]; }
  std::size_t txn_count() const { return txn_names_.size(); }
  const std::string& txn_name(TxnId t) const { return txn_names_[t]; }

  /// True iff some directed cycle (self-loops included) exists.
  bool is_cyclic() const { return cyclic_; }

  bool operator==(const Graph& other) const;

 private:
  friend class GraphBuilder;

  struct Group {
    std::uint64_t key;
    std::uint32_t begin;
    std::uint32_t end;
  };
  struct Index {
    std::vector<std::uint32_t> node_offset;  // node -> first group
    std::vector<Group> groups;               // sorted by key within a node
    std::vector<NodeId> targets;
    std::span<const NodeId> find(NodeId v, std::uint64_t key) const;
  };

  std::vector<LabelId> node_labels_;
  std::vector<std::uint32_t> edge_offset_;
  std::vector<OutEdge> edge_targets_;
  std::vector<std::string> label_names_;
  std::vector<std::string> edge_label_names_;
  std::vector<std::string> txn_names_;
  std::vector<TxnId> node_txn_;
  std::vector<std::vector<NodeId>> by_label_;
  std::size_t property_label_count_ = 0;
  bool cyclic_ = false;
  Index label_index_;
  Index edge_label_index_;
};

/// Incremental construction of a Graph.
class GraphBuilder {
 public:
  NodeId add_node(std::string_view label);
  void add_edge(NodeId src, NodeId dst, std::optional<std::string_view> edge_label = std::nullopt);
  void set_txn(NodeId v, std::string_view txn);
  std::size_t node_count() const { return labels_.size(); }

  /// Property labels that occur in the graph get the lowest ids, in
  /// their own first-occurrence order; the rest follow in first-occurrence
  /// order. Throws ConfigError when some but not all nodes carry a
  /// transaction id.
  Graph build(std::span<const std::string> property_labels = {}) const;

 private:
  struct RawEdge {
    NodeId src;
    NodeId dst;
    EdgeLabelId label;
  };
  std::vector<std::string> labels_;
  std::vector<RawEdge> edges_;
  std::vector<std::string> edge_label_names_;
  std::unordered_map<std::string, EdgeLabelId> edge_label_ids_;
  std::vector<std::optional<std::string>> txns_;
};

/// Reads the line-oriented graph format:
///   v <id> <label> | e <src> <dst> [<edge-label>] | t <id> <txn> | # comment
Graph load_graph(std::istream& in, std::span<const std::string> property_labels = {});
Graph load_graph_file(const std::string& path, std::span<const std::string> property_labels = {});
Graph parse_graph(std::string_view text, std::span<const std::string> property_labels = {});

/// Writes `g` such that load_graph reproduces an identical Graph.
void write_graph(std::ostream& out, const Graph& g);

}  // namespace hommine
