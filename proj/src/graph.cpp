#include "hommine/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace hommine {

namespace {

std::uint64_t edge_key(LabelId label, EdgeLabelId edge) {
  // kNoEdgeLabel maps to 0 so unlabeled edges sort first.
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(edge + 1)) << 32) | label;
}

struct Entry {
  std::uint64_t key;
  NodeId target;
  auto operator<=>(const Entry&) const = default;
};

template <typename KeyFn>
void build_index(std::size_t n, std::span<const std::uint32_t> offsets, std::span<const OutEdge> edges,
                 KeyFn key_of, auto& index) {
  index.node_offset.assign(n + 1, 0);
  std::vector<Entry> scratch;
  for (NodeId v = 0; v < n; ++v) {
    index.node_offset[v] = static_cast<std::uint32_t>(index.groups.size());
    scratch.clear();
    for (auto i = offsets[v]; i < offsets[v + 1]; ++i) scratch.push_back({key_of(edges[i]), edges[i].target});
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    for (std::size_t i = 0; i < scratch.size();) {
      auto begin = static_cast<std::uint32_t>(index.targets.size());
      std::size_t j = i;
      for (; j < scratch.size() && scratch[j].key == scratch[i].key; ++j) index.targets.push_back(scratch[j].target);
      index.groups.push_back({scratch[i].key, begin, static_cast<std::uint32_t>(index.targets.size())});
      i = j;
    }
  }
  index.node_offset[n] = static_cast<std::uint32_t>(index.groups.size());
}

bool detect_cycle(std::size_t n, std::span<const std::uint32_t> offsets, std::span<const OutEdge> edges) {
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(n, kWhite);
  std::vector<std::pair<NodeId, std::uint32_t>> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (colour[s] != kWhite) continue;
    colour[s] = kGrey;
    stack.push_back({s, offsets[s]});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == offsets[v + 1]) {
        colour[v] = kBlack;
        stack.pop_back();
        continue;
      }
      NodeId w = edges[next++].target;
      if (colour[w] == kGrey) return true;
      if (colour[w] == kWhite) {
        colour[w] = kGrey;
        stack.push_back({w, offsets[w]});
      }
    }
  }
  return false;
}

}  // namespace

std::span<const NodeId> Graph::Index::find(NodeId v, std::uint64_t key) const {
  auto first = groups.begin() + node_offset[v];
  auto last = groups.begin() + node_offset[v + 1];
  auto it = std::lower_bound(first, last, key, [](const Group& g, std::uint64_t k) { return g.key < k; });
  if (it == last || it->key != key) return {};
  return {targets.data() + it->begin, targets.data() + it->end};
}

std::span<const OutEdge> Graph::out_edges(NodeId v) const {
  return {edge_targets_.data() + edge_offset_[v], edge_targets_.data() + edge_offset_[v + 1]};
}

std::span<const NodeId> Graph::successors_with_label(NodeId v, LabelId label) const {
  return label_index_.find(v, label);
}

std::span<const NodeId> Graph::successors_with_label(NodeId v, LabelId label, EdgeLabelId edge) const {
  return edge_label_index_.find(v, edge_key(label, edge));
}

std::optional<LabelId> Graph::find_label(std::string_view name) const {
  for (LabelId l = 0; l < label_names_.size(); ++l)
    if (label_names_[l] == name) return l;
  return std::nullopt;
}

std::optional<EdgeLabelId> Graph::find_edge_label(std::string_view name) const {
  for (std::size_t l = 0; l < edge_label_names_.size(); ++l)
    if (edge_label_names_[l] == name) return static_cast<EdgeLabelId>(l);
  return std::nullopt;
}

bool Graph::operator==(const Graph& o) const {
  return std::tie(node_labels_, edge_offset_, edge_targets_, label_names_, edge_label_names_, txn_names_, node_txn_,
                  property_label_count_) == std::tie(o.node_labels_, o.edge_offset_, o.edge_targets_, o.label_names_,
                                                     o.edge_label_names_, o.txn_names_, o.node_txn_,
                                                     o.property_label_count_);
}

NodeId GraphBuilder::add_node(std::string_view label) {
  labels_.emplace_back(label);
  txns_.emplace_back();
  return static_cast<NodeId>(labels_.size() - 1);
}

void GraphBuilder::add_edge(NodeId src, NodeId dst, std::optional<std::string_view> edge_label) {
  if (src >= labels_.size() || dst >= labels_.size()) throw std::out_of_range("edge endpoint out of range");
  EdgeLabelId id = kNoEdgeLabel;
  if (edge_label) {
    auto [it, fresh] = edge_label_ids_.try_emplace(std::string(*edge_label),
                                                   static_cast<EdgeLabelId>(edge_label_names_.size()));
    if (fresh) edge_label_names_.emplace_back(*edge_label);
    id = it->second;
  }
  edges_.push_back({src, dst, id});
}

void GraphBuilder::set_txn(NodeId v, std::string_view txn) { txns_.at(v) = std::string(txn); }

Graph GraphBuilder::build(std::span<const std::string> property_labels) const {
  Graph g;
  const std::size_t n = labels_.size();

  std::vector<std::string> order;
  std::unordered_map<std::string, bool> seen;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& l : labels_) {
      bool is_prop = std::find(property_labels.begin(), property_labels.end(), l) != property_labels.end();
      if (is_prop != (pass == 0) || seen.count(l)) continue;
      seen[l] = true;
      order.push_back(l);
    }
    if (pass == 0) g.property_label_count_ = order.size();
  }
  std::unordered_map<std::string, LabelId> label_id;
  for (LabelId i = 0; i < order.size(); ++i) label_id[order[i]] = i;
  g.label_names_ = std::move(order);
  g.node_labels_.reserve(n);
  for (const auto& l : labels_) g.node_labels_.push_back(label_id.at(l));

  // CSR by source, stable in insertion order; edge labels re-interned in
  // that order so that writing and re-reading reproduces the ids.
  std::vector<RawEdge> sorted = edges_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const RawEdge& a, const RawEdge& b) { return a.src < b.src; });
  std::vector<EdgeLabelId> remap(edge_label_names_.size(), kNoEdgeLabel);
  g.edge_offset_.assign(n + 1, 0);
  for (const auto& e : sorted) {
    EdgeLabelId id = kNoEdgeLabel;
    if (e.label != kNoEdgeLabel) {
      if (remap[e.label] == kNoEdgeLabel) {
        remap[e.label] = static_cast<EdgeLabelId>(g.edge_label_names_.size());
        g.edge_label_names_.push_back(edge_label_names_[e.label]);
      }
      id = remap[e.label];
    }
    g.edge_targets_.push_back({e.dst, id});
    ++g.edge_offset_[e.src + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.edge_offset_[v + 1] += g.edge_offset_[v];

  std::size_t with_txn = std::count_if(txns_.begin(), txns_.end(), [](const auto& t) { return t.has_value(); });
  if (with_txn != 0 && with_txn != n) throw ConfigError("transaction ids must be given for every node or for none");
  if (with_txn != 0) {
    std::unordered_map<std::string, TxnId> txn_id;
    for (const auto& t : txns_) {
      auto [it, fresh] = txn_id.try_emplace(*t, static_cast<TxnId>(g.txn_names_.size()));
      if (fresh) g.txn_names_.push_back(*t);
      g.node_txn_.push_back(it->second);
    }
  }

  g.by_label_.assign(g.label_names_.size(), {});
  for (NodeId v = 0; v < n; ++v) g.by_label_[g.node_labels_[v]].push_back(v);

  build_index(n, g.edge_offset_, g.edge_targets_, [&](const OutEdge& e) -> std::uint64_t {
    return g.node_labels_[e.target];
  }, g.label_index_);
  build_index(n, g.edge_offset_, g.edge_targets_, [&](const OutEdge& e) {
    return edge_key(g.node_labels_[e.target], e.label);
  }, g.edge_label_index_);
  g.cyclic_ = detect_cycle(n, g.edge_offset_, g.edge_targets_);
  return g;
}

Graph load_graph(std::istream& in, std::span<const std::string> property_labels) {
  GraphBuilder builder;
  std::unordered_map<std::string, NodeId> ids;
  std::string line;
  std::size_t lineno = 0;
  auto lookup = [&](const std::string& id) {
    auto it = ids.find(id);
    if (it == ids.end()) throw ParseError(lineno, "reference to undeclared node '" + id + "'");
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string f; fields >> f;) args.push_back(std::move(f));
    if (kind == "v") {
      if (args.size() != 2) throw ParseError(lineno, "expected 'v <id> <label>'");
      if (ids.count(args[0])) throw ParseError(lineno, "duplicate node id '" + args[0] + "'");
      ids[args[0]] = builder.add_node(args[1]);
    } else if (kind == "e") {
      if (args.size() != 2 && args.size() != 3) throw ParseError(lineno, "expected 'e <src> <dst> [<edge-label>]'");
      NodeId src = lookup(args[0]);
      NodeId dst = lookup(args[1]);
      if (args.size() == 3)
        builder.add_edge(src, dst, args[2]);
      else
        builder.add_edge(src, dst);
    } else if (kind == "t") {
      if (args.size() != 2) throw ParseError(lineno, "expected 't <id> <txn>'");
      builder.set_txn(lookup(args[0]), args[1]);
    } else {
      throw ParseError(lineno, "unknown line kind '" + kind + "'");
    }
  }
  return builder.build(property_labels);
}

Graph load_graph_file(const std::string& path, std::span<const std::string> property_labels) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_graph(in, property_labels);
}

Graph parse_graph(std::string_view text, std::span<const std::string> property_labels) {
  std::istringstream in{std::string(text)};
  return load_graph(in, property_labels);
}

void write_graph(std::ostream& out, const Graph& g) {
  for (NodeId v = 0; v < g.node_count(); ++v) out << "v " << v << ' ' << g.label_name(g.label(v)) << '\n';
  if (g.has_transactions())
    for (NodeId v = 0; v < g.node_count(); ++v) out << "t " << v << ' ' << g.txn_name(g.txn(v)) << '\n';
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const auto& e : g.out_edges(v)) {
      out << "e " << v << ' ' << e.target;
      if (e.label != kNoEdgeLabel) out << ' ' << g.edge_label_name(e.label);
      out << '\n';
    }
  }
}

}  // namespace hommine
