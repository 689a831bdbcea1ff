#include "hommine/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace hommine {

std::strong_ordering compare(CodeView a, CodeView b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool is_valid_code(CodeView c) {
  if (c.empty() || c[0].depth != 0) return false;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i].depth < 1 || c[i].depth > c[i - 1].depth + 1) return false;
  return true;
}

TreeView::TreeView(CodeView c) : parent(c.size(), -1), children(c.size()), end(c.size()), on_rightmost_path(c.size()) {
  std::vector<std::size_t> last_at_depth;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto d = c[i].depth;
    // Every open node at depth >= d closes here.
    while (last_at_depth.size() > d) {
      end[last_at_depth.back()] = i;
      last_at_depth.pop_back();
    }
    if (d > 0) {
      auto p = last_at_depth[d - 1];
      parent[i] = static_cast<int>(p);
      children[p].push_back(i);
    }
    last_at_depth.push_back(i);
  }
  for (auto v : last_at_depth) end[v] = c.size();
  rightmost_path = std::move(last_at_depth);
  for (auto v : rightmost_path) {
    on_rightmost_path[v] = true;
    if (!split_node && children[v].size() >= 2) split_node = v;
  }
}

std::optional<std::size_t> TreeView::left_sibling(std::size_t v) const {
  if (parent[v] < 0) return std::nullopt;
  const auto& sibs = children[parent[v]];
  auto it = std::find(sibs.begin(), sibs.end(), v);
  if (it == sibs.begin()) return std::nullopt;
  return *(it - 1);
}

std::size_t LabeledTree::add_node(int parent_node, LabelId l, EdgeLabelId e) {
  label.push_back(l);
  edge.push_back(parent_node < 0 ? kNoEdgeLabel : e);
  parent.push_back(parent_node);
  return label.size() - 1;
}

std::vector<std::vector<std::size_t>> LabeledTree::children() const {
  std::vector<std::vector<std::size_t>> out(size());
  for (std::size_t v = 1; v < size(); ++v) out[parent[v]].push_back(v);
  return out;
}

LabeledTree LabeledTree::from_code(CodeView c) {
  TreeView view(c);
  LabeledTree t;
  for (std::size_t i = 0; i < c.size(); ++i) t.add_node(view.parent[i], c[i].label, c[i].edge);
  return t;
}

namespace {

Code encode_subtree(const LabeledTree& t, const std::vector<std::vector<std::size_t>>& kids, std::size_t v,
                    std::uint32_t depth) {
  std::vector<Code> parts;
  parts.reserve(kids[v].size());
  for (auto ch : kids[v]) parts.push_back(encode_subtree(t, kids, ch, depth + 1));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Code out{make_token(depth, t.label[v], depth == 0 ? kNoEdgeLabel : t.edge[v])};
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

Code canonical_code(const LabeledTree& tree) {
  if (tree.size() == 0) return {};
  return encode_subtree(tree, tree.children(), 0, 0);
}

Code canonicalize(CodeView c) { return canonical_code(LabeledTree::from_code(c)); }

bool is_canonical(CodeView c) {
  TreeView view(c);
  for (std::size_t v = 0; v < view.size(); ++v) {
    const auto& kids = view.children[v];
    for (std::size_t k = 1; k < kids.size(); ++k) {
      // Siblings share their root path, so comparing the blocks suffices.
      auto a = c.subspan(kids[k - 1], view.end[kids[k - 1]] - kids[k - 1]);
      auto b = c.subspan(kids[k], view.end[kids[k]] - kids[k]);
      if (compare(a, b) < 0) return false;
    }
  }
  return true;
}

Code subtree_code(CodeView c, std::size_t v) {
  TreeView view(c);
  Code out;
  for (int a = view.parent[v]; a >= 0; a = view.parent[a]) out.push_back(c[a]);
  std::reverse(out.begin(), out.end());
  out.insert(out.end(), c.begin() + v, c.begin() + view.end[v]);
  return out;
}

std::optional<std::size_t> split_node(CodeView c) { return TreeView(c).split_node; }

Code remove_leftmost_subtree(CodeView c, std::size_t s) {
  TreeView view(c);
  const auto first = view.children.at(s).at(0);
  Code out(c.begin(), c.begin() + first);
  out.insert(out.end(), c.begin() + view.end[first], c.end());
  return out;
}

Code remove_subtree(CodeView c, std::size_t v) {
  TreeView view(c);
  Code out(c.begin(), c.begin() + v);
  out.insert(out.end(), c.begin() + view.end[v], c.end());
  return out;
}

std::string format_code(CodeView c, const Graph& g, bool edge_labels) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c[i].depth);
    out += ' ';
    if (edge_labels && i > 0) {
      out += c[i].edge == kNoEdgeLabel ? std::string("-") : g.edge_label_name(c[i].edge);
      out += ' ';
    }
    out += g.label_name(c[i].label);
  }
  return out;
}

Code parse_code(std::string_view text, const Graph& g, bool edge_labels) {
  std::istringstream in{std::string(text)};
  Code out;
  std::string depth_s;
  while (in >> depth_s) {
    Token t;
    try {
      std::size_t used = 0;
      auto d = std::stoul(depth_s, &used);
      if (used != depth_s.size()) throw std::invalid_argument(depth_s);
      t.depth = static_cast<std::uint32_t>(d);
    } catch (const std::exception&) {
      throw ParseError(0, "bad depth '" + depth_s + "' in code");
    }
    if (edge_labels && !out.empty()) {
      std::string e;
      if (!(in >> e)) throw ParseError(0, "missing edge label in code");
      if (e != "-") {
        auto id = g.find_edge_label(e);
        if (!id) throw ParseError(0, "unknown edge label '" + e + "'");
        t.edge = *id;
      }
    }
    std::string l;
    if (!(in >> l)) throw ParseError(0, "missing label in code");
    auto id = g.find_label(l);
    if (!id) throw ParseError(0, "unknown label '" + l + "'");
    t.label = *id;
    out.push_back(t);
  }
  if (!is_valid_code(out)) throw ParseError(0, "structurally invalid code");
  return out;
}

}  // namespace hommine
