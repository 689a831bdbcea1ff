#include "hommine/condense.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hommine/coreness.hpp"
#include "hommine/homomorphism.hpp"

namespace hommine {

Code merge_siblings(CodeView c, std::size_t v1, std::size_t v2) {
  if (v1 >= c.size() || v2 >= c.size() || v1 == v2) throw std::invalid_argument("merge_siblings: bad node index");
  TreeView view(c);
  if (view.parent[v1] < 0 || view.parent[v1] != view.parent[v2])
    throw std::invalid_argument("merge_siblings: nodes are not siblings");
  if (c[v1].label != c[v2].label || c[v1].edge != c[v2].edge)
    throw std::invalid_argument("merge_siblings: siblings carry different labels");

  // v2 disappears; its children hang below v1.
  LabeledTree t;
  std::vector<int> index(c.size(), -1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == v2) continue;
    index[i] = static_cast<int>(t.label.size());
    t.label.push_back(c[i].label);
    t.edge.push_back(c[i].edge);
    t.parent.push_back(-1);
  }
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (i == v2) continue;
    auto p = static_cast<std::size_t>(view.parent[i]);
    if (p == v2) p = v1;
    t.parent[index[i]] = index[p];
  }
  return reduce_to_core(canonical_code(t));
}

std::vector<Code> sibling_merges(CodeView c) {
  std::vector<Code> out;
  TreeView view(c);
  for (std::size_t v = 0; v < view.size(); ++v) {
    const auto& kids = view.children[v];
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j)
        if (c[kids[i]].label == c[kids[j]].label && c[kids[i]].edge == c[kids[j]].edge)
          out.push_back(merge_siblings(c, kids[i], kids[j]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Code> leaf_removals(CodeView c) {
  std::vector<Code> out;
  if (c.size() <= 1) return out;
  TreeView view(c);
  for (std::size_t v = 1; v < view.size(); ++v)
    if (view.children[v].empty()) out.push_back(reduce_to_core(remove_subtree(c, v)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<Code> one_node_extensions(CodeView c, const Graph& g, bool edge_labels) {
  std::vector<Code> out;
  const auto base = LabeledTree::from_code(c);
  for (std::size_t v = 0; v < c.size(); ++v) {
    for (LabelId l = 0; l < g.label_count(); ++l) {
      std::vector<EdgeLabelId> edges{kNoEdgeLabel};
      if (edge_labels)
        for (std::size_t e = 0; e < g.edge_label_count(); ++e) edges.push_back(static_cast<EdgeLabelId>(e));
      for (auto e : edges) {
        auto t = base;
        t.add_node(static_cast<int>(v), l, e);
        out.push_back(reduce_to_core(canonical_code(t)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<CondensedPattern> condense(const std::vector<Pattern>& ps, const Graph& g, const ConstraintConfig& cfg,
                                       const CondenseOptions& opts) {
  std::vector<CondensedPattern> out;
  out.reserve(ps.size());
  std::map<Code, std::size_t> index;
  for (const auto& p : ps) {
    index.emplace(p.code, out.size());
    out.push_back({p.code, p.support, true, true});
  }

  // Generalizations by leaf removal.
  for (const auto& p : ps) {
    for (const auto& q : leaf_removals(p.code)) {
      auto it = index.find(q);
      if (it == index.end() || q == p.code) continue;
      auto& gen = out[it->second];
      gen.maximal = false;
      if (gen.support == p.support) gen.closed = false;
    }
  }

  // Merges, and with opts.direct_extensions all one-node extensions,
  // evaluated against the graph.
  auto judge = [&](CondensedPattern& p, const Code& spec) {
    if (spec == p.code) return;
    std::size_t sup = 0;
    if (auto it = index.find(spec); it != index.end()) {
      p.maximal = false;
      if (out[it->second].support == p.support) p.closed = false;
      return;
    }
    if (!satisfies_all(spec, g, cfg, &sup)) return;
    p.maximal = false;
    if (sup == p.support) p.closed = false;
  };
  for (auto& p : out) {
    for (const auto& m : sibling_merges(p.code)) {
      if (m == p.code) continue;
      // Merges keep root paths and property children, so an equally
      // supported merge satisfies cfg.
      const auto sup = support(m, g, cfg.support_mode, cfg.edge_labels);
      if (sup == p.support) p.closed = p.maximal = false;
      judge(p, m);
    }
    if (opts.direct_extensions)
      for (const auto& e : one_node_extensions(p.code, g, cfg.edge_labels)) judge(p, e);
  }
  return out;
}

std::vector<Pattern> filter_closed(const std::vector<Pattern>& ps, const Graph& g, const ConstraintConfig& cfg,
                                   const CondenseOptions& opts) {
  std::vector<Pattern> out;
  for (auto& c : condense(ps, g, cfg, opts))
    if (c.closed) out.push_back({std::move(c.code), c.support});
  return out;
}

std::vector<Pattern> filter_maximal(const std::vector<Pattern>& ps, const Graph& g, const ConstraintConfig& cfg,
                                    const CondenseOptions& opts) {
  std::vector<Pattern> out;
  for (auto& c : condense(ps, g, cfg, opts))
    if (c.maximal) out.push_back({std::move(c.code), c.support});
  return out;
}

}  // namespace hommine
