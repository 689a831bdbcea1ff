// Shared helpers for the test binaries: fixture loading, seeded random
// generators and brute-force oracles that do not reuse library logic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hommine/graph.hpp"
#include "hommine/pattern.hpp"

#ifndef HOMMINE_FIXTURE_DIR
#error "HOMMINE_FIXTURE_DIR must be defined"
#endif

namespace testutil {

using namespace hommine;

inline std::string fixture(const std::string& name) { return std::string(HOMMINE_FIXTURE_DIR) + "/" + name; }

inline Graph load_fixture(const std::string& name, std::vector<std::string> props = {}) {
  return load_graph_file(fixture(name), props);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : e_(seed) {}
  std::size_t below(std::size_t n) { return n ? static_cast<std::size_t>(e_() % n) : 0; }
  bool chance(double p) { return static_cast<double>(e_() % 1000000) < p * 1000000.0; }
  std::mt19937_64& engine() { return e_; }

 private:
  std::mt19937_64 e_;
};

inline std::string letter(std::size_t i) { return std::string(1, static_cast<char>('A' + i)); }

/// Random digraph; with `txns` > 0 every node gets one of that many
/// transaction ids. Self loops allowed with probability density / 2.
inline Graph random_graph(Rng& rng, std::size_t nodes, std::size_t labels, double density, std::size_t txns = 0,
                          std::size_t edge_labels = 0) {
  GraphBuilder b;
  for (std::size_t i = 0; i < nodes; ++i) b.add_node(letter(rng.below(labels)));
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = 0; j < nodes; ++j) {
      if (!rng.chance(i == j ? density / 2 : density)) continue;
      if (edge_labels) {
        b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j), "e" + std::to_string(rng.below(edge_labels)));
      } else {
        b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  if (txns)
    for (std::size_t i = 0; i < nodes; ++i) b.set_txn(static_cast<NodeId>(i), "g" + std::to_string(rng.below(txns)));
  return b.build();
}

/// Random labeled tree as parent/label arrays: node i > 0 hangs below a
/// uniformly chosen earlier node.
inline LabeledTree random_tree(Rng& rng, std::size_t nodes, std::size_t labels, std::size_t edge_labels = 0) {
  LabeledTree t;
  t.add_node(-1, static_cast<LabelId>(rng.below(labels)));
  for (std::size_t i = 1; i < nodes; ++i) {
    const auto e = edge_labels ? static_cast<EdgeLabelId>(rng.below(edge_labels + 1)) - 1 : kNoEdgeLabel;
    t.add_node(static_cast<int>(rng.below(i)), static_cast<LabelId>(rng.below(labels)), e);
  }
  return t;
}

/// Depth-first code of `t` with children visited in a random order.
inline Code random_order_code(Rng& rng, const LabeledTree& t) {
  const auto kids = t.children();
  Code out;
  std::function<void(std::size_t, std::uint32_t)> visit = [&](std::size_t v, std::uint32_t d) {
    out.push_back(make_token(d, t.label[v], t.edge[v]));
    auto order = kids[v];
    std::shuffle(order.begin(), order.end(), rng.engine());
    for (auto c : order) visit(c, d + 1);
  };
  visit(0, 0);
  return out;
}

/// Parent array of a depth-first code, by a direct stack walk.
inline std::vector<int> parents_of(const Code& c) {
  std::vector<int> parent(c.size(), -1);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < c.size(); ++i) {
    while (stack.size() > c[i].depth) stack.pop_back();
    if (!stack.empty()) parent[i] = static_cast<int>(stack.back());
    stack.push_back(i);
  }
  return parent;
}

/// Every depth-first code of the tree encoded by `c` (all child orders).
inline std::vector<Code> all_orders(const Code& c) {
  const auto parent = parents_of(c);
  std::vector<std::vector<std::size_t>> kids(c.size());
  for (std::size_t i = 1; i < c.size(); ++i) kids[parent[i]].push_back(i);
  std::function<std::vector<Code>(std::size_t)> rec = [&](std::size_t v) {
    std::vector<std::vector<Code>> per_child;
    for (auto k : kids[v]) per_child.push_back(rec(k));
    std::vector<std::size_t> perm(kids[v].size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Code> result;
    do {
      std::vector<Code> partial{Code{c[v]}};
      for (auto idx : perm) {
        std::vector<Code> next;
        for (const auto& pre : partial)
          for (const auto& suf : per_child[idx]) {
            Code x = pre;
            x.insert(x.end(), suf.begin(), suf.end());
            next.push_back(std::move(x));
          }
        partial = std::move(next);
      }
      result.insert(result.end(), partial.begin(), partial.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
  };
  return rec(0);
}

inline Code brute_canonical(const Code& c) {
  auto orders = all_orders(c);
  return *std::max_element(orders.begin(), orders.end());
}

/// Calls `fn(map)` for every root-preserving homomorphism from pattern `p`
/// into pattern `q` (tree to tree). Stops early when fn returns false.
inline void for_each_tree_hom(const Code& p, const Code& q, const std::function<bool(const std::vector<int>&)>& fn) {
  const auto pp = parents_of(p);
  const auto qp = parents_of(q);
  if (p.empty() || q.empty() || p[0].label != q[0].label) return;
  std::vector<int> map(p.size(), -1);
  map[0] = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == p.size()) {
      stop = !fn(map);
      return;
    }
    for (std::size_t j = 1; j < q.size(); ++j) {
      if (qp[j] != map[pp[i]] || q[j].label != p[i].label || q[j].edge != p[i].edge) continue;
      map[i] = static_cast<int>(j);
      rec(i + 1);
      if (stop) return;
    }
    map[i] = -1;
  };
  rec(1);
}

inline bool tree_hom_exists(const Code& p, const Code& q) {
  bool found = false;
  for_each_tree_hom(p, q, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

inline bool equivalent(const Code& a, const Code& b) { return tree_hom_exists(a, b) && tree_hom_exists(b, a); }

/// Core iff every endomorphism is onto.
inline bool brute_is_core(const Code& c) {
  bool core = true;
  for_each_tree_hom(c, c, [&](const std::vector<int>& map) {
    std::set<int> img(map.begin(), map.end());
    if (img.size() < c.size()) core = false;
    return core;
  });
  return core;
}

/// Per-node images of pattern `c` in `g` by enumerating all (injective if
/// requested) homomorphisms.
inline std::vector<std::set<NodeId>> brute_images(const Code& c, const Graph& g, bool injective = false,
                                                   bool edge_labels = false) {
  const auto parent = parents_of(c);
  std::vector<std::set<NodeId>> img(c.size());
  std::vector<NodeId> map(c.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == c.size()) {
      for (std::size_t k = 0; k < c.size(); ++k) img[k].insert(map[k]);
      return;
    }
    for (NodeId x = 0; x < g.node_count(); ++x) {
      if (g.label(x) != c[i].label) continue;
      if (injective && std::find(map.begin(), map.begin() + i, x) != map.begin() + i) continue;
      if (i > 0) {
        bool ok = false;
        for (const auto& e : g.out_edges(map[parent[i]]))
          if (e.target == x && (!edge_labels || e.label == c[i].edge)) ok = true;
        if (!ok) continue;
      }
      map[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return img;
}

inline std::size_t brute_support(const Code& c, const Graph& g, bool transactional = false, bool injective = false,
                                 bool edge_labels = false) {
  const auto img = brute_images(c, g, injective, edge_labels)[0];
  if (!transactional) return img.size();
  std::set<TxnId> t;
  for (auto v : img) t.insert(g.txn(v));
  return t.size();
}

/// Code from a compact string such as "0a1b2c" (single digit depths,
/// single character labels looked up in `g`).
inline Code code_of(const std::string& s, const Graph& g) {
  Code c;
  for (std::size_t i = 0; i + 1 < s.size(); i += 2)
    c.push_back(make_token(static_cast<std::uint32_t>(s[i] - '0'), *g.find_label(std::string(1, s[i + 1]))));
  return c;
}

/// Children lists of `c` as a mutable tree.
struct Tree {
  std::vector<LabelId> label;
  std::vector<int> parent;
  Code code() const {
    std::vector<std::vector<std::size_t>> kids(label.size());
    for (std::size_t i = 1; i < label.size(); ++i) kids[parent[i]].push_back(i);
    Code out;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v, std::uint32_t d) {
      out.push_back(make_token(d, label[v]));
      for (auto k : kids[v]) rec(k, d + 1);
    };
    rec(0, 0);
    return out;
  }
};

inline Tree tree_of(const Code& c) {
  Tree t;
  t.parent = parents_of(c);
  for (const auto& tok : c) t.label.push_back(tok.label);
  return t;
}

/// Specialization neighborhood of `c`: every one-node extension and every
/// merge of two equally labeled siblings, as raw (unreduced) codes.
inline std::vector<Code> neighborhood(const Code& c, std::size_t labels) {
  std::vector<Code> out;
  const Tree base = tree_of(c);
  for (std::size_t v = 0; v < c.size(); ++v)
    for (LabelId l = 0; l < labels; ++l) {
      Tree t = base;
      t.label.push_back(l);
      t.parent.push_back(static_cast<int>(v));
      out.push_back(t.code());
    }
  for (std::size_t a = 1; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (base.parent[a] != base.parent[b] || base.label[a] != base.label[b]) continue;
      Tree t;
      std::vector<int> idx(c.size(), -1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == b) continue;
        idx[i] = static_cast<int>(t.label.size());
        t.label.push_back(base.label[i]);
        t.parent.push_back(-1);
      }
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (i == b) continue;
        int p = base.parent[i] == static_cast<int>(b) ? static_cast<int>(a) : base.parent[i];
        t.parent[idx[i]] = idx[p];
      }
      out.push_back(t.code());
    }
  return out;
}

/// Maximal and closed flags from the neighborhood, judged against the full
/// frequent set `all`: a neighbor counts when an equivalent pattern is in
/// `all` and it is not equivalent to the pattern itself.
template <typename PatternT>
inline std::pair<bool, bool> oracle_flags(const PatternT& p, const std::vector<PatternT>& all, const Graph& g) {
  bool maximal = true;
  bool closed = true;
  for (const auto& n : neighborhood(p.code, g.label_count())) {
    if (equivalent(n, p.code)) continue;
    for (const auto& q : all) {
      if (q.code.size() > n.size() || !equivalent(n, q.code)) continue;
      maximal = false;
      if (q.support == p.support) closed = false;
    }
  }
  return {maximal, closed};
}

}  // namespace testutil
