#include "hommine/coreness.hpp"

#include <stdexcept>

#include "hommine/homomorphism.hpp"

namespace hommine {

CoreVerdict is_core_bruteforce(CodeView c, std::size_t cap) {
  if (c.size() > cap) throw OracleCapError("pattern exceeds the core oracle cap of " + std::to_string(cap));
  TreeView view(c);
  for (std::size_t v = 0; v < view.size(); ++v) {
    const auto& kids = view.children[v];
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j)
        if (subtree_embeds(c, view, kids[j], kids[i]) || subtree_embeds(c, view, kids[i], kids[j]))
          return {false, std::pair{kids[i], kids[j]}};
  }
  return {};
}

bool is_core_iso_reading(CodeView c) {
  TreeView view(c);
  for (std::size_t v = 0; v < view.size(); ++v) {
    const auto& kids = view.children[v];
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j)
        if (subtree_iso_embeds(c, view, kids[j], kids[i]) || subtree_iso_embeds(c, view, kids[i], kids[j]))
          return false;
  }
  return true;
}

bool is_core_incremental(CodeView c, const TreeView& view, const Trie& trie) {
  if (view.is_path()) return true;
  const auto s = *view.split_node;
  const Trie::Node* ancestor = trie.find(remove_leftmost_subtree(c, s));
  if (ancestor == nullptr) throw std::logic_error("reduced ancestor of a mined pattern is not in the trie");
  if (!ancestor->is_core) return false;
  const auto& kids = view.children[s];
  return !subtree_embeds(c, view, kids.back(), kids.front());
}

bool is_core_incremental(CodeView c, const Trie& trie) { return is_core_incremental(c, TreeView(c), trie); }

bool unavoidably_reducible(CodeView c, const TreeView& view) {
  for (std::size_t v = 0; v < view.size(); ++v) {
    const auto& kids = view.children[v];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (view.on_rightmost_path[kids[i]]) continue;
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        if (view.on_rightmost_path[kids[j]]) continue;
        if (subtree_embeds(c, view, kids[j], kids[i]) || subtree_embeds(c, view, kids[i], kids[j])) return true;
      }
    }
  }
  return false;
}

bool unavoidably_reducible(CodeView c) { return unavoidably_reducible(c, TreeView(c)); }

bool unavoidably_reducible_incremental(bool parent_is_core, std::optional<std::uint32_t> parent_split_depth,
                                       const Token& added) {
  if (parent_is_core || !parent_split_depth) return false;
  return added.depth <= *parent_split_depth + 1;
}

Code reduce_to_core(CodeView c) {
  Code cur(c.begin(), c.end());
  for (;;) {
    TreeView view(cur);
    std::optional<std::size_t> victim;
    for (std::size_t v = view.size(); v-- > 1 && !victim;) {
      const auto& sibs = view.children[view.parent[v]];
      for (auto w : sibs) {
        if (w != v && subtree_embeds(cur, view, v, w)) {
          victim = v;
          break;
        }
      }
    }
    if (!victim) break;
    cur = remove_subtree(cur, *victim);
  }
  return canonicalize(cur);
}

}  // namespace hommine
