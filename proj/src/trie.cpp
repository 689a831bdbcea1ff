#include "hommine/trie.hpp"

#include <ostream>
#include <stdexcept>

namespace hommine {

Trie::Trie() : root_(std::make_unique<Node>()) {}

Trie::Node* Trie::locate(CodeView c) const {
  Node* node = root_.get();
  for (const auto& t : c) {
    auto it = node->children.find(t);
    if (it == node->children.end()) return nullptr;
    node = it->second.get();
  }
  return node;
}

void Trie::insert(CodeView c, std::size_t support, bool is_core) {
  if (c.empty()) throw std::logic_error("cannot insert an empty code");
  Node* parent = locate(c.first(c.size() - 1));
  if (parent == nullptr || (c.size() > 1 && !parent->stored))
    throw std::logic_error("trie insert: a proper prefix is missing");
  auto& slot = parent->children[c.back()];
  if (!slot) {
    slot = std::make_unique<Node>();
    slot->edge = c.back();
    slot->parent = parent;
    ++size_;
    ++inserted_total_;
  }
  slot->stored = true;
  slot->support = support;
  slot->is_core = is_core;
  if (is_core)
    for (Node* n = slot.get(); n != nullptr && !n->has_core_descendant; n = n->parent) n->has_core_descendant = true;
}

const Trie::Node* Trie::find(CodeView c) const {
  const Node* n = locate(c);
  return (n != nullptr && n->stored) ? n : nullptr;
}

std::vector<Token> Trie::children_of(CodeView c) const {
  std::vector<Token> out;
  if (const Node* n = locate(c)) {
    out.reserve(n->children.size());
    for (const auto& [tok, child] : n->children) out.push_back(tok);
  }
  return out;
}

void Trie::prune_on_backtrack(CodeView c) {
  Node* n = locate(c);
  if (n == nullptr || n == root_.get() || n->has_core_descendant) return;
  std::function<std::size_t(const Node&)> count = [&](const Node& x) {
    std::size_t k = 1;
    for (const auto& [tok, child] : x.children) k += count(*child);
    return k;
  };
  size_ -= count(*n);
  n->parent->children.erase(c.back());
}

namespace {

void dump_node(std::ostream& out, const Trie::Node& n, Code& path, const Graph& g, bool edge_labels) {
  // Enumeration order is ascending, children are stored descending.
  for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
    path.push_back(it->first);
    const auto& child = *it->second;
    out << std::string(2 * (path.size() - 1), ' ') << format_code(path, g, edge_labels) << "  [" << child.support
        << (child.is_core ? ", core" : "") << "]\n";
    dump_node(out, child, path, g, edge_labels);
    path.pop_back();
  }
}

}  // namespace

void Trie::dump(std::ostream& out, const Graph& g, bool edge_labels) const {
  Code path;
  dump_node(out, *root_, path, g, edge_labels);
}

}  // namespace hommine
