#include "hommine/homomorphism.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace hommine {

namespace {

bool intersects(std::span<const NodeId> a, std::span<const NodeId> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return true;
  }
  return false;
}

ImageSet successor_union(const Graph& g, std::span<const NodeId> from, const Token& t, bool edge_labels) {
  ImageSet out;
  for (auto w : from) {
    auto s = matching_successors(g, w, t, edge_labels);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Memoized homomorphism test between nodes of two (possibly identical) trees.
class Embedder {
 public:
  Embedder(CodeView a, const TreeView& va, CodeView b, const TreeView& vb)
      : a_(a), va_(va), b_(b), vb_(vb), memo_(a.size() * b.size(), -1) {}

  bool maps(std::size_t u, std::size_t w) {
    auto& m = memo_[u * b_.size() + w];
    if (m >= 0) return m;
    bool ok = a_[u].label == b_[w].label && a_[u].edge == b_[w].edge;
    for (std::size_t i = 0; ok && i < va_.children[u].size(); ++i) {
      const auto cu = va_.children[u][i];
      ok = std::any_of(vb_.children[w].begin(), vb_.children[w].end(), [&](std::size_t cw) { return maps(cu, cw); });
    }
    m = ok;
    return ok;
  }

 private:
  CodeView a_;
  const TreeView& va_;
  CodeView b_;
  const TreeView& vb_;
  std::vector<signed char> memo_;
};

bool iso_maps(CodeView c, const TreeView& v, std::size_t u, std::size_t w) {
  if (c[u].label != c[w].label || c[u].edge != c[w].edge) return false;
  const auto& cu = v.children[u];
  const auto& cw = v.children[w];
  if (cu.size() > cw.size()) return false;
  // Bipartite matching of u's children into w's children.
  std::vector<std::vector<bool>> ok(cu.size(), std::vector<bool>(cw.size()));
  for (std::size_t i = 0; i < cu.size(); ++i)
    for (std::size_t j = 0; j < cw.size(); ++j) ok[i][j] = iso_maps(c, v, cu[i], cw[j]);
  std::vector<int> owner(cw.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
    for (std::size_t j = 0; j < cw.size(); ++j) {
      if (!ok[i][j] || seen[j]) continue;
      seen[j] = true;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < cu.size(); ++i) {
    std::vector<bool> seen(cw.size());
    if (!augment(i, seen)) return false;
  }
  return true;
}

}  // namespace

std::vector<ImageSet> images_from_scratch(CodeView c, const Graph& g, bool edge_labels) {
  TreeView view(c);
  const auto n = c.size();
  std::vector<ImageSet> cand(n);
  if (n == 0) return cand;
  auto roots = g.nodes_with_label(c[0].label);
  cand[0].assign(roots.begin(), roots.end());
  // Downward: label and parent-edge filter.
  for (std::size_t i = 1; i < n; ++i) cand[i] = successor_union(g, cand[view.parent[i]], c[i], edge_labels);
  // Upward: keep a candidate iff every pattern child still has a match.
  for (std::size_t i = n; i-- > 0;) {
    if (view.children[i].empty()) continue;
    std::erase_if(cand[i], [&](NodeId w) {
      return std::any_of(view.children[i].begin(), view.children[i].end(), [&](std::size_t ch) {
        return !intersects(matching_successors(g, w, c[ch], edge_labels), cand[ch]);
      });
    });
  }
  // Downward again: keep only nodes reachable from a surviving parent.
  for (std::size_t i = 1; i < n; ++i) {
    auto reach = successor_union(g, cand[view.parent[i]], c[i], edge_labels);
    ImageSet kept;
    std::set_intersection(cand[i].begin(), cand[i].end(), reach.begin(), reach.end(), std::back_inserter(kept));
    cand[i] = std::move(kept);
  }
  return cand;
}

std::size_t count_support(std::span<const NodeId> root_image, const Graph& g, SupportMode mode) {
  if (mode == SupportMode::Network) return root_image.size();
  if (!g.has_transactions()) throw ConfigError("transactional support needs transaction ids ('t' lines)");
  std::vector<bool> seen(g.txn_count());
  std::size_t count = 0;
  for (auto v : root_image) {
    if (!seen[g.txn(v)]) {
      seen[g.txn(v)] = true;
      ++count;
    }
  }
  return count;
}

std::size_t support(CodeView c, const Graph& g, SupportMode mode, bool edge_labels) {
  auto images = images_from_scratch(c, g, edge_labels);
  return count_support(images.at(0), g, mode);
}

std::size_t iso_support(CodeView c, const Graph& g, SupportMode mode, bool edge_labels, std::size_t node_cap) {
  if (c.size() > node_cap)
    throw OracleCapError("pattern of " + std::to_string(c.size()) + " nodes exceeds the isomorphism cap of " +
                         std::to_string(node_cap));
  TreeView view(c);
  std::vector<NodeId> assign(c.size());
  std::vector<bool> used(g.node_count());
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == c.size()) return true;
    for (auto w : matching_successors(g, assign[view.parent[i]], c[i], edge_labels)) {
      if (used[w]) continue;
      used[w] = true;
      assign[i] = w;
      bool done = place(i + 1);
      used[w] = false;
      if (done) return true;
    }
    return false;
  };
  ImageSet roots;
  for (auto r : g.nodes_with_label(c[0].label)) {
    assign[0] = r;
    used[r] = true;
    if (place(1)) roots.push_back(r);
    used[r] = false;
  }
  return count_support(roots, g, mode);
}

bool embeds(CodeView a, CodeView b) {
  TreeView va(a);
  TreeView vb(b);
  return Embedder(a, va, b, vb).maps(0, 0);
}

bool subtree_embeds(CodeView c, const TreeView& view, std::size_t from, std::size_t into) {
  return Embedder(c, view, c, view).maps(from, into);
}

bool subtree_iso_embeds(CodeView c, const TreeView& view, std::size_t from, std::size_t into) {
  return iso_maps(c, view, from, into);
}

ImageStack::ImageStack(const Graph& g, bool edge_labels, bool keep_sibling_images)
    : graph_(&g), edge_labels_(edge_labels), keep_sibling_images_(keep_sibling_images), mark_(g.node_count(), 0) {}

void ImageStack::bump_stamp() {
  if (++stamp_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    stamp_ = 1;
  }
}

void ImageStack::reset(const Token& root) {
  frames_.clear();
  undo_.clear();
  auto roots = graph_->nodes_with_label(root.label);
  frames_.push_back(Frame{0, root, ImageSet(roots.begin(), roots.end()), std::nullopt, {}});
  size_ = 1;
}

std::span<const Frame> ImageStack::last_detached() const {
  if (undo_.empty()) return {};
  return undo_.back().detached;
}

std::size_t ImageStack::extend(const Token& t) {
  if (t.depth == 0 || t.depth > frames_.size()) throw std::logic_error("extension token does not attach to the rightmost path");
  Undo rec;
  rec.detached.assign(std::make_move_iterator(frames_.begin() + t.depth), std::make_move_iterator(frames_.end()));
  frames_.resize(t.depth);

  Frame fresh{size_, t, {}, std::nullopt, {}};
  bump_stamp();
  for (auto w : frames_.back().image) {
    for (auto s : matching_successors(*graph_, w, t, edge_labels_)) {
      if (mark_[s] != stamp_) {
        mark_[s] = stamp_;
        fresh.image.push_back(s);
      }
    }
  }
  std::sort(fresh.image.begin(), fresh.image.end());
  if (!rec.detached.empty()) {
    fresh.left_sibling_token = rec.detached.front().token;
    if (keep_sibling_images_) fresh.left_sibling_image = rec.detached.front().image;
  }
  frames_.push_back(std::move(fresh));

  // Bottom-up pruning; stops at the first frame that loses nothing.
  for (std::size_t i = frames_.size() - 1; i-- > 0;) {
    const Frame& child = frames_[i + 1];
    bump_stamp();
    for (auto s : child.image) mark_[s] = stamp_;
    std::vector<NodeId> removed;
    std::erase_if(frames_[i].image, [&](NodeId w) {
      auto succ = matching_successors(*graph_, w, child.token, edge_labels_);
      bool keep = std::any_of(succ.begin(), succ.end(), [&](NodeId s) { return mark_[s] == stamp_; });
      if (!keep) removed.push_back(w);
      return !keep;
    });
    if (removed.empty()) break;
    rec.removed.emplace_back(i, std::move(removed));
  }
  undo_.push_back(std::move(rec));
  ++size_;
  return frames_.front().image.size();
}

void ImageStack::backtrack() {
  if (undo_.empty()) throw std::logic_error("backtrack without a matching extend");
  Undo rec = std::move(undo_.back());
  undo_.pop_back();
  frames_.pop_back();
  for (auto& [i, nodes] : rec.removed) {
    auto& img = frames_[i].image;
    auto mid = img.insert(img.end(), nodes.begin(), nodes.end());
    std::inplace_merge(img.begin(), mid, img.end());
  }
  for (auto& f : rec.detached) frames_.push_back(std::move(f));
  --size_;
}

}  // namespace hommine
