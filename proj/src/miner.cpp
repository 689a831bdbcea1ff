#include "hommine/miner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "hommine/coreness.hpp"
#include "hommine/homomorphism.hpp"

namespace hommine {

void MinerStats::merge(const MinerStats& o) {
  candidates += o.candidates;
  outputs += o.outputs;
  inserted += o.inserted;
  peak_trie_size = std::max(peak_trie_size, o.peak_trie_size);
  canonical_guard_rejections += o.canonical_guard_rejections;
  non_maximal_prunes += o.non_maximal_prunes;
  missing_ancestor_fallbacks += o.missing_ancestor_fallbacks;
  delays.insert(delays.end(), o.delays.begin(), o.delays.end());
  verified_steps += o.verified_steps;
  image_mismatches += o.image_mismatches;
  core_mismatches += o.core_mismatches;
  unavoidable_mismatches += o.unavoidable_mismatches;
  non_canonical_steps += o.non_canonical_steps;
  iso_reading_disagreements += o.iso_reading_disagreements;
}

struct Miner::Level {
  bool is_core = true;
  std::optional<std::uint32_t> split_depth;
  std::vector<Token> candidates;
  std::size_t next = 0;
};

namespace {

// Appending `t` keeps the code canonical iff on the new rightmost path
// no node's block exceeds the block of its left sibling.
bool extension_is_canonical(const Code& code, const TreeView& view, const Token& t) {
  const std::size_t new_end = code.size() + 1;
  auto block_ok = [&](std::size_t left, std::size_t left_end, std::size_t right) {
    // Compares code·t restricted to [left, left_end) against [right, new_end).
    auto at = [&](std::size_t i) -> const Token& { return i < code.size() ? code[i] : t; };
    std::size_t i = left;
    std::size_t j = right;
    for (; i < left_end && j < new_end; ++i, ++j) {
      if (at(i) != at(j)) return at(i) > at(j);
    }
    return j == new_end;  // right block exhausted first (or equal): left >= right
  };
  for (std::uint32_t d = 1; d < t.depth; ++d) {
    const auto u = view.rightmost_path[d];
    if (auto s = view.left_sibling(u); s && !block_ok(*s, view.end[*s], u)) return false;
  }
  const auto& siblings = view.children[view.rightmost_path[t.depth - 1]];
  if (!siblings.empty()) {
    const auto s = siblings.back();
    if (!block_ok(s, view.end[s], code.size())) return false;
  }
  return true;
}

bool is_subset(const ImageSet& a, const ImageSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Image tests that identify patterns whose every extension has a more
// specific frequent pattern: the node u on the rightmost path (first
// test) or just closed off by the newest node (second test) relates to
// its equally labeled left sibling's earlier image by inclusion.
bool cannot_be_maximal(const ImageStack& stack) {
  for (const auto& f : stack.frames()) {
    if (f.left_sibling_token && f.left_sibling_token->label == f.token.label &&
        f.left_sibling_token->edge == f.token.edge && is_subset(f.image, f.left_sibling_image))
      return true;
  }
  for (const auto& f : stack.last_detached()) {
    if (f.left_sibling_token && f.left_sibling_token->label == f.token.label &&
        f.left_sibling_token->edge == f.token.edge && is_subset(f.left_sibling_image, f.image))
      return true;
  }
  return false;
}

}  // namespace

Miner::Miner(const Graph& g, ConstraintConfig cfg, MinerOptions opts) : graph_(g), cfg_(std::move(cfg)), opts_(opts) {}

std::size_t Miner::fresh_token_count() const {
  return graph_.label_count() * (cfg_.edge_labels ? graph_.edge_label_count() + 1 : 1);
}

std::vector<Token> Miner::extensions(const Code& code, const TreeView& view) {
  std::set<Token> out;
  const std::uint32_t last_depth = code.back().depth;
  auto consider = [&](const Token& t) {
    if (t.depth < 1 || t.depth > last_depth + 1 || out.count(t)) return;
    if (!extension_is_canonical(code, view, t)) {
      ++stats_.canonical_guard_rejections;
      return;
    }
    out.insert(t);
  };
  if (view.is_path()) {
    // Every path node acts as a split node; removing its only subtree
    // leaves the prefix up to it.
    for (std::size_t i = 0; i + 1 < code.size(); ++i)
      for (const auto& t : trie_.children_of(CodeView(code).first(i + 1))) consider(t);
    for (LabelId l = 0; l < graph_.label_count(); ++l) {
      consider(make_token(last_depth + 1, l));
      if (cfg_.edge_labels)
        for (std::size_t e = 0; e < graph_.edge_label_count(); ++e)
          consider(make_token(last_depth + 1, l, static_cast<EdgeLabelId>(e)));
    }
  } else {
    for (const auto& t : trie_.children_of(remove_leftmost_subtree(code, *view.split_node))) consider(t);
  }
  return {out.begin(), out.end()};
}

std::optional<Miner::Level> Miner::enter(const Code& code, ImageStack& stack, bool parent_core,
                                         std::optional<std::uint32_t> parent_split, const PatternSink& sink) {
  ++stats_.candidates;
  ++since_output_;
  largest_pattern_ = std::max(largest_pattern_, code.size());

  if (opts_.verify) {
    ++stats_.verified_steps;
    if (images_from_scratch(code, graph_, cfg_.edge_labels)[0] != stack.root_image()) ++stats_.image_mismatches;
    if (!is_canonical(code)) ++stats_.non_canonical_steps;
  }

  const std::size_t sup = count_support(stack.root_image(), graph_, cfg_.support_mode);
  if (sup < cfg_.min_support) return std::nullopt;
  if (cfg_.max_size && code.size() > *cfg_.max_size) return std::nullopt;

  TreeView view(code);
  if (view.is_path()) {
    // The parent of a path is its prefix, so entries below the leaf were
    // recorded when those prefixes were entered.
    accepted_.resize(code.size());
    accepted_.back() = stack.frames().back().image;
    if (!check_path(code, accepted_, cfg_)) return std::nullopt;
  }
  if (cfg_.property_labels && opts_.prune_property_labels &&
      violates_property_label_unavoidably(code, view, *cfg_.property_labels))
    return std::nullopt;

  const bool unavoidable = unavoidably_reducible_incremental(parent_core, parent_split, code.back());
  if (opts_.verify && code.size() <= kCoreOracleCap && unavoidable != unavoidably_reducible(code, view))
    ++stats_.unavoidable_mismatches;
  if (unavoidable) return std::nullopt;

  bool core;
  try {
    core = is_core_incremental(code, view, trie_);
  } catch (const std::logic_error&) {
    // Ancestors can be missing only when the prune tests skipped them.
    if (!opts_.prune_non_maximal) throw;
    ++stats_.missing_ancestor_fallbacks;
    core = is_core_bruteforce(code, code.size()).is_core;
  }
  if (opts_.verify && code.size() <= kCoreOracleCap) {
    const bool expected = is_core_bruteforce(code).is_core;
    if (core != expected) ++stats_.core_mismatches;
    if (is_core_iso_reading(code) != expected) ++stats_.iso_reading_disagreements;
  }

  if (opts_.prune_non_maximal && cannot_be_maximal(stack)) {
    ++stats_.non_maximal_prunes;
    return std::nullopt;
  }

  trie_.insert(code, sup, core);
  stats_.inserted = trie_.inserted_total();
  stats_.peak_trie_size = std::max(stats_.peak_trie_size, trie_.size());

  if (core && (!cfg_.property_labels || satisfies_property_label(code, *cfg_.property_labels))) {
    ++stats_.outputs;
    stats_.delays.push_back(
        {stats_.outputs, since_output_, (trie_.inserted_total() + fresh_token_count()) * largest_pattern_});
    since_output_ = 0;
    sink(Pattern{code, sup});
  }

  Level level;
  level.is_core = core;
  if (view.split_node) level.split_depth = code[*view.split_node].depth;
  level.candidates = extensions(code, view);
  return level;
}

void Miner::run(const PatternSink& sink) {
  for (LabelId l = 0; l < graph_.label_count(); ++l) run_root(l, sink);
}

void Miner::run_root(LabelId root, const PatternSink& sink) {
  ImageStack stack(graph_, cfg_.edge_labels, opts_.prune_non_maximal);
  Code code{make_token(0, root)};
  stack.reset(code[0]);
  std::vector<Level> levels;
  if (auto lvl = enter(code, stack, true, std::nullopt, sink)) levels.push_back(std::move(*lvl));

  while (!levels.empty()) {
    Level& top = levels.back();
    if (top.next < top.candidates.size()) {
      const Token t = top.candidates[top.next++];
      const bool parent_core = top.is_core;
      const auto parent_split = top.split_depth;
      code.push_back(t);
      stack.extend(t);
      if (auto lvl = enter(code, stack, parent_core, parent_split, sink)) {
        levels.push_back(std::move(*lvl));
      } else {
        stack.backtrack();
        code.pop_back();
      }
      continue;
    }
    levels.pop_back();
    if (code.size() > 1) stack.backtrack();
    code.pop_back();
  }
}

std::vector<Pattern> mine(const Graph& g, const ConstraintConfig& cfg, const MinerOptions& opts, MinerStats* stats) {
  validate(cfg, g);
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(g.label_count())));
  std::vector<Pattern> out;
  if (jobs <= 1) {
    Miner miner(g, cfg, opts);
    miner.run([&](const Pattern& p) { out.push_back(p); });
    if (stats) *stats = miner.stats();
    return out;
  }
  // Shards own disjoint root labels; reduced codes keep the root token, so
  // no trie lookup crosses shards.
  std::vector<std::vector<Pattern>> parts(jobs);
  std::vector<MinerStats> part_stats(jobs);
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      Miner miner(g, cfg, opts);
      for (LabelId l = j; l < g.label_count(); l += jobs)
        miner.run_root(l, [&](const Pattern& p) { parts[j].push_back(p); });
      part_stats[j] = miner.stats();
    });
  }
  for (auto& w : workers) w.join();
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end(), [](const Pattern& a, const Pattern& b) { return a.code < b.code; });
  if (stats) {
    *stats = {};
    for (const auto& s : part_stats) stats->merge(s);
  }
  return out;
}

namespace {

class NaiveSearch {
 public:
  NaiveSearch(const Graph& g, const ConstraintConfig& cfg, const NaiveOptions& opts) : g_(g), cfg_(cfg), opts_(opts) {}

  std::vector<Pattern> run() {
    for (LabelId l = 0; l < g_.label_count(); ++l) {
      Code code{make_token(0, l)};
      grow(code);
    }
    std::sort(out_.begin(), out_.end(), [](const Pattern& a, const Pattern& b) { return a.code < b.code; });
    return std::move(out_);
  }

 private:
  void grow(Code& code) {
    if (!is_canonical(code)) return;
    std::size_t sup = 0;
    if (!satisfies_anti_monotone(code, g_, cfg_, &sup)) return;
    if (opts_.prune_unavoidable && unavoidably_reducible(code)) return;
    if (is_core_bruteforce(code, code.size()).is_core &&
        (!cfg_.property_labels || satisfies_property_label(code, *cfg_.property_labels)))
      out_.push_back({code, sup});
    const auto last = code.back().depth;
    for (std::uint32_t d = 1; d <= last + 1; ++d) {
      for (LabelId l = 0; l < g_.label_count(); ++l) {
        std::vector<EdgeLabelId> edges{kNoEdgeLabel};
        if (cfg_.edge_labels)
          for (std::size_t e = 0; e < g_.edge_label_count(); ++e) edges.push_back(static_cast<EdgeLabelId>(e));
        for (auto e : edges) {
          code.push_back(make_token(d, l, e));
          grow(code);
          code.pop_back();
        }
      }
    }
  }

  const Graph& g_;
  const ConstraintConfig& cfg_;
  NaiveOptions opts_;
  std::vector<Pattern> out_;
};

}  // namespace

std::vector<Pattern> mine_naive(const Graph& g, const ConstraintConfig& cfg, const NaiveOptions& opts) {
  validate(cfg, g);
  return NaiveSearch(g, cfg, opts).run();
}

std::vector<DelayRow> delay_report(const MinerStats& stats) { return stats.delays; }

}  // namespace hommine
