#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hommine/constraints.hpp"
#include "hommine/graph.hpp"
#include "hommine/pattern.hpp"
#include "hommine/trie.hpp"

namespace hommine {

struct Pattern {
  Code code;
  std::size_t support = 0;
  bool operator==(const Pattern&) const = default;
};

struct MinerOptions {
  /// Stop growing patterns that violate the property label constraint
  /// unavoidably (only with property labels configured).
  bool prune_property_labels = true;
  /// Image-based pruning that removes patterns which cannot be maximal.
  /// Only meaningful when the result is post-processed for maximality.
  bool prune_non_maximal = false;
  /// Cross-check incremental results against from-scratch oracles at
  /// every step and count disagreements in MinerStats.
  bool verify = false;
  /// Number of threads; the search is sharded by root label.
  unsigned jobs = 1;
};

struct DelayRow {
  std::size_t index = 0;       // 1-based output number
  std::size_t candidates = 0;  // patterns considered since the previous output
  std::size_t bound = 0;       // (trie insertions so far + fresh tokens) * largest pattern size
};

struct MinerStats {
  std::size_t candidates = 0;  // every pattern considered, seeds included
  std::size_t outputs = 0;
  std::size_t inserted = 0;
  std::size_t peak_trie_size = 0;
  std::size_t canonical_guard_rejections = 0;
  std::size_t non_maximal_prunes = 0;
  std::size_t missing_ancestor_fallbacks = 0;
  std::vector<DelayRow> delays;

  // Filled when MinerOptions::verify is set.
  std::size_t verified_steps = 0;
  std::size_t image_mismatches = 0;
  std::size_t core_mismatches = 0;
  std::size_t unavoidable_mismatches = 0;
  std::size_t non_canonical_steps = 0;
  std::size_t iso_reading_disagreements = 0;

  void merge(const MinerStats& other);
};

using PatternSink = std::function<void(const Pattern&)>;

/// Depth-first enumeration of the frequent canonical core trees of `g`
/// under `cfg`, guided by a trie of earlier patterns. Single-threaded runs
/// stream patterns to `sink` in increasing code order.
class Miner {
 public:
  Miner(const Graph& g, ConstraintConfig cfg, MinerOptions opts = {});

  void run(const PatternSink& sink);
  /// Runs the search for root label `root` only.
  void run_root(LabelId root, const PatternSink& sink);

  const MinerStats& stats() const { return stats_; }
  const Trie& trie() const { return trie_; }

 private:
  struct Level;

  std::optional<Level> enter(const Code& code, ImageStack& stack, bool parent_core,
                             std::optional<std::uint32_t> parent_split, const PatternSink& sink);
  std::vector<Token> extensions(const Code& code, const TreeView& view);
  std::size_t fresh_token_count() const;

  const Graph& graph_;
  ConstraintConfig cfg_;
  MinerOptions opts_;
  Trie trie_;
  MinerStats stats_;
  std::vector<ImageSet> accepted_;  // leaf image of each path prefix when entered
  std::size_t since_output_ = 0;
  std::size_t largest_pattern_ = 0;
};

/// Validates `cfg` and runs the miner; with opts.jobs > 1 the root labels
/// are mined in parallel and the merged result is sorted by code.
std::vector<Pattern> mine(const Graph& g, const ConstraintConfig& cfg, const MinerOptions& opts = {},
                          MinerStats* stats = nullptr);

struct NaiveOptions {
  /// Skip codes with a reducing sibling pair off the rightmost path. Needed
  /// for termination when nothing caps the pattern size.
  bool prune_unavoidable = false;
};

/// Reference enumeration: every structurally valid code is grown with all
/// depths and labels, filtered by an explicit canonicality test and by
/// from-scratch constraint evaluation; cores are reported. Sorted by code.
std::vector<Pattern> mine_naive(const Graph& g, const ConstraintConfig& cfg, const NaiveOptions& opts = {});

/// Per-output delay rows of a finished run.
std::vector<DelayRow> delay_report(const MinerStats& stats);

}  // namespace hommine
