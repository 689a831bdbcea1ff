#pragma once

#include <cstddef>
#include <vector>

#include "hommine/constraints.hpp"
#include "hommine/graph.hpp"
#include "hommine/miner.hpp"
#include "hommine/pattern.hpp"

namespace hommine {

/// Replaces siblings v1 and v2 of `c` by a single node carrying the
/// children of both, then reduces to the core and canonicalizes. Throws
/// std::invalid_argument unless v1 != v2 are siblings with equal labels
/// (and equal parent edge labels).
Code merge_siblings(CodeView c, std::size_t v1, std::size_t v2);

/// Canonical cores of all merges of equally labeled sibling pairs of `c`.
std::vector<Code> sibling_merges(CodeView c);

/// Canonical cores obtained by deleting one leaf of `c`.
std::vector<Code> leaf_removals(CodeView c);

struct CondensedPattern {
  Code code;
  std::size_t support = 0;
  bool closed = true;
  bool maximal = true;
};

struct CondenseOptions {
  /// Also evaluate every one-node extension of every pattern against the
  /// graph. Needed when `ps` may be incomplete, e.g. after mining with
  /// non-maximal pruning.
  bool direct_extensions = false;
};

/// Flags each pattern of `ps` (the complete output of a mining run under
/// `cfg`). Specializations are one-node extensions and sibling merges.
/// A pattern is not closed when a specialization has the same support and
/// not maximal when a specialization satisfies `cfg`.
std::vector<CondensedPattern> condense(const std::vector<Pattern>& ps, const Graph& g, const ConstraintConfig& cfg,
                                       const CondenseOptions& opts = {});

std::vector<Pattern> filter_closed(const std::vector<Pattern>& ps, const Graph& g, const ConstraintConfig& cfg,
                                   const CondenseOptions& opts = {});
std::vector<Pattern> filter_maximal(const std::vector<Pattern>& ps, const Graph& g, const ConstraintConfig& cfg,
                                    const CondenseOptions& opts = {});

}  // namespace hommine
