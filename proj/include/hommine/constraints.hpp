#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hommine/graph.hpp"
#include "hommine/homomorphism.hpp"
#include "hommine/pattern.hpp"

namespace hommine {

enum class PathConstraint { None, Cover, UniqueLabels };

std::optional<PathConstraint> parse_path_constraint(std::string_view name);
std::string_view to_string(PathConstraint p);

struct ConstraintConfig {
  std::size_t min_support = 1;
  SupportMode support_mode = SupportMode::Network;
  std::optional<std::size_t> max_size;   // pattern nodes
  std::optional<std::size_t> max_depth;  // nodes on a root path
  PathConstraint path_constraint = PathConstraint::Cover;
  /// Property labels; the constraint is active iff set.
  std::optional<std::vector<LabelId>> property_labels;
  bool edge_labels = false;
};

/// Rejects configurations that cannot run: min_support 0, transactional
/// support without txn ids, or a cyclic graph with nothing that bounds
/// pattern size (no size or depth cap and no path constraint).
void validate(const ConstraintConfig& cfg, const Graph& g);

/// Path constraint for a path pattern. `accepted[i]` is the image of node
/// i in the prefix path ending at node i (root first); for cover, the
/// last image must contain a node outside all earlier ones. Throws
/// std::logic_error if `path` has a branching node.
bool check_path(CodeView path, std::span<const ImageSet> accepted, const ConstraintConfig& cfg);

/// The `accepted` images of `path`, each computed from scratch.
std::vector<ImageSet> accepted_images(CodeView path, const Graph& g, bool edge_labels = false);

/// A node off the rightmost path can no longer gain children; if it is
/// not itself a property node and has no property-labeled child, no
/// extension satisfies the property label constraint.
bool violates_property_label_unavoidably(CodeView c, const TreeView& view, std::span<const LabelId> props);
bool violates_property_label_unavoidably(CodeView c, std::span<const LabelId> props);

/// Every node whose label is not a property label has a property-labeled
/// child. A single-node pattern satisfies the constraint vacuously.
bool satisfies_property_label(CodeView c, std::span<const LabelId> props);

/// Evaluates the anti-monotone constraints of `cfg` on `c` from scratch:
/// support, size, and the path constraint and depth on every root path.
/// Writes the support to `support_out` when given.
bool satisfies_anti_monotone(CodeView c, const Graph& g, const ConstraintConfig& cfg,
                             std::size_t* support_out = nullptr);

/// satisfies_anti_monotone plus the property label constraint.
bool satisfies_all(CodeView c, const Graph& g, const ConstraintConfig& cfg, std::size_t* support_out = nullptr);

}  // namespace hommine
