#include "hommine/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace hommine {

std::optional<PathConstraint> parse_path_constraint(std::string_view name) {
  if (name == "none") return PathConstraint::None;
  if (name == "cover") return PathConstraint::Cover;
  if (name == "labels") return PathConstraint::UniqueLabels;
  return std::nullopt;
}

std::string_view to_string(PathConstraint p) {
  switch (p) {
    case PathConstraint::None:
      return "none";
    case PathConstraint::Cover:
      return "cover";
    case PathConstraint::UniqueLabels:
      return "labels";
  }
  return "?";
}

void validate(const ConstraintConfig& cfg, const Graph& g) {
  if (cfg.min_support < 1) throw ConfigError("minimum support must be at least 1");
  if (cfg.support_mode == SupportMode::Transactional && !g.has_transactions())
    throw ConfigError("transactional support needs transaction ids ('t' lines)");
  if (cfg.max_size && *cfg.max_size < 1) throw ConfigError("maximum size must be at least 1");
  if (cfg.max_depth && *cfg.max_depth < 1) throw ConfigError("maximum depth must be at least 1");
  if (g.is_cyclic() && !cfg.max_size && !cfg.max_depth && cfg.path_constraint == PathConstraint::None)
    throw ConfigError(
        "the graph is cyclic and nothing bounds the pattern size; use a path constraint (cover or labels), "
        "--max-size or --max-depth");
}

bool check_path(CodeView path, std::span<const ImageSet> accepted, const ConstraintConfig& cfg) {
  if (accepted.size() != path.size()) throw std::logic_error("images do not match the path");
  for (std::size_t i = 0; i < path.size(); ++i)
    if (path[i].depth != i) throw std::logic_error("check_path called on a pattern that is not a path");
  const std::size_t n = path.size();
  if (cfg.max_depth && n > *cfg.max_depth) return false;
  switch (cfg.path_constraint) {
    case PathConstraint::None:
      return true;
    case PathConstraint::UniqueLabels:
      return std::none_of(path.begin(), path.end() - 1, [&](const Token& t) { return t.label == path.back().label; });
    case PathConstraint::Cover: {
      const ImageSet& last = accepted[n - 1];
      return std::any_of(last.begin(), last.end(), [&](NodeId w) {
        for (std::size_t i = 0; i + 1 < n; ++i)
          if (std::binary_search(accepted[i].begin(), accepted[i].end(), w)) return false;
        return true;
      });
    }
  }
  return true;
}

std::vector<ImageSet> accepted_images(CodeView path, const Graph& g, bool edge_labels) {
  std::vector<ImageSet> out;
  for (std::size_t i = 0; i < path.size(); ++i) out.push_back(images_from_scratch(path.first(i + 1), g, edge_labels)[i]);
  return out;
}

namespace {

bool is_prop(LabelId l, std::span<const LabelId> props) { return std::find(props.begin(), props.end(), l) != props.end(); }

bool has_prop_child(CodeView c, const TreeView& view, std::size_t v, std::span<const LabelId> props) {
  return std::any_of(view.children[v].begin(), view.children[v].end(),
                     [&](std::size_t ch) { return is_prop(c[ch].label, props); });
}

}  // namespace

bool violates_property_label_unavoidably(CodeView c, const TreeView& view, std::span<const LabelId> props) {
  for (std::size_t v = 0; v < view.size(); ++v) {
    if (view.on_rightmost_path[v] || is_prop(c[v].label, props)) continue;
    if (!has_prop_child(c, view, v, props)) return true;
  }
  return false;
}

bool violates_property_label_unavoidably(CodeView c, std::span<const LabelId> props) {
  return violates_property_label_unavoidably(c, TreeView(c), props);
}

bool satisfies_property_label(CodeView c, std::span<const LabelId> props) {
  if (c.size() <= 1) return true;
  TreeView view(c);
  for (std::size_t v = 0; v < view.size(); ++v)
    if (!is_prop(c[v].label, props) && !has_prop_child(c, view, v, props)) return false;
  return true;
}

bool satisfies_anti_monotone(CodeView c, const Graph& g, const ConstraintConfig& cfg, std::size_t* support_out) {
  auto images = images_from_scratch(c, g, cfg.edge_labels);
  const auto sup = count_support(images[0], g, cfg.support_mode);
  if (support_out) *support_out = sup;
  if (sup < cfg.min_support) return false;
  if (cfg.max_size && c.size() > *cfg.max_size) return false;
  if (cfg.path_constraint == PathConstraint::None && !cfg.max_depth) return true;
  TreeView view(c);
  for (std::size_t v = 0; v < c.size(); ++v) {
    Code path;
    for (int a = static_cast<int>(v); a >= 0; a = view.parent[a]) path.push_back(c[a]);
    std::reverse(path.begin(), path.end());
    if (!check_path(path, accepted_images(path, g, cfg.edge_labels), cfg)) return false;
  }
  return true;
}

bool satisfies_all(CodeView c, const Graph& g, const ConstraintConfig& cfg, std::size_t* support_out) {
  if (!satisfies_anti_monotone(c, g, cfg, support_out)) return false;
  return !cfg.property_labels || satisfies_property_label(c, *cfg.property_labels);
}

}  // namespace hommine
