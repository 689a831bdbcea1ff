#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hommine/graph.hpp"
#include "hommine/pattern.hpp"

namespace hommine {

/// Sorted, duplicate-free set of data nodes.
using ImageSet = std::vector<NodeId>;

enum class SupportMode { Network, Transactional };

/// An exponential oracle was asked to handle a pattern above its size cap.
class OracleCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data successors of `v` matching the label (and, in edge-label mode,
/// the edge label) of pattern token `t`.
inline std::span<const NodeId> matching_successors(const Graph& g, NodeId v, const Token& t, bool edge_labels) {
  return edge_labels ? g.successors_with_label(v, t.label, t.edge) : g.successors_with_label(v, t.label);
}

/// Exact image of every pattern node (index = position in the code).
std::vector<ImageSet> images_from_scratch(CodeView c, const Graph& g, bool edge_labels = false);

/// Root image size (network) or number of distinct transactions touched by
/// the root image (transactional).
std::size_t count_support(std::span<const NodeId> root_image, const Graph& g, SupportMode mode);

/// Throws ConfigError for transactional mode on a graph without txn ids.
std::size_t support(CodeView c, const Graph& g, SupportMode mode, bool edge_labels = false);

/// Root-image support under injective mappings. Throws OracleCapError
/// when the pattern has more than `node_cap` nodes.
std::size_t iso_support(CodeView c, const Graph& g, SupportMode mode, bool edge_labels = false,
                        std::size_t node_cap = 12);

/// True iff tree `a` maps homomorphically into tree `b` with root to root.
bool embeds(CodeView a, CodeView b);

/// Within one tree: true iff the subtree below `from` maps homomorphically
/// into the subtree below `into`, sending `from` to `into`. The shared root
/// path is fixed, so only the labels (and parent edges) of `from` and `into`
/// and their descendants matter.
bool subtree_embeds(CodeView c, const TreeView& view, std::size_t from, std::size_t into);

/// Injective variant of subtree_embeds.
bool subtree_iso_embeds(CodeView c, const TreeView& view, std::size_t from, std::size_t into);

/// Image of one rightmost-path pattern node.
struct Frame {
  std::size_t node = 0;  // position in the code
  Token token;
  ImageSet image;
  /// The frame this node displaced when it was attached, i.e. its left
  /// sibling as last seen on the rightmost path. Kept only on request.
  std::optional<Token> left_sibling_token;
  ImageSet left_sibling_image;
};

/// Incrementally maintained images of the rightmost-path nodes of a
/// pattern that grows and shrinks one token at a time.
class ImageStack {
 public:
  explicit ImageStack(const Graph& g, bool edge_labels = false, bool keep_sibling_images = false);

  /// Starts a one-node pattern.
  void reset(const Token& root);

  /// Attaches `t` to the rightmost path node at depth t.depth - 1. Frames at
  /// depth >= t.depth leave the rightmost path and are kept for undo.
  /// Returns the size of the root image.
  std::size_t extend(const Token& t);

  /// Undoes the latest extend exactly.
  void backtrack();

  const ImageSet& root_image() const { return frames_.front().image; }
  std::span<const Frame> frames() const { return frames_; }
  /// Frames displaced by the latest extension, shallowest first.
  std::span<const Frame> last_detached() const;
  std::size_t pattern_size() const { return size_; }
  std::size_t pending_undo() const { return undo_.size(); }

 private:
  struct Undo {
    std::vector<Frame> detached;
    std::vector<std::pair<std::size_t, std::vector<NodeId>>> removed;  // frame index, removed nodes
  };

  void bump_stamp();

  const Graph* graph_;
  bool edge_labels_;
  bool keep_sibling_images_;
  std::size_t size_ = 0;
  std::vector<Frame> frames_;
  std::vector<Undo> undo_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

}  // namespace hommine
