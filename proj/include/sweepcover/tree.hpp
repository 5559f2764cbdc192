#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sweepcover {

using NodeId = std::string;
using NodeSet = std::set<NodeId>;
using Edge = std::pair<NodeId, NodeId>;

// Labels must be non-empty and free of whitespace and '#'.
bool is_valid_label(std::string_view label);

// Immutable rooted directed tree.
//
// Nodes are stored in preorder (children visited in insertion order), so the
// root has index 0 and the subtree of node i occupies [i, subtree_end(i)).
// Algorithms work on indices; the public surface also accepts labels.
class Tree {
 public:
  using Index = std::size_t;

  // Edges are (parent, child) pairs; child order follows edge order.
  // Throws Error with DuplicateEdge, NodeWithTwoParents, MultipleRoots,
  // CycleDetected, InvalidLabel or EmptyDocument.
  static Tree from_edges(std::span<const Edge> edges);
  static Tree single_node(NodeId root);

  std::size_t size() const { return labels_.size(); }
  const NodeId& root() const { return labels_.front(); }
  bool contains(std::string_view label) const;

  // Throws Error(UnknownNode) for labels not in the tree.
  Index index_of(std::string_view label) const;
  const NodeId& label(Index i) const { return labels_[i]; }

  std::optional<Index> parent(Index i) const;
  std::span<const Index> children(Index i) const { return children_[i]; }
  std::size_t out_degree(Index i) const { return children_[i].size(); }
  bool is_leaf(Index i) const { return children_[i].empty(); }
  Index subtree_end(Index i) const { return end_[i]; }
  std::size_t depth(Index i) const { return depth_[i]; }

  // Strict ancestry.
  bool is_ancestor(Index a, Index d) const { return a < d && d < end_[a]; }

  std::optional<NodeId> parent(std::string_view label) const;
  std::vector<NodeId> children(std::string_view label) const;

  // Labels in preorder.
  const std::vector<NodeId>& nodes() const { return labels_; }
  // Edges in preorder of the child.
  std::vector<Edge> edges() const;
  std::size_t leaf_count() const;

  // The subtree rooted at i, labels preserved.
  Tree subtree(Index i) const;
  // Restriction to a node set that contains the root and is closed under
  // taking parents. Throws Error(InvalidParams) otherwise.
  Tree restrict_to(const std::vector<bool>& keep) const;

 private:
  Tree() = default;
  static Tree build(std::vector<NodeId> labels, const std::vector<std::vector<std::size_t>>& kids,
                    std::size_t root);

  std::vector<NodeId> labels_;
  std::vector<std::optional<Index>> parent_;
  std::vector<std::vector<Index>> children_;
  std::vector<Index> end_;
  std::vector<std::size_t> depth_;
  std::unordered_map<std::string, Index> index_;
};

// Edge-list documents: one "parent child" pair per line, '#' starts a comment,
// blank lines are ignored. A line holding a single label declares a node,
// which is how a one-node tree is written.
Tree parse_tree(std::string_view text);
Tree read_tree_file(const std::string& path);
// One "parent child" line per edge, preorder with children sorted by label.
std::string serialize_tree(const Tree& tree);

std::size_t depth(const Tree& tree, std::string_view v);
std::vector<NodeId> linear_path_from(const Tree& tree, std::string_view v);
NodeId lowest_known_descendant(const Tree& tree, std::string_view v);

std::vector<Tree::Index> linear_path_from(const Tree& tree, Tree::Index v);
Tree::Index lowest_known_descendant(const Tree& tree, Tree::Index v);

struct Relatives {
  NodeSet ancestors;
  NodeSet descendants;
};

// Proper ancestors and proper descendants of any member of vs.
Relatives relatives(const Tree& tree, const NodeSet& vs);

struct IldSpec {
  int delta = 2;
  int gamma = 0;
  int star_levels = 1;
};

void check_ild_spec(const IldSpec& spec);

// Finite truncation of the infinite Delta-ary tree: from the root a path of
// gamma edges leads to a Delta-star, and each star child heads the next such
// unit, star_levels times. The children of the last stars are leaves.
// Labels: root "s", a path step appends ".p", star child i appends ".i".
Tree build_ild_truncated(const IldSpec& spec);

// AHU encoding: equal iff the trees are isomorphic as rooted unlabeled trees.
std::string canonical_code(const Tree& tree);
std::string canonical_code(const Tree& tree, Tree::Index subtree_root);

}  // namespace sweepcover
