#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sweepcover/tree.hpp"

namespace sweepcover {

// A block is a set of node labels, kept sorted and duplicate-free.
using Block = std::vector<NodeId>;

// A collection of non-empty node sets in canonical form: each block sorted,
// blocks sorted lexicographically. Whether the collection actually is a
// sweep-cover of some tree is decided by validate().
class SweepCover {
 public:
  SweepCover() = default;
  // Throws Error(EmptyBlock) if any set is empty.
  explicit SweepCover(std::vector<std::vector<NodeId>> sets);
  SweepCover(std::initializer_list<std::initializer_list<NodeId>> sets);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }

  // Every label in any block, sorted, with repeats kept.
  std::vector<NodeId> members() const;

  auto operator<=>(const SweepCover&) const = default;

 private:
  std::vector<Block> blocks_;
};

enum class Condition { Disjoint, Siblings, Coverage, NoAncestry };

std::string_view to_string(Condition c);

struct CoverReport {
  bool valid = true;
  std::vector<Condition> violations;
  // Offending nodes for the first violation listed.
  std::optional<std::vector<NodeId>> witness;
};

Relatives cover_relatives(const Tree& tree, const SweepCover& cover);

// Checks all four conditions and reports every violated one.
// Throws Error(UnknownNode) when a label is not in the tree.
CoverReport validate(const Tree& tree, const SweepCover& cover);
bool is_sweep_cover(const Tree& tree, const SweepCover& cover);

// Replaces the singleton {v} with the blocks of a partition of v's children.
SweepCover swap_children(const Tree& tree, const SweepCover& cover, std::string_view v,
                         const std::vector<std::vector<NodeId>>& child_partition);

// One tree per block: the block with all its ancestors and descendants,
// rooted at the original root, original labels kept.
std::vector<Tree> induced_subgraphs(const Tree& tree, const SweepCover& cover);

// Union of the root paths to selection[i], one node picked from block i.
Tree embedding_tree(const Tree& tree, const SweepCover& cover, std::span<const NodeId> selection);

// The number of leaves: no sweep-cover is larger.
std::size_t max_cover_size(const Tree& tree);

// [["a","b"],["c"]] in canonical order.
std::string cover_to_json(const SweepCover& cover);
SweepCover cover_from_json(std::string_view text);
std::string covers_to_json(std::span<const SweepCover> covers);

}  // namespace sweepcover
