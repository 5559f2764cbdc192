#include "sweepcover/cover.hpp"

#include <algorithm>

#include "json.hpp"

#include "sweepcover/error.hpp"

namespace sweepcover {

SweepCover::SweepCover(std::vector<std::vector<NodeId>> sets) {
  blocks_.reserve(sets.size());
  for (auto& s : sets) {
    if (s.empty()) throw Error(Errc::EmptyBlock, "sweep-cover sets must be non-empty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    blocks_.push_back(std::move(s));
  }
  std::sort(blocks_.begin(), blocks_.end());
}

SweepCover::SweepCover(std::initializer_list<std::initializer_list<NodeId>> sets)
    : SweepCover(std::vector<std::vector<NodeId>>(sets.begin(), sets.end())) {}

std::vector<NodeId> SweepCover::members() const {
  std::vector<NodeId> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Disjoint: return "disjoint";
    case Condition::Siblings: return "siblings";
    case Condition::Coverage: return "coverage";
    case Condition::NoAncestry: return "no-ancestry";
  }
  return "unknown";
}

Relatives cover_relatives(const Tree& tree, const SweepCover& cover) {
  auto m = cover.members();
  return relatives(tree, NodeSet(m.begin(), m.end()));
}

CoverReport validate(const Tree& tree, const SweepCover& cover) {
  CoverReport report;
  auto fail = [&](Condition c, std::vector<NodeId> witness) {
    report.valid = false;
    report.violations.push_back(c);
    if (!report.witness) report.witness = std::move(witness);
  };

  std::vector<std::vector<Tree::Index>> blocks;
  for (const auto& b : cover.blocks()) {
    std::vector<Tree::Index> ids;
    for (const auto& label : b) ids.push_back(tree.index_of(label));
    blocks.push_back(std::move(ids));
  }

  // 1. pairwise disjoint
  std::vector<int> hits(tree.size(), 0);
  for (const auto& b : blocks) {
    for (auto v : b) ++hits[v];
  }
  {
    std::vector<NodeId> repeated;
    for (Tree::Index v = 0; v < tree.size(); ++v) {
      if (hits[v] > 1) repeated.push_back(tree.label(v));
    }
    if (!repeated.empty()) fail(Condition::Disjoint, std::move(repeated));
  }

  // 2. each set holds siblings only
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.size() < 2) continue;
    auto p = tree.parent(b.front());
    bool ok = p.has_value() &&
              std::all_of(b.begin(), b.end(), [&](Tree::Index v) { return tree.parent(v) == p; });
    if (!ok) {
      fail(Condition::Siblings, cover.blocks()[i]);
      break;
    }
  }

  // 3. members, ancestors and descendants span the tree
  std::vector<bool> covered(tree.size(), false);
  for (Tree::Index v = 0; v < tree.size(); ++v) {
    if (hits[v] == 0) continue;
    covered[v] = true;
    for (auto p = tree.parent(v); p; p = tree.parent(*p)) covered[*p] = true;
    for (Tree::Index d = v + 1; d < tree.subtree_end(v); ++d) covered[d] = true;
  }
  {
    std::vector<NodeId> missing;
    for (Tree::Index v = 0; v < tree.size(); ++v) {
      if (!covered[v]) missing.push_back(tree.label(v));
    }
    std::sort(missing.begin(), missing.end());
    if (!missing.empty()) fail(Condition::Coverage, std::move(missing));
  }

  // 4. no member is an ancestor of another
  for (Tree::Index v = 0; v < tree.size(); ++v) {
    if (hits[v] == 0) continue;
    auto d = std::find_if(hits.begin() + static_cast<std::ptrdiff_t>(v) + 1,
                          hits.begin() + static_cast<std::ptrdiff_t>(tree.subtree_end(v)),
                          [](int h) { return h > 0; });
    if (d != hits.begin() + static_cast<std::ptrdiff_t>(tree.subtree_end(v))) {
      fail(Condition::NoAncestry,
           {tree.label(v), tree.label(static_cast<Tree::Index>(d - hits.begin()))});
      break;
    }
  }
  return report;
}

bool is_sweep_cover(const Tree& tree, const SweepCover& cover) {
  return validate(tree, cover).valid;
}

SweepCover swap_children(const Tree& tree, const SweepCover& cover, std::string_view v,
                         const std::vector<std::vector<NodeId>>& child_partition) {
  const Tree::Index vi = tree.index_of(v);
  const auto& blocks = cover.blocks();
  auto singleton = std::find(blocks.begin(), blocks.end(), Block{std::string(v)});
  if (singleton == blocks.end()) {
    throw Error(Errc::NotASingletonMember, "{" + std::string(v) + "} is not a member");
  }
  if (tree.is_leaf(vi)) throw Error(Errc::LeafNode, "'" + std::string(v) + "' has no children");

  std::vector<NodeId> expected;
  for (auto c : tree.children(vi)) expected.push_back(tree.label(c));
  std::sort(expected.begin(), expected.end());
  std::vector<NodeId> got;
  for (const auto& part : child_partition) {
    if (part.empty()) throw Error(Errc::NotAPartitionOfChildren, "empty block");
    got.insert(got.end(), part.begin(), part.end());
  }
  std::sort(got.begin(), got.end());
  if (got != expected) {
    throw Error(Errc::NotAPartitionOfChildren,
                "blocks do not partition the children of '" + std::string(v) + "'");
  }

  std::vector<std::vector<NodeId>> sets;
  for (auto it = blocks.begin(); it != blocks.end(); ++it) {
    if (it != singleton) sets.push_back(*it);
  }
  sets.insert(sets.end(), child_partition.begin(), child_partition.end());
  return SweepCover(std::move(sets));
}

namespace {

void require_valid(const Tree& tree, const SweepCover& cover) {
  auto report = validate(tree, cover);
  if (!report.valid) {
    throw Error(Errc::InvalidCover,
                "fails condition '" + std::string(to_string(report.violations.front())) + "'");
  }
}

void mark_ancestors(const Tree& tree, Tree::Index v, std::vector<bool>& keep) {
  for (auto p = tree.parent(v); p; p = tree.parent(*p)) keep[*p] = true;
}

}  // namespace

std::vector<Tree> induced_subgraphs(const Tree& tree, const SweepCover& cover) {
  require_valid(tree, cover);
  std::vector<Tree> out;
  for (const auto& block : cover.blocks()) {
    std::vector<bool> keep(tree.size(), false);
    for (const auto& label : block) {
      Tree::Index v = tree.index_of(label);
      mark_ancestors(tree, v, keep);
      for (Tree::Index d = v; d < tree.subtree_end(v); ++d) keep[d] = true;
    }
    out.push_back(tree.restrict_to(keep));
  }
  return out;
}

Tree embedding_tree(const Tree& tree, const SweepCover& cover, std::span<const NodeId> selection) {
  require_valid(tree, cover);
  if (selection.size() != cover.size()) {
    throw Error(Errc::BadSelection, "need one node per set: got " +
                                        std::to_string(selection.size()) + " for " +
                                        std::to_string(cover.size()) + " sets");
  }
  std::vector<bool> keep(tree.size(), false);
  for (std::size_t i = 0; i < selection.size(); ++i) {
    const auto& block = cover.blocks()[i];
    if (!std::binary_search(block.begin(), block.end(), selection[i])) {
      throw Error(Errc::BadSelection,
                  "'" + selection[i] + "' is not in set " + std::to_string(i));
    }
    Tree::Index v = tree.index_of(selection[i]);
    keep[v] = true;
    mark_ancestors(tree, v, keep);
  }
  return tree.restrict_to(keep);
}

std::size_t max_cover_size(const Tree& tree) { return tree.leaf_count(); }

std::string cover_to_json(const SweepCover& cover) {
  return nlohmann::json(cover.blocks()).dump();
}

SweepCover cover_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return SweepCover(j.get<std::vector<std::vector<NodeId>>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedLine, std::string("cover document: ") + e.what());
  }
}

std::string covers_to_json(std::span<const SweepCover> covers) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : covers) j.push_back(c.blocks());
  return j.dump();
}

}  // namespace sweepcover
