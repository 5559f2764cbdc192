#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sweepcover/cover.hpp"
#include "sweepcover/tree.hpp"

namespace sweepcover::testing {

inline Tree tree_of(const std::string& text) { return parse_tree(text); }

inline Tree path_tree(int m) {
  if (m == 1) return Tree::single_node("n0");
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.emplace_back("n" + std::to_string(i - 1), "n" + std::to_string(i));
  return Tree::from_edges(edges);
}

// Uniform restricted-growth style partition: each element joins a random
// existing block or opens a new one.
template <class T>
std::vector<std::vector<T>> random_partition(std::vector<T> elems, std::mt19937_64& rng) {
  std::shuffle(elems.begin(), elems.end(), rng);
  std::vector<std::vector<T>> blocks;
  for (auto& e : elems) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
    std::size_t b = pick(rng);
    if (b == blocks.size()) blocks.emplace_back();
    blocks[b].push_back(std::move(e));
  }
  return blocks;
}

// A random sweep-cover built without the cover algebra: cut every root-leaf
// path exactly once (stop at a node, or descend into all of its children),
// then split each group of chosen siblings into random blocks.
inline SweepCover random_cover(const Tree& tree, std::mt19937_64& rng, double stop = 0.35) {
  std::bernoulli_distribution halt(stop);
  std::vector<Tree::Index> cut;
  std::vector<Tree::Index> stack{0};
  while (!stack.empty()) {
    Tree::Index v = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v) || halt(rng)) {
      cut.push_back(v);
      continue;
    }
    for (Tree::Index c : tree.children(v)) stack.push_back(c);
  }
  if (cut.size() == 1 && cut[0] == 0) return SweepCover({{tree.root()}});

  std::map<Tree::Index, std::vector<NodeId>> groups;
  for (Tree::Index v : cut) groups[*tree.parent(v)].push_back(tree.label(v));
  std::vector<std::vector<NodeId>> sets;
  for (auto& [parent, kids] : groups) {
    for (auto& block : random_partition(kids, rng)) sets.push_back(std::move(block));
  }
  return SweepCover(std::move(sets));
}

inline std::vector<NodeId> random_selection(const SweepCover& cover, std::mt19937_64& rng) {
  std::vector<NodeId> out;
  for (const auto& block : cover.blocks()) {
    std::uniform_int_distribution<std::size_t> pick(0, block.size() - 1);
    out.push_back(block[pick(rng)]);
  }
  return out;
}

}  // namespace sweepcover::testing
