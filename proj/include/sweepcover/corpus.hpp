#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sweepcover/tree.hpp"

namespace sweepcover {

// One representative per isomorphism class of rooted trees with 1..max_nodes
// nodes, labeled v0, v1, ... in preorder. Ordered by size, then by code.
std::vector<Tree> all_rooted_trees(int max_nodes);

// A random recursive tree on `nodes` nodes with shuffled child order and,
// when requested, shuffled opaque labels.
Tree random_tree(int nodes, std::mt19937_64& rng, bool random_labels = true);

struct OracleMismatch {
  std::string tree;  // edge-list document
  int n = 0;
  std::size_t algorithm_count = 0;
  std::size_t oracle_count = 0;
};

struct OracleSummary {
  std::size_t trees = 0;
  std::size_t pairs = 0;
  std::optional<OracleMismatch> first_mismatch;
  bool ok() const { return !first_mismatch; }
};

struct OracleOptions {
  int max_nodes = 7;
  int n_max = 5;
  int random_trees = 100;
  std::uint64_t seed = 20201013;
};

// Compares find_sweep_covers against brute_force_covers on every rooted tree
// up to max_nodes plus a batch of randomly labeled ones, for n = 1..n_max.
OracleSummary oracle_check(const OracleOptions& options);

}  // namespace sweepcover
