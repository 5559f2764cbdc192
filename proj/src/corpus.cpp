#include "sweepcover/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sweepcover/enumerate.hpp"
#include "sweepcover/error.hpp"

namespace sweepcover {

namespace {

Tree from_parents(const std::vector<std::size_t>& parent, const std::vector<NodeId>& labels) {
  if (parent.size() == 1) return Tree::single_node(labels[0]);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < parent.size(); ++i) edges.emplace_back(labels[parent[i]], labels[i]);
  return Tree::from_edges(edges);
}

Tree relabel_preorder(const Tree& tree) {
  auto name = [&](const NodeId& label) { return "v" + std::to_string(tree.index_of(label)); };
  if (tree.size() == 1) return Tree::single_node("v0");
  std::vector<Edge> edges;
  for (const auto& [p, c] : tree.edges()) edges.emplace_back(name(p), name(c));
  return Tree::from_edges(edges);
}

}  // namespace

std::vector<Tree> all_rooted_trees(int max_nodes) {
  if (max_nodes < 1) throw Error(Errc::InvalidParams, "max_nodes must be >= 1");
  std::vector<Tree> out;
  // Grow every class of size k by one leaf in every position; the AHU code
  // collapses the duplicates.
  std::map<std::string, std::vector<std::size_t>> layer{{"()", {0}}};
  for (int size = 1; size <= max_nodes; ++size) {
    std::map<std::string, std::vector<std::size_t>> next;
    for (const auto& [code, parent] : layer) {
      std::vector<NodeId> labels;
      for (std::size_t i = 0; i < parent.size(); ++i) labels.push_back("v" + std::to_string(i));
      out.push_back(relabel_preorder(from_parents(parent, labels)));
      if (size == max_nodes) continue;
      for (std::size_t p = 0; p < parent.size(); ++p) {
        auto grown = parent;
        grown.push_back(p);
        labels.push_back("v" + std::to_string(parent.size()));
        next.emplace(canonical_code(from_parents(grown, labels)), std::move(grown));
        labels.pop_back();
      }
    }
    layer = std::move(next);
  }
  return out;
}

Tree random_tree(int nodes, std::mt19937_64& rng, bool random_labels) {
  if (nodes < 1) throw Error(Errc::InvalidParams, "nodes must be >= 1");
  const auto n = static_cast<std::size_t>(nodes);
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
  }

  std::vector<NodeId> labels;
  if (random_labels) {
    std::set<NodeId> used;
    std::uniform_int_distribution<int> letter(0, 25);
    std::uniform_int_distribution<int> length(1, 4);
    while (labels.size() < n) {
      NodeId s;
      for (int k = length(rng); k > 0; --k) s.push_back(static_cast<char>('a' + letter(rng)));
      if (used.insert(s).second) labels.push_back(std::move(s));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  }
  if (n == 1) return Tree::single_node(labels[0]);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(labels[parent[i]], labels[i]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return Tree::from_edges(edges);
}

OracleSummary oracle_check(const OracleOptions& options) {
  if (options.max_nodes < 1 || options.n_max < 1 || options.random_trees < 0) {
    throw Error(Errc::InvalidParams, "oracle check needs max_nodes >= 1, n_max >= 1");
  }
  std::vector<Tree> corpus = all_rooted_trees(options.max_nodes);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> size(1, options.max_nodes);
  for (int i = 0; i < options.random_trees; ++i) corpus.push_back(random_tree(size(rng), rng));

  OracleSummary summary;
  for (const auto& tree : corpus) {
    ++summary.trees;
    for (int n = 1; n <= options.n_max; ++n) {
      ++summary.pairs;
      auto found = find_sweep_covers(tree, n);
      auto expected = brute_force_covers(tree, n);
      if (found != expected && !summary.first_mismatch) {
        summary.first_mismatch =
            OracleMismatch{serialize_tree(tree), n, found.size(), expected.size()};
      }
    }
  }
  return summary;
}

}  // namespace sweepcover
