#include "sweepcover/enumerate.hpp"

#include <algorithm>
#include <optional>

namespace sweepcover {

std::vector<Composition> compositions(int k, int n) {
  if (k < 0 || n < 1) throw Error(Errc::InvalidParams, "compositions need k >= 0 and n >= 1");
  std::vector<Composition> out;
  for_each_composition(k, n, [&](std::span<const int> parts) {
    out.push_back({std::vector<int>(parts.begin(), parts.end())});
  });
  return out;
}

std::uint64_t count_compositions(int k, int n) {
  if (k < 0 || n < 1) throw Error(Errc::InvalidParams, "compositions need k >= 0 and n >= 1");
  std::uint64_t count = 0;
  for_each_composition(k, n, [&](std::span<const int>) { ++count; });
  return count;
}

namespace {

using Index = Tree::Index;
using IndexCover = std::vector<std::vector<Index>>;

SweepCover to_labels(const Tree& tree, const IndexCover& cover) {
  std::vector<std::vector<NodeId>> sets;
  sets.reserve(cover.size());
  for (const auto& block : cover) {
    std::vector<NodeId> labels;
    for (Index v : block) labels.push_back(tree.label(v));
    sets.push_back(std::move(labels));
  }
  return SweepCover(std::move(sets));
}

void check_n(int n) {
  if (n < 1) throw Error(Errc::InvalidN, "cover size must be >= 1, got " + std::to_string(n));
}

// Covers of a subtree depend only on (subtree root, size), so results are
// shared across the whole recursion.
class CoverFinder {
 public:
  explicit CoverFinder(const Tree& tree) : tree_(tree) {}

  const std::vector<IndexCover>& covers(Index root, int n) {
    auto key = std::make_pair(root, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto result = compute(root, n);
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  std::vector<IndexCover> compute(Index root, int n) {
    const Index bottom = lowest_known_descendant(tree_, root);
    const auto kids = tree_.children(bottom);
    std::set<IndexCover> found;

    if (n == 1) {
      // Each node on the path down to the lowest known descendant, then the
      // whole child set as one block.
      for (Index v : linear_path_from(tree_, root)) found.insert(IndexCover{std::vector<Index>{v}});
      if (!kids.empty()) found.insert(IndexCover{std::vector<Index>(kids.begin(), kids.end())});
      return {found.begin(), found.end()};
    }
    if (kids.empty()) return {};

    const int max_blocks = std::min<int>(n, static_cast<int>(kids.size()));
    for_each_set_partition(kids, max_blocks, [&](const SetPartition<Index>& partition) {
      auto split = split_partition(partition);
      const int r = static_cast<int>(split.rest.size());
      if (split.singles.empty()) {
        if (r == n) found.insert(normalized(split.rest));
        return;
      }
      if (r > n) return;
      std::sort(split.singles.begin(), split.singles.end(), [&](Index a, Index b) {
        return tree_.label(a) < tree_.label(b);
      });
      const int slots = static_cast<int>(split.singles.size());
      for_each_composition(n - r, slots, [&](std::span<const int> sizes) {
        std::vector<IndexCover> partial{split.rest};
        for (int k = 0; k < slots && !partial.empty(); ++k) {
          const auto& sub = covers(split.singles[static_cast<std::size_t>(k)],
                                   sizes[static_cast<std::size_t>(k)]);
          std::vector<IndexCover> next;
          next.reserve(partial.size() * sub.size());
          for (const auto& w : partial) {
            for (const auto& s : sub) {
              IndexCover merged = w;
              merged.insert(merged.end(), s.begin(), s.end());
              next.push_back(std::move(merged));
            }
          }
          partial = std::move(next);
        }
        for (auto& w : partial) {
          if (static_cast<int>(w.size()) == n) found.insert(normalized(std::move(w)));
        }
      });
    });
    return {found.begin(), found.end()};
  }

  static IndexCover normalized(IndexCover cover) {
    for (auto& b : cover) std::sort(b.begin(), b.end());
    std::sort(cover.begin(), cover.end());
    return cover;
  }

  const Tree& tree_;
  std::map<std::pair<Index, int>, std::vector<IndexCover>> memo_;
};

class BruteForce {
 public:
  BruteForce(const Tree& tree, int n) : tree_(tree), n_(n), touched_(tree.size(), 0) {
    candidates_.push_back({0});
    for (Index p = 0; p < tree.size(); ++p) {
      const auto kids = tree.children(p);
      if (kids.empty()) continue;
      if (kids.size() > 20) {
        throw Error(Errc::InvalidParams, "brute force supports at most 20 children per node");
      }
      for (std::uint32_t mask = 1; mask < (1u << kids.size()); ++mask) {
        std::vector<Index> block;
        for (std::size_t b = 0; b < kids.size(); ++b) {
          if (mask & (1u << b)) block.push_back(kids[b]);
        }
        candidates_.push_back(std::move(block));
      }
    }

    // reach_[c]: nodes equal or comparable to some member of candidate c.
    last_chance_.assign(tree.size(), 0);
    reach_.resize(candidates_.size());
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      std::vector<bool> mark(tree.size(), false);
      for (Index m : candidates_[c]) {
        for (auto p = tree.parent(m); p; p = tree.parent(*p)) mark[*p] = true;
        for (Index d = m; d < tree.subtree_end(m); ++d) mark[d] = true;
      }
      for (Index v = 0; v < tree.size(); ++v) {
        if (!mark[v]) continue;
        reach_[c].push_back(v);
        last_chance_[v] = c;
      }
    }
  }

  CoverSet run() {
    search(0);
    return std::move(found_);
  }

 private:
  void search(std::size_t next) {
    if (static_cast<int>(chosen_.size()) == n_) {
      IndexCover cover;
      for (std::size_t c : chosen_) cover.push_back(candidates_[c]);
      SweepCover labeled = to_labels(tree_, cover);
      if (validate(tree_, labeled).valid) found_.insert(std::move(labeled));
      return;
    }
    // A node nobody has touched yet must be touched by a later candidate,
    // and the earliest such deadline caps the next pick.
    std::optional<std::size_t> deadline;
    for (Index v = 0; v < tree_.size(); ++v) {
      if (touched_[v] != 0) continue;
      if (last_chance_[v] < next) return;
      deadline = std::min(deadline.value_or(last_chance_[v]), last_chance_[v]);
    }
    // Everything is touched, so any further block would collide.
    if (!deadline) return;
    for (std::size_t c = next; c <= *deadline; ++c) {
      // Overlap or ancestry with a chosen member cannot be repaired later.
      const auto& block = candidates_[c];
      if (std::any_of(block.begin(), block.end(), [&](Index m) { return touched_[m] > 0; })) {
        continue;
      }
      for (Index v : reach_[c]) ++touched_[v];
      chosen_.push_back(c);
      search(c + 1);
      chosen_.pop_back();
      for (Index v : reach_[c]) --touched_[v];
    }
  }

  const Tree& tree_;
  int n_;
  std::vector<std::vector<Index>> candidates_;
  std::vector<std::vector<Index>> reach_;
  std::vector<std::size_t> last_chance_;
  std::vector<int> touched_;
  std::vector<std::size_t> chosen_;
  CoverSet found_;
};

}  // namespace

CoverSet find_sweep_covers(const Tree& tree, int n) {
  check_n(n);
  CoverFinder finder(tree);
  CoverSet out;
  for (const auto& cover : finder.covers(0, n)) out.insert(to_labels(tree, cover));
  return out;
}

CoverSet brute_force_covers(const Tree& tree, int n) {
  check_n(n);
  return BruteForce(tree, n).run();
}

std::map<int, CoverSet> all_sweep_covers(const Tree& tree) {
  std::map<int, CoverSet> out;
  CoverFinder finder(tree);
  const int max_n = static_cast<int>(max_cover_size(tree));
  for (int n = 1; n <= max_n; ++n) {
    CoverSet& bucket = out[n];
    for (const auto& cover : finder.covers(0, n)) bucket.insert(to_labels(tree, cover));
  }
  return out;
}

}  // namespace sweepcover
