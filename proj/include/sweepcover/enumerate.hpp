#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "sweepcover/cover.hpp"
#include "sweepcover/error.hpp"
#include "sweepcover/tree.hpp"

namespace sweepcover {

// An ordered list of strictly positive parts.
struct Composition {
  std::vector<int> parts;
  auto operator<=>(const Composition&) const = default;
};

namespace detail {

template <class Fn>
void compositions_rec(int remaining, int slots, std::vector<int>& parts, Fn& fn) {
  if (slots == 0) {
    if (remaining == 0) fn(std::span<const int>(parts));
    return;
  }
  // Leave at least one for each later slot.
  for (int first = 1; first <= remaining - (slots - 1); ++first) {
    parts.push_back(first);
    compositions_rec(remaining - first, slots - 1, parts, fn);
    parts.pop_back();
  }
}

}  // namespace detail

// Visits every composition of k into n positive parts in lexicographic order.
// n == 0 visits the empty composition iff k == 0.
template <class Fn>
void for_each_composition(int k, int n, Fn&& fn) {
  if (k < 0 || n < 0) return;
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(n));
  detail::compositions_rec(k, n, parts, fn);
}

std::vector<Composition> compositions(int k, int n);
// Same walk, nothing materialized.
std::uint64_t count_compositions(int k, int n);

template <class T>
using SetPartition = std::vector<std::vector<T>>;

namespace detail {

template <class T, class Fn>
void set_partitions_rec(std::span<const T> elems, std::size_t next, std::size_t max_blocks,
                        SetPartition<T>& blocks, Fn& fn) {
  if (next == elems.size()) {
    fn(static_cast<const SetPartition<T>&>(blocks));
    return;
  }
  // Indexed on purpose: deeper calls push_back onto blocks.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(elems[next]);
    set_partitions_rec(elems, next + 1, max_blocks, blocks, fn);
    blocks[i].pop_back();
  }
  if (blocks.size() < max_blocks) {
    blocks.push_back({elems[next]});
    set_partitions_rec(elems, next + 1, max_blocks, blocks, fn);
    blocks.pop_back();
  }
}

template <class T, class Fn>
void nonsingleton_rec(std::span<const T> elems, std::size_t next, std::size_t m,
                      SetPartition<T>& blocks, Fn& fn) {
  const std::size_t left = elems.size() - next;
  std::size_t need = 2 * (m - blocks.size());
  for (const auto& b : blocks) need += b.size() < 2 ? 2 - b.size() : 0;
  if (need > left) return;
  if (next == elems.size()) {
    fn(static_cast<const SetPartition<T>&>(blocks));
    return;
  }
  // Indexed on purpose: deeper calls push_back onto blocks.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(elems[next]);
    nonsingleton_rec(elems, next + 1, m, blocks, fn);
    blocks[i].pop_back();
  }
  if (blocks.size() < m) {
    blocks.push_back({elems[next]});
    nonsingleton_rec(elems, next + 1, m, blocks, fn);
    blocks.pop_back();
  }
}

}  // namespace detail

// Restricted-growth enumeration: each element joins an existing block (in
// block order) or opens a new one, so every partition into at most
// max_blocks blocks appears exactly once.
template <class T, class Fn>
void for_each_set_partition(std::span<const T> elems, int max_blocks, Fn&& fn) {
  if (max_blocks < 1) throw Error(Errc::InvalidParams, "max_blocks must be >= 1");
  if (elems.empty()) return;
  SetPartition<T> blocks;
  detail::set_partitions_rec(elems, 0, static_cast<std::size_t>(max_blocks), blocks, fn);
}

template <class T>
std::vector<SetPartition<T>> set_partitions(std::span<const T> elems, int max_blocks) {
  std::vector<SetPartition<T>> out;
  for_each_set_partition(elems, max_blocks, [&](const SetPartition<T>& p) { out.push_back(p); });
  return out;
}

// Partitions into exactly m blocks, each holding at least two elements.
template <class T, class Fn>
void for_each_nonsingleton_partition(std::span<const T> elems, int m, Fn&& fn) {
  if (m < 1) throw Error(Errc::InvalidParams, "m must be >= 1");
  SetPartition<T> blocks;
  detail::nonsingleton_rec(elems, 0, static_cast<std::size_t>(m), blocks, fn);
}

template <class T>
std::vector<SetPartition<T>> nonsingleton_partitions(std::span<const T> elems, int m) {
  std::vector<SetPartition<T>> out;
  for_each_nonsingleton_partition(elems, m,
                                  [&](const SetPartition<T>& p) { out.push_back(p); });
  return out;
}

template <class T>
std::vector<SetPartition<T>> set_partitions(const std::vector<T>& elems, int max_blocks) {
  return set_partitions(std::span<const T>(elems), max_blocks);
}

template <class T>
std::vector<SetPartition<T>> nonsingleton_partitions(const std::vector<T>& elems, int m) {
  return nonsingleton_partitions(std::span<const T>(elems), m);
}

// Singleton blocks (L) versus blocks of two or more (R).
template <class T>
struct PartitionSplit {
  std::vector<T> singles;
  SetPartition<T> rest;
};

template <class T>
PartitionSplit<T> split_partition(const SetPartition<T>& partition) {
  PartitionSplit<T> split;
  for (const auto& b : partition) {
    if (b.size() == 1) {
      split.singles.push_back(b.front());
    } else {
      split.rest.push_back(b);
    }
  }
  return split;
}

using CoverSet = std::set<SweepCover>;

// All sweep-covers of size n, built recursively from the children of the
// root's lowest known descendant. Throws Error(InvalidN) for n < 1.
CoverSet find_sweep_covers(const Tree& tree, int n);

// Reference enumeration: every collection of n disjoint sibling-subsets
// (plus the root singleton), kept when validate() accepts it. Partial
// collections are abandoned once they break disjointness or ancestry, or
// leave a node that no remaining candidate could cover.
CoverSet brute_force_covers(const Tree& tree, int n);

// find_sweep_covers for every n from 1 to max_cover_size.
std::map<int, CoverSet> all_sweep_covers(const Tree& tree);

}  // namespace sweepcover
