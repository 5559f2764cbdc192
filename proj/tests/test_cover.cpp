#include <random>

#include "doctest.h"

#include "sweepcover/corpus.hpp"
#include "sweepcover/cover.hpp"
#include "sweepcover/enumerate.hpp"
#include "sweepcover/error.hpp"
#include "support.hpp"

using namespace sweepcover;
using sweepcover::testing::random_cover;
using sweepcover::testing::random_partition;
using sweepcover::testing::random_selection;
using sweepcover::testing::tree_of;

namespace {

using Violations = std::vector<Condition>;

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidParams;
}

std::set<Edge> edge_set(const Tree& t) {
  auto e = t.edges();
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("covers are normalized") {
  SweepCover a({{"b", "a"}, {"c"}});
  SweepCover b({{"c"}, {"a", "b"}});
  CHECK(a == b);
  CHECK(a.blocks().front() == Block{"a", "b"});
  CHECK(cover_to_json(a) == R"([["a","b"],["c"]])");
  CHECK(cover_from_json(cover_to_json(a)) == a);
  CHECK_THROWS_AS(SweepCover({{"a"}, {}}), Error);
  CHECK(error_of([] { cover_from_json("[[1]]"); }) == Errc::MalformedLine);
  CHECK(error_of([] { cover_from_json("not json"); }) == Errc::MalformedLine);
}

TEST_CASE("cover relatives") {
  auto star = cover_relatives(tree_of("r a\nr b"), SweepCover({{"a", "b"}}));
  CHECK(star.ancestors == NodeSet{"r"});
  CHECK(star.descendants.empty());
  auto chain = cover_relatives(tree_of("a b\nb c"), SweepCover({{"b"}}));
  CHECK(chain.ancestors == NodeSet{"a"});
  CHECK(chain.descendants == NodeSet{"c"});
  auto mixed = cover_relatives(tree_of("r a\nr b\na c\na d"), SweepCover({{"c", "d"}, {"b"}}));
  CHECK(mixed.ancestors == NodeSet{"a", "r"});
  CHECK(mixed.descendants.empty());
}

TEST_CASE("validate: the four conditions") {
  Tree star = tree_of("r a\nr b");
  CHECK(validate(star, SweepCover({{"r"}})).valid);
  CHECK(validate(star, SweepCover({{"a"}, {"b"}})).valid);
  CHECK(validate(star, SweepCover({{"a", "b"}})).valid);

  auto ancestry = validate(star, SweepCover({{"r"}, {"a"}}));
  CHECK_FALSE(ancestry.valid);
  CHECK(ancestry.violations == Violations{Condition::NoAncestry});

  Tree t = tree_of("r a\nr b\na c");
  auto uncovered = validate(t, SweepCover({{"a"}}));
  CHECK(uncovered.violations == Violations{Condition::Coverage});
  REQUIRE(uncovered.witness);
  CHECK(*uncovered.witness == std::vector<NodeId>{"b"});

  auto overlap = validate(star, SweepCover({{"a"}, {"a", "b"}}));
  CHECK(overlap.violations.front() == Condition::Disjoint);

  Tree deep = tree_of("r a\nr b\na c");
  auto cousins = validate(deep, SweepCover({{"b", "c"}}));
  CHECK(cousins.violations == Violations{Condition::Siblings});

  CHECK(validate(Tree::single_node("x"), SweepCover({{"x"}})).valid);
  CHECK(error_of([&] { validate(star, SweepCover({{"zz"}})); }) == Errc::UnknownNode);
  CHECK(to_string(Condition::NoAncestry) == "no-ancestry");
}

TEST_CASE("validate reports every violation") {
  Tree t = tree_of("r a\nr b\na c\na d\nb e");
  // c and e are cousins, and a sits above c.
  auto report = validate(t, SweepCover({{"a"}, {"c", "e"}}));
  CHECK_FALSE(report.valid);
  CHECK(std::find(report.violations.begin(), report.violations.end(), Condition::Siblings) !=
        report.violations.end());
  CHECK(std::find(report.violations.begin(), report.violations.end(), Condition::NoAncestry) !=
        report.violations.end());
}

TEST_CASE("swap children") {
  Tree star = tree_of("r a\nr b");
  CHECK(swap_children(star, SweepCover({{"r"}}), "r", {{"a", "b"}}) == SweepCover({{"a", "b"}}));
  CHECK(swap_children(star, SweepCover({{"r"}}), "r", {{"a"}, {"b"}}) ==
        SweepCover({{"a"}, {"b"}}));
  Tree chain = tree_of("a b\nb c");
  CHECK(swap_children(chain, SweepCover({{"a"}}), "a", {{"b"}}) == SweepCover({{"b"}}));

  CHECK(error_of([&] { swap_children(star, SweepCover({{"a", "b"}}), "a", {{"x"}}); }) ==
        Errc::NotASingletonMember);
  CHECK(error_of([&] { swap_children(star, SweepCover({{"a"}, {"b"}}), "a", {}); }) ==
        Errc::LeafNode);
  CHECK(error_of([&] { swap_children(star, SweepCover({{"r"}}), "r", {{"a"}}); }) ==
        Errc::NotAPartitionOfChildren);
  CHECK(error_of([&] { swap_children(star, SweepCover({{"r"}}), "r", {{"a"}, {"a", "b"}}); }) ==
        Errc::NotAPartitionOfChildren);
}

TEST_CASE("induced sub-graphs") {
  Tree star = tree_of("r a\nr b");
  auto parts = induced_subgraphs(star, SweepCover({{"a"}, {"b"}}));
  REQUIRE(parts.size() == 2);
  CHECK(serialize_tree(parts[0]) == "r a\n");
  CHECK(serialize_tree(parts[1]) == "r b\n");

  Tree t = tree_of("r a\nr b\na c");
  auto whole = induced_subgraphs(t, SweepCover({{"r"}}));
  REQUIRE(whole.size() == 1);
  CHECK(serialize_tree(whole[0]) == serialize_tree(t));
  CHECK(error_of([&] { induced_subgraphs(t, SweepCover({{"a"}})); }) == Errc::InvalidCover);
}

TEST_CASE("embedding trees") {
  // v1 -> {v2, v3}, v2 -> {v4, v5, v6}
  Tree t = tree_of("v1 v2\nv1 v3\nv2 v4\nv2 v5\nv2 v6");
  SweepCover s({{"v4", "v5", "v6"}, {"v3"}});
  // Selections follow the normalized block order: {v3} first.
  std::vector<NodeId> pick{"v3", "v5"};
  Tree e = embedding_tree(t, s, pick);
  CHECK(edge_set(e) == std::set<Edge>{{"v1", "v2"}, {"v1", "v3"}, {"v2", "v5"}});
  CHECK(e.leaf_count() == 2);

  std::vector<NodeId> other{"v3", "v6"};
  CHECK(canonical_code(embedding_tree(t, s, other)) == canonical_code(e));

  std::vector<NodeId> root{"v1"};
  CHECK(embedding_tree(t, SweepCover({{"v1"}}), root).size() == 1);

  std::vector<NodeId> wrong{"v5", "v3"};
  CHECK(error_of([&] { embedding_tree(t, s, wrong); }) == Errc::BadSelection);
  std::vector<NodeId> short_pick{"v5"};
  CHECK(error_of([&] { embedding_tree(t, s, short_pick); }) == Errc::BadSelection);
}

TEST_CASE("two covers can share an embedding tree") {
  // Exchanging b and c between two blocks changes the cover but not the
  // tree picked out by a and d.
  Tree t = tree_of("r a\nr b\nr c\nr d");
  SweepCover first({{"a", "b"}, {"c", "d"}});
  SweepCover second({{"a", "c"}, {"b", "d"}});
  REQUIRE(first != second);
  REQUIRE(is_sweep_cover(t, first));
  REQUIRE(is_sweep_cover(t, second));
  std::vector<NodeId> pick{"a", "d"};
  CHECK(edge_set(embedding_tree(t, first, pick)) == edge_set(embedding_tree(t, second, pick)));
}

TEST_CASE("max cover size") {
  CHECK(max_cover_size(tree_of("r a\nr b")) == 2);
  CHECK(max_cover_size(tree_of("a b\nb c\nc d")) == 1);
  CHECK(max_cover_size(tree_of("r a\nr b\na c\na d")) == 3);
}

TEST_CASE("property: random covers and the cover algebra") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    Tree t = random_tree(size(rng), rng);
    SweepCover s = random_cover(t, rng);
    CAPTURE(serialize_tree(t));
    CAPTURE(cover_to_json(s));
    REQUIRE(is_sweep_cover(t, s));
    CHECK(s.size() <= max_cover_size(t));

    // Condition 3 through cover_relatives.
    auto rel = cover_relatives(t, s);
    NodeSet all(rel.ancestors.begin(), rel.ancestors.end());
    all.insert(rel.descendants.begin(), rel.descendants.end());
    for (const auto& v : s.members()) all.insert(v);
    CHECK(all.size() == t.size());

    // Any singleton with children can be swapped out.
    for (const auto& block : s.blocks()) {
      if (block.size() != 1 || t.is_leaf(t.index_of(block[0]))) continue;
      auto kids = t.children(block[0]);
      auto swapped = swap_children(t, s, block[0], random_partition(kids, rng));
      CHECK(is_sweep_cover(t, swapped));
    }

    auto parts = induced_subgraphs(t, s);
    std::set<NodeId> nodes;
    std::set<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Tree& sub = parts[i];
      CHECK(sub.root() == t.root());
      nodes.insert(sub.nodes().begin(), sub.nodes().end());
      auto e = edge_set(sub);
      edges.insert(e.begin(), e.end());
      SweepCover own({s.blocks()[i]});
      CHECK(is_sweep_cover(sub, own));
      // A block of two or more hangs off the end of the root's linear path;
      // a singleton lies on that path.
      const auto& block = s.blocks()[i];
      if (block.size() >= 2) {
        CHECK(*sub.parent(block.front()) == lowest_known_descendant(sub, sub.root()));
      } else {
        auto path = linear_path_from(sub, sub.root());
        CHECK(std::find(path.begin(), path.end(), block.front()) != path.end());
      }
    }
    CHECK(nodes.size() == t.size());
    CHECK(edges == edge_set(t));

    auto e1 = embedding_tree(t, s, random_selection(s, rng));
    auto e2 = embedding_tree(t, s, random_selection(s, rng));
    CHECK(canonical_code(e1) == canonical_code(e2));
    CHECK(e1.leaf_count() == s.size());
  }
}
