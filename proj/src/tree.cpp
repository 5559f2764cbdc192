#include "sweepcover/tree.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sweepcover/error.hpp"

namespace sweepcover {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

namespace {

void require_label(std::string_view label) {
  if (!is_valid_label(label)) {
    throw Error(Errc::InvalidLabel, "bad node label '" + std::string(label) + "'");
  }
}

}  // namespace

Tree Tree::build(std::vector<NodeId> labels, const std::vector<std::vector<std::size_t>>& kids,
                 std::size_t root) {
  // Iterative preorder so deep paths do not blow the stack.
  std::vector<std::size_t> order;
  order.reserve(labels.size());
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
  }

  std::vector<Index> new_index(labels.size());
  for (Index i = 0; i < order.size(); ++i) new_index[order[i]] = i;

  Tree t;
  const std::size_t n = order.size();
  t.labels_.resize(n);
  t.parent_.assign(n, std::nullopt);
  t.children_.assign(n, {});
  t.end_.assign(n, 0);
  t.depth_.assign(n, 0);
  for (Index i = 0; i < n; ++i) {
    std::size_t old = order[i];
    t.labels_[i] = std::move(labels[old]);
    for (std::size_t c : kids[old]) {
      Index ci = new_index[c];
      t.children_[i].push_back(ci);
      t.parent_[ci] = i;
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (t.parent_[i]) t.depth_[i] = t.depth_[*t.parent_[i]] + 1;
  }
  for (Index i = n; i-- > 0;) {
    t.end_[i] = t.children_[i].empty() ? i + 1 : t.end_[t.children_[i].back()];
  }
  t.index_.reserve(n);
  for (Index i = 0; i < n; ++i) t.index_.emplace(t.labels_[i], i);
  return t;
}

Tree Tree::single_node(NodeId root) {
  require_label(root);
  std::vector<NodeId> labels{std::move(root)};
  return build(std::move(labels), {{}}, 0);
}

Tree Tree::from_edges(std::span<const Edge> edges) {
  if (edges.empty()) throw Error(Errc::EmptyDocument, "no edges");

  std::vector<NodeId> labels;
  std::unordered_map<std::string, std::size_t> ids;
  auto intern = [&](const NodeId& label) {
    require_label(label);
    auto [it, inserted] = ids.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<std::vector<std::size_t>> kids;
  std::vector<std::optional<std::size_t>> parent;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [p, c] : edges) {
    std::size_t pi = intern(p);
    std::size_t ci = intern(c);
    kids.resize(labels.size());
    parent.resize(labels.size());
    if (pi == ci) throw Error(Errc::CycleDetected, "self loop at '" + p + "'");
    if (!seen.emplace(pi, ci).second) {
      throw Error(Errc::DuplicateEdge, "edge '" + p + " " + c + "' listed twice");
    }
    if (parent[ci]) {
      throw Error(Errc::NodeWithTwoParents,
                  "'" + c + "' has parents '" + labels[*parent[ci]] + "' and '" + p + "'");
    }
    parent[ci] = pi;
    kids[pi].push_back(ci);
  }

  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!parent[i]) roots.push_back(i);
  }
  if (roots.empty()) throw Error(Errc::CycleDetected, "every node has a parent");
  if (roots.size() > 1) {
    throw Error(Errc::MultipleRoots,
                "roots '" + labels[roots[0]] + "' and '" + labels[roots[1]] + "'");
  }

  // With a single root, anything unreachable from it sits on a cycle.
  std::vector<bool> reached(labels.size(), false);
  std::vector<std::size_t> stack{roots[0]};
  std::size_t count = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    reached[v] = true;
    ++count;
    for (std::size_t c : kids[v]) stack.push_back(c);
  }
  if (count != labels.size()) {
    auto it = std::find(reached.begin(), reached.end(), false);
    throw Error(Errc::CycleDetected,
                "'" + labels[static_cast<std::size_t>(it - reached.begin())] + "' lies on a cycle");
  }
  return build(std::move(labels), kids, roots[0]);
}

bool Tree::contains(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

Tree::Index Tree::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw Error(Errc::UnknownNode, "'" + std::string(label) + "'");
  return it->second;
}

std::optional<Tree::Index> Tree::parent(Index i) const { return parent_[i]; }

std::optional<NodeId> Tree::parent(std::string_view label) const {
  auto p = parent_[index_of(label)];
  if (!p) return std::nullopt;
  return labels_[*p];
}

std::vector<NodeId> Tree::children(std::string_view label) const {
  std::vector<NodeId> out;
  for (Index c : children_[index_of(label)]) out.push_back(labels_[c]);
  return out;
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(size() - 1);
  for (Index i = 1; i < size(); ++i) out.emplace_back(labels_[*parent_[i]], labels_[i]);
  return out;
}

std::size_t Tree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(children_.begin(), children_.end(), [](const auto& c) { return c.empty(); }));
}

Tree Tree::subtree(Index i) const {
  std::vector<NodeId> labels(labels_.begin() + static_cast<std::ptrdiff_t>(i),
                             labels_.begin() + static_cast<std::ptrdiff_t>(end_[i]));
  std::vector<std::vector<std::size_t>> kids(labels.size());
  for (Index j = i; j < end_[i]; ++j) {
    for (Index c : children_[j]) kids[j - i].push_back(c - i);
  }
  return build(std::move(labels), kids, 0);
}

Tree Tree::restrict_to(const std::vector<bool>& keep) const {
  if (keep.size() != size() || !keep[0]) {
    throw Error(Errc::InvalidParams, "restriction must keep the root");
  }
  std::vector<NodeId> labels;
  std::vector<std::size_t> remap(size(), 0);
  for (Index i = 0; i < size(); ++i) {
    if (!keep[i]) continue;
    if (parent_[i] && !keep[*parent_[i]]) {
      throw Error(Errc::InvalidParams, "restriction drops the parent of '" + labels_[i] + "'");
    }
    remap[i] = labels.size();
    labels.push_back(labels_[i]);
  }
  std::vector<std::vector<std::size_t>> kids(labels.size());
  for (Index i = 0; i < size(); ++i) {
    if (!keep[i]) continue;
    for (Index c : children_[i]) {
      if (keep[c]) kids[remap[i]].push_back(remap[c]);
    }
  }
  return build(std::move(labels), kids, 0);
}

Tree parse_tree(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<NodeId> declared;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      declared.push_back(std::move(tokens[0]));
    } else if (tokens.size() == 2) {
      edges.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
    } else {
      throw Error(Errc::MalformedLine, "line " + std::to_string(line_no) +
                                           ": expected 'parent child', got " +
                                           std::to_string(tokens.size()) + " fields");
    }
  }

  if (edges.empty()) {
    if (declared.empty()) throw Error(Errc::EmptyDocument, "no edges");
    std::set<NodeId> distinct(declared.begin(), declared.end());
    if (distinct.size() > 1) {
      throw Error(Errc::MultipleRoots, "isolated nodes '" + *distinct.begin() + "' and '" +
                                           *std::next(distinct.begin()) + "'");
    }
    return Tree::single_node(declared.front());
  }
  Tree tree = Tree::from_edges(edges);
  for (const auto& d : declared) {
    if (!tree.contains(d)) {
      throw Error(Errc::MultipleRoots, "isolated node '" + d + "' besides root '" + tree.root() + "'");
    }
  }
  return tree;
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::EmptyDocument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tree(buf.str());
}

std::string serialize_tree(const Tree& tree) {
  if (tree.size() == 1) return tree.root() + "\n";
  std::string out;
  std::vector<Tree::Index> stack{0};
  while (!stack.empty()) {
    Tree::Index v = stack.back();
    stack.pop_back();
    std::vector<Tree::Index> kids(tree.children(v).begin(), tree.children(v).end());
    std::sort(kids.begin(), kids.end(),
              [&](Tree::Index a, Tree::Index b) { return tree.label(a) < tree.label(b); });
    for (Tree::Index c : kids) out += tree.label(v) + " " + tree.label(c) + "\n";
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::size_t depth(const Tree& tree, std::string_view v) { return tree.depth(tree.index_of(v)); }

std::vector<Tree::Index> linear_path_from(const Tree& tree, Tree::Index v) {
  std::vector<Tree::Index> path{v};
  while (tree.out_degree(v) == 1) {
    v = tree.children(v).front();
    path.push_back(v);
  }
  return path;
}

Tree::Index lowest_known_descendant(const Tree& tree, Tree::Index v) {
  while (tree.out_degree(v) == 1) v = tree.children(v).front();
  return v;
}

std::vector<NodeId> linear_path_from(const Tree& tree, std::string_view v) {
  std::vector<NodeId> out;
  for (Tree::Index i : linear_path_from(tree, tree.index_of(v))) out.push_back(tree.label(i));
  return out;
}

NodeId lowest_known_descendant(const Tree& tree, std::string_view v) {
  return tree.label(lowest_known_descendant(tree, tree.index_of(v)));
}

Relatives relatives(const Tree& tree, const NodeSet& vs) {
  std::vector<bool> anc(tree.size(), false);
  std::vector<bool> desc(tree.size(), false);
  for (const auto& label : vs) {
    Tree::Index v = tree.index_of(label);
    for (auto p = tree.parent(v); p; p = tree.parent(*p)) anc[*p] = true;
    for (Tree::Index d = v + 1; d < tree.subtree_end(v); ++d) desc[d] = true;
  }
  Relatives r;
  for (Tree::Index i = 0; i < tree.size(); ++i) {
    if (anc[i]) r.ancestors.insert(tree.label(i));
    if (desc[i]) r.descendants.insert(tree.label(i));
  }
  return r;
}

void check_ild_spec(const IldSpec& spec) {
  if (spec.delta < 2 || spec.gamma < 0 || spec.star_levels < 1) {
    throw Error(Errc::InvalidParams, "ILD parameters need delta >= 2, gamma >= 0, star_levels >= 1");
  }
}

Tree build_ild_truncated(const IldSpec& spec) {
  check_ild_spec(spec);
  std::vector<Edge> edges;
  struct Pending {
    NodeId head;
    int level;
  };
  std::vector<Pending> todo{{"s", 1}};
  while (!todo.empty()) {
    auto [head, level] = todo.back();
    todo.pop_back();
    NodeId star = head;
    for (int step = 0; step < spec.gamma; ++step) {
      NodeId next = star + ".p";
      edges.emplace_back(star, next);
      star = std::move(next);
    }
    for (int i = 1; i <= spec.delta; ++i) {
      NodeId child = star + "." + std::to_string(i);
      edges.emplace_back(star, child);
      if (level < spec.star_levels) todo.push_back({child, level + 1});
    }
  }
  return Tree::from_edges(edges);
}

std::string canonical_code(const Tree& tree, Tree::Index subtree_root) {
  const Tree::Index end = tree.subtree_end(subtree_root);
  std::vector<std::string> code(end - subtree_root);
  // Children follow their parent in preorder, so a reverse sweep sees them first.
  for (Tree::Index i = end; i-- > subtree_root;) {
    std::vector<std::string> parts;
    for (Tree::Index c : tree.children(i)) parts.push_back(std::move(code[c - subtree_root]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    code[i - subtree_root] = std::move(s);
  }
  return std::move(code.front());
}

std::string canonical_code(const Tree& tree) { return canonical_code(tree, 0); }

}  // namespace sweepcover
