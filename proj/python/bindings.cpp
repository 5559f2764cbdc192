#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sweepcover/cli.hpp"
#include "sweepcover/count.hpp"
#include "sweepcover/cover.hpp"
#include "sweepcover/enumerate.hpp"
#include "sweepcover/error.hpp"
#include "sweepcover/tree.hpp"

namespace py = pybind11;
using namespace sweepcover;

namespace {

// Exact integers cross the boundary as decimal text.
py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

using Blocks = std::vector<std::vector<NodeId>>;

Blocks to_blocks(const SweepCover& c) { return c.blocks(); }

std::vector<Blocks> to_list(const CoverSet& set) {
  std::vector<Blocks> out;
  for (const auto& c : set) out.push_back(c.blocks());
  return out;
}

py::dict report_dict(const CoverReport& r) {
  py::list violations;
  for (auto c : r.violations) violations.append(std::string(to_string(c)));
  py::dict d;
  d["valid"] = r.valid;
  d["violations"] = violations;
  d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_sweepcover, m) {
  m.doc() = "Sweep-cover enumeration and counting on rooted trees";

  static py::exception<Error> error(m, "SweepcoverError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Tree>(m, "Tree")
      .def_static("parse", &parse_tree, py::arg("text"))
      .def_static("from_edges",
                  [](const std::vector<Edge>& edges) { return Tree::from_edges(edges); },
                  py::arg("edges"))
      .def_static("single_node", &Tree::single_node, py::arg("root"))
      .def_property_readonly("root", &Tree::root)
      .def_property_readonly("nodes", &Tree::nodes)
      .def("__len__", &Tree::size)
      .def("__contains__", &Tree::contains)
      .def("edges", &Tree::edges)
      .def("children", py::overload_cast<std::string_view>(&Tree::children, py::const_))
      .def("parent", py::overload_cast<std::string_view>(&Tree::parent, py::const_))
      .def("leaf_count", &Tree::leaf_count)
      .def("serialize", &serialize_tree)
      .def("canonical_code", [](const Tree& t) { return canonical_code(t); })
      .def("__repr__", [](const Tree& t) {
        return "<Tree root=" + t.root() + " nodes=" + std::to_string(t.size()) + ">";
      });

  m.def("parse_tree", &parse_tree, py::arg("text"));
  m.def("read_tree_file", &read_tree_file, py::arg("path"));
  m.def("depth", py::overload_cast<const Tree&, std::string_view>(&depth));
  m.def("linear_path_from",
        py::overload_cast<const Tree&, std::string_view>(&linear_path_from));
  m.def("lowest_known_descendant",
        py::overload_cast<const Tree&, std::string_view>(&lowest_known_descendant));
  m.def(
      "build_ild_truncated",
      [](int delta, int gamma, int star_levels) {
        return build_ild_truncated({delta, gamma, star_levels});
      },
      py::arg("delta"), py::arg("gamma"), py::arg("star_levels"));

  m.def(
      "validate",
      [](const Tree& t, const Blocks& cover) { return report_dict(validate(t, SweepCover(cover))); },
      py::arg("tree"), py::arg("cover"));
  m.def(
      "swap_children",
      [](const Tree& t, const Blocks& cover, const NodeId& v, const Blocks& partition) {
        return to_blocks(swap_children(t, SweepCover(cover), v, partition));
      },
      py::arg("tree"), py::arg("cover"), py::arg("v"), py::arg("partition"));
  m.def(
      "induced_subgraphs",
      [](const Tree& t, const Blocks& cover) { return induced_subgraphs(t, SweepCover(cover)); },
      py::arg("tree"), py::arg("cover"));
  m.def(
      "embedding_tree",
      [](const Tree& t, const Blocks& cover, const std::vector<NodeId>& selection) {
        return embedding_tree(t, SweepCover(cover), selection);
      },
      py::arg("tree"), py::arg("cover"), py::arg("selection"));
  m.def("max_cover_size", &max_cover_size);

  m.def(
      "find_sweep_covers", [](const Tree& t, int n) { return to_list(find_sweep_covers(t, n)); },
      py::arg("tree"), py::arg("n"));
  m.def(
      "brute_force_covers", [](const Tree& t, int n) { return to_list(brute_force_covers(t, n)); },
      py::arg("tree"), py::arg("n"));
  m.def("all_sweep_covers", [](const Tree& t) {
    std::map<int, std::vector<Blocks>> out;
    for (const auto& [n, set] : all_sweep_covers(t)) out[n] = to_list(set);
    return out;
  });

  m.def("stirling2", [](int n, int k) { return to_py(stirling2(n, k)); });
  m.def("count_nonsingleton", [](int n, int m) { return to_py(count_nonsingleton(n, m)); });
  m.def("raney", [](int p, int r, int k) { return to_py(raney({p, r, k})); });
  m.def("catalan", [](int k) { return to_py(catalan(k)); });
  m.def(
      "p_count", [](int delta, int gamma, int n) { return to_py(p_count(delta, gamma, n)); },
      py::arg("delta"), py::arg("gamma"), py::arg("n"));
  m.def(
      "p_table",
      [](int delta_lo, int delta_hi, int n_lo, int n_hi, int gamma) {
        py::list rows;
        for (const auto& row : p_table({delta_lo, delta_hi}, {n_lo, n_hi}, gamma).cells) {
          py::list values;
          for (const auto& v : row) values.append(to_py(v));
          rows.append(values);
        }
        return rows;
      },
      py::arg("delta_lo"), py::arg("delta_hi"), py::arg("n_lo"), py::arg("n_hi"),
      py::arg("gamma") = 0);
  m.def(
      "raney_bound_report",
      [](int delta, int gamma, int n_lo, int n_hi) {
        py::list rows;
        for (const auto& r : raney_bound_report(delta, gamma, {n_lo, n_hi})) {
          py::dict d;
          d["delta"] = r.delta;
          d["n"] = r.n;
          d["p"] = to_py(r.p);
          d["raney"] = to_py(r.raney);
          d["inequality_holds"] = r.inequality_holds;
          rows.append(d);
        }
        return rows;
      },
      py::arg("delta"), py::arg("gamma"), py::arg("n_lo"), py::arg("n_hi"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs one command line; returns (status, stdout, stderr).");
}
