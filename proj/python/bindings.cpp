#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "restless/errors.hpp"
#include "restless/generators.hpp"
#include "restless/io.hpp"
#include "restless/model.hpp"
#include "restless/oracle.hpp"
#include "restless/solver_general.hpp"
#include "restless/solver_unit.hpp"
#include "restless/widths.hpp"

namespace py = pybind11;
using namespace restless;

namespace {

std::vector<TimedArc> to_arcs(const std::vector<std::tuple<NodeId, NodeId, Time, Time>>& in) {
  std::vector<TimedArc> out;
  out.reserve(in.size());
  for (const auto& [u, v, tau, d] : in) out.push_back({u, v, tau, d});
  return out;
}

std::vector<IntervalTimedArc> to_interval_arcs(
    const std::vector<std::tuple<NodeId, NodeId, Time, Time, Time>>& in) {
  std::vector<IntervalTimedArc> out;
  out.reserve(in.size());
  for (const auto& [u, v, a, b, d] : in) out.push_back({u, v, a, b, d});
  return out;
}

py::tuple arc_tuple(const TimedArc& a) { return py::make_tuple(a.u, a.v, a.tau, a.delta); }

py::list path_list(const TemporalPath& p) {
  py::list out;
  for (const auto& a : p.arcs) out.append(arc_tuple(a));
  return out;
}

TemporalPath to_path(const std::vector<std::tuple<NodeId, NodeId, Time, Time>>& in) {
  return TemporalPath{to_arcs(in)};
}

py::dict instance_dict(const auto& inst) {
  py::dict d;
  d["graph"] = inst.graph;
  d["source"] = inst.source;
  d["target"] = inst.target;
  d["delta"] = inst.delta_max;
  d["labels"] = inst.labels;
  return d;
}

}  // namespace

PYBIND11_MODULE(_restless, m) {
  m.doc() = "restless temporal path reachability";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ModelMismatchError>(m, "ModelMismatchError", base.ptr());
  py::register_exception<ArcNotInGraphError>(m, "ArcNotInGraphError", base.ptr());
  py::register_exception<NoPathError>(m, "NoPathError", base.ptr());
  py::register_exception<RetrievalMisuseError>(m, "RetrievalMisuseError", base.ptr());
  py::register_exception<ResourceGuardError>(m, "ResourceGuardError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<PointTemporalGraph>(m, "PointTemporalGraph")
      .def(py::init([](std::size_t n, const std::vector<std::tuple<NodeId, NodeId, Time, Time>>& arcs,
                       bool non_strict) { return PointTemporalGraph(n, to_arcs(arcs), non_strict); }),
           py::arg("n"), py::arg("arcs"), py::arg("non_strict") = false)
      .def_property_readonly("node_count", &PointTemporalGraph::node_count)
      .def_property_readonly("arc_count", &PointTemporalGraph::arc_count)
      .def_property_readonly("lifetime", &PointTemporalGraph::lifetime)
      .def_property_readonly("non_strict", &PointTemporalGraph::non_strict)
      .def_property_readonly("uniform_delay_one", &PointTemporalGraph::uniform_delay_one)
      .def_property_readonly("arcs",
                             [](const PointTemporalGraph& g) {
                               py::list out;
                               for (const auto& a : g.arcs()) out.append(arc_tuple(a));
                               return out;
                             })
      .def(py::self == py::self)
      .def("__repr__", [](const PointTemporalGraph& g) {
        return "<PointTemporalGraph n=" + std::to_string(g.node_count()) +
               " arcs=" + std::to_string(g.arc_count()) + ">";
      });

  py::class_<IntervalTemporalGraph>(m, "IntervalTemporalGraph")
      .def(py::init([](std::size_t n,
                       const std::vector<std::tuple<NodeId, NodeId, Time, Time, Time>>& arcs) {
             return IntervalTemporalGraph(n, to_interval_arcs(arcs));
           }),
           py::arg("n"), py::arg("arcs"))
      .def_property_readonly("node_count", &IntervalTemporalGraph::node_count)
      .def_property_readonly("arc_count", &IntervalTemporalGraph::arc_count)
      .def_property_readonly("lifetime", &IntervalTemporalGraph::lifetime)
      .def_property_readonly("arcs",
                             [](const IntervalTemporalGraph& g) {
                               py::list out;
                               for (const auto& a : g.arcs())
                                 out.append(py::make_tuple(a.u, a.v, a.tau_start, a.tau_end, a.delta));
                               return out;
                             })
      .def(py::self == py::self);

  py::class_<SolveStats>(m, "SolveStats")
      .def_readonly("peak_table_size", &SolveStats::peak_table_size)
      .def_readonly("peak_time_set_size", &SolveStats::peak_time_set_size)
      .def_readonly("max_time_shrinks", &SolveStats::max_time_shrinks)
      .def_readonly("extensions", &SolveStats::extensions);

  py::class_<ReachResult>(m, "ReachResult")
      .def_readonly("source", &ReachResult::source)
      .def_readonly("delta", &ReachResult::delta_max)
      .def_readonly("reachable", &ReachResult::reachable)
      .def_readonly("has_records", &ReachResult::has_records)
      .def_readonly("stats", &ReachResult::stats)
      .def("reachable_nodes", &ReachResult::reachable_nodes);

  m.def(
      "solve_unit",
      [](const PointTemporalGraph& g, NodeId s, Time delta, bool record_paths, bool prune,
         bool non_strict) {
        UnitOptions o;
        o.record_paths = record_paths;
        o.prune = prune;
        o.non_strict = non_strict;
        py::gil_scoped_release nogil;
        return solve_unit(g, s, delta, o);
      },
      py::arg("graph"), py::arg("source"), py::arg("delta"), py::arg("record_paths") = false,
      py::arg("prune") = false, py::arg("non_strict") = false);

  m.def(
      "solve_general",
      [](const PointTemporalGraph& g, NodeId s, Time delta, bool record_paths, bool prune) {
        GeneralOptions o;
        o.record_paths = record_paths;
        o.prune = prune;
        py::gil_scoped_release nogil;
        return solve_general(g, s, delta, o);
      },
      py::arg("graph"), py::arg("source"), py::arg("delta"), py::arg("record_paths") = false,
      py::arg("prune") = false);

  m.def(
      "retrieve_path",
      [](const ReachResult& r, const PointTemporalGraph& g, NodeId v) {
        return path_list(retrieve_path(r, g, r.source, v, r.delta_max));
      },
      py::arg("result"), py::arg("graph"), py::arg("target"));
  m.def(
      "retrieve_path_general",
      [](const ReachResult& r, const PointTemporalGraph& g, NodeId v) {
        return path_list(retrieve_path_general(r, g, r.source, v, r.delta_max));
      },
      py::arg("result"), py::arg("graph"), py::arg("target"));

  m.def(
      "check_restless_path",
      [](const PointTemporalGraph& g, const std::vector<std::tuple<NodeId, NodeId, Time, Time>>& p,
         NodeId s, NodeId t, Time delta) { return check_restless_path(g, to_path(p), s, t, delta); },
      py::arg("graph"), py::arg("path"), py::arg("source"), py::arg("target"), py::arg("delta"));

  m.def("expand_interval_to_point", &expand_interval_to_point, py::arg("graph"),
        py::arg("cap") = kDefaultExpansionCap);

  m.def("vertex_im_width", &vertex_im_width, py::arg("graph"));
  m.def("arc_im_width", &arc_im_width, py::arg("graph"));
  m.def("interval_vertex_im_width", &interval_vertex_im_width, py::arg("graph"));

  m.def(
      "oracle_reachable",
      [](const PointTemporalGraph& g, NodeId s, Time delta, bool non_strict) {
        OracleOptions o;
        o.non_strict = non_strict;
        const auto r = oracle_reachable(g, s, delta, o);
        py::list witness;
        for (const auto& w : r.witness) {
          if (w) witness.append(path_list(*w));
          else witness.append(py::none());
        }
        return py::make_tuple(r.reachable, witness);
      },
      py::arg("graph"), py::arg("source"), py::arg("delta"), py::arg("non_strict") = false);
  m.def("subset_sum_bruteforce", &subset_sum_bruteforce, py::arg("xs"), py::arg("target"));
  m.def(
      "sat_bruteforce",
      [](std::size_t n, const std::vector<std::vector<int>>& clauses, bool strict) {
        return sat_bruteforce(CnfFormula{n, clauses}, strict);
      },
      py::arg("variables"), py::arg("clauses"), py::arg("require_exact_34") = false);

  m.def(
      "gen_sat_instance",
      [](std::size_t n, const std::vector<std::vector<int>>& clauses) {
        return instance_dict(gen_sat_instance(CnfFormula{n, clauses}));
      },
      py::arg("variables"), py::arg("clauses"));
  m.def(
      "gen_subset_sum_instance",
      [](const std::vector<std::uint64_t>& xs, std::uint64_t target) {
        return instance_dict(gen_subset_sum_instance({xs, target}));
      },
      py::arg("xs"), py::arg("target"));
  m.def("gen_ladder", &gen_ladder, py::arg("k"));
  m.def(
      "gen_ladder_shortcut", [](std::size_t k) { return instance_dict(gen_ladder_shortcut(k)); },
      py::arg("k"));
  m.def("gen_random_point", &gen_random_point, py::arg("n"), py::arg("m"), py::arg("max_time"),
        py::arg("max_delay"), py::arg("seed"));
  m.def(
      "gen_random_34sat",
      [](std::size_t n, std::uint64_t seed) {
        const auto f = gen_random_34sat(n, seed);
        return py::make_tuple(f.variables, f.clauses);
      },
      py::arg("n"), py::arg("seed"));

  m.def(
      "parse_graph",
      [](std::string_view text) {
        auto f = parse_graph(text);
        py::dict d;
        if (f.is_point()) d["graph"] = std::get<PointTemporalGraph>(f.graph);
        else d["graph"] = std::get<IntervalTemporalGraph>(f.graph);
        d["labels"] = f.labels;
        d["source"] = f.source;
        d["target"] = f.target;
        d["delta"] = f.delta_max;
        return d;
      },
      py::arg("text"));
  m.def(
      "serialize_graph", [](const PointTemporalGraph& g) { return serialize_graph(g); },
      py::arg("graph"));
  m.def(
      "serialize_graph", [](const IntervalTemporalGraph& g) { return serialize_graph(g); },
      py::arg("graph"));
}
