#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "firefighter/commands.hpp"
#include "firefighter/generators.hpp"
#include "firefighter/general_solvers.hpp"
#include "firefighter/io.hpp"
#include "firefighter/tree_solvers.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace firefighter;

namespace {

py::tuple decision_tuple(const Decision& d) {
    return py::make_tuple(d.yes, d.witness);
}

std::string instance_to_text(const InstanceBundle& inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

InstanceBundle instance_from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Firefighter problem solvers: tree DP, branching algorithms, oracles and generators";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    static py::exception<IllegalMove> illegal(m, "IllegalMove", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const IllegalMove& e) {
            py::object exc = py::handle(illegal.ptr())(e.what());
            exc.attr("round") = e.round();
            PyErr_SetObject(illegal.ptr(), exc.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::int32_t n, const std::vector<Edge>& edges) { return Graph::build(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, Vertex v) {
            auto span = g.neighbors(v);
            return std::vector<Vertex>(span.begin(), span.end());
        })
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("is_tree", &Graph::is_tree)
        .def("is_connected", &Graph::is_connected)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<RootedTree>(m, "RootedTree")
        .def(py::init<Graph, Vertex>(), py::arg("graph"), py::arg("root"))
        .def_property_readonly("graph", &RootedTree::graph)
        .def_property_readonly("root", &RootedTree::root)
        .def_property_readonly("height", &RootedTree::height)
        .def("parent", &RootedTree::parent)
        .def("children", [](const RootedTree& t, Vertex v) {
            auto span = t.children(v);
            return std::vector<Vertex>(span.begin(), span.end());
        })
        .def("depth", &RootedTree::depth)
        .def("preorder", &RootedTree::preorder)
        .def("subtree_size", &RootedTree::subtree_size);

    py::class_<StrategyI>(m, "StrategyI")
        .def(py::init<>())
        .def(py::init([](std::vector<std::optional<Vertex>> moves) { return StrategyI{std::move(moves)}; }),
             py::arg("moves"))
        .def_readwrite("moves", &StrategyI::moves)
        .def("protected_vertices", &StrategyI::protected_vertices)
        .def(py::self == py::self);

    py::class_<StrategyII>(m, "StrategyII")
        .def(py::init<>())
        .def(py::init([](std::vector<std::vector<Vertex>> rounds) { return StrategyII{std::move(rounds)}; }),
             py::arg("rounds"))
        .def_readwrite("rounds", &StrategyII::rounds)
        .def("protected_vertices", &StrategyII::protected_vertices)
        .def(py::self == py::self);

    py::class_<SimulationOutcome>(m, "SimulationOutcome")
        .def_readonly("burned", &SimulationOutcome::burned)
        .def_readonly("saved", &SimulationOutcome::saved)
        .def_readonly("protected_set", &SimulationOutcome::protected_set)
        .def_property_readonly("rounds", [](const SimulationOutcome& o) { return o.timeline.size(); });

    py::class_<InstanceBundle>(m, "Instance")
        .def_readonly("graph", &InstanceBundle::graph)
        .def_readonly("source", &InstanceBundle::source)
        .def_readonly("k", &InstanceBundle::k)
        .def_readonly("target", &InstanceBundle::target)
        .def_property_readonly("roles", [](const InstanceBundle& inst) {
            std::vector<std::pair<Vertex, std::string>> out;
            for (const auto& r : inst.roles) {
                out.emplace_back(r.vertex, r.label);
            }
            return out;
        })
        .def("to_text", &instance_to_text);

    m.def("parse_instance", &instance_from_text, py::arg("text"));
    m.def("make_instance",
          [](const Graph& g, Vertex s, std::int64_t k, std::optional<std::int64_t> target) {
              return InstanceBundle{g, s, k, target, {}};
          },
          py::arg("graph"), py::arg("source"), py::arg("k"), py::arg("target") = std::nullopt);

    m.def("simulate_v1", &simulate_v1, py::arg("graph"), py::arg("source"), py::arg("strategy"));
    m.def("simulate_v2", &simulate_v2, py::arg("graph"), py::arg("source"), py::arg("strategy"));

    m.def("max_k_protection_tree",
          [](const RootedTree& t, std::int64_t k) {
              auto r = max_k_protection_tree(t, k);
              return py::make_tuple(r.saved, r.strategy);
          },
          py::arg("tree"), py::arg("k"), "Maximum saved with at most k protections; returns (saved, strategy).");
    m.def("saving_k_vertices_tree", [](const RootedTree& t, std::int64_t k) { return decision_tuple(saving_k_vertices_tree(t, k)); },
          py::arg("tree"), py::arg("k"));
    m.def("exact_firefighter_tree",
          [](const RootedTree& t) {
              auto r = exact_firefighter_tree(t);
              return py::make_tuple(r.saved, r.strategy);
          },
          py::arg("tree"));
    m.def("save_all_but_k_tree", [](const RootedTree& t, std::int64_t k) { return decision_tuple(save_all_but_k_tree(t, k)); },
          py::arg("tree"), py::arg("k"));
    m.def("lemma4_bound", &lemma4_bound, py::arg("depth"));

    m.def("save_all_but_k_general",
          [](const Graph& g, Vertex s, std::int64_t k) {
              auto d = save_all_but_k_general(g, s, k);
              return py::make_tuple(d.yes, d.witness);
          },
          py::arg("graph"), py::arg("source"), py::arg("k"));
    m.def("strategy_I_to_II", &strategy_I_to_II, py::arg("graph"), py::arg("source"), py::arg("strategy"));
    m.def("strategy_II_to_I", &strategy_II_to_I, py::arg("graph"), py::arg("source"), py::arg("strategy"));
    m.def("brute_force_min_burned",
          [](const Graph& g, Vertex s, std::int32_t limit) {
              auto r = brute_force_min_burned(g, s, {limit});
              return py::make_tuple(r.burned, r.strategy);
          },
          py::arg("graph"), py::arg("source"), py::arg("limit") = kDefaultOracleLimit);
    m.def("brute_force_max_saved_protecting_k",
          [](const Graph& g, Vertex s, std::int64_t k, std::int32_t limit) {
              auto r = brute_force_max_saved_protecting_k(g, s, k, {limit});
              return py::make_tuple(r.saved, r.strategy);
          },
          py::arg("graph"), py::arg("source"), py::arg("k"), py::arg("limit") = kDefaultOracleLimit);

    m.def("clique_to_saving_instance", [](const Graph& g, std::int64_t k) { return clique_to_saving_instance(g, k).instance; },
          py::arg("graph"), py::arg("k"));
    m.def("clique_to_protection_instance",
          [](const Graph& g, std::int64_t k) { return clique_to_protection_instance(g, k).instance; }, py::arg("graph"),
          py::arg("k"));
    m.def("cross_compose_trees",
          [](const std::vector<InstanceBundle>& inputs, bool protection) {
              auto out = cross_compose_trees(inputs, protection ? CompositionKind::Protection : CompositionKind::SaveAllButK);
              return py::make_tuple(out.instance, out.leaf_map, out.height);
          },
          py::arg("instances"), py::arg("protection") = false);
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("max_degree"), py::arg("seed"));
    m.def("brute_force_has_clique", &brute_force_has_clique, py::arg("graph"), py::arg("k"));

    m.def("solve",
          [](const InstanceBundle& inst, const std::string& problem, const std::string& solver,
             std::optional<std::int64_t> k) {
              SolveOptions opts;
              opts.problem = parse_problem(problem);
              opts.solver = parse_solver(solver);
              opts.k = k;
              std::ostringstream out;
              cmd_solve(inst, opts).print_machine(out);
              return out.str();
          },
          py::arg("instance"), py::arg("problem"), py::arg("solver") = "auto", py::arg("k") = std::nullopt,
          "Runs the solve command and returns its JSON record.");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
