#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypercover/errors.hpp"
#include "hypercover/fuzz.hpp"
#include "hypercover/generate.hpp"
#include "hypercover/json_io.hpp"
#include "hypercover/stepping.hpp"

namespace py = pybind11;
using namespace hypercover;

namespace {

Card card_from_obj(const py::object& rho) {
  if (py::isinstance<py::str>(rho)) {
    std::string s = rho.cast<std::string>();
    if (s == "omega" || s == "aleph0") return Card::aleph0();
    raise(Errc::parse_error, "rho wants an int, 'omega' or 'aleph0'");
  }
  return Card::finite(rho.cast<std::uint64_t>());
}

EpSet epset_from_text(const std::string& text) {
  return epset_from_json(parse_json_text(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact minimal vertex covers and maximizing well-orders over "
            "eventually periodic subsets of the naturals";

  py::register_exception<Error>(m, "HypercoverError");

  py::class_<Card>(m, "Card")
      .def_static("finite", &Card::finite)
      .def_static("aleph0", &Card::aleph0)
      .def_property_readonly("is_finite", &Card::is_finite)
      .def("value", &Card::value)
      .def("__eq__", [](const Card& a, const Card& b) { return a == b; })
      .def("__lt__", [](const Card& a, const Card& b) { return a < b; })
      .def("__repr__", [](const Card& c) { return "Card(" + c.str() + ")"; });

  py::class_<EpSet>(m, "EpSet")
      .def(py::init<>())
      .def_static("finite", &EpSet::finite, py::arg("elements"))
      .def_static("ap", &EpSet::ap, py::arg("start"), py::arg("step"))
      .def_static("naturals", &EpSet::naturals)
      .def_static("make", &EpSet::make, py::arg("elements"), py::arg("t"),
                  py::arg("p"), py::arg("res"))
      .def_static("from_json", &epset_from_text)
      .def("__contains__",
           [](const EpSet& s, std::uint64_t x) { return s.contains(x); })
      .def("contains", &EpSet::contains)
      .def("empty", &EpSet::empty)
      .def("is_finite", &EpSet::is_finite)
      .def("cardinality", &EpSet::cardinality)
      .def("min_element", &EpSet::min_element)
      .def("enumerate", &EpSet::enumerate, py::arg("n"))
      .def("subset_of", &EpSet::subset_of)
      .def("__or__", [](const EpSet& a, const EpSet& b) { return a | b; })
      .def("__and__", [](const EpSet& a, const EpSet& b) { return a & b; })
      .def("__sub__", [](const EpSet& a, const EpSet& b) { return a - b; })
      .def("__eq__", [](const EpSet& a, const EpSet& b) { return a == b; })
      .def("to_json", [](const EpSet& s) { return epset_to_json(s).dump(); })
      .def("__repr__", [](const EpSet& s) { return "EpSet " + s.str(); });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<>())
      .def(py::init<std::vector<EpSet>>(), py::arg("edges"))
      .def("__len__", &Hypergraph::size)
      .def("edge", &Hypergraph::edge)
      .def("edges", &Hypergraph::edges)
      .def("universe", &Hypergraph::universe)
      .def("spectrum", &Hypergraph::spectrum)
      .def("check_c",
           [](const Hypergraph& h, unsigned k, const py::object& rho)
               -> py::object {
             CheckCResult r = h.check_c(k, card_from_obj(rho));
             if (r.ok()) return py::none();
             return py::cast(*r.violation);
           },
           py::arg("k"), py::arg("rho"),
           "None when C(k,rho) holds, else the first violating tuple")
      .def("min_family", &Hypergraph::min_family)
      .def("confine", &Hypergraph::confine)
      .def("containing_edges", &Hypergraph::containing_edges)
      .def("has_duplicate_edges", &Hypergraph::has_duplicate_edges)
      .def("restrict",
           [](const Hypergraph& h, const EpSet& y) {
             Restriction r = restrict_to(h, y);
             return py::make_tuple(r.traces, r.parent);
           },
           "traces of the edges meeting y, with their parent indices");

  py::class_<WitnessedCover>(m, "WitnessedCover")
      .def_property_readonly("points", &WitnessedCover::points)
      .def_property_readonly(
          "witness",
          [](const WitnessedCover& wc) { return wc.witness; })
      .def("__eq__", [](const WitnessedCover& a,
                        const WitnessedCover& b) { return a == b; })
      .def("to_json",
           [](const WitnessedCover& wc) { return cover_to_json(wc).dump(); })
      .def("__repr__", [](const WitnessedCover& wc) {
        return "WitnessedCover " + cover_to_json(wc).dump();
      });

  py::class_<BlockOrder>(m, "BlockOrder")
      .def("universe", &BlockOrder::universe)
      .def("to_json",
           [](const BlockOrder& o) { return order_to_json(o).dump(); })
      .def("__repr__", [](const BlockOrder& o) {
        return "BlockOrder " + order_to_json(o).dump();
      });

  py::class_<Cut>(m, "Cut")
      .def(py::init([](std::vector<EpSet> layers) {
             return Cut{std::move(layers)};
           }),
           py::arg("layers"))
      .def_property_readonly("layers",
                             [](const Cut& c) { return c.layers; });

  m.def("is_cover", &is_cover);
  m.def("find_witness",
        [](const Hypergraph& h, const std::vector<std::uint64_t>& y)
            -> py::object {
          WitnessSearch ws = find_witness(h, y);
          if (auto* wc = std::get_if<WitnessedCover>(&ws)) return py::cast(*wc);
          return py::cast(std::get<NoWitness>(ws).point);
        },
        "a WitnessedCover, or the first point with no admissible edge");
  m.def("minimalize", &minimalize);
  m.def("brute_minimal_covers", &brute_minimal_covers, py::arg("h"),
        py::arg("max_universe") = 16);
  m.def("verify_witnessed_cover", &verify_witnessed_cover);

  m.def("compare",
        [](const BlockOrder& o, std::uint64_t u, std::uint64_t v) {
          switch (compare(o, u, v)) {
            case Ordering::less: return -1;
            case Ordering::equal: return 0;
            case Ordering::greater: return 1;
          }
          return 0;
        });
  m.def("disjointify", &disjointify);
  m.def("build_maximizing", &build_maximizing);
  m.def("edge_max",
        [](const BlockOrder& o, const EpSet& e) -> py::object {
          auto v = edge_max(o, e);
          if (v) return py::cast(*v);
          return py::none();
        });
  m.def("is_maximizing", &is_maximizing);
  m.def("extract_cover", &extract_cover);

  m.def("is_good_cut", &is_good_cut);
  m.def("build_closure_chain",
        [](const Hypergraph& h, unsigned k, unsigned r,
           const py::object& seeds) {
          if (seeds.is_none()) return build_closure_chain(h, k, r);
          return build_closure_chain(h, k, r,
                                     seeds.cast<std::vector<EpSet>>());
        },
        py::arg("h"), py::arg("k"), py::arg("r"),
        py::arg("seeds") = py::none());
  m.def("r_closure", &r_closure);
  m.def("layered_cover", &layered_cover);
  m.def("layered_order", &layered_order);
  m.def("two_tier_cover", &two_tier_cover);
  m.def("pairwise_transversal", &pairwise_transversal);
  m.def("solve_brute", &solve_brute, py::arg("h"),
        py::arg("max_universe") = 16);
  m.def("solve_maxwo", &solve_maxwo);

  m.def("generate",
        [](const std::string& kind, unsigned k, unsigned r, unsigned edges,
           std::uint64_t seed) {
          GenParams p;
          p.k = k;
          p.r = r;
          p.edges = edges;
          return generate(kind, p, seed).hypergraph;
        },
        py::arg("kind"), py::arg("k"), py::arg("r"), py::arg("edges"),
        py::arg("seed"));
  m.def("parse_instance", [](const std::string& text) {
    return instance_from_json(parse_json_text(text)).hypergraph;
  });
  m.def("dump_instance", [](const Hypergraph& h) {
    Instance inst;
    inst.hypergraph = h;
    return instance_to_json(inst).dump();
  });
}
