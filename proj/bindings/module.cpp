#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpa/cli.hpp"
#include "lpa/json_io.hpp"

namespace py = pybind11;
using namespace lpa;

namespace {

py::int_ int_to_py(const Int& x) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Int int_from_py(const py::handle& h) {
  return Int(py::str(h).cast<std::string>());
}

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(json_to_py(x));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default:
      return py::none();
  }
}

json py_to_json(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<long long>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    json out = json::array();
    for (const auto& x : h) out.push_back(py_to_json(x));
    return out;
  }
  if (py::isinstance<py::dict>(h)) {
    json out = json::object();
    for (const auto& [k, v] : h.cast<py::dict>())
      out[py::str(k).cast<std::string>()] = py_to_json(v);
    return out;
  }
  throw py::type_error("cannot convert python object to json");
}

IntMatrix matrix_from_py(const py::handle& rows) {
  std::vector<std::vector<Int>> data;
  for (const auto& row : rows) {
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(int_from_py(x));
    data.push_back(std::move(r));
  }
  size_t nr = data.size();
  size_t nc = nr ? data[0].size() : 0;
  IntMatrix m(nr, nc);
  for (size_t i = 0; i < nr; ++i) {
    if (data[i].size() != nc)
      throw py::value_error("ragged matrix rows");
    for (size_t j = 0; j < nc; ++j) m.at(i, j) = data[i][j];
  }
  return m;
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (size_t j = 0; j < m.cols(); ++j) row.append(int_to_py(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

py::dict group_to_py(const FgAbelianGroup& g) {
  py::dict d;
  d["rank"] = g.rank();
  py::list f;
  for (const auto& x : g.invariant_factors()) f.append(int_to_py(x));
  d["factors"] = f;
  d["description"] = g.to_string();
  return d;
}

py::list coords_to_py(const std::vector<Int>& v) {
  py::list out;
  for (const auto& x : v) out.append(int_to_py(x));
  return out;
}

Ambient ambient_from_string(const std::string& s) {
  if (s == "cohn") return Ambient::Cohn;
  if (s == "leavitt") return Ambient::Leavitt;
  throw py::value_error("ambient must be 'cohn' or 'leavitt'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact Bowen-Franks invariants, graph moves, quasi-isomorphism "
      "certificates and path-algebra arithmetic for finite directed graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  static py::exception<Error> exc(m, "DomainError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
#if defined(PYBIND11_VERSION_HEX) && PYBIND11_VERSION_HEX >= 0x020C0000
      py::set_error(exc, e.what());
#else
      exc(e.what());
#endif
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::vector<std::string>& vertices,
                       const std::vector<std::tuple<std::string, std::string,
                                                    std::string>>& edges) {
             std::vector<Edge> es;
             for (const auto& [id, src, dst] : edges)
               es.push_back({id, src, dst});
             return Graph(vertices, es);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_static("from_text",
                  [](const std::string& text) { return parse_graph_text(text); })
      .def_static("from_json",
                  [](const py::handle& j) { return graph_from_json(py_to_json(j)); })
      .def("to_text", [](const Graph& g) { return print_graph_text(g); })
      .def("to_json", [](const Graph& g) { return json_to_py(graph_to_json(g)); })
      .def_property_readonly("vertices",
                             [](const Graph& g) { return g.vertices(); })
      .def_property_readonly(
          "edges",
          [](const Graph& g) {
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& e : g.edges()) out.emplace_back(e.id, e.src, e.dst);
            return out;
          })
      .def("classify_vertices",
           [](const Graph& g) {
             auto c = g.classify_vertices();
             py::dict d;
             d["sinks"] = c.sinks;
             d["sources"] = c.sources;
             d["regular"] = c.regular;
             d["singular"] = c.singular;
             return d;
           })
      .def("incidence_matrix",
           [](const Graph& g) { return matrix_to_py(g.incidence_matrix()); })
      .def("bf_matrix", [](const Graph& g) { return matrix_to_py(g.bf_matrix()); })
      .def("is_purely_infinite_simple",
           [](const Graph& g) {
             auto r = g.is_purely_infinite_simple();
             py::dict d;
             d["value"] = r.value;
             d["failed_condition"] = r.failed_condition;
             d["witness"] = r.witness;
             return d;
           })
      .def("is_regular", &Graph::is_regular)
      .def("is_essential", &Graph::is_essential)
      .def("source_eliminate", &Graph::source_eliminate, py::arg("vertex"))
      .def("out_split", &Graph::out_split_graph)
      .def("dual", &Graph::dual_graph)
      .def("cuntz_splice", &Graph::cuntz_splice, py::arg("vertex"))
      .def("double_cover", &Graph::double_cover)
      .def("square", &Graph::square_graph)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph with " + std::to_string(g.vertices().size()) +
               " vertices, " + std::to_string(g.edges().size()) + " edges>";
      });

  m.def("bf", [](const Graph& g) {
    BFData d = bf(g);
    py::dict out = group_to_py(d.group);
    out["unit_class"] = coords_to_py(d.unit_class);
    return out;
  });
  m.def("bf_dual",
        [](const Graph& g) { return group_to_py(bf_dual(g).group); });
  m.def("bf_twisted", [](const Graph& g) {
    TwistedBFData d = bf_twisted(g);
    py::dict out = group_to_py(d.module.underlying);
    out["unit_class"] = coords_to_py(d.unit_class);
    out["sigma"] = matrix_to_py(d.module.sigma_action.matrix());
    return out;
  });
  m.def("bf_twisted_dual", [](const Graph& g) {
    return group_to_py(bf_twisted_dual(g).underlying);
  });
  m.def("det_sigma", [](const Graph& g) {
    SigmaScalar d = det_sigma(twisted_bf_matrix(g));
    return py::make_tuple(int_to_py(d.a), int_to_py(d.b));
  });
  m.def(
      "jh_vanishes",
      [](const Graph& g, const std::string& ring) {
        JhVanishing v = jh_vanishes(
            g, ring == "z" ? CoeffRing::Z : CoeffRing::Zsigma);
        return py::make_tuple(v.untwisted, v.twisted);
      },
      py::arg("graph"), py::arg("ring") = "zsigma");
  m.def("canonical_form", [](const Graph& g) {
    return json_to_py(struct_descriptor_to_json(canonical_form(g)));
  });
  m.def("bfolbf_criterion", [](const Graph& g) {
    BfOlbfCriterion c = bfolbf_criterion(g);
    py::dict d;
    d["det_plus"] = int_to_py(c.det_plus);
    d["det_minus"] = int_to_py(c.det_minus);
    d["det_plus_unit"] = c.det_plus_unit;
    d["det_minus_nonunit_nonzero"] = c.det_minus_nonunit_nonzero;
    d["holds"] = c.holds;
    return d;
  });
  m.def("invariant_report", [](const Graph& g) {
    return json_to_py(invariant_report("-", g));
  });

  m.def("kk_iso_exists", [](const Graph& e, const Graph& f) {
    LiftOutcome got = kk_iso_exists(e, f);
    py::dict d;
    d["reason"] = got.reason;
    d["certificate"] = got.certificate
                           ? json_to_py(certificate_to_json(*got.certificate))
                           : py::object(py::none());
    return d;
  });
  m.def("kk_iso_exists_twisted", [](const Graph& e, const Graph& f) {
    TwistedLiftOutcome got = kk_iso_exists_twisted(e, f);
    py::dict d;
    d["reason"] = got.reason;
    d["certificate"] = got.certificate
                           ? json_to_py(certificate_to_json(*got.certificate))
                           : py::object(py::none());
    return d;
  });
  m.def(
      "classify_pair",
      [](const Graph& e, const Graph& f, bool regular_supercoherent,
         bool two_invertible, bool minus_one_positive) {
        RingFlags flags{regular_supercoherent, two_invertible,
                        minus_one_positive};
        return json_to_py(classification_to_json(classify_pair(e, f, flags)));
      },
      py::arg("e"), py::arg("f"), py::arg("regular_supercoherent") = false,
      py::arg("two_invertible") = false, py::arg("minus_one_positive") = false);
  m.def("graded_hom_obstruction", [](const Graph& e, const Graph& f) {
    return json_to_py(obstruction_to_json(graded_hom_obstruction(e, f)));
  });

  m.def(
      "kh_ends",
      [](const Graph& g, const py::handle& coeff, int degree, bool twisted) {
        CoefficientData c = coefficients_from_json(py_to_json(coeff));
        return json_to_py(sequence_ends_to_json(kh_ends(g, c, degree, twisted)));
      },
      py::arg("graph"), py::arg("coefficients"), py::arg("degree") = 0,
      py::arg("twisted") = false);
  m.def(
      "uct_ends",
      [](const Graph& g, const py::handle& coeff, bool twisted) {
        CoefficientData c = coefficients_from_json(py_to_json(coeff));
        return json_to_py(sequence_ends_to_json(uct_ends(g, c, twisted)));
      },
      py::arg("graph"), py::arg("coefficients"), py::arg("twisted") = false);

  m.def("snf", [](const py::handle& rows) {
    SnfResult s = snf(matrix_from_py(rows));
    return py::make_tuple(matrix_to_py(s.D), matrix_to_py(s.U),
                          matrix_to_py(s.V));
  });
  m.def("hnf", [](const py::handle& rows) {
    HnfResult h = hnf(matrix_from_py(rows));
    return py::make_tuple(matrix_to_py(h.H), matrix_to_py(h.U));
  });
  m.def("cokernel", [](const py::handle& rows) {
    return group_to_py(cokernel(matrix_from_py(rows)));
  });
  m.def("kernel_basis", [](const py::handle& rows) {
    return matrix_to_py(kernel_basis(matrix_from_py(rows)));
  });
  m.def("solve", [](const py::handle& rows, const py::handle& rhs) {
    std::vector<Int> b;
    for (const auto& x : rhs) b.push_back(int_from_py(x));
    auto x = solve(matrix_from_py(rows), b);
    return x ? py::object(coords_to_py(*x)) : py::object(py::none());
  });

  m.def(
      "normal_form",
      [](const Graph& g, const std::string& expr, const std::string& ambient) {
        auto shared = std::make_shared<const Graph>(g);
        Term t = parse_term(expr, shared, ambient_from_string(ambient));
        py::dict d;
        d["normal_form"] = print_term(t);
        GradeInfo gi = grade(t);
        d["degree"] = gi.degree ? py::object(py::int_(*gi.degree))
                                : py::object(py::none());
        d["star"] = print_term(star(t));
        d["bar"] = print_term(bar(t));
        return d;
      },
      py::arg("graph"), py::arg("expr"), py::arg("ambient") = "leavitt");
  m.def("verify_minus_one_identity",
        [](const Graph& g) { return verify_minus_one_identity(g); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
