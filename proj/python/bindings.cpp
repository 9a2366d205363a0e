#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dirichlet/dirichlet.hpp"

namespace py = pybind11;
using namespace dirichlet;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) { return fraction_type()(format_rational(x)); }
py::object to_py(double x) { return py::float_(x); }

Rational to_rational(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

std::vector<py::int_> coefficients(const IntPolynomial& p) {
  std::vector<py::int_> out;
  for (const auto& c : p.coefficients()) out.push_back(to_py(c));
  return out;
}

NetworkInstance make_network(const std::vector<std::string>& vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges, const py::dict& boundary) {
  std::vector<std::string> labels;
  std::vector<Rational> values;
  for (const auto& [key, value] : boundary) {
    labels.push_back(py::str(key).cast<std::string>());
    values.push_back(to_rational(value));
  }
  return validate_network(Graph(vertices, edges), labels, values);
}

/// Edge-key dict to weights; any Python float makes the whole map floating
/// point. Missing edges default to one.
EdgeWeights weights(const NetworkInstance& net, const std::optional<py::dict>& given) {
  const Graph& g = net.graph();
  std::vector<py::object> items(g.edge_count(), py::int_(1));
  bool any_float = false;
  if (given) {
    for (const auto& [key, value] : *given) {
      std::string k = py::str(key).cast<std::string>();
      auto e = g.edge_index_by_key(k);
      if (!e) {
        auto dash = k.find('-');
        if (dash != std::string::npos) e = g.edge_index_by_key(k.substr(dash + 1) + "-" + k.substr(0, dash));
      }
      if (!e) throw Error(ErrorCode::MalformedInput, "unknown edge " + k);
      items[*e] = py::reinterpret_borrow<py::object>(value);
      any_float = any_float || py::isinstance<py::float_>(value);
    }
  }
  if (any_float) {
    std::vector<double> out;
    for (const auto& v : items) out.push_back(v.cast<double>());
    return out;
  }
  std::vector<Rational> out;
  for (const auto& v : items) out.push_back(to_rational(v));
  return out;
}

py::dict orientation_dict(const Graph& g, const Orientation& o) {
  py::dict out;
  for (int e = 0; e < g.edge_count(); ++e) out[py::str(g.edge_key(e))] = g.label(o.tail(g, e)) + ">" + g.label(o.head(g, e));
  return out;
}

Orientation orientation_from_dict(const Graph& g, const py::dict& arcs) {
  Orientation o{std::vector<bool>(g.edge_count(), true)};
  std::vector<bool> seen(g.edge_count(), false);
  for (const auto& [key, value] : arcs) {
    auto e = g.edge_index_by_key(py::str(key).cast<std::string>());
    std::string arc = py::str(value).cast<std::string>();
    auto gt = arc.find('>');
    if (!e || gt == std::string::npos) throw Error(ErrorCode::MalformedInput, "bad orientation entry " + arc);
    o.forward[*e] = arc.substr(0, gt) == g.label(g.edge(*e).a);
    seen[*e] = true;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!seen[e]) throw Error(ErrorCode::MalformedInput, "orientation misses edge " + g.edge_key(e));
  }
  return o;
}

template <typename T>
py::dict vertex_dict(const NetworkInstance& net, const std::vector<T>& values) {
  py::dict out;
  for (int v = 0; v < net.graph().vertex_count(); ++v) out[py::str(net.graph().label(v))] = to_py(values[v]);
  return out;
}

template <typename T>
py::dict edge_dict(const NetworkInstance& net, const std::vector<T>& values) {
  py::dict out;
  for (int e = 0; e < net.graph().edge_count(); ++e) out[py::str(net.graph().edge_key(e))] = to_py(values[e]);
  return out;
}

OrientationMode mode_of(const std::string& mode) {
  if (mode == "acyclic") return OrientationMode::Acyclic;
  if (mode == "semicompatible") return OrientationMode::Semicompatible;
  if (mode == "compatible") return OrientationMode::Compatible;
  throw Error(ErrorCode::InvalidArgument, "unknown mode " + mode);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirichlet arrangements of graphs with boundary";

  static py::exception<Error> error(m, "DirichletError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(to_string(e.code()), e.what()).ptr());
    }
  });

  py::class_<NetworkInstance>(m, "Network")
      .def(py::init(&make_network), py::arg("vertices"), py::arg("edges"), py::arg("boundary"))
      .def_static("from_json", [](const std::string& text) { return parse_network(text).net; })
      .def_static("load", [](const std::string& path) { return read_network_file(path).net; })
      .def("to_json", [](const NetworkInstance& net) { return write_network(net); })
      .def_property_readonly("m", &NetworkInstance::m)
      .def_property_readonly("n", &NetworkInstance::n)
      .def_property_readonly("vertices", [](const NetworkInstance& net) { return net.graph().labels(); })
      .def_property_readonly("edges",
                             [](const NetworkInstance& net) {
                               std::vector<std::string> keys;
                               for (int e = 0; e < net.graph().edge_count(); ++e) keys.push_back(net.graph().edge_key(e));
                               return keys;
                             })
      .def_property_readonly("interior",
                             [](const NetworkInstance& net) {
                               std::vector<std::string> out;
                               for (int v : net.interior()) out.push_back(net.graph().label(v));
                               return out;
                             })
      .def_property_readonly("boundary",
                             [](const NetworkInstance& net) {
                               py::dict out;
                               for (int r = 0; r < net.m(); ++r) {
                                 out[py::str(net.graph().label(net.boundary()[r]))] = to_py(net.boundary_values()[r]);
                               }
                               return out;
                             })
      .def("__eq__", [](const NetworkInstance& a, const NetworkInstance& b) { return a == b; })
      .def("__repr__", [](const NetworkInstance& net) {
        return "<Network m=" + std::to_string(net.m()) + " n=" + std::to_string(net.n()) +
               " edges=" + std::to_string(net.graph().edge_count()) + ">";
      });

  m.def("wheatstone", &wheatstone);
  m.def("path_network", [](int d, const py::object& left, const py::object& right) {
    return path_network(d, to_rational(left), to_rational(right));
  }, py::arg("d"), py::arg("left") = 0, py::arg("right") = 1);
  m.def("complete_join", &complete_join, py::arg("m"), py::arg("n"));
  m.def("wheel_network", &wheel_network, py::arg("d"));
  m.def("corpus", [](int max_vertices) {
    std::vector<std::pair<std::string, NetworkInstance>> out;
    for (auto& e : corpus(max_vertices)) out.emplace_back(e.id, e.net);
    return out;
  }, py::arg("max_vertices"));

  m.def("characteristic_polynomial",
        [](const NetworkInstance& net) { return coefficients(precoloring_polynomial(net)); },
        "Coefficients in ascending degree.");
  m.def("mobius_characteristic",
        [](const NetworkInstance& net) { return coefficients(mobius_characteristic(net, Limits::from_env())); });
  m.def("interpolated_polynomial",
        [](const NetworkInstance& net) { return coefficients(precoloring_interpolated(net, Limits::from_env())); });
  m.def("precoloring_count",
        [](const NetworkInstance& net, int colors) { return to_py(precoloring_count(net, colors, Limits::from_env())); });
  m.def("chamber_counts", [](const NetworkInstance& net) {
    ChamberCounts c = chamber_counts(net);
    return py::make_tuple(to_py(c.total), to_py(c.bounded));
  }, "(total, bounded)");
  m.def("is_log_concave", [](const std::vector<py::int_>& coeffs) {
    std::vector<BigInt> c;
    for (const auto& x : coeffs) c.emplace_back(py::str(x).cast<std::string>());
    return is_log_concave(IntPolynomial(c));
  });

  m.def("orientations", [](const NetworkInstance& net, const std::string& mode) {
    std::vector<py::dict> out;
    for (const auto& o : enumerate_class(net, mode_of(mode), Limits::from_env())) out.push_back(orientation_dict(net.graph(), o));
    return out;
  }, py::arg("net"), py::arg("mode") = "semicompatible");
  m.def("chamber_point", [](const NetworkInstance& net, const py::dict& orientation) {
    InteriorPoint y = chamber_point(net, orientation_from_dict(net.graph(), orientation));
    py::dict out;
    for (int r = 0; r < net.n(); ++r) out[py::str(net.graph().label(net.interior()[r]))] = to_py(y.coordinates[r]);
    return out;
  });
  m.def("orientation_of_point", [](const NetworkInstance& net, const std::vector<py::object>& point) {
    InteriorPoint y;
    for (const auto& v : point) y.coordinates.push_back(to_rational(v));
    return orientation_dict(net.graph(), orientation_of_point(net, y));
  }, "Point given as interior coordinates in the order of Network.interior.");

  m.def("is_supersolvable", [](const NetworkInstance& net) {
    SupersolvabilityResult r = is_supersolvable(net);
    Graph closure = closure_graph(net);
    py::dict out;
    out["supersolvable"] = r.supersolvable;
    out["free"] = r.free;
    std::vector<std::string> witness;
    for (int v : r.witness.chordal ? r.witness.ordering : r.witness.chordless_cycle) witness.push_back(closure.label(v));
    out[r.witness.chordal ? "perfect_elimination_ordering" : "chordless_cycle"] = witness;
    return out;
  });

  m.def("harmonic", [](const NetworkInstance& net, std::optional<py::dict> gamma) {
    EdgeWeights w = weights(net, gamma);
    if (is_exact(w)) return vertex_dict(net, harmonic_solve(net, std::get<std::vector<Rational>>(w)));
    return vertex_dict(net, harmonic_solve(net, std::get<std::vector<double>>(w)));
  }, py::arg("net"), py::arg("gamma") = py::none());
  m.def("energies", [](const NetworkInstance& net, std::optional<py::dict> gamma) {
    EdgeWeights w = weights(net, gamma);
    if (is_exact(w)) return edge_dict(net, energy_map(net, std::get<std::vector<Rational>>(w)));
    return edge_dict(net, energy_map(net, std::get<std::vector<double>>(w)));
  }, py::arg("net"), py::arg("gamma") = py::none());

  m.def("critical_points", [](const NetworkInstance& net, std::optional<py::dict> eta, double tol, int max_iter) {
    MasterFunction mf{net, to_double(weights(net, eta))};
    SolverOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    std::vector<py::dict> out;
    for (const auto& sol : eta_harmonic_functions(mf, options, Limits::from_env())) {
      py::dict d;
      py::dict point;
      for (int r = 0; r < net.n(); ++r) point[py::str(net.graph().label(net.interior()[r]))] = sol.point[r];
      d["point"] = point;
      d["orientation"] = orientation_dict(net.graph(), sol.orientation);
      d["conductances"] = edge_dict(net, sol.conductances);
      d["gradient_norm"] = sol.gradient_norm;
      d["iterations"] = sol.iterations;
      out.push_back(d);
    }
    return out;
  }, py::arg("net"), py::arg("eta") = py::none(), py::arg("tol") = 1e-10, py::arg("max_iter") = 200);
}
