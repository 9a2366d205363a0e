#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dirichlet/dirichlet.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace dirichlet;

namespace {

struct Options {
  std::string file;
  std::string format = "text";
  std::string output;
  std::string gamma;
  std::string eta;
  std::string mode = "semicompatible";
  bool points = false;
  bool adjacency = false;
  double tol = 1e-10;
  int max_iter = 200;
  int max_vertices = 7;
};

json big(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json value_json(const Rational& x) { return format_rational(x); }
json value_json(double x) { return x; }

std::string value_text(const Rational& x) { return format_rational(x); }
std::string value_text(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

json orientation_object(const Graph& g, const Orientation& o) { return json::parse(orientation_json(g, o)); }

json interior_object(const NetworkInstance& net, const std::vector<Rational>& y) {
  json out = json::object();
  for (int r = 0; r < net.n(); ++r) out[net.graph().label(net.interior()[r])] = format_rational(y[r]);
  return out;
}

json interior_object(const NetworkInstance& net, const std::vector<double>& y) {
  json out = json::object();
  for (int r = 0; r < net.n(); ++r) out[net.graph().label(net.interior()[r])] = y[r];
  return out;
}

std::vector<std::string> labels_of(const Graph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.label(v));
  return out;
}

/// Result of one subcommand: JSON document and its text rendering.
struct Output {
  json doc;
  std::string text;
};

Output cmd_validate(const NetworkDocument& doc) {
  const NetworkInstance& net = doc.net;
  json out;
  out["valid"] = true;
  out["m"] = net.m();
  out["n"] = net.n();
  out["edges"] = net.graph().edge_count();
  out["interior"] = labels_of(net.graph(), net.interior());
  json b = json::object();
  for (int r = 0; r < net.m(); ++r) b[net.graph().label(net.boundary()[r])] = format_rational(net.boundary_values()[r]);
  out["boundary"] = b;
  std::ostringstream text;
  text << "valid: m=" << net.m() << " n=" << net.n() << " k=" << net.graph().edge_count() << '\n';
  return {out, text.str()};
}

Output cmd_charpoly(const NetworkDocument& doc) {
  IntPolynomial p = precoloring_polynomial(doc.net);
  json out;
  out["polynomial"] = p.to_string();
  out["coefficients"] = p.coefficient_strings();
  return {out, p.to_string() + "\n"};
}

Output cmd_count_chambers(const NetworkDocument& doc) {
  ChamberCounts c = chamber_counts(doc.net);
  json out;
  out["total"] = big(c.total);
  out["bounded"] = big(c.bounded);
  return {out, "total: " + c.total.get_str() + "\nbounded: " + c.bounded.get_str() + "\n"};
}

OrientationMode parse_mode(const std::string& mode) {
  if (mode == "acyclic") return OrientationMode::Acyclic;
  if (mode == "semicompatible") return OrientationMode::Semicompatible;
  if (mode == "compatible") return OrientationMode::Compatible;
  throw Error(ErrorCode::InvalidArgument, "unknown mode " + mode);
}

Output cmd_orientations(const NetworkDocument& doc, const Options& opt, const Limits& limits) {
  const NetworkInstance& net = doc.net;
  const Graph& g = net.graph();
  std::ostringstream text;
  if (opt.adjacency) {
    ChamberAdjacency adj = chamber_adjacency_graph(net, limits);
    json out;
    out["chambers"] = json::array();
    for (const auto& o : adj.chambers) out["chambers"].push_back(orientation_object(g, o));
    out["edges"] = json::array();
    for (std::size_t t = 0; t < adj.edges.size(); ++t) {
      auto [i, j, e] = adj.edges[t];
      out["edges"].push_back(
          {{"from", i}, {"to", j}, {"edge", g.edge_key(e)}, {"witness", interior_object(net, adj.witnesses[t].coordinates)}});
      text << i << " -- " << j << " across " << g.edge_key(e) << '\n';
    }
    out["connected"] = adj.connected;
    std::string head = std::to_string(adj.chambers.size()) + " bounded chambers, " +
                       std::to_string(adj.edges.size()) + " adjacencies, " +
                       (adj.connected ? "connected" : "disconnected") + "\n";
    return {out, head + text.str()};
  }

  OrientationMode mode = parse_mode(opt.mode);
  if (opt.points && mode == OrientationMode::Acyclic) {
    throw Error(ErrorCode::InvalidArgument, "--points needs --mode semicompatible or compatible");
  }
  json out = json::array();
  for (const auto& o : enumerate_class(net, mode, limits)) {
    json arcs = orientation_object(g, o);
    std::string line;
    for (int e = 0; e < g.edge_count(); ++e) line += (e ? " " : "") + g.label(o.tail(g, e)) + ">" + g.label(o.head(g, e));
    if (opt.points) {
      InteriorPoint y = chamber_point(net, o);
      out.push_back({{"orientation", arcs}, {"point", interior_object(net, y.coordinates)}});
      line += "  @";
      for (const auto& c : y.coordinates) line += " " + format_rational(c);
    } else {
      out.push_back(arcs);
    }
    text << line << '\n';
  }
  return {out, text.str()};
}

json partition_json(const Graph& g, const ConnectedPartition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(labels_of(g, b));
  return blocks;
}

Output cmd_poset(const NetworkDocument& doc, const Limits& limits) {
  const Graph& g = doc.net.graph();
  FinitePoset poset = intersection_poset(doc.net, limits);
  json out;
  out["elements"] = json::array();
  std::ostringstream text;
  for (int x = 0; x < poset.size(); ++x) {
    out["elements"].push_back(
        {{"blocks", partition_json(g, poset.elements[x])}, {"rank", poset.rank[x]}, {"mobius", big(poset.mobius[x])}});
    text << x << "  rank " << poset.rank[x] << "  mu " << poset.mobius[x].get_str() << "  ";
    for (std::size_t b = 0; b < poset.elements[x].blocks.size(); ++b) {
      text << (b ? " | " : "");
      for (int v : poset.elements[x].blocks[b]) text << g.label(v) << (v == poset.elements[x].blocks[b].back() ? "" : " ");
    }
    text << '\n';
  }
  out["covers"] = poset.covers;
  IntPolynomial chi = mobius_characteristic(doc.net, limits);
  out["characteristic"] = chi.to_string();
  text << "characteristic: " << chi.to_string() << '\n';
  return {out, text.str()};
}

Output cmd_supersolvable(const NetworkDocument& doc) {
  const NetworkInstance& net = doc.net;
  SupersolvabilityResult r = is_supersolvable(net);
  Graph closure = closure_graph(net);
  json out;
  out["supersolvable"] = r.supersolvable;
  out["free"] = r.free;
  std::ostringstream text;
  text << "supersolvable: " << (r.supersolvable ? "true" : "false") << '\n';
  text << "free: " << (r.free ? "true" : "false") << '\n';
  if (r.witness.chordal) {
    out["perfect_elimination_ordering"] = labels_of(closure, r.witness.ordering);
    auto weo = weighted_elimination_ordering(net);
    PsiAssignment pa = to_psi_graphical(net);
    out["weighted_elimination_ordering"] = weo ? json(labels_of(pa.graph, weo->order)) : json(nullptr);
    text << "perfect elimination ordering:";
    for (int v : r.witness.ordering) text << ' ' << closure.label(v);
    text << '\n';
  } else {
    out["chordless_cycle"] = labels_of(closure, r.witness.chordless_cycle);
    out["weighted_elimination_ordering"] = nullptr;
    text << "chordless cycle:";
    for (int v : r.witness.chordless_cycle) text << ' ' << closure.label(v);
    text << '\n';
  }
  return {out, text.str()};
}

template <typename T>
Output harmonic_output(const NetworkInstance& net, const std::vector<T>& gamma, bool with_energies) {
  const Graph& g = net.graph();
  std::vector<T> h = harmonic_solve(net, gamma);
  json values = json::object();
  std::ostringstream text;
  for (int v = 0; v < g.vertex_count(); ++v) {
    values[g.label(v)] = value_json(h[v]);
    text << g.label(v) << " = " << value_text(h[v]) << '\n';
  }
  json out;
  out["harmonic"] = values;
  if (with_energies) {
    std::vector<T> eta = energy_map(net, gamma);
    json energies = json::object();
    for (int e = 0; e < g.edge_count(); ++e) {
      energies[g.edge_key(e)] = value_json(eta[e]);
      text << g.edge_key(e) << " : " << value_text(eta[e]) << '\n';
    }
    out["energies"] = energies;
  }
  return {out, text.str()};
}

Output cmd_harmonic(const NetworkDocument& doc, const Options& opt, bool with_energies) {
  EdgeWeights gamma = override_weights(doc.net.graph(), doc.conductances, opt.gamma);
  if (is_exact(gamma)) return harmonic_output(doc.net, std::get<std::vector<Rational>>(gamma), with_energies);
  return harmonic_output(doc.net, std::get<std::vector<double>>(gamma), with_energies);
}

Output cmd_critical_points(const NetworkDocument& doc, const Options& opt, const Limits& limits) {
  const NetworkInstance& net = doc.net;
  const Graph& g = net.graph();
  EdgeWeights eta = override_weights(g, doc.energies, opt.eta);
  MasterFunction mf{net, to_double(eta)};
  SolverOptions options;
  options.tol = opt.tol;
  options.max_iter = opt.max_iter;
  json out = json::array();
  std::ostringstream text;
  for (const auto& sol : eta_harmonic_functions(mf, options, limits)) {
    json conductances = json::object();
    for (int e = 0; e < g.edge_count(); ++e) conductances[g.edge_key(e)] = sol.conductances[e];
    out.push_back({{"point", interior_object(net, sol.point)},
                   {"orientation", orientation_object(g, sol.orientation)},
                   {"conductances", conductances},
                   {"gradient_norm", sol.gradient_norm},
                   {"iterations", sol.iterations}});
    text << std::setprecision(12);
    for (std::size_t r = 0; r < sol.point.size(); ++r) text << (r ? " " : "") << sol.point[r];
    text << "  |grad| " << std::setprecision(3) << sol.gradient_norm << "  iterations " << sol.iterations << '\n';
  }
  return {out, text.str()};
}

// SVG of the line arrangement for n = 2.

using Point2 = std::array<double, 2>;
using Polygon = std::vector<Point2>;

/// Half-plane a.x + b.y + c > 0.
struct HalfPlane {
  double a, b, c;
  double at(const Point2& p) const { return a * p[0] + b * p[1] + c; }
};

Polygon clip(const Polygon& poly, const HalfPlane& h) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    double fp = h.at(p), fq = h.at(q);
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      double t = fp / (fp - fq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << x;
  return out.str();
}

Output cmd_plot(const NetworkDocument& doc, const Limits& limits) {
  const NetworkInstance& net = doc.net;
  const Graph& g = net.graph();
  if (net.n() != 2) throw Error(ErrorCode::InvalidArgument, "plot needs exactly two interior vertices");
  double umin = net.boundary_values()[0].get_d(), umax = umin;
  for (const auto& u : net.boundary_values()) {
    umin = std::min(umin, u.get_d());
    umax = std::max(umax, u.get_d());
  }
  const double lo = umin - 1, hi = umax + 1;
  const double size = 480, margin = 40, scale = size / (hi - lo);
  auto sx = [&](double x) { return margin + (x - lo) * scale; };
  auto sy = [&](double y) { return margin + (hi - y) * scale; };

  std::ostringstream svg;
  const double total = size + 2 * margin;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(total) << "\" height=\"" << fmt(total)
      << "\" viewBox=\"0 0 " << fmt(total) << ' ' << fmt(total) << "\">\n";
  svg << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(size) << "\" height=\""
      << fmt(size) << "\" fill=\"white\" stroke=\"#888\"/>\n";

  Polygon box{{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}};
  int shaded = 0;
  for (const auto& o : enumerate_class(net, OrientationMode::Compatible, limits)) {
    Polygon poly = box;
    for (int e = 0; e < g.edge_count() && !poly.empty(); ++e) {
      // x_tail - x_head > 0 as an affine function of the two interior coordinates
      HalfPlane h{0, 0, 0};
      for (auto [v, sign] : {std::pair{o.tail(g, e), 1.0}, std::pair{o.head(g, e), -1.0}}) {
        int slot = net.interior_slot(v);
        if (slot == 0) h.a += sign;
        else if (slot == 1) h.b += sign;
        else h.c += sign * net.value(v).get_d();
      }
      poly = clip(poly, h);
    }
    if (poly.size() < 3) continue;
    ++shaded;
    svg << "<polygon class=\"bounded-chamber\" fill=\"#9ecae1\" fill-opacity=\"0.6\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) svg << (i ? " " : "") << fmt(sx(poly[i][0])) << ',' << fmt(sy(poly[i][1]));
    svg << "\"/>\n";
  }

  for (int e = 0; e < g.edge_count(); ++e) {
    // x_a - x_b = 0 clipped to the box, drawn between its two box crossings
    const Edge& ed = g.edge(e);
    Polygon ends;
    HalfPlane h{0, 0, 0};
    for (auto [v, sign] : {std::pair{ed.a, 1.0}, std::pair{ed.b, -1.0}}) {
      int slot = net.interior_slot(v);
      if (slot == 0) h.a += sign;
      else if (slot == 1) h.b += sign;
      else h.c += sign * net.value(v).get_d();
    }
    for (std::size_t i = 0; i < box.size(); ++i) {
      const Point2& p = box[i];
      const Point2& q = box[(i + 1) % box.size()];
      double fp = h.at(p), fq = h.at(q);
      if (fp == 0) ends.push_back(p);
      else if ((fp > 0) != (fq > 0) && fq != 0) {
        double t = fp / (fp - fq);
        ends.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
      }
    }
    if (ends.size() < 2) continue;
    svg << "<line class=\"hyperplane\" x1=\"" << fmt(sx(ends[0][0])) << "\" y1=\"" << fmt(sy(ends[0][1])) << "\" x2=\""
        << fmt(sx(ends[1][0])) << "\" y2=\"" << fmt(sy(ends[1][1])) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg << "<text class=\"label\" x=\"" << fmt(sx(ends[1][0]) + 4) << "\" y=\"" << fmt(sy(ends[1][1]) - 4)
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << g.edge_key(e) << "</text>\n";
  }
  const std::string xl = g.label(net.interior()[0]), yl = g.label(net.interior()[1]);
  svg << "<text x=\"" << fmt(margin + size / 2) << "\" y=\"" << fmt(total - 10)
      << "\" font-size=\"14\" font-family=\"sans-serif\" text-anchor=\"middle\">x_" << xl << "</text>\n";
  svg << "<text x=\"14\" y=\"" << fmt(margin + size / 2) << "\" font-size=\"14\" font-family=\"sans-serif\">x_" << yl
      << "</text>\n";
  svg << "</svg>\n";

  json out;
  out["svg"] = svg.str();
  out["lines"] = g.edge_count();
  out["bounded_chambers"] = shaded;
  return {out, svg.str()};
}

json census_row(const CorpusEntry& entry, const Limits& limits) {
  const NetworkInstance& net = entry.net;
  IntPolynomial pcp = precoloring_polynomial(net);
  ChamberCounts counts = chamber_counts(net);
  Graph closure = closure_graph(net);
  auto semi = enumerate_class(net, OrientationMode::Semicompatible, limits);
  std::size_t compatible = 0;
  for (const auto& o : semi) compatible += classify(net, o) == OrientationClass::Compatible ? 1 : 0;
  SupersolvabilityResult ss = is_supersolvable(net);
  BigInt m_fact = 1, m2_fact = 1;
  for (int r = 2; r <= net.m(); ++r) m_fact *= r;
  for (int r = 2; r <= net.m() - 2; ++r) m2_fact *= r;
  bool ok = mobius_characteristic(net, limits) == pcp && BigInt(semi.size()) == counts.total &&
            BigInt(compatible) == counts.bounded && BigInt(semi.size()) * m_fact == acyclic_orientation_count(closure) &&
            BigInt(compatible) * m2_fact == beta_invariant(closure) && is_log_concave(pcp) &&
            weighted_elimination_ordering(net).has_value() == ss.supersolvable;
  return {{"id", entry.id},
          {"m", net.m()},
          {"n", net.n()},
          {"pcp", pcp.to_string()},
          {"total_chambers", big(counts.total)},
          {"bounded_chambers", big(counts.bounded)},
          {"compatible", compatible},
          {"chordal", ss.witness.chordal},
          {"supersolvable", ss.supersolvable},
          {"checks", ok ? "pass" : "fail"}};
}

Output cmd_census(const Options& opt, const Limits& limits) {
  std::vector<CorpusEntry> entries;
  if (!opt.file.empty()) {
    entries.push_back({opt.file, read_network_file(opt.file).net});
  } else {
    entries = corpus(opt.max_vertices);
  }
  json rows = json::array();
  std::ostringstream csv;
  const std::vector<std::string> columns{"id",         "m",       "n",      "pcp",           "total_chambers",
                                         "bounded_chambers", "compatible", "chordal", "supersolvable", "checks"};
  for (std::size_t c = 0; c < columns.size(); ++c) csv << (c ? "," : "") << columns[c];
  csv << '\n';
  for (const auto& entry : entries) {
    json row = census_row(entry, limits);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const json& v = row[columns[c]];
      csv << (c ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    csv << '\n';
    rows.push_back(row);
  }
  return {rows, csv.str()};
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InstanceTooLarge:
      return 2;
    case ErrorCode::DidNotConverge:
      return 3;
    default:
      return 1;
  }
}

void report_error(const std::string& code, const std::string& message) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet arrangements: characteristic polynomials, chambers and fixed-energy harmonic functions"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool file_required = true) {
    auto* f = sub->add_option("file", opt.file, "network JSON file");
    if (file_required) f->required();
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("-o,--output", opt.output, "write output to this file");
    return sub;
  };

  common(app.add_subcommand("validate", "check a network file"));
  common(app.add_subcommand("charpoly", "characteristic polynomial"));
  common(app.add_subcommand("count-chambers", "number of chambers and bounded chambers"));
  auto* orient = common(app.add_subcommand("orientations", "enumerate orientations"));
  orient->add_option("--mode", opt.mode, "acyclic, semicompatible or compatible")
      ->check(CLI::IsMember({"acyclic", "semicompatible", "compatible"}));
  orient->add_flag("--points", opt.points, "include an exact point of each chamber");
  orient->add_flag("--adjacency", opt.adjacency, "facet adjacency of the bounded chambers");
  common(app.add_subcommand("poset", "intersection poset with Mobius values"));
  common(app.add_subcommand("supersolvable", "supersolvability with a chordality witness"));
  common(app.add_subcommand("harmonic", "harmonic extension of the boundary values"))
      ->add_option("--gamma", opt.gamma, "conductance overrides key=value,...");
  common(app.add_subcommand("energies", "energies of the harmonic extension"))
      ->add_option("--gamma", opt.gamma, "conductance overrides key=value,...");
  auto* crit = common(app.add_subcommand("critical-points", "critical points of the master function"));
  crit->add_option("--eta", opt.eta, "energy overrides key=value,...");
  crit->add_option("--tol", opt.tol, "gradient tolerance");
  crit->add_option("--max-iter", opt.max_iter, "Newton iterations per chamber");
  common(app.add_subcommand("plot", "SVG of the arrangement (two interior vertices)"));
  common(app.add_subcommand("census", "corpus census as CSV"), false)
      ->add_option("--max-vertices", opt.max_vertices, "largest graph in the corpus")
      ->check(CLI::Range(3, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error("UsageError", e.what());
    return 1;
  }

  try {
    const Limits limits = Limits::from_env();
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    Output result;
    if (name == "census") {
      result = cmd_census(opt, limits);
    } else {
      NetworkDocument doc = read_network_file(opt.file);
      if (name == "validate") result = cmd_validate(doc);
      else if (name == "charpoly") result = cmd_charpoly(doc);
      else if (name == "count-chambers") result = cmd_count_chambers(doc);
      else if (name == "orientations") result = cmd_orientations(doc, opt, limits);
      else if (name == "poset") result = cmd_poset(doc, limits);
      else if (name == "supersolvable") result = cmd_supersolvable(doc);
      else if (name == "harmonic") result = cmd_harmonic(doc, opt, false);
      else if (name == "energies") result = cmd_harmonic(doc, opt, true);
      else if (name == "critical-points") result = cmd_critical_points(doc, opt, limits);
      else if (name == "plot") result = cmd_plot(doc, limits);
    }
    std::string text = opt.format == "json" ? result.doc.dump(2) + "\n" : result.text;
    if (opt.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(opt.output);
      if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + opt.output);
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    report_error(to_string(e.code()), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    report_error("InternalError", e.what());
    return 1;
  }
}
