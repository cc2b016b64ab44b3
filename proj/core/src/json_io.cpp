#include "fanomirror/json_io.hpp"

#include <set>

#include <json.hpp>

#include "fanomirror/errors.hpp"

namespace fano::io {

namespace {

using Json = nlohmann::ordered_json;

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

long as_integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<long>();
}

// Exact numbers arrive as strings; plain JSON integers are tolerated.
Rational as_rational(const Json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(std::string(what) + " must be an exact number string");
}

QPolynomial as_qpolynomial(const Json& v, const char* what) {
  if (v.is_string()) return parse_qpolynomial(v.get<std::string>());
  if (v.is_number_integer()) return QPolynomial(Rational(v.get<long>()));
  throw ParseError(std::string(what) + " must be a string");
}

const Json& as_array(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  return v;
}

Json rational_vector(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string laurent_to_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [qpow, x] : c.coefficients()) {
      terms.push_back(Json{{"coeff", to_string(x)}, {"q", qpow}, {"exp", e}});
    }
  }
  return emit(Json{{"vars", f.variables()}, {"terms", terms}});
}

LaurentPolynomial parse_laurent(const std::string& text) {
  return guarded([&] {
    Json j = parse_text(text);
    std::vector<std::string> vars;
    for (const auto& v : as_array(field(j, "vars"), "vars")) {
      if (!v.is_string()) throw ParseError("variable names must be strings");
      vars.push_back(v.get<std::string>());
    }
    LaurentPolynomial f(vars);
    std::set<std::pair<ExponentVector, long>> seen;
    for (const auto& t : as_array(field(j, "terms"), "terms")) {
      Rational c = as_rational(field(t, "coeff"), "coeff");
      long qpow = t.contains("q") ? as_integer(t["q"], "q") : 0;
      if (qpow < 0) throw ParseError("Novikov exponent must be non-negative");
      ExponentVector e;
      for (const auto& x : as_array(field(t, "exp"), "exp")) e.push_back(static_cast<int>(as_integer(x, "exponent")));
      if (e.size() != vars.size()) throw ParseError("exponent length differs from the number of variables");
      if (!seen.emplace(e, qpow).second) throw ParseError("duplicate term for one exponent and q-power");
      f.add_term(e, QPolynomial::monomial(c, static_cast<int>(qpow)));
    }
    return f;
  });
}

std::string polytope_to_json(const PolytopeDocument& doc) {
  Json facets = Json::array();
  for (const auto& h : doc.halfspaces.facets()) {
    facets.push_back(Json{{"normal", h.normal}, {"offset", to_string(h.offset)}});
  }
  Json verts = Json::array();
  for (const auto& v : doc.vertices) verts.push_back(rational_vector(v));
  Json counts = Json::object();
  for (const auto& [r, c] : doc.lattice_counts) counts[std::to_string(r)] = c.get_str();
  Json out{{"dim", doc.halfspaces.dimension()}, {"facets", facets}, {"vertices", verts}, {"lattice_counts", counts}};
  if (doc.flags) {
    out["flags"] = Json{{"bounded", doc.flags->bounded},
                        {"full_dimensional", doc.flags->full_dimensional},
                        {"origin_interior", doc.flags->origin_interior}};
  }
  return emit(out);
}

PolytopeDocument parse_polytope(const std::string& text) {
  return guarded([&] {
    Json j = parse_text(text);
    int dim = static_cast<int>(as_integer(field(j, "dim"), "dim"));
    std::vector<Halfspace> facets;
    for (const auto& f : as_array(field(j, "facets"), "facets")) {
      Halfspace h;
      for (const auto& x : as_array(field(f, "normal"), "normal")) h.normal.push_back(as_integer(x, "normal entry"));
      h.offset = as_rational(field(f, "offset"), "offset");
      facets.push_back(std::move(h));
    }
    PolytopeDocument doc{HalfspaceSystem(dim, std::move(facets)), {}, {}, std::nullopt};
    if (j.contains("vertices")) {
      for (const auto& v : as_array(j["vertices"], "vertices")) {
        RationalVector point;
        for (const auto& x : as_array(v, "vertex")) point.push_back(as_rational(x, "vertex coordinate"));
        if (static_cast<int>(point.size()) != dim) throw ParseError("vertex length differs from dim");
        doc.vertices.push_back(std::move(point));
      }
    }
    if (j.contains("lattice_counts")) {
      const Json& counts = j["lattice_counts"];
      if (!counts.is_object()) throw ParseError("lattice_counts must be an object");
      for (const auto& [key, value] : counts.items()) {
        long r = std::stol(key);
        Integer c = value.is_string() ? Integer(value.get<std::string>()) : Integer(as_integer(value, "count"));
        doc.lattice_counts[r] = c;
      }
    }
    if (j.contains("flags")) {
      const Json& f = j["flags"];
      doc.flags = GeometryFlags{field(f, "bounded").get<bool>(), field(f, "full_dimensional").get<bool>(),
                                field(f, "origin_interior").get<bool>()};
    }
    return doc;
  });
}

std::string diagram_to_json(const YoungDiagram& lambda) {
  return emit(Json{{"k", lambda.context().k}, {"n", lambda.context().n}, {"rows", lambda.rows()}});
}

YoungDiagram parse_diagram(const std::string& text) {
  return guarded([&] {
    Json j = parse_text(text);
    BoxContext ctx(static_cast<int>(as_integer(field(j, "k"), "k")), static_cast<int>(as_integer(field(j, "n"), "n")));
    std::vector<int> rows;
    for (const auto& x : as_array(field(j, "rows"), "rows")) rows.push_back(static_cast<int>(as_integer(x, "row")));
    return YoungDiagram(ctx, rows);
  });
}

std::string step_set_to_json(const StepSet& steps) {
  return emit(Json{{"direction", steps.direction == StepDirection::West ? "west" : "south"},
                   {"steps", std::vector<int>(steps.members.begin(), steps.members.end())}});
}

StepSet parse_step_set(const std::string& text, BoxContext ctx) {
  return guarded([&] {
    Json j = parse_text(text);
    const Json& dir = field(j, "direction");
    if (!dir.is_string() || (dir != "west" && dir != "south")) throw ParseError("direction must be west or south");
    std::set<int> members;
    for (const auto& x : as_array(field(j, "steps"), "steps")) {
      if (!members.insert(static_cast<int>(as_integer(x, "step"))).second) throw ParseError("repeated step");
    }
    return StepSet(ctx, dir == "west" ? StepDirection::West : StepDirection::South, members);
  });
}

std::string periods_to_json(const PeriodSequence& periods) {
  Json coeffs = Json::array();
  for (const auto& c : periods.coeffs) coeffs.push_back(to_string(c));
  Json out = Json::object();
  if (periods.index) out["index"] = *periods.index;
  out["coeffs"] = coeffs;
  return emit(out);
}

PeriodSequence parse_periods(const std::string& text) {
  return guarded([&] {
    Json j = parse_text(text);
    PeriodSequence out;
    if (j.contains("index") && !j["index"].is_null()) {
      long idx = as_integer(j["index"], "index");
      if (idx <= 0) throw ParseError("index must be positive");
      out.index = static_cast<int>(idx);
    }
    int d = 0;
    for (const auto& c : as_array(field(j, "coeffs"), "coeffs")) {
      bool explicit_q = c.is_string() && c.get<std::string>().find('q') != std::string::npos;
      QPolynomial value = as_qpolynomial(c, "period coefficient");
      if (!explicit_q && out.index && d % *out.index == 0 && !value.is_zero()) {
        value = QPolynomial::monomial(value.coefficient(0), d / *out.index);
      }
      out.coeffs.push_back(std::move(value));
      ++d;
    }
    if (out.coeffs.empty()) throw ParseError("period sequence is empty");
    return out;
  });
}

std::string table_to_json(const StructureTable& table) {
  Json out = Json::array();
  for (int p = 0; p <= table.max_p(); ++p) {
    for (int q = 0; p + q <= table.max_p(); ++q) {
      for (int r = 0; r <= p + q; ++r) {
        out.push_back(Json{{"p", p}, {"q", q}, {"r", r}, {"value", to_string(table.entry(p, q, r))}});
      }
    }
  }
  return emit(out);
}

StructureTable parse_table(const std::string& text, int max_p) {
  return guarded([&] {
    Json j = parse_text(text);
    StructureTable table(max_p);
    for (const auto& rec : as_array(j, "table")) {
      table.set(static_cast<int>(as_integer(field(rec, "p"), "p")), static_cast<int>(as_integer(field(rec, "q"), "q")),
                static_cast<int>(as_integer(field(rec, "r"), "r")), as_qpolynomial(field(rec, "value"), "value"));
    }
    return table;
  });
}

std::string series_to_json(const std::vector<ThetaSeries>& series) {
  Json out = Json::array();
  for (const auto& s : series) {
    Json terms = Json::array();
    for (auto it = s.series().coefficients().rbegin(); it != s.series().coefficients().rend(); ++it) {
      terms.push_back(Json{{"exp", it->first}, {"coeff", to_string(it->second)}});
    }
    Json rec{{"p", s.p()}};
    rec["valid_to"] = s.valid_to() ? Json(*s.valid_to()) : Json(nullptr);
    rec["floor"] = s.series().floor() ? Json(*s.series().floor()) : Json(nullptr);
    rec["terms"] = terms;
    out.push_back(rec);
  }
  return emit(out);
}

std::vector<ThetaSeries> parse_series(const std::string& text) {
  return guarded([&] {
    Json j = parse_text(text);
    std::vector<ThetaSeries> out;
    for (const auto& rec : as_array(j, "series")) {
      int p = static_cast<int>(as_integer(field(rec, "p"), "p"));
      std::optional<int> floor;
      if (rec.contains("floor")) {
        if (!rec["floor"].is_null()) floor = static_cast<int>(as_integer(rec["floor"], "floor"));
      } else if (const Json& valid = field(rec, "valid_to"); !valid.is_null()) {
        floor = -static_cast<int>(as_integer(valid, "valid_to"));
      }
      std::map<int, QPolynomial> coeffs;
      for (const auto& t : as_array(field(rec, "terms"), "terms")) {
        int e = static_cast<int>(as_integer(field(t, "exp"), "exp"));
        if (!coeffs.emplace(e, as_qpolynomial(field(t, "coeff"), "coeff")).second) throw ParseError("repeated exponent");
      }
      out.emplace_back(p, TruncatedSeries(std::move(coeffs), floor));
    }
    return out;
  });
}

std::string valuation_report_to_json(const ValuationReport& report) {
  Json out = Json::array();
  for (const auto& row : report.mismatches()) {
    out.push_back(Json{{"lambda", row.lambda.rows()}, {"expected", row.expected}, {"got", row.got}, {"attained", row.attained}});
  }
  for (const auto& t : report.theta_mismatches()) {
    out.push_back(Json{{"theta", t.i}, {"cocharacter", t.j}, {"expected", {t.expected}}, {"got", {t.got}}, {"attained", t.attained}});
  }
  return emit(out);
}

std::string associativity_to_json(const std::vector<AssociativityViolation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    out.push_back(Json{{"p", v.p}, {"q", v.q}, {"r", v.r}, {"u", v.u}, {"left", to_string(v.left)}, {"right", to_string(v.right)}});
  }
  return emit(out);
}

}  // namespace fano::io
