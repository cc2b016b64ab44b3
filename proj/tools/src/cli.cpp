#include "fanomirror_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fanomirror/catalog.hpp"
#include "fanomirror/errors.hpp"
#include "fanomirror/frobenius.hpp"
#include "fanomirror/grassmannian.hpp"
#include "fanomirror/json_io.hpp"

namespace fano::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string poly;
  std::string periods;
  std::string catalog_name;
  std::string emit;
  std::string q_mode = "keep";
  std::string out;
  int order = -1;
  int k = 0;
  int n = 0;
  int max_p = 4;
  int max_r = 2;
  int index = 0;
  std::string entry = "list";
};

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Write the primary output to FILE instead of standard output");
}

void add_q_mode(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q_mode, "Keep the Novikov parameter or set it to 1")
      ->check(CLI::IsMember({"keep", "one"}));
}

// The mirror named by --poly or --catalog, and its index when known.
std::pair<LaurentPolynomial, std::optional<int>> load_mirror(const Options& o) {
  if (!o.catalog_name.empty()) {
    const auto& entry = catalog_entry(o.catalog_name);
    return {entry.mirror, entry.fano_index};
  }
  if (o.poly.empty()) throw InvalidArgumentError("one of --poly or --catalog is required");
  std::optional<int> index;
  if (o.index > 0) index = o.index;
  return {io::parse_laurent(read_file(o.poly)), index};
}

void report_grading(const PeriodSequence& periods, std::ostream& err) {
  if (!periods.index) return;
  auto bad = grading_violations(periods, *periods.index);
  if (bad.empty()) return;
  err << "warning: coefficients off the index-" << *periods.index << " grading at d =";
  for (int d : bad) err << ' ' << d;
  err << '\n';
}

PeriodSequence with_q_mode(PeriodSequence p, const std::string& mode) {
  if (mode == "one") {
    for (auto& c : p.coeffs) c = QPolynomial(c.at_one());
    p.index.reset();
  }
  return p;
}

std::string cmd_period(const Options& o, std::ostream& err) {
  auto [mirror, index] = load_mirror(o);
  if (o.q_mode == "one") {
    mirror = specialize_q_to_one(mirror);
    index.reset();
  }
  PeriodSequence periods{classical_periods(mirror, static_cast<unsigned>(o.order < 0 ? 10 : o.order)), index};
  if (o.q_mode == "keep") report_grading(periods, err);
  if (o.emit == "series") return io::periods_to_json(PeriodSequence{unregularize(periods), index});
  if (!o.emit.empty() && o.emit != "periods") throw InvalidArgumentError("period emits periods or series");
  return io::periods_to_json(periods);
}

io::PolytopeDocument describe(const RationalPolytope& polytope, int max_r) {
  io::PolytopeDocument doc{polytope.halfspaces(), polytope.vertices(), {}, geometry_flags(polytope)};
  if (doc.flags->bounded) {
    for (long r = 0; r <= max_r; ++r) doc.lattice_counts[r] = lattice_point_count(polytope, r);
  }
  return doc;
}

std::string cmd_polytope(const Options& o, std::ostream& err) {
  auto [mirror, index] = load_mirror(o);
  (void)index;
  RationalPolytope polytope = polar_from_support(support(specialize_q_to_one(mirror)));
  auto doc = describe(polytope, o.max_r);
  if (!doc.flags->bounded) err << "warning: polyhedron is unbounded; no lattice counts\n";
  return io::polytope_to_json(doc);
}

std::string cmd_grassmannian(const Options& o, std::ostream& err) {
  BoxContext ctx(o.k, o.n);
  const std::string emit = o.emit.empty() ? "superpotential" : o.emit;
  if (emit == "superpotential") {
    LaurentPolynomial w = superpotential_chart(ctx);
    if (o.q_mode == "one") w = specialize_q_to_one(w);
    return io::laurent_to_json(w);
  }
  if (emit == "polytope") {
    auto doc = describe(nobody_polytope(ctx), o.max_r);
    if (!doc.flags->bounded) err << "warning: polyhedron is unbounded; no lattice counts\n";
    return io::polytope_to_json(doc);
  }
  if (emit == "periods") {
    PeriodSequence periods{grass_periods(ctx, static_cast<unsigned>(o.order < 0 ? 8 : o.order)), ctx.n};
    return io::periods_to_json(with_q_mode(periods, o.q_mode));
  }
  if (emit == "valuations") {
    ValuationReport report = verify_valuations(ctx);
    if (!report.ok()) err << "warning: valuation mismatches found\n";
    return io::valuation_report_to_json(report);
  }
  throw InvalidArgumentError("grassmannian emits superpotential, polytope, periods or valuations");
}

std::string cmd_frobenius(const Options& o, std::ostream& err) {
  PeriodSequence periods;
  if (!o.catalog_name.empty()) {
    const auto& entry = catalog_entry(o.catalog_name);
    periods = {classical_periods(entry.mirror, static_cast<unsigned>(o.order < 0 ? 12 : o.order)), entry.fano_index};
  } else if (!o.periods.empty()) {
    periods = io::parse_periods(read_file(o.periods));
    if (o.order >= 0 && o.order < periods.order()) periods.coeffs.resize(o.order + 1);
  } else {
    throw InvalidArgumentError("one of --periods or --catalog is required");
  }
  if (o.index > 0) periods.index = o.index;
  periods = with_q_mode(periods, o.q_mode);
  if (o.q_mode == "keep") report_grading(periods, err);

  const std::string emit = o.emit.empty() ? "table" : o.emit;
  if (emit == "periods") return io::periods_to_json(PeriodSequence{unregularize(periods), periods.index});
  std::vector<ThetaSeries> series = theta_series_from_periods(periods, o.max_p);
  if (emit == "series") return io::series_to_json(series);
  if (emit == "table") {
    StructureTable table = structure_table(series, o.max_p);
    auto violations = associativity_check(table, o.max_p);
    err << "associativity: " << violations.size() << " violation(s) through p+q+r <= " << o.max_p << '\n';
    return io::table_to_json(table);
  }
  throw InvalidArgumentError("frobenius emits table, series or periods");
}

std::string cmd_catalog(const Options& o) {
  std::ostringstream os;
  if (o.entry == "list") {
    os << "[\n";
    const auto& all = catalog();
    for (std::size_t i = 0; i < all.size(); ++i) {
      os << "  {\"name\": \"" << all[i].name << "\", \"index\": " << all[i].fano_index << ", \"description\": \""
         << all[i].description << "\"}" << (i + 1 < all.size() ? "," : "") << '\n';
    }
    os << "]\n";
    return os.str();
  }
  const auto& e = catalog_entry(o.entry);
  os << "{\n  \"name\": \"" << e.name << "\",\n  \"index\": " << e.fano_index << ",\n  \"description\": \""
     << e.description << "\",\n  \"expected_head\": [";
  for (std::size_t i = 0; i < e.expected_head.size(); ++i) {
    os << (i ? ", " : "") << '"' << to_string(e.expected_head[i]) << '"';
  }
  os << "],\n  \"mirror\": ";
  std::string mirror = io::laurent_to_json(e.mirror);
  mirror.pop_back();
  std::string indented;
  for (char c : mirror) {
    indented += c;
    if (c == '\n') indented += "  ";
  }
  os << indented << "\n}\n";
  return os.str();
}

int cmd_selfcheck(std::ostream& out) {
  bool all = true;
  for (const auto& r : run_selfcheck()) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(5) << r.id << ' ' << r.title << " ("
        << std::fixed << std::setprecision(3) << r.seconds << " s)";
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
  }
  out << (all ? "selfcheck: all criteria passed\n" : "selfcheck: FAILED\n");
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact periods, Newton-Okounkov polytopes and theta structure constants for Fano mirrors",
               "fanomirror"};
  app.require_subcommand(1);
  Options o;

  auto* period = app.add_subcommand("period", "Classical periods of a Laurent polynomial");
  auto* poly_opt = period->add_option("--poly", o.poly, "Laurent polynomial JSON file");
  period->add_option("--catalog", o.catalog_name, "Built-in mirror name")->excludes(poly_opt);
  period->add_option("--order", o.order, "Highest degree D (default 10)")->check(CLI::NonNegativeNumber);
  period->add_option("--index", o.index, "Fano index used for grading checks")->check(CLI::PositiveNumber);
  period->add_option("--emit", o.emit, "periods or series (unregularized)")
      ->check(CLI::IsMember({"periods", "series"}));
  add_q_mode(period, o);
  add_output(period, o);

  auto* polytope = app.add_subcommand("polytope", "Polar dual of the Newton polytope with lattice counts");
  auto* poly_opt2 = polytope->add_option("--poly", o.poly, "Laurent polynomial JSON file");
  polytope->add_option("--catalog", o.catalog_name, "Built-in mirror name")->excludes(poly_opt2);
  polytope->add_option("--max-r", o.max_r, "Largest dilation to count (default 2)")->check(CLI::NonNegativeNumber);
  add_output(polytope, o);

  auto* grass = app.add_subcommand("grassmannian", "Rectangles-seed chart of Gr(k,n)");
  grass->add_option("--k", o.k, "k")->required()->check(CLI::PositiveNumber);
  grass->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  grass->add_option("--emit", o.emit, "superpotential, polytope, periods or valuations")
      ->check(CLI::IsMember({"superpotential", "polytope", "periods", "valuations"}));
  grass->add_option("--order", o.order, "Highest period degree (default 8)")->check(CLI::NonNegativeNumber);
  grass->add_option("--max-r", o.max_r, "Largest dilation to count (default 2)")->check(CLI::NonNegativeNumber);
  add_q_mode(grass, o);
  add_output(grass, o);

  auto* frob = app.add_subcommand("frobenius", "Theta series and structure constants from periods");
  auto* periods_opt = frob->add_option("--periods", o.periods, "Period sequence JSON file");
  frob->add_option("--catalog", o.catalog_name, "Built-in mirror name")->excludes(periods_opt);
  frob->add_option("--order", o.order, "Truncation order T (default 12 for catalog input)")
      ->check(CLI::NonNegativeNumber);
  frob->add_option("--max-p", o.max_p, "Largest theta index P (default 4)")->check(CLI::NonNegativeNumber);
  frob->add_option("--index", o.index, "Fano index used for grading checks")->check(CLI::PositiveNumber);
  frob->add_option("--emit", o.emit, "table, series or periods (unregularized)")
      ->check(CLI::IsMember({"table", "series", "periods"}));
  add_q_mode(frob, o);
  add_output(frob, o);

  auto* cat = app.add_subcommand("catalog", "List built-in mirrors or show one");
  cat->add_option("name", o.entry, "Entry name, or list (default)");

  auto* self = app.add_subcommand("selfcheck", "Run the acceptance battery");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (self->parsed()) return cmd_selfcheck(out);
    std::string text;
    if (period->parsed()) text = cmd_period(o, err);
    else if (polytope->parsed()) text = cmd_polytope(o, err);
    else if (grass->parsed()) text = cmd_grassmannian(o, err);
    else if (frob->parsed()) text = cmd_frobenius(o, err);
    else if (cat->parsed()) text = cmd_catalog(o);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw InvalidArgumentError("cannot write '" + o.out + "'");
      file << text;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fano::cli
