#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanomirror/frobenius.hpp"
#include "fanomirror/grassmannian.hpp"
#include "fanomirror/laurent.hpp"
#include "fanomirror/polytope.hpp"
#include "fanomirror/young.hpp"

// Text serialization. Exact numbers are always JSON strings; output is
// indented with two spaces and ends in a newline. Parsers throw ParseError
// on malformed or inconsistent input.
namespace fano::io {

/// {"vars": [...], "terms": [{"coeff": "3/2", "q": 0, "exp": [1, -1]}, ...]}
std::string laurent_to_json(const LaurentPolynomial& f);
LaurentPolynomial parse_laurent(const std::string& text);

struct PolytopeDocument {
  HalfspaceSystem halfspaces;
  std::vector<RationalVector> vertices;
  std::map<long, Integer> lattice_counts;
  std::optional<GeometryFlags> flags;
};
/// {"dim", "facets": [{"normal", "offset"}], "vertices", "lattice_counts", "flags"?}
std::string polytope_to_json(const PolytopeDocument& doc);
PolytopeDocument parse_polytope(const std::string& text);

/// {"k": 2, "n": 4, "rows": [2, 1]}
std::string diagram_to_json(const YoungDiagram& lambda);
YoungDiagram parse_diagram(const std::string& text);
/// {"direction": "west", "steps": [1, 3]}; the box comes from the caller.
std::string step_set_to_json(const StepSet& steps);
StepSet parse_step_set(const std::string& text, BoxContext ctx);

/// {"index": 3, "coeffs": ["1", "0", "0", "6q", ...]}. A coefficient without
/// q is placed in q^{d/index} when an index is given.
std::string periods_to_json(const PeriodSequence& periods);
PeriodSequence parse_periods(const std::string& text);

/// [{"p": 1, "q": 2, "r": 0, "value": "3q"}, ...] for every p + q <= max_p, r <= p + q.
std::string table_to_json(const StructureTable& table);
StructureTable parse_table(const std::string& text, int max_p);

/// [{"p": 1, "valid_to": 11, "floor": -11, "terms": [{"exp": 1, "coeff": "1"}, ...]}, ...]
std::string series_to_json(const std::vector<ThetaSeries>& series);
std::vector<ThetaSeries> parse_series(const std::string& text);

/// Mismatch list: diagram rows {"lambda", "expected", "got", "attained"} and
/// theta rows {"theta", "cocharacter", "expected", "got", "attained"}.
std::string valuation_report_to_json(const ValuationReport& report);

std::string associativity_to_json(const std::vector<AssociativityViolation>& violations);

}  // namespace fano::io
