#include <chrono>
#include <functional>
#include <sstream>

#include "fanomirror/catalog.hpp"
#include "fanomirror/errors.hpp"
#include "fanomirror/frobenius.hpp"
#include "fanomirror/grassmannian.hpp"
#include "fanomirror_cli/cli.hpp"

namespace fano::cli {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail << why;
    passed = false;
  }
};

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

LaurentPolynomial p2_mirror_plain() {
  LaurentPolynomial f({"x", "y"});
  f.add_term({1, 0}, 1);
  f.add_term({0, 1}, 1);
  f.add_term({-1, -1}, 1);
  return f;
}

void check_periods_p2(Outcome& o) {
  auto c = classical_periods(p2_mirror_plain(), 15);
  for (unsigned d = 0; d <= 15; ++d) {
    QPolynomial expected;
    if (d % 3 == 0) {
      Integer m = factorial(d / 3);
      expected = QPolynomial(Rational(factorial(d) / (m * m * m)));
    }
    if (!(c[d] == expected)) o.fail("c_" + std::to_string(d) + " = " + to_string(c[d]));
  }
}

void check_valuation_deltas(Outcome& o) {
  int cases = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      BoxContext ctx(k, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          ++cases;
          int expected = (i == j) - (i == n - k);
          if (theta_valuation_delta(i, j, ctx) != expected) {
            o.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                   " j=" + std::to_string(j));
          }
        }
      }
    }
  }
  if (o.passed) o.detail << cases << " cases";
}

void check_reflection(Outcome& o) {
  long pairs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      auto diagrams = all_diagrams(BoxContext(k, n));
      for (const auto& mu : diagrams) {
        for (const auto& lambda : diagrams) {
          ++pairs;
          if (max_diag(mu, lambda) != max_diag(sigma_reflect(lambda), sigma_reflect(mu))) {
            o.fail("mu=" + to_string(mu) + " lambda=" + to_string(lambda));
          }
        }
      }
    }
  }
  if (o.passed) o.detail << pairs << " pairs";
}

void check_flows(Outcome& o) {
  int relations = 0;
  for (int n : {4, 5}) {
    BoxContext ctx(2, n);
    GridNetwork net = build_rectangles_network(ctx);
    if (!(flow_polynomial(net, YoungDiagram::empty(ctx)) == LaurentPolynomial::constant(net.variables(), 1))) {
      o.fail("flow of the empty diagram is not 1");
    }
    for (const auto& lambda : all_diagrams(ctx)) {
      LaurentPolynomial flow = flow_polynomial(net, lambda);
      for (const auto& [e, c] : flow.terms()) {
        if (!(c == QPolynomial(1))) o.fail("coefficient " + to_string(c) + " in flow of " + to_string(lambda));
      }
    }
    auto p = [&](int a, int b) { return flow_polynomial(net, from_west_steps(ctx, {a, b})); };
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        for (int c = b + 1; c <= n; ++c) {
          for (int d = c + 1; d <= n; ++d) {
            ++relations;
            if (!(p(a, c) * p(b, d) == p(a, b) * p(c, d) + p(a, d) * p(b, c))) {
              o.fail("relation " + std::to_string(a) + std::to_string(b) + std::to_string(c) + std::to_string(d) +
                     " in Gr(2," + std::to_string(n) + ")");
            }
          }
        }
      }
    }
  }
  if (o.passed) o.detail << relations << " three-term relations";
}

void check_valuations(Outcome& o) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 5}}) {
    ValuationReport report = verify_valuations(BoxContext(k, n));
    if (!report.ok()) {
      o.fail("(" + std::to_string(k) + "," + std::to_string(n) + "): " +
             std::to_string(report.mismatches().size() + report.theta_mismatches().size()) + " mismatches");
    }
  }
}

void check_nobody(Outcome& o) {
  BoxContext ctx(2, 4);
  RationalPolytope body = nobody_polytope(ctx);
  GeometryFlags flags = geometry_flags(body);
  if (!flags.bounded || !flags.full_dimensional || !flags.origin_interior) o.fail("geometry flags not all true");
  for (long r : {1L, 2L}) {
    Integer count = lattice_point_count(body, r);
    Integer expected = schur_dimension(std::vector<int>{static_cast<int>(4 * r), static_cast<int>(4 * r)}, 4);
    if (count != expected) o.fail("r=" + std::to_string(r) + ": " + count.get_str() + " vs " + expected.get_str());
    else o.detail << (r == 1 ? "" : ", ") << "r=" << r << ": " << count.get_str();
  }
}

void check_grass_periods(Outcome& o) {
  auto c = grass_periods(BoxContext(2, 4), 12);
  for (int d = 0; d <= 12; ++d) {
    if (d % 4 != 0) {
      if (!c[d].is_zero()) o.fail("c_" + std::to_string(d) + " off the grading");
      continue;
    }
    bool fine = c[d].is_monomial() && !c[d].is_zero() && c[d].lowest_power() == d / 4 &&
                c[d].has_integer_coefficients() && c[d].has_nonnegative_coefficients();
    if (!fine) o.fail("c_" + std::to_string(d) + " = " + to_string(c[d]));
  }
  if (o.passed) o.detail << "c_12 = " << to_string(c[12]);
}

PeriodSequence p2_periods(unsigned order) { return {classical_periods(catalog_entry("p2").mirror, order), 3}; }

void check_round_trip(Outcome& o) {
  PeriodSequence periods = p2_periods(12);
  ThetaSeries n1 = reconstruct_n1(periods);
  for (int d = 0; d <= 12; ++d) {
    std::vector<ThetaSeries> factors(d, n1);
    if (!(residue_product(factors) == periods.coeffs[d])) o.fail("c_" + std::to_string(d) + " not reproduced");
  }
  if (!n1.tail(1).is_zero()) o.fail("a_1 != 0");
  if (!(n1.tail(2) == QPolynomial::monomial(2, 1))) o.fail("a_2 != 2q");
  for (int i = 1; i <= *n1.valid_to(); ++i) {
    if (i % 3 != 2 && !n1.two_point(i).is_zero()) o.fail("N_{1," + std::to_string(i) + "} != 0");
  }
}

void check_two_routes(Outcome& o) {
  auto series = theta_series_from_periods(p2_periods(12), 6);
  StructureTable table = structure_table(series, 6);
  int compared = 0;
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; p + q <= 6; ++q) {
      ++compared;
      if (!(residue_product({series[p], series[q]}) == table.entry(p, q, 0))) {
        o.fail("p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
    }
  }
  if (o.passed) o.detail << compared << " pairs";
}

void check_associativity(Outcome& o) {
  if (!associativity_check(StructureTable::trivial(6), 6).empty()) o.fail("trivial table");
  auto series = theta_series_from_periods(p2_periods(12), 4);
  StructureTable table = structure_table(series, 4);
  if (!associativity_check(table, 4, 2).empty()) o.fail("P2 table");
  StructureTable corrupted = table;
  corrupted.set(1, 1, 0, table.entry(1, 1, 0) + QPolynomial::monomial(1, 1));
  auto violations = associativity_check(corrupted, 4, 2);
  if (violations.empty()) o.fail("corrupted entry went unnoticed");
  else if (o.passed) o.detail << "negative control: " << violations.size() << " violations";
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  const std::vector<std::tuple<std::string, std::string, std::function<void(Outcome&)>>> checks = {
      {"AC1", "P2 classical periods through degree 15", check_periods_p2},
      {"AC2", "theta valuation identity for n <= 8", check_valuation_deltas},
      {"AC3", "MaxDiag reflection symmetry for n <= 6", check_reflection},
      {"AC4", "flow polynomials and Pluecker relations", check_flows},
      {"AC5", "valuation reports for (2,4), (2,5), (3,5)", check_valuations},
      {"AC6", "Gr(2,4) Newton-Okounkov lattice counts", check_nobody},
      {"AC7", "Gr(2,4) periods grading and integrality", check_grass_periods},
      {"AC8", "N_1 reconstruction round trip on P2", check_round_trip},
      {"AC9", "residue products against structure constants", check_two_routes},
      {"AC10", "associativity of structure tables", check_associativity},
  };
  std::vector<CheckResult> out;
  for (const auto& [id, title, fn] : checks) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back({id, title, o.passed, o.detail.str(), secs});
  }
  return out;
}

}  // namespace fano::cli
