#include "fanomirror/grassmannian.hpp"

#include <set>

#include "fanomirror/errors.hpp"

namespace fano {

namespace {

ExponentVector difference(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QPolynomial divide_coefficient(const QPolynomial& num, const QPolynomial& den) {
  if (!den.is_monomial() || den.is_zero()) {
    throw ChartRestrictionError("division by a coefficient that is not a q-monomial");
  }
  const auto& [power, c] = *den.coefficients().begin();
  QPolynomial out;
  for (const auto& [p, x] : num.coefficients()) {
    if (p < power) throw ChartRestrictionError("q-power of the divisor exceeds the dividend");
    out.add_term(p - power, x / c);
  }
  return out;
}

}  // namespace

LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  f.require_compatible(g);
  if (g.is_zero()) throw ChartRestrictionError("division by zero");
  LaurentPolynomial quotient(f.variables());
  if (f.is_zero()) return quotient;

  if (g.size() == 1) {
    const auto& [ge, gc] = *g.terms().begin();
    for (const auto& [e, c] : f.terms()) quotient.add_term(difference(e, ge), divide_coefficient(c, gc));
    return quotient;
  }

  // Long division on leading terms for a lex order on exponents. Every
  // quotient term of an exact division lies between low(f)/low(g) and
  // high(f)/high(g); leaving that window proves non-divisibility.
  const ExponentVector floor = difference(f.terms().begin()->first, g.terms().begin()->first);
  const auto& [g_lead, g_coeff] = *g.terms().rbegin();
  LaurentPolynomial rest = f;
  const std::size_t limit = 64 * (f.size() + 1) * (g.size() + 1);
  for (std::size_t step = 0; !rest.is_zero(); ++step) {
    const auto& [lead, coeff] = *rest.terms().rbegin();
    ExponentVector shift = difference(lead, g_lead);
    if (shift < floor || step > limit) {
      throw ChartRestrictionError("Laurent polynomial division is not exact");
    }
    LaurentPolynomial term = LaurentPolynomial::monomial(f.variables(), shift, divide_coefficient(coeff, g_coeff));
    quotient += term;
    rest -= term * g;
  }
  return quotient;
}

LaurentPolynomial theta_restriction(int i, const GridNetwork& net) {
  const BoxContext& ctx = net.context();
  LaurentPolynomial num = flow_polynomial(net, boundary_rectangle_box(i, ctx));
  LaurentPolynomial den = flow_polynomial(net, boundary_rectangle(i, ctx));
  try {
    return exact_divide(num, den);
  } catch (const ChartRestrictionError& e) {
    throw ChartRestrictionError("theta restriction " + std::to_string(i) + ": " + e.what());
  }
}

LaurentPolynomial theta_restriction(int i, BoxContext ctx) {
  return theta_restriction(i, build_rectangles_network(ctx));
}

int superpotential_q_index(BoxContext ctx) { return ctx.n - ctx.k; }

LaurentPolynomial superpotential_chart(BoxContext ctx) {
  GridNetwork net = build_rectangles_network(ctx);
  LaurentPolynomial w(net.variables());
  const int qi = superpotential_q_index(ctx);
  for (int i = 0; i < ctx.n; ++i) {
    LaurentPolynomial theta = theta_restriction(i, net);
    if (i == qi) theta *= QPolynomial::monomial(1, 1);
    w += theta;
  }
  return w;
}

std::vector<ValuationRow> ValuationReport::mismatches() const {
  std::vector<ValuationRow> out;
  for (const auto& r : rows) {
    if (!r.ok()) out.push_back(r);
  }
  return out;
}

std::vector<ThetaValuation> ValuationReport::theta_mismatches() const {
  std::vector<ThetaValuation> out;
  for (const auto& t : theta) {
    if (!t.ok()) out.push_back(t);
  }
  return out;
}

ValuationReport verify_valuations(BoxContext ctx) {
  GridNetwork net = build_rectangles_network(ctx);
  ValuationReport report;
  report.context = ctx;
  for (const auto& lambda : all_diagrams(ctx)) {
    ValuationRow row;
    row.lambda = lambda;
    row.expected = valuation_vector(lambda, net.variable_labels());
    LaurentPolynomial p = flow_polynomial(net, lambda);
    if (!p.is_zero()) {
      MinExponent m = min_exponent_vector(p);
      row.got = m.exponent;
      row.attained = m.attained;
    }
    report.rows.push_back(std::move(row));
  }
  for (int i = 0; i < ctx.n; ++i) {
    MinExponent m = min_exponent_vector(theta_restriction(i, net));
    for (int j = 0; j < ctx.n; ++j) {
      ThetaValuation t;
      t.i = i;
      t.j = j;
      t.expected = (i == j) - (i == ctx.n - ctx.k);
      // The base face has no chart coordinate: its pairing is identically 0.
      auto idx = net.variable_index(boundary_rectangle(j, ctx));
      t.got = idx ? m.exponent[*idx] : 0;
      t.attained = m.attained;
      report.theta.push_back(t);
    }
  }
  return report;
}

RationalPolytope nobody_polytope(BoxContext ctx) {
  GridNetwork net = build_rectangles_network(ctx);
  std::set<ExponentVector> exponents;
  for (int i = 0; i < ctx.n; ++i) {
    for (const auto& e : support(specialize_q_to_one(theta_restriction(i, net)))) exponents.insert(e);
  }
  return polar_from_support({exponents.begin(), exponents.end()});
}

std::vector<QPolynomial> grass_periods(BoxContext ctx, unsigned max_degree) {
  return classical_periods(superpotential_chart(ctx), max_degree);
}

}  // namespace fano
