#include "fanomirror/catalog.hpp"

#include "fanomirror/errors.hpp"

namespace fano {

namespace {

// The Novikov parameter sits on the single term that closes the cycle of
// exponents; every nonzero c_d then lies in q^{d/index}.
LaurentPolynomial build(std::vector<std::string> vars, const std::vector<std::pair<ExponentVector, int>>& terms) {
  LaurentPolynomial f(std::move(vars));
  for (const auto& [e, qpow] : terms) f.add_term(e, QPolynomial::monomial(1, qpow));
  return f;
}

std::vector<QPolynomial> head(std::initializer_list<std::pair<long, int>> values) {
  std::vector<QPolynomial> out;
  for (const auto& [c, qpow] : values) out.push_back(QPolynomial::monomial(c, qpow));
  return out;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"p1", build({"x"}, {{{1}, 0}, {{-1}, 1}}), 2, "projective line, x + q/x",
                 head({{1, 0}, {0, 0}, {2, 1}, {0, 0}, {6, 2}, {0, 0}, {20, 3}})});
  out.push_back({"p2", build({"x", "y"}, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}}), 3,
                 "projective plane, x + y + q/(xy)",
                 head({{1, 0}, {0, 0}, {0, 0}, {6, 1}, {0, 0}, {0, 0}, {90, 2}})});
  out.push_back({"p1xp1", build({"x", "y"}, {{{1, 0}, 0}, {{-1, 0}, 1}, {{0, 1}, 0}, {{0, -1}, 1}}), 2,
                 "product of two projective lines, x + q/x + y + q/y",
                 head({{1, 0}, {0, 0}, {4, 1}, {0, 0}, {36, 2}, {0, 0}, {400, 3}})});
  out.push_back({"p3", build({"x", "y", "z"}, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{-1, -1, -1}, 1}}), 4,
                 "projective 3-space, x + y + z + q/(xyz)",
                 head({{1, 0}, {0, 0}, {0, 0}, {0, 0}, {24, 1}, {0, 0}, {0, 0}})});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw InvalidArgumentError("unknown catalog entry '" + name + "'");
}

}  // namespace fano
