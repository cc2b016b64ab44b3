#pragma once

#include <string>
#include <vector>

#include "fanomirror/laurent.hpp"

namespace fano {

struct CatalogEntry {
  std::string name;
  LaurentPolynomial mirror;
  int fano_index = 1;
  std::string description;
  /// c_0 .. c_6 of the mirror, recorded as regression data.
  std::vector<QPolynomial> expected_head;
};

const std::vector<CatalogEntry>& catalog();
/// Throws InvalidArgumentError for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace fano
