#pragma once

// Readable gtest failure messages for the exact types.

#include <ostream>

#include "fanomirror/frobenius.hpp"
#include "fanomirror/laurent.hpp"
#include "fanomirror/young.hpp"

namespace fano {

inline void PrintTo(const QPolynomial& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const LaurentPolynomial& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const YoungDiagram& d, std::ostream* os) { *os << to_string(d); }
inline void PrintTo(const TruncatedSeries& s, std::ostream* os) { *os << to_string(s); }

}  // namespace fano
