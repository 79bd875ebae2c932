#pragma once

#include <iosfwd>
#include <string>

#include "dimjump/f2_linalg.hpp"

namespace dimjump {

/// Matrix Market coordinate pattern format: 1-indexed entries sorted
/// row-major. Round-trips bit-exactly.
void write_matrix_market(std::ostream& os, const BitMatrix& m);
std::string matrix_market_string(const BitMatrix& m);
BitMatrix read_matrix_market(std::istream& is);

/// MacKay alist format: column count first, entries 1-indexed, lists padded
/// with zeros to the maximum weight.
void write_alist(std::ostream& os, const BitMatrix& m);
std::string alist_string(const BitMatrix& m);
BitMatrix read_alist(std::istream& is);

}  // namespace dimjump
