#pragma once

#include <istream>
#include <string>
#include <vector>

#include "rm3/exact_matrix.hpp"

namespace rm3 {

/// Matrix text format: the dimension on its own line, then `dim` rows of
/// whitespace-separated decimal integers. Files may hold several matrices in a row.
/// Parse failures throw std::invalid_argument.
IntMatrix read_matrix(std::istream& in);
std::vector<IntMatrix> read_matrices(std::istream& in);
IntMatrix parse_matrix(const std::string& text);

/// Throws IoError when the file cannot be opened.
std::vector<IntMatrix> read_matrix_file(const std::string& path);

std::string format_matrix(const IntMatrix& m);

}  // namespace rm3
