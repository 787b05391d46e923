#include "rm3/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rm3/errors.hpp"

namespace rm3 {

namespace {

bool next_token(std::istream& in, std::string& tok) { return static_cast<bool>(in >> tok); }

Integer parse_integer(const std::string& tok) {
  Integer v;
  // mpz accepts a leading '-' but also stray whitespace; require a plain decimal token.
  const std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (start == tok.size() || tok.find_first_not_of("0123456789", start) != std::string::npos)
    throw std::invalid_argument("matrix file: not a decimal integer: '" + tok + "'");
  v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10);
  return v;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
  std::string tok;
  if (!next_token(in, tok)) throw std::invalid_argument("matrix file: missing dimension");
  const Integer d = parse_integer(tok);
  if (d < 1 || d > 10000) throw std::invalid_argument("matrix file: bad dimension " + tok);
  const std::size_t n = d.get_ui();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!next_token(in, tok))
        throw std::invalid_argument("matrix file: expected " + std::to_string(n * n) + " entries");
      m(i, j) = parse_integer(tok);
    }
  return m;
}

std::vector<IntMatrix> read_matrices(std::istream& in) {
  std::vector<IntMatrix> out;
  in >> std::ws;
  while (in.peek() != std::char_traits<char>::eof()) {
    out.push_back(read_matrix(in));
    in >> std::ws;
  }
  if (out.empty()) throw std::invalid_argument("matrix file: no matrices");
  return out;
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  auto ms = read_matrices(in);
  if (ms.size() != 1) throw std::invalid_argument("expected exactly one matrix");
  return std::move(ms.front());
}

std::vector<IntMatrix> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file '" + path + "'");
  return read_matrices(in);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.dim() << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace rm3
