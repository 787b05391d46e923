#include "rm3/prescribe.hpp"

#include <sstream>
#include <stdexcept>

namespace rm3 {

IntMatrix sl2_block(const Integer& r, const Integer& s) {
  if (r < 1 || s < 1) throw std::invalid_argument("sl2_block: r and s must be >= 1");
  IntMatrix m(2);
  m(0, 0) = 1 - r * (1 + r * s);
  m(0, 1) = r;
  m(1, 0) = -r * (1 + s + r * s);
  m(1, 1) = 1 + r;
  return m;
}

IntMatrix prescribe_symplectic(const DivisorChain& chain) {
  const auto& a = chain.divisors;
  if (a.empty() || a.size() % 2 != 0)
    throw std::invalid_argument("prescribe_symplectic: chain length must be even and positive");
  for (const auto& d : a)
    if (d < 1) throw std::invalid_argument("prescribe_symplectic: entries must be >= 1");
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (!mpz_divisible_p(a[i + 1].get_mpz_t(), a[i].get_mpz_t()))
      throw std::invalid_argument("prescribe_symplectic: divisibility chain violated");

  const std::size_t g = a.size() / 2;
  IntMatrix m(2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    const Integer& r = a[2 * i];
    Integer s;
    mpz_divexact(s.get_mpz_t(), a[2 * i + 1].get_mpz_t(), r.get_mpz_t());
    const IntMatrix b = sl2_block(r, s);
    m(i, i) = b(0, 0);
    m(i, g + i) = b(0, 1);
    m(g + i, i) = b(1, 0);
    m(g + i, g + i) = b(1, 1);
  }
  return m;
}

bool verify_prescription(const IntMatrix& m, const DivisorChain& chain) {
  if (chain.rank() != m.dim())
    throw std::invalid_argument("verify_prescription: chain length must equal matrix dimension");
  if (!is_symplectic(m)) return false;
  return smith_normal_form(m.minus_identity()) == chain;
}

DivisorChain parse_chain(const std::string& text) {
  DivisorChain c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("parse_chain: empty entry");
    Integer v;
    if (v.set_str(item.substr(b, e - b + 1), 10) != 0)
      throw std::invalid_argument("parse_chain: not an integer: '" + item + "'");
    c.divisors.push_back(v);
  }
  if (c.divisors.empty()) throw std::invalid_argument("parse_chain: empty chain");
  return c;
}

}  // namespace rm3
