#include "rm3/homology.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rm3 {

std::size_t DivisorChain::zero_count() const {
  std::size_t z = 0;
  for (const auto& d : divisors) z += (d == 0);
  return z;
}

bool DivisorChain::is_valid() const {
  bool seen_zero = false;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const Integer& d = divisors[i];
    if (d < 0) return false;
    if (d == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (i + 1 < divisors.size() && divisors[i + 1] != 0 &&
        !mpz_divisible_p(divisors[i + 1].get_mpz_t(), d.get_mpz_t()))
      return false;
  }
  return true;
}

Integer DivisorChain::nonzero_product() const {
  Integer p = 1;
  for (const auto& d : divisors)
    if (d != 0) p *= d;
  return p;
}

std::string DivisorChain::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < divisors.size(); ++i) os << (i ? ", " : "") << divisors[i];
  os << ')';
  return os.str();
}

HomologyDescriptor HomologyDescriptor::from_cokernel(const DivisorChain& chain,
                                                     std::size_t extra_free) {
  HomologyDescriptor h;
  h.betti = extra_free + chain.zero_count();
  for (const auto& d : chain.divisors)
    if (d > 1) {
      h.torsion.push_back(d);
      h.torsion_order *= d;
    }
  return h;
}

std::string HomologyDescriptor::to_string() const {
  std::ostringstream os;
  os << "Z^" << betti;
  for (const auto& t : torsion) os << " + Z/" << t;
  return os.str();
}

namespace {

// Working matrix for the reduction (rectangular-capable, row-major).
struct Work {
  std::size_t rows, cols;
  std::vector<Integer> a;

  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(r1, j), at(r2, j));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, c1), at(i, c2));
  }
};

// Position of the minimal-|.| nonzero entry in the submatrix [t.., t..], lex tie-break.
bool find_pivot(Work& w, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  for (std::size_t i = t; i < w.rows; ++i)
    for (std::size_t j = t; j < w.cols; ++j) {
      const Integer& v = w.at(i, j);
      if (v == 0) continue;
      if (!found || mpz_cmpabs(v.get_mpz_t(), w.at(pr, pc).get_mpz_t()) < 0) {
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

DivisorChain smith_normal_form(const IntMatrix& m) {
  const std::size_t n = m.dim();
  Work w{n, n, std::vector<Integer>(m.entries().begin(), m.entries().end())};
  DivisorChain chain;
  Integer q;
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(w, t, pr, pc)) break;
    for (;;) {
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      const Integer piv = w.at(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (w.at(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w.at(i, t).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t j = t; j < n; ++j)
          mpz_submul(w.at(i, j).get_mpz_t(), q.get_mpz_t(), w.at(t, j).get_mpz_t());
        clean = clean && w.at(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.at(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w.at(t, j).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t i = t; i < n; ++i)
          mpz_submul(w.at(i, j).get_mpz_t(), q.get_mpz_t(), w.at(i, t).get_mpz_t());
        clean = clean && w.at(t, j) == 0;
      }
      if (clean) {
        // The pivot must divide the whole remaining block.
        std::size_t bad_row = n;
        for (std::size_t i = t + 1; i < n && bad_row == n; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (!mpz_divisible_p(w.at(i, j).get_mpz_t(), piv.get_mpz_t())) {
              bad_row = i;
              break;
            }
        if (bad_row == n) break;
        for (std::size_t j = t; j < n; ++j) w.at(t, j) += w.at(bad_row, j);
      }
      // Row t / column t still carry entries: re-pick among the remainders.
      pr = t;
      pc = t;
      find_pivot(w, t, pr, pc);
    }
    chain.divisors.push_back(abs(w.at(t, t)));
  }
  for (; t < n; ++t) chain.divisors.emplace_back(0);
  return chain;
}

HomologyDescriptor mapping_torus_homology(const IntMatrix& m) {
  return HomologyDescriptor::from_cokernel(smith_normal_form(m.minus_identity()), 1);
}

TorsionOrder torsion_order(const IntMatrix& m) {
  const IntMatrix shifted = m.minus_identity();
  Integer d = det(shifted);
  if (d != 0) return {abs(d), false};
  return {smith_normal_form(shifted).nonzero_product(), true};
}

std::size_t fp_rank(const IntMatrix& m, std::uint64_t p) {
  const ModMatrix r = mod_minus_identity(mod_p(m, p));
  return 1 + m.dim() - mod_rank(r);
}

IntMatrix heegaard_block(const IntMatrix& m) {
  if (m.dim() % 2 != 0) throw std::invalid_argument("heegaard_block: dimension must be even");
  const std::size_t g = m.dim() / 2;
  IntMatrix b(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) b(i, j) = m(i, g + j);
  return b;
}

HomologyDescriptor heegaard_homology(const IntMatrix& m, std::size_t genus) {
  if (m.dim() % 2 != 0) throw std::invalid_argument("heegaard_homology: dimension must be even");
  if (m.dim() != 2 * genus)
    throw std::invalid_argument("heegaard_homology: dimension does not match genus");
  return HomologyDescriptor::from_cokernel(smith_normal_form(heegaard_block(m)), 0);
}

double log_integer(const Integer& v) {
  if (v <= 0) throw std::domain_error("log_integer: nonpositive argument");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

double complexity_lower_bound(const HomologyDescriptor& h) {
  if (h.torsion_order <= 1) return 0.0;
  return log_integer(h.torsion_order) / std::log(5.0);
}

}  // namespace rm3
