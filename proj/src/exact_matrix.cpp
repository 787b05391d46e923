#include "rm3/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace rm3 {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()), entries_() {
  entries_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw std::invalid_argument("IntMatrix: rows must form a square");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix n(*this);
  for (auto& e : n.entries_) e = -e;
  return n;
}

IntMatrix IntMatrix::minus_identity() const {
  IntMatrix m(*this);
  for (std::size_t i = 0; i < dim_; ++i) m(i, i) -= 1;
  return m;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

void require_same_dim(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                ")");
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b, "operator+");
  IntMatrix c(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b, "operator-");
  IntMatrix c(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) -= b(i, j);
  return c;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  IntMatrix c(n);
  // Generators are sparse with +-1 entries; skip zeros and avoid multiplies for units.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& bkj = b(k, j);
      const int s = sgn(bkj);
      if (s == 0) continue;
      if (bkj == 1) {
        for (std::size_t i = 0; i < n; ++i) c(i, j) += a(i, k);
      } else if (bkj == -1) {
        for (std::size_t i = 0; i < n; ++i) c(i, j) -= a(i, k);
      } else {
        for (std::size_t i = 0; i < n; ++i) mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), bkj.get_mpz_t());
      }
    }
  }
  return c;
}

Integer det(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  IntMatrix w(m);
  Integer prev = 1;
  int sign = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && w(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // w(i,j) = (w(i,j) * w(k,k) - w(i,k) * w(k,j)) / prev, exact by Sylvester's identity
        t = w(i, j) * w(k, k);
        mpz_submul(t.get_mpz_t(), w(i, k).get_mpz_t(), w(k, j).get_mpz_t());
        mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  Integer d = w(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

std::size_t rational_rank(const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix w(m);
  Integer prev = 1;
  Integer t;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && w(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(w(rank, j), w(piv, j));
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        t = w(i, j) * w(rank, col);
        mpz_submul(t.get_mpz_t(), w(i, col).get_mpz_t(), w(rank, j).get_mpz_t());
        mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w(i, col) = 0;
    }
    prev = w(rank, col);
    ++rank;
  }
  return rank;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.dim();
  const Integer d = det(m);
  if (d != 1 && d != -1) throw std::domain_error("unimodular_inverse: determinant is not +-1");
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  std::vector<mpq_class> a(n * 2 * n);
  const std::size_t w = 2 * n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * w + j] = m(i, j);
    a[i * w + n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv * w + col] == 0) ++piv;
    if (piv != col)
      for (std::size_t j = 0; j < w; ++j) std::swap(a[piv * w + j], a[col * w + j]);
    const mpq_class inv = 1 / a[col * w + col];
    for (std::size_t j = 0; j < w; ++j) a[col * w + j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i * w + col] == 0) continue;
      const mpq_class f = a[i * w + col];
      for (std::size_t j = 0; j < w; ++j) a[i * w + j] -= f * a[col * w + j];
    }
  }
  IntMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = a[i * w + n + j];
      if (q.get_den() != 1) throw std::logic_error("unimodular_inverse: non-integral inverse");
      inv(i, j) = q.get_num();
    }
  return inv;
}

IntMatrix SymplecticForm::matrix() const {
  IntMatrix j(2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(i, genus + i) = 1;
    j(genus + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m, const SymplecticForm& form) {
  if (m.dim() != 2 * form.genus)
    throw std::invalid_argument("is_symplectic: matrix dimension must be 2g");
  const IntMatrix j = form.matrix();
  return mat_mul(mat_mul(m.transpose(), j), m) == j;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.dim() == 0 || m.dim() % 2 != 0) return false;
  return is_symplectic(m, SymplecticForm{m.dim() / 2});
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= p / d; d += 6)
    if (p % d == 0 || p % (d + 2) == 0) return false;
  return true;
}

ModMatrix::ModMatrix(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p), entries_(dim * dim) {}

ModMatrix ModMatrix::identity(std::size_t dim, std::uint64_t p) {
  ModMatrix m(dim, p);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1 % p;
  return m;
}

ModMatrix mod_p(const IntMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("mod_p: " + std::to_string(p) + " is not prime");
  ModMatrix r(m.dim(), p);
  mpz_class mod;
  mpz_import(mod.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_class res;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      mpz_fdiv_r(res.get_mpz_t(), m(i, j).get_mpz_t(), mod.get_mpz_t());
      std::uint64_t v = 0;
      mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, res.get_mpz_t());
      r(i, j) = v;
    }
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus())
    throw std::invalid_argument("mod_mul: dimension or modulus mismatch");
  const std::size_t n = a.dim();
  const std::uint64_t p = a.modulus();
  ModMatrix c(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += static_cast<unsigned __int128>(a(i, k)) * b(k, j);
        acc %= p;
      }
      c(i, j) = static_cast<std::uint64_t>(acc);
    }
  return c;
}

ModMatrix mod_minus_identity(const ModMatrix& m) {
  ModMatrix r(m);
  const std::uint64_t p = m.modulus();
  for (std::size_t i = 0; i < m.dim(); ++i) r(i, i) = r(i, i) == 0 ? p - 1 : r(i, i) - 1;
  return r;
}

std::size_t mod_rank(ModMatrix m) {
  const std::size_t n = m.dim();
  const std::uint64_t p = m.modulus();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(m(rank, j), m(piv, j));
    const std::uint64_t inv = inv_mod(m(rank, col), p);
    for (std::size_t j = col; j < n; ++j) m(rank, j) = mul_mod(m(rank, j), inv, p);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const std::uint64_t f = m(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j)
      {
        const std::uint64_t sub = mul_mod(f, m(rank, j), p);
        m(i, j) = m(i, j) >= sub ? m(i, j) - sub : m(i, j) + (p - sub);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace rm3
