#include "rm3/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace rm3 {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k)
    mpz_divexact(out[k].get_mpz_t(), c_[k].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Integer& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const IntMatrix& m) {
  // Berkowitz: build the Toeplitz vectors of the leading principal submatrices.
  const std::size_t n = m.dim();
  // poly holds the coefficients of the characteristic polynomial of the
  // leading r x r submatrix, highest degree first.
  std::vector<Integer> poly{Integer(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Submatrix A_r (r x r), column C = m(0..r-1, r), row R = m(r, 0..r-1), a = m(r, r).
    // Toeplitz column: t_0 = 1, t_1 = -a, t_{k+2} = -R A^k C.
    std::vector<Integer> t(r + 2);
    t[0] = 1;
    t[1] = -m(r, r);
    std::vector<Integer> v(r);  // A^k C
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i)
        mpz_addmul(dot.get_mpz_t(), m(r, i).get_mpz_t(), v[i].get_mpz_t());
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<Integer> nv(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            mpz_addmul(nv[i].get_mpz_t(), m(i, j).get_mpz_t(), v[j].get_mpz_t());
        v = std::move(nv);
      }
    }
    // new_poly = T * poly, with T the (r+2) x (r+1) lower-triangular Toeplitz matrix.
    std::vector<Integer> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        mpz_addmul(next[i].get_mpz_t(), t[i - j].get_mpz_t(), poly[j].get_mpz_t());
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

bool has_eigenvalue_one(const IntMatrix& m) { return det(m.minus_identity()) == 0; }

Integer alexander_second_derivative(const IntPolynomial& f) {
  Integer s = 0;
  const auto& c = f.coefficients();
  for (std::size_t k = 2; k < c.size(); ++k)
    s += c[k] * static_cast<unsigned long>(k * (k - 1));
  return s;
}

bool divide_exact(const IntPolynomial& num, const IntPolynomial& den, IntPolynomial& quotient) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
  std::vector<Integer> r = num.coefficients();
  const long dn = den.degree();
  if (num.degree() < dn) {
    quotient = {};
    return num.is_zero();
  }
  std::vector<Integer> q(static_cast<std::size_t>(num.degree() - dn + 1));
  for (long k = num.degree(); k >= dn; --k) {
    const Integer& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.leading().get_mpz_t())) return false;
    Integer coef;
    mpz_divexact(coef.get_mpz_t(), top.get_mpz_t(), den.leading().get_mpz_t());
    q[static_cast<std::size_t>(k - dn)] = coef;
    for (long j = 0; j <= dn; ++j)
      mpz_submul(r[static_cast<std::size_t>(k - dn + j)].get_mpz_t(), coef.get_mpz_t(),
                 den[static_cast<std::size_t>(j)].get_mpz_t());
  }
  for (const auto& x : r)
    if (x != 0) return false;
  quotient = IntPolynomial(std::move(q));
  return true;
}

namespace {

// ---- F_p polynomial arithmetic (small p, constant term first) ----

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const IntPolynomial& f, std::uint64_t p) {
  ModPoly r(f.coefficients().size());
  Integer t;
  const Integer mod(static_cast<unsigned long>(p));
  for (std::size_t k = 0; k < r.size(); ++k) {
    mpz_fdiv_r(t.get_mpz_t(), f[k].get_mpz_t(), mod.get_mpz_t());
    r[k] = t.get_ui();
  }
  trim(r);
  return r;
}

ModPoly poly_mod(ModPoly a, const ModPoly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t coef = mul_mod(a.back(), inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint64_t s = mul_mod(coef, m[j], p);
      a[shift + j] = (a[shift + j] + p - s) % p;
    }
    trim(a);
  }
  return a;
}

ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p)) % p;
  trim(c);
  return poly_mod(std::move(c), m, p);
}

ModPoly poly_powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p) {
  ModPoly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

ModPoly poly_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---- integer polynomial gcd over Q (primitive PRS) ----

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coefficients();
  const long db = b.degree();
  const Integer& lb = b.leading();
  long dr = a.degree();
  while (dr >= db && dr >= 0) {
    const Integer top = r[static_cast<std::size_t>(dr)];
    for (auto& x : r) x *= lb;
    for (long j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), top.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    IntPolynomial tmp(r);
    r = tmp.coefficients();
    dr = tmp.degree();
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial rational_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

// ---- numeric root candidates ----

std::vector<std::complex<long double>> numeric_roots(const IntPolynomial& f) {
  using C = std::complex<long double>;
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<C> coef(n + 1);
  const double lead = f.leading().get_d();
  for (std::size_t k = 0; k <= n; ++k)
    coef[k] = static_cast<long double>(f[k].get_d()) / static_cast<long double>(lead);
  auto eval = [&](C x) {
    C acc = 0;
    for (std::size_t k = n + 1; k-- > 0;) acc = acc * x + coef[k];
    return acc;
  };
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(coef[k]));
  radius += 1;
  std::vector<C> z(n);
  const C seed(0.4L, 0.9L);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(seed, static_cast<long double>(k)) * radius;
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (std::abs(denom) == 0) denom = C(1e-30L, 0);
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

bool round_to_integer(long double v, Integer& out) {
  if (!std::isfinite(v) || std::fabs(v) > 0x1.0p62L) return false;
  out = static_cast<long>(std::llround(v));
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t c = 2; ps.size() < count; ++c)
    if (is_prime(c)) ps.push_back(c);
  return ps;
}

}  // namespace

bool is_irreducible_mod_p(const IntPolynomial& f, std::uint64_t p) {
  const ModPoly fp = reduce(f, p);
  if (static_cast<long>(fp.size()) - 1 != f.degree()) return false;
  const std::size_t n = fp.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  // Ben-Or: f is irreducible iff gcd(f, x^{p^i} - x) = 1 for i = 1..n/2.
  const ModPoly x{0, 1};
  ModPoly xp = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    xp = poly_powmod(xp, p, fp, p);
    ModPoly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    const ModPoly g = poly_gcd(fp, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

IrreducibilityCertificate irreducibility_certificate(const IntPolynomial& f,
                                                     std::size_t prime_budget) {
  if (f.is_zero()) throw std::invalid_argument("irreducibility_certificate: zero polynomial");
  if (f.degree() < 1)
    throw std::invalid_argument("irreducibility_certificate: constant polynomial");
  const IntPolynomial g = f.primitive_part();
  const auto primes = first_primes(std::max<std::size_t>(prime_budget, 1));

  for (std::size_t i = 0; i < prime_budget; ++i) {
    const std::uint64_t p = primes[i];
    if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) continue;
    if (is_irreducible_mod_p(g, p)) return Irreducible{p};
  }

  // Repeated factors.
  const IntPolynomial common = rational_gcd(g, g.derivative());
  if (common.degree() >= 1) return Reducible{common, "repeated factor"};

  // Rational roots a/b: b divides the leading coefficient, so lead * root is an integer.
  const auto roots = numeric_roots(g);
  for (const auto& z : roots) {
    if (std::fabs(z.imag()) > 1e-6L * (1 + std::fabs(z.real()))) continue;
    Integer numer;
    if (!round_to_integer(z.real() * static_cast<long double>(g.leading().get_d()), numer)) continue;
    for (int delta = -1; delta <= 1; ++delta) {
      const Integer a = numer + delta;
      const Integer& b = g.leading();
      // b^deg f(a/b) = sum c_k a^k b^(deg-k)
      Integer acc = 0, bpow = 1;
      for (long k = g.degree(); k >= 0; --k) {
        Integer term = g[static_cast<std::size_t>(k)] * bpow;
        Integer apow;
        mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
        acc += term * apow;
        bpow *= b;
      }
      if (acc == 0) {
        IntPolynomial lin(std::vector<Integer>{-a, b});
        lin = lin.primitive_part();
        if (g.degree() == 1) return Irreducible{primes.front()};
        return Reducible{lin, "rational root"};
      }
    }
  }

  // Quadratic factors for degree 4 from conjugate or real root pairs.
  if (g.degree() == 4) {
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        const auto s = roots[i] + roots[j];
        const auto pr = roots[i] * roots[j];
        if (std::fabs(s.imag()) > 1e-6L || std::fabs(pr.imag()) > 1e-6L * (1 + std::abs(pr)))
          continue;
        for (const Integer& lead : {Integer(1), g.leading()}) {
          const long double l = static_cast<long double>(lead.get_d());
          Integer c1, c0;
          if (!round_to_integer(-s.real() * l, c1) || !round_to_integer(pr.real() * l, c0))
            continue;
          IntPolynomial quad(std::vector<Integer>{c0, c1, lead});
          IntPolynomial q;
          if (divide_exact(g, quad, q) && q.degree() >= 1)
            return Reducible{quad.primitive_part(), "quadratic factor"};
        }
      }
  }
  return Undetermined{};
}

}  // namespace rm3
