#include "state4/scalar/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "state4/errors.hpp"

namespace state4 {
namespace {

using Poly = std::vector<mpq_class>;

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// p mod Φ_n, result has exactly φ(n) entries.
Poly reduce_mod(Poly p, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= deg; --i) {
    if (sgn(p[i]) == 0) continue;
    mpq_class c = p[i];
    for (int j = 0; j <= deg; ++j)
      if (phi[j] != 0) p[i - deg + j] -= c * phi[j];
  }
  p.resize(deg);
  return p;
}

Poly to_poly(const std::vector<Rational>& c) {
  Poly p;
  p.reserve(c.size());
  for (const auto& r : c) p.push_back(r.get());
  return p;
}

std::vector<Rational> from_poly(const Poly& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& q : p) out.emplace_back(q);
  return out;
}

// Lift a conductor-n value into conductor-l coordinates (n | l).
Poly lift(const std::vector<Rational>& c, int n, int l) {
  if (n == l) return to_poly(c);
  const int step = l / n;
  Poly p(static_cast<size_t>(step) * (c.size() - 1) + 1);
  for (size_t j = 0; j < c.size(); ++j) p[j * step] = c[j].get();
  return reduce_mod(std::move(p), l);
}

// Solver for "is this conductor-l value in Q(ζ_m)", m | l. Columns are the
// images of ζ_m^j; a set of pivot rows gives an invertible square block.
struct Embedding {
  std::vector<Poly> columns;  // φ(m) columns of length φ(l)
  std::vector<int> pivots;
  std::vector<Poly> block_inverse;  // φ(m) x φ(m)
};

const Embedding& embedding(int m, int l) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Embedding> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({m, l});
  if (it != cache.end()) return it->second;

  Embedding e;
  const int pm = euler_phi(m), pl = euler_phi(l);
  for (int j = 0; j < pm; ++j) {
    Poly p(static_cast<size_t>(j) * (l / m) + 1);
    p.back() = 1;
    e.columns.push_back(reduce_mod(std::move(p), l));
  }
  // Row-reduce the transpose to pick independent rows.
  std::vector<Poly> rows(pl, Poly(pm));
  for (int r = 0; r < pl; ++r)
    for (int c = 0; c < pm; ++c) rows[r][c] = e.columns[c][r];
  std::vector<Poly> basis;  // echelonized picked rows
  std::vector<int> lead;
  for (int r = 0; r < pl && static_cast<int>(e.pivots.size()) < pm; ++r) {
    Poly v = rows[r];
    for (size_t b = 0; b < basis.size(); ++b)
      if (sgn(v[lead[b]]) != 0) {
        mpq_class f = v[lead[b]] / basis[b][lead[b]];
        for (int c = 0; c < pm; ++c) v[c] -= f * basis[b][c];
      }
    int lc = -1;
    for (int c = 0; c < pm; ++c)
      if (sgn(v[c]) != 0) { lc = c; break; }
    if (lc < 0) continue;
    basis.push_back(v);
    lead.push_back(lc);
    e.pivots.push_back(r);
  }
  // Invert the pivot block by Gauss-Jordan.
  std::vector<Poly> a(pm, Poly(2 * pm));
  for (int i = 0; i < pm; ++i) {
    for (int c = 0; c < pm; ++c) a[i][c] = rows[e.pivots[i]][c];
    a[i][pm + i] = 1;
  }
  for (int col = 0; col < pm; ++col) {
    int p = col;
    while (sgn(a[p][col]) == 0) ++p;
    std::swap(a[p], a[col]);
    mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int i = 0; i < pm; ++i)
      if (i != col && sgn(a[i][col]) != 0) {
        mpq_class f = a[i][col];
        for (int c = 0; c < 2 * pm; ++c) a[i][c] -= f * a[col][c];
      }
  }
  e.block_inverse.assign(pm, Poly(pm));
  for (int i = 0; i < pm; ++i)
    for (int c = 0; c < pm; ++c) e.block_inverse[i][c] = a[i][pm + c];
  return cache.emplace(std::pair{m, l}, std::move(e)).first->second;
}

std::optional<Poly> descend(const Poly& v, int m, int l) {
  const Embedding& e = embedding(m, l);
  const int pm = static_cast<int>(e.pivots.size());
  Poly x(pm);
  for (int i = 0; i < pm; ++i)
    for (int c = 0; c < pm; ++c) x[i] += e.block_inverse[i][c] * v[e.pivots[c]];
  for (size_t r = 0; r < v.size(); ++r) {
    mpq_class s = 0;
    for (int c = 0; c < pm; ++c)
      if (sgn(x[c]) != 0) s += x[c] * e.columns[c][r];
    if (s != v[r]) return std::nullopt;
  }
  return x;
}

// Extended Euclid over Q[x]; returns s with s·a ≡ 1 mod m.
Poly trim(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    if (sgn(a[i]) == 0) continue;
    mpq_class c = a[i] / b.back();
    int shift = i - static_cast<int>(b.size()) + 1;
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  return {trim(std::move(q)), trim(std::move(a))};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

Poly inverse_mod(const Poly& a, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  Poly m(phi.begin(), phi.end());
  Poly r0 = m, r1 = trim(a), s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Φ_n is irreducible.
  mpq_class c = 1 / r0[0];
  for (auto& x : s0) x *= c;
  return reduce_mod(std::move(s0), n);
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Φ_d for every proper divisor d.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d : divisors(n)) {
    if (d == n) continue;
    const auto& q = cyclotomic_polynomial(d);
    const int dq = static_cast<int>(q.size()) - 1;
    std::vector<long> quot(p.size() - dq, 0);
    for (int i = static_cast<int>(p.size()) - 1; i >= dq; --i) {
      long c = p[i];
      if (c == 0) continue;
      quot[i - dq] = c;
      for (int j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
    }
    p = std::move(quot);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int n, std::vector<Rational> coeffs, bool canonical)
    : conductor_(n), coeffs_(std::move(coeffs)) {
  if (!canonical) canonicalize();
}

Cyclotomic Cyclotomic::zeta(int n, long k) {
  if (n <= 0) throw std::invalid_argument("zeta: conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = Rational(1);
  return from_coeffs(n, std::move(c));
}

Cyclotomic Cyclotomic::from_coeffs(int n, std::vector<Rational> coeffs) {
  if (n <= 0) throw std::invalid_argument("cyclotomic conductor must be positive");
  if (coeffs.empty()) return Cyclotomic();
  return Cyclotomic(n, from_poly(reduce_mod(to_poly(coeffs), n)), false);
}

void Cyclotomic::canonicalize() {
  bool rational = true;
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (!coeffs_[j].is_zero()) { rational = false; break; }
  if (rational) {
    Rational c = coeffs_.empty() ? Rational(0) : coeffs_[0];
    conductor_ = 1;
    coeffs_ = {c};
    return;
  }
  Poly v = to_poly(coeffs_);
  for (int m : divisors(conductor_)) {
    if (m == conductor_) break;
    if (m == 1 || m % 4 == 2) continue;
    if (auto x = descend(v, m, conductor_)) {
      conductor_ = m;
      coeffs_ = from_poly(*x);
      return;
    }
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int l = std::lcm(conductor_, o.conductor_);
  Poly a = lift(coeffs_, conductor_, l), b = lift(o.coeffs_, o.conductor_, l);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = Cyclotomic(l, from_poly(a), false);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (is_zero() || o.is_zero()) return *this = Cyclotomic();
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const int l = std::lcm(conductor_, o.conductor_);
  Poly p = mul(lift(coeffs_, conductor_, l), lift(o.coeffs_, o.conductor_, l));
  *this = Cyclotomic(l, from_poly(reduce_mod(std::move(p), l)), false);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  return Cyclotomic(conductor_, from_poly(inverse_mod(to_poly(coeffs_), conductor_)), false);
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Cyclotomic r(1);
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r;
  for (size_t j = 0; j < coeffs_.size(); ++j)
    if (!coeffs_[j].is_zero())
      r += Cyclotomic(coeffs_[j]) * zeta(conductor_, -static_cast<long>(j));
  return r;
}

std::optional<std::pair<Rational, long>> Cyclotomic::as_monomial(int order) const {
  if (order % conductor_ != 0) return std::nullopt;
  if (is_zero()) return std::nullopt;
  if (conductor_ == 1) return std::pair{coeffs_[0], 0L};
  const int step = order / conductor_;
  for (long k = 0; k < conductor_; ++k) {
    Cyclotomic t = *this * zeta(conductor_, -k);
    if (t.is_rational()) return std::pair{t.coeffs_[0], k * step};
  }
  return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    double a = 2 * std::numbers::pi * static_cast<double>(j) / conductor_;
    z += coeffs_[j].to_double() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    std::string term;
    if (j == 0) {
      term = mag.to_string();
    } else {
      std::string z = "z" + std::to_string(conductor_);
      if (j > 1) z += "^" + std::to_string(j);
      term = mag.is_one() ? z : mag.to_string() + "*" + z;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in scalar '" + std::string(s) + "'", "offset " + std::to_string(pos));
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  bool peek_digit() {
    skip();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string digits() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(s.substr(start, pos - start));
  }
  long integer() {
    bool neg = eat('-');
    long v = std::stol(digits());
    return neg ? -v : v;
  }
  Rational rational() {
    mpz_class num(digits());
    if (eat('/')) {
      mpz_class den(digits());
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(mpq_class(num));
  }
  // root := "z" N ["^" k] | "zeta(" N "," k ")"
  bool at_root() {
    skip();
    return pos < s.size() && s[pos] == 'z';
  }
  Cyclotomic root() {
    skip();
    if (s.substr(pos, 5) == "zeta(") {
      pos += 5;
      long n = integer();
      if (!eat(',')) fail("expected ','");
      long k = integer();
      if (!eat(')')) fail("expected ')'");
      if (n <= 0) fail("nonpositive conductor");
      return Cyclotomic::zeta(static_cast<int>(n), k);
    }
    ++pos;  // 'z'
    long n = std::stol(digits());
    long k = 1;
    if (eat('^')) k = integer();
    if (n <= 0) fail("nonpositive conductor");
    return Cyclotomic::zeta(static_cast<int>(n), k);
  }
  Cyclotomic term() {
    if (at_root()) return root();
    if (!peek_digit()) fail("expected a number or root of unity");
    Cyclotomic c(rational());
    if (eat('*')) {
      if (!at_root()) fail("expected root of unity after '*'");
      c *= root();
    }
    return c;
  }
  Cyclotomic expr() {
    Cyclotomic total;
    bool neg = eat('-');
    if (!neg) eat('+');
    for (;;) {
      Cyclotomic t = term();
      total += neg ? -t : t;
      skip();
      if (pos == s.size()) break;
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else fail("unexpected character");
    }
    return total;
  }
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) {
  Parser p{text};
  p.skip();
  if (p.pos == text.size()) p.fail("empty scalar");
  return p.expr();
}

}  // namespace state4
