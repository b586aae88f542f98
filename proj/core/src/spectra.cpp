#include "subshift/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {

namespace mp = boost::multiprecision;

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (auto x : coefficients) {
    c_.emplace_back(x);
  }
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) {
    c_.pop_back();
  }
}

BigInt IntPolynomial::operator()(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

Rational IntPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * t + Rational(*it);
  }
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coefficient(i) + b.coefficient(i);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coefficient(i) - b.coefficient(i);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.zero() || b.zero()) {
    return IntPolynomial();
  }
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    BigInt const& a = c_[k];
    if (a == 0) {
      continue;
    }
    BigInt mag = abs(a);
    if (first) {
      os << (a < 0 ? "-" : "");
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) {
      os << mag;
    }
    if (k >= 1) {
      os << var;
    }
    if (k >= 2) {
      os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

double PerronEstimate::midpoint() const { return to_double((lower + upper) / 2); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

IntMatrix family_matrix(std::size_t n) {
  if (n == 0) {
    throw InvalidArgument("family_matrix needs n >= 1");
  }
  IntMatrix a = IntMatrix{{0, 1}, {1, 0}};
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t const m = 2 * k;
    IntMatrix b(m + 2, m + 2);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        b(r, c) = a(r, c);
      }
    }
    b(m - 1, m + 1) = 1;
    b(m, m - 2) = 1;
    b(m + 1, m) = 1;
    a = std::move(b);
  }
  return a;
}

IntPolynomial char_poly_family(std::size_t n) {
  if (n == 0) {
    throw InvalidArgument("char_poly_family needs n >= 1");
  }
  IntPolynomial p{-1, 0, 1};
  IntPolynomial const t2 = IntPolynomial::monomial(2);
  IntPolynomial const one{1};
  for (std::size_t k = 1; k < n; ++k) {
    p = t2 * p - one;
  }
  return p;
}

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.square()) {
    throw InvalidArgument("characteristic polynomial of a non-square matrix");
  }
  std::size_t const n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) {
      next(i, i) += c[n - k + 1];
    }
    m = std::move(next);
    IntMatrix am = a * m;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += am(i, i);
    }
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial q_family(std::size_t n) {
  return IntPolynomial::monomial(2 * n + 2) - IntPolynomial::monomial(2 * n, 2) + IntPolynomial{1};
}

Rational default_tolerance() { return Rational(1, 1000000000); }

Rational sqrt_below(const Rational& x, unsigned bits) {
  if (x < 0) {
    throw InvalidArgument("square root of a negative number");
  }
  BigInt const scale = BigInt(1) << (2 * bits);
  BigInt const floor_scaled = mp::numerator(x) * scale / mp::denominator(x);
  return Rational(mp::sqrt(floor_scaled), BigInt(1) << bits);
}

Rational sqrt_above(const Rational& x, unsigned bits) {
  if (x < 0) {
    throw InvalidArgument("square root of a negative number");
  }
  BigInt const scale = BigInt(1) << (2 * bits);
  BigInt num = mp::numerator(x) * scale;
  BigInt const den = mp::denominator(x);
  BigInt ceil_scaled = num / den + (num % den != 0 ? 1 : 0);
  BigInt r = mp::sqrt(ceil_scaled);
  if (r * r < ceil_scaled) {
    ++r;
  }
  return Rational(r, BigInt(1) << bits);
}

namespace {

// Sign of q(t), from the integer b^deg q(a / b) with t = a / b, b > 0.
int sign_at(const IntPolynomial& q, const Rational& t) {
  auto const& c = q.coefficients();
  if (c.empty()) {
    return 0;
  }
  BigInt const a = mp::numerator(t);
  BigInt const b = mp::denominator(t);
  BigInt acc = c.back();
  BigInt bpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + c[i] * bpow;
  }
  return acc.sign();
}

}  // namespace

PerronEstimate perron_family(std::size_t n, const Rational& tol) {
  if (n == 0) {
    throw InvalidArgument("perron_family needs n >= 1");
  }
  if (tol <= 0) {
    throw InvalidArgument("tolerance must be positive");
  }
  PerronEstimate e;
  e.level = n;
  if (n == 1) {
    // q_1 = (t^2 - 1)^2: the largest root is exactly 1.
    e.lower = 1;
    e.upper = 1;
    return e;
  }
  IntPolynomial const q = q_family(n);
  Rational const t2(static_cast<long long>(2 * n), static_cast<long long>(n + 1));
  unsigned bits = 32;
  Rational lo = sqrt_above(t2, bits);
  while (sign_at(q, lo) > 0) {
    bits *= 2;
    lo = sqrt_above(t2, bits);
  }
  bits = 32;
  Rational hi = sqrt_below(Rational(2), bits);
  while (sign_at(q, hi) <= 0) {
    bits *= 2;
    hi = sqrt_below(Rational(2), bits);
  }
  // Invariant: q(lo) <= 0 < q(hi), t_n^2 <= lo^2, hi^2 < 2.
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (sign_at(q, mid) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  e.lower = lo;
  e.upper = hi;
  return e;
}

namespace {

bool irreducible_pattern(const IntMatrix& m) {
  std::vector<std::vector<std::size_t>> adj(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        adj[i].push_back(j);
      }
    }
  }
  return m.rows() == 1 || strongly_connected(adj);
}

unsigned bits_for(const Rational& tol) {
  BigInt q = mp::denominator(tol) / mp::numerator(tol);
  unsigned b = 0;
  while (q > 0) {
    q >>= 1;
    ++b;
  }
  return b;
}

}  // namespace

PerronEstimate perron_power(const IntMatrix& m, const Rational& tol, std::size_t max_iterations) {
  if (!m.square() || m.rows() == 0) {
    throw InvalidArgument("perron_power needs a non-empty square matrix");
  }
  if (!m.nonnegative()) {
    throw InvalidArgument("perron_power needs a nonnegative matrix");
  }
  if (!irreducible_pattern(m)) {
    throw InvalidArgument("perron_power needs an irreducible matrix");
  }
  if (tol <= 0) {
    throw InvalidArgument("tolerance must be positive");
  }
  std::size_t const n = m.rows();
  // M + I is primitive with the same Perron vector.
  IntMatrix b = m + IntMatrix::identity(n);
  unsigned const precision = 64 + bits_for(tol);
  BigInt const scale = BigInt(1) << precision;
  std::vector<BigInt> v(n, BigInt(1));
  PerronEstimate e;
  e.converged = false;
  bool have = false;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    std::vector<BigInt> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) != 0) {
          w[i] += b(i, j) * v[j];
        }
      }
    }
    Rational lo(w[0], v[0]);
    Rational hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      Rational r(w[i], v[i]);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    lo -= 1;
    hi -= 1;
    if (!have || lo > e.lower) {
      e.lower = lo;
    }
    if (!have || hi < e.upper) {
      e.upper = hi;
    }
    have = true;
    if (e.upper - e.lower <= tol) {
      e.converged = true;
      break;
    }
    BigInt top = *std::max_element(w.begin(), w.end());
    for (std::size_t i = 0; i < n; ++i) {
      BigInt num = w[i] * scale;
      v[i] = num / top + (num % top != 0 ? 1 : 0);
    }
  }
  return e;
}

namespace {

std::vector<BigInt> count_words(const LabeledGraph& g, std::size_t n_max) {
  std::vector<BigInt> counts{BigInt(1)};
  if (g.vertex_count() == 0) {
    counts.resize(n_max + 1);
    return counts;
  }
  // Words correspond to paths from the full set in the subset automaton.
  std::map<VertexSet, BigInt> layer{{VertexSet::full(g.vertex_count()), BigInt(1)}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::map<VertexSet, BigInt> next;
    BigInt total = 0;
    for (auto const& [set, count] : layer) {
      for (Symbol s = 0; s < g.alphabet().size(); ++s) {
        VertexSet t = g.step(set, s);
        if (!t.empty()) {
          next[t] += count;
          total += count;
        }
      }
    }
    counts.push_back(total);
    layer = std::move(next);
  }
  return counts;
}

}  // namespace

EntropyReport entropy_report(const ShiftPresentation& p, std::size_t n_max) {
  if (n_max == 0) {
    throw InvalidArgument("entropy_report needs n_max >= 1");
  }
  GraphAccess access = graph_for(p, n_max);
  auto counts = count_words(access.graph, n_max);
  EntropyReport r;
  r.complete = access.complete;
  for (std::size_t n = 1; n <= n_max; ++n) {
    EntropyRow row;
    row.n = n;
    row.count = counts[n];
    row.normalized = row.count > 0 ? std::log(row.count.convert_to<double>()) / static_cast<double>(n) : 0.0;
    r.rows.push_back(std::move(row));
  }
  r.note = "finite-n values (1/n) log |L_n|; no limit is asserted";
  return r;
}

}  // namespace subshift
