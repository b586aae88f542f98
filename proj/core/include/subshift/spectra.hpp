#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "subshift/int_matrix.hpp"
#include "subshift/presentation.hpp"

namespace subshift {

using Rational = boost::multiprecision::cpp_rational;

// Integer polynomial, coefficients in ascending degree, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);
  static IntPolynomial monomial(std::size_t degree, BigInt c = 1);

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigInt operator()(const BigInt& t) const;
  Rational operator()(const Rational& t) const;

  bool operator==(const IntPolynomial&) const = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct PerronEstimate {
  std::size_t level = 0;
  Rational lower;
  Rational upper;
  bool converged = true;
  Rational width() const { return upper - lower; }
  double midpoint() const;
};

// 2n x 2n adjacency matrix of G_n from the block recursion; vertex order
// v1, w1, v2, w2, ..., entry (i, j) counts edges from vertex j to vertex i.
IntMatrix family_matrix(std::size_t n);

// p_1 = t^2 - 1, p_{n+1} = t^2 p_n - 1.
IntPolynomial char_poly_family(std::size_t n);

// det(tI - M) by Faddeev-LeVerrier; the divisions are exact.
IntPolynomial char_poly(const IntMatrix& m);

// q_n(t) = (t^2 - 1) p_n(t) = t^{2n+2} - 2 t^{2n} + 1.
IntPolynomial q_family(std::size_t n);

// Default tolerance 1e-9.
Rational default_tolerance();

// Certified bracket for the largest real root of q_n by bisection.
PerronEstimate perron_family(std::size_t n, const Rational& tol = default_tolerance());

// Collatz-Wielandt bracket for the Perron eigenvalue of an irreducible
// nonnegative square matrix.
PerronEstimate perron_power(const IntMatrix& m, const Rational& tol = default_tolerance(),
                            std::size_t max_iterations = 100000);

// Rational r with r^2 <= x (below) or r^2 >= x (above), within 2^-bits.
Rational sqrt_below(const Rational& x, unsigned bits = 64);
Rational sqrt_above(const Rational& x, unsigned bits = 64);

struct EntropyRow {
  std::size_t n = 0;
  BigInt count;
  double normalized = 0.0;  // log(count) / n
};

struct EntropyReport {
  std::vector<EntropyRow> rows;
  bool complete = true;
  std::string note;
};

EntropyReport entropy_report(const ShiftPresentation& p, std::size_t n_max);

double to_double(const Rational& r);

}  // namespace subshift
