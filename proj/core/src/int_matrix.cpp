#include "subshift/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (auto const& r : rows) {
    if (r.size() != cols_) {
      throw InvalidArgument("ragged matrix literal");
    }
    for (auto x : r) {
      data_.emplace_back(x);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw InvalidArgument("ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

BigInt& IntMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) {
    throw InvalidArgument("matrix index out of range");
  }
  return (*this)(r, c);
}

const BigInt& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw InvalidArgument("matrix index out of range");
  }
  return (*this)(r, c);
}

std::vector<std::vector<BigInt>> IntMatrix::to_rows() const {
  std::vector<std::vector<BigInt>> out(rows_, std::vector<BigInt>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out[r][c] = (*this)(r, c);
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

bool IntMatrix::nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x >= 0; });
}

std::size_t IntMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const BigInt& x) { return x != 0; }));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw InvalidArgument("matrix product dimension mismatch");
  }
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        p(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw InvalidArgument("matrix sum dimension mismatch");
  }
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) {
    s.data_[i] += b.data_[i];
  }
  return s;
}

std::string IntMatrix::to_string() const {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (auto const& x : data_) {
    cells.push_back(x.str());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      auto const& s = cells[r * cols_ + c];
      os << (c == 0 ? "" : " ") << std::string(width - s.size(), ' ') << s;
    }
    if (r + 1 < rows_) {
      os << '\n';
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

namespace {

// Fraction-free elimination to row echelon form; returns the rank. For a
// nonsingular square matrix the last pivot is the determinant up to `sign`.
std::size_t bareiss(IntMatrix& m, int& sign) {
  std::size_t const rows = m.rows();
  std::size_t const cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(m(p, j), m(r, j));
      }
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix work = m;
  int sign = 1;
  return bareiss(work, sign);
}

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) {
    throw InvalidArgument("determinant of a non-square matrix");
  }
  if (m.rows() == 0) {
    return 1;
  }
  IntMatrix work = m;
  int sign = 1;
  if (bareiss(work, sign) < m.rows()) {
    return 0;
  }
  BigInt d = work(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? BigInt(-d) : d;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    d.push_back(D(i, i));
  }
  return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::swap(m(a, j), m(b, j));
  }
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::swap(m(i, a), m(i, b));
  }
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    m(dst, j) += q * m(src, j);
  }
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    m(i, dst) += q * m(i, src);
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  std::size_t const rows = m.rows();
  std::size_t const cols = m.cols();
  SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = f.D;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        return f;
      }
      if (pr != t) {
        swap_rows(d, pr, t);
        swap_rows(f.S, pr, t);
      }
      if (pc != t) {
        swap_cols(d, pc, t);
        swap_cols(f.T, pc, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) != 0) {
          BigInt q = d(i, t) / d(t, t);
          add_row(d, i, t, -q);
          add_row(f.S, i, t, -q);
          clean = clean && d(i, t) == 0;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) != 0) {
          BigInt q = d(t, j) / d(t, t);
          add_col(d, j, t, -q);
          add_col(f.T, j, t, -q);
          clean = clean && d(t, j) == 0;
        }
      }
      if (!clean) {
        continue;
      }
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) {
        break;
      }
      add_row(d, t, bad, 1);
      add_row(f.S, t, bad, 1);
    }
    if (d(t, t) < 0) {
      add_row(d, t, t, -2);
      add_row(f.S, t, t, -2);
    }
  }
  return f;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) {
        continue;
      }
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
      }
    }
  }
  return k;
}

IntMatrix permute_similar(const IntMatrix& m, const std::vector<std::size_t>& perm) {
  if (!m.square() || perm.size() != m.rows()) {
    throw InvalidArgument("permutation size mismatch");
  }
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      out(i, j) = m(perm[i], perm[j]);
    }
  }
  return out;
}

}  // namespace subshift
