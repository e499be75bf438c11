#include "natfull/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace natfull {

namespace {
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}
}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p > 97 || !is_prime_u32(p)) {
    throw Error("PrimeField: modulus must be a prime in [2, 97], got " + std::to_string(p));
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw Error("PrimeField::inv of zero");
  return pow(a, p_ - 2);
}

Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const PrimeField& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const PrimeField& f, std::uint32_t c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

bool is_zero_vec(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

Mat Mat::identity(PrimeField f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(PrimeField f, const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_columns(PrimeField f, const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Mat Mat::kronecker(const Mat& a, const Mat& b) {
  const PrimeField& f = a.field();
  Mat r(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::uint32_t aij = a.at(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = f.mul(aij, b.at(k, l));
    }
  return r;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Mat::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error("Mat::set_row size mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

void Mat::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error("Mat::set_column size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error("Mat multiply: dimension mismatch");
  const std::uint64_t p = field_.modulus();
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t aik = at(i, k);
      if (aik == 0) continue;
      const std::uint32_t* orow = o.data_.data() + k * o.cols_;
      std::uint32_t* rrow = r.data_.data() + i * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        rrow[j] = static_cast<std::uint32_t>((rrow[j] + aik * orow[j]) % p);
      }
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Mat add: shape mismatch");
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Mat sub: shape mismatch");
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error("Mat::apply: size mismatch");
  const std::uint64_t p = field_.modulus();
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* rowp = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(rowp[j]) * v[j];
    r[i] = static_cast<std::uint32_t>(acc % p);
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::scaled(std::uint32_t c) const {
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(c, data_[i]);
  return r;
}

bool Mat::is_zero() const {
  return is_zero_vec(data_);
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
    os << "]" << (i + 1 < rows_ ? "\n" : "]");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

RrefResult rref(const Mat& m) {
  const PrimeField& f = m.field();
  for (std::uint32_t x : m.data()) {
    if (x >= f.modulus()) {
      throw Error("rref: entry not reduced mod p (field mix-up?)");
    }
  }
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == a.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    }
    std::uint32_t piv = f.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(piv, a.at(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      std::uint32_t v = a.at(i, c);
      if (v == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(v, a.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), std::move(pivots), r};
}

std::size_t rank(const Mat& m) {
  return rref(m).rank;
}

Subspace Subspace::from_span(const PrimeField& f, std::size_t ambient, const std::vector<Vec>& span) {
  Subspace s;
  s.ambient_dim = ambient;
  if (span.empty()) return s;
  RrefResult rr = rref(Mat::from_rows(f, span, ambient));
  for (std::size_t i = 0; i < rr.rank; ++i) s.basis.push_back(rr.rref.row(i));
  return s;
}

bool Subspace::contains(const PrimeField& f, const Vec& v) const {
  return coordinates(f, v).has_value();
}

std::optional<Vec> Subspace::coordinates(const PrimeField& f, const Vec& v) const {
  if (is_zero_vec(v)) return Vec(basis.size(), 0);
  if (basis.empty()) return std::nullopt;
  Mat m = Mat::from_columns(f, basis, ambient_dim);
  return solve_affine(m, v);
}

Subspace kernel_basis(const Mat& m) {
  const PrimeField& f = m.field();
  RrefResult rr = rref(m);
  Subspace s;
  s.ambient_dim = m.cols();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
      v[rr.pivot_columns[i]] = f.neg(rr.rref.at(i, c));
    }
    s.basis.push_back(std::move(v));
  }
  return s;
}

std::optional<Vec> solve_affine(const Mat& A, const Vec& b) {
  if (b.size() != A.rows()) throw Error("solve_affine: rhs size mismatch");
  const PrimeField& f = A.field();
  Mat aug(f, A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
    if (rr.pivot_columns[i] == A.cols()) return std::nullopt;
  }
  Vec x(A.cols(), 0);
  for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
    x[rr.pivot_columns[i]] = rr.rref.at(i, A.cols());
  }
  return x;
}

std::optional<Mat> solve_affine_columns(const Mat& A, const Mat& B) {
  if (B.rows() != A.rows()) throw Error("solve_affine_columns: shape mismatch");
  const PrimeField& f = A.field();
  Mat aug(f, A.rows(), A.cols() + B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j) aug.at(i, A.cols() + j) = B.at(i, j);
  }
  RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivot_columns) {
    if (c >= A.cols()) return std::nullopt;
  }
  Mat x(f, A.cols(), B.cols());
  for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) x.at(rr.pivot_columns[i], j) = rr.rref.at(i, A.cols() + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_affine_columns(m, Mat::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return x;
}

Quotient quotient_space(const PrimeField& f, std::size_t ambient, const Subspace& relations) {
  if (relations.ambient_dim != ambient) {
    throw Error("quotient_space: relations ambient mismatch");
  }
  RrefResult rr = relations.basis.empty()
                      ? RrefResult{Mat(f, 0, ambient), {}, 0}
                      : rref(Mat::from_rows(f, relations.basis, ambient));
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Quotient q{free_cols.size(), Mat(f, free_cols.size(), ambient), Mat(f, ambient, free_cols.size())};
  // projection: reduce e_j mod the rref rows, then keep free coordinates.
  for (std::size_t k = 0; k < free_cols.size(); ++k) q.projection.at(k, free_cols[k]) = 1;
  for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
    std::size_t pc = rr.pivot_columns[i];
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      q.projection.at(k, pc) = f.neg(rr.rref.at(i, free_cols[k]));
    }
  }
  for (std::size_t k = 0; k < free_cols.size(); ++k) q.section.at(free_cols[k], k) = 1;
  return q;
}

Vec vectorize(const Mat& m) {
  return m.data();
}

Mat unvectorize(const PrimeField& f, const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error("unvectorize: size mismatch");
  Mat m(f, rows, cols);
  m.data() = v;
  return m;
}

}  // namespace natfull
