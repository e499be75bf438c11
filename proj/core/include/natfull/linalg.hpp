#pragma once

// Exact dense linear algebra over a prime field F_p. Every Hom-space,
// invariant subspace, tensor quotient and splitting system in the library
// reduces to the solvers in this header, so everything downstream inherits
// their determinism: no rounding, no randomized pivoting.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "natfull/errors.hpp"

namespace natfull {

class PrimeField {
 public:
  PrimeField() : p_(2) {}
  // p must be prime, 2 <= p <= 97.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

using Vec = std::vector<std::uint32_t>;

Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b);
Vec vec_sub(const PrimeField& f, const Vec& a, const Vec& b);
Vec vec_scale(const PrimeField& f, std::uint32_t c, const Vec& a);
bool is_zero_vec(const Vec& a);

// Dense row-major matrix over F_p.
class Mat {
 public:
  Mat(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(PrimeField f, std::size_t n);
  static Mat zero(PrimeField f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
  static Mat from_rows(PrimeField f, const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(PrimeField f, const std::vector<Vec>& cols, std::size_t rows);
  // Standard tensor (Kronecker) product under idx(i,j) = i*dim2 + j.
  static Mat kronecker(const Mat& a, const Mat& b);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  const Vec& data() const { return data_; }
  Vec& data() { return data_; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_column(std::size_t j, const Vec& v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Vec apply(const Vec& v) const;
  Mat transpose() const;
  Mat scaled(std::uint32_t c) const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_zero() const;
  bool is_identity() const;

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  Vec data_;
};

struct RrefResult {
  Mat rref;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank;
};

// Unique reduced row echelon form.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

// A list of independent vectors inside F_p^ambient.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;  // linearly independent, rref-normalized by from_span

  std::size_t dim() const { return basis.size(); }
  // Reduce a spanning set to an rref basis (deterministic normal form).
  static Subspace from_span(const PrimeField& f, std::size_t ambient, const std::vector<Vec>& span);
  bool contains(const PrimeField& f, const Vec& v) const;
  // Coordinates of v in this basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const PrimeField& f, const Vec& v) const;
};

// Basis of {v : m v = 0}.
Subspace kernel_basis(const Mat& m);

// Some x with A x = b, or nullopt if b is outside the column space.
// Free variables are set to 0 under the rref pivot convention, so the
// returned solution is deterministic.
std::optional<Vec> solve_affine(const Mat& A, const Vec& b);
// Columnwise solve: X with A X = B.
std::optional<Mat> solve_affine_columns(const Mat& A, const Mat& B);

std::optional<Mat> inverse(const Mat& m);

// Cokernel presentation of F_p^ambient / span(relations):
// projection * section = identity on the quotient and
// kernel(projection) = span(relations).
struct Quotient {
  std::size_t dim = 0;
  Mat projection;  // dim x ambient
  Mat section;     // ambient x dim
};

Quotient quotient_space(const PrimeField& f, std::size_t ambient, const Subspace& relations);

// Column-major stacking of a matrix M -> vec with vec[i*cols + j] = M(i,j)
// (row-major flattening; matches the Kronecker index convention).
Vec vectorize(const Mat& m);
Mat unvectorize(const PrimeField& f, const Vec& v, std::size_t rows, std::size_t cols);

}  // namespace natfull
