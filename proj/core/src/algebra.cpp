#include "natfull/algebra.hpp"

#include <algorithm>

#include "natfull/module.hpp"

namespace natfull {

Vec FDAlgebra::product(const Vec& x, const Vec& y) const {
  Vec r(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      std::uint32_t c = field.mul(x[i], y[j]);
      const Vec& eij = mul[i * dim + j];
      for (std::size_t k = 0; k < dim; ++k) r[k] = field.add(r[k], field.mul(c, eij[k]));
    }
  }
  return r;
}

Mat FDAlgebra::left_mult(const Vec& x) const {
  Mat m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec ej(dim, 0);
    ej[j] = 1;
    m.set_column(j, product(x, ej));
  }
  return m;
}

Mat FDAlgebra::right_mult(const Vec& x) const {
  Mat m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec ej(dim, 0);
    ej[j] = 1;
    m.set_column(j, product(ej, x));
  }
  return m;
}

std::vector<std::string> FDAlgebra::validate() const {
  std::vector<std::string> bad;
  if (mul.size() != dim * dim) {
    bad.push_back("structure constant table has wrong size");
    return bad;
  }
  for (const Vec& v : mul) {
    if (v.size() != dim) {
      bad.push_back("structure constant row has wrong length");
      return bad;
    }
  }
  if (unit.size() != dim) {
    bad.push_back("unit vector has wrong length");
    return bad;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    Vec ei(dim, 0);
    ei[i] = 1;
    if (product(unit, ei) != ei) bad.push_back("unit * e_" + std::to_string(i) + " != e_" + std::to_string(i));
    if (product(ei, unit) != ei) bad.push_back("e_" + std::to_string(i) + " * unit != e_" + std::to_string(i));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    Vec ei(dim, 0);
    ei[i] = 1;
    for (std::size_t j = 0; j < dim; ++j) {
      Vec ej(dim, 0);
      ej[j] = 1;
      for (std::size_t k = 0; k < dim; ++k) {
        Vec ek(dim, 0);
        ek[k] = 1;
        Vec lhs = product(basis_product(i, j), ek);
        Vec rhs = product(ei, basis_product(j, k));
        if (lhs != rhs) {
          bad.push_back("associativity fails at basis triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  return bad;
}

FDAlgebra FDAlgebra::opposite() const {
  FDAlgebra o{field, dim, std::vector<Vec>(dim * dim), unit};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) o.mul[i * dim + j] = mul[j * dim + i];
  return o;
}

bool FDAlgebra::operator==(const FDAlgebra& o) const {
  return field == o.field && dim == o.dim && mul == o.mul && unit == o.unit;
}

FDAlgebra field_algebra(std::uint32_t p) {
  PrimeField f(p);
  FDAlgebra a{f, 1, {Vec{1}}, Vec{1}};
  return a;
}

FDAlgebra product_algebra(const FDAlgebra& a, const FDAlgebra& b) {
  if (a.field != b.field) throw Error("product_algebra: field mismatch");
  FDAlgebra r{a.field, a.dim + b.dim, {}, {}};
  r.mul.assign(r.dim * r.dim, Vec(r.dim, 0));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec v(r.dim, 0);
      const Vec& p = a.basis_product(i, j);
      std::copy(p.begin(), p.end(), v.begin());
      r.mul[i * r.dim + j] = v;
    }
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      Vec v(r.dim, 0);
      const Vec& p = b.basis_product(i, j);
      std::copy(p.begin(), p.end(), v.begin() + a.dim);
      r.mul[(a.dim + i) * r.dim + (a.dim + j)] = v;
    }
  r.unit.assign(r.dim, 0);
  for (std::size_t i = 0; i < a.dim; ++i) r.unit[i] = a.unit[i];
  for (std::size_t i = 0; i < b.dim; ++i) r.unit[a.dim + i] = b.unit[i];
  return r;
}

FDAlgebra polynomial_quotient_algebra(std::uint32_t p, const Vec& modulus_coeffs) {
  PrimeField f(p);
  std::size_t n = modulus_coeffs.size();
  if (n == 0) throw Error("polynomial_quotient_algebra: empty modulus");
  // Basis 1, x, ..., x^{n-1}; x^n = -(c_0 + c_1 x + ...).
  Vec xn(n, 0);
  for (std::size_t i = 0; i < n; ++i) xn[i] = f.neg(modulus_coeffs[i] % p);
  // Powers x^k for k up to 2n-2.
  std::vector<Vec> pow(2 * n - 1, Vec(n, 0));
  pow[0][0] = 1;
  for (std::size_t k = 1; k < 2 * n - 1; ++k) {
    // multiply pow[k-1] by x.
    Vec prev = pow[k - 1];
    Vec cur(n, 0);
    std::uint32_t top = prev[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < n; ++i) cur[i] = f.add(cur[i], f.mul(top, xn[i]));
    }
    pow[k] = cur;
  }
  FDAlgebra a{f, n, std::vector<Vec>(n * n), Vec(n, 0)};
  a.unit[0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.mul[i * n + j] = pow[i + j];
  return a;
}

FDAlgebra matrix_algebra(std::uint32_t p, std::size_t n) {
  PrimeField f(p);
  std::size_t d = n * n;  // basis E_{ij}, index i*n + j
  FDAlgebra a{f, d, std::vector<Vec>(d * d, Vec(d, 0)), Vec(d, 0)};
  for (std::size_t i = 0; i < n; ++i) a.unit[i * n + i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (j == k) a.mul[(i * n + j) * d + (k * n + l)][i * n + l] = 1;
        }
  return a;
}

FDAlgebra conjugate_algebra(const FDAlgebra& a, const Mat& q) {
  auto qi = inverse(q);
  if (!qi) throw Error("conjugate_algebra: matrix not invertible");
  FDAlgebra r{a.field, a.dim, std::vector<Vec>(a.dim * a.dim), {}};
  // new e_i = q(:, i); products expressed back through q^{-1}.
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec prod = a.product(q.column(i), q.column(j));
      r.mul[i * a.dim + j] = qi->apply(prod);
    }
  r.unit = qi->apply(a.unit);
  return r;
}

std::vector<std::string> AlgebraMorphism::validate() const {
  std::vector<std::string> bad;
  if (matrix.rows() != target.dim || matrix.cols() != source.dim) {
    bad.push_back("morphism matrix has wrong shape");
    return bad;
  }
  if (source.field != target.field) {
    bad.push_back("morphism between algebras over different prime fields");
    return bad;
  }
  if (apply(source.unit) != target.unit) bad.push_back("phi(1) != 1");
  for (std::size_t i = 0; i < source.dim; ++i)
    for (std::size_t j = 0; j < source.dim; ++j) {
      Vec lhs = apply(source.basis_product(i, j));
      Vec rhs = target.product(matrix.column(i), matrix.column(j));
      if (lhs != rhs) {
        bad.push_back("phi not multiplicative at basis pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
      }
    }
  return bad;
}

AlgebraMorphism identity_morphism(const FDAlgebra& a) {
  return AlgebraMorphism{a, a, Mat::identity(a.field, a.dim)};
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (!(f.target == g.source)) throw Error("compose: morphisms not composable");
  return AlgebraMorphism{f.source, g.target, g.matrix * f.matrix};
}

Subspace center(const FDAlgebra& a) {
  const PrimeField& f = a.field;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec ei(a.dim, 0);
    ei[i] = 1;
    Mat d = a.left_mult(ei) - a.right_mult(ei);
    for (std::size_t r = 0; r < d.rows(); ++r) rows.push_back(d.row(r));
  }
  Mat stacked = Mat::from_rows(f, rows, a.dim);
  Subspace ker = kernel_basis(stacked);
  return ker;
}

std::vector<Vec> central_idempotents(const FDAlgebra& a, std::uint64_t enumeration_bound) {
  const PrimeField& f = a.field;
  Subspace z = center(a);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < z.dim(); ++i) {
    count *= f.modulus();
    if (count > enumeration_bound) {
      throw CenterTooLarge("central_idempotents: p^dim(center) exceeds enumeration bound");
    }
  }
  std::vector<Vec> result;
  for (std::uint64_t n = 0; n < count; ++n) {
    Vec x(a.dim, 0);
    std::uint64_t rem = n;
    for (std::size_t i = 0; i < z.dim(); ++i) {
      std::uint32_t d = static_cast<std::uint32_t>(rem % f.modulus());
      rem /= f.modulus();
      if (d != 0) {
        for (std::size_t k = 0; k < a.dim; ++k) x[k] = f.add(x[k], f.mul(d, z.basis[i][k]));
      }
    }
    if (a.product(x, x) == x) result.push_back(std::move(x));
  }
  std::sort(result.begin(), result.end());
  return result;
}

RingEpiReport is_ring_epimorphism(const AlgebraMorphism& phi) {
  // S (x)_R S with the right/left R-structures induced along phi.
  Module sr = right_module_via(bimodule_regular(phi.target), phi);   // S as -_R
  Module rs = left_module_via(bimodule_regular(phi.target), phi);    // S as R_-
  TensorChain t = tensor_over(sr, rs);
  // eps(s (x) s') = s s' through the section.
  const FDAlgebra& s = phi.target;
  Mat mult(s.field, s.dim, s.dim * s.dim);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) mult.set_column(i * s.dim + j, s.basis_product(i, j));
  Mat eps = mult * t.section;
  std::size_t k = kernel_basis(eps).dim();
  return RingEpiReport{k == 0, k};
}

}  // namespace natfull
