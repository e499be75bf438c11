#include "natfull/module.hpp"

#include <algorithm>
#include <numeric>

namespace natfull {

Mat Module::left_act(const Vec& x) const {
  if (!left) throw Error("Module::left_act: no left action");
  Mat m(field, dim, dim);
  for (std::size_t a = 0; a < left->dim; ++a) {
    if (x[a] == 0) continue;
    m = m + left_action[a].scaled(x[a]);
  }
  return m;
}

Mat Module::right_act(const Vec& x) const {
  if (!right) throw Error("Module::right_act: no right action");
  Mat m(field, dim, dim);
  for (std::size_t a = 0; a < right->dim; ++a) {
    if (x[a] == 0) continue;
    m = m + right_action[a].scaled(x[a]);
  }
  return m;
}

std::vector<std::string> Module::validate() const {
  std::vector<std::string> bad;
  if (left) {
    if (left_action.size() != left->dim) {
      bad.push_back("left action table has wrong size");
      return bad;
    }
    if (!left_act(left->unit).is_identity()) bad.push_back("left unit does not act as identity");
    for (std::size_t i = 0; i < left->dim; ++i)
      for (std::size_t j = 0; j < left->dim; ++j) {
        Mat lhs = left_action[i] * left_action[j];
        Mat rhs = left_act(left->basis_product(i, j));
        if (!(lhs == rhs))
          bad.push_back("left action incompatible with product at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
  }
  if (right) {
    if (right_action.size() != right->dim) {
      bad.push_back("right action table has wrong size");
      return bad;
    }
    if (!right_act(right->unit).is_identity()) bad.push_back("right unit does not act as identity");
    // m (e_i e_j) = (m e_i) e_j, so the matrix of e_i e_j is rho(e_j) rho(e_i).
    for (std::size_t i = 0; i < right->dim; ++i)
      for (std::size_t j = 0; j < right->dim; ++j) {
        Mat lhs = right_action[j] * right_action[i];
        Mat rhs = right_act(right->basis_product(i, j));
        if (!(lhs == rhs))
          bad.push_back("right action incompatible with product at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
  }
  if (left && right) {
    for (std::size_t i = 0; i < left->dim; ++i)
      for (std::size_t j = 0; j < right->dim; ++j) {
        if (!(left_action[i] * right_action[j] == right_action[j] * left_action[i]))
          bad.push_back("left and right actions do not commute at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
  }
  return bad;
}

Module left_regular(const FDAlgebra& a) {
  Module m{a.field, a.dim, a, std::nullopt, {}, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec e(a.dim, 0);
    e[i] = 1;
    m.left_action.push_back(a.left_mult(e));
  }
  return m;
}

Module right_regular(const FDAlgebra& a) {
  Module m{a.field, a.dim, std::nullopt, a, {}, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec e(a.dim, 0);
    e[i] = 1;
    m.right_action.push_back(a.right_mult(e));
  }
  return m;
}

Module bimodule_regular(const FDAlgebra& a) {
  Module m = left_regular(a);
  Module r = right_regular(a);
  m.right = r.right;
  m.right_action = r.right_action;
  return m;
}

Module free_left_module(const FDAlgebra& a, std::size_t copies) {
  Module m{a.field, copies * a.dim, a, std::nullopt, {}, {}};
  Mat eye(a.field, copies, copies);
  for (std::size_t i = 0; i < copies; ++i) eye.at(i, i) = 1;
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec e(a.dim, 0);
    e[i] = 1;
    m.left_action.push_back(Mat::kronecker(eye, a.left_mult(e)));
  }
  return m;
}

Module zero_module(const PrimeField& f) {
  return Module{f, 0, std::nullopt, std::nullopt, {}, {}};
}

Module left_module_via(Module m, const AlgebraMorphism& phi) {
  if (!m.left || !(*m.left == phi.target)) throw Error("left_module_via: target algebra mismatch");
  std::vector<Mat> act;
  for (std::size_t a = 0; a < phi.source.dim; ++a) {
    act.push_back(m.left_act(phi.matrix.column(a)));
  }
  m.left = phi.source;
  m.left_action = std::move(act);
  return m;
}

Module right_module_via(Module m, const AlgebraMorphism& phi) {
  if (!m.right || !(*m.right == phi.target)) throw Error("right_module_via: target algebra mismatch");
  std::vector<Mat> act;
  for (std::size_t a = 0; a < phi.source.dim; ++a) {
    act.push_back(m.right_act(phi.matrix.column(a)));
  }
  m.right = phi.source;
  m.right_action = std::move(act);
  return m;
}

Module forget_right(Module m) {
  m.right.reset();
  m.right_action.clear();
  return m;
}

Module forget_left(Module m) {
  m.left.reset();
  m.left_action.clear();
  return m;
}

Mat HomSpace::matrix_of(const PrimeField& f, const Vec& coeffs) const {
  Mat m(f, target_dim, source_dim);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (coeffs[t] == 0) continue;
    m = m + basis[t].scaled(coeffs[t]);
  }
  return m;
}

Mat HomSpace::basis_columns(const PrimeField& f) const {
  std::vector<Vec> cols;
  cols.reserve(basis.size());
  for (const Mat& b : basis) cols.push_back(vectorize(b));
  return Mat::from_columns(f, cols, target_dim * source_dim);
}

std::optional<Vec> HomSpace::coords_of(const PrimeField& f, const Mat& m) const {
  return solve_affine(basis_columns(f), vectorize(m));
}

namespace {

void append_intertwiner_rows(std::vector<Vec>& rows, const Mat& src_act, const Mat& tgt_act,
                             std::size_t sdim, std::size_t tdim) {
  // F src_act = tgt_act F, vectorized row-major:
  // (I (x) src_act^T - tgt_act (x) I) vec(F) = 0.
  const PrimeField& f = src_act.field();
  Mat lhs = Mat::kronecker(Mat::identity(f, tdim), src_act.transpose()) -
            Mat::kronecker(tgt_act, Mat::identity(f, sdim));
  for (std::size_t r = 0; r < lhs.rows(); ++r) rows.push_back(lhs.row(r));
}

}  // namespace

HomSpace hom_space(const Module& m, const Module& n, Sided s) {
  const PrimeField& f = m.field;
  if (f != n.field) throw Error("hom_space: field mismatch");
  bool want_left = (s == Sided::Left || s == Sided::Both);
  bool want_right = (s == Sided::Right || s == Sided::Both);
  if (want_left) {
    if (!m.left || !n.left || !(*m.left == *n.left))
      throw Error("hom_space: modules are not over the same left algebra");
  }
  if (want_right) {
    if (!m.right || !n.right || !(*m.right == *n.right))
      throw Error("hom_space: modules are not over the same right algebra");
  }
  std::vector<Vec> rows;
  if (want_left) {
    for (std::size_t a = 0; a < m.left->dim; ++a)
      append_intertwiner_rows(rows, m.left_action[a], n.left_action[a], m.dim, n.dim);
  }
  if (want_right) {
    for (std::size_t a = 0; a < m.right->dim; ++a)
      append_intertwiner_rows(rows, m.right_action[a], n.right_action[a], m.dim, n.dim);
  }
  HomSpace h;
  h.source_dim = m.dim;
  h.target_dim = n.dim;
  std::size_t vars = m.dim * n.dim;
  Mat sys = Mat::from_rows(f, rows, vars);
  h.constraints_rank = rows.empty() ? 0 : rank(sys);
  Subspace ker = rows.empty() ? Subspace{vars, {}} : kernel_basis(sys);
  if (rows.empty()) {
    // no constraints: every linear map qualifies
    for (std::size_t i = 0; i < vars; ++i) {
      Vec v(vars, 0);
      v[i] = 1;
      ker.basis.push_back(v);
    }
  }
  for (const Vec& v : ker.basis) h.basis.push_back(unvectorize(f, v, n.dim, m.dim));
  return h;
}

std::size_t TensorChain::ambient_dim() const {
  std::size_t d = 1;
  for (std::size_t x : factor_dims) d *= x;
  return d;
}

TensorChain tensor_chain(const std::vector<const Module*>& factors) {
  if (factors.empty()) throw Error("tensor_chain: no factors");
  const PrimeField& f = factors[0]->field;
  std::vector<std::size_t> dims;
  for (const Module* m : factors) dims.push_back(m->dim);
  std::size_t n = factors.size();
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t k = n; k-- > 1;) stride[k - 1] = stride[k] * dims[k];
  std::size_t ambient = stride[0] * dims[0];

  std::vector<Vec> relations;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    const Module& a = *factors[t];
    const Module& b = *factors[t + 1];
    if (!a.right || !b.left || !(*a.right == *b.left))
      throw Error("tensor_chain: adjacent factors do not share an algebra");
    const FDAlgebra& alg = *a.right;
    // enumerate multi-indices of all the other slots
    std::vector<std::size_t> other_slots;
    for (std::size_t i = 0; i < n; ++i)
      if (i != t && i != t + 1) other_slots.push_back(i);
    std::size_t other_count = 1;
    for (std::size_t i : other_slots) other_count *= dims[i];
    for (std::size_t g = 0; g < alg.dim; ++g) {
      const Mat& rho = a.right_action[g];
      const Mat& lam = b.left_action[g];
      for (std::size_t u = 0; u < dims[t]; ++u)
        for (std::size_t v = 0; v < dims[t + 1]; ++v) {
          for (std::size_t o = 0; o < other_count; ++o) {
            std::size_t base = 0;
            std::size_t rem = o;
            for (std::size_t i : other_slots) {
              std::size_t digit = rem % dims[i];
              rem /= dims[i];
              base += digit * stride[i];
            }
            Vec rel(ambient, 0);
            for (std::size_t k = 0; k < dims[t]; ++k) {
              std::uint32_t c = rho.at(k, u);
              if (c == 0) continue;
              std::size_t idx = base + k * stride[t] + v * stride[t + 1];
              rel[idx] = f.add(rel[idx], c);
            }
            for (std::size_t k = 0; k < dims[t + 1]; ++k) {
              std::uint32_t c = lam.at(k, v);
              if (c == 0) continue;
              std::size_t idx = base + u * stride[t] + k * stride[t + 1];
              rel[idx] = f.sub(rel[idx], c);
            }
            if (!is_zero_vec(rel)) relations.push_back(std::move(rel));
          }
        }
    }
  }

  Subspace rel_space = Subspace::from_span(f, ambient, relations);
  Quotient q = quotient_space(f, ambient, rel_space);

  Module result{f, q.dim, std::nullopt, std::nullopt, {}, {}};
  if (factors.front()->left) {
    result.left = factors.front()->left;
    for (std::size_t a = 0; a < result.left->dim; ++a) {
      Mat big = factors.front()->left_action[a];
      for (std::size_t i = 1; i < n; ++i) big = Mat::kronecker(big, Mat::identity(f, dims[i]));
      result.left_action.push_back(q.projection * big * q.section);
    }
  }
  if (factors.back()->right) {
    result.right = factors.back()->right;
    for (std::size_t a = 0; a < result.right->dim; ++a) {
      Mat big = Mat::identity(f, 1);
      for (std::size_t i = 0; i + 1 < n; ++i) big = Mat::kronecker(big, Mat::identity(f, dims[i]));
      big = Mat::kronecker(big, factors.back()->right_action[a]);
      result.right_action.push_back(q.projection * big * q.section);
    }
  }
  return TensorChain{std::move(result), std::move(q.projection), std::move(q.section), std::move(dims)};
}

TensorChain tensor_over(const Module& m, const Module& n) {
  return tensor_chain({&m, &n});
}

Subspace invariants(const Module& m) {
  if (!m.left || !m.right || !(*m.left == *m.right))
    throw Error("invariants: needs a bimodule over a single algebra");
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < m.left->dim; ++a) {
    Mat d = m.left_action[a] - m.right_action[a];
    for (std::size_t r = 0; r < d.rows(); ++r) rows.push_back(d.row(r));
  }
  if (rows.empty()) {
    Subspace s{m.dim, {}};
    for (std::size_t i = 0; i < m.dim; ++i) {
      Vec v(m.dim, 0);
      v[i] = 1;
      s.basis.push_back(v);
    }
    return s;
  }
  return kernel_basis(Mat::from_rows(m.field, rows, m.dim));
}

std::optional<DualBasis> fgp_dual_basis(const Module& m) {
  if (!m.left) throw Error("fgp_dual_basis: left module required");
  const PrimeField& f = m.field;
  const FDAlgebra& s = *m.left;
  std::size_t k = m.dim;
  if (k == 0) return DualBasis{{}, {}};
  Module cover = free_left_module(s, k);
  // g : S^k -> M, (s_1, ..., s_k) -> sum s_i b_i.
  Mat g(f, m.dim, k * s.dim);
  for (std::size_t i = 0; i < k; ++i) {
    Vec bi(m.dim, 0);
    bi[i] = 1;
    for (std::size_t a = 0; a < s.dim; ++a) {
      Vec ea(s.dim, 0);
      ea[a] = 1;
      g.set_column(i * s.dim + a, m.left_act(ea).apply(bi));
    }
  }
  Module msrc = forget_right(m);
  HomSpace sections = hom_space(msrc, cover, Sided::Left);
  if (sections.dim() == 0 && m.dim > 0) return std::nullopt;
  std::vector<Vec> cols;
  for (const Mat& h : sections.basis) cols.push_back(vectorize(g * h));
  Mat sys = Mat::from_columns(f, cols, m.dim * m.dim);
  auto x = solve_affine(sys, vectorize(Mat::identity(f, m.dim)));
  if (!x) return std::nullopt;
  Mat h = sections.matrix_of(f, *x);
  DualBasis db;
  for (std::size_t i = 0; i < k; ++i) {
    Vec bi(m.dim, 0);
    bi[i] = 1;
    db.generators.push_back(bi);
    Mat dual(f, s.dim, m.dim);
    for (std::size_t r = 0; r < s.dim; ++r) dual.set_row(r, h.row(i * s.dim + r));
    db.duals.push_back(dual);
  }
  return db;
}

bool is_generator(const Module& m) {
  if (!m.left) throw Error("is_generator: left module required");
  const FDAlgebra& s = *m.left;
  Module reg = left_regular(s);
  Module msrc = forget_right(m);
  HomSpace h = hom_space(msrc, reg, Sided::Left);
  std::vector<Vec> span;
  for (const Mat& ft : h.basis)
    for (std::size_t j = 0; j < m.dim; ++j) span.push_back(ft.column(j));
  Subspace tr = Subspace::from_span(m.field, s.dim, span);
  return tr.dim() == s.dim;
}

Mat HomModule::basis_columns(const PrimeField& f) const {
  std::vector<Vec> cols;
  for (const Mat& b : basis) cols.push_back(vectorize(b));
  return Mat::from_columns(f, cols, target_dim * source_dim);
}

Vec HomModule::coords_of(const PrimeField& f, const Mat& m) const {
  auto x = solve_affine(basis_columns(f), vectorize(m));
  if (!x) throw Error("HomModule::coords_of: matrix not in the hom space");
  return *x;
}

Mat HomModule::matrix_of(const PrimeField& f, const Vec& coeffs) const {
  Mat m(f, target_dim, source_dim);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (coeffs[t] == 0) continue;
    m = m + basis[t].scaled(coeffs[t]);
  }
  return m;
}

HomModule hom_left_as_module(const Module& m, const Module& q) {
  if (!m.left || !q.left || !(*m.left == *q.left))
    throw Error("hom_left_as_module: sources must be left modules over one algebra");
  const PrimeField& f = m.field;
  HomSpace h = hom_space(forget_right(m), forget_right(q), Sided::Left);
  HomModule hm;
  hm.basis = h.basis;
  hm.source_dim = m.dim;
  hm.target_dim = q.dim;
  Module mod{f, h.dim(), std::nullopt, std::nullopt, {}, {}};
  Mat cols = hm.basis_columns(f);
  // left action of M.right: (m)(r.f) = (mr)f, i.e. mat(r.f) = F rho_M(r).
  if (m.right) {
    mod.left = m.right;
    for (std::size_t a = 0; a < m.right->dim; ++a) {
      std::vector<Vec> imgs;
      for (const Mat& ft : h.basis) {
        Mat acted = ft * m.right_action[a];
        auto c = solve_affine(cols, vectorize(acted));
        if (!c) throw Error("hom_left_as_module: action does not preserve the hom space");
        imgs.push_back(*c);
      }
      mod.left_action.push_back(Mat::from_columns(f, imgs, h.dim()));
    }
  }
  // right action of Q.right: (m)(f.t) = ((m)f)t, i.e. mat(f.t) = rho_Q(t) F.
  if (q.right) {
    mod.right = q.right;
    for (std::size_t a = 0; a < q.right->dim; ++a) {
      std::vector<Vec> imgs;
      for (const Mat& ft : h.basis) {
        Mat acted = q.right_action[a] * ft;
        auto c = solve_affine(cols, vectorize(acted));
        if (!c) throw Error("hom_left_as_module: action does not preserve the hom space");
        imgs.push_back(*c);
      }
      mod.right_action.push_back(Mat::from_columns(f, imgs, h.dim()));
    }
  }
  hm.module = std::move(mod);
  return hm;
}

HomModule star_module(const Module& m) {
  if (!m.left) throw Error("star_module: left module required");
  return hom_left_as_module(m, bimodule_regular(*m.left));
}

Mat EndAlgebra::basis_columns() const {
  std::vector<Vec> cols;
  for (const Mat& b : basis) cols.push_back(vectorize(b));
  return Mat::from_columns(algebra.field, cols, module_dim * module_dim);
}

Vec EndAlgebra::coords_of(const Mat& endo) const {
  auto x = solve_affine(basis_columns(), vectorize(endo));
  if (!x) throw Error("EndAlgebra::coords_of: not an element of End_S(M)");
  return *x;
}

Mat EndAlgebra::matrix_of(const Vec& coeffs) const {
  std::size_t d = module_dim;
  Mat m(algebra.field, d, d);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (coeffs[t] == 0) continue;
    m = m + basis[t].scaled(coeffs[t]);
  }
  return m;
}

EndAlgebra endomorphism_algebra(const Module& m) {
  if (!m.left) throw Error("endomorphism_algebra: left module required");
  const PrimeField& f = m.field;
  HomSpace h = hom_space(forget_right(m), forget_right(m), Sided::Left);
  EndAlgebra ea;
  ea.basis = h.basis;
  ea.module_dim = m.dim;
  std::size_t t = h.dim();
  FDAlgebra alg{f, t, std::vector<Vec>(t * t), Vec(t, 0)};
  std::vector<Vec> colvecs;
  for (const Mat& b : h.basis) colvecs.push_back(vectorize(b));
  Mat cols = Mat::from_columns(f, colvecs, m.dim * m.dim);
  auto coords = [&](const Mat& x) {
    auto c = solve_affine(cols, vectorize(x));
    if (!c) throw Error("endomorphism_algebra: product left the hom space");
    return *c;
  };
  // (m)(f.g) = ((m)f)g: composition in right-operator order.
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) alg.mul[i * t + j] = coords(h.basis[j] * h.basis[i]);
  if (t > 0) alg.unit = coords(Mat::identity(f, m.dim));
  ea.algebra = std::move(alg);
  if (m.right) {
    Mat chi(f, t, m.right->dim);
    for (std::size_t a = 0; a < m.right->dim; ++a) chi.set_column(a, coords(m.right_action[a]));
    ea.chi = AlgebraMorphism{*m.right, ea.algebra, chi};
  }
  return ea;
}

Subspace left_submodule_generated(const Module& m, const std::vector<Vec>& gens) {
  if (!m.left) throw Error("left_submodule_generated: left module required");
  std::vector<Vec> span;
  for (const Vec& g : gens) {
    for (std::size_t a = 0; a < m.left->dim; ++a) span.push_back(m.left_action[a].apply(g));
    span.push_back(g);
  }
  return Subspace::from_span(m.field, m.dim, span);
}

Module quotient_module(const Module& m, const Subspace& w) {
  Quotient q = quotient_space(m.field, m.dim, w);
  Module r{m.field, q.dim, m.left, m.right, {}, {}};
  if (m.left) {
    for (const Mat& act : m.left_action) r.left_action.push_back(q.projection * act * q.section);
  }
  if (m.right) {
    for (const Mat& act : m.right_action) r.right_action.push_back(q.projection * act * q.section);
  }
  return r;
}

Module as_left_over_opposite(const Module& m) {
  if (!m.right) throw Error("as_left_over_opposite: right module required");
  Module r{m.field, m.dim, m.right->opposite(), std::nullopt, m.right_action, {}};
  return r;
}

Module submodule_module(const Module& m, const Subspace& w) {
  const PrimeField& f = m.field;
  Mat incl = Mat::from_columns(f, w.basis, m.dim);
  Module r{f, w.dim(), m.left, m.right, {}, {}};
  auto restricted = [&](const Mat& act) {
    auto c = solve_affine_columns(incl, act * incl);
    if (!c) throw Error("submodule_module: subspace is not action-stable");
    return *c;
  };
  if (m.left) {
    for (const Mat& act : m.left_action) r.left_action.push_back(restricted(act));
  }
  if (m.right) {
    for (const Mat& act : m.right_action) r.right_action.push_back(restricted(act));
  }
  return r;
}

}  // namespace natfull
