#include "natfull/bimodule_functors.hpp"

namespace natfull {

namespace {

void require_bimodule(const Module& m) {
  if (!m.left || !m.right) throw Error("bimodule analyzer: (S,R)-bimodule required");
}

// Lambda_m : S -> M, s -> s m.
Mat lambda_of(const Module& m, const Vec& elem) {
  const FDAlgebra& s = *m.left;
  Mat r(m.field, m.dim, s.dim);
  for (std::size_t a = 0; a < s.dim; ++a) r.set_column(a, m.left_action[a].apply(elem));
  return r;
}

// Lambda^Q_q : S -> Q, s -> s q.
Mat lambda_into(const Module& q, const Vec& elem) {
  const FDAlgebra& s = *q.left;
  Mat r(q.field, q.dim, s.dim);
  for (std::size_t a = 0; a < s.dim; ++a) r.set_column(a, q.left_action[a].apply(elem));
  return r;
}

}  // namespace

CoinductionParts coinduction_parts(const Module& m) {
  require_bimodule(m);
  HomModule star = star_module(m);
  TensorChain tensor = tensor_over(m, star.module);
  HomModule endo = hom_left_as_module(m, m);
  TensorChain m_endo = tensor_over(m, endo.module);
  return CoinductionParts{std::move(star), std::move(tensor), std::move(endo), std::move(m_endo)};
}

namespace {

// Image of a (lifted) element of M (x)_K *M under
// z -> sum_i m_i (x) (?)f_i m_b, expressed in M (x)_R End coordinates.
Vec push_414(const Module& m, const CoinductionParts& parts, const Vec& lift, std::size_t b) {
  const PrimeField& f = m.field;
  std::size_t star_dim = parts.star.basis.size();
  std::size_t endo_dim = parts.endo.basis.size();
  Vec mb(m.dim, 0);
  mb[b] = 1;
  Mat lam = lambda_of(m, mb);
  Vec acc(m.dim * endo_dim, 0);
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t t = 0; t < star_dim; ++t) {
      std::uint32_t c = lift[i * star_dim + t];
      if (c == 0) continue;
      Vec coords = parts.endo.coords_of(f, lam * parts.star.basis[t]);
      for (std::size_t k = 0; k < endo_dim; ++k)
        acc[i * endo_dim + k] = f.add(acc[i * endo_dim + k], f.mul(c, coords[k]));
    }
  }
  return parts.m_endo.projection.apply(acc);
}

Vec rhs_414(const Module& m, const CoinductionParts& parts, std::size_t b) {
  const PrimeField& f = m.field;
  std::size_t endo_dim = parts.endo.basis.size();
  Vec id_coords = parts.endo.coords_of(f, Mat::identity(f, m.dim));
  Vec acc(m.dim * endo_dim, 0);
  for (std::size_t k = 0; k < endo_dim; ++k) acc[b * endo_dim + k] = id_coords[k];
  return parts.m_endo.projection.apply(acc);
}

}  // namespace

bool holds_414(const Module& m, const CoinductionParts& parts, const Vec& z) {
  Vec lift = parts.tensor.section.apply(z);
  for (std::size_t b = 0; b < m.dim; ++b) {
    if (push_414(m, parts, lift, b) != rhs_414(m, parts, b)) return false;
  }
  return true;
}

bool holds_415(const Module& m, const CoinductionParts& parts, const Vec& z, const Module& q) {
  const PrimeField& f = m.field;
  HomModule homq = hom_left_as_module(m, q);
  TensorChain tq = tensor_over(m, homq.module);
  std::size_t star_dim = parts.star.basis.size();
  std::size_t hq_dim = homq.basis.size();
  Vec lift = parts.tensor.section.apply(z);
  for (std::size_t b = 0; b < m.dim; ++b) {
    Vec mb(m.dim, 0);
    mb[b] = 1;
    for (std::size_t t = 0; t < hq_dim; ++t) {
      // LHS: m_b (x) f_t
      Vec lhs(m.dim * hq_dim, 0);
      lhs[b * hq_dim + t] = 1;
      Vec lhs_q = tq.projection.apply(lhs);
      // RHS: sum_i m_i (x) (?)f_i . ((m_b)f_t)
      Vec qv = homq.basis[t].apply(mb);
      Mat lam_q = lambda_into(q, qv);
      Vec acc(m.dim * hq_dim, 0);
      for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t u = 0; u < star_dim; ++u) {
          std::uint32_t c = lift[i * star_dim + u];
          if (c == 0) continue;
          Vec coords = homq.coords_of(f, lam_q * parts.star.basis[u]);
          for (std::size_t k = 0; k < hq_dim; ++k)
            acc[i * hq_dim + k] = f.add(acc[i * hq_dim + k], f.mul(c, coords[k]));
        }
      if (lhs_q != tq.projection.apply(acc)) return false;
    }
  }
  return true;
}

CoinductionReport analyze_coinduction(const Module& m) {
  require_bimodule(m);
  const PrimeField& f = m.field;
  CoinductionParts parts = coinduction_parts(m);
  Subspace inv = invariants(parts.tensor.result);

  // One affine system: z in the invariant space with (4.14) for every basis m.
  std::size_t rows = parts.m_endo.result.dim * m.dim;
  Mat sys(f, rows, inv.dim());
  for (std::size_t u = 0; u < inv.dim(); ++u) {
    Vec lift = parts.tensor.section.apply(inv.basis[u]);
    Vec col;
    col.reserve(rows);
    for (std::size_t b = 0; b < m.dim; ++b) {
      Vec part = push_414(m, parts, lift, b);
      col.insert(col.end(), part.begin(), part.end());
    }
    sys.set_column(u, col);
  }
  Vec rhs;
  rhs.reserve(rows);
  for (std::size_t b = 0; b < m.dim; ++b) {
    Vec part = rhs_414(m, parts, b);
    rhs.insert(rhs.end(), part.begin(), part.end());
  }
  auto x = solve_affine(sys, rhs);
  CoinductionReport rep;
  rep.naturally_full = x.has_value();
  if (x) {
    Vec z(parts.tensor.result.dim, 0);
    for (std::size_t u = 0; u < inv.dim(); ++u) {
      if ((*x)[u] == 0) continue;
      z = vec_add(f, z, vec_scale(f, (*x)[u], inv.basis[u]));
    }
    if (!holds_414(m, parts, z)) throw WitnessViolation("coinduction witness fails (4.14)");
    rep.witness_z = std::move(z);
  }
  return rep;
}

InductionReport analyze_induction(const Module& m) {
  require_bimodule(m);
  const PrimeField& f = m.field;
  if (!fgp_dual_basis(m).has_value()) {
    throw NotProjective("analyze_induction: M is not finitely generated projective over S");
  }
  EndAlgebra ea = endomorphism_algebra(m);
  const FDAlgebra& a = ea.algebra;
  const AlgebraMorphism& chi = *ea.chi;
  const FDAlgebra& r = chi.source;

  // A = End_S(M) as an R-bimodule through chi and the A-multiplication.
  Module amod{f, a.dim, r, r, {}, {}};
  for (std::size_t g = 0; g < r.dim; ++g) {
    Vec eg(r.dim, 0);
    eg[g] = 1;
    Vec img = chi.apply(eg);
    amod.left_action.push_back(a.left_mult(img));
    amod.right_action.push_back(a.right_mult(img));
  }

  HomSpace cands = hom_space(amod, bimodule_regular(r), Sided::Both);
  std::vector<Vec> cols;
  for (const Mat& h : cands.basis) cols.push_back(vectorize(chi.matrix * h));
  Mat sys = Mat::from_columns(f, cols, a.dim * a.dim);
  auto x = solve_affine(sys, vectorize(Mat::identity(f, a.dim)));

  InductionReport rep;
  rep.naturally_full = x.has_value();
  if (x) {
    Mat e_map = cands.matrix_of(f, *x);
    rep.witness_E = e_map;
    Vec e = e_map.apply(a.unit);
    rep.central_idempotent_e = e;
    verify_projection_structure(r, chi.matrix, a.dim, e, "induction witness");
  }
  return rep;
}

bool counit_bijective(const Module& m, const Module& q) {
  const PrimeField& f = m.field;
  HomModule homq = hom_left_as_module(m, q);
  TensorChain tq = tensor_over(m, homq.module);
  Mat eval(f, q.dim, m.dim * homq.basis.size());
  for (std::size_t i = 0; i < m.dim; ++i) {
    Vec mi(m.dim, 0);
    mi[i] = 1;
    for (std::size_t t = 0; t < homq.basis.size(); ++t)
      eval.set_column(i * homq.basis.size() + t, homq.basis[t].apply(mi));
  }
  Mat eps = eval * tq.section;
  return tq.result.dim == q.dim && rank(eps) == q.dim;
}

BimoduleStructureReport structural_consequences(const Module& m, const std::optional<Vec>& witness_z) {
  require_bimodule(m);
  const PrimeField& f = m.field;
  const FDAlgebra& s = *m.left;
  BimoduleStructureReport rep;

  rep.M_generator = is_generator(m);
  EndAlgebra ea = endomorphism_algebra(m);
  rep.chi_epi = is_ring_epimorphism(*ea.chi).is_epi;

  if (witness_z) {
    CoinductionParts parts = coinduction_parts(m);
    Vec lift = parts.tensor.section.apply(*witness_z);
    // e = sum (m_i)f_i
    Vec e(s.dim, 0);
    std::size_t star_dim = parts.star.basis.size();
    for (std::size_t i = 0; i < m.dim; ++i) {
      Vec mi(m.dim, 0);
      mi[i] = 1;
      for (std::size_t t = 0; t < star_dim; ++t) {
        std::uint32_t c = lift[i * star_dim + t];
        if (c == 0) continue;
        e = vec_add(f, e, vec_scale(f, c, parts.star.basis[t].apply(mi)));
      }
    }
    if (s.product(e, e) != e) throw WitnessViolation("Prop 3.9: e is not idempotent");
    if (!(s.left_mult(e) == s.right_mult(e))) throw WitnessViolation("Prop 3.9: e is not central");
    Mat le = m.left_act(e);
    for (std::size_t j = 0; j < s.dim; ++j) {
      Vec ej(s.dim, 0);
      ej[j] = 1;
      Mat lj = m.left_action[j];
      if (!(lj == lj * le)) throw WitnessViolation("Prop 3.9: sm != sem");
      if (!(lj * le == le * lj * le)) throw WitnessViolation("Prop 3.9: sem != esem");
    }
    rep.central_idempotent_e_of_S = e;

    // S_1 = eSe with unit e; M is a unital S_1-module by sm = sem = esem.
    Mat ese = s.left_mult(e) * s.right_mult(e);
    RrefResult col = rref(ese.transpose());
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < col.rank; ++i) basis.push_back(col.rref.row(i));
    Mat incl = Mat::from_columns(f, basis, s.dim);
    FDAlgebra s1{f, basis.size(), std::vector<Vec>(basis.size() * basis.size()), {}};
    auto coords = [&](const Vec& v) {
      auto c = solve_affine(incl, v);
      if (!c) throw WitnessViolation("Prop 3.9: eSe is not closed under multiplication");
      return *c;
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        s1.mul[i * basis.size() + j] = coords(s.product(basis[i], basis[j]));
    s1.unit = coords(e);
    Module m1{f, m.dim, s1, std::nullopt, {}, {}};
    for (std::size_t i = 0; i < basis.size(); ++i) m1.left_action.push_back(m.left_act(basis[i]));
    rep.M_generator_over_eSe = is_generator(m1);
    if (!*rep.M_generator_over_eSe)
      throw WitnessViolation("Prop 3.9: M does not generate over eSe");
  }

  if (rep.M_generator && rep.chi_epi) {
    bool ok = counit_bijective(m, left_regular(s)) && counit_bijective(m, forget_right(m));
    rep.fully_faithful_G = ok;
  }
  return rep;
}

BimoduleFunctorReport analyze_bimodule(const Module& m) {
  BimoduleFunctorReport rep;
  rep.coinduction = analyze_coinduction(m);
  try {
    rep.induction = analyze_induction(m);
    rep.induction_applicable = true;
  } catch (const NotProjective&) {
    rep.induction_applicable = false;
  }
  rep.structure = structural_consequences(m, rep.coinduction.witness_z);
  return rep;
}

}  // namespace natfull
