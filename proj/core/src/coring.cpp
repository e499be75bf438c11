#include "natfull/coring.hpp"

#include <algorithm>

namespace natfull {

namespace {

// R (x)_K M -> M, (r, m) -> r m.
Mat left_act_map(const Module& m) {
  const FDAlgebra& a = *m.left;
  Mat r(m.field, m.dim, a.dim * m.dim);
  for (std::size_t g = 0; g < a.dim; ++g)
    for (std::size_t j = 0; j < m.dim; ++j)
      r.set_column(g * m.dim + j, m.left_action[g].column(j));
  return r;
}

// M (x)_K R -> M, (m, r) -> m r.
Mat right_act_map(const Module& m) {
  const FDAlgebra& a = *m.right;
  Mat r(m.field, m.dim, m.dim * a.dim);
  for (std::size_t j = 0; j < m.dim; ++j)
    for (std::size_t g = 0; g < a.dim; ++g)
      r.set_column(j * a.dim + g, m.right_action[g].column(j));
  return r;
}

Vec outer_vec(const PrimeField& f, const Vec& a, const Vec& b) {
  Vec w(a.size() * b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) w[i * b.size() + j] = f.mul(a[i], b[j]);
  }
  return w;
}

void require_coring_shape(const Coring& c) {
  if (!c.carrier.left || !c.carrier.right || !(*c.carrier.left == c.base) ||
      !(*c.carrier.right == c.base)) {
    throw Error("coring: carrier must be a bimodule over the base algebra");
  }
  std::size_t d = c.carrier.dim;
  if (c.delta.rows() != d * d || c.delta.cols() != d) throw Error("coring: delta has wrong shape");
  if (c.epsilon.rows() != c.base.dim || c.epsilon.cols() != d)
    throw Error("coring: epsilon has wrong shape");
}

}  // namespace

CoringParts coring_parts(const Coring& c) {
  require_coring_shape(c);
  TensorChain cc = tensor_over(c.carrier, c.carrier);
  TensorChain ccc = tensor_chain({&c.carrier, &c.carrier, &c.carrier});
  Mat delta_q = cc.projection * c.delta;
  return CoringParts{std::move(cc), std::move(ccc), std::move(delta_q)};
}

std::vector<std::string> validate_coring(const Coring& c) {
  std::vector<std::string> bad;
  try {
    require_coring_shape(c);
  } catch (const Error& e) {
    bad.push_back(e.what());
    return bad;
  }
  const PrimeField& f = c.base.field;
  const FDAlgebra& r = c.base;
  std::size_t d = c.carrier.dim;
  CoringParts parts = coring_parts(c);

  // eps is an R-bimodule map.
  for (std::size_t a = 0; a < r.dim; ++a) {
    Vec ea(r.dim, 0);
    ea[a] = 1;
    if (!(c.epsilon * c.carrier.left_action[a] == r.left_mult(ea) * c.epsilon))
      bad.push_back("epsilon is not left R-linear at basis " + std::to_string(a));
    if (!(c.epsilon * c.carrier.right_action[a] == r.right_mult(ea) * c.epsilon))
      bad.push_back("epsilon is not right R-linear at basis " + std::to_string(a));
  }

  // delta's class is an R-bimodule map into C (x)_R C.
  for (std::size_t a = 0; a < r.dim; ++a) {
    if (!(parts.delta_q * c.carrier.left_action[a] ==
          parts.cc.result.left_action[a] * parts.delta_q))
      bad.push_back("delta is not left R-linear into the quotient at basis " + std::to_string(a));
    if (!(parts.delta_q * c.carrier.right_action[a] ==
          parts.cc.result.right_action[a] * parts.delta_q))
      bad.push_back("delta is not right R-linear into the quotient at basis " + std::to_string(a));
  }

  // coassociativity in C (x)_R C (x)_R C.
  Mat eye = Mat::identity(f, d);
  Mat lhs = parts.ccc.projection * Mat::kronecker(c.delta, eye) * c.delta;
  Mat rhs = parts.ccc.projection * Mat::kronecker(eye, c.delta) * c.delta;
  if (!(lhs == rhs)) bad.push_back("comultiplication is not coassociative");

  // counit laws.
  Mat actl = left_act_map(c.carrier);
  Mat actr = right_act_map(c.carrier);
  if (!(actl * Mat::kronecker(c.epsilon, eye) * c.delta == eye))
    bad.push_back("left counit law fails");
  if (!(actr * Mat::kronecker(eye, c.epsilon) * c.delta == eye))
    bad.push_back("right counit law fails");
  return bad;
}

std::vector<std::string> validate_comodule(const Coring& c, const Comodule& m) {
  std::vector<std::string> bad;
  const PrimeField& f = c.base.field;
  std::size_t d = c.carrier.dim;
  if (!m.module.right || !(*m.module.right == c.base)) {
    bad.push_back("comodule is not a right module over the coring base");
    return bad;
  }
  if (m.rho.rows() != m.module.dim * d || m.rho.cols() != m.module.dim) {
    bad.push_back("coaction has wrong shape");
    return bad;
  }
  TensorChain mc = tensor_over(m.module, c.carrier);
  Mat rho_q = mc.projection * m.rho;
  for (std::size_t a = 0; a < c.base.dim; ++a) {
    if (!(rho_q * m.module.right_action[a] == mc.result.right_action[a] * rho_q))
      bad.push_back("coaction is not right R-linear at basis " + std::to_string(a));
  }
  // coassociativity in M (x)_R C (x)_R C
  TensorChain mcc = tensor_chain({&m.module, &c.carrier, &c.carrier});
  Mat eyem = Mat::identity(f, m.module.dim);
  Mat eyec = Mat::identity(f, d);
  Mat lhs = mcc.projection * Mat::kronecker(m.rho, eyec) * m.rho;
  Mat rhs = mcc.projection * Mat::kronecker(eyem, c.delta) * m.rho;
  if (!(lhs == rhs)) bad.push_back("coaction is not coassociative");
  // counit law
  Mat actr = right_act_map(m.module);
  if (!(actr * Mat::kronecker(eyem, c.epsilon) * m.rho == eyem)) bad.push_back("coaction counit law fails");
  return bad;
}

Comodule regular_comodule(const Coring& c) {
  return Comodule{forget_left(c.carrier), c.delta};
}

Comodule induced_comodule(const Coring& c, const Module& n) {
  if (!n.right || !(*n.right == c.base)) throw Error("induced_comodule: not a right module over R");
  const PrimeField& f = c.base.field;
  Module c_both = c.carrier;
  TensorChain nc = tensor_over(n, c_both);
  std::size_t d = c.carrier.dim;
  Mat rho = Mat::kronecker(nc.projection, Mat::identity(f, d)) *
            Mat::kronecker(Mat::identity(f, n.dim), c.delta) * nc.section;
  return Comodule{forget_left(nc.result), rho};
}

Comodule grouplike_base_comodule(const Coring& c, const Vec& g) {
  const PrimeField& f = c.base.field;
  const FDAlgebra& r = c.base;
  std::size_t d = c.carrier.dim;
  Mat rho(f, r.dim * d, r.dim);
  for (std::size_t a = 0; a < r.dim; ++a) {
    Vec ea(r.dim, 0);
    ea[a] = 1;
    Vec ga = c.carrier.right_act(ea).apply(g);  // g a
    Vec col(r.dim * d, 0);
    for (std::size_t k = 0; k < r.dim; ++k) {
      if (r.unit[k] == 0) continue;
      for (std::size_t l = 0; l < d; ++l) col[k * d + l] = f.mul(r.unit[k], ga[l]);
    }
    rho.set_column(a, col);
  }
  return Comodule{right_regular(r), rho};
}

Mat coring_unit(const Coring& c, const Comodule& m, const TensorChain& mc) {
  return mc.projection * m.rho;
}

Mat coring_counit(const Coring& c, const Module& n, const TensorChain& nc) {
  const PrimeField& f = c.base.field;
  Mat actr = right_act_map(n);
  return actr * Mat::kronecker(Mat::identity(f, n.dim), c.epsilon) * nc.section;
}

CotensorFunctorReport analyze_cotensor_functor(const Coring& c) {
  const PrimeField& f = c.base.field;
  std::size_t d = c.carrier.dim;
  CotensorFunctorReport rep;

  // (2): z in C^R with eps(c) z = c for all basis c.
  Subspace inv = invariants(c.carrier);
  Mat sys(f, d * d, inv.dim());
  for (std::size_t u = 0; u < inv.dim(); ++u) {
    Vec col;
    col.reserve(d * d);
    for (std::size_t b = 0; b < d; ++b) {
      Vec part = c.carrier.left_act(c.epsilon.column(b)).apply(inv.basis[u]);
      col.insert(col.end(), part.begin(), part.end());
    }
    sys.set_column(u, col);
  }
  Vec rhs;
  rhs.reserve(d * d);
  for (std::size_t b = 0; b < d; ++b) {
    Vec eb(d, 0);
    eb[b] = 1;
    rhs.insert(rhs.end(), eb.begin(), eb.end());
  }
  auto x = solve_affine(sys, rhs);
  bool cond2 = x.has_value();
  if (x) {
    Vec z(d, 0);
    for (std::size_t u = 0; u < inv.dim(); ++u) {
      if ((*x)[u] == 0) continue;
      z = vec_add(f, z, vec_scale(f, (*x)[u], inv.basis[u]));
    }
    rep.witness_z = std::move(z);
  }

  // (3): bimodule map xi : R -> C with xi . eps = id_C.
  HomSpace cands = hom_space(bimodule_regular(c.base), c.carrier, Sided::Both);
  std::vector<Vec> cols;
  for (const Mat& h : cands.basis) cols.push_back(vectorize(h * c.epsilon));
  Mat sys3 = Mat::from_columns(f, cols, d * d);
  auto y = solve_affine(sys3, vectorize(Mat::identity(f, d)));
  bool cond3 = y.has_value();
  if (y) rep.xi = cands.matrix_of(f, *y);

  if (cond2 != cond3) {
    throw InconsistentCriteria("cotensor functor: conditions (2) and (3) of the criterion disagree");
  }
  rep.naturally_full = cond2;
  return rep;
}

ForgetfulFunctorReport analyze_forgetful_functor(const Coring& c) {
  std::size_t d = c.carrier.dim;
  ForgetfulFunctorReport rep;

  // (2): c eps(d) = eps(c) d on basis pairs.
  bool cond2 = true;
  for (std::size_t b = 0; b < d && cond2; ++b) {
    Vec xb(d, 0);
    xb[b] = 1;
    for (std::size_t e = 0; e < d; ++e) {
      Vec xe(d, 0);
      xe[e] = 1;
      Vec lhs = c.carrier.right_act(c.epsilon.column(e)).apply(xb);
      Vec rhs = c.carrier.left_act(c.epsilon.column(b)).apply(xe);
      if (lhs != rhs) {
        cond2 = false;
        break;
      }
    }
  }

  // (3): Delta surjective onto C (x)_R C.
  CoringParts parts = coring_parts(c);
  bool cond3 = rank(parts.delta_q) == parts.cc.result.dim;

  if (cond2 != cond3) {
    throw InconsistentCriteria("forgetful functor: conditions (2) and (3) of the criterion disagree");
  }
  rep.naturally_full = cond2;
  rep.delta_surjective = cond3;
  return rep;
}

CoringRingSide coring_to_ring(const Coring& c) {
  const PrimeField& f = c.base.field;
  const FDAlgebra& r = c.base;
  std::size_t d = c.carrier.dim;
  CotensorFunctorReport cot = analyze_cotensor_functor(c);
  if (!cot.naturally_full) {
    throw CriterionNotMet("coring_to_ring: the cotensor functor is not naturally full");
  }
  const Mat& xi = *cot.xi;
  const Vec& z = *cot.witness_z;
  if (xi.apply(r.unit) != z)
    throw WitnessViolation("coring_to_ring: xi(1) disagrees with the unique witness z");

  FDAlgebra ring{f, d, std::vector<Vec>(d * d), z};
  for (std::size_t i = 0; i < d; ++i) {
    Vec xi_vec(d, 0);
    xi_vec[i] = 1;
    for (std::size_t j = 0; j < d; ++j) {
      Vec xj(d, 0);
      xj[j] = 1;
      // c d = c eps(d), which equals xi(eps(c) eps(d))
      Vec prod = c.carrier.right_act(c.epsilon.column(j)).apply(xi_vec);
      Vec via_xi = xi.apply(r.product(c.epsilon.column(i), c.epsilon.column(j)));
      if (prod != via_xi)
        throw WitnessViolation("coring_to_ring: the two multiplication formulas disagree");
      ring.mul[i * d + j] = prod;
    }
  }
  auto bad = ring.validate();
  if (!bad.empty()) throw WitnessViolation("coring_to_ring: produced ring is invalid: " + bad.front());
  AlgebraMorphism xim{r, ring, xi};
  auto badm = xim.validate();
  if (!badm.empty())
    throw WitnessViolation("coring_to_ring: xi is not a ring morphism: " + badm.front());
  // the carrier actions are recovered by multiplication through xi
  for (std::size_t a = 0; a < r.dim; ++a) {
    Vec ea(r.dim, 0);
    ea[a] = 1;
    if (!(c.carrier.left_action[a] == ring.left_mult(xi.apply(ea))) ||
        !(c.carrier.right_action[a] == ring.right_mult(xi.apply(ea))))
      throw WitnessViolation("coring_to_ring: carrier actions do not match the ring structure");
  }
  return CoringRingSide{std::move(ring), std::move(xim), c.epsilon, c.carrier};
}

Coring ring_to_coring(const CoringRingSide& rs) {
  const PrimeField& f = rs.ring.field;
  std::size_t d = rs.ring.dim;
  // Check the naturally-full criterion on the ring side: xi . E = id_C.
  if (!(rs.xi.matrix * rs.section_E == Mat::identity(f, d))) {
    throw CriterionNotMet("ring_to_coring: E is not a section of xi");
  }
  Mat delta(f, d * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec col(d * d, 0);
    for (std::size_t k = 0; k < d; ++k) col[j * d + k] = rs.ring.unit[k];
    delta.set_column(j, col);
  }
  return Coring{rs.xi.source, rs.carrier, std::move(delta), rs.section_E};
}

bool chi_balance_identity(const Coring& c, const CoringParts& parts, const Mat& chi) {
  const PrimeField& f = c.base.field;
  std::size_t d = c.carrier.dim;
  for (std::size_t b = 0; b < d; ++b) {
    Vec xb(d, 0);
    xb[b] = 1;
    Vec db = c.delta.column(b);
    for (std::size_t e = 0; e < d; ++e) {
      Vec xe(d, 0);
      xe[e] = 1;
      Vec de = c.delta.column(e);
      // lhs = sum c_(1) chi(c_(2) (x) d)
      Vec lhs(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          std::uint32_t w = db[i * d + j];
          if (w == 0) continue;
          Vec xj(d, 0);
          xj[j] = 1;
          Vec r = chi.apply(parts.cc.projection.apply(outer_vec(f, xj, xe)));
          Vec xi_(d, 0);
          xi_[i] = 1;
          lhs = vec_add(f, lhs, vec_scale(f, w, c.carrier.right_act(r).apply(xi_)));
        }
      // rhs = sum chi(c (x) d_(1)) d_(2)
      Vec rhs(d, 0);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          std::uint32_t w = de[k * d + l];
          if (w == 0) continue;
          Vec xk(d, 0);
          xk[k] = 1;
          Vec r = chi.apply(parts.cc.projection.apply(outer_vec(f, xb, xk)));
          Vec xl(d, 0);
          xl[l] = 1;
          rhs = vec_add(f, rhs, vec_scale(f, w, c.carrier.left_act(r).apply(xl)));
        }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

DerivedChecksReport derived_checks(const Coring& c) {
  const PrimeField& f = c.base.field;
  std::size_t d = c.carrier.dim;
  DerivedChecksReport rep;
  CotensorFunctorReport cot = analyze_cotensor_functor(c);
  ForgetfulFunctorReport forg = analyze_forgetful_functor(c);
  CoringParts parts = coring_parts(c);

  rep.g_side_applicable = cot.naturally_full;
  if (cot.naturally_full) {
    if (!forg.naturally_full)
      throw WitnessViolation("derived checks: G naturally full must imply F naturally full");
    rep.fgp_left = fgp_dual_basis(forget_right(c.carrier)).has_value();
    rep.fgp_right = fgp_dual_basis(as_left_over_opposite(c.carrier)).has_value();
    if (!rep.fgp_left || !rep.fgp_right)
      throw WitnessViolation("derived checks: C must be fgp on both sides");
    // phi(h) = z h(z) on _R Hom(C, R) must be bijective (Frobenius form).
    const Vec& z = *cot.witness_z;
    HomSpace homs = hom_space(forget_right(c.carrier), left_regular(c.base), Sided::Left);
    std::vector<Vec> cols;
    for (const Mat& h : homs.basis) cols.push_back(c.carrier.right_act(h.apply(z)).apply(z));
    Mat phi = Mat::from_columns(f, cols, d);
    rep.frobenius_phi_bijective = homs.dim() == d && rank(phi) == d;
    if (!rep.frobenius_phi_bijective)
      throw WitnessViolation("derived checks: Frobenius map phi is not bijective");
  }

  rep.f_side_applicable = forg.naturally_full;
  if (forg.naturally_full) {
    // chi(c (x) d) = eps(c) eps(d) is a cointegral: chi . Delta = eps.
    Mat rmult(f, c.base.dim, c.base.dim * c.base.dim);
    for (std::size_t a = 0; a < c.base.dim; ++a)
      for (std::size_t b = 0; b < c.base.dim; ++b)
        rmult.set_column(a * c.base.dim + b, c.base.basis_product(a, b));
    Mat chi_k = rmult * Mat::kronecker(c.epsilon, c.epsilon);
    Mat chi_q = chi_k * parts.cc.section;
    rep.coseparability_chi = chi_q;
    rep.coseparability_identity = (chi_q * parts.delta_q == c.epsilon);
    if (!rep.coseparability_identity)
      throw WitnessViolation("derived checks: chi . Delta != eps");
    if (!chi_balance_identity(c, parts, chi_q))
      throw WitnessViolation("derived checks: coseparability chi fails the balance identity");
  }

  // Converse of Cor 3.13 1(1): F naturally full and eps z = 1 solvable
  // implies G naturally full.
  if (forg.naturally_full && !cot.naturally_full) {
    if (solve_affine(c.epsilon, c.base.unit).has_value())
      throw WitnessViolation("derived checks: converse of Cor 3.13 1(1) violated");
  }
  return rep;
}

std::vector<Vec> grouplikes(const Coring& c, std::uint64_t enumeration_bound) {
  const PrimeField& f = c.base.field;
  std::size_t d = c.carrier.dim;
  CoringParts parts = coring_parts(c);
  auto g0 = solve_affine(c.epsilon, c.base.unit);
  std::vector<Vec> result;
  if (!g0) return result;
  Subspace ker = kernel_basis(c.epsilon);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    count *= f.modulus();
    if (count > enumeration_bound)
      throw TooLargeToEnumerate("grouplikes: affine preimage of 1 is too large to enumerate");
  }
  for (std::uint64_t n = 0; n < count; ++n) {
    Vec g = *g0;
    std::uint64_t rem = n;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      std::uint32_t digit = static_cast<std::uint32_t>(rem % f.modulus());
      rem /= f.modulus();
      if (digit != 0) g = vec_add(f, g, vec_scale(f, digit, ker.basis[i]));
    }
    Vec lhs = parts.delta_q.apply(g);
    Vec rhs = parts.cc.projection.apply(outer_vec(f, g, g));
    if (lhs == rhs) result.push_back(std::move(g));
  }
  std::sort(result.begin(), result.end());
  return result;
}

BaseCoinvariants coinvariants_base(const Coring& c, const Vec& g) {
  const PrimeField& f = c.base.field;
  const FDAlgebra& r = c.base;
  Mat sys(f, c.carrier.dim, r.dim);
  for (std::size_t a = 0; a < r.dim; ++a) {
    Mat diff = c.carrier.left_action[a] - c.carrier.right_action[a];
    sys.set_column(a, diff.apply(g));
  }
  Subspace b_space = kernel_basis(sys);
  Mat incl = Mat::from_columns(f, b_space.basis, r.dim);
  FDAlgebra b{f, b_space.dim(), std::vector<Vec>(b_space.dim() * b_space.dim()), {}};
  auto coords = [&](const Vec& v) {
    auto x = solve_affine(incl, v);
    if (!x) throw Error("coinvariants_base: B is not closed under multiplication");
    return *x;
  };
  for (std::size_t i = 0; i < b_space.dim(); ++i)
    for (std::size_t j = 0; j < b_space.dim(); ++j)
      b.mul[i * b_space.dim() + j] = coords(r.product(b_space.basis[i], b_space.basis[j]));
  b.unit = coords(r.unit);
  return BaseCoinvariants{std::move(b_space), std::move(b), std::move(incl)};
}

Subspace coinvariants(const Coring& c, const Vec& g, const Comodule& m) {
  const PrimeField& f = c.base.field;
  std::size_t d = c.carrier.dim;
  TensorChain mc = tensor_over(m.module, c.carrier);
  Mat rho_q = mc.projection * m.rho;
  Mat ins(f, m.module.dim * d, m.module.dim);
  for (std::size_t j = 0; j < m.module.dim; ++j) {
    Vec col(m.module.dim * d, 0);
    for (std::size_t k = 0; k < d; ++k) col[j * d + k] = g[k];
    ins.set_column(j, col);
  }
  Mat diff = rho_q - mc.projection * ins;
  return kernel_basis(diff);
}

ChiConditionReport check_chi_condition(const Coring& c, const Vec& g, const Mat& chi) {
  const PrimeField& f = c.base.field;
  const FDAlgebra& r = c.base;
  CoringParts parts = coring_parts(c);
  ChiConditionReport rep;

  bool balanced = chi_balance_identity(c, parts, chi);
  Vec gg = chi.apply(parts.cc.projection.apply(outer_vec(f, g, g)));
  bool normalized = (gg == r.unit);
  rep.hypotheses_met = balanced && normalized;
  if (!rep.hypotheses_met) return rep;

  // t(r) = chi(g r (x) g), valued in B.
  BaseCoinvariants bc = coinvariants_base(c, g);
  Mat t(f, r.dim, r.dim);
  for (std::size_t a = 0; a < r.dim; ++a) {
    Vec ea(r.dim, 0);
    ea[a] = 1;
    Vec gr = c.carrier.right_act(ea).apply(g);
    t.set_column(a, chi.apply(parts.cc.projection.apply(outer_vec(f, gr, g))));
  }

  // alpha_N : N -> (N (x)_B R)^{co C} must be inverted by
  // theta(n (x) r) = n t(r), for N in {B, R as a right B-module}.
  AlgebraMorphism iota{bc.b, r, bc.inclusion};
  if (!iota.validate().empty()) throw Error("check_chi_condition: B inclusion invalid");
  Module r_as_b_r = left_module_via(bimodule_regular(r), iota);

  auto alpha_check = [&](const Module& n) -> bool {
    TensorChain t_nr = tensor_over(n, r_as_b_r);
    // coaction n (x) r -> n (x) 1 (x) g r
    std::size_t d = c.carrier.dim;
    Mat rho_r(f, r.dim * d, r.dim);
    for (std::size_t a = 0; a < r.dim; ++a) {
      Vec ea(r.dim, 0);
      ea[a] = 1;
      Vec ga = c.carrier.right_act(ea).apply(g);
      Vec col(r.dim * d, 0);
      for (std::size_t k = 0; k < r.dim; ++k) {
        if (r.unit[k] == 0) continue;
        for (std::size_t l = 0; l < d; ++l) col[k * d + l] = f.mul(r.unit[k], ga[l]);
      }
      rho_r.set_column(a, col);
    }
    Mat rho_t = Mat::kronecker(t_nr.projection, Mat::identity(f, d)) *
                Mat::kronecker(Mat::identity(f, n.dim), rho_r) * t_nr.section;
    Comodule cm{forget_left(t_nr.result), rho_t};
    Subspace coinv = coinvariants(c, g, cm);
    // alpha columns: n (x) 1 in coinvariant coordinates
    Mat alpha(f, coinv.dim(), n.dim);
    for (std::size_t j = 0; j < n.dim; ++j) {
      Vec lift(n.dim * r.dim, 0);
      for (std::size_t k = 0; k < r.dim; ++k) lift[j * r.dim + k] = r.unit[k];
      Vec v = t_nr.projection.apply(lift);
      auto coords = coinv.coordinates(f, v);
      if (!coords) return false;
      alpha.set_column(j, *coords);
    }
    // theta(n (x) r) = n t(r) via the B-coordinates of t(r)
    Mat theta_big(f, n.dim, n.dim * r.dim);
    for (std::size_t j = 0; j < n.dim; ++j) {
      Vec xj(n.dim, 0);
      xj[j] = 1;
      for (std::size_t a = 0; a < r.dim; ++a) {
        auto tb = solve_affine(bc.inclusion, t.column(a));
        if (!tb) return false;  // t must land in B
        theta_big.set_column(j * r.dim + a, n.right_act(*tb).apply(xj));
      }
    }
    Mat coinv_basis = Mat::from_columns(f, coinv.basis, t_nr.result.dim);
    Mat theta = theta_big * t_nr.section * coinv_basis;
    // theta . alpha = id_N and alpha . theta = id on the coinvariants
    return (theta * alpha).is_identity() && (alpha * theta).is_identity();
  };

  bool ok = alpha_check(right_regular(bc.b)) && alpha_check(right_module_via(right_regular(r), iota));
  rep.alpha_bijective = ok;
  return rep;
}

HomSpace comodule_hom(const Coring& c, const Comodule& m, const Comodule& n) {
  const PrimeField& f = c.base.field;
  std::size_t d = c.carrier.dim;
  TensorChain nc = tensor_over(n.module, c.carrier);
  Mat rho_n_q = nc.projection * n.rho;
  std::vector<Vec> rows;
  // right R-linearity
  for (std::size_t a = 0; a < c.base.dim; ++a) {
    Mat lhs = Mat::kronecker(Mat::identity(f, n.module.dim), m.module.right_action[a].transpose()) -
              Mat::kronecker(n.module.right_action[a], Mat::identity(f, m.module.dim));
    for (std::size_t r = 0; r < lhs.rows(); ++r) rows.push_back(lhs.row(r));
  }
  // colinearity: pi . (f (x) C) . rho_M = pi . rho_N . f, assembled on the
  // elementary-matrix basis of candidate maps.
  std::size_t vars = n.module.dim * m.module.dim;
  std::vector<Vec> colin_cols;
  for (std::size_t i = 0; i < n.module.dim; ++i)
    for (std::size_t j = 0; j < m.module.dim; ++j) {
      Mat e(f, n.module.dim, m.module.dim);
      e.at(i, j) = 1;
      Mat diff = nc.projection * Mat::kronecker(e, Mat::identity(f, d)) * m.rho - rho_n_q * e;
      colin_cols.push_back(vectorize(diff));
    }
  if (!colin_cols.empty()) {
    Mat colin = Mat::from_columns(f, colin_cols, colin_cols[0].size());
    for (std::size_t r = 0; r < colin.rows(); ++r) {
      Vec row = colin.row(r);
      if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
  }
  HomSpace h;
  h.source_dim = m.module.dim;
  h.target_dim = n.module.dim;
  Subspace ker;
  if (rows.empty()) {
    ker.ambient_dim = vars;
    for (std::size_t i = 0; i < vars; ++i) {
      Vec v(vars, 0);
      v[i] = 1;
      ker.basis.push_back(v);
    }
    h.constraints_rank = 0;
  } else {
    Mat sys = Mat::from_rows(f, rows, vars);
    h.constraints_rank = rank(sys);
    ker = kernel_basis(sys);
  }
  for (const Vec& v : ker.basis) h.basis.push_back(unvectorize(f, v, n.module.dim, m.module.dim));
  return h;
}

Coring trivial_coring(const FDAlgebra& r) {
  const PrimeField& f = r.field;
  std::size_t d = r.dim;
  Mat delta(f, d * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec col(d * d, 0);
    for (std::size_t k = 0; k < d; ++k) col[j * d + k] = r.unit[k];
    delta.set_column(j, col);
  }
  return Coring{r, bimodule_regular(r), std::move(delta), Mat::identity(f, d)};
}

Coring sweedler_coring(const AlgebraMorphism& phi) {
  const FDAlgebra& s = phi.target;
  const PrimeField& f = s.field;
  Module sr = right_module_via(bimodule_regular(s), phi);
  Module rs = left_module_via(bimodule_regular(s), phi);
  TensorChain t = tensor_over(sr, rs);
  std::size_t d = t.result.dim;
  // u(a) = class of a (x) 1, v(a') = class of 1 (x) a'
  Mat u(f, d, s.dim), v(f, d, s.dim);
  for (std::size_t a = 0; a < s.dim; ++a) {
    Vec ea(s.dim, 0);
    ea[a] = 1;
    u.set_column(a, t.projection.apply(outer_vec(f, ea, s.unit)));
    v.set_column(a, t.projection.apply(outer_vec(f, s.unit, ea)));
  }
  Mat delta = Mat::kronecker(u, v) * t.section;
  Mat mult(f, s.dim, s.dim * s.dim);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) mult.set_column(i * s.dim + j, s.basis_product(i, j));
  Mat eps = mult * t.section;
  return Coring{s, t.result, std::move(delta), std::move(eps)};
}

Coring comatrix_coring(const Module& m) {
  if (!m.left || !m.right) throw Error("comatrix_coring: (S,R)-bimodule required");
  const PrimeField& f = m.field;
  auto db = fgp_dual_basis(m);
  if (!db) throw NotProjective("comatrix_coring: M is not fgp over S");
  HomModule star = star_module(m);
  TensorChain t = tensor_over(m, star.module);
  std::size_t d = t.result.dim;
  std::size_t sd = star.basis.size();
  Mat dsum(f, d * d, m.dim * sd);
  for (std::size_t i = 0; i < db->generators.size(); ++i) {
    Vec dual_coords = star.coords_of(f, db->duals[i]);
    Mat a_i(f, d, m.dim), b_i(f, d, sd);
    for (std::size_t b = 0; b < m.dim; ++b) {
      Vec xb(m.dim, 0);
      xb[b] = 1;
      a_i.set_column(b, t.projection.apply(outer_vec(f, xb, dual_coords)));
    }
    for (std::size_t u = 0; u < sd; ++u) {
      Vec eu(sd, 0);
      eu[u] = 1;
      b_i.set_column(u, t.projection.apply(outer_vec(f, db->generators[i], eu)));
    }
    dsum = dsum + Mat::kronecker(a_i, b_i);
  }
  Mat delta = dsum * t.section;
  Mat ev(f, (*m.left).dim, m.dim * sd);
  for (std::size_t b = 0; b < m.dim; ++b) {
    Vec xb(m.dim, 0);
    xb[b] = 1;
    for (std::size_t u = 0; u < sd; ++u) ev.set_column(b * sd + u, star.basis[u].apply(xb));
  }
  Mat eps = ev * t.section;
  return Coring{*m.left, t.result, std::move(delta), std::move(eps)};
}

}  // namespace natfull
