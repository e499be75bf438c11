#include "natfull/coring_morphism.hpp"

#include <functional>

namespace natfull {

namespace {

Vec outer_vec(const PrimeField& f, const Vec& a, const Vec& b) {
  Vec w(a.size() * b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) w[i * b.size() + j] = f.mul(a[i], b[j]);
  }
  return w;
}

Mat right_act_map(const Module& m) {
  const FDAlgebra& a = *m.right;
  Mat r(m.field, m.dim, m.dim * a.dim);
  for (std::size_t j = 0; j < m.dim; ++j)
    for (std::size_t g = 0; g < a.dim; ++g)
      r.set_column(j * a.dim + g, m.right_action[g].column(j));
  return r;
}

}  // namespace

std::vector<std::string> validate_coring_morphism(const CoringMorphism& m) {
  std::vector<std::string> bad;
  const Coring& c = m.source;
  const Coring& d = m.target;
  if (!(m.phi.source == c.base)) bad.push_back("phi source is not the source coring base");
  if (!(m.phi.target == d.base)) bad.push_back("phi target is not the target coring base");
  if (!bad.empty()) return bad;
  if (m.Phi.rows() != d.dim() || m.Phi.cols() != c.dim()) {
    bad.push_back("Phi has wrong shape");
    return bad;
  }
  auto badphi = m.phi.validate();
  bad.insert(bad.end(), badphi.begin(), badphi.end());
  if (!bad.empty()) return bad;
  const FDAlgebra& r = c.base;
  // Phi is R-bilinear into D restricted along phi.
  for (std::size_t a = 0; a < r.dim; ++a) {
    Vec ea(r.dim, 0);
    ea[a] = 1;
    Vec img = m.phi.apply(ea);
    if (!(m.Phi * c.carrier.left_action[a] == d.carrier.left_act(img) * m.Phi))
      bad.push_back("Phi is not left R-linear at basis " + std::to_string(a));
    if (!(m.Phi * c.carrier.right_action[a] == d.carrier.right_act(img) * m.Phi))
      bad.push_back("Phi is not right R-linear at basis " + std::to_string(a));
  }
  // counit square
  if (!(m.phi.matrix * c.epsilon == d.epsilon * m.Phi)) bad.push_back("counit square does not commute");
  // comultiplication square through omega : D (x)_R D -> D (x)_S D
  CoringParts dparts = coring_parts(d);
  Mat lhs = dparts.cc.projection * Mat::kronecker(m.Phi, m.Phi) * c.delta;
  Mat rhs = dparts.cc.projection * d.delta * m.Phi;
  if (!(lhs == rhs)) bad.push_back("comultiplication square does not commute");
  return bad;
}

CormorParts cormor_parts(const CoringMorphism& m) {
  const FDAlgebra& s = m.phi.target;
  const PrimeField& f = s.field;
  const Coring& c = m.source;
  const Coring& d = m.target;
  Module s_sr = right_module_via(bimodule_regular(s), m.phi);
  Module s_rs = left_module_via(bimodule_regular(s), m.phi);
  TensorChain l = tensor_over(s_sr, c.carrier);
  std::size_t sd = s.dim, cd = c.dim(), ld = l.result.dim;

  Mat rho_right = Mat::kronecker(l.projection, Mat::identity(f, cd)) *
                  Mat::kronecker(Mat::identity(f, sd), c.delta) * l.section;

  // left D-coaction: s (x) c -> s Phi(c_(1)) (x)_S (1 (x) c_(2))
  Mat u(f, d.dim(), sd * cd);
  for (std::size_t a = 0; a < sd; ++a) {
    Vec ea(sd, 0);
    ea[a] = 1;
    Mat act = d.carrier.left_act(ea);
    for (std::size_t i = 0; i < cd; ++i) u.set_column(a * cd + i, act.apply(m.Phi.column(i)));
  }
  Mat v(f, ld, cd);
  for (std::size_t j = 0; j < cd; ++j) {
    Vec xj(cd, 0);
    xj[j] = 1;
    v.set_column(j, l.projection.apply(outer_vec(f, s.unit, xj)));
  }
  Mat rho_left = Mat::kronecker(u, v) *
                 Mat::kronecker(Mat::identity(f, sd), c.delta) * l.section;

  return CormorParts{std::move(s_sr), std::move(s_rs), std::move(l), std::move(rho_right),
                     std::move(rho_left)};
}

CotensorSpace cotensor(const CoringMorphism& m, const Comodule& n) {
  const PrimeField& f = m.phi.target.field;
  CormorParts parts = cormor_parts(m);
  const Coring& c = m.source;
  std::size_t cd = c.dim(), ld = parts.l.result.dim, nd = n.module.dim;

  TensorChain x = tensor_over(n.module, parts.l.result);
  TensorChain y = tensor_chain({&n.module, &m.target.carrier, &parts.l.result});
  Mat f_map = y.projection * Mat::kronecker(n.rho, Mat::identity(f, ld)) * x.section;
  Mat g_map = y.projection * Mat::kronecker(Mat::identity(f, nd), parts.rho_l_left) * x.section;
  Subspace k = kernel_basis(f_map - g_map);
  Mat incl = Mat::from_columns(f, k.basis, x.result.dim);

  Module kmod{f, k.dim(), x.result.left, x.result.right, {}, {}};
  auto restrict = [&](const Mat& act) {
    auto coords = solve_affine_columns(incl, act * incl);
    if (!coords) throw CoactionNotInduced("cotensor: equalizer is not action-stable");
    return *coords;
  };
  if (x.result.left) {
    for (const Mat& act : x.result.left_action) kmod.left_action.push_back(restrict(act));
  }
  if (x.result.right) {
    for (const Mat& act : x.result.right_action) kmod.right_action.push_back(restrict(act));
  }

  // induced right C-coaction, solved through K (x)_R C -> X (x)_R C
  Mat rho_x = Mat::kronecker(x.projection, Mat::identity(f, cd)) *
              Mat::kronecker(Mat::identity(f, nd), parts.rho_l_right) * x.section;
  TensorChain xc = tensor_over(x.result, c.carrier);
  TensorChain kc = tensor_over(kmod, c.carrier);
  Mat j = xc.projection * Mat::kronecker(incl, Mat::identity(f, cd)) * kc.section;
  Mat w = xc.projection * rho_x * incl;
  auto y_sol = solve_affine_columns(j, w);
  if (!y_sol) throw CoactionNotInduced("cotensor: no induced coaction on the equalizer");
  Mat rho_k = kc.section * *y_sol;

  // Remark-style closure: the induced coaction must satisfy the comodule axioms.
  Comodule kcom{kmod, rho_k};
  auto bad = validate_comodule(c, kcom);
  if (!bad.empty()) throw CoactionNotInduced("cotensor: induced coaction violates " + bad.front());

  return CotensorSpace{std::move(kmod), std::move(incl), std::move(rho_k), std::move(x)};
}

InducedDComodule apply_F(const CoringMorphism& m, const Comodule& mc) {
  const FDAlgebra& s = m.phi.target;
  const PrimeField& f = s.field;
  const Coring& c = m.source;
  const Coring& d = m.target;
  Module s_rs = left_module_via(bimodule_regular(s), m.phi);
  TensorChain chain = tensor_over(mc.module, s_rs);
  std::size_t md = mc.module.dim, sd = s.dim, cd = c.dim();

  Mat u(f, chain.result.dim, md);
  for (std::size_t b = 0; b < md; ++b) {
    Vec xb(md, 0);
    xb[b] = 1;
    u.set_column(b, chain.projection.apply(outer_vec(f, xb, s.unit)));
  }
  Mat v(f, d.dim(), cd * sd);
  for (std::size_t i = 0; i < cd; ++i) {
    for (std::size_t a = 0; a < sd; ++a) {
      Vec ea(sd, 0);
      ea[a] = 1;
      v.set_column(i * sd + a, d.carrier.right_act(ea).apply(m.Phi.column(i)));
    }
  }
  Mat rho = Mat::kronecker(u, v) * Mat::kronecker(mc.rho, Mat::identity(f, sd)) * chain.section;
  return InducedDComodule{Comodule{chain.result, std::move(rho)}, std::move(chain)};
}

Mat cormor_unit(const CoringMorphism& m, const Comodule& mc, const InducedDComodule& fm,
                const CotensorSpace& gfm) {
  const FDAlgebra& s = m.phi.target;
  const PrimeField& f = s.field;
  const Coring& c = m.source;
  std::size_t md = mc.module.dim, cd = c.dim();

  Mat u(f, fm.chain.result.dim, md);
  for (std::size_t b = 0; b < md; ++b) {
    Vec xb(md, 0);
    xb[b] = 1;
    u.set_column(b, fm.chain.projection.apply(outer_vec(f, xb, s.unit)));
  }
  // v : C -> L, c -> class of 1 (x) c, recomputed against gfm's ambient.
  std::size_t ld = gfm.x.factor_dims[1];
  CormorParts parts = cormor_parts(m);
  if (parts.l.result.dim != ld) throw Error("cormor_unit: chain mismatch");
  Mat v(f, ld, cd);
  for (std::size_t j = 0; j < cd; ++j) {
    Vec xj(cd, 0);
    xj[j] = 1;
    v.set_column(j, parts.l.projection.apply(outer_vec(f, s.unit, xj)));
  }
  Mat eta_x = gfm.x.projection * Mat::kronecker(u, v) * mc.rho;
  auto coords = solve_affine_columns(gfm.inclusion, eta_x);
  if (!coords) throw Error("cormor_unit: eta does not land in the cotensor");
  return *coords;
}

Mat cormor_counit(const CoringMorphism& m, const Comodule& n, const CotensorSpace& gn,
                  const InducedDComodule& fgn) {
  const FDAlgebra& s = m.phi.target;
  const PrimeField& f = s.field;
  const Coring& c = m.source;
  std::size_t sd = s.dim, cd = c.dim(), nd = n.module.dim;
  CormorParts parts = cormor_parts(m);

  // mult3 : S (x) C (x) S -> S, (s, c, s') -> s phi(eps_C(c)) s'
  Mat mult3(f, sd, sd * cd * sd);
  for (std::size_t a = 0; a < sd; ++a) {
    Vec ea(sd, 0);
    ea[a] = 1;
    for (std::size_t i = 0; i < cd; ++i) {
      Vec mid = m.phi.apply(c.epsilon.column(i));
      Vec left = s.product(ea, mid);
      for (std::size_t b = 0; b < sd; ++b) {
        Vec eb(sd, 0);
        eb[b] = 1;
        mult3.set_column((a * cd + i) * sd + b, s.product(left, eb));
      }
    }
  }
  Mat act_n = right_act_map(n.module);
  Mat lift = Mat::kronecker(Mat::kronecker(Mat::identity(f, nd), parts.l.section), Mat::identity(f, sd)) *
             Mat::kronecker(gn.x.section, Mat::identity(f, sd)) *
             Mat::kronecker(gn.inclusion, Mat::identity(f, sd)) * fgn.chain.section;
  return act_n * Mat::kronecker(Mat::identity(f, nd), mult3) * lift;
}

namespace {

// Kernel of a family of linear constraints on maps target_dim x source_dim,
// each given as an evaluator returning a matrix that must vanish.
std::vector<Mat> matrix_kernel(const PrimeField& f, std::size_t target_dim, std::size_t source_dim,
                               const std::vector<std::function<Mat(const Mat&)>>& constraints) {
  std::size_t vars = target_dim * source_dim;
  std::vector<Vec> cols(vars);
  std::size_t out_len = 0;
  for (std::size_t i = 0; i < target_dim; ++i)
    for (std::size_t j = 0; j < source_dim; ++j) {
      Mat e(f, target_dim, source_dim);
      e.at(i, j) = 1;
      Vec col;
      for (const auto& cons : constraints) {
        Vec part = vectorize(cons(e));
        col.insert(col.end(), part.begin(), part.end());
      }
      cols[i * source_dim + j] = std::move(col);
      out_len = cols[i * source_dim + j].size();
    }
  std::vector<Mat> basis;
  if (vars == 0) return basis;
  Mat sys = Mat::from_columns(f, cols, out_len);
  Subspace ker = kernel_basis(sys);
  for (const Vec& v : ker.basis) basis.push_back(unvectorize(f, v, target_dim, source_dim));
  return basis;
}

}  // namespace

FNatFullReport analyze_F_naturally_full(const CoringMorphism& m) {
  const PrimeField& f = m.phi.target.field;
  const Coring& c = m.source;
  const FDAlgebra& r = c.base;
  std::size_t cd = c.dim();

  // C as the regular bicomodule (carrier keeps both R-actions).
  Comodule creg{c.carrier, c.delta};
  InducedDComodule fc = apply_F(m, creg);
  CotensorSpace gfc = cotensor(m, fc.comodule);
  Mat eta = cormor_unit(m, creg, fc, gfc);
  std::size_t kd = gfc.module.dim;

  // left C-coaction on GFC, through the first tensor factor
  Mat op = Mat::kronecker(Mat::identity(f, cd),
                          gfc.x.projection * Mat::kronecker(fc.chain.projection,
                                                            Mat::identity(f, gfc.x.factor_dims[1]))) *
           Mat::kronecker(c.delta, Mat::identity(f, m.phi.target.dim * gfc.x.factor_dims[1])) *
           Mat::kronecker(fc.chain.section, Mat::identity(f, gfc.x.factor_dims[1])) * gfc.x.section *
           gfc.inclusion;
  auto leftco_coords =
      solve_affine_columns(Mat::kronecker(Mat::identity(f, cd), gfc.inclusion), op);
  if (!leftco_coords) throw Error("analyze_F: left coaction does not restrict to the cotensor");
  Mat leftco = *leftco_coords;  // K -> C (x)_K K

  CoringParts cparts = coring_parts(c);
  std::vector<std::function<Mat(const Mat&)>> constraints;
  for (std::size_t a = 0; a < r.dim; ++a) {
    Mat lk = gfc.module.left_action[a], rk = gfc.module.right_action[a];
    Mat lc = c.carrier.left_action[a], rc = c.carrier.right_action[a];
    constraints.push_back([lk, lc](const Mat& nu) { return nu * lk - lc * nu; });
    constraints.push_back([rk, rc](const Mat& nu) { return nu * rk - rc * nu; });
  }
  Mat pi_cc = cparts.cc.projection;
  Mat delta_q = cparts.delta_q;
  Mat rho_k = gfc.rho;
  std::size_t cdim = cd;
  constraints.push_back([pi_cc, delta_q, rho_k, cdim, &f2 = f](const Mat& nu) {
    return pi_cc * Mat::kronecker(nu, Mat::identity(f2, cdim)) * rho_k - delta_q * nu;
  });
  constraints.push_back([pi_cc, delta_q, leftco, cdim, &f2 = f](const Mat& nu) {
    return pi_cc * Mat::kronecker(Mat::identity(f2, cdim), nu) * leftco - delta_q * nu;
  });

  std::vector<Mat> cands = matrix_kernel(f, cd, kd, constraints);
  std::vector<Vec> cols;
  for (const Mat& nu : cands) cols.push_back(vectorize(eta * nu));
  Mat sys = Mat::from_columns(f, cols, kd * kd);
  auto x = solve_affine(sys, vectorize(Mat::identity(f, kd)));

  FNatFullReport rep;
  rep.naturally_full = x.has_value();
  if (x) {
    Mat nu(f, cd, kd);
    for (std::size_t t = 0; t < cands.size(); ++t) {
      if ((*x)[t] == 0) continue;
      nu = nu + cands[t].scaled((*x)[t]);
    }
    rep.witness_nu = std::move(nu);
  }
  return rep;
}

GNatFullReport analyze_G_naturally_full(const CoringMorphism& m) {
  const FDAlgebra& s = m.phi.target;
  const PrimeField& f = s.field;
  const Coring& c = m.source;
  const Coring& d = m.target;
  std::size_t sd = s.dim, cd = c.dim(), dd = d.dim();

  Module s_sr = right_module_via(bimodule_regular(s), m.phi);
  Module s_rs = left_module_via(bimodule_regular(s), m.phi);
  TensorChain t = tensor_chain({&s_sr, &c.carrier, &s_rs});
  std::size_t td = t.result.dim;

  // Phi-hat : S (x)_R C (x)_R S -> D
  Mat hat(f, dd, sd * cd * sd);
  for (std::size_t a = 0; a < sd; ++a) {
    Vec ea(sd, 0);
    ea[a] = 1;
    Mat la = d.carrier.left_act(ea);
    for (std::size_t i = 0; i < cd; ++i) {
      for (std::size_t b = 0; b < sd; ++b) {
        Vec eb(sd, 0);
        eb[b] = 1;
        hat.set_column((a * cd + i) * sd + b,
                       la.apply(d.carrier.right_act(eb).apply(m.Phi.column(i))));
      }
    }
  }
  Mat phihat = hat * t.section;

  // coactions on T = S (x) C (x) S
  Mat mid = Mat::kronecker(Mat::identity(f, sd),
                           Mat::kronecker(c.delta, Mat::identity(f, sd))) *
            t.section;  // T -> S (x) C (x) C (x) S
  Mat ul(f, dd, sd * cd), wl(f, td, cd * sd);
  for (std::size_t a = 0; a < sd; ++a) {
    Vec ea(sd, 0);
    ea[a] = 1;
    Mat la = d.carrier.left_act(ea);
    for (std::size_t i = 0; i < cd; ++i) ul.set_column(a * cd + i, la.apply(m.Phi.column(i)));
  }
  for (std::size_t j = 0; j < cd; ++j) {
    Vec xj(cd, 0);
    xj[j] = 1;
    for (std::size_t b = 0; b < sd; ++b) {
      Vec eb(sd, 0);
      eb[b] = 1;
      wl.set_column(j * sd + b, t.projection.apply(outer_vec(f, s.unit, outer_vec(f, xj, eb))));
    }
  }
  Mat leftco = Mat::kronecker(ul, wl) * mid;  // T -> D (x)_K T

  Mat wr(f, td, sd * cd), ur(f, dd, cd * sd);
  for (std::size_t a = 0; a < sd; ++a) {
    Vec ea(sd, 0);
    ea[a] = 1;
    for (std::size_t i = 0; i < cd; ++i) {
      Vec xi(cd, 0);
      xi[i] = 1;
      wr.set_column(a * cd + i, t.projection.apply(outer_vec(f, ea, outer_vec(f, xi, s.unit))));
    }
  }
  for (std::size_t j = 0; j < cd; ++j) {
    for (std::size_t b = 0; b < sd; ++b) {
      Vec eb(sd, 0);
      eb[b] = 1;
      ur.set_column(j * sd + b, d.carrier.right_act(eb).apply(m.Phi.column(j)));
    }
  }
  Mat rightco = Mat::kronecker(wr, ur) * mid;  // T -> T (x)_K D

  TensorChain dt = tensor_over(d.carrier, t.result);
  TensorChain td_chain = tensor_over(t.result, d.carrier);

  std::vector<std::function<Mat(const Mat&)>> constraints;
  for (std::size_t a = 0; a < sd; ++a) {
    Mat ldm = d.carrier.left_action[a], rdm = d.carrier.right_action[a];
    Mat lt = t.result.left_action[a], rt = t.result.right_action[a];
    constraints.push_back([ldm, lt](const Mat& psi) { return psi * ldm - lt * psi; });
    constraints.push_back([rdm, rt](const Mat& psi) { return psi * rdm - rt * psi; });
  }
  Mat pi_dt = dt.projection, pi_td = td_chain.projection;
  Mat delta_d = d.delta;
  constraints.push_back([pi_dt, delta_d, leftco, dd, &f2 = f](const Mat& psi) {
    return pi_dt * Mat::kronecker(Mat::identity(f2, dd), psi) * delta_d - pi_dt * leftco * psi;
  });
  constraints.push_back([pi_td, delta_d, rightco, dd, &f2 = f](const Mat& psi) {
    return pi_td * Mat::kronecker(psi, Mat::identity(f2, dd)) * delta_d - pi_td * rightco * psi;
  });

  std::vector<Mat> cands = matrix_kernel(f, td, dd, constraints);
  std::vector<Vec> cols;
  for (const Mat& psi : cands) cols.push_back(vectorize(psi * phihat));
  Mat sys = Mat::from_columns(f, cols, td * td);
  auto x = solve_affine(sys, vectorize(Mat::identity(f, td)));

  GNatFullReport rep;
  rep.naturally_full = x.has_value();
  if (x) {
    Mat psi(f, td, dd);
    for (std::size_t u = 0; u < cands.size(); ++u) {
      if ((*x)[u] == 0) continue;
      psi = psi + cands[u].scaled((*x)[u]);
    }
    rep.witness_Psi = std::move(psi);
  }
  return rep;
}

CoringMorphism trivial_morphism_pair(const AlgebraMorphism& phi) {
  return CoringMorphism{trivial_coring(phi.source), trivial_coring(phi.target), phi, phi.matrix};
}

CoringMorphism counit_morphism(const Coring& c) {
  return CoringMorphism{c, trivial_coring(c.base), identity_morphism(c.base), c.epsilon};
}

}  // namespace natfull
