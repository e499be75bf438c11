#include "natfull/oracle.hpp"

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

std::vector<CatObject> modules_to_objects(std::vector<std::pair<std::string, Module>> mods) {
  std::vector<CatObject> out;
  for (auto& [label, m] : mods) out.push_back(CatObject{label, std::move(m), std::nullopt});
  return out;
}

// ---------------------------------------------------------------- scalars

class ScalarsAdjunction final : public Adjunction {
 public:
  explicit ScalarsAdjunction(AlgebraMorphism phi) : phi_(std::move(phi)) {}

  std::string name() const override { return "scalars"; }

  CatObject apply_F(const CatObject& c) const override {
    TensorChain t = extend_module(phi_, c.module);
    return CatObject{"S(x)" + c.label, std::move(t.result), std::nullopt};
  }
  CatObject apply_G(const CatObject& d) const override {
    return CatObject{d.label + "|R", left_module_via(d.module, phi_), std::nullopt};
  }
  Mat map_F(const CatObject& x, const CatObject& y, const Mat& f) const override {
    TensorChain tx = extend_module(phi_, x.module);
    TensorChain ty = extend_module(phi_, y.module);
    const PrimeField& fld = phi_.target.field;
    return ty.projection * Mat::kronecker(Mat::identity(fld, phi_.target.dim), f) * tx.section;
  }
  Mat map_G(const CatObject&, const CatObject&, const Mat& g) const override { return g; }
  Mat unit(const CatObject& c) const override {
    TensorChain t = extend_module(phi_, c.module);
    return extension_unit(phi_, c.module, t);
  }
  Mat counit(const CatObject& d) const override {
    TensorChain t = extend_module(phi_, left_module_via(d.module, phi_));
    return extension_counit(phi_, d.module, t);
  }
  std::vector<Mat> hom_source(const CatObject& x, const CatObject& y) const override {
    return hom_space(x.module, y.module, Sided::Left).basis;
  }
  std::vector<Mat> hom_target(const CatObject& x, const CatObject& y) const override {
    return hom_space(x.module, y.module, Sided::Left).basis;
  }
  std::vector<CatObject> source_family(std::uint64_t seed) const override {
    auto fam = default_left_family(phi_.source, seed, "R");
    fam.emplace_back("S restricted", left_module_via(left_regular(phi_.target), phi_));
    return modules_to_objects(std::move(fam));
  }
  std::vector<CatObject> target_family(std::uint64_t seed) const override {
    return modules_to_objects(default_left_family(phi_.target, seed + 1, "S"));
  }

 private:
  AlgebraMorphism phi_;
};

// --------------------------------------------------------------- bimodule

class BimoduleAdjunction final : public Adjunction {
 public:
  explicit BimoduleAdjunction(Module m) : m_(std::move(m)) {}

  std::string name() const override { return "bimodule"; }

  CatObject apply_F(const CatObject& c) const override {
    TensorChain t = tensor_over(m_, c.module);
    return CatObject{"M(x)" + c.label, std::move(t.result), std::nullopt};
  }
  CatObject apply_G(const CatObject& d) const override {
    HomModule h = hom_left_as_module(m_, d.module);
    return CatObject{"Hom(M," + d.label + ")", std::move(h.module), std::nullopt};
  }
  Mat map_F(const CatObject& x, const CatObject& y, const Mat& f) const override {
    TensorChain tx = tensor_over(m_, x.module);
    TensorChain ty = tensor_over(m_, y.module);
    return ty.projection * Mat::kronecker(Mat::identity(m_.field, m_.dim), f) * tx.section;
  }
  Mat map_G(const CatObject& x, const CatObject& y, const Mat& g) const override {
    HomModule hx = hom_left_as_module(m_, x.module);
    HomModule hy = hom_left_as_module(m_, y.module);
    Mat out(m_.field, hy.basis.size(), hx.basis.size());
    for (std::size_t t = 0; t < hx.basis.size(); ++t) {
      out.set_column(t, hy.coords_of(m_.field, g * hx.basis[t]));
    }
    return out;
  }
  Mat unit(const CatObject& c) const override {
    const PrimeField& f = m_.field;
    TensorChain t = tensor_over(m_, c.module);
    HomModule h = hom_left_as_module(m_, t.result);
    Mat eta(f, h.basis.size(), c.module.dim);
    for (std::size_t j = 0; j < c.module.dim; ++j) {
      Mat w(f, t.result.dim, m_.dim);
      for (std::size_t b = 0; b < m_.dim; ++b) {
        Vec lift(m_.dim * c.module.dim, 0);
        lift[b * c.module.dim + j] = 1;
        w.set_column(b, t.projection.apply(lift));
      }
      eta.set_column(j, h.coords_of(f, w));
    }
    return eta;
  }
  Mat counit(const CatObject& d) const override {
    const PrimeField& f = m_.field;
    HomModule h = hom_left_as_module(m_, d.module);
    TensorChain t = tensor_over(m_, h.module);
    Mat eval(f, d.module.dim, m_.dim * h.basis.size());
    for (std::size_t b = 0; b < m_.dim; ++b) {
      Vec xb(m_.dim, 0);
      xb[b] = 1;
      for (std::size_t u = 0; u < h.basis.size(); ++u)
        eval.set_column(b * h.basis.size() + u, h.basis[u].apply(xb));
    }
    return eval * t.section;
  }
  std::vector<Mat> hom_source(const CatObject& x, const CatObject& y) const override {
    return hom_space(x.module, y.module, Sided::Left).basis;
  }
  std::vector<Mat> hom_target(const CatObject& x, const CatObject& y) const override {
    return hom_space(x.module, y.module, Sided::Left).basis;
  }
  std::vector<CatObject> source_family(std::uint64_t seed) const override {
    return modules_to_objects(default_left_family(*m_.right, seed, "R"));
  }
  std::vector<CatObject> target_family(std::uint64_t seed) const override {
    auto fam = default_left_family(*m_.left, seed + 1, "S");
    fam.emplace_back("M itself", forget_right(m_));
    return modules_to_objects(std::move(fam));
  }

 private:
  Module m_;
};

// ----------------------------------------------------------------- coring

class CoringAdjunction final : public Adjunction {
 public:
  explicit CoringAdjunction(Coring c) : c_(std::move(c)) {}

  std::string name() const override { return "coring"; }

  CatObject apply_F(const CatObject& c) const override {
    return CatObject{"U(" + c.label + ")", c.module, std::nullopt};
  }
  CatObject apply_G(const CatObject& d) const override {
    Comodule g = induced_comodule(c_, d.module);
    return CatObject{d.label + "(x)C", std::move(g.module), std::move(g.rho)};
  }
  Mat map_F(const CatObject&, const CatObject&, const Mat& f) const override { return f; }
  Mat map_G(const CatObject& x, const CatObject& y, const Mat& g) const override {
    const PrimeField& f = c_.base.field;
    TensorChain tx = tensor_over(x.module, c_.carrier);
    TensorChain ty = tensor_over(y.module, c_.carrier);
    return ty.projection * Mat::kronecker(g, Mat::identity(f, c_.dim())) * tx.section;
  }
  Mat unit(const CatObject& c) const override {
    TensorChain t = tensor_over(c.module, c_.carrier);
    return t.projection * *c.rho;
  }
  Mat counit(const CatObject& d) const override {
    TensorChain t = tensor_over(d.module, c_.carrier);
    return coring_counit(c_, d.module, t);
  }
  std::vector<Mat> hom_source(const CatObject& x, const CatObject& y) const override {
    return comodule_hom(c_, Comodule{x.module, *x.rho}, Comodule{y.module, *y.rho}).basis;
  }
  std::vector<Mat> hom_target(const CatObject& x, const CatObject& y) const override {
    return hom_space(x.module, y.module, Sided::Right).basis;
  }
  std::vector<CatObject> source_family(std::uint64_t seed) const override {
    std::vector<CatObject> fam;
    Comodule reg = regular_comodule(c_);
    fam.push_back(CatObject{"C regular", reg.module, reg.rho});
    for (auto& [label, n] : default_right_family(c_.base, seed, "R")) {
      Comodule g = induced_comodule(c_, n);
      fam.push_back(CatObject{label + "(x)C", std::move(g.module), std::move(g.rho)});
    }
    return fam;
  }
  std::vector<CatObject> target_family(std::uint64_t seed) const override {
    return modules_to_objects(default_right_family(c_.base, seed + 1, "R"));
  }

 private:
  Coring c_;
};

// ----------------------------------------------------------------- cormor

class CormorAdjunction final : public Adjunction {
 public:
  explicit CormorAdjunction(CoringMorphism m) : m_(std::move(m)) {}

  std::string name() const override { return "coring-morphism"; }

  CatObject apply_F(const CatObject& c) const override {
    InducedDComodule fm = natfull::apply_F(m_, Comodule{c.module, *c.rho});
    return CatObject{"F(" + c.label + ")", std::move(fm.comodule.module), std::move(fm.comodule.rho)};
  }
  CatObject apply_G(const CatObject& d) const override {
    CotensorSpace g = cotensor(m_, Comodule{d.module, *d.rho});
    return CatObject{"G(" + d.label + ")", std::move(g.module), std::move(g.rho)};
  }
  Mat map_F(const CatObject& x, const CatObject& y, const Mat& f) const override {
    InducedDComodule fx = natfull::apply_F(m_, Comodule{x.module, *x.rho});
    InducedDComodule fy = natfull::apply_F(m_, Comodule{y.module, *y.rho});
    const PrimeField& fld = m_.phi.target.field;
    return fy.chain.projection * Mat::kronecker(f, Mat::identity(fld, m_.phi.target.dim)) *
           fx.chain.section;
  }
  Mat map_G(const CatObject& x, const CatObject& y, const Mat& g) const override {
    CotensorSpace gx = cotensor(m_, Comodule{x.module, *x.rho});
    CotensorSpace gy = cotensor(m_, Comodule{y.module, *y.rho});
    const PrimeField& fld = m_.phi.target.field;
    std::size_t ld = gx.x.factor_dims[1];
    Mat big = gy.x.projection * Mat::kronecker(g, Mat::identity(fld, ld)) * gx.x.section *
              gx.inclusion;
    auto coords = solve_affine_columns(gy.inclusion, big);
    if (!coords) throw Error("cormor map_G: image leaves the cotensor");
    return *coords;
  }
  Mat unit(const CatObject& c) const override {
    Comodule com{c.module, *c.rho};
    InducedDComodule fm = natfull::apply_F(m_, com);
    CotensorSpace gfm = cotensor(m_, fm.comodule);
    return cormor_unit(m_, com, fm, gfm);
  }
  Mat counit(const CatObject& d) const override {
    Comodule com{d.module, *d.rho};
    CotensorSpace gn = cotensor(m_, com);
    InducedDComodule fgn = natfull::apply_F(m_, Comodule{gn.module, gn.rho});
    return cormor_counit(m_, com, gn, fgn);
  }
  std::vector<Mat> hom_source(const CatObject& x, const CatObject& y) const override {
    return comodule_hom(m_.source, Comodule{x.module, *x.rho}, Comodule{y.module, *y.rho}).basis;
  }
  std::vector<Mat> hom_target(const CatObject& x, const CatObject& y) const override {
    return comodule_hom(m_.target, Comodule{x.module, *x.rho}, Comodule{y.module, *y.rho}).basis;
  }
  std::vector<CatObject> source_family(std::uint64_t seed) const override {
    std::vector<CatObject> fam;
    Comodule reg = regular_comodule(m_.source);
    fam.push_back(CatObject{"C regular", reg.module, reg.rho});
    auto mods = default_right_family(m_.source.base, seed, "R");
    // keep the family small: regular base module and the random one
    Comodule g1 = induced_comodule(m_.source, mods.front().second);
    fam.push_back(CatObject{mods.front().first + "(x)C", std::move(g1.module), std::move(g1.rho)});
    return fam;
  }
  std::vector<CatObject> target_family(std::uint64_t seed) const override {
    std::vector<CatObject> fam;
    Comodule reg = regular_comodule(m_.target);
    fam.push_back(CatObject{"D regular", reg.module, reg.rho});
    auto mods = default_right_family(m_.target.base, seed + 1, "S");
    Comodule g1 = induced_comodule(m_.target, mods.front().second);
    fam.push_back(CatObject{mods.front().first + "(x)D", std::move(g1.module), std::move(g1.rho)});
    return fam;
  }

 private:
  CoringMorphism m_;
};

}  // namespace

std::unique_ptr<Adjunction> scalars_adjunction(const AlgebraMorphism& phi) {
  return std::make_unique<ScalarsAdjunction>(phi);
}
std::unique_ptr<Adjunction> bimodule_adjunction(const Module& m) {
  return std::make_unique<BimoduleAdjunction>(m);
}
std::unique_ptr<Adjunction> coring_adjunction(const Coring& c) {
  return std::make_unique<CoringAdjunction>(c);
}
std::unique_ptr<Adjunction> cormor_adjunction(const CoringMorphism& m) {
  return std::make_unique<CormorAdjunction>(m);
}

// ------------------------------------------------------ witness transforms

namespace {

class ScalarsNu final : public NaturalTransform {
 public:
  ScalarsNu(AlgebraMorphism phi, Mat e) : phi_(std::move(phi)), e_(std::move(e)) {}
  // nu_M(s (x) m) = E(s) m
  Mat component(const CatObject& obj) const override {
    const PrimeField& f = phi_.target.field;
    const Module& m = obj.module;
    TensorChain t = extend_module(phi_, m);
    Mat act(f, m.dim, phi_.target.dim * m.dim);
    for (std::size_t a = 0; a < phi_.target.dim; ++a) {
      Mat la = m.left_act(e_.column(a));
      for (std::size_t j = 0; j < m.dim; ++j) act.set_column(a * m.dim + j, la.column(j));
    }
    return act * t.section;
  }

 private:
  AlgebraMorphism phi_;
  Mat e_;
};

class ScalarsXi final : public NaturalTransform {
 public:
  ScalarsXi(AlgebraMorphism phi, Vec lift) : phi_(std::move(phi)), lift_(std::move(lift)) {}
  // xi_N(n) = sum e^1 (x) e^2 n
  Mat component(const CatObject& obj) const override {
    const FDAlgebra& s = phi_.target;
    const PrimeField& f = s.field;
    const Module& n = obj.module;
    TensorChain t = extend_module(phi_, left_module_via(n, phi_));
    Mat xi(f, t.result.dim, n.dim);
    for (std::size_t j = 0; j < n.dim; ++j) {
      Vec xj(n.dim, 0);
      xj[j] = 1;
      Vec acc(s.dim * n.dim, 0);
      for (std::size_t a = 0; a < s.dim; ++a)
        for (std::size_t b = 0; b < s.dim; ++b) {
          std::uint32_t c = lift_[a * s.dim + b];
          if (c == 0) continue;
          Vec eb(s.dim, 0);
          eb[b] = 1;
          Vec acted = n.left_act(eb).apply(xj);
          for (std::size_t k = 0; k < n.dim; ++k)
            acc[a * n.dim + k] = f.add(acc[a * n.dim + k], f.mul(c, acted[k]));
        }
      xi.set_column(j, t.projection.apply(acc));
    }
    return xi;
  }

 private:
  AlgebraMorphism phi_;
  Vec lift_;  // e lifted to S (x)_K S coordinates
};

class BimoduleNu final : public NaturalTransform {
 public:
  BimoduleNu(Module m, Mat e) : m_(std::move(m)), e_(std::move(e)) {}
  // (psi(sum g_i (x) p_i)) nu_P = sum (g_i)E p_i, through the canonical
  // isomorphism psi : End (x)_R P -> Hom(M, M (x)_R P).
  Mat component(const CatObject& obj) const override {
    const PrimeField& f = m_.field;
    const Module& p = obj.module;
    EndAlgebra ea = endomorphism_algebra(m_);
    const FDAlgebra& r = *m_.right;
    Module amod{f, ea.algebra.dim, r, r, {}, {}};
    for (std::size_t g = 0; g < r.dim; ++g) {
      Vec eg(r.dim, 0);
      eg[g] = 1;
      Vec img = ea.chi->apply(eg);
      amod.left_action.push_back(ea.algebra.left_mult(img));
      amod.right_action.push_back(ea.algebra.right_mult(img));
    }
    TensorChain ap = tensor_over(amod, p);
    TensorChain mp = tensor_over(m_, p);
    HomModule h = hom_left_as_module(m_, mp.result);
    // psi : A (x)_R P -> Hom(M, M (x)_R P)
    Mat psi(f, h.basis.size(), ap.result.dim);
    for (std::size_t u = 0; u < ap.result.dim; ++u) {
      Vec lift = ap.section.column(u);
      Mat w(f, mp.result.dim, m_.dim);
      for (std::size_t k = 0; k < ea.algebra.dim; ++k)
        for (std::size_t j = 0; j < p.dim; ++j) {
          std::uint32_t c = lift[k * p.dim + j];
          if (c == 0) continue;
          for (std::size_t b = 0; b < m_.dim; ++b) {
            Vec img = ea.basis[k].apply([&] {
              Vec xb(m_.dim, 0);
              xb[b] = 1;
              return xb;
            }());
            Vec tl(m_.dim * p.dim, 0);
            for (std::size_t bm = 0; bm < m_.dim; ++bm) tl[bm * p.dim + j] = img[bm];
            Vec prev = w.column(b);
            w.set_column(b, vec_add(f, prev, vec_scale(f, c, mp.projection.apply(tl))));
          }
        }
      psi.set_column(u, h.coords_of(f, w));
    }
    auto psi_inv = inverse(psi);
    if (!psi_inv) throw WitnessViolation("bimodule nu: psi is not invertible (M not fgp?)");
    // E (x) P : A (x)_K P -> P, (g, p) -> E(g) p
    Mat act(f, p.dim, ea.algebra.dim * p.dim);
    for (std::size_t k = 0; k < ea.algebra.dim; ++k) {
      Mat la = p.left_act(e_.column(k));
      for (std::size_t j = 0; j < p.dim; ++j) act.set_column(k * p.dim + j, la.column(j));
    }
    return act * ap.section * *psi_inv;
  }

 private:
  Module m_;
  Mat e_;  // E : End_S(M) -> R in End coordinates
};

class BimoduleXi final : public NaturalTransform {
 public:
  BimoduleXi(Module m, Vec z) : m_(std::move(m)), z_(std::move(z)) {}
  // xi_Q(q) = sum m_i (x) (?)f_i q
  Mat component(const CatObject& obj) const override {
    const PrimeField& f = m_.field;
    const Module& q = obj.module;
    HomModule star = star_module(m_);
    TensorChain t = tensor_over(m_, star.module);
    Vec lift = t.section.apply(z_);
    HomModule hq = hom_left_as_module(m_, q);
    TensorChain mq = tensor_over(m_, hq.module);
    const FDAlgebra& s = *m_.left;
    Mat xi(f, mq.result.dim, q.dim);
    std::size_t sd = star.basis.size(), hd = hq.basis.size();
    for (std::size_t j = 0; j < q.dim; ++j) {
      Vec qj(q.dim, 0);
      qj[j] = 1;
      Mat lam(f, q.dim, s.dim);
      for (std::size_t a = 0; a < s.dim; ++a) lam.set_column(a, q.left_action[a].apply(qj));
      Vec acc(m_.dim * hd, 0);
      for (std::size_t i = 0; i < m_.dim; ++i)
        for (std::size_t u = 0; u < sd; ++u) {
          std::uint32_t c = lift[i * sd + u];
          if (c == 0) continue;
          Vec coords = hq.coords_of(f, lam * star.basis[u]);
          for (std::size_t k = 0; k < hd; ++k)
            acc[i * hd + k] = f.add(acc[i * hd + k], f.mul(c, coords[k]));
        }
      xi.set_column(j, mq.projection.apply(acc));
    }
    return xi;
  }

 private:
  Module m_;
  Vec z_;
};

class CoringNu final : public NaturalTransform {
 public:
  CoringNu(Coring c, Mat theta) : c_(std::move(c)), theta_(std::move(theta)) {}
  // nu_M(m (x) c) = m_[0] theta(m_[1] (x) c)
  Mat component(const CatObject& obj) const override {
    const PrimeField& f = c_.base.field;
    std::size_t cd = c_.dim();
    const Module& m = obj.module;
    const Mat& rho = *obj.rho;
    TensorChain mc = tensor_over(m, c_.carrier);
    CoringParts parts = coring_parts(c_);
    Mat d(f, m.dim, m.dim * cd);
    for (std::size_t b = 0; b < m.dim; ++b) {
      Vec rb = rho.column(b);
      for (std::size_t j = 0; j < cd; ++j) {
        Vec xj(cd, 0);
        xj[j] = 1;
        Vec acc(m.dim, 0);
        for (std::size_t bp = 0; bp < m.dim; ++bp)
          for (std::size_t i = 0; i < cd; ++i) {
            std::uint32_t w = rb[bp * cd + i];
            if (w == 0) continue;
            Vec xi(cd, 0);
            xi[i] = 1;
            Vec r = theta_.apply(parts.cc.projection.apply(outer_vec(f, xi, xj)));
            Vec xbp(m.dim, 0);
            xbp[bp] = 1;
            acc = vec_add(f, acc, vec_scale(f, w, m.right_act(r).apply(xbp)));
          }
        d.set_column(b * cd + j, acc);
      }
    }
    return d * mc.section;
  }

 private:
  Coring c_;
  Mat theta_;  // on C (x)_R C quotient coordinates
};

class CoringXi final : public NaturalTransform {
 public:
  CoringXi(Coring c, Vec z) : c_(std::move(c)), z_(std::move(z)) {}
  // xi_N(n) = n (x) z
  Mat component(const CatObject& obj) const override {
    const PrimeField& f = c_.base.field;
    const Module& n = obj.module;
    TensorChain nc = tensor_over(n, c_.carrier);
    Mat xi(f, nc.result.dim, n.dim);
    for (std::size_t j = 0; j < n.dim; ++j) {
      Vec xj(n.dim, 0);
      xj[j] = 1;
      xi.set_column(j, nc.projection.apply(outer_vec(f, xj, z_)));
    }
    return xi;
  }

 private:
  Coring c_;
  Vec z_;
};

class CormorNu final : public NaturalTransform {
 public:
  CormorNu(CoringMorphism m, Mat nu_c) : m_(std::move(m)), nu_c_(std::move(nu_c)) {}
  // nu_M = r_M . (M (x) (eps_C . nu_C)) . kappa_M with
  // kappa_M((m (x) s) [] (s' (x) c)) = m_[0] (x) ((m_[1] (x) s) [] (s' (x) c)).
  Mat component(const CatObject& obj) const override {
    const PrimeField& f = m_.phi.target.field;
    const Coring& c = m_.source;
    std::size_t cd = c.dim(), sd = m_.phi.target.dim;
    Comodule com{obj.module, *obj.rho};
    InducedDComodule fm = natfull::apply_F(m_, com);
    CotensorSpace gfm = cotensor(m_, fm.comodule);

    Comodule creg{c.carrier, c.delta};
    InducedDComodule fc = natfull::apply_F(m_, creg);
    CotensorSpace gfc = cotensor(m_, fc.comodule);
    std::size_t ld = gfc.x.factor_dims[1];

    // kappa lift: X_M -> M (x)_K X_C
    Mat kappa = Mat::kronecker(Mat::identity(f, obj.module.dim),
                               gfc.x.projection *
                                   Mat::kronecker(fc.chain.projection, Mat::identity(f, ld))) *
                Mat::kronecker(*obj.rho, Mat::identity(f, sd * ld)) *
                Mat::kronecker(fm.chain.section, Mat::identity(f, ld)) * gfm.x.section *
                gfm.inclusion;

    TensorChain mxc = tensor_over(obj.module, gfc.x.result);
    TensorChain mkc = tensor_over(obj.module, gfc.module);
    Mat j2 = mxc.projection *
             Mat::kronecker(Mat::identity(f, obj.module.dim), gfc.inclusion) * mkc.section;
    auto y = solve_affine_columns(j2, mxc.projection * kappa);
    if (!y) throw WitnessViolation("cormor nu: kappa does not factor through M (x) GFC");

    Mat epsnu = c.epsilon * nu_c_;  // K_C -> R
    Mat act(f, obj.module.dim, obj.module.dim * gfc.module.dim);
    for (std::size_t b = 0; b < obj.module.dim; ++b) {
      Vec xb(obj.module.dim, 0);
      xb[b] = 1;
      for (std::size_t k = 0; k < gfc.module.dim; ++k)
        act.set_column(b * gfc.module.dim + k, obj.module.right_act(epsnu.column(k)).apply(xb));
    }
    return act * mkc.section * *y;
  }

 private:
  CoringMorphism m_;
  Mat nu_c_;  // K_C -> C
};

class CormorXi final : public NaturalTransform {
 public:
  CormorXi(CoringMorphism m, Mat psi) : m_(std::move(m)), psi_(std::move(psi)) {}
  // (i (x) S) . xi_N = (N (x) Psi-hat) . rho_N
  Mat component(const CatObject& obj) const override {
    const PrimeField& f = m_.phi.target.field;
    const FDAlgebra& s = m_.phi.target;
    const Coring& c = m_.source;
    std::size_t sd = s.dim, cd = c.dim(), nd = obj.module.dim;
    Comodule com{obj.module, *obj.rho};
    CotensorSpace gn = cotensor(m_, com);
    InducedDComodule fgn = natfull::apply_F(m_, Comodule{gn.module, gn.rho});
    CormorParts parts = cormor_parts(m_);

    Module s_sr = right_module_via(bimodule_regular(s), m_.phi);
    Module s_rs = left_module_via(bimodule_regular(s), m_.phi);
    TensorChain t_scs = tensor_chain({&s_sr, &c.carrier, &s_rs});

    // N -> N (x)_K (S C S) -> (N (x) S (x) C) (x) S -> X_N (x)_K S
    Mat chain = Mat::kronecker(gn.x.projection * Mat::kronecker(Mat::identity(f, nd), parts.l.projection),
                               Mat::identity(f, sd)) *
                Mat::kronecker(Mat::identity(f, nd), t_scs.section * psi_) * *obj.rho;

    TensorChain xs = tensor_over(gn.x.result, s_rs);
    TensorChain ks = tensor_over(gn.module, s_rs);
    Mat j3 = xs.projection * Mat::kronecker(gn.inclusion, Mat::identity(f, sd)) * ks.section;
    auto y = solve_affine_columns(j3, xs.projection * chain);
    if (!y) throw WitnessViolation("cormor xi: factorization through the cotensor failed");
    // FGN coordinates are exactly K_N (x)_R S with the deterministic chain
    if (!(fgn.chain.result.dim == ks.result.dim))
      throw WitnessViolation("cormor xi: chain mismatch");
    return *y;
  }

 private:
  CoringMorphism m_;
  Mat psi_;  // D -> S (x) C (x) S quotient coordinates
};

}  // namespace

std::unique_ptr<NaturalTransform> scalars_nu_from_E(const AlgebraMorphism& phi, const Mat& E) {
  return std::make_unique<ScalarsNu>(phi, E);
}
std::unique_ptr<NaturalTransform> scalars_xi_from_e(const AlgebraMorphism& phi, const Vec& e_class) {
  ScalarExtensionParts parts = scalar_extension_parts(phi);
  return std::make_unique<ScalarsXi>(phi, parts.tensor.section.apply(e_class));
}
std::unique_ptr<NaturalTransform> bimodule_nu_from_E(const Module& m, const Mat& E) {
  return std::make_unique<BimoduleNu>(m, E);
}
std::unique_ptr<NaturalTransform> bimodule_xi_from_z(const Module& m, const Vec& z) {
  return std::make_unique<BimoduleXi>(m, z);
}
std::unique_ptr<NaturalTransform> coring_nu_from_theta(const Coring& c, const Mat& theta) {
  return std::make_unique<CoringNu>(c, theta);
}
std::unique_ptr<NaturalTransform> coring_xi_from_z(const Coring& c, const Vec& z) {
  return std::make_unique<CoringXi>(c, z);
}
std::unique_ptr<NaturalTransform> cormor_nu_from_nuC(const CoringMorphism& m, const Mat& nu_c) {
  return std::make_unique<CormorNu>(m, nu_c);
}
std::unique_ptr<NaturalTransform> cormor_xi_from_Psi(const CoringMorphism& m, const Mat& psi) {
  return std::make_unique<CormorXi>(m, psi);
}

// -------------------------------------------------------------- operations

PerObjectReport per_object_fullness(const Adjunction& adj, bool f_side,
                                    const std::vector<CatObject>& family) {
  PerObjectReport rep;
  for (const CatObject& obj : family) {
    bool solvable = false;
    if (f_side) {
      CatObject gf = adj.apply_G(adj.apply_F(obj));
      Mat eta = adj.unit(obj);
      std::vector<Mat> cands = adj.hom_source(gf, obj);
      const PrimeField& f = obj.module.field;
      std::vector<Vec> cols;
      for (const Mat& nu : cands) cols.push_back(vectorize(eta * nu));
      Mat sys = Mat::from_columns(f, cols, gf.module.dim * gf.module.dim);
      solvable = solve_affine(sys, vectorize(Mat::identity(f, gf.module.dim))).has_value();
    } else {
      CatObject fg = adj.apply_F(adj.apply_G(obj));
      Mat eps = adj.counit(obj);
      std::vector<Mat> cands = adj.hom_target(obj, fg);
      const PrimeField& f = obj.module.field;
      std::vector<Vec> cols;
      for (const Mat& xi : cands) cols.push_back(vectorize(xi * eps));
      Mat sys = Mat::from_columns(f, cols, fg.module.dim * fg.module.dim);
      solvable = solve_affine(sys, vectorize(Mat::identity(f, fg.module.dim))).has_value();
    }
    rep.objects.emplace_back(obj.label, solvable);
    if (!solvable) rep.all_solvable = false;
  }
  return rep;
}

SplittingWitness natural_splitting_from_witness(const Adjunction& adj, bool f_side,
                                                const NaturalTransform& nt, const std::string& origin,
                                                std::uint64_t seed) {
  SplittingWitness w;
  w.kind = f_side ? "nu" : "xi";
  w.origin = origin;
  std::vector<CatObject> family = f_side ? adj.source_family(seed) : adj.target_family(seed);
  for (const CatObject& obj : family) w.components.emplace_back(obj.label, nt.component(obj));

  if (f_side) {
    for (const CatObject& c : family) {
      CatObject fc = adj.apply_F(c);
      Mat eta_c = adj.unit(c);
      for (const CatObject& cp : family) {
        CatObject fcp = adj.apply_F(cp);
        Mat nu_cp = nt.component(cp);
        for (const Mat& u : adj.hom_target(fc, fcp)) {
          Mat p_u = nu_cp * adj.map_G(fc, fcp, u) * eta_c;
          if (!(adj.map_F(c, cp, p_u) == u)) {
            throw WitnessViolation(adj.name() + " [" + origin + "]: F(P(u)) != u at (" + c.label +
                                   ", " + cp.label + ")");
          }
        }
      }
    }
    // naturality (sampled squares)
    Rng rng(seed ^ 0x5eed5eedull);
    std::size_t samples = 8;
    for (std::size_t t = 0; t < samples; ++t) {
      const CatObject& x = family[rng.below(static_cast<std::uint32_t>(family.size()))];
      const CatObject& y = family[rng.below(static_cast<std::uint32_t>(family.size()))];
      const CatObject& z = family[rng.below(static_cast<std::uint32_t>(family.size()))];
      const CatObject& tt = family[rng.below(static_cast<std::uint32_t>(family.size()))];
      auto fs = adj.hom_source(x, y);
      auto hs = adj.hom_source(z, tt);
      CatObject fy = adj.apply_F(y), fz = adj.apply_F(z), fx = adj.apply_F(x), ft = adj.apply_F(tt);
      auto gs = adj.hom_target(fy, fz);
      if (fs.empty() || hs.empty() || gs.empty()) continue;
      const Mat& f = fs[rng.below(static_cast<std::uint32_t>(fs.size()))];
      const Mat& h = hs[rng.below(static_cast<std::uint32_t>(hs.size()))];
      const Mat& g = gs[rng.below(static_cast<std::uint32_t>(gs.size()))];
      Mat inner = adj.map_F(z, tt, h) * g * adj.map_F(x, y, f);
      Mat lhs = nt.component(tt) * adj.map_G(fx, ft, inner) * adj.unit(x);
      Mat rhs = h * (nt.component(z) * adj.map_G(fy, fz, g) * adj.unit(y)) * f;
      if (!(lhs == rhs)) {
        throw WitnessViolation(adj.name() + " [" + origin + "]: naturality square failed");
      }
    }
  } else {
    for (const CatObject& d : family) {
      CatObject gd = adj.apply_G(d);
      Mat xi_d = nt.component(d);
      for (const CatObject& dp : family) {
        CatObject gdp = adj.apply_G(dp);
        for (const Mat& f : adj.hom_source(gd, gdp)) {
          Mat t_f = adj.counit(dp) * adj.map_F(gd, gdp, f) * xi_d;
          if (!(adj.map_G(d, dp, t_f) == f)) {
            throw WitnessViolation(adj.name() + " [" + origin + "]: G(P(f)) != f at (" + d.label +
                                   ", " + dp.label + ")");
          }
        }
      }
    }
    Rng rng(seed ^ 0x5eed5eedull);
    std::size_t samples = 8;
    for (std::size_t t = 0; t < samples; ++t) {
      const CatObject& x = family[rng.below(static_cast<std::uint32_t>(family.size()))];
      const CatObject& y = family[rng.below(static_cast<std::uint32_t>(family.size()))];
      const CatObject& z = family[rng.below(static_cast<std::uint32_t>(family.size()))];
      const CatObject& tt = family[rng.below(static_cast<std::uint32_t>(family.size()))];
      auto xs = adj.hom_target(x, y);
      auto hs = adj.hom_target(z, tt);
      CatObject gy = adj.apply_G(y), gz = adj.apply_G(z), gx = adj.apply_G(x), gt = adj.apply_G(tt);
      auto fs = adj.hom_source(gy, gz);
      if (xs.empty() || hs.empty() || fs.empty()) continue;
      const Mat& xm = xs[rng.below(static_cast<std::uint32_t>(xs.size()))];
      const Mat& h = hs[rng.below(static_cast<std::uint32_t>(hs.size()))];
      const Mat& f = fs[rng.below(static_cast<std::uint32_t>(fs.size()))];
      Mat inner = adj.map_G(z, tt, h) * f * adj.map_G(x, y, xm);
      Mat lhs = adj.counit(tt) * adj.map_F(gx, gt, inner) * nt.component(x);
      Mat rhs = h * (adj.counit(z) * adj.map_F(gy, gz, f) * nt.component(y)) * xm;
      if (!(lhs == rhs)) {
        throw WitnessViolation(adj.name() + " [" + origin + "]: naturality square failed (xi side)");
      }
    }
  }
  return w;
}

}  // namespace natfull
