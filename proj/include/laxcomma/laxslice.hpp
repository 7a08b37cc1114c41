#pragma once

#include <string>
#include <vector>

#include "laxcomma/fincat.hpp"

namespace laxcomma {

// ---------------------------------------------------------------------------
// Lax slices over a base object y of Cat: objects (w, a: w -> y), morphisms
// (f, phi: b∘f => a), 2-cells gamma with phi' · (id_b * gamma) = phi.
// ---------------------------------------------------------------------------

struct SliceObject {
  FinFunctor a;
  const FinCategory& w() const { return a.dom; }
  const FinCategory& base() const { return a.cod; }
  bool operator==(const SliceObject& o) const { return a == o.a; }
};

struct LaxSliceMorphism {
  FinFunctor f;
  NatTrans phi;  // tgt.a ∘ f => src.a
  bool is_strict() const { return phi.is_identity(); }
  bool operator==(const LaxSliceMorphism& o) const { return f == o.f && phi == o.phi; }
};

inline Result<LaxSliceMorphism> validate_lax_morphism(const SliceObject& src, const SliceObject& tgt,
                                                      const LaxSliceMorphism& m) {
  std::vector<std::string> errors;
  if (!(m.f.dom == src.w()) || !(m.f.cod == tgt.w())) errors.push_back("endpoint-mismatch: functor");
  else {
    auto expected_src = compose_functors(tgt.a, m.f);
    if (!(m.phi.src == expected_src) || !(m.phi.tgt == src.a))
      errors.push_back("endpoint-mismatch: 2-cell must point from b∘f to a");
    else {
      auto v = validate_nat(m.phi);
      if (!v.ok()) errors.insert(errors.end(), v.errors.begin(), v.errors.end());
    }
  }
  if (!errors.empty()) return fail_result<LaxSliceMorphism>(std::move(errors));
  return ok_result(m);
}

inline LaxSliceMorphism identity_lax_morphism(const SliceObject& o) {
  return {identity_functor(o.w()), identity_nat(o.a)};
}

inline LaxSliceMorphism strict_lax_morphism(const SliceObject& src, const SliceObject& tgt,
                                            const FinFunctor& f) {
  LaxSliceMorphism m{f, identity_nat(compose_functors(tgt.a, f))};
  auto v = validate_lax_morphism(src, tgt, m);
  if (!v.ok()) throw std::invalid_argument(str("strict_lax_morphism: ", v.errors.front()));
  return m;
}

// (g, phi_g) ∘ (f, phi_f) = (g∘f, phi_f · (phi_g * id_f))
inline LaxSliceMorphism lax_compose(const LaxSliceMorphism& m2, const LaxSliceMorphism& m1) {
  if (!(m1.f.cod == m2.f.dom)) throw std::invalid_argument("lax_compose: endpoint-mismatch");
  LaxSliceMorphism r;
  r.f = compose_functors(m2.f, m1.f);
  r.phi = nat_vcomp(m1.phi, nat_whisker(m1.f, m2.phi, identity_functor(m2.phi.src.cod)));
  return r;
}

struct LaxSliceTwoCell {
  NatTrans gamma;  // f => f'
};

inline Result<LaxSliceTwoCell> validate_lax_2cell(const NatTrans& gamma, const LaxSliceMorphism& m1,
                                                  const LaxSliceMorphism& m2, const FinFunctor& b) {
  std::vector<std::string> errors;
  if (!(gamma.src == m1.f) || !(gamma.tgt == m2.f)) {
    errors.push_back("endpoint-mismatch: gamma must go from the first morphism to the second");
    return fail_result<LaxSliceTwoCell>(std::move(errors));
  }
  auto v = validate_nat(gamma);
  if (!v.ok()) return fail_result<LaxSliceTwoCell>(std::move(v.errors));
  auto pasted = nat_vcomp(m2.phi, whisker_left(b, gamma));
  for (size_t o = 0; o < gamma.comp.size(); ++o)
    if (pasted.comp[o] != m1.phi.comp[o])
      errors.push_back(str("compatibility-violation(", gamma.src.dom.objects[o], ")"));
  if (!errors.empty()) return fail_result<LaxSliceTwoCell>(std::move(errors));
  return ok_result(LaxSliceTwoCell{gamma});
}

// Hom-category of a (strict or lax) slice: objects are the slice morphisms
// o1 -> o2, morphisms are the compatible 2-cells between them.
struct SliceHomResult {
  FinCategory cat;
  std::vector<LaxSliceMorphism> objs;
  std::vector<NatTrans> mors;
};

inline SliceHomResult slice_hom_category(const SliceObject& o1, const SliceObject& o2, bool lax,
                                         SearchBudget& budget) {
  if (!(o1.base() == o2.base())) throw std::invalid_argument("slice_hom_category: different bases");
  SliceHomResult r;
  r.cat.name = str(lax ? "lax" : "strict", "-hom(", o1.a.name, ",", o2.a.name, ")");
  for (const auto& f : enumerate_functors(o1.w(), o2.w(), budget)) {
    auto bf = compose_functors(o2.a, f);
    if (lax) {
      for (const auto& phi : enumerate_nats(bf, o1.a, budget)) {
        LaxSliceMorphism m{f, phi};
        if (validate_lax_morphism(o1, o2, m).ok()) {
          r.cat.objects.push_back(str("m", r.objs.size()));
          r.objs.push_back(std::move(m));
        }
      }
    } else if (bf == o1.a) {
      r.cat.objects.push_back(str("m", r.objs.size()));
      r.objs.push_back(LaxSliceMorphism{f, identity_nat(bf)});
    }
  }
  for (size_t i = 0; i < r.objs.size(); ++i)
    for (size_t j = 0; j < r.objs.size(); ++j)
      for (const auto& g : enumerate_nats(r.objs[i].f, r.objs[j].f, budget))
        if (validate_lax_2cell(g, r.objs[i], r.objs[j], o2.a).ok()) {
          r.cat.morphisms.push_back(
              {str("g", r.mors.size()), static_cast<int>(i), static_cast<int>(j)});
          r.mors.push_back(g);
        }
  auto find = [&](int s, int t, const std::vector<int>& comp) {
    for (size_t m = 0; m < r.mors.size(); ++m)
      if (r.cat.src(static_cast<int>(m)) == s && r.cat.tgt(static_cast<int>(m)) == t &&
          r.mors[m].comp == comp)
        return static_cast<int>(m);
    return -1;
  };
  r.cat.identities.resize(r.objs.size());
  for (size_t i = 0; i < r.objs.size(); ++i)
    r.cat.identities[i] = find(static_cast<int>(i), static_cast<int>(i),
                               identity_nat(r.objs[i].f).comp);
  size_t nm = r.mors.size();
  r.cat.table.assign(nm, std::vector<int>(nm, -1));
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) {
      if (!r.cat.composable(static_cast<int>(g), static_cast<int>(f))) continue;
      auto comp = nat_vcomp(r.mors[g], r.mors[f]);
      r.cat.table[g][f] = find(r.cat.src(static_cast<int>(f)), r.cat.tgt(static_cast<int>(g)),
                               comp.comp);
    }
  return r;
}

// ---------------------------------------------------------------------------
// (y × -)-coalgebras and the isomorphism with the lax slice
// ---------------------------------------------------------------------------

struct CoalgebraObject {
  FinCategory y;
  FinFunctor aprime;    // w -> y×w, built against the canonical product
  ProductResult prod;   // y × w
  const FinCategory& w() const { return aprime.dom; }
  bool operator==(const CoalgebraObject& o) const { return y == o.y && aprime == o.aprime; }
};

// comultiplication component at w: <proj_y, id> : y×w -> y×(y×w)
inline FinFunctor comultiplication(const ProductResult& prod, const ProductResult& prod2) {
  return pair_into_product(prod2, prod.proj0, identity_functor(prod.cat));
}

// id_y × u for u : w -> y×x, as a functor y×w -> y×(y×x)
inline FinFunctor product_on_second(const ProductResult& prod_w, const ProductResult& prod_tgt,
                                    const FinFunctor& u) {
  return pair_into_product(prod_tgt, prod_w.proj0, compose_functors(u, prod_w.proj1));
}

inline Result<CoalgebraObject> validate_coalgebra(const CoalgebraObject& c) {
  std::vector<std::string> errors;
  if (!(c.prod.cat == c.aprime.cod)) errors.push_back("coalgebra: structure map must land in y×w");
  auto v = validate_functor(c.aprime);
  if (!v.ok()) errors.insert(errors.end(), v.errors.begin(), v.errors.end());
  if (!errors.empty()) return fail_result<CoalgebraObject>(std::move(errors));
  if (!(compose_functors(c.prod.proj1, c.aprime) == identity_functor(c.w())))
    errors.push_back("coalgebra: counit law fails (proj_w ∘ a' != id)");
  if (!errors.empty()) return fail_result<CoalgebraObject>(std::move(errors));
  // coassociativity is implied by the counit law; verified, not assumed
  auto prod2 = product_category(c.y, c.prod.cat);
  auto lhs = compose_functors(comultiplication(c.prod, prod2), c.aprime);
  auto rhs = compose_functors(product_on_second(c.prod, prod2, c.aprime), c.aprime);
  if (!(lhs.obj_map == rhs.obj_map && lhs.mor_map == rhs.mor_map))
    errors.push_back("coalgebra: coassociativity fails");
  if (!errors.empty()) return fail_result<CoalgebraObject>(std::move(errors));
  return ok_result(c);
}

struct LaxCoalgMorphism {
  FinFunctor f;
  NatTrans phip;  // b'∘f => (id_y×f)∘a'
  bool is_strict() const { return phip.is_identity(); }
};

// coidentity: whiskering phip with proj_x is the identity on f
inline Result<LaxCoalgMorphism> validate_lax_coalg_morphism(const CoalgebraObject& src,
                                                            const CoalgebraObject& tgt,
                                                            const LaxCoalgMorphism& m) {
  std::vector<std::string> errors;
  // expected endpoints: b'∘f and (id_y×f)∘a'
  auto bpf = compose_functors(tgt.aprime, m.f);
  FinFunctor y_cross_f = pair_into_product(tgt.prod, src.prod.proj0, compose_functors(m.f, src.prod.proj1));
  auto rhs = compose_functors(y_cross_f, src.aprime);
  if (!(m.phip.src == bpf) || !(m.phip.tgt == rhs))
    errors.push_back("endpoint-mismatch: 2-cell must point from b'∘f to (id_y×f)∘a'");
  if (!errors.empty()) return fail_result<LaxCoalgMorphism>(std::move(errors));
  auto v = validate_nat(m.phip);
  if (!v.ok()) return fail_result<LaxCoalgMorphism>(std::move(v.errors));
  auto counit_whisker = whisker_left(tgt.prod.proj1, m.phip);
  if (!counit_whisker.is_identity()) errors.push_back("coalgebra morphism: coidentity equation fails");
  if (!errors.empty()) return fail_result<LaxCoalgMorphism>(std::move(errors));
  return ok_result(m);
}

// The coassociativity equation for a lax morphism; implied by coidentity, and
// checked explicitly by the test corpora.
inline bool coalg_morphism_coassoc_holds(const CoalgebraObject& src, const CoalgebraObject& tgt,
                                         const LaxCoalgMorphism& m) {
  auto prod2 = product_category(tgt.y, tgt.prod.cat);
  auto delta_x = comultiplication(tgt.prod, prod2);
  auto y_cross_bp = product_on_second(tgt.prod, prod2, tgt.aprime);
  size_t nm2 = tgt.prod.cat.n_morphisms();
  for (size_t o = 0; o < src.w().n_objects(); ++o) {
    int lhs = delta_x.mor_map[m.phip.comp[o]];
    // G(phip) whiskered by a' at o: the pair (identity of the y-part of a'(o), phip_o)
    int a_o = src.aprime.obj_map[o];
    int y_part = src.prod.proj0.obj_map[a_o];
    int g_comp = static_cast<int>(tgt.y.id(y_part) * nm2) + m.phip.comp[o];
    int rhs = prod2.cat.compose(g_comp, y_cross_bp.mor_map[m.phip.comp[o]]);
    if (lhs != rhs) return false;
  }
  return true;
}

// 2-cell between lax coalgebra morphisms: gamma with
// ((id_y×gamma) * a') · phip1 = phip2 · (b' * gamma)
inline bool coalg_2cell_valid(const CoalgebraObject& src, const CoalgebraObject& tgt,
                              const LaxCoalgMorphism& m1, const LaxCoalgMorphism& m2,
                              const NatTrans& gamma) {
  if (!(gamma.src == m1.f) || !(gamma.tgt == m2.f) || !validate_nat(gamma).ok()) return false;
  size_t nmx = tgt.w().n_morphisms();
  for (size_t o = 0; o < src.w().n_objects(); ++o) {
    int a_o = src.aprime.obj_map[o];
    int y_part = src.prod.proj0.obj_map[a_o];
    int y_cross_gamma = static_cast<int>(tgt.y.id(y_part) * nmx) + gamma.comp[o];
    int lhs = tgt.prod.cat.compose(y_cross_gamma, m1.phip.comp[o]);
    int rhs = tgt.prod.cat.compose(m2.phip.comp[o], tgt.aprime.mor_map[gamma.comp[o]]);
    if (lhs != rhs) return false;
  }
  return true;
}

// object part of the isomorphism: (w, a) |-> (w, <a, id_w>)
inline CoalgebraObject to_coalgebra(const SliceObject& o) {
  CoalgebraObject c;
  c.y = o.base();
  c.prod = product_category(o.base(), o.w());
  c.aprime = pair_into_product(c.prod, o.a, identity_functor(o.w()));
  c.aprime.name = str("<", o.a.name, ",id>");
  return c;
}

inline SliceObject from_coalgebra(const CoalgebraObject& c) {
  SliceObject o;
  o.a = compose_functors(c.prod.proj0, c.aprime);
  o.a.name = str("proj∘", c.aprime.name);
  return o;
}

// morphism part: (f, phi) |-> (f, <phi, id_f>)
inline LaxCoalgMorphism to_coalgebra_morphism(const SliceObject& src, const SliceObject& tgt,
                                              const LaxSliceMorphism& m, const CoalgebraObject& csrc,
                                              const CoalgebraObject& ctgt) {
  LaxCoalgMorphism r;
  r.f = m.f;
  r.phip.src = compose_functors(ctgt.aprime, m.f);
  FinFunctor y_cross_f = pair_into_product(ctgt.prod, csrc.prod.proj0,
                                           compose_functors(m.f, csrc.prod.proj1));
  r.phip.tgt = compose_functors(y_cross_f, csrc.aprime);
  size_t nmx = tgt.w().n_morphisms();
  for (size_t o = 0; o < src.w().n_objects(); ++o)
    r.phip.comp.push_back(static_cast<int>(m.phi.comp[o] * nmx) + tgt.w().id(m.f.obj_map[o]));
  return r;
}

inline LaxSliceMorphism from_coalgebra_morphism(const CoalgebraObject& ctgt, const LaxCoalgMorphism& m,
                                                const SliceObject& src, const SliceObject& tgt) {
  LaxSliceMorphism r;
  r.f = m.f;
  r.phi.src = compose_functors(tgt.a, m.f);
  r.phi.tgt = src.a;
  for (size_t o = 0; o < src.w().n_objects(); ++o)
    r.phi.comp.push_back(ctgt.prod.proj0.mor_map[m.phip.comp[o]]);
  return r;
}

}  // namespace laxcomma
