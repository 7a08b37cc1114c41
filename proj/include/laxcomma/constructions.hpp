#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "laxcomma/fincat.hpp"

namespace laxcomma {

// ---------------------------------------------------------------------------
// Comma categories a/b over a common codomain
// ---------------------------------------------------------------------------

// Objects are triples (object of dom a, object of dom b, connecting morphism);
// morphisms are pairs making the defining square commute.
struct CommaResult {
  FinCategory cat;
  FinFunctor proj0;   // to dom(a)
  FinFunctor proj1;   // to dom(b)
  NatTrans lambda;    // a∘proj0 => b∘proj1, component at each object is its beta

  // bookkeeping for factorizations
  std::vector<std::array<int, 3>> obj_data;  // (x-object, w-object, beta in cod)
  std::vector<std::array<int, 2>> mor_data;  // (u in dom a, v in dom b)

  int find_obj(int x, int w, int beta) const {
    for (size_t i = 0; i < obj_data.size(); ++i)
      if (obj_data[i] == std::array<int, 3>{x, w, beta}) return static_cast<int>(i);
    return -1;
  }
  // both endpoints are needed: (u,v) alone does not pin the target triple
  int find_mor(int src_obj, int tgt_obj, int u, int v) const {
    for (size_t i = 0; i < mor_data.size(); ++i)
      if (mor_data[i] == std::array<int, 2>{u, v} && cat.src(static_cast<int>(i)) == src_obj &&
          cat.tgt(static_cast<int>(i)) == tgt_obj)
        return static_cast<int>(i);
    return -1;
  }
};

inline CommaResult comma_category(const FinFunctor& a, const FinFunctor& b) {
  if (!(a.cod == b.cod)) throw std::invalid_argument("comma_category: codomain-mismatch");
  const FinCategory& x = a.dom;
  const FinCategory& w = b.dom;
  const FinCategory& y = a.cod;

  CommaResult r;
  r.cat.name = str(a.name, "/", b.name);
  for (size_t ox = 0; ox < x.n_objects(); ++ox)
    for (size_t ow = 0; ow < w.n_objects(); ++ow)
      for (int beta : y.hom(a.obj_map[ox], b.obj_map[ow])) {
        r.cat.objects.push_back(
            str("(", x.objects[ox], ",", w.objects[ow], ",", y.morphisms[beta].id, ")"));
        r.obj_data.push_back({static_cast<int>(ox), static_cast<int>(ow), beta});
      }

  for (size_t s = 0; s < r.obj_data.size(); ++s)
    for (size_t t = 0; t < r.obj_data.size(); ++t) {
      auto [sx, sw, sb] = r.obj_data[s];
      auto [tx, tw, tb] = r.obj_data[t];
      for (int u : x.hom(sx, tx))
        for (int v : w.hom(sw, tw))
          if (y.compose(tb, a.mor_map[u]) == y.compose(b.mor_map[v], sb)) {
            r.cat.morphisms.push_back({str("(", x.morphisms[u].id, ",", w.morphisms[v].id, ")@",
                                           r.cat.objects[s]),
                                       static_cast<int>(s), static_cast<int>(t)});
            r.mor_data.push_back({u, v});
          }
    }

  r.cat.identities.resize(r.cat.n_objects());
  for (size_t o = 0; o < r.obj_data.size(); ++o) {
    int m = r.find_mor(static_cast<int>(o), static_cast<int>(o), x.id(r.obj_data[o][0]),
                       w.id(r.obj_data[o][1]));
    r.cat.identities[o] = m;
  }
  size_t nm = r.cat.n_morphisms();
  r.cat.table.assign(nm, std::vector<int>(nm, -1));
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) {
      if (!r.cat.composable(static_cast<int>(g), static_cast<int>(f))) continue;
      int u = x.compose(r.mor_data[g][0], r.mor_data[f][0]);
      int v = w.compose(r.mor_data[g][1], r.mor_data[f][1]);
      r.cat.table[g][f] = r.find_mor(r.cat.src(static_cast<int>(f)),
                                     r.cat.tgt(static_cast<int>(g)), u, v);
    }

  r.proj0.name = str(a.name, "^=>(", b.name, ")");
  r.proj0.dom = r.cat;
  r.proj0.cod = x;
  r.proj1.name = str(b.name, "^<=(", a.name, ")");
  r.proj1.dom = r.cat;
  r.proj1.cod = w;
  for (const auto& od : r.obj_data) {
    r.proj0.obj_map.push_back(od[0]);
    r.proj1.obj_map.push_back(od[1]);
  }
  for (const auto& md : r.mor_data) {
    r.proj0.mor_map.push_back(md[0]);
    r.proj1.mor_map.push_back(md[1]);
  }

  r.lambda.src = compose_functors(a, r.proj0);
  r.lambda.tgt = compose_functors(b, r.proj1);
  for (const auto& od : r.obj_data) r.lambda.comp.push_back(od[2]);
  return r;
}

// Unique functor h with proj0∘h = h0, proj1∘h = h1 and lambda * h = phi.
// The comma category contains exactly the triples, so components are pinned;
// exactly-one-candidate is asserted at every object and morphism.
inline FinFunctor comma_factor(const CommaResult& c, const FinFunctor& h0, const FinFunctor& h1,
                               const NatTrans& phi) {
  if (!(h0.dom == h1.dom)) throw std::invalid_argument("comma_factor: test objects differ");
  const FinCategory& z = h0.dom;
  FinFunctor h;
  h.name = "factor";
  h.dom = z;
  h.cod = c.cat;
  for (size_t o = 0; o < z.n_objects(); ++o) {
    int target = c.find_obj(h0.obj_map[o], h1.obj_map[o], phi.comp[o]);
    if (target < 0) throw std::logic_error("comma_factor: no-factorization at an object");
    for (size_t other = target + 1; other < c.obj_data.size(); ++other)
      if (c.obj_data[other] == c.obj_data[target])
        throw std::logic_error("comma_factor: non-unique object candidate");
    h.obj_map.push_back(target);
  }
  for (size_t m = 0; m < z.n_morphisms(); ++m) {
    int target = c.find_mor(h.obj_map[z.src(static_cast<int>(m))], h.obj_map[z.tgt(static_cast<int>(m))],
                            h0.mor_map[m], h1.mor_map[m]);
    if (target < 0) throw std::logic_error("comma_factor: no-factorization at a morphism");
    h.mor_map.push_back(target);
  }
  auto v = validate_functor(h);
  if (!v.ok()) throw std::logic_error(str("comma_factor: invalid factor: ", v.errors.front()));
  if (!(compose_functors(c.proj0, h) == h0) || !(compose_functors(c.proj1, h) == h1))
    throw std::logic_error("comma_factor: projections do not recover the cone");
  auto whiskered = nat_whisker(h, c.lambda, identity_functor(c.lambda.src.cod));
  if (whiskered.comp != phi.comp) throw std::logic_error("comma_factor: two-cell clause failed");
  return h;
}

// Two-dimensional clause: the unique 2-cell xi with proj0 * xi = xi0, proj1 * xi = xi1.
inline NatTrans comma_factor_two_cell(const CommaResult& c, const FinFunctor& h, const FinFunctor& hp,
                                      const NatTrans& xi0, const NatTrans& xi1) {
  const FinCategory& z = h.dom;
  NatTrans xi;
  xi.src = h;
  xi.tgt = hp;
  for (size_t o = 0; o < z.n_objects(); ++o) {
    int m = c.find_mor(h.obj_map[o], hp.obj_map[o], xi0.comp[o], xi1.comp[o]);
    if (m < 0) throw std::logic_error("comma_factor_two_cell: no-factorization");
    xi.comp.push_back(m);
  }
  auto v = validate_nat(xi);
  if (!v.ok()) throw std::logic_error(str("comma_factor_two_cell: invalid 2-cell: ", v.errors.front()));
  return xi;
}

// ---------------------------------------------------------------------------
// Strict pullbacks in Cat
// ---------------------------------------------------------------------------

struct PullbackResult {
  FinCategory cat;
  FinFunctor proj0, proj1;
  std::vector<std::array<int, 2>> obj_data, mor_data;

  int find_obj(int x, int w) const {
    for (size_t i = 0; i < obj_data.size(); ++i)
      if (obj_data[i] == std::array<int, 2>{x, w}) return static_cast<int>(i);
    return -1;
  }
  int find_mor(int u, int v) const {
    for (size_t i = 0; i < mor_data.size(); ++i)
      if (mor_data[i] == std::array<int, 2>{u, v}) return static_cast<int>(i);
    return -1;
  }
};

inline PullbackResult pullback_category(const FinFunctor& a, const FinFunctor& b) {
  if (!(a.cod == b.cod)) throw std::invalid_argument("pullback_category: codomain-mismatch");
  const FinCategory& x = a.dom;
  const FinCategory& w = b.dom;
  PullbackResult r;
  r.cat.name = str(a.name, "xx", b.name);
  for (size_t ox = 0; ox < x.n_objects(); ++ox)
    for (size_t ow = 0; ow < w.n_objects(); ++ow)
      if (a.obj_map[ox] == b.obj_map[ow]) {
        r.cat.objects.push_back(str("(", x.objects[ox], ",", w.objects[ow], ")"));
        r.obj_data.push_back({static_cast<int>(ox), static_cast<int>(ow)});
      }
  for (size_t u = 0; u < x.n_morphisms(); ++u)
    for (size_t v = 0; v < w.n_morphisms(); ++v)
      if (a.mor_map[u] == b.mor_map[v]) {
        int s = r.find_obj(x.src(static_cast<int>(u)), w.src(static_cast<int>(v)));
        int t = r.find_obj(x.tgt(static_cast<int>(u)), w.tgt(static_cast<int>(v)));
        r.cat.morphisms.push_back(
            {str("(", x.morphisms[u].id, ",", w.morphisms[v].id, ")"), s, t});
        r.mor_data.push_back({static_cast<int>(u), static_cast<int>(v)});
      }
  r.cat.identities.resize(r.cat.n_objects());
  for (size_t o = 0; o < r.obj_data.size(); ++o)
    r.cat.identities[o] = r.find_mor(x.id(r.obj_data[o][0]), w.id(r.obj_data[o][1]));
  size_t nm = r.cat.n_morphisms();
  r.cat.table.assign(nm, std::vector<int>(nm, -1));
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) {
      if (!r.cat.composable(static_cast<int>(g), static_cast<int>(f))) continue;
      r.cat.table[g][f] =
          r.find_mor(x.compose(r.mor_data[g][0], r.mor_data[f][0]),
                     w.compose(r.mor_data[g][1], r.mor_data[f][1]));
    }
  r.proj0.name = "pb_proj0";
  r.proj0.dom = r.cat;
  r.proj0.cod = x;
  r.proj1.name = "pb_proj1";
  r.proj1.dom = r.cat;
  r.proj1.cod = w;
  for (const auto& od : r.obj_data) {
    r.proj0.obj_map.push_back(od[0]);
    r.proj1.obj_map.push_back(od[1]);
  }
  for (const auto& md : r.mor_data) {
    r.proj0.mor_map.push_back(md[0]);
    r.proj1.mor_map.push_back(md[1]);
  }
  return r;
}

inline FinFunctor pullback_factor(const PullbackResult& p, const FinFunctor& h0, const FinFunctor& h1) {
  if (!(h0.dom == h1.dom)) throw std::invalid_argument("pullback_factor: test objects differ");
  const FinCategory& z = h0.dom;
  FinFunctor h;
  h.name = "pb_factor";
  h.dom = z;
  h.cod = p.cat;
  for (size_t o = 0; o < z.n_objects(); ++o) {
    int target = p.find_obj(h0.obj_map[o], h1.obj_map[o]);
    if (target < 0) throw std::logic_error("pullback_factor: no-factorization at an object");
    h.obj_map.push_back(target);
  }
  for (size_t m = 0; m < z.n_morphisms(); ++m) {
    int target = p.find_mor(h0.mor_map[m], h1.mor_map[m]);
    if (target < 0) throw std::logic_error("pullback_factor: no-factorization at a morphism");
    h.mor_map.push_back(target);
  }
  auto v = validate_functor(h);
  if (!v.ok()) throw std::logic_error("pullback_factor: invalid factor");
  return h;
}

// ---------------------------------------------------------------------------
// Coequalizers of monotone maps
// ---------------------------------------------------------------------------

struct CoeqResult {
  FinPreorder q;
  MonotoneMap e;                 // x -> q
  std::vector<int> cls;          // x element -> class index
};

// Quotient of the codomain by the equivalence generated by g(t) ~ h(t),
// ordered by the transitive closure of the image order. Class names are the
// lexicographically least member.
inline CoeqResult preorder_coequalizer(const MonotoneMap& g, const MonotoneMap& h) {
  if (!(g.dom == h.dom) || !(g.cod == h.cod))
    throw std::invalid_argument("preorder_coequalizer: endpoint-mismatch");
  const FinPreorder& x = g.cod;
  size_t n = x.size();
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (size_t t = 0; t < g.dom.size(); ++t) {
    int a = find(g.map[t]), b = find(h.map[t]);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> classes;
  for (size_t i = 0; i < n; ++i) classes[find(static_cast<int>(i))].push_back(static_cast<int>(i));

  CoeqResult r;
  std::vector<std::pair<std::string, int>> reps;  // (least member name, root)
  for (auto& [root, members] : classes) {
    std::string least = x.elems[members.front()];
    for (int m : members) least = std::min(least, x.elems[m]);
    reps.push_back({least, root});
  }
  std::sort(reps.begin(), reps.end());
  std::map<int, int> root_to_class;
  for (size_t i = 0; i < reps.size(); ++i) {
    root_to_class[reps[i].second] = static_cast<int>(i);
    r.q.elems.push_back(reps[i].first);
  }
  r.q.name = str(x.name, "_coeq");
  r.cls.resize(n);
  for (size_t i = 0; i < n; ++i) r.cls[i] = root_to_class[find(static_cast<int>(i))];

  size_t m = r.q.size();
  r.q.le.assign(m, std::vector<uint8_t>(m, 0));
  for (size_t i = 0; i < m; ++i) r.q.le[i][i] = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (x.leq(static_cast<int>(i), static_cast<int>(j))) r.q.le[r.cls[i]][r.cls[j]] = 1;
  for (size_t k = 0; k < m; ++k)
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        if (r.q.le[i][k] && r.q.le[k][j]) r.q.le[i][j] = 1;

  r.e.dom = x;
  r.e.cod = r.q;
  r.e.map = r.cls;
  return r;
}

// Factors a coequalizing monotone map through the quotient; returns the unique
// mediating map (components are forced on representatives).
inline Result<MonotoneMap> coequalizer_factor(const CoeqResult& c, const MonotoneMap& k) {
  std::vector<std::string> errors;
  if (!(k.dom == c.e.dom)) errors.push_back("endpoint-mismatch");
  std::vector<int> map(c.q.size(), -1);
  for (size_t i = 0; errors.empty() && i < c.cls.size(); ++i) {
    int q = c.cls[i];
    if (map[q] == -1) map[q] = k.map[i];
    else if (map[q] != k.map[i])
      errors.push_back(str("not well-defined: class of ", c.q.elems[q], " maps two ways"));
  }
  if (!errors.empty()) return fail_result<MonotoneMap>(std::move(errors));
  return validate_monotone(c.q, k.cod, map);
}

// ---------------------------------------------------------------------------
// Preorder reflection of a finite category
// ---------------------------------------------------------------------------

struct ReflectionResult {
  FinPreorder preorder;
  FinCategory thin;     // the preorder as a category
  FinFunctor unit;      // c -> thin, the collapse functor
};

inline ReflectionResult preorder_reflection(const FinCategory& c) {
  ReflectionResult r;
  r.preorder.name = str(c.name, "_refl");
  r.preorder.elems = c.objects;
  size_t n = c.n_objects();
  r.preorder.le.assign(n, std::vector<uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!c.hom(static_cast<int>(i), static_cast<int>(j)).empty()) r.preorder.le[i][j] = 1;
  r.thin = category_from_preorder(r.preorder);
  r.unit.name = str("eta_", c.name);
  r.unit.dom = c;
  r.unit.cod = r.thin;
  for (size_t i = 0; i < n; ++i) r.unit.obj_map.push_back(static_cast<int>(i));
  for (size_t m = 0; m < c.n_morphisms(); ++m)
    r.unit.mor_map.push_back(
        r.thin.mor(str(c.objects[c.src(static_cast<int>(m))], "<=", c.objects[c.tgt(static_cast<int>(m))])));
  return r;
}

// ---------------------------------------------------------------------------
// Free finite-coproduct completion (bounded families)
// ---------------------------------------------------------------------------

struct FamCategory {
  FinCategory base;
  int bound = 1;
  FinCategory cat;
  FinFunctor inclusion;                       // base -> cat, singleton families
  std::vector<std::vector<int>> obj_lists;    // family object -> base objects
  std::vector<std::vector<int>> reindex;      // morphism -> t0 (1-based positions collapsed to 0-based)
  std::vector<std::vector<int>> comps;        // morphism -> base morphisms

  // the hom-level 2-cell bookkeeping: 2-cells may exist only between parallel
  // morphisms with equal reindexing
  bool same_reindexing(int m1, int m2) const {
    return cat.src(m1) == cat.src(m2) && cat.tgt(m1) == cat.tgt(m2) && reindex[m1] == reindex[m2];
  }
};

inline FamCategory fam_build(const FinCategory& base, int bound) {
  if (bound < 1) throw std::invalid_argument("fam_build: bound-too-small");
  FamCategory fam;
  fam.base = base;
  fam.bound = bound;
  fam.cat.name = str("fam", bound, "(", base.name, ")");

  std::vector<std::vector<int>> lists = {{}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<int> idx(len, 0);
    while (true) {
      lists.push_back(idx);
      size_t k = 0;
      while (k < idx.size() && ++idx[k] == static_cast<int>(base.n_objects())) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    if (base.n_objects() == 0) break;
  }
  std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  auto obj_name = [&](const std::vector<int>& l) {
    std::string s = "[";
    for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + base.objects[l[i]];
    return s + "]";
  };
  for (const auto& l : lists) {
    fam.cat.objects.push_back(obj_name(l));
    fam.obj_lists.push_back(l);
  }

  auto mor_name = [&](int s, int t, const std::vector<int>& t0, const std::vector<int>& cs) {
    std::string name = "t{";
    for (size_t i = 0; i < t0.size(); ++i) name += (i ? "," : "") + str(t0[i] + 1);
    name += "|";
    for (size_t i = 0; i < cs.size(); ++i) name += (i ? "," : "") + base.morphisms[cs[i]].id;
    return name + "}@" + fam.cat.objects[s] + "->" + fam.cat.objects[t];
  };

  for (size_t s = 0; s < fam.obj_lists.size(); ++s)
    for (size_t t = 0; t < fam.obj_lists.size(); ++t) {
      const auto& sl = fam.obj_lists[s];
      const auto& tl = fam.obj_lists[t];
      // enumerate reindexings t0 : positions(s) -> positions(t), then components
      std::vector<int> t0(sl.size(), 0);
      if (!sl.empty() && tl.empty()) continue;
      while (true) {
        std::vector<std::vector<int>> choice(sl.size());
        bool feasible = true;
        for (size_t j = 0; feasible && j < sl.size(); ++j) {
          choice[j] = base.hom(sl[j], tl[t0[j]]);
          if (choice[j].empty()) feasible = false;
        }
        if (feasible) {
          std::vector<int> pick(sl.size(), 0);
          while (true) {
            std::vector<int> cs(sl.size());
            for (size_t j = 0; j < sl.size(); ++j) cs[j] = choice[j][pick[j]];
            fam.cat.morphisms.push_back({mor_name(static_cast<int>(s), static_cast<int>(t), t0, cs),
                                         static_cast<int>(s), static_cast<int>(t)});
            fam.reindex.push_back(t0);
            fam.comps.push_back(cs);
            size_t k = 0;
            while (k < pick.size() && ++pick[k] == static_cast<int>(choice[k].size())) pick[k++] = 0;
            if (k == pick.size()) break;
            if (sl.empty()) break;
          }
        }
        if (sl.empty()) break;
        size_t k = 0;
        while (k < t0.size() && ++t0[k] == static_cast<int>(tl.size())) t0[k++] = 0;
        if (k == t0.size()) break;
      }
    }

  auto find_mor = [&](int s, int t, const std::vector<int>& t0, const std::vector<int>& cs) {
    for (size_t m = 0; m < fam.cat.morphisms.size(); ++m)
      if (fam.cat.src(static_cast<int>(m)) == s && fam.cat.tgt(static_cast<int>(m)) == t &&
          fam.reindex[m] == t0 && fam.comps[m] == cs)
        return static_cast<int>(m);
    return -1;
  };

  fam.cat.identities.resize(fam.cat.n_objects());
  for (size_t o = 0; o < fam.obj_lists.size(); ++o) {
    std::vector<int> t0(fam.obj_lists[o].size());
    std::iota(t0.begin(), t0.end(), 0);
    std::vector<int> cs;
    for (int b : fam.obj_lists[o]) cs.push_back(base.id(b));
    fam.cat.identities[o] = find_mor(static_cast<int>(o), static_cast<int>(o), t0, cs);
  }
  size_t nm = fam.cat.n_morphisms();
  fam.cat.table.assign(nm, std::vector<int>(nm, -1));
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) {
      if (!fam.cat.composable(static_cast<int>(g), static_cast<int>(f))) continue;
      std::vector<int> t0(fam.reindex[f].size()), cs(fam.comps[f].size());
      for (size_t j = 0; j < t0.size(); ++j) {
        t0[j] = fam.reindex[g][fam.reindex[f][j]];
        cs[j] = base.compose(fam.comps[g][fam.reindex[f][j]], fam.comps[f][j]);
      }
      fam.cat.table[g][f] = find_mor(fam.cat.src(static_cast<int>(f)),
                                     fam.cat.tgt(static_cast<int>(g)), t0, cs);
    }

  fam.inclusion.name = str("I_", base.name);
  fam.inclusion.dom = base;
  fam.inclusion.cod = fam.cat;
  for (size_t x = 0; x < base.n_objects(); ++x) {
    std::vector<int> singleton = {static_cast<int>(x)};
    for (size_t o = 0; o < fam.obj_lists.size(); ++o)
      if (fam.obj_lists[o] == singleton) fam.inclusion.obj_map.push_back(static_cast<int>(o));
  }
  for (size_t m = 0; m < base.n_morphisms(); ++m) {
    int s = fam.inclusion.obj_map[base.src(static_cast<int>(m))];
    int t = fam.inclusion.obj_map[base.tgt(static_cast<int>(m))];
    fam.inclusion.mor_map.push_back(find_mor(s, t, {0}, {static_cast<int>(m)}));
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Coproducts of preorders and the extensivity comparison
// ---------------------------------------------------------------------------

struct CoproductResult {
  FinPreorder sum;
  std::vector<MonotoneMap> injections;
  std::vector<std::pair<int, int>> tags;  // sum element -> (part, element)

  int find(int part, int elem) const {
    for (size_t i = 0; i < tags.size(); ++i)
      if (tags[i] == std::pair<int, int>{part, elem}) return static_cast<int>(i);
    return -1;
  }
};

inline CoproductResult coproduct_preorder(const std::vector<FinPreorder>& parts) {
  CoproductResult r;
  r.sum.name = "coprod";
  for (size_t j = 0; j < parts.size(); ++j)
    for (size_t e = 0; e < parts[j].size(); ++e) {
      r.sum.elems.push_back(str(j, ":", parts[j].elems[e]));
      r.tags.push_back({static_cast<int>(j), static_cast<int>(e)});
    }
  size_t n = r.sum.elems.size();
  r.sum.le.assign(n, std::vector<uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (r.tags[i].first == r.tags[j].first &&
          parts[r.tags[i].first].leq(r.tags[i].second, r.tags[j].second))
        r.sum.le[i][j] = 1;
  for (size_t j = 0; j < parts.size(); ++j) {
    MonotoneMap inj;
    inj.dom = parts[j];
    inj.cod = r.sum;
    for (size_t e = 0; e < parts[j].size(); ++e)
      inj.map.push_back(r.find(static_cast<int>(j), static_cast<int>(e)));
    r.injections.push_back(std::move(inj));
  }
  return r;
}

struct ExtensivityReport {
  bool decomposition_ok = false;    // fibers reassemble to the domain over the sum
  bool hom_bijection_ok = false;    // slice homs decompose as a product (when b given)
  std::vector<std::vector<int>> fibers;
  long long hom_count_direct = -1, hom_count_product = -1;
  std::vector<std::string> notes;
};

// Slice morphisms (v,b) -> (w,a) over the common codomain: monotone k with a∘k = b.
inline long long count_slice_homs(const MonotoneMap& b, const MonotoneMap& a, SearchBudget& budget) {
  long long count = 0;
  for (const auto& k : enumerate_monotone_maps(b.dom, a.dom, budget)) {
    bool over = true;
    for (size_t i = 0; i < b.dom.size(); ++i)
      if (a.map[k.map[i]] != b.map[i]) over = false;
    if (over) ++count;
  }
  return count;
}

inline FinPreorder restrict_preorder(const FinPreorder& p, const std::vector<int>& elems) {
  FinPreorder r;
  r.name = str(p.name, "_sub");
  for (int e : elems) r.elems.push_back(p.elems[e]);
  r.le.assign(elems.size(), std::vector<uint8_t>(elems.size(), 0));
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) r.le[i][j] = p.le[elems[i]][elems[j]];
  return r;
}

// Decomposes a map into the coproduct by fibers and certifies the comparison;
// optionally verifies the hom-set product formula against a second object.
inline ExtensivityReport extensivity_check(const std::vector<FinPreorder>& parts,
                                           const CoproductResult& sum, const MonotoneMap& a,
                                           const MonotoneMap* b, SearchBudget& budget) {
  ExtensivityReport rep;
  size_t nparts = parts.size();
  rep.fibers.assign(nparts, {});
  for (size_t i = 0; i < a.dom.size(); ++i)
    rep.fibers[sum.tags[a.map[i]].first].push_back(static_cast<int>(i));

  // cross-fiber comparabilities cannot happen for a monotone map into a coproduct
  rep.decomposition_ok = true;
  for (size_t i = 0; i < a.dom.size(); ++i)
    for (size_t j = 0; j < a.dom.size(); ++j)
      if (a.dom.leq(static_cast<int>(i), static_cast<int>(j)) &&
          sum.tags[a.map[i]].first != sum.tags[a.map[j]].first) {
        rep.decomposition_ok = false;
        rep.notes.push_back(str("cross-fiber relation ", a.dom.elems[i], "<=", a.dom.elems[j]));
      }
  // fibers with the restricted order reassemble to the domain
  std::vector<FinPreorder> fiber_pre;
  for (size_t j = 0; j < nparts; ++j) fiber_pre.push_back(restrict_preorder(a.dom, rep.fibers[j]));
  auto reassembled = coproduct_preorder(fiber_pre);
  if (reassembled.sum.size() != a.dom.size()) rep.decomposition_ok = false;
  // order-isomorphism along the evident bijection
  std::vector<int> to_orig(reassembled.sum.size());
  {
    size_t k = 0;
    for (size_t j = 0; j < nparts; ++j)
      for (int e : rep.fibers[j]) to_orig[k++] = e;
  }
  for (size_t i = 0; rep.decomposition_ok && i < reassembled.sum.size(); ++i)
    for (size_t j = 0; j < reassembled.sum.size(); ++j)
      if (reassembled.sum.leq(static_cast<int>(i), static_cast<int>(j)) !=
          a.dom.leq(to_orig[i], to_orig[j])) {
        rep.decomposition_ok = false;
        rep.notes.push_back("restricted order does not reassemble");
      }

  if (b != nullptr) {
    rep.hom_count_direct = count_slice_homs(*b, a, budget);
    // componentwise: fibers of b against fibers of a over matching parts
    std::vector<std::vector<int>> bfib(nparts);
    for (size_t i = 0; i < b->dom.size(); ++i)
      bfib[sum.tags[b->map[i]].first].push_back(static_cast<int>(i));
    rep.hom_count_product = 1;
    for (size_t j = 0; j < nparts; ++j) {
      MonotoneMap aj, bj;
      aj.dom = fiber_pre[j];
      aj.cod = parts[j];
      for (int e : rep.fibers[j]) aj.map.push_back(sum.tags[a.map[e]].second);
      bj.dom = restrict_preorder(b->dom, bfib[j]);
      bj.cod = parts[j];
      for (int e : bfib[j]) bj.map.push_back(sum.tags[b->map[e]].second);
      rep.hom_count_product *= count_slice_homs(bj, aj, budget);
    }
    rep.hom_bijection_ok = rep.hom_count_direct == rep.hom_count_product;
  }
  return rep;
}

}  // namespace laxcomma
