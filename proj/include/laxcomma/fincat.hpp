#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "laxcomma/common.hpp"

namespace laxcomma {

// ---------------------------------------------------------------------------
// Finite preorders
// ---------------------------------------------------------------------------

struct FinPreorder {
  std::string name;
  std::vector<std::string> elems;
  std::vector<std::vector<uint8_t>> le;  // le[i][j] == 1  iff  elem i <= elem j

  bool operator==(const FinPreorder&) const = default;

  int index(const std::string& e) const {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return static_cast<int>(i);
    return -1;
  }
  size_t size() const { return elems.size(); }
  bool leq(int i, int j) const { return le[i][j] != 0; }
};

// Builds a preorder from the reflexive closure of the given pairs. Transitive
// closure is not taken: a missing consequence is a validation error.
inline Result<FinPreorder> validate_preorder(const std::string& name,
                                             const std::vector<std::string>& elems,
                                             const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::string> errors;
  FinPreorder p;
  p.name = name;
  p.elems = elems;
  std::set<std::string> seen;
  for (const auto& e : elems)
    if (!seen.insert(e).second) errors.push_back(str("duplicate-identifier: element '", e, "'"));
  size_t n = elems.size();
  p.le.assign(n, std::vector<uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i) p.le[i][i] = 1;
  for (const auto& [a, b] : pairs) {
    int i = p.index(a), j = p.index(b);
    if (i < 0) errors.push_back(str("unknown-element: '", a, "'"));
    if (j < 0) errors.push_back(str("unknown-element: '", b, "'"));
    if (i >= 0 && j >= 0) p.le[i][j] = 1;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (p.le[i][j] && p.le[j][k] && !p.le[i][k])
          errors.push_back(str("transitivity-violation: ", elems[i], "<=", elems[j], "<=", elems[k],
                               " but not ", elems[i], "<=", elems[k]));
  if (!errors.empty()) return fail_result<FinPreorder>(std::move(errors));
  return ok_result(std::move(p));
}

inline FinPreorder make_preorder(const std::string& name, const std::vector<std::string>& elems,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto r = validate_preorder(name, elems, pairs);
  if (!r.ok()) throw std::invalid_argument(str("invalid preorder '", name, "': ", r.errors.front()));
  return *r;
}

struct MonotoneMap {
  FinPreorder dom, cod;
  std::vector<int> map;  // dom element -> cod element

  bool operator==(const MonotoneMap&) const = default;
  int operator()(int i) const { return map[i]; }
};

inline Result<MonotoneMap> validate_monotone(const FinPreorder& dom, const FinPreorder& cod,
                                             const std::vector<int>& map) {
  std::vector<std::string> errors;
  if (map.size() != dom.size()) errors.push_back("monotone-map: wrong arity");
  for (size_t i = 0; errors.empty() && i < dom.size(); ++i)
    if (map[i] < 0 || map[i] >= static_cast<int>(cod.size()))
      errors.push_back(str("monotone-map: image of '", dom.elems[i], "' out of range"));
  if (errors.empty())
    for (size_t i = 0; i < dom.size(); ++i)
      for (size_t j = 0; j < dom.size(); ++j)
        if (dom.leq(i, j) && !cod.leq(map[i], map[j]))
          errors.push_back(str("monotonicity-violation: ", dom.elems[i], "<=", dom.elems[j],
                               " but not ", cod.elems[map[i]], "<=", cod.elems[map[j]]));
  if (!errors.empty()) return fail_result<MonotoneMap>(std::move(errors));
  return ok_result(MonotoneMap{dom, cod, map});
}

inline std::vector<MonotoneMap> enumerate_monotone_maps(const FinPreorder& dom, const FinPreorder& cod,
                                                        SearchBudget& budget) {
  std::vector<MonotoneMap> out;
  size_t n = dom.size();
  if (cod.size() == 0) {
    if (n == 0) out.push_back(MonotoneMap{dom, cod, {}});
    return out;
  }
  std::vector<int> map(n, 0);
  // simple odometer with a full monotonicity check per candidate; fine at corpus scale
  while (true) {
    budget.tick();
    bool mono = true;
    for (size_t i = 0; mono && i < n; ++i)
      for (size_t j = 0; mono && j < n; ++j)
        if (dom.leq(i, j) && !cod.leq(map[i], map[j])) mono = false;
    if (mono) out.push_back(MonotoneMap{dom, cod, map});
    size_t k = 0;
    while (k < n && ++map[k] == static_cast<int>(cod.size())) map[k++] = 0;
    if (k == n) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite categories
// ---------------------------------------------------------------------------

struct RawMorphism {
  std::string id, src, tgt;
};

struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;       // (object, morphism)
  std::vector<std::array<std::string, 3>> compose;                   // (g, f, g.f)
};

// Explicit finite category: total composition table over composable pairs.
struct FinCategory {
  struct Mor {
    std::string id;
    int src, tgt;
    bool operator==(const Mor&) const = default;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<int> identities;             // object -> morphism index
  std::vector<std::vector<int>> table;     // table[g][f] = index of g∘f, -1 where not composable

  bool operator==(const FinCategory&) const = default;

  size_t n_objects() const { return objects.size(); }
  size_t n_morphisms() const { return morphisms.size(); }
  int obj(const std::string& o) const {
    for (size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == o) return static_cast<int>(i);
    return -1;
  }
  int mor(const std::string& m) const {
    for (size_t i = 0; i < morphisms.size(); ++i)
      if (morphisms[i].id == m) return static_cast<int>(i);
    return -1;
  }
  int src(int m) const { return morphisms[m].src; }
  int tgt(int m) const { return morphisms[m].tgt; }
  int id(int x) const { return identities[x]; }
  bool composable(int g, int f) const { return src(g) == tgt(f); }
  int compose(int g, int f) const { return table[g][f]; }

  std::vector<int> hom(int x, int y) const {
    std::vector<int> out;
    for (size_t m = 0; m < morphisms.size(); ++m)
      if (morphisms[m].src == x && morphisms[m].tgt == y) out.push_back(static_cast<int>(m));
    return out;
  }
};

inline Result<FinCategory> validate_category(const RawCategory& raw) {
  std::vector<std::string> errors;
  FinCategory c;
  c.name = raw.name;
  c.objects = raw.objects;

  std::set<std::string> seen;
  for (const auto& o : raw.objects)
    if (!seen.insert(o).second) errors.push_back(str("duplicate-identifier: object '", o, "'"));
  seen.clear();
  for (const auto& m : raw.morphisms)
    if (!seen.insert(m.id).second) errors.push_back(str("duplicate-identifier: morphism '", m.id, "'"));

  for (const auto& m : raw.morphisms) {
    int s = c.obj(m.src), t = c.obj(m.tgt);
    if (s < 0 || t < 0) {
      errors.push_back(str("dangling-endpoint: morphism '", m.id, "': ", m.src, " -> ", m.tgt));
      continue;
    }
    c.morphisms.push_back({m.id, s, t});
  }
  if (!errors.empty()) return fail_result<FinCategory>(std::move(errors));

  size_t nm = c.morphisms.size();
  c.identities.assign(c.objects.size(), -1);
  for (const auto& [o, m] : raw.identities) {
    int x = c.obj(o), i = c.mor(m);
    if (x < 0) errors.push_back(str("identity-violation(", o, "): unknown object"));
    else if (i < 0) errors.push_back(str("identity-violation(", o, "): unknown morphism '", m, "'"));
    else if (c.src(i) != x || c.tgt(i) != x)
      errors.push_back(str("identity-violation(", o, "): '", m, "' is not an endomorphism of ", o));
    else if (c.identities[x] != -1)
      errors.push_back(str("identity-violation(", o, "): assigned twice"));
    else c.identities[x] = i;
  }
  for (size_t x = 0; x < c.objects.size(); ++x)
    if (c.identities[x] == -1)
      errors.push_back(str("identity-violation(", c.objects[x], "): no identity assigned"));
  if (!errors.empty()) return fail_result<FinCategory>(std::move(errors));

  c.table.assign(nm, std::vector<int>(nm, -1));
  for (const auto& [g, f, h] : raw.compose) {
    int gi = c.mor(g), fi = c.mor(f), hi = c.mor(h);
    if (gi < 0 || fi < 0 || hi < 0) {
      errors.push_back(str("missing-composite: entry ", g, ".", f, "=", h, " uses unknown morphism"));
      continue;
    }
    if (!c.composable(gi, fi)) {
      errors.push_back(str("non-composable-entry: ", g, ".", f, " (source/target mismatch)"));
      continue;
    }
    if (c.table[gi][fi] != -1 && c.table[gi][fi] != hi) {
      errors.push_back(str("duplicate-composite: ", g, ".", f, " assigned twice"));
      continue;
    }
    c.table[gi][fi] = hi;
  }
  // every composable pair needs an entry; the entry must have the right endpoints
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) {
      if (!c.composable(static_cast<int>(g), static_cast<int>(f))) {
        if (c.table[g][f] != -1)
          errors.push_back(str("non-composable-entry: ", c.morphisms[g].id, ".", c.morphisms[f].id));
        continue;
      }
      int h = c.table[g][f];
      if (h == -1) {
        errors.push_back(str("missing-composite: ", c.morphisms[g].id, ".", c.morphisms[f].id));
        continue;
      }
      if (c.src(h) != c.src(static_cast<int>(f)) || c.tgt(h) != c.tgt(static_cast<int>(g)))
        errors.push_back(str("dangling-endpoint: composite ", c.morphisms[g].id, ".",
                             c.morphisms[f].id, "=", c.morphisms[h].id, " has wrong endpoints"));
    }
  if (!errors.empty()) return fail_result<FinCategory>(std::move(errors));

  for (size_t f = 0; f < nm; ++f) {
    int idt = c.id(c.tgt(static_cast<int>(f))), ids = c.id(c.src(static_cast<int>(f)));
    if (c.table[idt][f] != static_cast<int>(f))
      errors.push_back(str("identity-violation(", c.objects[c.tgt(static_cast<int>(f))], "): id.",
                           c.morphisms[f].id, " != ", c.morphisms[f].id));
    if (c.table[f][ids] != static_cast<int>(f))
      errors.push_back(str("identity-violation(", c.objects[c.src(static_cast<int>(f))], "): ",
                           c.morphisms[f].id, ".id != ", c.morphisms[f].id));
  }

  // full associativity scan over composable triples
  for (size_t h = 0; h < nm; ++h)
    for (size_t g = 0; g < nm; ++g) {
      if (!c.composable(static_cast<int>(h), static_cast<int>(g))) continue;
      for (size_t f = 0; f < nm; ++f) {
        if (!c.composable(static_cast<int>(g), static_cast<int>(f))) continue;
        int hg_f = c.table[c.table[h][g]][f];
        int h_gf = c.table[h][c.table[g][f]];
        if (hg_f != h_gf)
          errors.push_back(str("associativity-violation(", c.morphisms[h].id, ",", c.morphisms[g].id,
                               ",", c.morphisms[f].id, ")"));
      }
    }
  if (!errors.empty()) return fail_result<FinCategory>(std::move(errors));
  return ok_result(std::move(c));
}

inline FinCategory make_category(const RawCategory& raw) {
  auto r = validate_category(raw);
  if (!r.ok()) throw std::invalid_argument(str("invalid category '", raw.name, "': ", r.errors.front()));
  return *r;
}

// Thin category on a preorder: one morphism "a<=b" per related pair.
inline FinCategory category_from_preorder(const FinPreorder& p) {
  RawCategory raw;
  raw.name = p.name.empty() ? std::string("thin") : p.name;
  raw.objects = p.elems;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (p.leq(static_cast<int>(i), static_cast<int>(j)))
        raw.morphisms.push_back({str(p.elems[i], "<=", p.elems[j]), p.elems[i], p.elems[j]});
  for (const auto& e : p.elems) raw.identities.push_back({e, str(e, "<=", e)});
  for (const auto& g : raw.morphisms)
    for (const auto& f : raw.morphisms)
      if (f.tgt == g.src) raw.compose.push_back({g.id, f.id, str(f.src, "<=", g.tgt)});
  return make_category(raw);
}

// ---------------------------------------------------------------------------
// Functors and natural transformations
// ---------------------------------------------------------------------------

struct FinFunctor {
  std::string name;
  FinCategory dom, cod;
  std::vector<int> obj_map;  // dom object -> cod object
  std::vector<int> mor_map;  // dom morphism -> cod morphism

  bool operator==(const FinFunctor& o) const {
    return dom == o.dom && cod == o.cod && obj_map == o.obj_map && mor_map == o.mor_map;
  }
  int on_obj(int x) const { return obj_map[x]; }
  int on_mor(int m) const { return mor_map[m]; }
};

inline Result<FinFunctor> validate_functor(const FinFunctor& f) {
  std::vector<std::string> errors;
  if (f.obj_map.size() != f.dom.n_objects() || f.mor_map.size() != f.dom.n_morphisms())
    errors.push_back("functor: wrong arity");
  for (size_t x = 0; errors.empty() && x < f.obj_map.size(); ++x)
    if (f.obj_map[x] < 0 || f.obj_map[x] >= static_cast<int>(f.cod.n_objects()))
      errors.push_back(str("endpoint-mismatch: image of object '", f.dom.objects[x], "' out of range"));
  for (size_t m = 0; errors.empty() && m < f.mor_map.size(); ++m)
    if (f.mor_map[m] < 0 || f.mor_map[m] >= static_cast<int>(f.cod.n_morphisms()))
      errors.push_back(str("endpoint-mismatch: image of morphism '", f.dom.morphisms[m].id, "' out of range"));
  if (!errors.empty()) return fail_result<FinFunctor>(std::move(errors));

  for (size_t m = 0; m < f.dom.n_morphisms(); ++m) {
    int im = f.mor_map[m];
    if (f.cod.src(im) != f.obj_map[f.dom.src(static_cast<int>(m))] ||
        f.cod.tgt(im) != f.obj_map[f.dom.tgt(static_cast<int>(m))])
      errors.push_back(str("endpoint-mismatch(", f.dom.morphisms[m].id, ")"));
  }
  if (!errors.empty()) return fail_result<FinFunctor>(std::move(errors));

  for (size_t x = 0; x < f.dom.n_objects(); ++x)
    if (f.mor_map[f.dom.id(static_cast<int>(x))] != f.cod.id(f.obj_map[x]))
      errors.push_back(str("identity-not-preserved(", f.dom.objects[x], ")"));
  for (size_t g = 0; g < f.dom.n_morphisms(); ++g)
    for (size_t m = 0; m < f.dom.n_morphisms(); ++m) {
      if (!f.dom.composable(static_cast<int>(g), static_cast<int>(m))) continue;
      int lhs = f.mor_map[f.dom.compose(static_cast<int>(g), static_cast<int>(m))];
      int rhs = f.cod.compose(f.mor_map[g], f.mor_map[m]);
      if (lhs != rhs)
        errors.push_back(str("composition-not-preserved(", f.dom.morphisms[g].id, ",",
                             f.dom.morphisms[m].id, ")"));
    }
  if (!errors.empty()) return fail_result<FinFunctor>(std::move(errors));
  return ok_result(f);
}

inline FinFunctor make_functor(std::string name, const FinCategory& dom, const FinCategory& cod,
                               const std::map<std::string, std::string>& obj_map,
                               const std::map<std::string, std::string>& mor_map) {
  FinFunctor f;
  f.name = std::move(name);
  f.dom = dom;
  f.cod = cod;
  f.obj_map.assign(dom.n_objects(), -1);
  f.mor_map.assign(dom.n_morphisms(), -1);
  for (const auto& [a, b] : obj_map) {
    int x = dom.obj(a), y = cod.obj(b);
    if (x < 0 || y < 0) throw std::invalid_argument(str("functor '", f.name, "': unknown object ", a, "->", b));
    f.obj_map[x] = y;
  }
  for (const auto& [a, b] : mor_map) {
    int x = dom.mor(a), y = cod.mor(b);
    if (x < 0 || y < 0) throw std::invalid_argument(str("functor '", f.name, "': unknown morphism ", a, "->", b));
    f.mor_map[x] = y;
  }
  auto r = validate_functor(f);
  if (!r.ok()) throw std::invalid_argument(str("invalid functor '", f.name, "': ", r.errors.front()));
  return *r;
}

inline FinFunctor identity_functor(const FinCategory& c) {
  FinFunctor f;
  f.name = str("id_", c.name);
  f.dom = c;
  f.cod = c;
  f.obj_map.resize(c.n_objects());
  f.mor_map.resize(c.n_morphisms());
  for (size_t i = 0; i < c.n_objects(); ++i) f.obj_map[i] = static_cast<int>(i);
  for (size_t i = 0; i < c.n_morphisms(); ++i) f.mor_map[i] = static_cast<int>(i);
  return f;
}

inline FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("compose_functors: non-composable");
  FinFunctor h;
  h.name = str(g.name, "∘", f.name);
  h.dom = f.dom;
  h.cod = g.cod;
  h.obj_map.resize(f.obj_map.size());
  h.mor_map.resize(f.mor_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i) h.obj_map[i] = g.obj_map[f.obj_map[i]];
  for (size_t i = 0; i < f.mor_map.size(); ++i) h.mor_map[i] = g.mor_map[f.mor_map[i]];
  return h;
}

struct NatTrans {
  FinFunctor src, tgt;        // parallel functors
  std::vector<int> comp;      // dom object -> cod morphism

  bool operator==(const NatTrans& o) const {
    return src == o.src && tgt == o.tgt && comp == o.comp;
  }
  int at(int x) const { return comp[x]; }
  bool is_identity() const {
    for (size_t x = 0; x < comp.size(); ++x)
      if (comp[x] != src.cod.id(src.obj_map[x])) return false;
    return true;
  }
};

inline Result<NatTrans> validate_nat(const NatTrans& t) {
  std::vector<std::string> errors;
  if (!(t.src.dom == t.tgt.dom) || !(t.src.cod == t.tgt.cod)) {
    errors.push_back("not-parallel");
    return fail_result<NatTrans>(std::move(errors));
  }
  const FinCategory& d = t.src.dom;
  const FinCategory& c = t.src.cod;
  if (t.comp.size() != d.n_objects()) {
    errors.push_back("nat: wrong arity");
    return fail_result<NatTrans>(std::move(errors));
  }
  for (size_t x = 0; x < d.n_objects(); ++x) {
    int m = t.comp[x];
    if (m < 0 || m >= static_cast<int>(c.n_morphisms()) || c.src(m) != t.src.obj_map[x] ||
        c.tgt(m) != t.tgt.obj_map[x])
      errors.push_back(str("component-endpoint-error(", d.objects[x], ")"));
  }
  if (!errors.empty()) return fail_result<NatTrans>(std::move(errors));
  for (size_t f = 0; f < d.n_morphisms(); ++f) {
    int x = d.src(static_cast<int>(f)), y = d.tgt(static_cast<int>(f));
    int lhs = c.compose(t.tgt.mor_map[f], t.comp[x]);
    int rhs = c.compose(t.comp[y], t.src.mor_map[f]);
    if (lhs != rhs) errors.push_back(str("naturality-violation(", d.morphisms[f].id, ")"));
  }
  if (!errors.empty()) return fail_result<NatTrans>(std::move(errors));
  return ok_result(t);
}

inline NatTrans make_nat(const FinFunctor& src, const FinFunctor& tgt,
                         const std::map<std::string, std::string>& components) {
  NatTrans t;
  t.src = src;
  t.tgt = tgt;
  t.comp.assign(src.dom.n_objects(), -1);
  for (const auto& [o, m] : components) {
    int x = src.dom.obj(o), mm = src.cod.mor(m);
    if (x < 0 || mm < 0) throw std::invalid_argument(str("nat: unknown component ", o, ": ", m));
    t.comp[x] = mm;
  }
  auto r = validate_nat(t);
  if (!r.ok()) throw std::invalid_argument(str("invalid nat: ", r.errors.front()));
  return *r;
}

inline NatTrans identity_nat(const FinFunctor& f) {
  NatTrans t;
  t.src = f;
  t.tgt = f;
  t.comp.resize(f.dom.n_objects());
  for (size_t x = 0; x < f.dom.n_objects(); ++x) t.comp[x] = f.cod.id(f.obj_map[x]);
  return t;
}

// vertical composition s · t  (t : F => G, s : G => H)
inline NatTrans nat_vcomp(const NatTrans& s, const NatTrans& t) {
  if (!(t.tgt == s.src)) throw std::invalid_argument("nat_vcomp: non-composable");
  NatTrans r;
  r.src = t.src;
  r.tgt = s.tgt;
  r.comp.resize(t.comp.size());
  for (size_t x = 0; x < t.comp.size(); ++x)
    r.comp[x] = t.src.cod.compose(s.comp[x], t.comp[x]);
  return r;
}

// whiskering g * t * f: component at x is g(t_{f(x)})
inline NatTrans nat_whisker(const FinFunctor& f, const NatTrans& t, const FinFunctor& g) {
  if (!(f.cod == t.src.dom) || !(t.src.cod == g.dom))
    throw std::invalid_argument("nat_whisker: non-composable");
  NatTrans r;
  r.src = compose_functors(g, compose_functors(t.src, f));
  r.tgt = compose_functors(g, compose_functors(t.tgt, f));
  r.comp.resize(f.dom.n_objects());
  for (size_t x = 0; x < f.dom.n_objects(); ++x)
    r.comp[x] = g.mor_map[t.comp[f.obj_map[x]]];
  return r;
}

inline NatTrans whisker_left(const FinFunctor& g, const NatTrans& t) {
  return nat_whisker(identity_functor(t.src.dom), t, g);
}

inline NatTrans whisker_right(const NatTrans& t, const FinFunctor& f) {
  return nat_whisker(f, t, identity_functor(t.src.cod));
}

// ---------------------------------------------------------------------------
// Elementary calculus
// ---------------------------------------------------------------------------

inline std::vector<int> hom_set(const FinCategory& c, const std::string& x, const std::string& y) {
  int xi = c.obj(x), yi = c.obj(y);
  if (xi < 0 || yi < 0) throw std::invalid_argument(str("unknown-object: ", x, " or ", y));
  return c.hom(xi, yi);
}

inline bool isomorphic_objects(const FinCategory& c, int x, int y) {
  for (int f : c.hom(x, y))
    for (int g : c.hom(y, x))
      if (c.compose(g, f) == c.id(x) && c.compose(f, g) == c.id(y)) return true;
  return false;
}

struct FunctorProps {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  bool isomorphism = false;
};

inline FunctorProps functor_properties(const FinFunctor& f) {
  FunctorProps p;
  p.fully_faithful = true;
  for (size_t x = 0; x < f.dom.n_objects(); ++x)
    for (size_t y = 0; y < f.dom.n_objects(); ++y) {
      auto dom_hom = f.dom.hom(static_cast<int>(x), static_cast<int>(y));
      auto cod_hom = f.cod.hom(f.obj_map[x], f.obj_map[y]);
      std::set<int> image;
      for (int m : dom_hom) image.insert(f.mor_map[m]);
      if (image.size() != dom_hom.size() || image.size() != cod_hom.size()) p.fully_faithful = false;
    }
  p.essentially_surjective = true;
  for (size_t cobj = 0; cobj < f.cod.n_objects(); ++cobj) {
    bool hit = false;
    for (size_t x = 0; x < f.dom.n_objects() && !hit; ++x)
      if (isomorphic_objects(f.cod, f.obj_map[x], static_cast<int>(cobj))) hit = true;
    if (!hit) p.essentially_surjective = false;
  }
  std::set<int> objs(f.obj_map.begin(), f.obj_map.end());
  std::set<int> mors(f.mor_map.begin(), f.mor_map.end());
  p.isomorphism = objs.size() == f.cod.n_objects() && objs.size() == f.dom.n_objects() &&
                  mors.size() == f.cod.n_morphisms() && mors.size() == f.dom.n_morphisms();
  return p;
}

struct ProductResult {
  FinCategory cat;
  FinFunctor proj0, proj1;
};

// Binary product with canonical "(a,b)" pair names; composition componentwise.
inline ProductResult product_category(const FinCategory& a, const FinCategory& b) {
  FinCategory p;
  p.name = str("(", a.name, "x", b.name, ")");
  std::vector<std::pair<int, int>> objs, mors;
  for (size_t i = 0; i < a.n_objects(); ++i)
    for (size_t j = 0; j < b.n_objects(); ++j) {
      p.objects.push_back(str("(", a.objects[i], ",", b.objects[j], ")"));
      objs.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  auto obj_of = [&](int i, int j) { return static_cast<int>(i * b.n_objects() + j); };
  for (size_t i = 0; i < a.n_morphisms(); ++i)
    for (size_t j = 0; j < b.n_morphisms(); ++j) {
      p.morphisms.push_back({str("(", a.morphisms[i].id, ",", b.morphisms[j].id, ")"),
                             obj_of(a.src(static_cast<int>(i)), b.src(static_cast<int>(j))),
                             obj_of(a.tgt(static_cast<int>(i)), b.tgt(static_cast<int>(j)))});
      mors.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  auto mor_of = [&](int i, int j) { return static_cast<int>(i * b.n_morphisms() + j); };
  p.identities.resize(p.objects.size());
  for (size_t k = 0; k < objs.size(); ++k)
    p.identities[k] = mor_of(a.id(objs[k].first), b.id(objs[k].second));
  size_t nm = p.morphisms.size();
  p.table.assign(nm, std::vector<int>(nm, -1));
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) {
      auto [ga, gb] = mors[g];
      auto [fa, fb] = mors[f];
      if (a.composable(ga, fa) && b.composable(gb, fb))
        p.table[g][f] = mor_of(a.compose(ga, fa), b.compose(gb, fb));
    }

  FinFunctor p0, p1;
  p0.name = str("proj_", a.name);
  p0.dom = p;
  p0.cod = a;
  p1.name = str("proj_", b.name);
  p1.dom = p;
  p1.cod = b;
  for (auto [i, j] : objs) {
    p0.obj_map.push_back(i);
    p1.obj_map.push_back(j);
  }
  for (auto [i, j] : mors) {
    p0.mor_map.push_back(i);
    p1.mor_map.push_back(j);
  }
  return {std::move(p), std::move(p0), std::move(p1)};
}

// Pairing ⟨f,g⟩ into a canonically built product (proj0∘⟨f,g⟩ = f, proj1∘⟨f,g⟩ = g).
inline FinFunctor pair_into_product(const ProductResult& prod, const FinFunctor& f, const FinFunctor& g) {
  if (!(f.dom == g.dom) || !(f.cod == prod.proj0.cod) || !(g.cod == prod.proj1.cod))
    throw std::invalid_argument("pair_into_product: endpoint mismatch");
  FinFunctor h;
  h.name = str("<", f.name, ",", g.name, ">");
  h.dom = f.dom;
  h.cod = prod.cat;
  size_t nb = prod.proj1.cod.n_objects(), nbm = prod.proj1.cod.n_morphisms();
  for (size_t x = 0; x < f.dom.n_objects(); ++x)
    h.obj_map.push_back(static_cast<int>(f.obj_map[x] * nb + g.obj_map[x]));
  for (size_t m = 0; m < f.dom.n_morphisms(); ++m)
    h.mor_map.push_back(static_cast<int>(f.mor_map[m] * nbm + g.mor_map[m]));
  return h;
}

inline FinCategory opposite_category(const FinCategory& a) {
  FinCategory o = a;
  // toggle the suffix so the construction is an involution on the nose
  if (a.name.size() >= 3 && a.name.substr(a.name.size() - 3) == "_op")
    o.name = a.name.substr(0, a.name.size() - 3);
  else
    o.name = str(a.name, "_op");
  for (auto& m : o.morphisms) std::swap(m.src, m.tgt);
  size_t nm = a.n_morphisms();
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) o.table[g][f] = a.table[f][g];
  return o;
}

// ---------------------------------------------------------------------------
// Enumeration (used by the brute-force universal-property certificates)
// ---------------------------------------------------------------------------

inline std::vector<FinFunctor> enumerate_functors(const FinCategory& dom, const FinCategory& cod,
                                                  SearchBudget& budget) {
  std::vector<FinFunctor> out;
  size_t no = dom.n_objects(), nm = dom.n_morphisms();
  if (cod.n_objects() == 0) {
    if (no == 0) {
      FinFunctor f;
      f.dom = dom;
      f.cod = cod;
      out.push_back(f);
    }
    return out;
  }
  std::vector<int> obj_map(no, 0);
  std::vector<int> mor_map(nm, -1);

  auto try_mor_maps = [&](auto&& self, size_t m) -> void {
    if (m == nm) {
      FinFunctor f;
      f.dom = dom;
      f.cod = cod;
      f.obj_map = obj_map;
      f.mor_map = mor_map;
      if (validate_functor(f).ok()) out.push_back(std::move(f));
      return;
    }
    budget.tick();
    int s = obj_map[dom.src(static_cast<int>(m))], t = obj_map[dom.tgt(static_cast<int>(m))];
    if (dom.id(dom.src(static_cast<int>(m))) == static_cast<int>(m) &&
        dom.src(static_cast<int>(m)) == dom.tgt(static_cast<int>(m))) {
      // identities are forced
      mor_map[m] = cod.id(s);
      self(self, m + 1);
      mor_map[m] = -1;
      return;
    }
    for (int im : cod.hom(s, t)) {
      mor_map[m] = im;
      self(self, m + 1);
    }
    mor_map[m] = -1;
  };

  while (true) {
    budget.tick();
    try_mor_maps(try_mor_maps, 0);
    size_t k = 0;
    while (k < no && ++obj_map[k] == static_cast<int>(cod.n_objects())) obj_map[k++] = 0;
    if (k == no) break;
  }
  return out;
}

inline std::vector<NatTrans> enumerate_nats(const FinFunctor& f, const FinFunctor& g,
                                            SearchBudget& budget) {
  std::vector<NatTrans> out;
  if (!(f.dom == g.dom) || !(f.cod == g.cod)) return out;
  size_t no = f.dom.n_objects();
  std::vector<std::vector<int>> choices(no);
  for (size_t x = 0; x < no; ++x) {
    choices[x] = f.cod.hom(f.obj_map[x], g.obj_map[x]);
    if (choices[x].empty()) return out;
  }
  std::vector<int> pick(no, 0);
  while (true) {
    budget.tick();
    NatTrans t;
    t.src = f;
    t.tgt = g;
    t.comp.resize(no);
    for (size_t x = 0; x < no; ++x) t.comp[x] = choices[x][pick[x]];
    if (validate_nat(t).ok()) out.push_back(std::move(t));
    size_t k = 0;
    while (k < no && ++pick[k] == static_cast<int>(choices[k].size())) pick[k++] = 0;
    if (k == no) break;
  }
  return out;
}

}  // namespace laxcomma
