#pragma once

#include <string>
#include <vector>

#include "laxcomma/fincat.hpp"

namespace laxcomma {

// ---------------------------------------------------------------------------
// Standard small categories used throughout the test corpora
// ---------------------------------------------------------------------------

inline FinCategory cat_empty() {
  RawCategory raw;
  raw.name = "empty";
  return make_category(raw);
}

inline FinCategory cat_one() {
  RawCategory raw;
  raw.name = "one";
  raw.objects = {"*"};
  raw.morphisms = {{"id*", "*", "*"}};
  raw.identities = {{"*", "id*"}};
  raw.compose = {{"id*", "id*", "id*"}};
  return make_category(raw);
}

// arrow category: objects 0,1 and one non-identity morphism u : 0 -> 1
inline FinCategory cat_two() {
  RawCategory raw;
  raw.name = "two";
  raw.objects = {"0", "1"};
  raw.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"u", "0", "1"}};
  raw.identities = {{"0", "id0"}, {"1", "id1"}};
  raw.compose = {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}, {"u", "id0", "u"}, {"id1", "u", "u"}};
  return make_category(raw);
}

// parallel pair: f,g : a -> b
inline FinCategory cat_parallel() {
  RawCategory raw;
  raw.name = "par";
  raw.objects = {"a", "b"};
  raw.morphisms = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"f", "a", "b"}, {"g", "a", "b"}};
  raw.identities = {{"a", "ida"}, {"b", "idb"}};
  raw.compose = {{"ida", "ida", "ida"}, {"idb", "idb", "idb"}, {"f", "ida", "f"},
                 {"idb", "f", "f"},     {"g", "ida", "g"},     {"idb", "g", "g"}};
  return make_category(raw);
}

// commutative square: p -> q, p -> r, q -> s, r -> s, one diagonal
inline FinCategory cat_square() {
  RawCategory raw;
  raw.name = "sq";
  raw.objects = {"p", "q", "r", "s"};
  raw.morphisms = {{"idp", "p", "p"}, {"idq", "q", "q"}, {"idr", "r", "r"}, {"ids", "s", "s"},
                   {"f", "p", "q"},   {"g", "p", "r"},   {"h", "q", "s"},   {"k", "r", "s"},
                   {"d", "p", "s"}};
  raw.identities = {{"p", "idp"}, {"q", "idq"}, {"r", "idr"}, {"s", "ids"}};
  raw.compose = {{"idp", "idp", "idp"}, {"idq", "idq", "idq"}, {"idr", "idr", "idr"},
                 {"ids", "ids", "ids"}, {"f", "idp", "f"},     {"idq", "f", "f"},
                 {"g", "idp", "g"},     {"idr", "g", "g"},     {"h", "idq", "h"},
                 {"ids", "h", "h"},     {"k", "idr", "k"},     {"ids", "k", "k"},
                 {"d", "idp", "d"},     {"ids", "d", "d"},     {"h", "f", "d"},
                 {"k", "g", "d"}};
  return make_category(raw);
}

// one-object monoid Z/2: s.s = id
inline FinCategory cat_z2() {
  RawCategory raw;
  raw.name = "z2";
  raw.objects = {"*"};
  raw.morphisms = {{"e", "*", "*"}, {"s", "*", "*"}};
  raw.identities = {{"*", "e"}};
  raw.compose = {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "e"}};
  return make_category(raw);
}

// one-object idempotent monoid: s.s = s
inline FinCategory cat_idem() {
  RawCategory raw;
  raw.name = "idem";
  raw.objects = {"*"};
  raw.morphisms = {{"e", "*", "*"}, {"s", "*", "*"}};
  raw.identities = {{"*", "e"}};
  raw.compose = {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "s"}};
  return make_category(raw);
}

inline FinPreorder preorder_chain(int n, const std::string& name = "") {
  FinPreorder p;
  p.name = name.empty() ? str("chain", n) : name;
  for (int i = 0; i < n; ++i) p.elems.push_back(str(i));
  p.le.assign(n, std::vector<uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.le[i][j] = 1;
  return p;
}

// the poset V: bottom 0 with two incomparable elements 1, 2 above it
inline FinPreorder preorder_v() {
  return make_preorder("V", {"0", "1", "2"}, {{"0", "1"}, {"0", "2"}});
}

inline FinPreorder preorder_antichain(int n) {
  FinPreorder p;
  p.name = str("antichain", n);
  for (int i = 0; i < n; ++i) p.elems.push_back(str(i));
  p.le.assign(n, std::vector<uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) p.le[i][i] = 1;
  return p;
}

inline FinPreorder preorder_codiscrete(int n) {
  FinPreorder p;
  p.name = str("codiscrete", n);
  for (int i = 0; i < n; ++i) p.elems.push_back(str(i));
  p.le.assign(n, std::vector<uint8_t>(n, 1));
  return p;
}

inline FinPreorder preorder_diamond() {
  return make_preorder("diamond", {"0", "1", "2", "3"},
                       {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}, {"0", "3"}});
}

// the object selector d0/d1 : one -> two and the collapse s0 : two -> one
inline FinFunctor functor_d0(const FinCategory& one, const FinCategory& two) {
  return make_functor("d0", one, two, {{"*", "0"}}, {{"id*", "id0"}});
}
inline FinFunctor functor_d1(const FinCategory& one, const FinCategory& two) {
  return make_functor("d1", one, two, {{"*", "1"}}, {{"id*", "id1"}});
}
inline FinFunctor functor_s0(const FinCategory& one, const FinCategory& two) {
  return make_functor("s0", two, one, {{"0", "*"}, {"1", "*"}},
                      {{"id0", "id*"}, {"id1", "id*"}, {"u", "id*"}});
}

// Curated category corpus (plus thin categories layered in by callers).
inline std::vector<FinCategory> curated_categories() {
  return {cat_one(), cat_two(), cat_parallel(), cat_square(), cat_z2(), cat_idem()};
}

// ---------------------------------------------------------------------------
// Preorder enumeration with isomorphism dedup (canonical-form based)
// ---------------------------------------------------------------------------

inline std::string preorder_canonical_form(const FinPreorder& p) {
  // minimal relation matrix over all permutations; n <= 4 keeps this cheap
  size_t n = p.size();
  std::vector<int> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::string best;
  do {
    std::string s;
    s.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) s.push_back(p.leq(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return str(n, ":", best);
}

inline bool preorder_is_poset(const FinPreorder& p) {
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(static_cast<int>(i), static_cast<int>(j)) &&
          p.leq(static_cast<int>(j), static_cast<int>(i)))
        return false;
  return true;
}

// All preorders on at most max_elems elements, up to isomorphism, including the
// empty one. Deterministic order: by size, then by canonical form.
inline std::vector<FinPreorder> enumerate_preorders(int max_elems, SearchBudget& budget) {
  if (max_elems > 5) throw std::invalid_argument("bounds-too-large: preorder enumeration capped at 5");
  std::vector<FinPreorder> out;
  std::set<std::string> seen;
  for (int n = 0; n <= max_elems; ++n) {
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) offdiag.push_back({i, j});
    size_t bits = offdiag.size();
    std::vector<std::pair<std::string, FinPreorder>> found;
    for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
      budget.tick();
      FinPreorder p;
      for (int i = 0; i < n; ++i) p.elems.push_back(str("e", i));
      p.le.assign(n, std::vector<uint8_t>(n, 0));
      for (int i = 0; i < n; ++i) p.le[i][i] = 1;
      for (size_t b = 0; b < bits; ++b)
        if (mask & (1ull << b)) p.le[offdiag[b].first][offdiag[b].second] = 1;
      bool transitive = true;
      for (int i = 0; transitive && i < n; ++i)
        for (int j = 0; transitive && j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (p.le[i][j] && p.le[j][k] && !p.le[i][k]) {
              transitive = false;
              break;
            }
      if (!transitive) continue;
      std::string canon = preorder_canonical_form(p);
      if (seen.insert(canon).second) {
        p.name = str("P", n, "_", found.size());
        found.push_back({canon, std::move(p)});
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < found.size(); ++i) {
      found[i].second.name = str("P", n, "_", i);
      out.push_back(std::move(found[i].second));
    }
  }
  return out;
}

inline std::vector<FinPreorder> enumerate_posets(int max_elems, SearchBudget& budget) {
  std::vector<FinPreorder> out;
  for (auto& p : enumerate_preorders(max_elems, budget))
    if (preorder_is_poset(p)) out.push_back(std::move(p));
  return out;
}

}  // namespace laxcomma
