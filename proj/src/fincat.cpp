#include "twocat/fincat.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace twocat {

FinCategory::FinCategory(int n_objects, std::vector<Mor> mor_list, std::vector<int> identity,
                         std::vector<int> compose_table)
    : n_(n_objects), mor_(std::move(mor_list)), id_(std::move(identity)), comp_(std::move(compose_table)) {
  if (static_cast<int>(id_.size()) != n_) throw std::invalid_argument("identity table size mismatch");
  if (comp_.size() != mor_.size() * mor_.size()) throw std::invalid_argument("compose table size mismatch");
  hom_.assign(static_cast<size_t>(n_) * n_, {});
  for (int f = 0; f < morphisms(); ++f) hom_[mor_[f].src * n_ + mor_[f].tgt].push_back(f);
}

bool FinCategory::is_iso(int f) const { return inverse(f).has_value(); }

std::optional<int> FinCategory::inverse(int f) const {
  for (int g : hom(tgt(f), src(f)))
    if (compose(f, g) == id_[src(f)] && compose(g, f) == id_[tgt(f)]) return g;
  return std::nullopt;
}

std::vector<std::string> FinCategory::validate() const {
  std::vector<std::string> bad;
  auto note = [&](const std::string& s) { bad.push_back(s); };
  const int m = morphisms();
  for (int a = 0; a < n_; ++a) {
    int i = id_[a];
    if (i < 0 || i >= m)
      note("identity of object " + std::to_string(a) + " out of range");
    else if (mor_[i].src != a || mor_[i].tgt != a)
      note("identity of object " + std::to_string(a) + " has wrong endpoints");
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int c = comp_[f * m + g];
      bool composable = mor_[f].tgt == mor_[g].src;
      if (!composable) {
        if (c != -1) note("compose defined on non-composable (" + std::to_string(f) + "," + std::to_string(g) + ")");
        continue;
      }
      if (c < 0 || c >= m) {
        note("compose missing at (" + std::to_string(f) + "," + std::to_string(g) + ")");
        continue;
      }
      if (mor_[c].src != mor_[f].src || mor_[c].tgt != mor_[g].tgt)
        note("compose has wrong endpoints at (" + std::to_string(f) + "," + std::to_string(g) + ")");
    }
  if (!bad.empty()) return bad;  // endpoint errors make the law checks meaningless
  for (int f = 0; f < m; ++f) {
    if (compose(id_[mor_[f].src], f) != f)
      note("left unit fails at morphism " + std::to_string(f));
    if (compose(f, id_[mor_[f].tgt]) != f)
      note("right unit fails at morphism " + std::to_string(f));
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (mor_[f].tgt != mor_[g].src) continue;
      for (int h = 0; h < m; ++h) {
        if (mor_[g].tgt != mor_[h].src) continue;
        if (compose(compose(f, g), h) != compose(f, compose(g, h)))
          note("associativity fails at (" + std::to_string(f) + "," + std::to_string(g) + "," + std::to_string(h) + ")");
      }
    }
  return bad;
}

namespace {

struct CatBuilder {
  int n = 0;
  std::vector<Mor> mor;
  std::map<std::pair<int, int>, std::vector<int>> hom;
  int add(int s, int t) {
    mor.push_back({s, t});
    hom[{s, t}].push_back(static_cast<int>(mor.size()) - 1);
    return static_cast<int>(mor.size()) - 1;
  }
};

FinCategory finish(CatBuilder& b, std::vector<int> ids,
                   const std::function<int(int, int)>& comp) {
  const int m = static_cast<int>(b.mor.size());
  std::vector<int> table(static_cast<size_t>(m) * m, -1);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (b.mor[f].tgt == b.mor[g].src) table[f * m + g] = comp(f, g);
  return FinCategory(b.n, b.mor, std::move(ids), std::move(table));
}

}  // namespace

FinCategory ordinal_category(int n) {
  if (n < 0) throw std::invalid_argument("ordinal_category: n >= 0 required");
  CatBuilder b;
  b.n = n + 1;
  std::vector<std::vector<int>> at(b.n, std::vector<int>(b.n, -1));
  std::vector<int> ids(b.n);
  for (int a = 0; a <= n; ++a)
    for (int c = a; c <= n; ++c) {
      at[a][c] = b.add(a, c);
      if (a == c) ids[a] = at[a][c];
    }
  return finish(b, ids, [&](int f, int g) { return at[b.mor[f].src][b.mor[g].tgt]; });
}

FinCategory chaotic_on(int n_objects) {
  if (n_objects < 0) throw std::invalid_argument("chaotic_on: size >= 0 required");
  CatBuilder b;
  b.n = n_objects;
  std::vector<std::vector<int>> at(b.n, std::vector<int>(b.n, -1));
  std::vector<int> ids(b.n);
  for (int a = 0; a < b.n; ++a)
    for (int c = 0; c < b.n; ++c) {
      at[a][c] = b.add(a, c);
      if (a == c) ids[a] = at[a][c];
    }
  return finish(b, ids, [&](int f, int g) { return at[b.mor[f].src][b.mor[g].tgt]; });
}

FinCategory chaotic_category(int k) { return chaotic_on(k + 1); }

FinCategory discrete_category(int n_objects) {
  CatBuilder b;
  b.n = n_objects;
  std::vector<int> ids(n_objects);
  for (int a = 0; a < n_objects; ++a) ids[a] = b.add(a, a);
  return finish(b, ids, [&](int f, int) { return f; });
}

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  // object (a,b) -> a + b*|C0|, morphism (f,g) -> f + g*|C1|
  CatBuilder b;
  b.n = c.objects() * d.objects();
  for (int g = 0; g < d.morphisms(); ++g)
    for (int f = 0; f < c.morphisms(); ++f)
      b.add(c.src(f) + d.src(g) * c.objects(), c.tgt(f) + d.tgt(g) * c.objects());
  std::vector<int> ids(b.n);
  for (int y = 0; y < d.objects(); ++y)
    for (int x = 0; x < c.objects(); ++x)
      ids[x + y * c.objects()] = c.identity(x) + d.identity(y) * c.morphisms();
  return finish(b, ids, [&](int f, int g) {
    int f1 = f % c.morphisms(), f2 = f / c.morphisms();
    int g1 = g % c.morphisms(), g2 = g / c.morphisms();
    return c.compose(f1, g1) + d.compose(f2, g2) * c.morphisms();
  });
}

FinCategory coproduct_category(const FinCategory& c, const FinCategory& d) {
  CatBuilder b;
  b.n = c.objects() + d.objects();
  for (int f = 0; f < c.morphisms(); ++f) b.add(c.src(f), c.tgt(f));
  for (int g = 0; g < d.morphisms(); ++g) b.add(c.objects() + d.src(g), c.objects() + d.tgt(g));
  std::vector<int> ids(b.n);
  for (int a = 0; a < c.objects(); ++a) ids[a] = c.identity(a);
  for (int a = 0; a < d.objects(); ++a) ids[c.objects() + a] = c.morphisms() + d.identity(a);
  return finish(b, ids, [&](int f, int g) {
    if (f < c.morphisms()) return c.compose(f, g);
    return c.morphisms() + d.compose(f - c.morphisms(), g - c.morphisms());
  });
}

FinCategory walking_retract() {
  // objects a=0, b=1; morphisms id_a, e (= gf), f, g, id_b
  CatBuilder b;
  b.n = 2;
  int id_a = b.add(0, 0);
  int e = b.add(0, 0);
  int f = b.add(0, 1);
  int g = b.add(1, 0);
  int id_b = b.add(1, 1);
  auto comp = [=](int x, int y) -> int {
    // composite y∘x
    if (x == id_a) return y;
    if (y == id_a) return x;
    if (x == id_b) return y;
    if (y == id_b) return x;
    if (x == e && y == e) return e;
    if (x == e && y == f) return f;
    if (x == f && y == g) return e;
    if (x == g && y == e) return g;
    if (x == g && y == f) return id_b;
    if (x == f && y == id_b) return f;
    throw std::logic_error("walking_retract: unhandled pair");
  };
  return finish(b, {id_a, id_b}, comp);
}

std::vector<int> pi0(const FinCategory& c) {
  std::vector<int> parent(c.objects());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int f = 0; f < c.morphisms(); ++f) {
    int a = find(c.src(f)), b = find(c.tgt(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(c.objects());
  std::map<int, int> renumber;
  for (int a = 0; a < c.objects(); ++a) {
    int r = find(a);
    auto it = renumber.find(r);
    if (it == renumber.end()) it = renumber.emplace(r, static_cast<int>(renumber.size())).first;
    comp[a] = it->second;
  }
  return comp;
}

int pi0_count(const FinCategory& c) {
  auto comp = pi0(c);
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool is_functor(const FinCategory& c, const FinCategory& d, const CatFunctor& f) {
  if (static_cast<int>(f.obj.size()) != c.objects()) return false;
  if (static_cast<int>(f.mor.size()) != c.morphisms()) return false;
  for (int m = 0; m < c.morphisms(); ++m) {
    int fm = f.mor[m];
    if (fm < 0 || fm >= d.morphisms()) return false;
    if (d.src(fm) != f.obj[c.src(m)] || d.tgt(fm) != f.obj[c.tgt(m)]) return false;
  }
  for (int a = 0; a < c.objects(); ++a)
    if (f.mor[c.identity(a)] != d.identity(f.obj[a])) return false;
  for (int x = 0; x < c.morphisms(); ++x)
    for (int y = 0; y < c.morphisms(); ++y) {
      if (c.tgt(x) != c.src(y)) continue;
      if (f.mor[c.compose(x, y)] != d.compose(f.mor[x], f.mor[y])) return false;
    }
  return true;
}

CatFunctor identity_functor(const FinCategory& c) {
  CatFunctor f;
  f.obj.resize(c.objects());
  std::iota(f.obj.begin(), f.obj.end(), 0);
  f.mor.resize(c.morphisms());
  std::iota(f.mor.begin(), f.mor.end(), 0);
  return f;
}

CatFunctor compose_functors(const CatFunctor& f, const CatFunctor& g) {
  CatFunctor h;
  h.obj.reserve(f.obj.size());
  for (int a : f.obj) h.obj.push_back(g.obj[a]);
  h.mor.reserve(f.mor.size());
  for (int m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

std::vector<CatFunctor> enumerate_functors_constrained(
    const FinCategory& c, const FinCategory& d,
    const std::vector<std::vector<int>>& obj_candidates,
    const std::vector<std::vector<int>>& mor_candidates) {
  std::vector<CatFunctor> out;
  const int no = c.objects(), nm = c.morphisms();
  CatFunctor cur;
  cur.obj.assign(no, -1);
  cur.mor.assign(nm, -1);

  // triples (x,y) composable, checked once the last participant is assigned
  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y)
      if (c.tgt(x) == c.src(y)) triples.push_back({x, y, c.compose(x, y)});

  std::function<void(int)> go_mor = [&](int m) {
    if (m == nm) {
      out.push_back(cur);
      return;
    }
    const int a = c.src(m), b = c.tgt(m);
    auto try_value = [&](int v) {
      if (d.src(v) != cur.obj[a] || d.tgt(v) != cur.obj[b]) return;
      if (!mor_candidates.empty() && !mor_candidates[m].empty() &&
          std::find(mor_candidates[m].begin(), mor_candidates[m].end(), v) == mor_candidates[m].end())
        return;
      cur.mor[m] = v;
      bool ok = true;
      for (const auto& t : triples) {
        if (std::max({t[0], t[1], t[2]}) != m) continue;
        if (cur.mor[t[0]] < 0 || cur.mor[t[1]] < 0 || cur.mor[t[2]] < 0) continue;
        if (d.compose(cur.mor[t[0]], cur.mor[t[1]]) != cur.mor[t[2]]) {
          ok = false;
          break;
        }
      }
      if (ok) go_mor(m + 1);
      cur.mor[m] = -1;
    };
    if (c.is_identity(m)) {
      try_value(d.identity(cur.obj[a]));
      return;
    }
    for (int v : d.hom(cur.obj[a], cur.obj[b])) try_value(v);
  };

  std::function<void(int)> go_obj = [&](int a) {
    if (a == no) {
      go_mor(0);
      return;
    }
    for (int v = 0; v < d.objects(); ++v) {
      if (!obj_candidates.empty() && !obj_candidates[a].empty() &&
          std::find(obj_candidates[a].begin(), obj_candidates[a].end(), v) == obj_candidates[a].end())
        continue;
      cur.obj[a] = v;
      bool ok = true;
      for (int b = 0; b <= a && ok; ++b) {
        if (cur.obj[b] < 0) continue;
        if (!c.hom(a, b).empty() && d.hom(v, cur.obj[b]).empty()) ok = false;
        if (!c.hom(b, a).empty() && d.hom(cur.obj[b], v).empty()) ok = false;
      }
      if (ok) go_obj(a + 1);
      cur.obj[a] = -1;
    }
  };
  go_obj(0);
  return out;
}

std::vector<CatFunctor> enumerate_functors(const FinCategory& c, const FinCategory& d) {
  return enumerate_functors_constrained(c, d, {}, {});
}

CatFunctor ordinal_functor(const std::vector<int>& alpha, int n_from, int n_to) {
  if (static_cast<int>(alpha.size()) != n_from + 1) throw std::invalid_argument("ordinal_functor: size");
  for (size_t i = 0; i + 1 < alpha.size(); ++i)
    if (alpha[i] > alpha[i + 1]) throw std::invalid_argument("ordinal_functor: not monotone");
  FinCategory from = ordinal_category(n_from), to = ordinal_category(n_to);
  CatFunctor f;
  f.obj = alpha;
  f.mor.resize(from.morphisms());
  for (int m = 0; m < from.morphisms(); ++m) {
    int a = alpha[from.src(m)], b = alpha[from.tgt(m)];
    f.mor[m] = to.hom(a, b).at(0);
  }
  return f;
}

CatFunctor chaotic_functor(const std::vector<int>& beta, int k_from, int k_to) {
  FinCategory from = chaotic_category(k_from), to = chaotic_category(k_to);
  if (static_cast<int>(beta.size()) != from.objects()) throw std::invalid_argument("chaotic_functor: size");
  CatFunctor f;
  f.obj = beta;
  f.mor.resize(from.morphisms());
  for (int m = 0; m < from.morphisms(); ++m)
    f.mor[m] = to.hom(beta[from.src(m)], beta[from.tgt(m)]).at(0);
  return f;
}

CatFunctor product_functor(const FinCategory& c1, const FinCategory& c2,
                           const FinCategory& d1, const FinCategory& d2,
                           const CatFunctor& f1, const CatFunctor& f2) {
  (void)d2;
  CatFunctor f;
  f.obj.resize(static_cast<size_t>(c1.objects()) * c2.objects());
  for (int y = 0; y < c2.objects(); ++y)
    for (int x = 0; x < c1.objects(); ++x)
      f.obj[x + y * c1.objects()] = f1.obj[x] + f2.obj[y] * d1.objects();
  f.mor.resize(static_cast<size_t>(c1.morphisms()) * c2.morphisms());
  for (int n = 0; n < c2.morphisms(); ++n)
    for (int m = 0; m < c1.morphisms(); ++m)
      f.mor[m + n * c1.morphisms()] = f1.mor[m] + f2.mor[n] * d1.morphisms();
  return f;
}

}  // namespace twocat
