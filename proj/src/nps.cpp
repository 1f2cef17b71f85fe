#include "twocat/nps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace twocat {

namespace {

std::string tup(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::vector<std::string> validate_nps(const Fin2Category& a, const Fin2Category& b, const Nps& f) {
  std::vector<std::string> bad;
  auto note = [&](const std::string& s) { bad.push_back(s); };

  if (static_cast<int>(f.obj.size()) != a.objects() || static_cast<int>(f.one.size()) != a.one_cells() ||
      static_cast<int>(f.two.size()) != a.two_cells() ||
      f.compositor.size() != a.composable_pairs().size()) {
    note("table sizes do not match the domain");
    return bad;
  }
  for (int x : f.obj)
    if (x < 0 || x >= b.objects()) return {"(a) object image out of range"};
  for (int x : f.one)
    if (x < 0 || x >= b.one_cells()) return {"(a) 1-cell image out of range"};
  for (int x : f.two)
    if (x < 0 || x >= b.two_cells()) return {"(a) 2-cell image out of range"};

  // (a) source/target/identity compatibility
  for (int g = 0; g < a.one_cells(); ++g)
    if (b.one_src(f.one[g]) != f.obj[a.one_src(g)] || b.one_tgt(f.one[g]) != f.obj[a.one_tgt(g)])
      note("(a) 1-cell endpoints wrong at " + tup({g}));
  for (int x = 0; x < a.two_cells(); ++x)
    if (b.two_src1(f.two[x]) != f.one[a.two_src1(x)] || b.two_tgt1(f.two[x]) != f.one[a.two_tgt1(x)])
      note("(a) 2-cell boundary wrong at " + tup({x}));
  for (int p = 0; p < a.objects(); ++p)
    if (f.one[a.id1(p)] != b.id1(f.obj[p])) note("(a) identity 1-cell not preserved at " + tup({p}));
  for (int g = 0; g < a.one_cells(); ++g)
    if (f.two[a.id2(g)] != b.id2(f.one[g])) note("(a) identity 2-cell not preserved at " + tup({g}));
  if (!bad.empty()) return bad;

  // (b) compositor boundary and invertibility
  const auto& pairs = a.composable_pairs();
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [ff, gg] = pairs[p];
    int phi = f.compositor[p];
    if (phi < 0 || phi >= b.two_cells()) {
      note("(b) compositor out of range at " + tup({ff, gg}));
      continue;
    }
    if (b.two_src1(phi) != f.one[a.compose1(ff, gg)] ||
        b.two_tgt1(phi) != b.compose1(f.one[ff], f.one[gg]))
      note("(b) compositor boundary wrong at " + tup({ff, gg}));
    else if (!b.two_invertible(phi))
      note("(b) compositor not invertible at " + tup({ff, gg}));
  }
  if (!bad.empty()) return bad;

  // (c) unit normality
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [ff, gg] = pairs[p];
    if (a.is_id1(gg) && f.compositor[p] != b.id2(f.one[ff]))
      note("(c) compositor at (f,id) not the identity at " + tup({ff, gg}));
    if (a.is_id1(ff) && f.compositor[p] != b.id2(f.one[gg]))
      note("(c) compositor at (id,f) not the identity at " + tup({ff, gg}));
  }

  // (d) vertical functoriality
  for (int x = 0; x < a.two_cells(); ++x)
    for (int y = 0; y < a.two_cells(); ++y) {
      if (a.two_src_obj(x) != a.two_src_obj(y) || a.two_tgt_obj(x) != a.two_tgt_obj(y)) continue;
      if (a.two_tgt1(x) != a.two_src1(y)) continue;
      if (f.two[a.vcomp(x, y)] != b.vcomp(f.two[x], f.two[y]))
        note("(d) vertical composition not preserved at " + tup({x, y}));
    }

  // (e) 2-naturality of the compositor
  for (int x = 0; x < a.two_cells(); ++x)
    for (int y = 0; y < a.two_cells(); ++y) {
      if (a.two_tgt_obj(x) != a.two_src_obj(y)) continue;
      int ps = a.pair_index(a.two_src1(x), a.two_src1(y));
      int pt = a.pair_index(a.two_tgt1(x), a.two_tgt1(y));
      int lhs = b.vcomp(f.compositor[ps], b.hcomp(f.two[x], f.two[y]));
      int rhs = b.vcomp(f.two[a.hcomp(x, y)], f.compositor[pt]);
      if (lhs != rhs) note("(e) 2-naturality fails at " + tup({x, y}));
    }

  // (f) cocycle condition
  for (int ff = 0; ff < a.one_cells(); ++ff)
    for (int gg = 0; gg < a.one_cells(); ++gg) {
      if (a.one_tgt(ff) != a.one_src(gg)) continue;
      for (int hh = 0; hh < a.one_cells(); ++hh) {
        if (a.one_tgt(gg) != a.one_src(hh)) continue;
        int gf = a.compose1(ff, gg), hg = a.compose1(gg, hh);
        int lhs = b.vcomp(f.compositor[a.pair_index(gf, hh)],
                          b.hcomp(f.compositor[a.pair_index(ff, gg)], b.id2(f.one[hh])));
        int rhs = b.vcomp(f.compositor[a.pair_index(ff, hg)],
                          b.hcomp(b.id2(f.one[ff]), f.compositor[a.pair_index(gg, hh)]));
        if (lhs != rhs) note("(f) cocycle fails at " + tup({ff, gg, hh}));
      }
    }
  return bad;
}

bool is_nps(const Fin2Category& a, const Fin2Category& b, const Nps& f) { return validate_nps(a, b, f).empty(); }

Nps nps_from_strict(const Fin2Category& a, const Fin2Category& b, const TwoFunctor& f) {
  Nps n;
  n.obj = f.obj;
  n.one = f.one;
  n.two = f.two;
  n.compositor.resize(a.composable_pairs().size());
  for (size_t p = 0; p < a.composable_pairs().size(); ++p) {
    auto [ff, gg] = a.composable_pairs()[p];
    n.compositor[p] = b.id2(f.one[a.compose1(ff, gg)]);
  }
  return n;
}

bool nps_is_strict(const Fin2Category& a, const Fin2Category& b, const Nps& f) {
  (void)a;
  for (int phi : f.compositor)
    if (!b.is_id2(phi)) return false;
  return true;
}

TwoFunctor nps_strip(const Nps& f) { return TwoFunctor{f.obj, f.one, f.two}; }

namespace {

// DFS enumeration of normal pseudofunctors. Hom functors are assigned pair
// by pair with compositor-feasibility pinning: the image of a composite must
// admit an invertible 2-cell to the composite of images, which for gaunt
// targets pins it exactly.
struct NpsEnumerator {
  const Fin2Category& A;
  const Fin2Category& B;
  std::vector<std::pair<int, int>> order;
  std::vector<int> order_pos;
  std::vector<int> obj;
  std::vector<CatFunctor> homfn;
  std::vector<char> assigned;
  std::vector<Nps> out;

  explicit NpsEnumerator(const Fin2Category& a, const Fin2Category& b) : A(a), B(b) {
    const int n = A.objects();
    order_pos.assign(static_cast<size_t>(n) * n, -1);
    std::vector<std::pair<int, int>> diag, rest;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (A.hom(p, q).objects() == 0) continue;
        (p == q ? diag : rest).push_back({p, q});
      }
    std::stable_sort(rest.begin(), rest.end(), [&](auto x, auto y) {
      int sx = A.hom(x.first, x.second).objects(), sy = A.hom(y.first, y.second).objects();
      if (sx != sy) return sx < sy;
      return x < y;
    });
    order = diag;
    order.insert(order.end(), rest.begin(), rest.end());
    for (size_t i = 0; i < order.size(); ++i) order_pos[order[i].first * n + order[i].second] = static_cast<int>(i);
    homfn.assign(static_cast<size_t>(n) * n, {});
    assigned.assign(order.size(), 0);
  }

  bool iso_to(int hp, int k) const {
    int a = B.one_src(k), c = B.one_tgt(k);
    const FinCategory& h = B.hom(a, c);
    for (int ml = 0; ml < h.morphisms(); ++ml)
      if (h.src(ml) == B.one_local(hp) && h.tgt(ml) == B.one_local(k) && h.is_iso(ml)) return true;
    return false;
  }

  bool pair_ready(int p, int q) const {
    int pos = order_pos[p * A.objects() + q];
    return pos < 0 || assigned[pos];
  }

  bool feasible(int t) {
    const int n = A.objects();
    auto [pp, qq] = order[t];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          bool involves = (x == pp && y == qq) || (y == pp && z == qq) || (x == pp && z == qq);
          if (!involves) continue;
          if (A.hom(x, y).objects() == 0 || A.hom(y, z).objects() == 0) continue;
          if (!pair_ready(x, y) || !pair_ready(y, z) || !pair_ready(x, z)) continue;
          const CatFunctor &fxy = homfn[x * n + y], &fyz = homfn[y * n + z], &fxz = homfn[x * n + z];
          for (int f = 0; f < A.hom(x, y).objects(); ++f)
            for (int g = 0; g < A.hom(y, z).objects(); ++g) {
              int comp = A.one_local(A.compose1(A.one_cell_id(x, y, f), A.one_cell_id(y, z, g)));
              int img = B.one_cell_id(obj[x], obj[z], fxz.obj[comp]);
              int tgt = B.compose1(B.one_cell_id(obj[x], obj[y], fxy.obj[f]),
                                   B.one_cell_id(obj[y], obj[z], fyz.obj[g]));
              if (!iso_to(img, tgt)) return false;
            }
        }
    return true;
  }

  void emit_with_compositors() {
    const int n = A.objects();
    Nps base;
    base.obj = obj;
    base.one.assign(A.one_cells(), -1);
    base.two.assign(A.two_cells(), -1);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const CatFunctor& fn = homfn[p * n + q];
        for (int k = 0; k < A.hom(p, q).objects(); ++k)
          base.one[A.one_cell_id(p, q, k)] = B.one_cell_id(obj[p], obj[q], fn.obj[k]);
        for (int k = 0; k < A.hom(p, q).morphisms(); ++k)
          base.two[A.two_cell_id(p, q, k)] = B.two_cell_id(obj[p], obj[q], fn.mor[k]);
      }
    const auto& pairs = A.composable_pairs();
    std::vector<std::vector<int>> cand(pairs.size());
    for (size_t p = 0; p < pairs.size(); ++p) {
      auto [ff, gg] = pairs[p];
      int src = base.one[A.compose1(ff, gg)];
      int tgt = B.compose1(base.one[ff], base.one[gg]);
      if (A.is_id1(ff) || A.is_id1(gg)) {
        int want = A.is_id1(gg) ? B.id2(base.one[ff]) : B.id2(base.one[gg]);
        if (B.two_src1(want) == src && B.two_tgt1(want) == tgt) cand[p] = {want};
        continue;
      }
      int a2 = B.one_src(src), c2 = B.one_tgt(src);
      const FinCategory& h = B.hom(a2, c2);
      for (int ml = 0; ml < h.morphisms(); ++ml)
        if (h.src(ml) == B.one_local(src) && h.tgt(ml) == B.one_local(tgt) && h.is_iso(ml))
          cand[p].push_back(B.two_cell_id(a2, c2, ml));
    }
    for (const auto& c : cand)
      if (c.empty()) return;
    Nps cur = base;
    cur.compositor.assign(pairs.size(), -1);
    std::function<void(size_t)> go = [&](size_t p) {
      if (p == pairs.size()) {
        if (validate_nps(A, B, cur).empty()) out.push_back(cur);
        return;
      }
      for (int v : cand[p]) {
        cur.compositor[p] = v;
        go(p + 1);
      }
      cur.compositor[p] = -1;
    };
    go(0);
  }

  void go_pairs(int t) {
    const int n = A.objects();
    if (t == static_cast<int>(order.size())) {
      emit_with_compositors();
      return;
    }
    auto [p, q] = order[t];
    const FinCategory& ha = A.hom(p, q);
    const FinCategory& hb = B.hom(obj[p], obj[q]);
    std::vector<std::vector<int>> obj_cand(ha.objects());
    if (p == q) obj_cand[A.raw().id1[p]] = {B.raw().id1[obj[p]]};
    for (int mid = 0; mid < n; ++mid) {
      if (A.hom(p, mid).objects() == 0 || A.hom(mid, q).objects() == 0) continue;
      int pos1 = order_pos[p * n + mid], pos2 = order_pos[mid * n + q];
      if (pos1 < 0 || pos1 >= t || pos2 < 0 || pos2 >= t) continue;
      const CatFunctor &f1 = homfn[p * n + mid], &f2 = homfn[mid * n + q];
      for (int f = 0; f < A.hom(p, mid).objects(); ++f)
        for (int g = 0; g < A.hom(mid, q).objects(); ++g) {
          int h = A.one_local(A.compose1(A.one_cell_id(p, mid, f), A.one_cell_id(mid, q, g)));
          int tgt = B.compose1(B.one_cell_id(obj[p], obj[mid], f1.obj[f]),
                               B.one_cell_id(obj[mid], obj[q], f2.obj[g]));
          std::vector<int> ok;
          for (int v = 0; v < hb.objects(); ++v)
            if (iso_to(B.one_cell_id(obj[p], obj[q], v), tgt)) ok.push_back(v);
          if (obj_cand[h].empty()) {
            obj_cand[h] = ok;
          } else {
            std::vector<int> merged;
            std::set_intersection(obj_cand[h].begin(), obj_cand[h].end(), ok.begin(), ok.end(),
                                  std::back_inserter(merged));
            obj_cand[h] = merged;
          }
          if (obj_cand[h].empty()) return;
        }
    }
    for (const CatFunctor& fn : enumerate_functors_constrained(ha, hb, obj_cand, {})) {
      homfn[p * n + q] = fn;
      assigned[t] = 1;
      if (feasible(t)) go_pairs(t + 1);
      assigned[t] = 0;
    }
  }

  void go_objects(int p) {
    const int n = A.objects();
    if (p == n) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (A.hom(x, y).objects() == 0) homfn[x * n + y] = {};
      go_pairs(0);
      return;
    }
    for (int v = 0; v < B.objects(); ++v) {
      obj[p] = v;
      bool ok = true;
      for (int q = 0; q <= p && ok; ++q) {
        if (A.hom(p, q).objects() > 0 && B.hom(v, obj[q]).objects() == 0) ok = false;
        if (A.hom(q, p).objects() > 0 && B.hom(obj[q], v).objects() == 0) ok = false;
      }
      if (ok) go_objects(p + 1);
    }
    obj[p] = -1;
  }
};

}  // namespace

std::vector<Nps> enumerate_nps(const Fin2Category& a, const Fin2Category& b) {
  NpsEnumerator e(a, b);
  e.obj.assign(a.objects(), -1);
  if (a.objects() == 0)
    e.go_pairs(0);
  else
    e.go_objects(0);
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

Nps precompose_nps(const Fin2Category& t, const Fin2Category& a, const Fin2Category& b, const TwoFunctor& g,
                   const Nps& f) {
  (void)b;
  Nps r;
  r.obj.reserve(t.objects());
  for (int x : g.obj) r.obj.push_back(f.obj[x]);
  r.one.reserve(t.one_cells());
  for (int x : g.one) r.one.push_back(f.one[x]);
  r.two.reserve(t.two_cells());
  for (int x : g.two) r.two.push_back(f.two[x]);
  const auto& pairs = t.composable_pairs();
  r.compositor.resize(pairs.size());
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [ff, gg] = pairs[p];
    r.compositor[p] = f.compositor[a.pair_index(g.one[ff], g.one[gg])];
  }
  return r;
}

int extend_compositor(const Fin2Category& a, const Fin2Category& b, const Nps& f,
                      const std::vector<int>& chain) {
  if (chain.empty()) throw std::invalid_argument("extend_compositor: empty chain");
  for (size_t k = 0; k + 1 < chain.size(); ++k)
    if (a.one_tgt(chain[k]) != a.one_src(chain[k + 1]))
      throw std::invalid_argument("extend_compositor: chain not composable");
  int prefix = chain[0];
  int phi = b.id2(f.one[chain[0]]);
  for (size_t k = 1; k < chain.size(); ++k) {
    phi = b.vcomp(f.compositor[a.pair_index(prefix, chain[k])], b.hcomp(phi, b.id2(f.one[chain[k]])));
    prefix = a.compose1(prefix, chain[k]);
  }
  return phi;
}

std::vector<std::string> validate_free(const FreePresentation& t) {
  std::vector<std::string> bad;
  const Fin2Category& d = *t.cat;
  for (int g : t.generators)
    if (d.is_id1(g)) bad.push_back("generator " + std::to_string(g) + " is an identity");
  std::vector<int> sorted = t.generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad.push_back("duplicate generator");
  if (!bad.empty()) return bad;

  const int m = d.one_cells();
  std::vector<long long> ways(m, 0);
  for (int p = 0; p < d.objects(); ++p) ways[d.id1(p)] = 1;  // the empty word
  std::vector<long long> frontier = ways;
  for (int len = 1; len <= m + 1; ++len) {
    std::vector<long long> next(m, 0);
    bool any = false;
    for (int h = 0; h < m; ++h) {
      if (!frontier[h]) continue;
      for (int g : t.generators) {
        if (d.one_tgt(h) != d.one_src(g)) continue;
        int c = d.compose1(h, g);
        next[c] = std::min<long long>(next[c] + frontier[h], 4);
        any = true;
      }
    }
    for (int h = 0; h < m; ++h) ways[h] = std::min<long long>(ways[h] + next[h], 4);
    frontier = next;
    if (!any) break;
    if (len == m + 1) {
      bad.push_back("generator words do not terminate (cycle)");
      return bad;
    }
  }
  for (int h = 0; h < m; ++h) {
    if (ways[h] == 0) bad.push_back("1-cell " + std::to_string(h) + " is not generated");
    if (ways[h] > 1) bad.push_back("1-cell " + std::to_string(h) + " has multiple factorizations");
  }
  return bad;
}

std::vector<int> free_factorization(const FreePresentation& t, int one_cell) {
  const Fin2Category& d = *t.cat;
  if (d.is_id1(one_cell)) return {};
  const int m = d.one_cells();
  std::vector<std::pair<int, int>> pred(m, {-1, -1});
  std::vector<char> seen(m, 0);
  std::vector<int> frontier;
  for (int p = 0; p < d.objects(); ++p) {
    seen[d.id1(p)] = 1;
    frontier.push_back(d.id1(p));
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int h : frontier)
      for (int g : t.generators) {
        if (d.one_tgt(h) != d.one_src(g)) continue;
        int c = d.compose1(h, g);
        if (seen[c]) continue;
        seen[c] = 1;
        pred[c] = {h, g};
        next.push_back(c);
      }
    frontier = next;
  }
  if (!seen[one_cell]) throw std::invalid_argument("free_factorization: cell not generated");
  std::vector<int> word;
  int cur = one_cell;
  while (pred[cur].first >= 0) {
    word.push_back(pred[cur].second);
    cur = pred[cur].first;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

FreePresentation theta_free_presentation(const Fin2Category& th, int i) {
  FreePresentation t;
  t.cat = &th;
  for (int s = 0; s + 1 <= i; ++s)
    for (int k = 0; k < th.hom(s, s + 1).objects(); ++k) t.generators.push_back(th.one_cell_id(s, s + 1, k));
  return t;
}

TwoFunctor pushforward_free(const FreePresentation& t, const Fin2Category& a, const Fin2Category& b,
                            const TwoFunctor& g, const Nps& f) {
  const Fin2Category& T = *t.cat;
  auto freedom = validate_free(t);
  if (!freedom.empty()) throw std::invalid_argument("pushforward_free: " + freedom.front());

  TwoFunctor r;
  r.obj.resize(T.objects());
  for (int p = 0; p < T.objects(); ++p) r.obj[p] = f.obj[g.obj[p]];

  // coherence iso F(G h) => image composite, per 1-cell of T
  std::vector<int> coh(T.one_cells(), -1);
  r.one.assign(T.one_cells(), -1);
  for (int h = 0; h < T.one_cells(); ++h) {
    std::vector<int> word = free_factorization(t, h);
    if (word.empty()) {
      r.one[h] = b.id1(r.obj[T.one_src(h)]);
      coh[h] = b.id2(r.one[h]);
      continue;
    }
    std::vector<int> chain;
    chain.reserve(word.size());
    for (int w : word) chain.push_back(g.one[w]);
    coh[h] = extend_compositor(a, b, f, chain);
    int acc = f.one[chain[0]];
    for (size_t k = 1; k < chain.size(); ++k) acc = b.compose1(acc, f.one[chain[k]]);
    r.one[h] = acc;
  }

  r.two.assign(T.two_cells(), -1);
  for (int x = 0; x < T.two_cells(); ++x) {
    int sf = T.two_src1(x), tf = T.two_tgt1(x);
    int core = f.two[g.two[x]];  // F(G alpha): F(G sf) => F(G tf)
    int inv_src = *b.two_inverse(coh[sf]);
    r.two[x] = b.vcomp(b.vcomp(inv_src, core), coh[tf]);
  }
  if (!is_two_functor(T, b, r)) throw std::logic_error("pushforward_free: result is not a 2-functor");
  return r;
}

}  // namespace twocat
