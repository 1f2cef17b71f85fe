#include "twocat/twofunctor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace twocat {

bool is_two_functor(const Fin2Category& a, const Fin2Category& b, const TwoFunctor& f) {
  if (static_cast<int>(f.obj.size()) != a.objects()) return false;
  if (static_cast<int>(f.one.size()) != a.one_cells()) return false;
  if (static_cast<int>(f.two.size()) != a.two_cells()) return false;
  for (int x : f.obj)
    if (x < 0 || x >= b.objects()) return false;
  for (int g = 0; g < a.one_cells(); ++g) {
    int v = f.one[g];
    if (v < 0 || v >= b.one_cells()) return false;
    if (b.one_src(v) != f.obj[a.one_src(g)] || b.one_tgt(v) != f.obj[a.one_tgt(g)]) return false;
  }
  for (int x = 0; x < a.two_cells(); ++x) {
    int v = f.two[x];
    if (v < 0 || v >= b.two_cells()) return false;
    if (b.two_src1(v) != f.one[a.two_src1(x)] || b.two_tgt1(v) != f.one[a.two_tgt1(x)]) return false;
  }
  for (int p = 0; p < a.objects(); ++p) {
    if (f.one[a.id1(p)] != b.id1(f.obj[p])) return false;
  }
  for (int g = 0; g < a.one_cells(); ++g)
    if (f.two[a.id2(g)] != b.id2(f.one[g])) return false;
  // vertical composition
  for (int x = 0; x < a.two_cells(); ++x)
    for (int y = 0; y < a.two_cells(); ++y) {
      if (a.two_src_obj(x) != a.two_src_obj(y) || a.two_tgt_obj(x) != a.two_tgt_obj(y)) continue;
      if (a.two_tgt1(x) != a.two_src1(y)) continue;
      if (f.two[a.vcomp(x, y)] != b.vcomp(f.two[x], f.two[y])) return false;
    }
  // horizontal composition of 1- and 2-cells
  for (int g = 0; g < a.one_cells(); ++g)
    for (int h = 0; h < a.one_cells(); ++h) {
      if (a.one_tgt(g) != a.one_src(h)) continue;
      if (f.one[a.compose1(g, h)] != b.compose1(f.one[g], f.one[h])) return false;
    }
  for (int x = 0; x < a.two_cells(); ++x)
    for (int y = 0; y < a.two_cells(); ++y) {
      if (a.two_tgt_obj(x) != a.two_src_obj(y)) continue;
      if (f.two[a.hcomp(x, y)] != b.hcomp(f.two[x], f.two[y])) return false;
    }
  return true;
}

TwoFunctor identity_two_functor(const Fin2Category& a) {
  TwoFunctor f;
  f.obj.resize(a.objects());
  std::iota(f.obj.begin(), f.obj.end(), 0);
  f.one.resize(a.one_cells());
  std::iota(f.one.begin(), f.one.end(), 0);
  f.two.resize(a.two_cells());
  std::iota(f.two.begin(), f.two.end(), 0);
  return f;
}

TwoFunctor compose_two_functors(const TwoFunctor& f, const TwoFunctor& g) {
  TwoFunctor h;
  h.obj.reserve(f.obj.size());
  for (int x : f.obj) h.obj.push_back(g.obj[x]);
  h.one.reserve(f.one.size());
  for (int x : f.one) h.one.push_back(g.one[x]);
  h.two.reserve(f.two.size());
  for (int x : f.two) h.two.push_back(g.two[x]);
  return h;
}

bool assemble_two_functor(const Fin2Category& a, const Fin2Category& b, const std::vector<int>& obj,
                          const std::vector<CatFunctor>& homfns, TwoFunctor* out) {
  TwoFunctor f;
  f.obj = obj;
  f.one.assign(a.one_cells(), -1);
  f.two.assign(a.two_cells(), -1);
  const int n = a.objects();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const CatFunctor& fn = homfns[p * n + q];
      for (int k = 0; k < a.hom(p, q).objects(); ++k)
        f.one[a.one_cell_id(p, q, k)] = b.one_cell_id(obj[p], obj[q], fn.obj[k]);
      for (int k = 0; k < a.hom(p, q).morphisms(); ++k)
        f.two[a.two_cell_id(p, q, k)] = b.two_cell_id(obj[p], obj[q], fn.mor[k]);
    }
  if (!is_two_functor(a, b, f)) return false;
  *out = f;
  return true;
}

namespace {

// Search state for strict 2-functor enumeration; pairs are processed
// identity homs first, then by hom size, so composites can be pinned from
// already assigned factors.
struct Enumerator {
  const Fin2Category& A;
  const Fin2Category& B;
  std::vector<std::pair<int, int>> order;   // hom pairs in processing order
  std::vector<int> order_pos;               // (p*n+q) -> position, or -1 if empty hom
  std::vector<int> obj;                     // current object map
  std::vector<CatFunctor> homfn;            // current hom functors (n*n)
  std::vector<char> assigned;               // per pair position
  std::vector<TwoFunctor> out;

  explicit Enumerator(const Fin2Category& a, const Fin2Category& b) : A(a), B(b) {
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

  bool pair_ready(int p, int q) const {
    const int n = A.objects();
    int pos = order_pos[p * n + q];
    return pos < 0 || assigned[pos];
  }

  // verify the hcomp tables between every fully assigned triple involving
  // the pair at position t
  bool triples_ok(int t) {
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
              int lhs = A.one_local(A.compose1(A.one_cell_id(x, y, f), A.one_cell_id(y, z, g)));
              int rhs = B.one_local(
                  B.compose1(B.one_cell_id(obj[x], obj[y], fxy.obj[f]), B.one_cell_id(obj[y], obj[z], fyz.obj[g])));
              if (fxz.obj[lhs] != rhs) return false;
            }
          for (int u = 0; u < A.hom(x, y).morphisms(); ++u)
            for (int v = 0; v < A.hom(y, z).morphisms(); ++v) {
              int lhs = A.two_local(A.hcomp(A.two_cell_id(x, y, u), A.two_cell_id(y, z, v)));
              int rhs = B.two_local(
                  B.hcomp(B.two_cell_id(obj[x], obj[y], fxy.mor[u]), B.two_cell_id(obj[y], obj[z], fyz.mor[v])));
              if (fxz.mor[lhs] != rhs) return false;
            }
        }
    return true;
  }

  void go_pairs(int t) {
    const int n = A.objects();
    if (t == static_cast<int>(order.size())) {
      TwoFunctor f;
      if (assemble_two_functor(A, B, obj, homfn, &f)) out.push_back(f);
      return;
    }
    auto [p, q] = order[t];
    const FinCategory& ha = A.hom(p, q);
    const FinCategory& hb = B.hom(obj[p], obj[q]);
    // pin composites through assigned factor pairs
    std::vector<std::vector<int>> obj_cand(ha.objects()), mor_cand(ha.morphisms());
    if (p == q) obj_cand[A.raw().id1[p]] = {B.raw().id1[obj[p]]};
    for (int mid = 0; mid < n; ++mid) {
      if (A.hom(p, mid).objects() == 0 || A.hom(mid, q).objects() == 0) continue;
      int pos1 = order_pos[p * n + mid], pos2 = order_pos[mid * n + q];
      if (pos1 < 0 || pos1 >= t || pos2 < 0 || pos2 >= t) continue;
      const CatFunctor &f1 = homfn[p * n + mid], &f2 = homfn[mid * n + q];
      for (int f = 0; f < A.hom(p, mid).objects(); ++f)
        for (int g = 0; g < A.hom(mid, q).objects(); ++g) {
          int h = A.one_local(A.compose1(A.one_cell_id(p, mid, f), A.one_cell_id(mid, q, g)));
          int v = B.one_local(
              B.compose1(B.one_cell_id(obj[p], obj[mid], f1.obj[f]), B.one_cell_id(obj[mid], obj[q], f2.obj[g])));
          if (obj_cand[h].empty())
            obj_cand[h] = {v};
          else if (obj_cand[h][0] != v)
            return;  // two factorizations disagree: dead branch
        }
      for (int u = 0; u < A.hom(p, mid).morphisms(); ++u)
        for (int w = 0; w < A.hom(mid, q).morphisms(); ++w) {
          int h = A.two_local(A.hcomp(A.two_cell_id(p, mid, u), A.two_cell_id(mid, q, w)));
          int v = B.two_local(
              B.hcomp(B.two_cell_id(obj[p], obj[mid], f1.mor[u]), B.two_cell_id(obj[mid], obj[q], f2.mor[w])));
          if (mor_cand[h].empty())
            mor_cand[h] = {v};
          else if (mor_cand[h][0] != v)
            return;
        }
    }
    for (const CatFunctor& fn : enumerate_functors_constrained(ha, hb, obj_cand, mor_cand)) {
      homfn[p * n + q] = fn;
      assigned[t] = 1;
      if (triples_ok(t)) go_pairs(t + 1);
      assigned[t] = 0;
    }
  }

  void go_objects(int p) {
    const int n = A.objects();
    if (p == n) {
      // unassigned (empty-hom) pairs keep empty functors
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

std::vector<TwoFunctor> enumerate_two_functors(const Fin2Category& a, const Fin2Category& b) {
  Enumerator e(a, b);
  e.obj.assign(a.objects(), -1);
  if (a.objects() == 0) {
    e.go_pairs(0);
  } else {
    e.go_objects(0);
  }
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

}  // namespace twocat
