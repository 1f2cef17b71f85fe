#include "twocat/transform.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace twocat {

namespace {

// boundary of sigma_f for f: a -> b
int nat_src(const Fin2Category& d, const TwoFunctor& f, const LaxTransformation& s, int a, int b, int ff) {
  (void)a;
  return d.compose1(f.one[ff], s.comp[b]);  // sigma_b ∘ F f
}
int nat_tgt(const Fin2Category& d, const TwoFunctor& g, const LaxTransformation& s, int a, int b, int ff) {
  (void)b;
  return d.compose1(s.comp[a], g.one[ff]);  // G f ∘ sigma_a
}

}  // namespace

bool is_lax_transformation(const Fin2Category& b, const Fin2Category& d, const TwoFunctor& f,
                           const TwoFunctor& g, const LaxTransformation& s) {
  if (static_cast<int>(s.comp.size()) != b.objects()) return false;
  if (static_cast<int>(s.nat.size()) != b.one_cells()) return false;
  for (int p = 0; p < b.objects(); ++p) {
    int c = s.comp[p];
    if (c < 0 || c >= d.one_cells()) return false;
    if (d.one_src(c) != f.obj[p] || d.one_tgt(c) != g.obj[p]) return false;
  }
  for (int ff = 0; ff < b.one_cells(); ++ff) {
    int p = b.one_src(ff), q = b.one_tgt(ff);
    int x = s.nat[ff];
    if (x < 0 || x >= d.two_cells()) return false;
    if (d.two_src1(x) != nat_src(d, f, s, p, q, ff)) return false;
    if (d.two_tgt1(x) != nat_tgt(d, g, s, p, q, ff)) return false;
  }
  // unit coherence
  for (int p = 0; p < b.objects(); ++p)
    if (s.nat[b.id1(p)] != d.id2(s.comp[p])) return false;
  // composition coherence: sigma_{gf} = (1_{Gg} ⋆ sigma_f) ∘ (sigma_g ⋆ 1_{Ff})
  for (int ff = 0; ff < b.one_cells(); ++ff)
    for (int gg = 0; gg < b.one_cells(); ++gg) {
      if (b.one_tgt(ff) != b.one_src(gg)) continue;
      int lhs = s.nat[b.compose1(ff, gg)];
      int rhs = d.vcomp(d.hcomp(d.id2(f.one[ff]), s.nat[gg]), d.hcomp(s.nat[ff], d.id2(g.one[gg])));
      if (lhs != rhs) return false;
    }
  // 2-naturality: sigma_t ∘ (1_{sigma_b} ⋆ F alpha) = (G alpha ⋆ 1_{sigma_a}) ∘ sigma_s
  for (int x = 0; x < b.two_cells(); ++x) {
    int sf = b.two_src1(x), tf = b.two_tgt1(x);
    int p = b.two_src_obj(x), q = b.two_tgt_obj(x);
    int lhs = d.vcomp(d.hcomp(f.two[x], d.id2(s.comp[q])), s.nat[tf]);
    int rhs = d.vcomp(s.nat[sf], d.hcomp(d.id2(s.comp[p]), g.two[x]));
    if (lhs != rhs) return false;
  }
  return true;
}

bool transformation_has_flavor(const Fin2Category& d, const LaxTransformation& s, Flavor fl) {
  switch (fl) {
    case Flavor::Lax:
      return true;
    case Flavor::Pseudo:
      for (int x : s.nat)
        if (!d.two_invertible(x)) return false;
      return true;
    case Flavor::Strict:
      for (int x : s.nat)
        if (!d.is_id2(x)) return false;
      return true;
    case Flavor::Icon:
      for (int c : s.comp)
        if (!d.is_id1(c)) return false;
      return true;
  }
  return false;
}

bool is_modification(const Fin2Category& b, const Fin2Category& d, const TwoFunctor& f, const TwoFunctor& g,
                     const LaxTransformation& s, const LaxTransformation& t, const Modification& m) {
  if (static_cast<int>(m.comp.size()) != b.objects()) return false;
  for (int p = 0; p < b.objects(); ++p) {
    int x = m.comp[p];
    if (x < 0 || x >= d.two_cells()) return false;
    if (d.two_src1(x) != s.comp[p] || d.two_tgt1(x) != t.comp[p]) return false;
  }
  (void)g;
  for (int ff = 0; ff < b.one_cells(); ++ff) {
    int p = b.one_src(ff), q = b.one_tgt(ff);
    int lhs = d.vcomp(d.hcomp(d.id2(f.one[ff]), m.comp[q]), t.nat[ff]);
    int rhs = d.vcomp(s.nat[ff], d.hcomp(m.comp[p], d.id2(g.one[ff])));
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<LaxTransformation> enumerate_transformations(const Fin2Category& b, const Fin2Category& d,
                                                         const TwoFunctor& f, const TwoFunctor& g, Flavor fl) {
  if (f.obj.size() != g.obj.size()) throw std::invalid_argument("enumerate_transformations: non-parallel");
  std::vector<LaxTransformation> out;
  LaxTransformation cur;
  cur.comp.assign(b.objects(), -1);
  cur.nat.assign(b.one_cells(), -1);

  // non-identity 1-cells of B in id order; identities are forced
  std::vector<int> free_ones;
  for (int ff = 0; ff < b.one_cells(); ++ff)
    if (!b.is_id1(ff)) free_ones.push_back(ff);

  std::function<void(size_t)> go_nat = [&](size_t k) {
    if (k == free_ones.size()) {
      if (is_lax_transformation(b, d, f, g, cur) && transformation_has_flavor(d, cur, fl)) out.push_back(cur);
      return;
    }
    int ff = free_ones[k];
    int p = b.one_src(ff), q = b.one_tgt(ff);
    int want_src = nat_src(d, f, cur, p, q, ff);
    int want_tgt = nat_tgt(d, g, cur, p, q, ff);
    const FinCategory& h = d.hom(d.one_src(want_src), d.one_tgt(want_src));
    for (int ml = 0; ml < h.morphisms(); ++ml) {
      if (h.src(ml) != d.one_local(want_src) || h.tgt(ml) != d.one_local(want_tgt)) continue;
      int x = d.two_cell_id(d.one_src(want_src), d.one_tgt(want_src), ml);
      if (fl == Flavor::Pseudo && !d.two_invertible(x)) continue;
      if (fl == Flavor::Strict && !d.is_id2(x)) continue;
      cur.nat[ff] = x;
      go_nat(k + 1);
      cur.nat[ff] = -1;
    }
  };

  std::function<void(int)> go_comp = [&](int p) {
    if (p == b.objects()) {
      for (int q = 0; q < b.objects(); ++q) cur.nat[b.id1(q)] = d.id2(cur.comp[q]);
      go_nat(0);
      return;
    }
    if (fl == Flavor::Icon) {
      if (f.obj[p] != g.obj[p]) return;
      cur.comp[p] = d.id1(f.obj[p]);
      go_comp(p + 1);
      cur.comp[p] = -1;
      return;
    }
    for (int cl = 0; cl < d.hom(f.obj[p], g.obj[p]).objects(); ++cl) {
      cur.comp[p] = d.one_cell_id(f.obj[p], g.obj[p], cl);
      go_comp(p + 1);
      cur.comp[p] = -1;
    }
  };
  go_comp(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Modification> enumerate_modifications(const Fin2Category& b, const Fin2Category& d,
                                                  const TwoFunctor& f, const TwoFunctor& g,
                                                  const LaxTransformation& s, const LaxTransformation& t) {
  std::vector<Modification> out;
  Modification cur;
  cur.comp.assign(b.objects(), -1);
  std::function<void(int)> go = [&](int p) {
    if (p == b.objects()) {
      if (is_modification(b, d, f, g, s, t, cur)) out.push_back(cur);
      return;
    }
    int from = s.comp[p], to = t.comp[p];
    if (d.one_src(from) != d.one_src(to) || d.one_tgt(from) != d.one_tgt(to)) return;
    const FinCategory& h = d.hom(d.one_src(from), d.one_tgt(from));
    for (int ml = 0; ml < h.morphisms(); ++ml) {
      if (h.src(ml) != d.one_local(from) || h.tgt(ml) != d.one_local(to)) continue;
      cur.comp[p] = d.two_cell_id(d.one_src(from), d.one_tgt(from), ml);
      go(p + 1);
      cur.comp[p] = -1;
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

LaxTransformation identity_transformation(const Fin2Category& b, const Fin2Category& d, const TwoFunctor& f) {
  LaxTransformation s;
  s.comp.resize(b.objects());
  for (int p = 0; p < b.objects(); ++p) s.comp[p] = d.id1(f.obj[p]);
  s.nat.resize(b.one_cells());
  for (int ff = 0; ff < b.one_cells(); ++ff) s.nat[ff] = d.id2(f.one[ff]);
  return s;
}

LaxTransformation compose_transformations(const Fin2Category& b, const Fin2Category& d, const TwoFunctor& f,
                                          const TwoFunctor& g, const TwoFunctor& h, const LaxTransformation& s,
                                          const LaxTransformation& t) {
  (void)f;
  (void)g;
  (void)h;
  LaxTransformation r;
  r.comp.resize(b.objects());
  for (int p = 0; p < b.objects(); ++p) r.comp[p] = d.compose1(s.comp[p], t.comp[p]);
  r.nat.resize(b.one_cells());
  for (int ff = 0; ff < b.one_cells(); ++ff) {
    int p = b.one_src(ff), q = b.one_tgt(ff);
    // (t after s)_f = (t_f ⋆ 1_{s_a}) ∘ (1_{t_b} ⋆ s_f)
    r.nat[ff] = d.vcomp(d.hcomp(s.nat[ff], d.id2(t.comp[q])), d.hcomp(d.id2(s.comp[p]), t.nat[ff]));
  }
  return r;
}

int FunctorTwoCategory::object_index(const TwoFunctor& f) const {
  auto it = std::lower_bound(objs.begin(), objs.end(), f);
  if (it == objs.end() || !(*it == f)) return -1;
  return static_cast<int>(it - objs.begin());
}

int FunctorTwoCategory::trans_index(int i, int j, const LaxTransformation& s) const {
  const auto& v = trans[i * static_cast<int>(objs.size()) + j];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || !(*it == s)) return -1;
  return static_cast<int>(it - v.begin());
}

int FunctorTwoCategory::mod_index(int i, int j, int s, int t, const Modification& m) const {
  const int n = static_cast<int>(objs.size());
  if (!mod_lookup.empty()) {
    const auto& lut = mod_lookup[i * n + j];
    auto it = lut.find({s, t, m.comp});
    return it == lut.end() ? -1 : it->second;
  }
  const auto& v = mods[i * n + j];
  for (size_t k = 0; k < v.size(); ++k) {
    const auto& [ms, mt, mm] = v[k];
    if (ms == s && mt == t && mm == m) return static_cast<int>(k);
  }
  return -1;
}

FunctorTwoCategory functor_two_category(const Fin2Category& b, const Fin2Category& d, Flavor fl) {
  FunctorTwoCategory fc;
  fc.objs = enumerate_two_functors(b, d);
  const int n = static_cast<int>(fc.objs.size());
  fc.trans.resize(static_cast<size_t>(n) * n);
  fc.mods.resize(static_cast<size_t>(n) * n);
  fc.mod_lookup.resize(static_cast<size_t>(n) * n);

  Fin2Category::Data data;
  data.n_objects = n;
  data.id1.resize(n);
  data.hom.reserve(static_cast<size_t>(n) * n);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& ts = fc.trans[i * n + j];
      ts = enumerate_transformations(b, d, fc.objs[i], fc.objs[j], fl);
      auto& ms = fc.mods[i * n + j];
      std::vector<Mor> mor;
      for (int s = 0; s < static_cast<int>(ts.size()); ++s)
        for (int t = 0; t < static_cast<int>(ts.size()); ++t)
          for (const Modification& m : enumerate_modifications(b, d, fc.objs[i], fc.objs[j], ts[s], ts[t])) {
            fc.mod_lookup[i * n + j][{s, t, m.comp}] = static_cast<int>(ms.size());
            ms.push_back({s, t, m});
            mor.push_back({s, t});
          }
      // identity morphisms and composition inside hom(i,j)
      std::vector<int> ids(ts.size(), -1);
      for (int s = 0; s < static_cast<int>(ts.size()); ++s) {
        Modification idm;
        idm.comp.resize(b.objects());
        for (int p = 0; p < b.objects(); ++p) idm.comp[p] = d.id2(ts[s].comp[p]);
        ids[s] = fc.mod_index(i, j, s, s, idm);
        if (ids[s] < 0) throw std::logic_error("functor_two_category: identity modification missing");
      }
      const int nm = static_cast<int>(ms.size());
      std::vector<int> table(static_cast<size_t>(nm) * nm, -1);
      for (int x = 0; x < nm; ++x)
        for (int y = 0; y < nm; ++y) {
          const auto& [xs, xt, xm] = ms[x];
          const auto& [ys, yt, ym] = ms[y];
          if (xt != ys) continue;
          Modification r;
          r.comp.resize(b.objects());
          for (int p = 0; p < b.objects(); ++p) r.comp[p] = d.vcomp(xm.comp[p], ym.comp[p]);
          int idx = fc.mod_index(i, j, xs, yt, r);
          if (idx < 0) throw std::logic_error("functor_two_category: modification composite missing");
          table[static_cast<size_t>(x) * nm + y] = idx;
        }
      data.hom.emplace_back(static_cast<int>(ts.size()), std::move(mor), std::move(ids), std::move(table));
    }
  for (int i = 0; i < n; ++i) {
    LaxTransformation idt = identity_transformation(b, d, fc.objs[i]);
    data.id1[i] = fc.trans_index(i, i, idt);
    if (data.id1[i] < 0) throw std::logic_error("functor_two_category: identity transformation missing");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto& tij = fc.trans[i * n + j];
        const auto& tjk = fc.trans[j * n + k];
        const auto& mij = fc.mods[i * n + j];
        const auto& mjk = fc.mods[j * n + k];
        std::vector<int> t1(tij.size() * tjk.size(), -1);
        for (size_t s = 0; s < tij.size(); ++s)
          for (size_t t = 0; t < tjk.size(); ++t) {
            LaxTransformation r =
                compose_transformations(b, d, fc.objs[i], fc.objs[j], fc.objs[k], tij[s], tjk[t]);
            int idx = fc.trans_index(i, k, r);
            if (idx < 0) throw std::logic_error("functor_two_category: transformation composite missing");
            t1[s * tjk.size() + t] = idx;
          }
        std::vector<int> t2(mij.size() * mjk.size(), -1);
        for (size_t x = 0; x < mij.size(); ++x)
          for (size_t y = 0; y < mjk.size(); ++y) {
            const auto& [xs, xt, xm] = mij[x];
            const auto& [ys, yt, ym] = mjk[y];
            Modification r;
            r.comp.resize(b.objects());
            for (int p = 0; p < b.objects(); ++p) r.comp[p] = d.hcomp(xm.comp[p], ym.comp[p]);
            int rs = t1[static_cast<size_t>(xs) * tjk.size() + ys];
            int rt = t1[static_cast<size_t>(xt) * tjk.size() + yt];
            int idx = fc.mod_index(i, k, rs, rt, r);
            if (idx < 0) throw std::logic_error("functor_two_category: modification hcomp missing");
            t2[x * mjk.size() + y] = idx;
          }
        data.hcomp1.push_back(std::move(t1));
        data.hcomp2.push_back(std::move(t2));
      }
  fc.cat = Fin2Category(std::move(data));
  return fc;
}

TwoFunctor flavor_inclusion(const FunctorTwoCategory& sub, const FunctorTwoCategory& super) {
  const Fin2Category& e = sub.cat;
  const int n = static_cast<int>(sub.objs.size());
  const int m = static_cast<int>(super.objs.size());
  TwoFunctor f;
  f.obj.resize(n);
  for (int i = 0; i < n; ++i) {
    f.obj[i] = super.object_index(sub.objs[i]);
    if (f.obj[i] < 0) throw std::invalid_argument("flavor_inclusion: object missing in the larger flavor");
  }
  f.one.resize(e.one_cells());
  for (int g = 0; g < e.one_cells(); ++g) {
    int i = e.one_src(g), j = e.one_tgt(g);
    int local = super.trans_index(f.obj[i], f.obj[j], sub.trans[i * n + j][e.one_local(g)]);
    if (local < 0) throw std::invalid_argument("flavor_inclusion: transformation missing");
    f.one[g] = super.cat.one_cell_id(f.obj[i], f.obj[j], local);
  }
  f.two.resize(e.two_cells());
  for (int x = 0; x < e.two_cells(); ++x) {
    int i = e.two_src_obj(x), j = e.two_tgt_obj(x);
    const auto& [s, t, mm] = sub.mods[i * n + j][e.two_local(x)];
    int ss = super.trans_index(f.obj[i], f.obj[j], sub.trans[i * n + j][s]);
    int tt = super.trans_index(f.obj[i], f.obj[j], sub.trans[i * n + j][t]);
    int local = super.mod_index(f.obj[i], f.obj[j], ss, tt, mm);
    if (local < 0) throw std::invalid_argument("flavor_inclusion: modification missing");
    f.two[x] = super.cat.two_cell_id(f.obj[i], f.obj[j], local);
  }
  (void)m;
  if (!is_two_functor(sub.cat, super.cat, f)) throw std::logic_error("flavor_inclusion: not a 2-functor");
  return f;
}

TwoFunctor evaluation_functor(const FunctorTwoCategory& fc, const Fin2Category& d, int b_obj) {
  (void)d;
  const Fin2Category& e = fc.cat;
  const int n = e.objects();
  TwoFunctor f;
  f.obj.resize(n);
  for (int i = 0; i < n; ++i) f.obj[i] = fc.objs[i].obj[b_obj];
  f.one.resize(e.one_cells());
  for (int g = 0; g < e.one_cells(); ++g) {
    int i = e.one_src(g), j = e.one_tgt(g);
    f.one[g] = fc.trans[i * n + j][e.one_local(g)].comp[b_obj];
  }
  f.two.resize(e.two_cells());
  for (int x = 0; x < e.two_cells(); ++x) {
    int i = e.two_src_obj(x), j = e.two_tgt_obj(x);
    f.two[x] = std::get<2>(fc.mods[i * n + j][e.two_local(x)]).comp[b_obj];
  }
  return f;
}

}  // namespace twocat
