#include "twocat/theta2.hpp"

#include <algorithm>
#include <stdexcept>

namespace twocat {

namespace {

std::vector<int> digits(int idx, const std::vector<int>& radix) {
  std::vector<int> ds(radix.size());
  for (size_t k = 0; k < radix.size(); ++k) {
    ds[k] = idx % radix[k];
    idx /= radix[k];
  }
  return ds;
}

int undigits(const std::vector<int>& ds, const std::vector<int>& radix) {
  int idx = 0;
  for (size_t k = radix.size(); k-- > 0;) idx = idx * radix[k] + ds[k];
  return idx;
}

}  // namespace

Fin2Category theta_of(const ThetaShape& s) {
  if (!s.valid()) throw std::invalid_argument("theta_of: malformed shape");
  return theta_category(s.i, s.js);
}

ThetaShape diag_shape(int i, int j) { return ThetaShape{i, std::vector<int>(i, j)}; }

TwoFunctor theta_diag_morphism(const Fin2Category& from, int i_from, int j_from, const Fin2Category& to,
                               int i_to, int j_to, const std::vector<int>& alpha,
                               const std::vector<int>& beta) {
  if (static_cast<int>(alpha.size()) != i_from + 1 || static_cast<int>(beta.size()) != j_from + 1)
    throw std::invalid_argument("theta_diag_morphism: operator sizes");
  (void)i_to;
  FinCategory ord_from = ordinal_category(j_from), ord_to = ordinal_category(j_to);

  TwoFunctor t;
  t.obj.assign(alpha.begin(), alpha.end());
  t.one.assign(from.one_cells(), -1);
  t.two.assign(from.two_cells(), -1);
  for (int a = 0; a <= i_from; ++a)
    for (int b = a; b <= i_from; ++b) {
      const int cols_from = b - a;
      const int aa = alpha[a], bb = alpha[b];
      const int cols_to = bb - aa;
      std::vector<int> r_obj_from(cols_from, j_from + 1), r_obj_to(cols_to, j_to + 1);
      std::vector<int> r_mor_from(cols_from, ord_from.morphisms()), r_mor_to(cols_to, ord_to.morphisms());
      // position p in [aa, bb) sits in the alpha-image of column s when
      // alpha[s] <= p < alpha[s+1]
      std::vector<int> col_of(cols_to, -1);
      for (int p = 0; p < cols_to; ++p)
        for (int s = a; s < b; ++s)
          if (alpha[s] <= aa + p && aa + p < alpha[s + 1]) {
            col_of[p] = s - a;
            break;
          }
      for (int k = 0; k < from.hom(a, b).objects(); ++k) {
        std::vector<int> ds = digits(k, r_obj_from);
        std::vector<int> es(cols_to);
        for (int p = 0; p < cols_to; ++p) es[p] = beta[ds[col_of[p]]];
        t.one[from.one_cell_id(a, b, k)] = to.one_cell_id(aa, bb, undigits(es, r_obj_to));
      }
      for (int k = 0; k < from.hom(a, b).morphisms(); ++k) {
        std::vector<int> ds = digits(k, r_mor_from);
        std::vector<int> es(cols_to);
        for (int p = 0; p < cols_to; ++p) {
          int m = ds[col_of[p]];
          int u = beta[ord_from.src(m)], v = beta[ord_from.tgt(m)];
          es[p] = ord_to.hom(u, v).at(0);
        }
        t.two[from.two_cell_id(a, b, k)] = to.two_cell_id(aa, bb, undigits(es, r_mor_to));
      }
    }
  if (!is_two_functor(from, to, t)) throw std::logic_error("theta_diag_morphism: not a 2-functor");
  return t;
}

std::vector<Nps> theta2_level(const Fin2Category& d, const ThetaShape& shape) {
  return enumerate_nps(theta_of(shape), d);
}

std::vector<TwoFunctor> gaunt_bisimplicial_level(const Fin2Category& a, int i, int j) {
  if (!is_gaunt(a)) throw std::invalid_argument("gaunt_bisimplicial_level: target not gaunt");
  return enumerate_two_functors(theta_of(diag_shape(i, j)), a);
}

GridCheckResult check_optimistic(const Fin2Category& a, int i_max, int j_max) {
  GridCheckResult r;
  if (!is_gaunt(a)) {
    r.pass = false;
    r.detail = "target not gaunt";
    return r;
  }
  for (int i = 0; i <= i_max; ++i)
    for (int j = 0; j <= j_max; ++j) {
      Fin2Category th = theta_of(diag_shape(i, j));
      std::vector<Nps> naps = enumerate_nps(th, a);
      std::vector<TwoFunctor> strict = enumerate_two_functors(th, a);
      std::vector<TwoFunctor> stripped;
      stripped.reserve(naps.size());
      for (const Nps& f : naps) stripped.push_back(nps_strip(f));
      std::sort(stripped.begin(), stripped.end());
      bool dup = std::adjacent_find(stripped.begin(), stripped.end()) != stripped.end();
      bool equal = stripped == strict;
      r.lines.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ") nps=" +
                        std::to_string(naps.size()) + " strict=" + std::to_string(strict.size()) +
                        (equal && !dup ? " bijective" : " MISMATCH"));
      if (dup || !equal) {
        r.pass = false;
        r.detail = "strictification not bijective at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  return r;
}

GridCheckResult check_leinster_vs_moser(const Fin2Category& a, int i_max, int j_max) {
  GridCheckResult r = check_optimistic(a, i_max, j_max);
  if (!r.pass) return r;
  // pre-build thetas and levels
  std::vector<std::vector<Fin2Category>> th(i_max + 1);
  std::vector<std::vector<std::vector<Nps>>> nlv(i_max + 1);
  std::vector<std::vector<std::vector<TwoFunctor>>> slv(i_max + 1);
  for (int i = 0; i <= i_max; ++i)
    for (int j = 0; j <= j_max; ++j) {
      th[i].push_back(theta_of(diag_shape(i, j)));
      nlv[i].push_back(enumerate_nps(th[i][j], a));
      slv[i].push_back(enumerate_two_functors(th[i][j], a));
    }
  auto mono_face = [](int s, int n) {  // delta_s: [n-1] -> [n]
    std::vector<int> m(n);
    for (int x = 0; x < n; ++x) m[x] = x < s ? x : x + 1;
    return m;
  };
  auto mono_degen = [](int s, int n) {  // sigma_s: [n+1] -> [n]
    std::vector<int> m(n + 2);
    for (int x = 0; x <= n + 1; ++x) m[x] = x <= s ? x : x - 1;
    return m;
  };
  auto ident = [](int n) {
    std::vector<int> m(n + 1);
    for (int x = 0; x <= n; ++x) m[x] = x;
    return m;
  };
  auto run_op = [&](int i_from, int j_from, int i_to, int j_to, const std::vector<int>& alpha,
                    const std::vector<int>& beta, const std::string& label) {
    TwoFunctor t = theta_diag_morphism(th[i_from][j_from], i_from, j_from, th[i_to][j_to], i_to, j_to,
                                       alpha, beta);
    const auto& nfrom = nlv[i_to][j_to];
    (void)nfrom;
    for (size_t x = 0; x < nlv[i_to][j_to].size(); ++x) {
      // operator acts by precomposition: level (i_to,j_to) -> level (i_from,j_from)
      Nps img = precompose_nps(th[i_from][j_from], th[i_to][j_to], a, t, nlv[i_to][j_to][x]);
      auto it = std::lower_bound(nlv[i_from][j_from].begin(), nlv[i_from][j_from].end(), img);
      bool found = it != nlv[i_from][j_from].end() && *it == img;
      TwoFunctor simg = compose_two_functors(t, nps_strip(nlv[i_to][j_to][x]));
      auto it2 = std::lower_bound(slv[i_from][j_from].begin(), slv[i_from][j_from].end(), simg);
      bool found2 = it2 != slv[i_from][j_from].end() && *it2 == simg;
      if (!found || !found2 || !(nps_strip(img) == simg)) {
        r.pass = false;
        r.detail = "operator " + label + " incompatible at element " + std::to_string(x);
        return;
      }
    }
    r.lines.push_back("op " + label + " compatible");
  };
  for (int i = 0; i <= i_max && r.pass; ++i)
    for (int j = 0; j <= j_max && r.pass; ++j) {
      for (int s = 0; s <= i && i >= 1 && r.pass; ++s)
        run_op(i - 1, j, i, j, mono_face(s, i), ident(j), "d" + std::to_string(s) + "@i(" +
               std::to_string(i) + "," + std::to_string(j) + ")");
      for (int s = 0; s <= j && j >= 1 && r.pass; ++s)
        run_op(i, j - 1, i, j, ident(i), mono_face(s, j), "d" + std::to_string(s) + "@j(" +
               std::to_string(i) + "," + std::to_string(j) + ")");
      for (int s = 0; s < i && r.pass; ++s)
        run_op(i, j, i - 1, j, mono_degen(s, i - 1), ident(j), "s" + std::to_string(s) + "@i(" +
               std::to_string(i) + "," + std::to_string(j) + ")");
      for (int s = 0; s < j && r.pass; ++s)
        run_op(i, j, i, j - 1, ident(i), mono_degen(s, j - 1), "s" + std::to_string(s) + "@j(" +
               std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return r;
}

// ---------------------------------------------------------------------------

namespace {
constexpr int kTrunc = 3;
}

GauntNerveProvider::GauntNerveProvider(const Fin2Category& b) : b_(&b) {
  if (!is_gaunt(b)) throw std::invalid_argument("GauntNerveProvider: target not gaunt");
  for (int total = 0; total <= kTrunc; ++total)
    for (int i = 0; i <= total; ++i) keys_.push_back({i, total - i});
  for (auto [i, j] : keys_) {
    thetas_.push_back(theta_of(diag_shape(i, j)));
    levels_.push_back(enumerate_two_functors(thetas_.back(), b));
  }
  ps_.sizes.resize(keys_.size());
  ps_.level_names.resize(keys_.size());
  for (size_t k = 0; k < keys_.size(); ++k) {
    ps_.sizes[k] = static_cast<int>(levels_[k].size());
    ps_.level_names[k] = "(" + std::to_string(keys_[k].first) + "," + std::to_string(keys_[k].second) + ")";
    ps_.order.push_back(static_cast<int>(k));
  }
  auto mono_face = [](int s, int n) {
    std::vector<int> m(n);
    for (int x = 0; x < n; ++x) m[x] = x < s ? x : x + 1;
    return m;
  };
  auto mono_degen = [](int s, int n) {
    std::vector<int> m(n + 2);
    for (int x = 0; x <= n + 1; ++x) m[x] = x <= s ? x : x - 1;
    return m;
  };
  auto ident = [](int n) {
    std::vector<int> m(n + 1);
    for (int x = 0; x <= n; ++x) m[x] = x;
    return m;
  };
  auto add_gen = [&](int from_key, int to_key, const std::vector<int>& alpha, const std::vector<int>& beta,
                     bool face) {
    auto [fi, fj] = keys_[from_key];
    auto [ti, tj] = keys_[to_key];
    TwoFunctor t = theta_diag_morphism(thetas_[to_key], ti, tj, thetas_[from_key], fi, fj, alpha, beta);
    TruncPresheaf::Gen g;
    g.from = from_key;
    g.to = to_key;
    g.is_face = face;
    g.map.resize(levels_[from_key].size());
    for (size_t x = 0; x < levels_[from_key].size(); ++x) {
      TwoFunctor img = compose_two_functors(t, levels_[from_key][x]);
      auto it = std::lower_bound(levels_[to_key].begin(), levels_[to_key].end(), img);
      if (it == levels_[to_key].end() || !(*it == img))
        throw std::logic_error("GauntNerveProvider: operator image missing");
      g.map[x] = static_cast<int>(it - levels_[to_key].begin());
    }
    ps_.gens.push_back(std::move(g));
  };
  for (size_t k = 0; k < keys_.size(); ++k) {
    auto [i, j] = keys_[k];
    if (i >= 1)
      for (int s = 0; s <= i; ++s)
        add_gen(static_cast<int>(k), key_index(i - 1, j), mono_face(s, i), ident(j), true);
    if (j >= 1)
      for (int s = 0; s <= j; ++s) add_gen(static_cast<int>(k), key_index(i, j - 1), ident(i), mono_face(s, j), true);
    if (i + 1 + j <= kTrunc)
      for (int s = 0; s <= i; ++s) add_gen(static_cast<int>(k), key_index(i + 1, j), mono_degen(s, i), ident(j), false);
    if (i + j + 1 <= kTrunc)
      for (int s = 0; s <= j; ++s) add_gen(static_cast<int>(k), key_index(i, j + 1), ident(i), mono_degen(s, j), false);
  }
}

int GauntNerveProvider::key_index(int i, int j) const {
  for (size_t k = 0; k < keys_.size(); ++k)
    if (keys_[k] == std::pair<int, int>{i, j}) return static_cast<int>(k);
  throw std::out_of_range("GauntNerveProvider: key outside truncation");
}

const std::vector<TwoFunctor>& GauntNerveProvider::level(int i, int j) const { return levels_[key_index(i, j)]; }

int GauntNerveProvider::encode_object(int obj) const {
  const Fin2Category& th = thetas_[key_index(0, 0)];
  TwoFunctor f;
  f.obj = {obj};
  f.one = {b_->id1(obj)};
  f.two = {b_->id2(b_->id1(obj))};
  (void)th;
  const auto& lv = level(0, 0);
  auto it = std::lower_bound(lv.begin(), lv.end(), f);
  return static_cast<int>(it - lv.begin());
}

int GauntNerveProvider::encode_one(int one_cell) const {
  const Fin2Category& th = thetas_[key_index(1, 0)];
  int s = b_->one_src(one_cell), t = b_->one_tgt(one_cell);
  TwoFunctor f;
  f.obj = {s, t};
  f.one.assign(th.one_cells(), -1);
  f.one[th.one_cell_id(0, 0, 0)] = b_->id1(s);
  f.one[th.one_cell_id(0, 1, 0)] = one_cell;
  f.one[th.one_cell_id(1, 1, 0)] = b_->id1(t);
  f.two.assign(th.two_cells(), -1);
  f.two[th.two_cell_id(0, 0, 0)] = b_->id2(b_->id1(s));
  f.two[th.two_cell_id(0, 1, 0)] = b_->id2(one_cell);
  f.two[th.two_cell_id(1, 1, 0)] = b_->id2(b_->id1(t));
  const auto& lv = level(1, 0);
  auto it = std::lower_bound(lv.begin(), lv.end(), f);
  if (it == lv.end() || !(*it == f)) throw std::logic_error("encode_one: not found");
  return static_cast<int>(it - lv.begin());
}

int GauntNerveProvider::encode_two(int two_cell) const {
  const Fin2Category& th = thetas_[key_index(1, 1)];
  int p = b_->two_src_obj(two_cell), q = b_->two_tgt_obj(two_cell);
  int u = b_->two_src1(two_cell), v = b_->two_tgt1(two_cell);
  TwoFunctor f;
  f.obj = {p, q};
  f.one.assign(th.one_cells(), -1);
  f.one[th.one_cell_id(0, 0, 0)] = b_->id1(p);
  f.one[th.one_cell_id(0, 1, 0)] = u;
  f.one[th.one_cell_id(0, 1, 1)] = v;
  f.one[th.one_cell_id(1, 1, 0)] = b_->id1(q);
  f.two.assign(th.two_cells(), -1);
  f.two[th.two_cell_id(0, 0, 0)] = b_->id2(b_->id1(p));
  f.two[th.two_cell_id(1, 1, 0)] = b_->id2(b_->id1(q));
  // hom(0,1) = [1]: morphisms id_u, u->v, id_v
  f.two[th.two_cell_id(0, 1, 0)] = b_->id2(u);
  f.two[th.two_cell_id(0, 1, 1)] = two_cell;
  f.two[th.two_cell_id(0, 1, 2)] = b_->id2(v);
  const auto& lv = level(1, 1);
  auto it = std::lower_bound(lv.begin(), lv.end(), f);
  if (it == lv.end() || !(*it == f)) throw std::logic_error("encode_two: not found");
  return static_cast<int>(it - lv.begin());
}

int GauntNerveProvider::encode_pair(int ff, int gg) const {
  const Fin2Category& th = thetas_[key_index(2, 0)];
  int x = b_->one_src(ff), y = b_->one_tgt(ff), z = b_->one_tgt(gg);
  TwoFunctor f;
  f.obj = {x, y, z};
  f.one.assign(th.one_cells(), -1);
  f.one[th.one_cell_id(0, 0, 0)] = b_->id1(x);
  f.one[th.one_cell_id(1, 1, 0)] = b_->id1(y);
  f.one[th.one_cell_id(2, 2, 0)] = b_->id1(z);
  f.one[th.one_cell_id(0, 1, 0)] = ff;
  f.one[th.one_cell_id(1, 2, 0)] = gg;
  f.one[th.one_cell_id(0, 2, 0)] = b_->compose1(ff, gg);
  f.two.assign(th.two_cells(), -1);
  for (int a = 0; a < 3; ++a)
    for (int c = a; c < 3; ++c)
      f.two[th.two_cell_id(a, c, 0)] = b_->id2(f.one[th.one_cell_id(a, c, 0)]);
  const auto& lv = level(2, 0);
  auto it = std::lower_bound(lv.begin(), lv.end(), f);
  if (it == lv.end() || !(*it == f)) throw std::logic_error("encode_pair: not found");
  return static_cast<int>(it - lv.begin());
}

int GauntNerveProvider::decode_object(int x) const { return level(0, 0)[x].obj[0]; }

int GauntNerveProvider::decode_one(int x) const {
  const Fin2Category& th = thetas_[key_index(1, 0)];
  return level(1, 0)[x].one[th.one_cell_id(0, 1, 0)];
}

int GauntNerveProvider::decode_two(int x) const {
  const Fin2Category& th = thetas_[key_index(1, 1)];
  return level(1, 1)[x].two[th.two_cell_id(0, 1, 1)];
}

Triangle GauntNerveProvider::decode_triangle(int x) const {
  const Fin2Category& th = thetas_[key_index(2, 0)];
  const TwoFunctor& f = level(2, 0)[x];
  int u = f.one[th.one_cell_id(0, 1, 0)];
  int v = f.one[th.one_cell_id(1, 2, 0)];
  int w = f.one[th.one_cell_id(0, 2, 0)];
  return Triangle{u, v, w, b_->id2(w)};
}

int GauntNerveProvider::push(const GauntNerveProvider& src, const Nps& f, int key, int x) const {
  auto [i, j] = keys_[key];
  const Fin2Category& th = thetas_[key];
  FreePresentation fp = theta_free_presentation(th, i);
  TwoFunctor img = pushforward_free(fp, *src.b_, *b_, src.levels_[key][x], f);
  const auto& lv = levels_[key];
  auto it = std::lower_bound(lv.begin(), lv.end(), img);
  if (it == lv.end() || !(*it == img)) throw std::logic_error("push: image not a level element");
  return static_cast<int>(it - lv.begin());
}

Nps gamma_of_family(const GauntNerveProvider& pa, const GauntNerveProvider& pb,
                    const std::vector<std::vector<int>>& family) {
  const Fin2Category& a = pa.target();
  Nps f;
  f.obj.resize(a.objects());
  const auto& f00 = family[pa.key_index(0, 0)];
  for (int x = 0; x < a.objects(); ++x) f.obj[x] = pb.decode_object(f00[pa.encode_object(x)]);
  f.one.resize(a.one_cells());
  const auto& f10 = family[pa.key_index(1, 0)];
  for (int g = 0; g < a.one_cells(); ++g) f.one[g] = pb.decode_one(f10[pa.encode_one(g)]);
  f.two.resize(a.two_cells());
  const auto& f11 = family[pa.key_index(1, 1)];
  for (int x = 0; x < a.two_cells(); ++x) f.two[x] = pb.decode_two(f11[pa.encode_two(x)]);
  const auto& f20 = family[pa.key_index(2, 0)];
  const auto& pairs = a.composable_pairs();
  f.compositor.resize(pairs.size());
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [ff, gg] = pairs[p];
    Triangle t = pb.decode_triangle(f20[pa.encode_pair(ff, gg)]);
    f.compositor[p] = t.phi;
  }
  return f;
}

AppendixReport appendix_roundtrip(const Fin2Category& a, const Fin2Category& b) {
  AppendixReport r;
  GauntNerveProvider pa(a), pb(b);
  auto families = enumerate_natural_maps(pa.presheaf(), pb.presheaf());
  std::vector<Nps> naps = enumerate_nps(a, b);
  r.n_maps = static_cast<long long>(families.size());
  r.n_nps = static_cast<long long>(naps.size());
  if (r.n_maps != r.n_nps) {
    r.pass = false;
    r.detail = "cardinality mismatch";
    return r;
  }

  // N followed by gamma is the identity on nps
  for (const Nps& f : naps) {
    std::vector<std::vector<int>> fam(pa.keys().size());
    for (size_t k = 0; k < pa.keys().size(); ++k) {
      fam[k].resize(pa.presheaf().sizes[k]);
      for (int x = 0; x < pa.presheaf().sizes[k]; ++x) fam[k][x] = pb.push(pa, f, static_cast<int>(k), x);
    }
    if (!is_natural_map(pa.presheaf(), pb.presheaf(), fam)) {
      r.pass = false;
      r.detail = "N(F) is not operator-natural";
      return r;
    }
    Nps back = gamma_of_family(pa, pb, fam);
    if (!(back == f)) {
      r.pass = false;
      r.detail = "gamma ∘ N != id";
      return r;
    }
  }

  // gamma followed by N is the identity on natural families
  for (const auto& fam : families) {
    Nps g = gamma_of_family(pa, pb, fam);
    auto bad = validate_nps(a, b, g);
    if (!bad.empty()) {
      r.pass = false;
      r.detail = "gamma(f) fails: " + bad.front();
      return r;
    }
    std::vector<std::vector<int>> nf(pa.keys().size());
    for (size_t k = 0; k < pa.keys().size(); ++k) {
      nf[k].resize(pa.presheaf().sizes[k]);
      for (int x = 0; x < pa.presheaf().sizes[k]; ++x) nf[k][x] = pb.push(pa, g, static_cast<int>(k), x);
    }
    if (nf != fam) {
      r.pass = false;
      r.detail = "N ∘ gamma != id";
      return r;
    }
  }
  return r;
}

}  // namespace twocat
