#include "twocat/rezk.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace twocat {

namespace {

std::vector<int> mono_face(int s, int n) {  // delta_s: [n-1] -> [n]
  std::vector<int> m(n);
  for (int x = 0; x < n; ++x) m[x] = x < s ? x : x + 1;
  return m;
}
std::vector<int> mono_degen(int s, int n) {  // sigma_s: [n+1] -> [n]
  std::vector<int> m(n + 2);
  for (int x = 0; x <= n + 1; ++x) m[x] = x <= s ? x : x - 1;
  return m;
}
std::vector<int> ident(int n) {
  std::vector<int> m(n + 1);
  for (int x = 0; x <= n; ++x) m[x] = x;
  return m;
}

}  // namespace

RezkNerve::RezkNerve(const FinCategory& c, int j_max, int k_max) : c_(&c), j_max_(j_max), k_max_(k_max) {
  for (int j = 0; j <= j_max_; ++j)
    for (int k = 0; k <= k_max_; ++k) {
      domains_.push_back(product_category(ordinal_category(j), chaotic_category(k)));
      levels_.push_back(enumerate_functors(domains_.back(), c));
    }
}

const FinCategory& RezkNerve::domain(int j, int k) const { return domains_[j * (k_max_ + 1) + k]; }
const std::vector<CatFunctor>& RezkNerve::level(int j, int k) const { return levels_[j * (k_max_ + 1) + k]; }

int RezkNerve::act(int j, int k, int x, const std::vector<int>& alpha, const std::vector<int>& beta, int jp,
                   int kp) const {
  CatFunctor op = product_functor(ordinal_category(jp), chaotic_category(kp), ordinal_category(j),
                                  chaotic_category(k), ordinal_functor(alpha, jp, j),
                                  chaotic_functor(beta, kp, k));
  CatFunctor img = compose_functors(op, level(j, k)[x]);
  const auto& lv = level(jp, kp);
  auto it = std::lower_bound(lv.begin(), lv.end(), img);
  if (it == lv.end() || !(*it == img)) throw std::logic_error("RezkNerve::act: image missing");
  return static_cast<int>(it - lv.begin());
}

std::vector<std::string> check_rezk_identities(const RezkNerve& n, int j_max, int k_max) {
  std::vector<std::string> bad;
  auto note = [&](int j, int k, int x, const std::string& s) {
    bad.push_back("(" + std::to_string(j) + "," + std::to_string(k) + ") elem " + std::to_string(x) + ": " + s);
  };
  for (int j = 0; j <= j_max; ++j)
    for (int k = 0; k <= k_max; ++k)
      for (int x = 0; x < n.size(j, k); ++x) {
        // d_i d_j = d_{j-1} d_i in the j-direction
        if (j >= 2)
          for (int t = 1; t <= j; ++t)
            for (int s = 0; s < t; ++s) {
              int lhs = n.act(j - 1, k, n.act(j, k, x, mono_face(t, j), ident(k), j - 1, k),
                              mono_face(s, j - 1), ident(k), j - 2, k);
              int rhs = n.act(j - 1, k, n.act(j, k, x, mono_face(s, j), ident(k), j - 1, k),
                              mono_face(t - 1, j - 1), ident(k), j - 2, k);
              if (lhs != rhs) note(j, k, x, "dd j-direction");
            }
        if (k >= 2)
          for (int t = 1; t <= k; ++t)
            for (int s = 0; s < t; ++s) {
              int lhs = n.act(j, k - 1, n.act(j, k, x, ident(j), mono_face(t, k), j, k - 1), ident(j),
                              mono_face(s, k - 1), j, k - 2);
              int rhs = n.act(j, k - 1, n.act(j, k, x, ident(j), mono_face(s, k), j, k - 1), ident(j),
                              mono_face(t - 1, k - 1), j, k - 2);
              if (lhs != rhs) note(j, k, x, "dd k-direction");
            }
        // cross-direction commutation
        if (j >= 1 && k >= 1)
          for (int s = 0; s <= j; ++s)
            for (int t = 0; t <= k; ++t) {
              int lhs = n.act(j - 1, k, n.act(j, k, x, mono_face(s, j), ident(k), j - 1, k), ident(j - 1),
                              mono_face(t, k), j - 1, k - 1);
              int rhs = n.act(j, k - 1, n.act(j, k, x, ident(j), mono_face(t, k), j, k - 1),
                              mono_face(s, j), ident(k - 1), j - 1, k - 1);
              if (lhs != rhs) note(j, k, x, "cross dd");
            }
      }
  // s then d round trip: d_s s_s = id and d_{s+1} s_s = id
  for (int j = 0; j < j_max; ++j)
    for (int k = 0; k <= k_max; ++k)
      for (int x = 0; x < n.size(j, k); ++x)
        for (int s = 0; s <= j; ++s) {
          int up = n.act(j, k, x, mono_degen(s, j), ident(k), j + 1, k);
          if (n.act(j + 1, k, up, mono_face(s, j + 1), ident(k), j, k) != x) note(j, k, x, "d s != id (j)");
          if (n.act(j + 1, k, up, mono_face(s + 1, j + 1), ident(k), j, k) != x)
            note(j, k, x, "d s != id (j)");
        }
  for (int j = 0; j <= j_max; ++j)
    for (int k = 0; k < k_max; ++k)
      for (int x = 0; x < n.size(j, k); ++x)
        for (int s = 0; s <= k; ++s) {
          int up = n.act(j, k, x, ident(j), mono_degen(s, k), j, k + 1);
          if (n.act(j, k + 1, up, ident(j), mono_face(s, k + 1), j, k) != x) note(j, k, x, "d s != id (k)");
        }
  return bad;
}

// ---------------------------------------------------------------------------

int PrecatNerve::lkey(int i, int j, int k) const {
  return (i * (j_max_ + 1) + j) * (k_max_ + 1) + k;
}
int PrecatNerve::skey(int j, int k) const { return j * (k_max_ + 1) + k; }

PrecatNerve::PrecatNerve(const Fin2Category& d, int i_max, int j_max, int k_max)
    : d_(&d), i_max_(i_max), j_max_(j_max), k_max_(k_max) {
  const int n = d.objects();
  for (int j = 0; j <= j_max_; ++j) ords_.push_back(ordinal_category(j));
  for (int k = 0; k <= k_max_; ++k) chas_.push_back(chaotic_category(k));
  for (int j = 0; j <= j_max_; ++j)
    for (int k = 0; k <= k_max_; ++k) {
      shapes_.push_back(product_category(ords_[j], chas_[k]));
      std::vector<std::vector<CatFunctor>> per;
      per.resize(static_cast<size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) per[a * n + b] = enumerate_functors(shapes_.back(), d.hom(a, b));
      hf_.push_back(std::move(per));
    }
  levels_.resize(static_cast<size_t>(i_max_ + 1) * (j_max_ + 1) * (k_max_ + 1));
  offsets_.resize(levels_.size());
  for (int i = 0; i <= i_max_; ++i)
    for (int j = 0; j <= j_max_; ++j)
      for (int k = 0; k <= k_max_; ++k) {
        auto& lv = levels_[lkey(i, j, k)];
        auto& off = offsets_[lkey(i, j, k)];
        std::vector<int> objs(i + 1, 0);
        // enumerate object tuples lexicographically; within a tuple, functor
        // indices run in mixed radix with slot 0 most significant, which is
        // exactly Elem ordering, so the level comes out sorted
        std::function<void(int)> go_o = [&](int s) {
          if (s == i + 1) {
            long long count = 1;
            for (int t = 0; t < i; ++t)
              count *= static_cast<long long>(hf_[skey(j, k)][objs[t] * n + objs[t + 1]].size());
            if (count == 0) return;
            off[objs] = static_cast<int>(lv.size());
            std::vector<int> fns(i, 0);
            std::function<void(int)> go_f = [&](int t) {
              if (t == i) {
                lv.push_back({objs, fns});
                return;
              }
              const auto& funs = hf_[skey(j, k)][objs[t] * n + objs[t + 1]];
              for (int v = 0; v < static_cast<int>(funs.size()); ++v) {
                fns[t] = v;
                go_f(t + 1);
              }
            };
            go_f(0);
            return;
          }
          for (int v = 0; v < n; ++v) {
            objs[s] = v;
            go_o(s + 1);
          }
        };
        go_o(0);
      }
}

const FinCategory& PrecatNerve::shape(int j, int k) const { return shapes_[skey(j, k)]; }
const std::vector<CatFunctor>& PrecatNerve::homfuns(int j, int k, int a, int b) const {
  return hf_[skey(j, k)][a * d_->objects() + b];
}
const std::vector<PrecatNerve::Elem>& PrecatNerve::level(int i, int j, int k) const {
  return levels_[lkey(i, j, k)];
}

int PrecatNerve::index_of(int i, int j, int k, const Elem& e) const {
  const auto& off = offsets_[lkey(i, j, k)];
  auto it = off.find(e.objs);
  if (it == off.end()) throw std::logic_error("PrecatNerve: element missing");
  int idx = it->second;
  long long rank = 0;
  for (size_t t = 0; t < e.fns.size(); ++t) {
    rank = rank * static_cast<long long>(homfuns(j, k, e.objs[t], e.objs[t + 1]).size()) + e.fns[t];
  }
  return idx + static_cast<int>(rank);
}

const std::vector<int>& PrecatNerve::restriction(int dir, int s, bool is_face, int j, int k, int a,
                                                 int b) const {
  const int n = d_->objects();
  auto key = std::tuple{dir, s, is_face ? 1 : 0, skey(j, k), a * n + b};
  auto it = restrict_.find(key);
  if (it != restrict_.end()) return it->second;
  int jp = j, kp = k;
  std::vector<int> alpha, beta;
  auto idvec = [](int m) {
    std::vector<int> v(m + 1);
    for (int x = 0; x <= m; ++x) v[x] = x;
    return v;
  };
  if (dir == 1) {
    jp = is_face ? j - 1 : j + 1;
    alpha.resize(jp + 1);
    for (int x = 0; x <= jp; ++x) alpha[x] = is_face ? (x < s ? x : x + 1) : (x <= s ? x : x - 1);
    beta = idvec(k);
  } else {
    kp = is_face ? k - 1 : k + 1;
    beta.resize(kp + 1);
    for (int x = 0; x <= kp; ++x) beta[x] = is_face ? (x < s ? x : x + 1) : (x <= s ? x : x - 1);
    alpha = idvec(j);
  }
  CatFunctor op = product_functor(ords_[jp], chas_[kp], ords_[j], chas_[k],
                                  ordinal_functor(alpha, jp, j), chaotic_functor(beta, kp, k));
  const auto& from = homfuns(j, k, a, b);
  const auto& to = homfuns(jp, kp, a, b);
  std::vector<int> map(from.size());
  for (size_t x = 0; x < from.size(); ++x) {
    CatFunctor img = compose_functors(op, from[x]);
    auto lo = std::lower_bound(to.begin(), to.end(), img);
    if (lo == to.end() || !(*lo == img)) throw std::logic_error("PrecatNerve: restricted functor missing");
    map[x] = static_cast<int>(lo - to.begin());
  }
  return restrict_.emplace(key, std::move(map)).first->second;
}

const std::vector<int>& PrecatNerve::comp_table(int j, int k, int a, int b, int c) const {
  const int n = d_->objects();
  auto key = std::tuple{skey(j, k), a * n + b, c};
  auto it = comptab_.find(key);
  if (it != comptab_.end()) return it->second;
  const auto& f1s = homfuns(j, k, a, b);
  const auto& f2s = homfuns(j, k, b, c);
  const auto& tos = homfuns(j, k, a, c);
  const FinCategory& dom = shape(j, k);
  std::vector<int> table(f1s.size() * f2s.size());
  for (size_t x = 0; x < f1s.size(); ++x)
    for (size_t y = 0; y < f2s.size(); ++y) {
      CatFunctor comp;
      comp.obj.resize(dom.objects());
      for (int o = 0; o < dom.objects(); ++o)
        comp.obj[o] = d_->one_local(
            d_->compose1(d_->one_cell_id(a, b, f1s[x].obj[o]), d_->one_cell_id(b, c, f2s[y].obj[o])));
      comp.mor.resize(dom.morphisms());
      for (int m = 0; m < dom.morphisms(); ++m)
        comp.mor[m] = d_->two_local(
            d_->hcomp(d_->two_cell_id(a, b, f1s[x].mor[m]), d_->two_cell_id(b, c, f2s[y].mor[m])));
      auto lo = std::lower_bound(tos.begin(), tos.end(), comp);
      if (lo == tos.end() || !(*lo == comp)) throw std::logic_error("PrecatNerve: composite functor missing");
      table[x * f2s.size() + y] = static_cast<int>(lo - tos.begin());
    }
  return comptab_.emplace(key, std::move(table)).first->second;
}

int PrecatNerve::const_id_index(int j, int k, int a) const {
  auto key = std::pair{skey(j, k), a};
  auto it = constid_.find(key);
  if (it != constid_.end()) return it->second;
  const FinCategory& dom = shape(j, k);
  CatFunctor cid;
  cid.obj.assign(dom.objects(), d_->one_local(d_->id1(a)));
  cid.mor.assign(dom.morphisms(), d_->two_local(d_->id2(d_->id1(a))));
  const auto& funs = homfuns(j, k, a, a);
  auto lo = std::lower_bound(funs.begin(), funs.end(), cid);
  if (lo == funs.end() || !(*lo == cid)) throw std::logic_error("PrecatNerve: identity functor missing");
  return constid_.emplace(key, static_cast<int>(lo - funs.begin())).first->second;
}

int PrecatNerve::face(int dir, int s, int i, int j, int k, int x) const {
  const Elem& e = level(i, j, k)[x];
  if (dir == 0) {
    Elem r;
    if (s == 0) {
      r.objs.assign(e.objs.begin() + 1, e.objs.end());
      r.fns.assign(e.fns.begin() + 1, e.fns.end());
    } else if (s == i) {
      r.objs.assign(e.objs.begin(), e.objs.end() - 1);
      r.fns.assign(e.fns.begin(), e.fns.end() - 1);
    } else {
      int a = e.objs[s - 1], b = e.objs[s], c = e.objs[s + 1];
      const auto& table = comp_table(j, k, a, b, c);
      r.objs = e.objs;
      r.objs.erase(r.objs.begin() + s);
      r.fns = e.fns;
      r.fns.erase(r.fns.begin() + s);
      r.fns[s - 1] = table[static_cast<size_t>(e.fns[s - 1]) * homfuns(j, k, b, c).size() + e.fns[s]];
    }
    return index_of(i - 1, j, k, r);
  }
  int jp = dir == 1 ? j - 1 : j, kp = dir == 2 ? k - 1 : k;
  Elem r;
  r.objs = e.objs;
  r.fns.resize(e.fns.size());
  for (size_t t = 0; t < e.fns.size(); ++t)
    r.fns[t] = restriction(dir, s, true, j, k, e.objs[t], e.objs[t + 1])[e.fns[t]];
  return index_of(i, jp, kp, r);
}

int PrecatNerve::degen(int dir, int s, int i, int j, int k, int x) const {
  const Elem& e = level(i, j, k)[x];
  if (dir == 0) {
    Elem r;
    r.objs = e.objs;
    r.objs.insert(r.objs.begin() + s, e.objs[s]);
    r.fns = e.fns;
    r.fns.insert(r.fns.begin() + s, const_id_index(j, k, e.objs[s]));
    return index_of(i + 1, j, k, r);
  }
  int jp = dir == 1 ? j + 1 : j, kp = dir == 2 ? k + 1 : k;
  Elem r;
  r.objs = e.objs;
  r.fns.resize(e.fns.size());
  for (size_t t = 0; t < e.fns.size(); ++t)
    r.fns[t] = restriction(dir, s, false, j, k, e.objs[t], e.objs[t + 1])[e.fns[t]];
  return index_of(i, jp, kp, r);
}

bool PrecatNerve::check_segal(int i, int j, int k, std::string* detail) const {
  // literal iterated fiber product of level-1 sets over level-0 sets
  std::vector<Elem> fiber;
  const auto& ones = level(1, j, k);
  std::function<void(Elem&, int)> go = [&](Elem& acc, int s) {
    if (s == i) {
      fiber.push_back(acc);
      return;
    }
    for (const Elem& c : ones) {
      if (c.objs[0] != acc.objs.back()) continue;
      acc.objs.push_back(c.objs[1]);
      acc.fns.push_back(c.fns[0]);
      go(acc, s + 1);
      acc.objs.pop_back();
      acc.fns.pop_back();
    }
  };
  if (i == 0) {
    bool ok = size(0, j, k) == d_->objects();
    if (!ok && detail) *detail = "level (0,j,k) is not the object set";
    return ok;
  }
  for (int d0 = 0; d0 < d_->objects(); ++d0) {
    Elem acc;
    acc.objs = {d0};
    go(acc, 0);
  }
  std::sort(fiber.begin(), fiber.end());
  bool ok = fiber == level(i, j, k);
  if (!ok && detail)
    *detail = "Segal set equality fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + ")";
  return ok;
}

std::vector<std::string> check_precat_identities(const PrecatNerve& n, int i_max, int j_max, int k_max) {
  std::vector<std::string> bad;
  auto note = [&](int i, int j, int k, int x, const std::string& s) {
    bad.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ") elem " +
                  std::to_string(x) + ": " + s);
  };
  auto dims = [&](int dir, int i, int j, int k) { return dir == 0 ? i : dir == 1 ? j : k; };
  auto face_to = [&](int dir, int i, int j, int k) {
    int ii = i - (dir == 0), jj = j - (dir == 1), kk = k - (dir == 2);
    return std::tuple{ii, jj, kk};
  };
  for (int i = 0; i <= i_max; ++i)
    for (int j = 0; j <= j_max; ++j)
      for (int k = 0; k <= k_max; ++k)
        for (int x = 0; x < n.size(i, j, k); ++x) {
          // dd within each direction
          for (int dir = 0; dir < 3; ++dir) {
            int m = dims(dir, i, j, k);
            if (m < 2) continue;
            auto [i1, j1, k1] = face_to(dir, i, j, k);
            auto [i2, j2, k2] = face_to(dir, i1, j1, k1);
            for (int t = 1; t <= m; ++t)
              for (int s = 0; s < t; ++s) {
                int lhs = n.face(dir, s, i1, j1, k1, n.face(dir, t, i, j, k, x));
                int rhs = n.face(dir, t - 1, i1, j1, k1, n.face(dir, s, i, j, k, x));
                if (lhs != rhs) note(i, j, k, x, "dd dir=" + std::to_string(dir));
                (void)i2;
                (void)j2;
                (void)k2;
              }
          }
          // cross-direction commutation of faces
          for (int d1 = 0; d1 < 3; ++d1)
            for (int d2 = d1 + 1; d2 < 3; ++d2) {
              if (dims(d1, i, j, k) < 1 || dims(d2, i, j, k) < 1) continue;
              auto [i1, j1, k1] = face_to(d1, i, j, k);
              auto [i2, j2, k2] = face_to(d2, i, j, k);
              for (int s = 0; s <= dims(d1, i, j, k); ++s)
                for (int t = 0; t <= dims(d2, i, j, k); ++t) {
                  int lhs = n.face(d2, t, i1, j1, k1, n.face(d1, s, i, j, k, x));
                  int rhs = n.face(d1, s, i2, j2, k2, n.face(d2, t, i, j, k, x));
                  if (lhs != rhs)
                    note(i, j, k, x, "cross dd " + std::to_string(d1) + "/" + std::to_string(d2));
                }
            }
          // ds identities within each direction
          for (int dir = 0; dir < 3; ++dir) {
            int m = dims(dir, i, j, k);
            int lim = dir == 0 ? i_max : dir == 1 ? j_max : k_max;
            if (m + 1 > lim) continue;
            int iu = i + (dir == 0), ju = j + (dir == 1), ku = k + (dir == 2);
            for (int s = 0; s <= m; ++s) {
              int up = n.degen(dir, s, i, j, k, x);
              for (int t = 0; t <= m + 1; ++t) {
                int got = n.face(dir, t, iu, ju, ku, up);
                if (t == s || t == s + 1) {
                  if (got != x) note(i, j, k, x, "ds != id dir=" + std::to_string(dir));
                } else if (m >= 1) {
                  int want = t < s ? n.degen(dir, s - 1, /*level of face*/ i - (dir == 0), j - (dir == 1),
                                             k - (dir == 2), n.face(dir, t, i, j, k, x))
                                   : n.degen(dir, s, i - (dir == 0), j - (dir == 1), k - (dir == 2),
                                             n.face(dir, t - 1, i, j, k, x));
                  if (got != want) note(i, j, k, x, "ds general dir=" + std::to_string(dir));
                }
              }
            }
          }
        }
  return bad;
}

PrecatMapsReport check_precat_maps(const Fin2Category& a, const Fin2Category& b) {
  PrecatMapsReport r;
  const int I = 2, J = 1, K = 1;
  PrecatNerve na(a, I, J, K), nb(b, I, J, K);

  auto build = [&](const PrecatNerve& n) {
    TruncPresheaf ps;
    std::vector<std::tuple<int, int, int>> keys;
    for (int total = 0; total <= I + J + K; ++total)
      for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j)
          for (int k = 0; k <= K; ++k)
            if (i + j + k == total) keys.push_back({i, j, k});
    auto key_of = [&](int i, int j, int k) {
      for (size_t t = 0; t < keys.size(); ++t)
        if (keys[t] == std::tuple{i, j, k}) return static_cast<int>(t);
      return -1;
    };
    ps.sizes.resize(keys.size());
    for (size_t t = 0; t < keys.size(); ++t) {
      auto [i, j, k] = keys[t];
      ps.sizes[t] = n.size(i, j, k);
      ps.level_names.push_back(std::to_string(i) + std::to_string(j) + std::to_string(k));
      ps.order.push_back(static_cast<int>(t));
    }
    for (size_t t = 0; t < keys.size(); ++t) {
      auto [i, j, k] = keys[t];
      for (int dir = 0; dir < 3; ++dir) {
        int m = dir == 0 ? i : dir == 1 ? j : k;
        int lim = dir == 0 ? I : dir == 1 ? J : K;
        if (m >= 1)
          for (int s = 0; s <= m; ++s) {
            TruncPresheaf::Gen g;
            g.from = static_cast<int>(t);
            g.to = key_of(i - (dir == 0), j - (dir == 1), k - (dir == 2));
            g.is_face = true;
            g.map.resize(ps.sizes[t]);
            for (int x = 0; x < ps.sizes[t]; ++x) g.map[x] = n.face(dir, s, i, j, k, x);
            ps.gens.push_back(std::move(g));
          }
        if (m + 1 <= lim)
          for (int s = 0; s <= m; ++s) {
            TruncPresheaf::Gen g;
            g.from = static_cast<int>(t);
            g.to = key_of(i + (dir == 0), j + (dir == 1), k + (dir == 2));
            g.is_face = false;
            g.map.resize(ps.sizes[t]);
            for (int x = 0; x < ps.sizes[t]; ++x) g.map[x] = n.degen(dir, s, i, j, k, x);
            ps.gens.push_back(std::move(g));
          }
      }
    }
    return std::pair{ps, keys};
  };
  auto [psa, keys] = build(na);
  auto [psb, keys2] = build(nb);
  (void)keys2;

  auto families = enumerate_natural_maps(psa, psb);
  auto functors = enumerate_two_functors(a, b);
  r.n_maps = static_cast<long long>(families.size());
  r.n_functors = static_cast<long long>(functors.size());
  if (r.n_maps != r.n_functors) {
    r.pass = false;
    r.detail = "|natural maps| != |strict 2-functors|";
    return r;
  }
  // each strict functor induces a natural family; check the two sets agree
  std::vector<std::vector<std::vector<int>>> induced;
  for (const TwoFunctor& f : functors) {
    std::vector<std::vector<int>> fam(keys.size());
    for (size_t t = 0; t < keys.size(); ++t) {
      auto [i, j, k] = keys[t];
      fam[t].resize(na.size(i, j, k));
      for (int x = 0; x < na.size(i, j, k); ++x) {
        const auto& e = na.level(i, j, k)[x];
        PrecatNerve::Elem img;
        img.objs.resize(e.objs.size());
        for (size_t s = 0; s < e.objs.size(); ++s) img.objs[s] = f.obj[e.objs[s]];
        img.fns.resize(e.fns.size());
        for (size_t s = 0; s < e.fns.size(); ++s) {
          int p = e.objs[s], q = e.objs[s + 1];
          const CatFunctor& g = na.homfuns(j, k, p, q)[e.fns[s]];
          CatFunctor h;
          h.obj.resize(g.obj.size());
          for (size_t o = 0; o < g.obj.size(); ++o)
            h.obj[o] = b.one_local(f.one[a.one_cell_id(p, q, g.obj[o])]);
          h.mor.resize(g.mor.size());
          for (size_t m = 0; m < g.mor.size(); ++m)
            h.mor[m] = b.two_local(f.two[a.two_cell_id(p, q, g.mor[m])]);
          const auto& funs = nb.homfuns(j, k, f.obj[p], f.obj[q]);
          auto it = std::lower_bound(funs.begin(), funs.end(), h);
          if (it == funs.end() || !(*it == h)) {
            r.pass = false;
            r.detail = "functor image escapes the level";
            return r;
          }
          img.fns[s] = static_cast<int>(it - funs.begin());
        }
        fam[t][x] = nb.index_of(i, j, k, img);
      }
    }
    induced.push_back(std::move(fam));
  }
  std::sort(induced.begin(), induced.end());
  std::vector<std::vector<std::vector<int>>> fams = families;
  std::sort(fams.begin(), fams.end());
  if (induced != fams) {
    r.pass = false;
    r.detail = "natural maps do not coincide with strict 2-functors";
  }
  return r;
}

}  // namespace twocat
