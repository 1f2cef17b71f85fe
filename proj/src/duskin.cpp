#include "twocat/duskin.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace twocat {

DuskinLevels::DuskinLevels(const Fin2Category& d, int max_dim) : d_(&d), max_dim_(max_dim) {
  built_.assign(max_dim_ + 1, 0);
  sizes_.assign(max_dim_ + 1, 0);
  high_.resize(std::max(0, max_dim_ - 2));
  high_index_.resize(std::max(0, max_dim_ - 2));
}

int DuskinLevels::size(int n) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  ensure(n);
  return sizes_[n];
}

void DuskinLevels::ensure(int n) {
  if (n < 0 || n > max_dim_) throw std::out_of_range("DuskinLevels: level beyond truncation");
  for (int k = 0; k <= n; ++k) {
    if (built_[k]) continue;
    if (k == 0) {
      sizes_[0] = d_->objects();
    } else if (k == 1) {
      sizes_[1] = d_->one_cells();
    } else if (k == 2) {
      level2_.clear();
      level2_index_.clear();
      for (int a = 0; a < d_->one_cells(); ++a)
        for (int bl = 0; bl < d_->one_cells(); ++bl) {
          if (d_->one_tgt(a) != d_->one_src(bl)) continue;
          int ba = d_->compose1(a, bl);
          int p = d_->one_src(a), r = d_->one_tgt(bl);
          const FinCategory& h = d_->hom(p, r);
          for (int ml = 0; ml < h.morphisms(); ++ml) {
            if (h.tgt(ml) != d_->one_local(ba)) continue;
            int phi = d_->two_cell_id(p, r, ml);
            level2_index_[{a, bl, phi}] = static_cast<int>(level2_.size());
            level2_.push_back({a, bl, phi});
          }
        }
      sizes_[2] = static_cast<int>(level2_.size());
    } else if (k == 3) {
      auto& elems = high_[0];
      elems.clear();
      high_index_[0].clear();
      // bucket 2-simplices by faces
      std::map<int, std::vector<int>> by_d2;
      std::map<std::pair<int, int>, std::vector<int>> by_d2_d0;
      std::map<std::tuple<int, int, int>, std::vector<int>> by_all;
      for (int z = 0; z < sizes_[2]; ++z) {
        int f0 = face(2, 0, z), f1 = face(2, 1, z), f2 = face(2, 2, z);
        by_d2[f2].push_back(z);
        by_d2_d0[{f2, f0}].push_back(z);
        by_all[{f2, f1, f0}].push_back(z);
      }
      for (int x3 = 0; x3 < sizes_[2]; ++x3) {
        const Two& s3 = level2_[x3];
        int a = s3.a, b = s3.b, c = d_->two_src1(s3.phi);
        for (int x0 : by_d2[b]) {
          const Two& s0 = level2_[x0];
          int dd = s0.b, e = d_->two_src1(s0.phi);
          for (int x2 : by_d2_d0[{a, e}]) {
            const Two& s2 = level2_[x2];
            int f = d_->two_src1(s2.phi);
            auto it = by_all.find({c, f, dd});
            if (it == by_all.end()) continue;
            for (int x1 : it->second) {
              const Two& s1 = level2_[x1];
              // pasting equality: (1_d ⋆ phi3) ∘ phi1 = (phi0 ⋆ 1_a) ∘ phi2
              int lhs = d_->vcomp(s1.phi, d_->hcomp(s3.phi, d_->id2(dd)));
              int rhs = d_->vcomp(s2.phi, d_->hcomp(d_->id2(a), s0.phi));
              if (lhs != rhs) continue;
              elems.push_back({x0, x1, x2, x3});
            }
          }
        }
      }
      std::sort(elems.begin(), elems.end());
      for (size_t i = 0; i < elems.size(); ++i) high_index_[0][elems[i]] = static_cast<int>(i);
      sizes_[3] = static_cast<int>(elems.size());
    } else {
      // coskeletal: compatible boundary tuples of level k-1 elements
      const int below = sizes_[k - 1];
      auto& elems = high_[k - 3];
      elems.clear();
      high_index_[k - 3].clear();
      // prefix index of level k-1 elements by initial face segments
      std::vector<std::map<std::vector<int>, std::vector<int>>> prefix(k + 1);
      for (int x = 0; x < below; ++x) {
        std::vector<int> faces(k);
        for (int i = 0; i < k; ++i) faces[i] = face(k - 1, i, x);
        for (int len = 0; len <= k; ++len)
          prefix[len][std::vector<int>(faces.begin(), faces.begin() + len)].push_back(x);
      }
      std::vector<int> cur(k + 1, -1);
      std::function<void(int)> go = [&](int j) {
        if (j == k + 1) {
          elems.push_back(cur);
          return;
        }
        std::vector<int> key(j);
        for (int i = 0; i < j; ++i) key[i] = face(k - 1, j - 1, cur[i]);
        auto it = prefix[j].find(key);
        if (it == prefix[j].end()) return;
        for (int x : it->second) {
          cur[j] = x;
          go(j + 1);
        }
        cur[j] = -1;
      };
      go(0);
      std::sort(elems.begin(), elems.end());
      for (size_t i = 0; i < elems.size(); ++i) high_index_[k - 3][elems[i]] = static_cast<int>(i);
      sizes_[k] = static_cast<int>(elems.size());
    }
    built_[k] = 1;
  }
}

int DuskinLevels::face(int n, int i, int x) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  ensure(n);
  if (n == 1) return i == 0 ? d_->one_tgt(x) : d_->one_src(x);
  if (n == 2) {
    const Two& z = level2_[x];
    if (i == 0) return z.b;
    if (i == 1) return d_->two_src1(z.phi);
    return z.a;
  }
  if (n >= 3) return high_[n - 3][x][i];
  throw std::invalid_argument("face: no faces at level 0");
}

int DuskinLevels::find_two(int a, int b, int phi) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  ensure(2);
  auto it = level2_index_.find({a, b, phi});
  if (it == level2_index_.end()) return -1;
  return it->second;
}

const std::vector<int>& DuskinLevels::boundary(int n, int x) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  ensure(n);
  if (n < 3) throw std::invalid_argument("boundary: n >= 3");
  return high_[n - 3][x];
}

int DuskinLevels::degen(int n, int i, int x) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  ensure(n + 1);
  if (n == 0) return d_->id1(x);
  if (n == 1) {
    if (i == 0) return find_two(d_->id1(d_->one_src(x)), x, d_->id2(x));
    return find_two(x, d_->id1(d_->one_tgt(x)), d_->id2(x));
  }
  // assemble the face tuple of s_i x via the simplicial identities
  std::vector<int> faces(n + 2);
  for (int j = 0; j <= n + 1; ++j) {
    if (j == i || j == i + 1) {
      faces[j] = x;
    } else if (j < i) {
      faces[j] = degen(n - 1, i - 1, face(n, j, x));
    } else {
      faces[j] = degen(n - 1, i, face(n, j - 1, x));
    }
  }
  auto it = high_index_[n + 1 - 3].find(faces);
  if (it == high_index_[n + 1 - 3].end()) throw std::logic_error("degen: tuple not found");
  return it->second;
}

bool DuskinLevels::is_degenerate(int n, int x) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (n == 0) return false;
  if (n == 1) return d_->is_id1(x);
  if (static_cast<int>(degenerate_.size()) <= n) degenerate_.resize(n + 1);
  if (degenerate_[n].empty()) {
    degenerate_[n].assign(size(n), 0);
    for (int i = 0; i < n; ++i)
      for (int y = 0; y < size(n - 1); ++y) degenerate_[n][degen(n - 1, i, y)] = 1;
  }
  return degenerate_[n][x] != 0;
}

TdeltaNerve::TdeltaNerve(const Fin2Category& d, int max_dim, unsigned rule_mask)
    : levels_(std::make_shared<DuskinLevels>(d, max_dim)), mask_(rule_mask) {
  completions_.resize(d.one_cells());
  for (int f = 0; f < d.one_cells(); ++f) completions_[f] = adjoint_completions(d, f);
}

int TdeltaNerve::marking(int n, int x) {
  const Fin2Category& d = levels_->category();
  if (n <= 0) return 0;
  if (n == 1) {
    if (mask_ & kRule1) return static_cast<int>(completions_[x].size());
    return d.is_id1(x) ? 1 : 0;
  }
  if (n == 2) {
    if (mask_ & kRule2) return d.two_invertible(levels_->two(x).phi) ? 1 : 0;
    return levels_->is_degenerate(2, x) ? 1 : 0;
  }
  if (mask_ & kRuleHigh) return 1;
  return levels_->is_degenerate(n, x) ? 1 : 0;
}

ScaledNerve::ScaledNerve(const Fin2Category& d, int max_dim)
    : levels_(std::make_shared<DuskinLevels>(d, max_dim)) {}

int ScaledNerve::marking(int n, int x) {
  if (n != 2) return 0;
  return levels_->category().two_invertible(levels_->two(x).phi) ? 1 : 0;
}

bool check_within_simplicial(const Fin2Category& d, int n_max, std::string* detail) {
  TdeltaNerve td(d, n_max);
  ScaledNerve sc(d, n_max);
  ReflectedProvider refl(td);
  for (int n = 0; n <= n_max; ++n) {
    if (td.size(n) != sc.size(n)) {
      if (detail) *detail = "level " + std::to_string(n) + " size mismatch";
      return false;
    }
    if (n != 2) continue;
    for (int x = 0; x < sc.size(2); ++x) {
      int lhs = sc.marking(2, x);
      int rhs = refl.marking(2, x);
      if (lhs != rhs) {
        if (detail) *detail = "marking mismatch at 2-simplex " + std::to_string(x);
        return false;
      }
    }
  }
  return true;
}

std::vector<std::string> check_simplicial_identities(LevelProvider& x, int n_max) {
  std::vector<std::string> bad;
  auto note = [&](int n, int e, const std::string& s) {
    bad.push_back("level " + std::to_string(n) + " elem " + std::to_string(e) + ": " + s);
  };
  for (int n = 0; n <= n_max; ++n) {
    for (int e = 0; e < x.size(n); ++e) {
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (x.face(n - 1, i, x.face(n, j, e)) != x.face(n - 1, j - 1, x.face(n, i, e)))
              note(n, e, "d" + std::to_string(i) + " d" + std::to_string(j));
      if (n + 1 <= n_max) {
        for (int j = 0; j <= n; ++j) {
          int se = x.degen(n, j, e);
          for (int i = 0; i <= n + 1; ++i) {
            int got = x.face(n + 1, i, se);
            int want;
            if (i == j || i == j + 1)
              want = e;
            else if (i < j)
              want = n >= 1 ? x.degen(n - 1, j - 1, x.face(n, i, e)) : -2;
            else
              want = n >= 1 ? x.degen(n - 1, j, x.face(n, i - 1, e)) : -2;
            if (want != -2 && got != want)
              note(n, e, "d" + std::to_string(i) + " s" + std::to_string(j));
          }
        }
      }
      if (n + 2 <= n_max)
        for (int i = 0; i <= n; ++i)
          for (int j = i; j <= n; ++j)
            if (x.degen(n + 1, j + 1, x.degen(n, i, e)) != x.degen(n + 1, i, x.degen(n, j, e)))
              note(n, e, "s" + std::to_string(i) + " s" + std::to_string(j));
    }
  }
  return bad;
}

}  // namespace twocat
