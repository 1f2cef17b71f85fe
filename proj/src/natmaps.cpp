#include "twocat/natmaps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace twocat {

bool is_natural_map(const TruncPresheaf& a, const TruncPresheaf& b,
                    const std::vector<std::vector<int>>& f) {
  for (size_t g = 0; g < a.gens.size(); ++g) {
    const auto& ga = a.gens[g];
    const auto& gb = b.gens[g];
    for (int x = 0; x < a.sizes[ga.from]; ++x)
      if (gb.map[f[ga.from][x]] != f[ga.to][ga.map[x]]) return false;
  }
  return true;
}

std::vector<std::vector<std::vector<int>>> enumerate_natural_maps(const TruncPresheaf& a,
                                                                  const TruncPresheaf& b) {
  if (a.sizes.size() != b.sizes.size() || a.gens.size() != b.gens.size())
    throw std::invalid_argument("enumerate_natural_maps: shape mismatch");
  const int nl = static_cast<int>(a.sizes.size());
  std::vector<std::vector<std::vector<int>>> out;

  // per level: position in the processing order
  std::vector<int> pos(nl, -1);
  for (size_t i = 0; i < a.order.size(); ++i) pos[a.order[i]] = static_cast<int>(i);

  // reverse buckets for B faces: per generator, per target value, sources
  std::vector<std::map<int, std::vector<int>>> b_fibers(b.gens.size());
  for (size_t g = 0; g < b.gens.size(); ++g)
    for (int x = 0; x < b.sizes[b.gens[g].from]; ++x) b_fibers[g][b.gens[g].map[x]].push_back(x);

  std::vector<std::vector<int>> f(nl);
  for (int l = 0; l < nl; ++l) f[l].assign(a.sizes[l], -1);

  // generators into a level, and out of a level, by index
  std::vector<std::vector<int>> gens_into(nl), gens_from(nl);
  for (size_t g = 0; g < a.gens.size(); ++g) {
    gens_into[a.gens[g].to].push_back(static_cast<int>(g));
    gens_from[a.gens[g].from].push_back(static_cast<int>(g));
  }

  std::function<void(int)> go_level = [&](int li) {
    if (li == nl) {
      if (is_natural_map(a, b, f)) out.push_back(f);
      return;
    }
    const int level = a.order[li];
    // forced values from degeneracies out of earlier levels
    std::vector<int> forced(a.sizes[level], -1);
    bool consistent = true;
    for (int g : gens_into[level]) {
      const auto& ga = a.gens[g];
      if (ga.is_face) continue;
      if (pos[ga.from] >= li) continue;
      for (int x = 0; x < a.sizes[ga.from]; ++x) {
        int y = ga.map[x];
        int v = b.gens[g].map[f[ga.from][x]];
        if (forced[y] < 0)
          forced[y] = v;
        else if (forced[y] != v)
          consistent = false;
      }
    }
    if (!consistent) return;

    // assign elements left to right; candidates must satisfy every face
    // generator into an earlier level
    std::function<void(int)> go_elem = [&](int x) {
      if (x == a.sizes[level]) {
        go_level(li + 1);
        return;
      }
      if (forced[x] >= 0) {
        // still must satisfy the face constraints
        bool ok = true;
        for (int g : gens_from[level]) {
          const auto& ga = a.gens[g];
          if (!ga.is_face || pos[ga.to] >= li) continue;
          if (b.gens[g].map[forced[x]] != f[ga.to][ga.map[x]]) ok = false;
        }
        if (!ok) return;
        f[level][x] = forced[x];
        go_elem(x + 1);
        f[level][x] = -1;
        return;
      }
      // intersect fibers over all applicable face generators
      std::vector<int> cand;
      bool first = true;
      for (int g : gens_from[level]) {
        const auto& ga = a.gens[g];
        if (!ga.is_face || pos[ga.to] >= li) continue;
        int want = f[ga.to][ga.map[x]];
        auto it = b_fibers[g].find(want);
        std::vector<int> here = it == b_fibers[g].end() ? std::vector<int>{} : it->second;
        if (first) {
          cand = here;
          first = false;
        } else {
          std::vector<int> merged;
          std::set_intersection(cand.begin(), cand.end(), here.begin(), here.end(), std::back_inserter(merged));
          cand = merged;
        }
        if (cand.empty()) return;
      }
      if (first) {
        cand.resize(b.sizes[level]);
        for (int v = 0; v < b.sizes[level]; ++v) cand[v] = v;
      }
      for (int v : cand) {
        f[level][x] = v;
        go_elem(x + 1);
      }
      f[level][x] = -1;
    };
    go_elem(0);
  };
  go_level(0);
  return out;
}

}  // namespace twocat
