#include "twocat/complicial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace twocat {

int MarkedComplex::add(int dim, std::vector<FaceRef> faces, bool marked, std::string label) {
  Cell c;
  c.dim = dim;
  c.faces = std::move(faces);
  c.marked = marked && dim > 0;
  c.label = std::move(label);
  if (static_cast<int>(by_dim.size()) <= dim) by_dim.resize(dim + 1);
  by_dim[dim].push_back(static_cast<int>(cells.size()));
  cells.push_back(std::move(c));
  return static_cast<int>(cells.size()) - 1;
}

std::vector<std::string> MarkedComplex::validate() const {
  std::vector<std::string> bad;
  for (size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.dim > 0 && static_cast<int>(c.faces.size()) != c.dim + 1)
      bad.push_back("cell " + c.label + ": face count");
    for (const auto& f : c.faces) {
      if (f.base < 0 || f.base >= static_cast<int>(cells.size())) {
        bad.push_back("cell " + c.label + ": face base out of range");
        continue;
      }
      const Cell& b = cells[f.base];
      if (static_cast<int>(f.surj.size()) != c.dim) bad.push_back("cell " + c.label + ": surjection arity");
      if (!f.surj.empty()) {
        int top = *std::max_element(f.surj.begin(), f.surj.end());
        if (top != b.dim) bad.push_back("cell " + c.label + ": surjection not onto the base");
        for (size_t k = 0; k + 1 < f.surj.size(); ++k)
          if (f.surj[k] > f.surj[k + 1] || f.surj[k + 1] > f.surj[k] + 1)
            bad.push_back("cell " + c.label + ": not a monotone surjection");
      }
    }
  }
  return bad;
}

std::vector<std::string> GeneratorMap::validate() const {
  std::vector<std::string> bad;
  auto sub = domain.validate();
  bad.insert(bad.end(), sub.begin(), sub.end());
  sub = codomain.validate();
  bad.insert(bad.end(), sub.begin(), sub.end());
  if (inject.size() != domain.cells.size()) bad.push_back("injection arity");
  std::vector<int> seen;
  for (size_t i = 0; i < inject.size(); ++i) {
    int v = inject[i];
    if (v < 0 || v >= static_cast<int>(codomain.cells.size())) {
      bad.push_back("injection out of range");
      continue;
    }
    if (codomain.cells[v].dim != domain.cells[i].dim) bad.push_back("injection changes dimension");
    if (domain.cells[i].marked && !codomain.cells[v].marked) bad.push_back("injection drops a marking");
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) bad.push_back("injection not injective");
  return bad;
}

namespace {

std::string subset_label(const std::vector<int>& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

std::vector<int> identity_surj(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Complexes whose nondegenerate simplices are vertex subsets of [m],
// optionally with the edge {0,1} collapsed to a point.
struct SubsetComplex {
  bool collapse01 = false;
  std::map<std::vector<int>, int> index;

  bool allowed(const std::vector<int>& s) const {
    if (!collapse01) return true;
    if (s.size() == 1 && s[0] == 1) return false;  // class representative is {0}
    if (s.size() == 2 && s[0] == 0 && s[1] == 1) return false;
    return true;
  }

  MarkedComplex build(int m, const std::vector<std::vector<int>>& subsets,
                      const std::function<bool(const std::vector<int>&)>& marked) {
    (void)m;
    MarkedComplex k;
    std::vector<std::vector<int>> sorted = subsets;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (const auto& s : sorted) {
      if (!allowed(s)) continue;
      int dim = static_cast<int>(s.size()) - 1;
      std::vector<MarkedComplex::FaceRef> faces;
      if (dim >= 1) {
        for (int i = 0; i <= dim; ++i) {
          std::vector<int> r = s;
          r.erase(r.begin() + i);
          bool in01 = collapse01;
          for (int v : r)
            if (v > 1) in01 = false;
          if (in01) {
            // collapsed face: a degeneracy of the class vertex
            int base = index.at({0});
            if (r.size() == 1) {
              faces.push_back({identity_surj(dim), base});
            } else {  // r == {0,1}
              std::vector<int> surj(dim, 0);
              faces.push_back({surj, base});
            }
          } else {
            if (collapse01 && r.size() == 1 && r[0] == 1) r = {0};
            faces.push_back({identity_surj(dim), index.at(r)});
          }
        }
      }
      index[s] = k.add(dim, std::move(faces), marked(s), subset_label(s));
    }
    return k;
  }
};

std::vector<std::vector<int>> all_subsets(int m) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
    std::vector<int> s;
    for (int v = 0; v <= m; ++v)
      if (mask & (1 << v)) s.push_back(v);
    out.push_back(s);
  }
  return out;
}

std::vector<std::vector<int>> horn_subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& s : all_subsets(m)) {
    if (static_cast<int>(s.size()) == m + 1) continue;
    if (static_cast<int>(s.size()) == m) {
      int sum = 0;
      for (int v : s) sum += v;
      if ((m + 1) * m / 2 - sum == k) continue;  // the face opposite k stays out
    }
    out.push_back(s);
  }
  return out;
}

bool contains(const std::vector<int>& s, const std::vector<int>& need) {
  for (int v : need)
    if (!std::binary_search(s.begin(), s.end(), v)) return false;
  return true;
}

// marking rule of Delta^k[m]: marked iff the subset contains {k-1,k,k+1} ∩ [m]
std::function<bool(const std::vector<int>&)> complicial_marking(int m, int k) {
  std::vector<int> need;
  for (int v : {k - 1, k, k + 1})
    if (v >= 0 && v <= m) need.push_back(v);
  return [need](const std::vector<int>& s) { return contains(s, need); };
}

}  // namespace

MarkedComplex standard_simplex(int m) {
  if (m < 0) return {};
  SubsetComplex b;
  return b.build(m, all_subsets(m), [](const auto&) { return false; });
}

MarkedComplex delta3_eq() {
  SubsetComplex b;
  return b.build(3, all_subsets(3), [](const std::vector<int>& s) {
    if (s.size() >= 3) return true;
    return s == std::vector<int>{0, 2} || s == std::vector<int>{1, 3};
  });
}

MarkedComplex delta3_sharp() {
  SubsetComplex b;
  return b.build(3, all_subsets(3), [](const std::vector<int>& s) { return s.size() >= 2; });
}

MarkedComplex marked_join(const MarkedComplex& x, const MarkedComplex& y) {
  if (y.cells.empty()) return x;
  if (x.cells.empty()) return y;
  MarkedComplex k;
  const int top_x = x.dim_top(), top_y = y.dim_top();
  // join cell = (sigma or -1, tau or -1), not both -1
  std::map<std::pair<int, int>, int> index;
  struct Part {
    int sx, sy, dim;
  };
  std::vector<Part> parts;
  for (size_t sx = 0; sx < x.cells.size(); ++sx) parts.push_back({static_cast<int>(sx), -1, x.cells[sx].dim});
  for (size_t sy = 0; sy < y.cells.size(); ++sy) parts.push_back({-1, static_cast<int>(sy), y.cells[sy].dim});
  for (size_t sx = 0; sx < x.cells.size(); ++sx)
    for (size_t sy = 0; sy < y.cells.size(); ++sy)
      parts.push_back({static_cast<int>(sx), static_cast<int>(sy), x.cells[sx].dim + y.cells[sy].dim + 1});
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.dim < b.dim; });

  for (const Part& p : parts) {
    const int dx = p.sx >= 0 ? x.cells[p.sx].dim : -1;
    const int dy = p.sy >= 0 ? y.cells[p.sy].dim : -1;
    const int dim = p.dim;
    std::vector<MarkedComplex::FaceRef> faces;
    if (dim >= 1) {
      for (int i = 0; i <= dim; ++i) {
        if (i <= dx) {
          if (dx == 0) {
            // dropping the only x-vertex leaves the y-part
            faces.push_back({identity_surj(dim), index.at({-1, p.sy})});
          } else {
            const auto& fr = x.cells[p.sx].faces[i];
            std::vector<int> surj(dim);
            for (int v = 0; v < dx; ++v) surj[v] = fr.surj[v];
            int bx = x.cells[fr.base].dim;
            for (int v = dx; v < dim; ++v) surj[v] = bx + 1 + (v - dx);
            faces.push_back({std::move(surj), index.at({fr.base, p.sy})});
          }
        } else {
          int iy = i - dx - 1;
          if (dy == 0) {
            faces.push_back({identity_surj(dim), index.at({p.sx, -1})});
          } else {
            const auto& fr = y.cells[p.sy].faces[iy];
            std::vector<int> surj(dim);
            for (int v = 0; v <= dx; ++v) surj[v] = v;
            for (int v = dx + 1; v < dim; ++v) surj[v] = dx + 1 + fr.surj[v - dx - 1];
            faces.push_back({std::move(surj), index.at({p.sx, fr.base})});
          }
        }
      }
    }
    bool marked = (p.sx >= 0 && x.cells[p.sx].marked) || (p.sy >= 0 && y.cells[p.sy].marked);
    (void)top_x;
    (void)top_y;
    std::string label = (p.sx >= 0 ? x.cells[p.sx].label : "()") + "*" + (p.sy >= 0 ? y.cells[p.sy].label : "()");
    index[{p.sx, p.sy}] = k.add(dim, std::move(faces), marked, label);
  }
  return k;
}

GeneratorMap build_generator(GeneratorFamily family, int m, int k) {
  GeneratorMap g;
  auto inject_by_label = [&]() {
    std::map<std::string, int> at;
    for (size_t i = 0; i < g.codomain.cells.size(); ++i) at[g.codomain.cells[i].label] = static_cast<int>(i);
    g.inject.resize(g.domain.cells.size());
    for (size_t i = 0; i < g.domain.cells.size(); ++i) g.inject[i] = at.at(g.domain.cells[i].label);
  };
  switch (family) {
    case GeneratorFamily::ComplicialInnerHorn: {
      if (m <= 1 || k <= 0 || k >= m) throw std::invalid_argument("inner horn: 0 < k < m, m > 1");
      SubsetComplex b1, b2;
      g.domain = b1.build(m, horn_subsets(m, k), complicial_marking(m, k));
      g.codomain = b2.build(m, all_subsets(m), complicial_marking(m, k));
      g.name = "complicial-inner-horn(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
      break;
    }
    case GeneratorFamily::ComplicialThinness: {
      if (m < 2 || k <= 0 || k >= m) throw std::invalid_argument("thinness: 0 < k < m, m >= 2");
      auto base = complicial_marking(m, k);
      auto prime = [m, k, base](const std::vector<int>& s) {
        if (base(s)) return true;
        if (static_cast<int>(s.size()) != m) return false;
        int omitted = (m + 1) * m / 2;
        for (int v : s) omitted -= v;
        return omitted == k - 1 || omitted == k + 1;
      };
      auto doubleprime = [m, k, prime](const std::vector<int>& s) {
        if (prime(s)) return true;
        if (static_cast<int>(s.size()) != m) return false;
        int omitted = (m + 1) * m / 2;
        for (int v : s) omitted -= v;
        return omitted == k;
      };
      SubsetComplex b1, b2;
      g.domain = b1.build(m, all_subsets(m), prime);
      g.codomain = b2.build(m, all_subsets(m), doubleprime);
      g.name = "complicial-thinness(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
      break;
    }
    case GeneratorFamily::Triviality: {
      if (m <= 2) throw std::invalid_argument("triviality: m > 2");
      SubsetComplex b1, b2;
      g.domain = b1.build(m, all_subsets(m), [](const auto&) { return false; });
      g.codomain =
          b2.build(m, all_subsets(m), [m](const std::vector<int>& s) { return static_cast<int>(s.size()) == m + 1; });
      g.name = "triviality(m=" + std::to_string(m) + ")";
      break;
    }
    case GeneratorFamily::ComplicialSaturation: {
      if (m < -1) throw std::invalid_argument("saturation: m >= -1");
      MarkedComplex dm = standard_simplex(m);
      g.domain = marked_join(delta3_eq(), dm);
      g.codomain = marked_join(delta3_sharp(), dm);
      g.name = "complicial-saturation(m=" + std::to_string(m) + ")";
      break;
    }
    case GeneratorFamily::ScaledInnerHorn: {
      if (m < 2 || k <= 0 || k >= m) throw std::invalid_argument("scaled inner horn: 0 < k < m, m >= 2");
      std::vector<int> scaled = {k - 1, k, k + 1};
      auto mk = [scaled](const std::vector<int>& s) { return s == scaled; };
      SubsetComplex b1, b2;
      g.domain = b1.build(m, horn_subsets(m, k), mk);
      g.codomain = b2.build(m, all_subsets(m), mk);
      g.name = "scaled-inner-horn(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
      break;
    }
    case GeneratorFamily::ScaledOuterHorn: {
      if (m < 3) throw std::invalid_argument("scaled outer horn: m >= 3");
      std::vector<int> scaled = {0, 1, m};
      auto mk = [scaled](const std::vector<int>& s) { return s == scaled; };
      SubsetComplex b1, b2;
      b1.collapse01 = b2.collapse01 = true;
      g.domain = b1.build(m, horn_subsets(m, 0), mk);
      g.codomain = b2.build(m, all_subsets(m), mk);
      g.name = "scaled-outer-horn(m=" + std::to_string(m) + ")";
      break;
    }
    case GeneratorFamily::ScaledSaturation: {
      std::vector<std::vector<int>> t = {{0, 2, 4}, {1, 2, 3}, {0, 1, 3}, {1, 3, 4}, {0, 1, 2}};
      std::vector<std::vector<int>> t2 = t;
      t2.push_back({0, 3, 4});
      t2.push_back({0, 1, 4});
      auto in = [](const std::vector<std::vector<int>>& set, const std::vector<int>& s) {
        return std::find(set.begin(), set.end(), s) != set.end();
      };
      SubsetComplex b1, b2;
      g.domain = b1.build(4, all_subsets(4), [&](const std::vector<int>& s) { return in(t, s); });
      g.codomain = b2.build(4, all_subsets(4), [&](const std::vector<int>& s) { return in(t2, s); });
      g.name = "scaled-saturation";
      break;
    }
  }
  inject_by_label();
  auto bad = g.validate();
  if (!bad.empty()) throw std::logic_error("build_generator: " + bad.front());
  return g;
}

namespace {

int apply_surj(LevelProvider& x, const std::vector<int>& surj, int elem) {
  if (surj.empty()) return elem;
  int level = surj.back();  // dimension of the base
  for (size_t j = 0; j + 1 < surj.size(); ++j)
    if (surj[j] == surj[j + 1]) {
      elem = x.degen(level, static_cast<int>(j), elem);
      ++level;
    }
  return elem;
}

struct MapSearch {
  const MarkedComplex& k;
  LevelProvider& x;
  std::vector<int> assign;
  // per level: face tuple -> candidates
  std::map<int, std::map<std::vector<int>, std::vector<int>>> face_index;

  explicit MapSearch(const MarkedComplex& kk, LevelProvider& xx) : k(kk), x(xx) {
    assign.assign(k.cells.size(), -1);
  }

  const std::vector<int>* candidates(int dim, const std::vector<int>& key) {
    auto& idx = face_index[dim];
    if (idx.empty() && x.size(dim) > 0) {
      for (int e = 0; e < x.size(dim); ++e) {
        std::vector<int> faces(dim + 1);
        for (int i = 0; i <= dim; ++i) faces[i] = x.face(dim, i, e);
        idx[faces].push_back(e);
      }
    }
    auto it = idx.find(key);
    return it == idx.end() ? nullptr : &it->second;
  }

  bool expected_faces(int cell, std::vector<int>* out) {
    const auto& c = k.cells[cell];
    out->resize(c.dim + 1);
    for (int i = 0; i <= c.dim; ++i) {
      const auto& fr = c.faces[i];
      if (assign[fr.base] < 0) return false;
      (*out)[i] = apply_surj(x, fr.surj, assign[fr.base]);
    }
    return true;
  }

  // found returns true to stop the search
  template <typename Fn>
  bool search(const std::vector<int>& order, size_t pos, const Fn& found) {
    if (pos == order.size()) return found(assign);
    int cell = order[pos];
    const auto& c = k.cells[cell];
    if (c.dim == 0) {
      for (int e = 0; e < x.size(0); ++e) {
        assign[cell] = e;
        if (search(order, pos + 1, found)) {
          assign[cell] = -1;
          return true;
        }
      }
      assign[cell] = -1;
      return false;
    }
    std::vector<int> key;
    if (!expected_faces(cell, &key)) throw std::logic_error("map search: face order violated");
    const std::vector<int>* cand = candidates(c.dim, key);
    if (!cand) {
      assign[cell] = -1;
      return false;
    }
    for (int e : *cand) {
      if (c.marked && x.marking(c.dim, e) <= 0) continue;
      assign[cell] = e;
      if (search(order, pos + 1, found)) {
        assign[cell] = -1;
        return true;
      }
    }
    assign[cell] = -1;
    return false;
  }
};

std::vector<int> cell_order(const MarkedComplex& k) {
  std::vector<int> order(k.cells.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return k.cells[a].dim < k.cells[b].dim; });
  return order;
}

}  // namespace

std::vector<ComplexMap> enumerate_maps(const MarkedComplex& k, LevelProvider& x) {
  std::vector<ComplexMap> out;
  MapSearch s(k, x);
  s.search(cell_order(k), 0, [&](const std::vector<int>& a) {
    out.push_back(a);
    return false;
  });
  return out;
}

RlpResult has_rlp(const GeneratorMap& gen, LevelProvider& x) {
  RlpResult r;
  auto maps = enumerate_maps(gen.domain, x);
  r.maps_checked = static_cast<long long>(maps.size());
  // cells of the codomain not in the image, in dimension order
  std::vector<char> hit(gen.codomain.cells.size(), 0);
  for (int v : gen.inject) hit[v] = 1;
  std::vector<int> free_cells;
  for (int c : cell_order(gen.codomain))
    if (!hit[c]) free_cells.push_back(c);

  for (const ComplexMap& f : maps) {
    MapSearch s(gen.codomain, x);
    bool consistent = true;
    for (size_t i = 0; i < f.size(); ++i) {
      int c = gen.inject[i];
      s.assign[c] = f[i];
      // the codomain may carry extra markings on image cells
      if (gen.codomain.cells[c].marked && x.marking(gen.codomain.cells[c].dim, f[i]) <= 0) consistent = false;
    }
    // image cells must still satisfy their face relations in the codomain
    for (size_t i = 0; i < f.size() && consistent; ++i) {
      int c = gen.inject[i];
      const auto& cell = gen.codomain.cells[c];
      if (cell.dim == 0) continue;
      std::vector<int> key;
      if (!s.expected_faces(c, &key)) continue;
      for (int t = 0; t <= cell.dim && consistent; ++t)
        if (x.face(cell.dim, t, f[i]) != key[t]) consistent = false;
    }
    bool lifted = false;
    if (consistent) s.search(free_cells, 0, [&](const std::vector<int>&) { return lifted = true; });
    if (!lifted) {
      r.pass = false;
      r.witness = f;
      return r;
    }
  }
  return r;
}

std::vector<FibrancyLine> fibrancy_report(const Fin2Category& d, int m_max, NerveMode mode,
                                          unsigned tdelta_rule_mask) {
  std::vector<GeneratorMap> gens;
  if (mode == NerveMode::Tdelta) {
    for (int m = 2; m <= m_max; ++m)
      for (int k = 1; k < m; ++k) gens.push_back(build_generator(GeneratorFamily::ComplicialInnerHorn, m, k));
    for (int m = 2; m <= m_max; ++m)
      for (int k = 1; k < m; ++k) gens.push_back(build_generator(GeneratorFamily::ComplicialThinness, m, k));
    for (int m = 3; m <= m_max; ++m) gens.push_back(build_generator(GeneratorFamily::Triviality, m));
    gens.push_back(build_generator(GeneratorFamily::ComplicialSaturation, -1));
    gens.push_back(build_generator(GeneratorFamily::ComplicialSaturation, 0));
  } else {
    for (int m = 2; m <= m_max; ++m)
      for (int k = 1; k < m; ++k) gens.push_back(build_generator(GeneratorFamily::ScaledInnerHorn, m, k));
    for (int m = 3; m <= m_max; ++m) gens.push_back(build_generator(GeneratorFamily::ScaledOuterHorn, m));
    gens.push_back(build_generator(GeneratorFamily::ScaledSaturation, 0));
  }
  int need_dim = m_max;
  for (const auto& g : gens) need_dim = std::max(need_dim, g.codomain.dim_top());

  std::vector<FibrancyLine> out;
  if (mode == NerveMode::Tdelta) {
    TdeltaNerve nerve(d, need_dim, tdelta_rule_mask);
    for (const auto& g : gens) {
      RlpResult r = has_rlp(g, nerve);
      out.push_back({g.name, r.pass, r.maps_checked});
    }
  } else {
    ScaledNerve nerve(d, need_dim);
    for (const auto& g : gens) {
      RlpResult r = has_rlp(g, nerve);
      out.push_back({g.name, r.pass, r.maps_checked});
    }
  }
  return out;
}

}  // namespace twocat
