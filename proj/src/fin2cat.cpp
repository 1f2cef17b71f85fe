#include "twocat/fin2cat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twocat {

Fin2Category::Fin2Category(Data d, std::string name) : name_(std::move(name)), n_(d.n_objects), data_(std::move(d)) {
  if (static_cast<int>(data_.hom.size()) != n_ * n_) throw std::invalid_argument("hom grid size mismatch");
  if (static_cast<int>(data_.id1.size()) != n_) throw std::invalid_argument("id1 size mismatch");
  if (data_.hcomp1.size() != static_cast<size_t>(n_) * n_ * n_ || data_.hcomp2.size() != data_.hcomp1.size())
    throw std::invalid_argument("hcomp grid size mismatch");
  rebuild_indexes();
}

void Fin2Category::rebuild_indexes() {
  one_.clear();
  two_.clear();
  one_offset_.assign(static_cast<size_t>(n_) * n_, 0);
  two_offset_.assign(static_cast<size_t>(n_) * n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      one_offset_[a * n_ + b] = static_cast<int>(one_.size());
      two_offset_[a * n_ + b] = static_cast<int>(two_.size());
      const FinCategory& h = hom(a, b);
      for (int k = 0; k < h.objects(); ++k) one_.push_back({a, b, k});
      for (int k = 0; k < h.morphisms(); ++k) two_.push_back({a, b, k});
    }
  pairs_.clear();
  pair_index_.assign(static_cast<size_t>(one_cells()) * one_cells(), -1);
  for (int f = 0; f < one_cells(); ++f)
    for (int g = 0; g < one_cells(); ++g)
      if (one_tgt(f) == one_src(g)) {
        pair_index_[static_cast<size_t>(f) * one_cells() + g] = static_cast<int>(pairs_.size());
        pairs_.push_back({f, g});
      }
}

int Fin2Category::compose1(int f, int g) const {
  int a = one_src(f), b = one_tgt(f), c = one_tgt(g);
  const auto& t = data_.hcomp1[(static_cast<size_t>(a) * n_ + b) * n_ + c];
  int local = t[static_cast<size_t>(one_local(f)) * hom(b, c).objects() + one_local(g)];
  return one_cell_id(a, c, local);
}

int Fin2Category::two_src1(int x) const {
  int a = two_src_obj(x), b = two_tgt_obj(x);
  return one_cell_id(a, b, hom(a, b).src(two_local(x)));
}

int Fin2Category::two_tgt1(int x) const {
  int a = two_src_obj(x), b = two_tgt_obj(x);
  return one_cell_id(a, b, hom(a, b).tgt(two_local(x)));
}

int Fin2Category::id2(int f) const {
  int a = one_src(f), b = one_tgt(f);
  return two_cell_id(a, b, hom(a, b).identity(one_local(f)));
}

int Fin2Category::vcomp(int x, int y) const {
  int a = two_src_obj(x), b = two_tgt_obj(x);
  return two_cell_id(a, b, hom(a, b).compose(two_local(x), two_local(y)));
}

int Fin2Category::hcomp(int x, int y) const {
  int a = two_src_obj(x), b = two_tgt_obj(x), c = two_tgt_obj(y);
  const auto& t = data_.hcomp2[(static_cast<size_t>(a) * n_ + b) * n_ + c];
  int local = t[static_cast<size_t>(two_local(x)) * hom(b, c).morphisms() + two_local(y)];
  return two_cell_id(a, c, local);
}

bool Fin2Category::two_invertible(int x) const { return two_inverse(x).has_value(); }

std::optional<int> Fin2Category::two_inverse(int x) const {
  int a = two_src_obj(x), b = two_tgt_obj(x);
  const FinCategory& h = hom(a, b);
  auto inv = h.inverse(two_local(x));
  if (!inv) return std::nullopt;
  return two_cell_id(a, b, *inv);
}

std::vector<std::string> Fin2Category::validate() const {
  std::vector<std::string> bad;
  auto note = [&](const std::string& s) { bad.push_back(s); };
  auto obj3 = [](int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };

  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      auto sub = hom(a, b).validate();
      for (auto& s : sub) note("hom(" + std::to_string(a) + "," + std::to_string(b) + "): " + s);
    }
  for (int a = 0; a < n_; ++a)
    if (data_.id1[a] < 0 || data_.id1[a] >= hom(a, a).objects())
      note("id1 of object " + std::to_string(a) + " out of range");
  if (!bad.empty()) return bad;

  // table shapes, ranges and 2-cell boundaries
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) {
        const FinCategory &hab = hom(a, b), &hbc = hom(b, c), &hac = hom(a, c);
        const auto& t1 = data_.hcomp1[(static_cast<size_t>(a) * n_ + b) * n_ + c];
        const auto& t2 = data_.hcomp2[(static_cast<size_t>(a) * n_ + b) * n_ + c];
        if (static_cast<int>(t1.size()) != hab.objects() * hbc.objects()) {
          note("hcomp1 table shape wrong at " + obj3(a, b, c));
          continue;
        }
        if (static_cast<int>(t2.size()) != hab.morphisms() * hbc.morphisms()) {
          note("hcomp2 table shape wrong at " + obj3(a, b, c));
          continue;
        }
        for (int f = 0; f < hab.objects(); ++f)
          for (int g = 0; g < hbc.objects(); ++g) {
            int v = t1[static_cast<size_t>(f) * hbc.objects() + g];
            if (v < 0 || v >= hac.objects())
              note("hcomp1 out of range at " + obj3(a, b, c) + " pair (" + std::to_string(f) + "," +
                   std::to_string(g) + ")");
          }
        for (int x = 0; x < hab.morphisms(); ++x)
          for (int y = 0; y < hbc.morphisms(); ++y) {
            int v = t2[static_cast<size_t>(x) * hbc.morphisms() + y];
            if (v < 0 || v >= hac.morphisms()) {
              note("hcomp2 out of range at " + obj3(a, b, c) + " pair (" + std::to_string(x) + "," +
                   std::to_string(y) + ")");
              continue;
            }
            int esrc = t1[static_cast<size_t>(hab.src(x)) * hbc.objects() + hbc.src(y)];
            int etgt = t1[static_cast<size_t>(hab.tgt(x)) * hbc.objects() + hbc.tgt(y)];
            if (hac.src(v) != esrc || hac.tgt(v) != etgt)
              note("hcomp2 boundary mismatch at " + obj3(a, b, c) + " pair (" + std::to_string(x) + "," +
                   std::to_string(y) + ")");
          }
      }
  if (!bad.empty()) return bad;

  // hcomp is a functor: preserves identities and vertical composition
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) {
        const FinCategory &hab = hom(a, b), &hbc = hom(b, c);
        for (int f = 0; f < hab.objects(); ++f)
          for (int g = 0; g < hbc.objects(); ++g) {
            int fg = compose1(one_cell_id(a, b, f), one_cell_id(b, c, g));
            if (hcomp(id2(one_cell_id(a, b, f)), id2(one_cell_id(b, c, g))) != id2(fg))
              note("hcomp does not preserve identity 2-cells at " + obj3(a, b, c) + " pair (" +
                   std::to_string(f) + "," + std::to_string(g) + ")");
          }
        for (int x = 0; x < hab.morphisms(); ++x)
          for (int xx = 0; xx < hab.morphisms(); ++xx) {
            if (hab.tgt(x) != hab.src(xx)) continue;
            for (int y = 0; y < hbc.morphisms(); ++y)
              for (int yy = 0; yy < hbc.morphisms(); ++yy) {
                if (hbc.tgt(y) != hbc.src(yy)) continue;
                int gx = two_cell_id(a, b, x), gxx = two_cell_id(a, b, xx);
                int gy = two_cell_id(b, c, y), gyy = two_cell_id(b, c, yy);
                if (hcomp(vcomp(gx, gxx), vcomp(gy, gyy)) != vcomp(hcomp(gx, gy), hcomp(gxx, gyy)))
                  note("interchange fails at " + obj3(a, b, c) + " pairs (" + std::to_string(x) + "," +
                       std::to_string(xx) + ";" + std::to_string(y) + "," + std::to_string(yy) + ")");
              }
          }
      }

  // horizontal units
  for (int f = 0; f < one_cells(); ++f) {
    int a = one_src(f), b = one_tgt(f);
    if (compose1(id1(a), f) != f) note("left 1-unit fails at 1-cell " + std::to_string(f));
    if (compose1(f, id1(b)) != f) note("right 1-unit fails at 1-cell " + std::to_string(f));
  }
  for (int x = 0; x < two_cells(); ++x) {
    int a = two_src_obj(x), b = two_tgt_obj(x);
    if (hcomp(id2(id1(a)), x) != x) note("left 2-unit fails at 2-cell " + std::to_string(x));
    if (hcomp(x, id2(id1(b))) != x) note("right 2-unit fails at 2-cell " + std::to_string(x));
  }

  // horizontal associativity, on 1-cells then on 2-cells
  for (int f = 0; f < one_cells(); ++f)
    for (int g = 0; g < one_cells(); ++g) {
      if (one_tgt(f) != one_src(g)) continue;
      for (int k = 0; k < one_cells(); ++k) {
        if (one_tgt(g) != one_src(k)) continue;
        if (compose1(f, compose1(g, k)) != compose1(compose1(f, g), k))
          note("1-cell associativity fails at (" + std::to_string(f) + "," + std::to_string(g) + "," +
               std::to_string(k) + ")");
      }
    }
  for (int x = 0; x < two_cells(); ++x)
    for (int y = 0; y < two_cells(); ++y) {
      if (two_tgt_obj(x) != two_src_obj(y)) continue;
      for (int z = 0; z < two_cells(); ++z) {
        if (two_tgt_obj(y) != two_src_obj(z)) continue;
        if (hcomp(x, hcomp(y, z)) != hcomp(hcomp(x, y), z))
          note("2-cell associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
               std::to_string(z) + ")");
      }
    }
  return bad;
}

// ---------------------------------------------------------------------------
// constructions

Fin2Category discrete_two_category(const FinCategory& c) {
  Fin2Category::Data d;
  const int n = c.objects();
  d.n_objects = n;
  d.hom.reserve(static_cast<size_t>(n) * n);
  // local object k of hom(a,b) is c.hom(a,b)[k]
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.hom.push_back(discrete_category(static_cast<int>(c.hom(a, b).size())));
  d.id1.resize(n);
  auto position = [&](int a, int b, int f) {
    const auto& h = c.hom(a, b);
    return static_cast<int>(std::find(h.begin(), h.end(), f) - h.begin());
  };
  for (int a = 0; a < n; ++a) d.id1[a] = position(a, a, c.identity(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) {
        const auto &hab = c.hom(a, b), &hbc = c.hom(b, cc);
        std::vector<int> t(hab.size() * hbc.size());
        for (size_t f = 0; f < hab.size(); ++f)
          for (size_t g = 0; g < hbc.size(); ++g)
            t[f * hbc.size() + g] = position(a, cc, c.compose(hab[f], hbc[g]));
        d.hcomp1.push_back(t);
        d.hcomp2.push_back(std::move(t));  // discrete homs: morphisms mirror objects
      }
  return Fin2Category(std::move(d));
}

Fin2Category chain_two_category(const std::vector<FinCategory>& steps) {
  const int i = static_cast<int>(steps.size());
  const int n = i + 1;
  Fin2Category::Data d;
  d.n_objects = n;
  // hom(a,b) = steps[a] x ... x steps[b-1], little-endian mixed radix
  auto hom_cat = [&](int a, int b) -> FinCategory {
    if (a > b) return FinCategory(0, {}, {}, {});
    FinCategory acc = ordinal_category(0);  // terminal
    for (int s = a; s < b; ++s) acc = product_category(acc, steps[s]);
    return acc;
  };
  std::vector<int> nobj(static_cast<size_t>(n) * n, 0), nmor(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      d.hom.push_back(hom_cat(a, b));
      nobj[a * n + b] = d.hom.back().objects();
      nmor[a * n + b] = d.hom.back().morphisms();
    }
  d.id1.assign(n, 0);  // hom(a,a) is terminal
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::vector<int> t1, t2;
        if (a <= b && b <= c) {
          t1.resize(static_cast<size_t>(nobj[a * n + b]) * nobj[b * n + c]);
          for (int f = 0; f < nobj[a * n + b]; ++f)
            for (int g = 0; g < nobj[b * n + c]; ++g)
              t1[static_cast<size_t>(f) * nobj[b * n + c] + g] = f + g * nobj[a * n + b];
          t2.resize(static_cast<size_t>(nmor[a * n + b]) * nmor[b * n + c]);
          for (int x = 0; x < nmor[a * n + b]; ++x)
            for (int y = 0; y < nmor[b * n + c]; ++y)
              t2[static_cast<size_t>(x) * nmor[b * n + c] + y] = x + y * nmor[a * n + b];
        }
        d.hcomp1.push_back(std::move(t1));
        d.hcomp2.push_back(std::move(t2));
      }
  return Fin2Category(std::move(d));
}

Fin2Category theta_category(int i, const std::vector<int>& js) {
  if (i < 0) throw std::invalid_argument("theta: i >= 0 required");
  if (static_cast<int>(js.size()) != i) throw std::invalid_argument("theta: j-list length must equal i");
  std::vector<FinCategory> steps;
  steps.reserve(i);
  for (int j : js) steps.push_back(ordinal_category(j));
  std::string nm = "[" + std::to_string(i) + "|";
  for (size_t k = 0; k < js.size(); ++k) nm += (k ? "," : "") + std::to_string(js[k]);
  nm += "]";
  Fin2Category out = chain_two_category(steps);
  out.set_name(nm);
  return out;
}

Fin2Category sigma(const FinCategory& c) { return chain_two_category({c}); }

Fin2Category sigma_i(int i, const FinCategory& c) {
  if (i < 0) throw std::invalid_argument("sigma_i: i >= 0 required");
  return chain_two_category(std::vector<FinCategory>(i, c));
}

Fin2Category walking_two_cell() {
  Fin2Category out = sigma(ordinal_category(1));
  out.set_name("sigma[1]");
  return out;
}

Fin2Category walking_two_iso() {
  Fin2Category out = sigma(chaotic_category(1));
  out.set_name("sigmaI");
  return out;
}

Fin2Category terminal_two_category() {
  Fin2Category out = chain_two_category({});
  out.set_name("[0]");
  return out;
}

Fin2Category ch_star(const FinCategory& c) {
  Fin2Category::Data d;
  const int n = c.objects();
  d.n_objects = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.hom.push_back(chaotic_on(static_cast<int>(c.hom(a, b).size())));
  auto position = [&](int a, int b, int f) {
    const auto& h = c.hom(a, b);
    return static_cast<int>(std::find(h.begin(), h.end(), f) - h.begin());
  };
  d.id1.resize(n);
  for (int a = 0; a < n; ++a) d.id1[a] = position(a, a, c.identity(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) {
        const int nab = static_cast<int>(c.hom(a, b).size());
        const int nbc = static_cast<int>(c.hom(b, cc).size());
        const int nac = static_cast<int>(c.hom(a, cc).size());
        std::vector<int> t1(static_cast<size_t>(nab) * nbc);
        for (int f = 0; f < nab; ++f)
          for (int g = 0; g < nbc; ++g)
            t1[static_cast<size_t>(f) * nbc + g] = position(a, cc, c.compose(c.hom(a, b)[f], c.hom(b, cc)[g]));
        // chaotic hom morphisms are encoded src*n + tgt
        std::vector<int> t2(static_cast<size_t>(nab) * nab * nbc * nbc);
        for (int x = 0; x < nab * nab; ++x)
          for (int y = 0; y < nbc * nbc; ++y) {
            int xs = x / nab, xt = x % nab, ys = y / nbc, yt = y % nbc;
            int vs = t1[static_cast<size_t>(xs) * nbc + ys];
            int vt = t1[static_cast<size_t>(xt) * nbc + yt];
            t2[static_cast<size_t>(x) * (static_cast<size_t>(nbc) * nbc) + y] = vs * nac + vt;
          }
        d.hcomp1.push_back(std::move(t1));
        d.hcomp2.push_back(std::move(t2));
      }
  return Fin2Category(std::move(d));
}

Fin2Category coproduct_two_category(const Fin2Category& a, const Fin2Category& b) {
  Fin2Category::Data d;
  const int na = a.objects(), nb = b.objects(), n = na + nb;
  d.n_objects = n;
  auto empty_cat = FinCategory(0, {}, {}, {});
  auto part = [&](int x) { return x < na ? 0 : 1; };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (part(p) != part(q))
        d.hom.push_back(empty_cat);
      else if (part(p) == 0)
        d.hom.push_back(a.hom(p, q));
      else
        d.hom.push_back(b.hom(p - na, q - na));
    }
  d.id1.resize(n);
  for (int p = 0; p < n; ++p)
    d.id1[p] = part(p) == 0 ? a.raw().id1[p] : b.raw().id1[p - na];
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        if (part(p) == part(q) && part(q) == part(r)) {
          if (part(p) == 0) {
            d.hcomp1.push_back(a.raw().hcomp1[(static_cast<size_t>(p) * na + q) * na + r]);
            d.hcomp2.push_back(a.raw().hcomp2[(static_cast<size_t>(p) * na + q) * na + r]);
          } else {
            d.hcomp1.push_back(b.raw().hcomp1[(static_cast<size_t>(p - na) * nb + (q - na)) * nb + (r - na)]);
            d.hcomp2.push_back(b.raw().hcomp2[(static_cast<size_t>(p - na) * nb + (q - na)) * nb + (r - na)]);
          }
        } else {
          d.hcomp1.push_back({});
          d.hcomp2.push_back({});
        }
      }
  return Fin2Category(std::move(d));
}

Fin2Category product_two_category(const Fin2Category& a, const Fin2Category& b) {
  Fin2Category::Data d;
  const int na = a.objects(), nb = b.objects();
  d.n_objects = na * nb;
  auto pa = [&](int p) { return p % na; };
  auto pb = [&](int p) { return p / na; };
  for (int p = 0; p < d.n_objects; ++p)
    for (int q = 0; q < d.n_objects; ++q)
      d.hom.push_back(product_category(a.hom(pa(p), pa(q)), b.hom(pb(p), pb(q))));
  d.id1.resize(d.n_objects);
  for (int p = 0; p < d.n_objects; ++p) {
    int ia = a.raw().id1[pa(p)], ib = b.raw().id1[pb(p)];
    d.id1[p] = ia + ib * a.hom(pa(p), pa(p)).objects();
  }
  for (int p = 0; p < d.n_objects; ++p)
    for (int q = 0; q < d.n_objects; ++q)
      for (int r = 0; r < d.n_objects; ++r) {
        const FinCategory &hab_a = a.hom(pa(p), pa(q)), &hbc_a = a.hom(pa(q), pa(r));
        const FinCategory &hab_b = b.hom(pb(p), pb(q)), &hbc_b = b.hom(pb(q), pb(r));
        const auto& ta1 = a.raw().hcomp1[(static_cast<size_t>(pa(p)) * na + pa(q)) * na + pa(r)];
        const auto& tb1 = b.raw().hcomp1[(static_cast<size_t>(pb(p)) * nb + pb(q)) * nb + pb(r)];
        const auto& ta2 = a.raw().hcomp2[(static_cast<size_t>(pa(p)) * na + pa(q)) * na + pa(r)];
        const auto& tb2 = b.raw().hcomp2[(static_cast<size_t>(pb(p)) * nb + pb(q)) * nb + pb(r)];
        int oab = hab_a.objects() * hab_b.objects();
        int obc = hbc_a.objects() * hbc_b.objects();
        int oac_a = a.hom(pa(p), pa(r)).objects();
        std::vector<int> t1(static_cast<size_t>(oab) * obc);
        for (int f = 0; f < oab; ++f)
          for (int g = 0; g < obc; ++g) {
            int fa = f % hab_a.objects(), fb = f / hab_a.objects();
            int ga = g % hbc_a.objects(), gb = g / hbc_a.objects();
            int va = ta1[static_cast<size_t>(fa) * hbc_a.objects() + ga];
            int vb = tb1[static_cast<size_t>(fb) * hbc_b.objects() + gb];
            t1[static_cast<size_t>(f) * obc + g] = va + vb * oac_a;
          }
        int mab = hab_a.morphisms() * hab_b.morphisms();
        int mbc = hbc_a.morphisms() * hbc_b.morphisms();
        int mac_a = a.hom(pa(p), pa(r)).morphisms();
        std::vector<int> t2(static_cast<size_t>(mab) * mbc);
        for (int x = 0; x < mab; ++x)
          for (int y = 0; y < mbc; ++y) {
            int xa = x % hab_a.morphisms(), xb = x / hab_a.morphisms();
            int ya = y % hbc_a.morphisms(), yb = y / hbc_a.morphisms();
            int va = ta2[static_cast<size_t>(xa) * hbc_a.morphisms() + ya];
            int vb = tb2[static_cast<size_t>(xb) * hbc_b.morphisms() + yb];
            t2[static_cast<size_t>(x) * mbc + y] = va + vb * mac_a;
          }
        d.hcomp1.push_back(std::move(t1));
        d.hcomp2.push_back(std::move(t2));
      }
  return Fin2Category(std::move(d));
}

Fin2Category power_two_category(const Fin2Category& a, int k) {
  Fin2Category acc = terminal_two_category();
  for (int s = 0; s < k; ++s) acc = product_two_category(acc, a);
  return acc;
}

FinCategory ob_star(const Fin2Category& d) {
  std::vector<Mor> mor;
  mor.reserve(d.one_cells());
  for (int f = 0; f < d.one_cells(); ++f) mor.push_back({d.one_src(f), d.one_tgt(f)});
  std::vector<int> ids(d.objects());
  for (int a = 0; a < d.objects(); ++a) ids[a] = d.id1(a);
  const int m = d.one_cells();
  std::vector<int> table(static_cast<size_t>(m) * m, -1);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (d.one_tgt(f) == d.one_src(g)) table[static_cast<size_t>(f) * m + g] = d.compose1(f, g);
  return FinCategory(d.objects(), std::move(mor), std::move(ids), std::move(table));
}

FinCategory pi0_star(const Fin2Category& d, std::vector<int>* one_cell_class) {
  const int n = d.objects();
  // per hom, component of each object; classes numbered per (a,b) then glued globally
  std::vector<std::vector<int>> comp(static_cast<size_t>(n) * n);
  std::vector<int> ncomp(static_cast<size_t>(n) * n, 0), offset(static_cast<size_t>(n) * n, 0);
  int total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      comp[a * n + b] = pi0(d.hom(a, b));
      ncomp[a * n + b] = pi0_count(d.hom(a, b));
      offset[a * n + b] = total;
      total += ncomp[a * n + b];
    }
  std::vector<Mor> mor(total);
  std::vector<int> rep(total, -1);  // representative local object, least in class
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < d.hom(a, b).objects(); ++k) {
        int cls = offset[a * n + b] + comp[a * n + b][k];
        mor[cls] = {a, b};
        if (rep[cls] < 0) rep[cls] = k;
      }
  if (one_cell_class) {
    one_cell_class->assign(d.one_cells(), -1);
    for (int f = 0; f < d.one_cells(); ++f) {
      int a = d.one_src(f), b = d.one_tgt(f);
      (*one_cell_class)[f] = offset[a * n + b] + comp[a * n + b][d.one_local(f)];
    }
  }
  std::vector<int> ids(n);
  for (int a = 0; a < n; ++a) ids[a] = offset[a * n + a] + comp[a * n + a][d.raw().id1[a]];
  std::vector<int> table(static_cast<size_t>(total) * total, -1);
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y) {
      if (mor[x].tgt != mor[y].src) continue;
      int a = mor[x].src, b = mor[x].tgt, c = mor[y].tgt;
      int f = d.one_cell_id(a, b, rep[x]), g = d.one_cell_id(b, c, rep[y]);
      int fg = d.compose1(f, g);
      table[static_cast<size_t>(x) * total + y] = offset[a * n + c] + comp[a * n + c][d.one_local(fg)];
    }
  return FinCategory(n, std::move(mor), std::move(ids), std::move(table));
}

}  // namespace twocat
