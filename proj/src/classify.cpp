#include "twocat/classify.hpp"

#include <stdexcept>

namespace twocat {

std::vector<AdjointCompletion> adjoint_completions(const Fin2Category& d, int f) {
  std::vector<AdjointCompletion> out;
  const int a = d.one_src(f), b = d.one_tgt(f);
  for (int gl = 0; gl < d.hom(b, a).objects(); ++gl) {
    int g = d.one_cell_id(b, a, gl);
    int gf = d.compose1(f, g);  // a -> a
    int fg = d.compose1(g, f);  // b -> b
    // eta: id_a => g∘f in hom(a,a); eps: f∘g => id_b in hom(b,b)
    const FinCategory& haa = d.hom(a, a);
    const FinCategory& hbb = d.hom(b, b);
    for (int el = 0; el < haa.morphisms(); ++el) {
      if (haa.src(el) != d.one_local(d.id1(a)) || haa.tgt(el) != d.one_local(gf)) continue;
      int eta = d.two_cell_id(a, a, el);
      for (int xl = 0; xl < hbb.morphisms(); ++xl) {
        if (hbb.src(xl) != d.one_local(fg) || hbb.tgt(xl) != d.one_local(d.id1(b))) continue;
        int eps = d.two_cell_id(b, b, xl);
        // (eps ⋆ 1_f) ∘ (1_f ⋆ eta) = 1_f  and  (1_g ⋆ eps) ∘ (eta ⋆ 1_g) = 1_g
        int t1 = d.vcomp(d.hcomp(eta, d.id2(f)), d.hcomp(d.id2(f), eps));
        int t2 = d.vcomp(d.hcomp(d.id2(g), eta), d.hcomp(eps, d.id2(g)));
        if (t1 == d.id2(f) && t2 == d.id2(g)) out.push_back({g, eta, eps});
      }
    }
  }
  return out;
}

bool is_equivalence(const Fin2Category& d, int f) {
  const int a = d.one_src(f), b = d.one_tgt(f);
  for (int gl = 0; gl < d.hom(b, a).objects(); ++gl) {
    int g = d.one_cell_id(b, a, gl);
    int gf = d.compose1(f, g);
    int fg = d.compose1(g, f);
    bool gf_iso = false, fg_iso = false;
    const FinCategory& haa = d.hom(a, a);
    for (int el = 0; el < haa.morphisms() && !gf_iso; ++el)
      if (haa.src(el) == d.one_local(d.id1(a)) && haa.tgt(el) == d.one_local(gf) && haa.is_iso(el)) gf_iso = true;
    const FinCategory& hbb = d.hom(b, b);
    for (int el = 0; el < hbb.morphisms() && !fg_iso; ++el)
      if (hbb.src(el) == d.one_local(d.id1(b)) && hbb.tgt(el) == d.one_local(fg) && hbb.is_iso(el)) fg_iso = true;
    if (gf_iso && fg_iso) return true;
  }
  return false;
}

Classification classify_cells(const Fin2Category& d) {
  Classification c;
  for (int x = 0; x < d.two_cells(); ++x)
    if (d.two_invertible(x)) c.two_isomorphisms.push_back(x);
  c.adjoint_completions.resize(d.one_cells());
  for (int f = 0; f < d.one_cells(); ++f) {
    if (is_equivalence(d, f)) c.one_equivalences.push_back(f);
    c.adjoint_completions[f] = adjoint_completions(d, f);
  }
  return c;
}

bool is_gaunt(const Fin2Category& d) {
  for (int x = 0; x < d.two_cells(); ++x)
    if (d.two_invertible(x) && !d.is_id2(x)) return false;
  for (int f = 0; f < d.one_cells(); ++f)
    if (!d.is_id1(f) && is_equivalence(d, f)) return false;
  return true;
}

std::vector<Triangle> triangles_with_sides(const Fin2Category& d, int f, int g) {
  std::vector<Triangle> out;
  if (d.one_tgt(f) != d.one_src(g)) return out;
  const int a = d.one_src(f), c = d.one_tgt(g);
  int gf = d.compose1(f, g);
  const FinCategory& hac = d.hom(a, c);
  for (int pl = 0; pl < hac.morphisms(); ++pl) {
    if (hac.tgt(pl) != d.one_local(gf)) continue;
    if (!hac.is_iso(pl)) continue;
    int phi = d.two_cell_id(a, c, pl);
    out.push_back({f, g, d.two_src1(phi), phi});
  }
  return out;
}

std::vector<Triangle> triangles(const Fin2Category& d) {
  std::vector<Triangle> out;
  for (int f = 0; f < d.one_cells(); ++f) {
    int b = d.one_tgt(f);
    for (int c = 0; c < d.objects(); ++c)
      for (int gl = 0; gl < d.hom(b, c).objects(); ++gl) {
        auto ts = triangles_with_sides(d, f, d.one_cell_id(b, c, gl));
        out.insert(out.end(), ts.begin(), ts.end());
      }
  }
  return out;
}

int triangle_face(const Triangle& t, int i) {
  switch (i) {
    case 0: return t.g;
    case 1: return t.h;
    case 2: return t.f;
    default: throw std::invalid_argument("triangle_face: i in {0,1,2}");
  }
}

Triangle triangle_degeneracy(const Fin2Category& d, int f, int i) {
  if (i == 0) return {d.id1(d.one_src(f)), f, f, d.id2(f)};
  if (i == 1) return {f, d.id1(d.one_tgt(f)), f, d.id2(f)};
  throw std::invalid_argument("triangle_degeneracy: i in {0,1}");
}

int whisker_compose(const Fin2Category& d, const std::vector<PastingStep>& steps) {
  if (steps.empty()) throw std::invalid_argument("whisker_compose: empty pasting");
  int acc = -1;
  for (const auto& st : steps) {
    int cell = st.cell;
    if (cell < 0 || cell >= d.two_cells()) throw std::invalid_argument("whisker_compose: bad 2-cell");
    if (st.pre >= 0) {
      if (d.one_tgt(st.pre) != d.two_src_obj(cell)) throw std::invalid_argument("whisker_compose: pre mismatch");
      cell = d.hcomp(d.id2(st.pre), cell);
    }
    if (st.post >= 0) {
      if (d.two_tgt_obj(cell) != d.one_src(st.post)) throw std::invalid_argument("whisker_compose: post mismatch");
      cell = d.hcomp(cell, d.id2(st.post));
    }
    if (acc < 0) {
      acc = cell;
    } else {
      if (d.two_tgt1(acc) != d.two_src1(cell)) throw std::invalid_argument("whisker_compose: stages not composable");
      acc = d.vcomp(acc, cell);
    }
  }
  return acc;
}

}  // namespace twocat
