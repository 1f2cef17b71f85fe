#pragma once

#include <vector>

#include "twocat/fin2cat.hpp"

namespace twocat {

// (g, eta, eps) with eta: id_a => g∘f and eps: f∘g => id_b satisfying both
// triangle identities.
struct AdjointCompletion {
  int g, eta, eps;
  bool operator==(const AdjointCompletion&) const = default;
};

struct Classification {
  std::vector<int> two_isomorphisms;  // 2-cells with a vertical inverse
  std::vector<int> one_equivalences;  // 1-cells f with g, gf ≅ id, fg ≅ id
  std::vector<std::vector<AdjointCompletion>> adjoint_completions;  // per 1-cell
};

Classification classify_cells(const Fin2Category& d);
bool is_equivalence(const Fin2Category& d, int one_cell);
std::vector<AdjointCompletion> adjoint_completions(const Fin2Category& d, int one_cell);
// no non-identity 2-isomorphisms and no non-identity 1-equivalences
bool is_gaunt(const Fin2Category& d);

// phi: h => g∘f invertible; the elements of 2Cat(O~[2], -).
struct Triangle {
  int f, g, h, phi;
  bool operator==(const Triangle&) const = default;
  bool operator<(const Triangle& o) const {
    if (f != o.f) return f < o.f;
    if (g != o.g) return g < o.g;
    if (h != o.h) return h < o.h;
    return phi < o.phi;
  }
};

std::vector<Triangle> triangles(const Fin2Category& d);
// simplicial boundary of a triangle: d0 = g, d1 = h, d2 = f
int triangle_face(const Triangle& t, int i);
Triangle triangle_degeneracy(const Fin2Category& d, int one_cell, int i);  // s0, s1
// the forced triangle in a gaunt-ish situation, if any: phi: h => g∘f
std::vector<Triangle> triangles_with_sides(const Fin2Category& d, int f, int g);

// One stage of a pasting: the 2-cell `cell` whiskered by `pre` on the right
// and `post` on the left, i.e. 1_post ⋆ cell ⋆ 1_pre. Stages are composed
// vertically in list order. pre/post may be -1 for "none".
struct PastingStep {
  int pre = -1;
  int cell = -1;
  int post = -1;
};

int whisker_compose(const Fin2Category& d, const std::vector<PastingStep>& steps);

}  // namespace twocat
