#pragma once

#include <string>
#include <vector>

#include "twocat/classify.hpp"
#include "twocat/twofunctor.hpp"

namespace twocat {

// A normal pseudofunctor A -> B: cell assignments plus a compositor valued
// in triangles of B. The compositor at a composable pair (f,g) is the
// invertible 2-cell
//   F(g∘f)  =>  F g ∘ F f
// stored by its global 2-cell id; the triangle boundary condition makes the
// sides (F f, F g, F(g∘f)) a field-level invariant.
struct Nps {
  std::vector<int> obj;
  std::vector<int> one;
  std::vector<int> two;
  std::vector<int> compositor;  // per composable pair of A (A.composable_pairs order)
  bool operator==(const Nps&) const = default;
  bool operator<(const Nps& o) const {
    if (obj != o.obj) return obj < o.obj;
    if (one != o.one) return one < o.one;
    if (two != o.two) return two < o.two;
    return compositor < o.compositor;
  }
};

// Per-axiom report, one line per violated instance with a witness tuple.
// Axioms: (a) source/target/identity compatibility, (b) compositor boundary,
// (c) unit normality, (d) vertical functoriality, (e) 2-naturality of the
// compositor, (f) cocycle condition.
std::vector<std::string> validate_nps(const Fin2Category& a, const Fin2Category& b, const Nps& f);
bool is_nps(const Fin2Category& a, const Fin2Category& b, const Nps& f);

Nps nps_from_strict(const Fin2Category& a, const Fin2Category& b, const TwoFunctor& f);
bool nps_is_strict(const Fin2Category& a, const Fin2Category& b, const Nps& f);
TwoFunctor nps_strip(const Nps& f);  // drop the compositor

// Complete deterministic enumeration; the strict 2-functors appear as the
// sublist with identity compositors.
std::vector<Nps> enumerate_nps(const Fin2Category& a, const Fin2Category& b);

// Precomposition with a strict 2-functor T -> A (the theta operator action).
// Proof obligation: strict precomposition preserves axioms (a)-(f), since a
// strict 2-functor reindexes cells while preserving identities and both
// compositions on the nose, so every axiom instance of F∘G is an axiom
// instance of F evaluated at image cells. Composition of two normal
// pseudofunctors is deliberately not provided.
Nps precompose_nps(const Fin2Category& t, const Fin2Category& a, const Fin2Category& b,
                   const TwoFunctor& g, const Nps& f);

// The coherence 2-isomorphism F f_k ∘ ... ∘ F f_1 <= F(f_k ∘ ... ∘ f_1)
// obtained by folding the compositor; independent of bracketing. chain is
// given source-to-target; k = chain.size() >= 1.
int extend_compositor(const Fin2Category& a, const Fin2Category& b, const Nps& f,
                      const std::vector<int>& chain);

// A 2-category whose underlying category is freely generated by the
// distinguished 1-cells.
struct FreePresentation {
  const Fin2Category* cat = nullptr;
  std::vector<int> generators;  // global 1-cells, no identities
};

// Empty iff every 1-cell factors uniquely as a composite of generators.
std::vector<std::string> validate_free(const FreePresentation& t);
// The unique generator factorization of a 1-cell, source-to-target.
std::vector<int> free_factorization(const FreePresentation& t, int one_cell);
// theta objects are free on their consecutive-hom 1-cells
FreePresentation theta_free_presentation(const Fin2Category& th, int i);

// Lemma-style pushforward: G: T -> A strict with T free, F: A -> B a normal
// pseudofunctor; the result is a strict 2-functor T -> B.
TwoFunctor pushforward_free(const FreePresentation& t, const Fin2Category& a, const Fin2Category& b,
                            const TwoFunctor& g, const Nps& f);

}  // namespace twocat
