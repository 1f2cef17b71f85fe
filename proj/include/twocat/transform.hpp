#pragma once

#include <map>
#include <vector>

#include "twocat/twofunctor.hpp"

namespace twocat {

// Lax natural transformation sigma: F => G for parallel strict 2-functors
// F, G: B -> D. The naturality 2-cell at f: a -> b points
//   sigma_f : sigma_b ∘ F f  =>  G f ∘ sigma_a,
// the convention pinned by the [1]x[1]-square orientation tests.
struct LaxTransformation {
  std::vector<int> comp;  // per object of B: 1-cell F b -> G b in D
  std::vector<int> nat;   // per global 1-cell of B: naturality 2-cell in D
  bool operator==(const LaxTransformation&) const = default;
  bool operator<(const LaxTransformation& o) const {
    return comp != o.comp ? comp < o.comp : nat < o.nat;
  }
};

struct Modification {
  std::vector<int> comp;  // per object of B: 2-cell sigma_b => tau_b
  bool operator==(const Modification&) const = default;
  bool operator<(const Modification& o) const { return comp < o.comp; }
};

enum class Flavor { Strict, Pseudo, Lax, Icon, Cartesian = Strict };

bool is_lax_transformation(const Fin2Category& b, const Fin2Category& d, const TwoFunctor& f,
                           const TwoFunctor& g, const LaxTransformation& s);
bool transformation_has_flavor(const Fin2Category& d, const LaxTransformation& s, Flavor fl);
bool is_modification(const Fin2Category& b, const Fin2Category& d, const TwoFunctor& f, const TwoFunctor& g,
                     const LaxTransformation& s, const LaxTransformation& t, const Modification& m);

// Complete ordered lists; for any flavor the result is a literal sublist of
// the Lax list.
std::vector<LaxTransformation> enumerate_transformations(const Fin2Category& b, const Fin2Category& d,
                                                         const TwoFunctor& f, const TwoFunctor& g, Flavor fl);
std::vector<Modification> enumerate_modifications(const Fin2Category& b, const Fin2Category& d,
                                                  const TwoFunctor& f, const TwoFunctor& g,
                                                  const LaxTransformation& s, const LaxTransformation& t);

LaxTransformation identity_transformation(const Fin2Category& b, const Fin2Category& d, const TwoFunctor& f);
LaxTransformation compose_transformations(const Fin2Category& b, const Fin2Category& d, const TwoFunctor& f,
                                          const TwoFunctor& g, const TwoFunctor& h, const LaxTransformation& s,
                                          const LaxTransformation& t);  // t after s

// The functor 2-category [B,D]_flavor together with the bookkeeping needed
// to interpret its cells.
struct FunctorTwoCategory {
  Fin2Category cat;
  std::vector<TwoFunctor> objs;
  // per ordered object pair (i*n+j): transformations in hom order
  std::vector<std::vector<LaxTransformation>> trans;
  // per ordered object pair: (src trans, tgt trans, modification) in hom
  // morphism order
  std::vector<std::vector<std::tuple<int, int, Modification>>> mods;
  // per ordered object pair: (src, tgt, components) -> morphism index
  std::vector<std::map<std::tuple<int, int, std::vector<int>>, int>> mod_lookup;

  int object_index(const TwoFunctor& f) const;
  int trans_index(int i, int j, const LaxTransformation& s) const;  // local object in hom(i,j)
  int mod_index(int i, int j, int s, int t, const Modification& m) const;  // local morphism
};

FunctorTwoCategory functor_two_category(const Fin2Category& b, const Fin2Category& d, Flavor fl);

// Evaluation at an object of B, as a strict 2-functor [B,D] -> D.
TwoFunctor evaluation_functor(const FunctorTwoCategory& fc, const Fin2Category& d, int b_obj);

// The canonical inclusion [B,D]_sub -> [B,D]_super (strict -> ps -> lax and
// ic -> lax), as a strict 2-functor between the built functor 2-categories.
TwoFunctor flavor_inclusion(const FunctorTwoCategory& sub, const FunctorTwoCategory& super);

}  // namespace twocat
