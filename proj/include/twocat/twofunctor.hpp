#pragma once

#include <vector>

#include "twocat/fin2cat.hpp"

namespace twocat {

// A strict 2-functor between finite 2-categories, stored as global cell maps.
struct TwoFunctor {
  std::vector<int> obj;  // objects of A -> objects of B
  std::vector<int> one;  // global 1-cells
  std::vector<int> two;  // global 2-cells
  bool operator==(const TwoFunctor&) const = default;
  bool operator<(const TwoFunctor& o) const {
    if (obj != o.obj) return obj < o.obj;
    if (one != o.one) return one < o.one;
    return two < o.two;
  }
};

bool is_two_functor(const Fin2Category& a, const Fin2Category& b, const TwoFunctor& f);
TwoFunctor identity_two_functor(const Fin2Category& a);
// g after f, for f: A -> B and g: B -> C.
TwoFunctor compose_two_functors(const TwoFunctor& f, const TwoFunctor& g);

// Complete, duplicate-free, deterministically ordered list of strict
// 2-functors A -> B. Composite 1- and 2-cells are pinned from previously
// assigned hom-functors during the search, which keeps theta-shaped domains
// cheap.
std::vector<TwoFunctor> enumerate_two_functors(const Fin2Category& a, const Fin2Category& b);

// Assemble a TwoFunctor from an object map and per-(a,b) hom functors
// (indexed a*n+b); returns false if the data is not a 2-functor.
bool assemble_two_functor(const Fin2Category& a, const Fin2Category& b, const std::vector<int>& obj,
                          const std::vector<CatFunctor>& homfns, TwoFunctor* out);

}  // namespace twocat
