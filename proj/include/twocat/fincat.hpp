#pragma once

#include <optional>
#include <string>
#include <vector>

namespace twocat {

// Morphism endpoints. Objects and morphisms are small integer ids assigned
// in construction order; every enumeration in this library returns a
// deterministic order derived from those ids.
struct Mor {
  int src = 0;
  int tgt = 0;
};

// A finite category given by a dense, total composition table.
// compose(f, g) is "g after f" (diagrammatic order): defined iff
// tgt(f) == src(g).
class FinCategory {
 public:
  FinCategory() = default;
  FinCategory(int n_objects, std::vector<Mor> morphisms, std::vector<int> identity,
              std::vector<int> compose_table);

  int objects() const { return n_; }
  int morphisms() const { return static_cast<int>(mor_.size()); }
  int src(int f) const { return mor_[f].src; }
  int tgt(int f) const { return mor_[f].tgt; }
  int identity(int a) const { return id_[a]; }
  bool is_identity(int f) const { return id_[mor_[f].src] == f; }
  int compose(int f, int g) const { return comp_[f * morphisms() + g]; }
  const std::vector<int>& hom(int a, int b) const { return hom_[a * n_ + b]; }

  bool is_iso(int f) const;
  std::optional<int> inverse(int f) const;

  // One entry per violated law, with a witness tuple. Empty iff lawful.
  std::vector<std::string> validate() const;
  bool valid() const { return validate().empty(); }

 private:
  int n_ = 0;
  std::vector<Mor> mor_;
  std::vector<int> id_;
  std::vector<int> comp_;                  // morphisms x morphisms, -1 if not composable
  std::vector<std::vector<int>> hom_;      // per (a,b), ascending morphism ids
};

// Standard constructions.
FinCategory ordinal_category(int n);               // poset 0 < 1 < ... < n
FinCategory chaotic_category(int k);               // ~[k]: k+1 objects, one morphism per ordered pair
FinCategory chaotic_on(int n_objects);             // ch S for |S| = n_objects
FinCategory discrete_category(int n_objects);      // identities only
FinCategory product_category(const FinCategory& c, const FinCategory& d);
FinCategory coproduct_category(const FinCategory& c, const FinCategory& d);
FinCategory walking_retract();                     // a, b; f: a->b, g: b->a, fg = id_b, gf idempotent

// Connected components of the underlying graph; returns object -> component,
// components numbered by least member.
std::vector<int> pi0(const FinCategory& c);
int pi0_count(const FinCategory& c);

struct CatFunctor {
  std::vector<int> obj;
  std::vector<int> mor;
  bool operator==(const CatFunctor&) const = default;
  bool operator<(const CatFunctor& o) const {
    return obj != o.obj ? obj < o.obj : mor < o.mor;
  }
};

bool is_functor(const FinCategory& c, const FinCategory& d, const CatFunctor& f);
CatFunctor identity_functor(const FinCategory& c);
// g after f, for f: C -> D and g: D -> E.
CatFunctor compose_functors(const CatFunctor& f, const CatFunctor& g);

// Complete, duplicate-free, deterministically ordered list of functors C -> D.
std::vector<CatFunctor> enumerate_functors(const FinCategory& c, const FinCategory& d);

// Same, with per-object / per-morphism candidate restrictions. An empty
// candidate vector means unrestricted.
std::vector<CatFunctor> enumerate_functors_constrained(
    const FinCategory& c, const FinCategory& d,
    const std::vector<std::vector<int>>& obj_candidates,
    const std::vector<std::vector<int>>& mor_candidates);

// Functor [n'] -> [n] from a monotone vertex map, as used for simplicial
// operator actions.
CatFunctor ordinal_functor(const std::vector<int>& alpha, int n_from, int n_to);
// Functor ~[k'] -> ~[k] from an arbitrary vertex map.
CatFunctor chaotic_functor(const std::vector<int>& beta, int k_from, int k_to);
// Product of functors, matching product_category's cell encoding.
CatFunctor product_functor(const FinCategory& c1, const FinCategory& c2,
                           const FinCategory& d1, const FinCategory& d2,
                           const CatFunctor& f1, const CatFunctor& f2);

}  // namespace twocat
