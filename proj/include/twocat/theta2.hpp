#pragma once

#include <string>
#include <vector>

#include "twocat/natmaps.hpp"
#include "twocat/nps.hpp"

namespace twocat {

struct ThetaShape {
  int i = 0;
  std::vector<int> js;  // length i, entries >= 0
  bool valid() const {
    if (i < 0 || static_cast<int>(js.size()) != i) return false;
    for (int j : js)
      if (j < 0) return false;
    return true;
  }
};

Fin2Category theta_of(const ThetaShape& s);
ThetaShape diag_shape(int i, int j);  // [i|j,...,j]

// The diagonal Theta_2 morphism induced by monotone alpha: [i'] -> [i] and
// beta: [j'] -> [j], between [i'|j'...] and [i|j...]: alpha on objects, beta
// applied in every column.
TwoFunctor theta_diag_morphism(const Fin2Category& from, int i_from, int j_from, const Fin2Category& to,
                               int i_to, int j_to, const std::vector<int>& alpha,
                               const std::vector<int>& beta);

// N^{Theta_2}_theta D: the set of normal pseudofunctors theta -> D. The
// operator action is precomposition with strict 2-functors between thetas.
std::vector<Nps> theta2_level(const Fin2Category& d, const ThetaShape& shape);

// For gaunt A, the (i,j,0)-level of the bisimplicial nerve: strict 2-functors
// [i|j..j] -> A.
std::vector<TwoFunctor> gaunt_bisimplicial_level(const Fin2Category& a, int i, int j);

struct GridCheckResult {
  bool pass = true;
  std::vector<std::string> lines;
  std::string detail;
};

// |nps| = |strict| with a constructed bijection (drop the compositor), on
// the (i,j) grid.
GridCheckResult check_optimistic(const Fin2Category& a, int i_max, int j_max);
// Same bijection read against the k=0 bisimplicial levels, compatibly with
// every generating operator of the grid.
GridCheckResult check_leinster_vs_moser(const Fin2Category& a, int i_max, int j_max);

// --- Appendix roundtrip -----------------------------------------------------
//
// Bisimplicial nerve levels (i,j,0) for i+j <= 3, as a truncated presheaf.
// The shipped provider serves gaunt 2-categories, where the level at (i,j)
// is the strict hom from [i|j..j]. gamma reads a natural family back into a
// normal pseudofunctor via the appendix formulas; push applies a normal
// pseudofunctor to the levels via the free-presentation pushforward.
class GauntNerveProvider {
 public:
  explicit GauntNerveProvider(const Fin2Category& b);
  const Fin2Category& target() const { return *b_; }
  const TruncPresheaf& presheaf() const { return ps_; }
  const std::vector<std::pair<int, int>>& keys() const { return keys_; }
  int key_index(int i, int j) const;
  const std::vector<TwoFunctor>& level(int i, int j) const;
  const Fin2Category& theta_at(int idx) const { return thetas_[idx]; }

  // encode structural cells of the target as level elements
  int encode_object(int obj) const;
  int encode_one(int one_cell) const;
  int encode_two(int two_cell) const;
  int encode_pair(int f, int g) const;  // composable pair as a (2,0)-element
  // decode hooks used by gamma
  int decode_object(int x) const;
  int decode_one(int x) const;
  int decode_two(int x) const;
  Triangle decode_triangle(int x) const;
  // operator-natural image of a level element under a normal pseudofunctor
  int push(const GauntNerveProvider& src, const Nps& f, int key, int x) const;

 private:
  const Fin2Category* b_;
  std::vector<std::pair<int, int>> keys_;
  std::vector<Fin2Category> thetas_;
  std::vector<std::vector<TwoFunctor>> levels_;
  TruncPresheaf ps_;
};

struct AppendixReport {
  bool pass = true;
  long long n_maps = 0;
  long long n_nps = 0;
  std::string detail;
};

// gamma ∘ N = id, N ∘ gamma = id, and |natural maps| = |nps| on the
// truncation i+j <= 3.
AppendixReport appendix_roundtrip(const Fin2Category& a, const Fin2Category& b);

// gamma alone, for unit tests: read a natural family into a Nps.
Nps gamma_of_family(const GauntNerveProvider& pa, const GauntNerveProvider& pb,
                    const std::vector<std::vector<int>>& family);

}  // namespace twocat
