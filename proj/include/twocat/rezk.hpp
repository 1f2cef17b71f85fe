#pragma once

#include <map>
#include <string>
#include <vector>

#include "twocat/natmaps.hpp"
#include "twocat/twofunctor.hpp"

namespace twocat {

// Rezk nerve of a finite category: N^R_{j,k} C = Cat([j] x ~[k], C), with
// both simplicial operator actions by precomposition.
class RezkNerve {
 public:
  RezkNerve(const FinCategory& c, int j_max, int k_max);
  int j_max() const { return j_max_; }
  int k_max() const { return k_max_; }
  const FinCategory& domain(int j, int k) const;  // [j] x ~[k]
  const std::vector<CatFunctor>& level(int j, int k) const;
  int size(int j, int k) const { return static_cast<int>(level(j, k).size()); }
  // action of (alpha, beta): [j'] x ~[k'] -> [j] x ~[k] on an element of
  // level (j,k); result lives in level (j',k')
  int act(int j, int k, int x, const std::vector<int>& alpha, const std::vector<int>& beta, int jp,
          int kp) const;

 private:
  const FinCategory* c_;
  int j_max_, k_max_;
  std::vector<FinCategory> domains_;
  std::vector<std::vector<CatFunctor>> levels_;
};

std::vector<std::string> check_rezk_identities(const RezkNerve& n, int j_max, int k_max);

// Precategory nerve PN of a 2-category: level (i,j,k) is the set of chains
// (d_0,...,d_i; F_1,...,F_i) with F_s: [j] x ~[k] -> hom(d_{s-1}, d_s).
// Inner i-faces compose adjacent functors through hcomp, outer faces drop,
// degeneracies insert constant identity functors; j/k operators act by
// precomposition inside each slot.
class PrecatNerve {
 public:
  struct Elem {
    std::vector<int> objs;  // i+1 objects
    std::vector<int> fns;   // i functor indices into homfuns
    bool operator==(const Elem&) const = default;
    bool operator<(const Elem& o) const { return objs != o.objs ? objs < o.objs : fns < o.fns; }
  };

  PrecatNerve(const Fin2Category& d, int i_max, int j_max, int k_max);
  const Fin2Category& category() const { return *d_; }
  int i_max() const { return i_max_; }
  int j_max() const { return j_max_; }
  int k_max() const { return k_max_; }
  const FinCategory& shape(int j, int k) const;  // [j] x ~[k]
  const std::vector<CatFunctor>& homfuns(int j, int k, int a, int b) const;
  const std::vector<Elem>& level(int i, int j, int k) const;
  int size(int i, int j, int k) const { return static_cast<int>(level(i, j, k).size()); }
  int index_of(int i, int j, int k, const Elem& e) const;

  // dir: 0 = i-direction, 1 = j-direction, 2 = k-direction
  int face(int dir, int s, int i, int j, int k, int x) const;
  int degen(int dir, int s, int i, int j, int k, int x) const;

  bool check_segal(int i, int j, int k, std::string* detail = nullptr) const;

 private:
  const Fin2Category* d_;
  int i_max_, j_max_, k_max_;
  std::vector<FinCategory> shapes_;                       // (j,k)
  std::vector<FinCategory> ords_, chas_;
  std::vector<std::vector<std::vector<CatFunctor>>> hf_;  // (j,k) -> (a*n+b) -> functors
  std::vector<std::vector<Elem>> levels_;                 // (i,j,k)
  // rank support: levels are lexicographic in (objs, fns); offset per objs
  std::vector<std::map<std::vector<int>, int>> offsets_;
  int lkey(int i, int j, int k) const;
  int skey(int j, int k) const;
  // cached tables
  // (dir, s, is_face, skey, a*n+b) -> per-functor index map into the target hom list
  mutable std::map<std::tuple<int, int, int, int, int>, std::vector<int>> restrict_;
  // (skey, a*n+b, c) -> composition table |funs(a,b)| x |funs(b,c)| -> funs(a,c)
  mutable std::map<std::tuple<int, int, int>, std::vector<int>> comptab_;
  mutable std::map<std::pair<int, int>, int> constid_;  // (skey, a)
  const std::vector<int>& restriction(int dir, int s, bool is_face, int j, int k, int a, int b) const;
  const std::vector<int>& comp_table(int j, int k, int a, int b, int c) const;
  int const_id_index(int j, int k, int a) const;
};

// All generating simplicial identities in the three directions plus the
// cross-direction commutations, exhaustively on the grid.
std::vector<std::string> check_precat_identities(const PrecatNerve& n, int i_max, int j_max, int k_max);

struct PrecatMapsReport {
  bool pass = true;
  long long n_maps = 0;
  long long n_functors = 0;
  std::string detail;
};

// Operator-natural maps PN(A) -> PN(B) on the truncation i <= 2, j,k <= 1
// correspond exactly to strict 2-functors A -> B.
PrecatMapsReport check_precat_maps(const Fin2Category& a, const Fin2Category& b);

}  // namespace twocat
