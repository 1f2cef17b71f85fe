#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twocat/fincat.hpp"

namespace twocat {

// A finite 2-category. Hom-categories are FinCategories indexed by ordered
// object pairs; horizontal composition is a pair of dense tables per
// composable object triple:
//   hcomp1(a,b,c): Ob hom(a,b) x Ob hom(b,c)  -> Ob hom(a,c)
//   hcomp2(a,b,c): Mor hom(a,b) x Mor hom(b,c) -> Mor hom(a,c)
// Requiring (hcomp1, hcomp2) to be a functor out of the product category
// encodes the interchange law.
//
// Cells also carry global ids: 1-cells are the objects of all hom-categories
// in (a,b)-lexicographic order, 2-cells the morphisms likewise. compose1(f,g)
// and hcomp(x,y) take the (a->b)-cell first: result lives over a->c.
class Fin2Category {
 public:
  struct Data {
    int n_objects = 0;
    std::vector<FinCategory> hom;           // n*n, row-major (a*n+b)
    std::vector<int> id1;                   // per object, object index in hom(a,a)
    std::vector<std::vector<int>> hcomp1;   // per (a*n+b)*n+c, row-major [f * |Ob hom(b,c)| + g]
    std::vector<std::vector<int>> hcomp2;   // same, on morphisms
  };

  Fin2Category() = default;
  explicit Fin2Category(Data d, std::string name = "");

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int objects() const { return n_; }
  const FinCategory& hom(int a, int b) const { return data_.hom[a * n_ + b]; }

  // --- global 1-cells ---
  int one_cells() const { return static_cast<int>(one_.size()); }
  int one_cell_id(int a, int b, int local) const { return one_offset_[a * n_ + b] + local; }
  int one_src(int f) const { return one_[f].src; }
  int one_tgt(int f) const { return one_[f].tgt; }
  int one_local(int f) const { return one_[f].local; }
  int id1(int a) const { return one_cell_id(a, a, data_.id1[a]); }
  bool is_id1(int f) const { return one_src(f) == one_tgt(f) && one_local(f) == data_.id1[one_src(f)]; }
  int compose1(int f, int g) const;  // g∘f, requires one_tgt(f) == one_src(g)

  // --- global 2-cells ---
  int two_cells() const { return static_cast<int>(two_.size()); }
  int two_cell_id(int a, int b, int local) const { return two_offset_[a * n_ + b] + local; }
  int two_src_obj(int x) const { return two_[x].src; }
  int two_tgt_obj(int x) const { return two_[x].tgt; }
  int two_local(int x) const { return two_[x].local; }
  int two_src1(int x) const;  // global 1-cell
  int two_tgt1(int x) const;
  int id2(int f) const;       // identity 2-cell on 1-cell f
  bool is_id2(int x) const { return id2(two_src1(x)) == x; }
  int vcomp(int x, int y) const;  // y∘x vertically, requires two_tgt1(x) == two_src1(y)
  int hcomp(int x, int y) const;  // y⋆x horizontally, x over a->b, y over b->c
  bool two_invertible(int x) const;
  std::optional<int> two_inverse(int x) const;

  // whiskering: k∘(-) and (-)∘k
  int whisker_post(int k, int x) const { return hcomp(x, id2(k)); }
  int whisker_pre(int x, int k) const { return hcomp(id2(k), x); }

  // composable 1-cell pairs (f,g) with one_tgt(f) == one_src(g), ascending
  const std::vector<std::pair<int, int>>& composable_pairs() const { return pairs_; }
  int pair_index(int f, int g) const { return pair_index_[f * one_cells() + g]; }

  // One entry per violated 2-category law, with a witness tuple.
  std::vector<std::string> validate() const;
  bool valid() const { return validate().empty(); }

  const Data& raw() const { return data_; }
  Data& raw_mutable() { return data_; }
  void rebuild_indexes();

 private:
  struct Cell {
    int src, tgt, local;
  };
  std::string name_;
  int n_ = 0;
  Data data_;
  std::vector<Cell> one_, two_;
  std::vector<int> one_offset_, two_offset_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_index_;
};

// --- constructions ---

// C as a 2-category with only identity 2-cells.
Fin2Category discrete_two_category(const FinCategory& c);
// Chain 2-category: objects 0..i, hom(a,b) the product of steps (a..b],
// horizontal composition by tuple concatenation.
Fin2Category chain_two_category(const std::vector<FinCategory>& steps);
Fin2Category theta_category(int i, const std::vector<int>& js);  // [i|j_1...j_i]
Fin2Category sigma(const FinCategory& c);                        // 2-point suspension
Fin2Category sigma_i(int i, const FinCategory& c);               // (i+1)-point suspension
Fin2Category walking_two_cell();                                 // Σ[1] = [1|1]
Fin2Category walking_two_iso();                                  // ΣI = Σ(~[1])
Fin2Category ch_star(const FinCategory& c);  // one 2-cell between any parallel 1-cells
Fin2Category terminal_two_category();        // [0]
Fin2Category coproduct_two_category(const Fin2Category& a, const Fin2Category& b);
Fin2Category product_two_category(const Fin2Category& a, const Fin2Category& b);
Fin2Category power_two_category(const Fin2Category& a, int k);

// Truncations: underlying category and the pi0 hom-collapse. The optional
// out-parameter maps each global 1-cell to its class morphism.
FinCategory ob_star(const Fin2Category& d);
FinCategory pi0_star(const Fin2Category& d, std::vector<int>* one_cell_class = nullptr);

}  // namespace twocat
