#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "twocat/classify.hpp"
#include "twocat/fin2cat.hpp"

namespace twocat {

// Simplicial level provider interface: finite level sets with total face and
// degeneracy actions, plus a marking multiplicity (0 = unmarked). Levels are
// served up to max_dim(); asking beyond throws.
class LevelProvider {
 public:
  virtual ~LevelProvider() = default;
  virtual int max_dim() const = 0;
  virtual int size(int n) = 0;
  virtual int face(int n, int i, int x) = 0;    // d_i: X_n -> X_{n-1}
  virtual int degen(int n, int i, int x) = 0;   // s_i: X_n -> X_{n+1}
  virtual int marking(int n, int x) = 0;        // multiplicity
};

// The Duskin nerve of a finite 2-category:
//   level 0: objects, level 1: 1-cells,
//   level 2: (a, b, phi) with phi: c => b∘a an arbitrary 2-cell,
//   level 3: quadruples of 2-simplices satisfying the pasting equality,
//   level n>=4: compatible boundary tuples (3-coskeletal extension).
class DuskinLevels {
 public:
  explicit DuskinLevels(const Fin2Category& d, int max_dim = 6);

  const Fin2Category& category() const { return *d_; }
  int max_dim() const { return max_dim_; }
  int size(int n);
  int face(int n, int i, int x);
  int degen(int n, int i, int x);
  bool is_degenerate(int n, int x);

  struct Two {
    int a, b, phi;  // phi: c => b∘a, c = two_src1(phi)
  };
  const Two& two(int x) { return level2_[x]; }
  int find_two(int a, int b, int phi);
  // faces of a level-n element for n >= 3 (indices into level n-1)
  const std::vector<int>& boundary(int n, int x);

 private:
  void ensure(int n);
  mutable std::recursive_mutex mu_;
  const Fin2Category* d_;
  int max_dim_;
  std::vector<char> built_;
  std::vector<Two> level2_;
  std::map<std::tuple<int, int, int>, int> level2_index_;
  // levels >= 3: element = its faces in level n-1
  std::vector<std::vector<std::vector<int>>> high_;          // [n-3] -> elements
  std::vector<std::map<std::vector<int>, int>> high_index_;  // tuple -> id
  std::vector<int> sizes_;
  std::vector<std::vector<char>> degenerate_;
};

// N^{tDelta}: Duskin nerve with multiple markings. Dimension-1 markings
// carry adjoint-completion witnesses, dimension 2 marks invertible fillers,
// everything above is marked once. Rules can be masked for the negative
// controls; degenerate simplices always stay marked.
class TdeltaNerve : public LevelProvider {
 public:
  static constexpr unsigned kRule1 = 1, kRule2 = 2, kRuleHigh = 4;
  TdeltaNerve(const Fin2Category& d, int max_dim = 6, unsigned rule_mask = kRule1 | kRule2 | kRuleHigh);
  int max_dim() const override { return levels_->max_dim(); }
  int size(int n) override { return levels_->size(n); }
  int face(int n, int i, int x) override { return levels_->face(n, i, x); }
  int degen(int n, int i, int x) override { return levels_->degen(n, i, x); }
  int marking(int n, int x) override;
  DuskinLevels& levels() { return *levels_; }
  const std::vector<AdjointCompletion>& witnesses(int one_cell) const { return completions_[one_cell]; }

 private:
  std::shared_ptr<DuskinLevels> levels_;
  unsigned mask_;
  std::vector<std::vector<AdjointCompletion>> completions_;
};

// N^{sc}: Duskin nerve with a scaling, i.e. markings in dimension 2 only
// (the 2-simplices with invertible filler).
class ScaledNerve : public LevelProvider {
 public:
  explicit ScaledNerve(const Fin2Category& d, int max_dim = 6);
  int max_dim() const override { return levels_->max_dim(); }
  int size(int n) override { return levels_->size(n); }
  int face(int n, int i, int x) override { return levels_->face(n, i, x); }
  int degen(int n, int i, int x) override { return levels_->degen(n, i, x); }
  int marking(int n, int x) override;
  DuskinLevels& levels() { return *levels_; }

 private:
  std::shared_ptr<DuskinLevels> levels_;
};

// reflect: collapse multiplicities to 0/1 (the epi-mono factorization of the
// structure map).
class ReflectedProvider : public LevelProvider {
 public:
  explicit ReflectedProvider(LevelProvider& base) : base_(&base) {}
  int max_dim() const override { return base_->max_dim(); }
  int size(int n) override { return base_->size(n); }
  int face(int n, int i, int x) override { return base_->face(n, i, x); }
  int degen(int n, int i, int x) override { return base_->degen(n, i, x); }
  int marking(int n, int x) override { return base_->marking(n, x) > 0 ? 1 : 0; }

 private:
  LevelProvider* base_;
};

// N^{sc} D = U Refl N^{tDelta} D, checked bit-exactly through dimension n_max.
bool check_within_simplicial(const Fin2Category& d, int n_max, std::string* detail = nullptr);

// All generating simplicial identities, exhaustively on levels <= n_max.
std::vector<std::string> check_simplicial_identities(LevelProvider& x, int n_max);

}  // namespace twocat
