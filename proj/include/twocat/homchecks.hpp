#pragma once

#include <string>
#include <vector>

#include "twocat/transform.hpp"

namespace twocat {

// [B,D]_ic computed two ways: as the icon functor 2-category and as the
// cellwise pullback of [B,D]_lax over the chaotic base; true iff the
// canonical comparison is an isomorphism of 2-categories.
bool check_icon_pullback(const Fin2Category& b, const Fin2Category& d, std::string* detail = nullptr);

// 2Cat(A, [B,D]_flavor), standing in for 2Cat(A tensor B, D) without
// constructing the tensor.
struct VirtualTensorHom {
  FunctorTwoCategory fc;
  std::vector<TwoFunctor> elements;  // 2-functors A -> [B,D]_flavor
};
VirtualTensorHom virtual_tensor_hom(const Fin2Category& a, const Fin2Category& b, const Fin2Category& d,
                                    Flavor fl);

// Lax and pseudo virtual tensor homs coincide when every 1-cell of A is an
// equivalence. Reports a precondition violation instead of silently passing.
struct ReplacePseudoResult {
  bool precondition_ok = true;
  bool pass = true;
  std::string detail;
};
ReplacePseudoResult check_replace_pseudo(const Fin2Category& a, const Fin2Category& b, const Fin2Category& d);

// Corepresented pushout checks. The span is either the suspension cylinder
//     coprod_{i+1} A  ->  A (x) [i]      (realized as 2Cat(A, [[i],D]_lax))
//     coprod_{i+1} A  ->  coprod_{i+1} [0]
// with candidate apex Sigma_i (pi0)_* A, or the degenerate span with both
// legs the identity of a base.
struct PushoutSpec {
  enum Kind { Suspension, Degenerate } kind = Suspension;
  const Fin2Category* a = nullptr;  // the 2-category A (Suspension)
  int i = 1;                        // cylinder length
  const Fin2Category* base = nullptr;  // Degenerate: apex = base
};

struct PushoutProbeResult {
  std::string probe;
  bool pass = true;
  long long apex_count = 0;
  long long pullback_count = 0;
  std::string detail;
};

std::vector<PushoutProbeResult> check_corepresented_pushout(const PushoutSpec& spec,
                                                            const std::vector<Fin2Category>& probes);

// The candidate apex used by the suspension spec.
Fin2Category suspension_pushout_apex(const Fin2Category& a, int i);

}  // namespace twocat
