#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twocat/duskin.hpp"

namespace twocat {

// A finite marked (or scaled) simplicial complex, stored by nondegenerate
// simplices. A face may be a degenerate simplex: it is recorded as a
// monotone surjection applied to a nondegenerate base.
struct MarkedComplex {
  struct FaceRef {
    std::vector<int> surj;  // monotone surjection [dim-1] ->> [base dim]; identity if sizes match
    int base = -1;          // nondegenerate simplex id
  };
  struct Cell {
    int dim = 0;
    std::vector<FaceRef> faces;  // dim+1 entries for dim >= 1
    bool marked = false;
    std::string label;
  };
  std::vector<Cell> cells;
  std::vector<std::vector<int>> by_dim;

  int add(int dim, std::vector<FaceRef> faces, bool marked, std::string label);
  int dim_top() const { return static_cast<int>(by_dim.size()) - 1; }
  std::vector<std::string> validate() const;  // face well-formedness + degenerate marking sanity
};

// An inclusion of marked complexes: domain cell id -> codomain cell id,
// levelwise injective and marking-preserving.
struct GeneratorMap {
  MarkedComplex domain;
  MarkedComplex codomain;
  std::vector<int> inject;
  std::string name;
  std::vector<std::string> validate() const;
};

enum class GeneratorFamily {
  ComplicialInnerHorn,   // (1): Lambda^k[m] -> Delta^k[m]
  ComplicialThinness,    // (2): Delta^k[m]' -> Delta^k[m]''
  Triviality,            // (3): Delta[m] -> Delta[m]_t
  ComplicialSaturation,  // (4): Delta[3]_eq * Delta[m] -> Delta[3]_# * Delta[m]
  ScaledInnerHorn,
  ScaledOuterHorn,
  ScaledSaturation,
};

GeneratorMap build_generator(GeneratorFamily family, int m, int k = 0);

// Marked join. A join simplex is marked iff either contributing factor is
// marked; the m = -1 convention X * (empty) = X holds definitionally, and
// Delta[0] * Delta[0] comes out as the unmarked Delta[1].
MarkedComplex marked_join(const MarkedComplex& x, const MarkedComplex& y);

MarkedComplex standard_simplex(int m);            // minimally marked
MarkedComplex delta3_eq();                        // marks dims >= 2 plus the edges [0,2], [1,3]
MarkedComplex delta3_sharp();                     // all positive dimensions marked

// A simplicial map K -> X by images of nondegenerate cells.
using ComplexMap = std::vector<int>;

std::vector<ComplexMap> enumerate_maps(const MarkedComplex& k, LevelProvider& x);

struct RlpResult {
  bool pass = true;
  long long maps_checked = 0;
  std::optional<ComplexMap> witness;  // a non-extendable map on failure
};

RlpResult has_rlp(const GeneratorMap& gen, LevelProvider& x);

struct FibrancyLine {
  std::string generator;
  bool pass = true;
  long long maps = 0;
};
enum class NerveMode { Tdelta, Scaled };

std::vector<FibrancyLine> fibrancy_report(const Fin2Category& d, int m_max, NerveMode mode,
                                          unsigned tdelta_rule_mask = TdeltaNerve::kRule1 |
                                                                      TdeltaNerve::kRule2 |
                                                                      TdeltaNerve::kRuleHigh);

}  // namespace twocat
