#pragma once

#include <string>
#include <vector>

namespace twocat {

// A truncated presheaf of finite sets: a list of levels with generating
// face/degeneracy maps between them. Two presheaves over the same index
// shape share generator ids positionally.
struct TruncPresheaf {
  struct Gen {
    int from = 0, to = 0;        // level indices
    bool is_face = false;        // faces point to lower total degree
    std::vector<int> map;        // elementwise action
  };
  std::vector<std::string> level_names;
  std::vector<int> sizes;
  std::vector<Gen> gens;
  // processing order: every face generator must point from a later level to
  // an earlier one, every degeneracy from earlier to later
  std::vector<int> order;
};

// All families f_L: A_L -> B_L commuting with every generator, in
// deterministic order. A and B must have the same level/generator shape.
std::vector<std::vector<std::vector<int>>> enumerate_natural_maps(const TruncPresheaf& a,
                                                                  const TruncPresheaf& b);

bool is_natural_map(const TruncPresheaf& a, const TruncPresheaf& b,
                    const std::vector<std::vector<int>>& f);

}  // namespace twocat
