#include "doctest.h"
#include "twocat/fincat.hpp"

#include <functional>
#include <set>

using namespace twocat;

TEST_CASE("ordinal categories") {
  FinCategory c = ordinal_category(2);
  CHECK(c.objects() == 3);
  CHECK(c.morphisms() == 6);
  CHECK(c.validate().empty());
  CHECK(ordinal_category(0).morphisms() == 1);
}

TEST_CASE("chaotic categories") {
  FinCategory c = chaotic_category(2);
  CHECK(c.objects() == 3);
  CHECK(c.morphisms() == 9);
  CHECK(c.validate().empty());
  for (int f = 0; f < c.morphisms(); ++f) CHECK(c.is_iso(f));
  CHECK(pi0_count(c) == 1);
}

TEST_CASE("products and coproducts") {
  FinCategory p = product_category(ordinal_category(1), chaotic_category(1));
  CHECK(p.objects() == 4);
  CHECK(p.morphisms() == 12);
  CHECK(p.validate().empty());
  FinCategory s = coproduct_category(ordinal_category(1), ordinal_category(0));
  CHECK(s.objects() == 3);
  CHECK(s.morphisms() == 4);
  CHECK(s.validate().empty());
  CHECK(pi0_count(s) == 2);
}

TEST_CASE("walking retract laws") {
  FinCategory r = walking_retract();
  CHECK(r.objects() == 2);
  CHECK(r.morphisms() == 5);
  CHECK(r.validate().empty());
  // f: 2, g: 3; fg = id_b, gf = e idempotent
  CHECK(r.compose(2, 3) == 1);
  CHECK(r.compose(3, 2) == 4);
  CHECK(r.compose(1, 1) == 1);
  CHECK_FALSE(r.is_iso(2));
}

TEST_CASE("validator reports corruption with witness") {
  FinCategory c = ordinal_category(1);
  // break associativity/unit by redirecting a composite
  // ordinal 1 morphisms: (0<=0)=0,(0<=1)=1,(1<=1)=2
  std::vector<Mor> mor = {{0, 0}, {0, 1}, {1, 1}};
  std::vector<int> comp(9, -1);
  auto set = [&](int f, int g, int v) { comp[f * 3 + g] = v; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  FinCategory good(2, mor, {0, 2}, comp);
  CHECK(good.validate().empty());
  set(0, 1, 0);  // now has wrong endpoints
  FinCategory bad(2, mor, {0, 2}, comp);
  auto report = bad.validate();
  CHECK_FALSE(report.empty());
  CHECK(report[0].find("(0,1)") != std::string::npos);
}

TEST_CASE("functor enumeration counts") {
  FinCategory ord1 = ordinal_category(1);
  CHECK(enumerate_functors(ord1, ord1).size() == 3);
  FinCategory iso = chaotic_category(1);
  CHECK(enumerate_functors(iso, ord1).size() == 2);  // isos land on identities

  // oracle: raw assignment brute force over object and morphism images
  FinCategory big = product_category(ord1, iso);
  auto oracle = [&](const FinCategory& c, const FinCategory& d) {
    long long count = 0;
    std::vector<int> obj(c.objects()), mor(c.morphisms());
    std::function<bool(int)> morok;
    std::function<void(int)> gom = [&](int m) {
      if (m == c.morphisms()) {
        CatFunctor f{obj, mor};
        if (is_functor(c, d, f)) ++count;
        return;
      }
      for (int v = 0; v < d.morphisms(); ++v) {
        mor[m] = v;
        gom(m + 1);
      }
    };
    std::function<void(int)> goo = [&](int o) {
      if (o == c.objects()) {
        gom(0);
        return;
      }
      for (int v = 0; v < d.objects(); ++v) {
        obj[o] = v;
        goo(o + 1);
      }
    };
    goo(0);
    return count;
  };
  // small enough for the raw oracle: |ord1 morphisms| = 3 over a 12-morphism domain is too big,
  // so check the derived example the other way around
  CHECK(enumerate_functors(big, ord1).size() == static_cast<size_t>(oracle(big, ord1)));
  CHECK(enumerate_functors(big, ord1).size() == 3);
}

TEST_CASE("functors are lawful and deterministic") {
  FinCategory c = chaotic_category(1), d = chaotic_category(2);
  auto fs = enumerate_functors(c, d);
  std::set<CatFunctor> seen(fs.begin(), fs.end());
  CHECK(seen.size() == fs.size());
  for (const auto& f : fs) CHECK(is_functor(c, d, f));
  CHECK(fs.size() == 9);  // determined by object images
  auto again = enumerate_functors(c, d);
  CHECK(fs == again);
}

TEST_CASE("ordinal and chaotic operator functors") {
  CatFunctor d1 = ordinal_functor({0, 2}, 1, 2);
  FinCategory o1 = ordinal_category(1), o2 = ordinal_category(2);
  CHECK(is_functor(o1, o2, d1));
  CatFunctor b = chaotic_functor({1, 0}, 1, 1);
  FinCategory k1 = chaotic_category(1);
  CHECK(is_functor(k1, k1, b));
}
