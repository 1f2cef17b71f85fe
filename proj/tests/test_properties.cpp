// Property-style sweeps over the whole default corpus: the module-level
// invariants that are cheap enough to run everywhere, plus the duality
// count property checked by double enumeration.

#include "doctest.h"
#include "twocat/complicial.hpp"
#include "twocat/corpus.hpp"
#include "twocat/homchecks.hpp"
#include "twocat/theta2.hpp"

using namespace twocat;

TEST_CASE("every corpus member is lawful") {
  for (const auto& d : default_corpus()) {
    CAPTURE(d.name());
    CHECK(d.validate().empty());
  }
}

TEST_CASE("corepresented cell counts across the corpus") {
  Fin2Category pt = terminal_two_category();
  Fin2Category arrow = theta_category(1, {0});
  Fin2Category cell = theta_category(1, {1});
  for (const auto& d : default_corpus()) {
    CAPTURE(d.name());
    CHECK(static_cast<int>(enumerate_two_functors(pt, d).size()) == d.objects());
    CHECK(static_cast<int>(enumerate_two_functors(arrow, d).size()) == d.one_cells());
    CHECK(static_cast<int>(enumerate_two_functors(cell, d).size()) == d.two_cells());
  }
}

TEST_CASE("classification on gaunt members is trivial") {
  for (const auto& d : default_corpus()) {
    if (!is_gaunt(d)) continue;
    CAPTURE(d.name());
    Classification c = classify_cells(d);
    for (int x : c.two_isomorphisms) CHECK(d.is_id2(x));
    for (int f : c.one_equivalences) CHECK(d.is_id1(f));
  }
}

TEST_CASE("triangles of gaunt members are composable pairs") {
  for (const auto& d : default_corpus()) {
    if (!is_gaunt(d)) continue;
    CAPTURE(d.name());
    int pairs = static_cast<int>(d.composable_pairs().size());
    auto ts = triangles(d);
    CHECK(static_cast<int>(ts.size()) == pairs);
    for (const auto& t : ts) {
      CHECK(t.h == d.compose1(t.f, t.g));
      CHECK(d.is_id2(t.phi));
    }
  }
}

TEST_CASE("column-reversal duality by double enumeration") {
  // reversing the object order of a theta reverses its column list; the
  // count equality below is established by two independent enumerations
  auto rev = [](const std::vector<int>& js) { return std::vector<int>(js.rbegin(), js.rend()); };
  std::vector<std::vector<int>> shapes = {{1, 0}, {2, 1}, {1, 1}, {0, 2}};
  std::vector<std::vector<int>> targets = {{1, 0}, {2, 0}, {1, 2}};
  for (const auto& s : shapes)
    for (const auto& t : targets) {
      long long lhs = static_cast<long long>(
          enumerate_two_functors(theta_category(2, s), theta_category(2, t)).size());
      long long rhs = static_cast<long long>(
          enumerate_two_functors(theta_category(2, rev(s)), theta_category(2, rev(t))).size());
      CAPTURE(s[0]);
      CAPTURE(t[0]);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("transformation flavors nest across sampled corpus pairs") {
  std::vector<Fin2Category> bs = {terminal_two_category(), theta_category(1, {0}), theta_category(1, {1})};
  for (const auto& b : bs)
    for (const auto& d : default_corpus()) {
      if (d.one_cells() > 12) continue;  // keep the sweep quick
      auto fs = enumerate_two_functors(b, d);
      for (const auto& f : fs)
        for (const auto& g : fs) {
          auto lax = enumerate_transformations(b, d, f, g, Flavor::Lax);
          auto ps = enumerate_transformations(b, d, f, g, Flavor::Pseudo);
          auto st = enumerate_transformations(b, d, f, g, Flavor::Strict);
          CHECK(st.size() <= ps.size());
          CHECK(ps.size() <= lax.size());
          size_t j = 0;
          for (const auto& s : ps) {
            while (j < lax.size() && !(lax[j] == s)) ++j;
            CHECK(j < lax.size());
          }
        }
    }
}

TEST_CASE("degenerate simplices stay marked in every marked provider") {
  for (const auto& d : default_corpus()) {
    if (d.one_cells() > 12) continue;
    CAPTURE(d.name());
    TdeltaNerve td(d, 4);
    for (int n = 1; n <= 4; ++n)
      for (int x = 0; x < td.size(n); ++x)
        if (td.levels().is_degenerate(n, x)) CHECK(td.marking(n, x) >= 1);
    ScaledNerve sc(d, 3);
    for (int x = 0; x < sc.size(2); ++x)
      if (sc.levels().is_degenerate(2, x)) CHECK(sc.marking(2, x) == 1);
  }
}

TEST_CASE("built generators are marking-preserving inclusions") {
  std::vector<GeneratorMap> gens;
  for (int m = 2; m <= 3; ++m)
    for (int k = 1; k < m; ++k) {
      gens.push_back(build_generator(GeneratorFamily::ComplicialInnerHorn, m, k));
      gens.push_back(build_generator(GeneratorFamily::ComplicialThinness, m, k));
      gens.push_back(build_generator(GeneratorFamily::ScaledInnerHorn, m, k));
    }
  gens.push_back(build_generator(GeneratorFamily::Triviality, 3));
  gens.push_back(build_generator(GeneratorFamily::ComplicialSaturation, -1));
  gens.push_back(build_generator(GeneratorFamily::ComplicialSaturation, 0));
  gens.push_back(build_generator(GeneratorFamily::ComplicialSaturation, 1));
  gens.push_back(build_generator(GeneratorFamily::ScaledOuterHorn, 3));
  gens.push_back(build_generator(GeneratorFamily::ScaledSaturation, 0));
  for (const auto& g : gens) {
    CAPTURE(g.name);
    CHECK(g.validate().empty());
  }
}

TEST_CASE("icon pullback across the corpus for small domains") {
  std::vector<Fin2Category> bs = {terminal_two_category(), theta_category(1, {0}), theta_category(1, {1})};
  for (const auto& b : bs)
    for (const auto& d : default_corpus()) {
      if (d.one_cells() > 12) continue;
      std::string why;
      CAPTURE(d.name());
      CHECK_MESSAGE(check_icon_pullback(b, d, &why), why);
    }
}
