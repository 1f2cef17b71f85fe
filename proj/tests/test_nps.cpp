#include "doctest.h"
#include "twocat/nps.hpp"
#include "twocat/theta2.hpp"

#include <functional>
#include <set>

using namespace twocat;

TEST_CASE("strict 2-functors are normal pseudofunctors") {
  Fin2Category a = theta_category(2, {1, 1});
  Fin2Category b = walking_two_iso();
  for (const TwoFunctor& f : enumerate_two_functors(a, b)) {
    Nps n = nps_from_strict(a, b, f);
    CHECK(validate_nps(a, b, n).empty());
    CHECK(nps_is_strict(a, b, n));
  }
  Fin2Category iso = walking_two_iso();
  Nps idn = nps_from_strict(iso, iso, identity_two_functor(iso));
  CHECK(validate_nps(iso, iso, idn).empty());
}

TEST_CASE("corrupting a compositor entry trips axiom (b) or (f)") {
  Fin2Category a = discrete_two_category(ordinal_category(2));
  Fin2Category b = ch_star(walking_retract());
  auto all = enumerate_nps(a, b);
  REQUIRE(!all.empty());
  bool tripped = false;
  for (const Nps& n : all) {
    for (size_t p = 0; p < n.compositor.size(); ++p) {
      auto [ff, gg] = a.composable_pairs()[p];
      if (a.is_id1(ff) || a.is_id1(gg)) continue;
      Nps bad = n;
      for (int v = 0; v < b.two_cells(); ++v) {
        if (v == n.compositor[p]) continue;
        bad.compositor[p] = v;
        auto report = validate_nps(a, b, bad);
        REQUIRE(!report.empty());
        bool named = false;
        for (const auto& line : report)
          if (line.find("(b)") != std::string::npos || line.find("(c)") != std::string::npos ||
              line.find("(e)") != std::string::npos || line.find("(f)") != std::string::npos)
            named = true;
        CHECK(named);
        tripped = true;
        break;
      }
      if (tripped) break;
    }
    if (tripped) break;
  }
  CHECK(tripped);
}

TEST_CASE("gaunt targets: nps coincide with strict functors") {
  Fin2Category th = theta_category(2, {1, 0});
  for (const Fin2Category& a : {theta_category(1, {1}), discrete_two_category(ordinal_category(2))}) {
    auto naps = enumerate_nps(th, a);
    auto strict = enumerate_two_functors(th, a);
    CHECK(naps.size() == strict.size());
    std::vector<TwoFunctor> stripped;
    for (const Nps& n : naps) {
      CHECK(nps_is_strict(th, a, n));
      stripped.push_back(nps_strip(n));
    }
    std::sort(stripped.begin(), stripped.end());
    CHECK(stripped == strict);
  }
}

TEST_CASE("enumeration against raw table oracle") {
  // (discrete(ordinal 1), walking 2-iso): exhaustive oracle over all four
  // tables, small enough to run raw
  Fin2Category a = discrete_two_category(ordinal_category(1));
  Fin2Category b = walking_two_iso();
  long long raw = 0;
  const auto& pairs = a.composable_pairs();
  std::function<void(Nps&, size_t)> go_comp = [&](Nps& n, size_t p) {
    if (p == pairs.size()) {
      if (is_nps(a, b, n)) ++raw;
      return;
    }
    for (int v = 0; v < b.two_cells(); ++v) {
      n.compositor[p] = v;
      go_comp(n, p + 1);
    }
  };
  std::function<void(Nps&, int)> go_two = [&](Nps& n, int x) {
    if (x == a.two_cells()) {
      n.compositor.assign(pairs.size(), -1);
      go_comp(n, 0);
      return;
    }
    for (int v = 0; v < b.two_cells(); ++v) {
      n.two[x] = v;
      go_two(n, x + 1);
    }
  };
  std::function<void(Nps&, int)> go_one = [&](Nps& n, int g) {
    if (g == a.one_cells()) {
      go_two(n, 0);
      return;
    }
    for (int v = 0; v < b.one_cells(); ++v) {
      if (b.one_src(v) != n.obj[a.one_src(g)] || b.one_tgt(v) != n.obj[a.one_tgt(g)]) continue;
      n.one[g] = v;
      go_one(n, g + 1);
    }
  };
  std::function<void(Nps&, int)> go_obj = [&](Nps& n, int p) {
    if (p == a.objects()) {
      go_one(n, 0);
      return;
    }
    for (int v = 0; v < b.objects(); ++v) {
      n.obj[p] = v;
      go_obj(n, p + 1);
    }
  };
  Nps n;
  n.obj.assign(a.objects(), -1);
  n.one.assign(a.one_cells(), -1);
  n.two.assign(a.two_cells(), -1);
  go_obj(n, 0);

  auto fast = enumerate_nps(a, b);
  CHECK(static_cast<long long>(fast.size()) == raw);
  std::set<Nps> uniq(fast.begin(), fast.end());
  CHECK(uniq.size() == fast.size());
  for (const Nps& f : fast) CHECK(is_nps(a, b, f));
}

TEST_CASE("point domain corepresents objects") {
  Fin2Category pt = terminal_two_category();
  for (const Fin2Category& b : {walking_two_iso(), ch_star(walking_retract())})
    CHECK(static_cast<int>(enumerate_nps(pt, b).size()) == b.objects());
}

TEST_CASE("strict sublist of the nps enumeration") {
  Fin2Category a = discrete_two_category(ordinal_category(2));
  Fin2Category b = walking_two_iso();
  auto naps = enumerate_nps(a, b);
  std::vector<TwoFunctor> strict_from_nps;
  for (const Nps& n : naps)
    if (nps_is_strict(a, b, n)) strict_from_nps.push_back(nps_strip(n));
  std::sort(strict_from_nps.begin(), strict_from_nps.end());
  CHECK(strict_from_nps == enumerate_two_functors(a, b));
  // normality is definitional: F(id) = id on 1- and 2-cells
  for (const Nps& n : naps) {
    for (int p = 0; p < a.objects(); ++p) CHECK(n.one[a.id1(p)] == b.id1(n.obj[p]));
    for (int g = 0; g < a.one_cells(); ++g) CHECK(n.two[a.id2(g)] == b.id2(n.one[g]));
  }
}

TEST_CASE("extend_compositor") {
  Fin2Category a = discrete_two_category(ordinal_category(3));
  Fin2Category b = ch_star(walking_retract());
  auto naps = enumerate_nps(a, b);
  REQUIRE(!naps.empty());
  // pick three composable non-identity 1-cells 0->1->2->3
  int f01 = a.one_cell_id(0, 1, 0), f12 = a.one_cell_id(1, 2, 0), f23 = a.one_cell_id(2, 3, 0);
  for (const Nps& n : naps) {
    CHECK(extend_compositor(a, b, n, {f01}) == b.id2(n.one[f01]));
    CHECK(extend_compositor(a, b, n, {f01, f12}) == n.compositor[a.pair_index(f01, f12)]);
    // both bracketings of a triple agree (the cocycle axiom)
    int left = extend_compositor(a, b, n, {f01, f12, f23});
    int right = b.vcomp(n.compositor[a.pair_index(f01, a.compose1(f12, f23))],
                        b.hcomp(b.id2(n.one[f01]), n.compositor[a.pair_index(f12, f23)]));
    CHECK(left == right);
  }
  CHECK_THROWS(extend_compositor(a, b, naps[0], {f12, f01}));
}

TEST_CASE("free presentations") {
  Fin2Category th = theta_category(2, {0, 0});
  FreePresentation fp = theta_free_presentation(th, 2);
  CHECK(fp.generators.size() == 2);
  CHECK(validate_free(fp).empty());
  CHECK(free_factorization(fp, th.one_cell_id(0, 2, 0)).size() == 2);
  CHECK(free_factorization(fp, th.id1(0)).empty());

  Fin2Category th2 = theta_category(2, {1, 1});
  FreePresentation fp2 = theta_free_presentation(th2, 2);
  CHECK(validate_free(fp2).empty());

  // chaotic underlying category is not free: u, v compose to identities
  Fin2Category iso = discrete_two_category(chaotic_category(1));
  FreePresentation notfree;
  notfree.cat = &iso;
  for (int g = 0; g < iso.one_cells(); ++g)
    if (!iso.is_id1(g)) notfree.generators.push_back(g);
  CHECK_FALSE(validate_free(notfree).empty());
}

TEST_CASE("pushforward along free domains") {
  Fin2Category th = theta_category(2, {0, 0});
  FreePresentation fp = theta_free_presentation(th, 2);
  Fin2Category a = ch_star(walking_retract());
  Fin2Category b = walking_two_iso();

  auto gs = enumerate_two_functors(th, a);
  auto fs = enumerate_nps(a, b);
  REQUIRE(!gs.empty());
  REQUIRE(!fs.empty());
  for (const TwoFunctor& g : gs)
    for (const Nps& f : fs) {
      TwoFunctor pushed = pushforward_free(fp, a, b, g, f);
      CHECK(is_two_functor(th, b, pushed));
      if (nps_is_strict(a, b, f)) {
        // strict pseudofunctors push forward to the plain composite
        TwoFunctor plain = compose_two_functors(g, nps_strip(f));
        CHECK(pushed == plain);
      }
    }

  // naturality in strict precomposition: T' -> T between free presentations
  Fin2Category th1 = theta_category(1, {0});
  FreePresentation fp1 = theta_free_presentation(th1, 1);
  TwoFunctor incl = theta_diag_morphism(th1, 1, 0, th, 2, 0, {0, 2}, {0});
  for (const TwoFunctor& g : gs)
    for (const Nps& f : fs) {
      TwoFunctor left = pushforward_free(fp1, a, b, compose_two_functors(incl, g), f);
      TwoFunctor right = compose_two_functors(incl, pushforward_free(fp, a, b, g, f));
      CHECK(left == right);
    }
}

TEST_CASE("precomposition with theta operators") {
  Fin2Category th1 = theta_category(1, {1});
  Fin2Category th2 = theta_category(2, {1, 1});
  Fin2Category b = walking_two_iso();
  TwoFunctor d0 = theta_diag_morphism(th1, 1, 1, th2, 2, 1, {1, 2}, {0, 1});
  TwoFunctor d2 = theta_diag_morphism(th1, 1, 1, th2, 2, 1, {0, 1}, {0, 1});
  for (const Nps& f : enumerate_nps(th2, b)) {
    Nps r0 = precompose_nps(th1, th2, b, d0, f);
    CHECK(is_nps(th1, b, r0));
    Nps r2 = precompose_nps(th1, th2, b, d2, f);
    CHECK(is_nps(th1, b, r2));
  }
  // functoriality on a composable pair of operators
  Fin2Category th0 = terminal_two_category();
  TwoFunctor v0 = theta_diag_morphism(th0, 0, 0, th1, 1, 1, {0}, {0});
  for (const Nps& f : enumerate_nps(th2, b)) {
    Nps once = precompose_nps(th0, th2, b, compose_two_functors(v0, d0), f);
    Nps twice = precompose_nps(th0, th1, b, v0, precompose_nps(th1, th2, b, d0, f));
    CHECK(once == twice);
  }
}
