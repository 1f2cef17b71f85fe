#include "doctest.h"
#include "twocat/duskin.hpp"
#include "twocat/rezk.hpp"
#include "twocat/theta2.hpp"

#include <functional>
#include <set>

using namespace twocat;

TEST_CASE("duskin levels of a discrete nerve") {
  Fin2Category d = discrete_two_category(ordinal_category(1));
  DuskinLevels lv(d, 5);
  for (int n = 0; n <= 5; ++n) CHECK(lv.size(n) == n + 2);  // ordinary nerve of [1]
}

TEST_CASE("duskin level 2 of the walking 2-cell") {
  Fin2Category d = walking_two_cell();
  DuskinLevels lv(d, 4);
  CHECK(lv.size(2) == 8);
  // brute force oracle over (a, b, phi)
  int raw = 0;
  for (int a = 0; a < d.one_cells(); ++a)
    for (int b = 0; b < d.one_cells(); ++b) {
      if (d.one_tgt(a) != d.one_src(b)) continue;
      for (int x = 0; x < d.two_cells(); ++x)
        if (d.two_tgt1(x) == d.compose1(a, b)) ++raw;
    }
  CHECK(raw == 8);
}

TEST_CASE("gaunt identity-filler 2-simplices are composable pairs") {
  // the 2-simplices carry arbitrary fillers phi: c => b∘a, so even a gaunt
  // target has more of them than composable pairs whenever a hom poset has a
  // nonidentity arrow; the pairs reappear as the identity-filler sublevel
  Fin2Category d = theta_category(2, {1, 0});
  DuskinLevels lv(d, 3);
  int pairs = 0;
  for (int a = 0; a < d.one_cells(); ++a)
    for (int b = 0; b < d.one_cells(); ++b)
      if (d.one_tgt(a) == d.one_src(b)) ++pairs;
  int forced = 0;
  for (int x = 0; x < lv.size(2); ++x)
    if (d.is_id2(lv.two(x).phi)) ++forced;
  CHECK(forced == pairs);
}

TEST_CASE("simplicial identities for duskin providers") {
  for (const Fin2Category& d :
       {walking_two_cell(), walking_two_iso(), ch_star(walking_retract()), theta_category(2, {1, 1})}) {
    TdeltaNerve td(d, 4);
    CHECK(check_simplicial_identities(td, 4).empty());
  }
}

TEST_CASE("3-coskeletality: compatible 4-boundaries fill uniquely") {
  for (const Fin2Category& d : {walking_two_iso(), walking_two_cell(), theta_category(2, {1, 0})}) {
  DuskinLevels lv(d, 4);
  // independent filler count: raw scan over quintuples of 3-simplices
  long long raw = 0;
  const int n3 = lv.size(3);
  for (int x0 = 0; x0 < n3; ++x0)
    for (int x1 = 0; x1 < n3; ++x1) {
      if (lv.face(3, 0, x1) != lv.face(3, 0, x0)) continue;
      for (int x2 = 0; x2 < n3; ++x2) {
        if (lv.face(3, 0, x2) != lv.face(3, 1, x0)) continue;
        if (lv.face(3, 1, x2) != lv.face(3, 1, x1)) continue;
        for (int x3 = 0; x3 < n3; ++x3) {
          if (lv.face(3, 0, x3) != lv.face(3, 2, x0)) continue;
          if (lv.face(3, 1, x3) != lv.face(3, 2, x1)) continue;
          if (lv.face(3, 2, x3) != lv.face(3, 2, x2)) continue;
          for (int x4 = 0; x4 < n3; ++x4) {
            if (lv.face(3, 0, x4) != lv.face(3, 3, x0)) continue;
            if (lv.face(3, 1, x4) != lv.face(3, 3, x1)) continue;
            if (lv.face(3, 2, x4) != lv.face(3, 3, x2)) continue;
            if (lv.face(3, 3, x4) != lv.face(3, 3, x3)) continue;
            ++raw;
          }
        }
      }
    }
  CHECK(raw == lv.size(4));
  }
}

TEST_CASE("tdelta markings") {
  // gaunt: only degenerate 1-simplices marked; 2-marks are the forced-iso fillers
  Fin2Category th = theta_category(2, {1, 1});
  TdeltaNerve td(th, 3);
  for (int f = 0; f < td.size(1); ++f)
    CHECK((td.marking(1, f) > 0) == th.is_id1(f));
  for (int x = 0; x < td.size(2); ++x)
    CHECK((td.marking(2, x) > 0) == th.two_invertible(td.levels().two(x).phi));
  for (int x = 0; x < td.size(3); ++x) CHECK(td.marking(3, x) == 1);

  // ch_star(walking retract): f carries exactly one marking witness
  Fin2Category cs = ch_star(walking_retract());
  TdeltaNerve tcs(cs, 3);
  int f = -1;
  for (int k = 0; k < cs.one_cells(); ++k)
    if (cs.one_src(k) == 0 && cs.one_tgt(k) == 1) f = k;
  REQUIRE(f >= 0);
  CHECK(tcs.marking(1, f) == 1);

  // the walking 2-isomorphism has no reverse 1-cells, so its nonidentity
  // 1-simplices carry no adjoint-equivalence witness
  Fin2Category iso = walking_two_iso();
  TdeltaNerve tiso(iso, 3);
  for (int k = 0; k < iso.one_cells(); ++k)
    CHECK((tiso.marking(1, k) > 0) == iso.is_id1(k));
  // equivalences and marked 1-simplices coincide on every tested member
  for (const Fin2Category& d : {walking_two_cell(), walking_two_iso(), cs}) {
    TdeltaNerve t(d, 2);
    for (int k = 0; k < d.one_cells(); ++k)
      CHECK((t.marking(1, k) > 0) == is_equivalence(d, k));
  }
}

TEST_CASE("reflect collapses multiplicities") {
  Fin2Category cs = ch_star(walking_retract());
  TdeltaNerve td(cs, 3);
  ReflectedProvider r(td);
  for (int n = 1; n <= 3; ++n)
    for (int x = 0; x < td.size(n); ++x) {
      CHECK(r.marking(n, x) == (td.marking(n, x) > 0 ? 1 : 0));
      CHECK(r.marking(n, x) <= 1);
    }
  // idempotence
  ReflectedProvider rr(r);
  for (int x = 0; x < td.size(2); ++x) CHECK(rr.marking(2, x) == r.marking(2, x));
}

TEST_CASE("scaled nerve equals the reflected tdelta nerve") {
  for (const Fin2Category& d :
       {walking_two_iso(), ch_star(walking_retract()), walking_two_cell(), theta_category(2, {1, 1})}) {
    std::string why;
    CHECK_MESSAGE(check_within_simplicial(d, 4), why);
  }
}

TEST_CASE("theta2 nerve levels") {
  Fin2Category cell = walking_two_cell();
  CHECK(theta2_level(cell, ThetaShape{0, {}}).size() == 2);
  CHECK(theta2_level(cell, ThetaShape{1, {0}}).size() == 4);
  Fin2Category th = theta_category(2, {1, 1});
  CHECK(theta2_level(th, ThetaShape{1, {0}}).size() == static_cast<size_t>(th.one_cells()));
}

TEST_CASE("optimistic grid on gaunt corpus members") {
  for (const Fin2Category& a : {theta_category(1, {1}), theta_category(2, {1, 0})}) {
    auto r = check_optimistic(a, 2, 2);
    CHECK(r.pass);
  }
  auto pt = check_optimistic(terminal_two_category(), 2, 2);
  CHECK(pt.pass);
}

TEST_CASE("leinster vs moser operator compatibility") {
  auto r = check_leinster_vs_moser(theta_category(1, {1}), 2, 2);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("rezk nerve levels") {
  CHECK(RezkNerve(ordinal_category(1), 1, 1).size(1, 1) == 3);
  // k = 0 column is the ordinary nerve
  RezkNerve n(ordinal_category(2), 3, 0);
  CHECK(n.size(0, 0) == 3);
  CHECK(n.size(1, 0) == 6);
  CHECK(n.size(2, 0) == 10);
  CHECK(n.size(3, 0) == 15);
  // functors ~[1] -> chaotic 1
  CHECK(RezkNerve(chaotic_category(1), 0, 1).size(0, 1) == 4);
}

TEST_CASE("rezk identities") {
  RezkNerve n(walking_retract(), 2, 2);
  CHECK(check_rezk_identities(n, 2, 2).empty());
}

TEST_CASE("precategory nerve levels") {
  Fin2Category cell = walking_two_cell();
  PrecatNerve pn(cell, 2, 1, 1);
  // i = 0: objects, for every j,k
  for (int j = 0; j <= 1; ++j)
    for (int k = 0; k <= 1; ++k) CHECK(pn.size(0, j, k) == cell.objects());
  CHECK(pn.size(1, 0, 0) == cell.one_cells());

  Fin2Category ord2 = discrete_two_category(ordinal_category(2));
  PrecatNerve p2(ord2, 2, 0, 0);
  CHECK(p2.size(2, 0, 0) == 10);  // composable pairs in [2]
}

TEST_CASE("precat segal equality and identities") {
  for (const Fin2Category& d : {walking_two_cell(), walking_two_iso(), ch_star(walking_retract())}) {
    PrecatNerve pn(d, 3, 2, 1);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 1; ++k) {
          std::string why;
          CHECK_MESSAGE(pn.check_segal(i, j, k, &why), why);
        }
    CHECK(check_precat_identities(pn, 3, 2, 1).empty());
  }
}

TEST_CASE("precat natural maps are strict 2-functors") {
  auto pt = check_precat_maps(terminal_two_category(), terminal_two_category());
  CHECK(pt.pass);
  CHECK(pt.n_maps == 1);

  Fin2Category arrow = theta_category(1, {0});
  Fin2Category cell = walking_two_cell();
  auto r = check_precat_maps(arrow, cell);
  CHECK_MESSAGE(r.pass, r.detail);
  CHECK(r.n_maps == static_cast<long long>(enumerate_two_functors(arrow, cell).size()));

  Fin2Category iso = walking_two_iso();
  auto r2 = check_precat_maps(iso, iso);
  CHECK_MESSAGE(r2.pass, r2.detail);
  CHECK(r2.n_maps == static_cast<long long>(enumerate_two_functors(iso, iso).size()));
}

TEST_CASE("appendix roundtrip on gaunt pairs") {
  std::vector<Fin2Category> objs;
  objs.push_back(terminal_two_category());
  objs.push_back(theta_category(1, {0}));
  objs.push_back(theta_category(1, {1}));
  objs.push_back(theta_category(2, {0, 0}));
  // [0] against [0]: a single natural family
  auto r00 = appendix_roundtrip(objs[0], objs[0]);
  CHECK(r00.pass);
  CHECK(r00.n_maps == 1);
  // the derived triple-enumeration example: maps = strict = nps
  auto r = appendix_roundtrip(objs[1], objs[3]);
  CHECK_MESSAGE(r.pass, r.detail);
  CHECK(r.n_maps == static_cast<long long>(enumerate_two_functors(objs[1], objs[3]).size()));
  CHECK(r.n_maps == static_cast<long long>(enumerate_nps(objs[1], objs[3]).size()));
  // a non-trivially 2-dimensional pair
  auto r2 = appendix_roundtrip(objs[2], objs[2]);
  CHECK_MESSAGE(r2.pass, r2.detail);
}
