#include "doctest.h"
#include "twocat/complicial.hpp"

using namespace twocat;

namespace {

int marked_count(const MarkedComplex& k, int dim) {
  int n = 0;
  for (const auto& c : k.cells)
    if (c.dim == dim && c.marked) ++n;
  return n;
}

const MarkedComplex::Cell* find_cell(const MarkedComplex& k, const std::string& label) {
  for (const auto& c : k.cells)
    if (c.label == label) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("inner horn generator shapes") {
  GeneratorMap g = build_generator(GeneratorFamily::ComplicialInnerHorn, 2, 1);
  CHECK(g.validate().empty());
  CHECK(g.domain.cells.size() == 5);    // 3 vertices + 2 edges
  CHECK(g.codomain.cells.size() == 7);  // + the long edge and the 2-simplex
  CHECK(marked_count(g.codomain, 2) == 1);
  CHECK(marked_count(g.codomain, 1) == 0);
  CHECK(marked_count(g.domain, 1) == 0);

  GeneratorMap g3 = build_generator(GeneratorFamily::ComplicialInnerHorn, 3, 2);
  CHECK(g3.validate().empty());
  // marked: subsets containing {1,2,3}
  CHECK(marked_count(g3.codomain, 2) == 1);
  CHECK(marked_count(g3.codomain, 3) == 1);
  CHECK_THROWS(build_generator(GeneratorFamily::ComplicialInnerHorn, 2, 0));
  CHECK_THROWS(build_generator(GeneratorFamily::ComplicialInnerHorn, 2, 2));
}

TEST_CASE("thinness and triviality generators") {
  GeneratorMap g = build_generator(GeneratorFamily::ComplicialThinness, 2, 1);
  CHECK(g.validate().empty());
  CHECK(marked_count(g.domain, 1) == 2);
  CHECK(marked_count(g.codomain, 1) == 3);
  CHECK(g.domain.cells.size() == g.codomain.cells.size());

  GeneratorMap t = build_generator(GeneratorFamily::Triviality, 3);
  CHECK(t.validate().empty());
  int dom_marks = 0, cod_marks = 0;
  for (const auto& c : t.domain.cells) dom_marks += c.marked;
  for (const auto& c : t.codomain.cells) cod_marks += c.marked;
  CHECK(dom_marks == 0);
  CHECK(cod_marks == 1);  // differ in exactly one marking
}

TEST_CASE("saturation generator data") {
  MarkedComplex eq = delta3_eq();
  // marks: all of dimensions >= 2 plus the edges [0,2] and [1,3]
  CHECK(marked_count(eq, 1) == 2);
  CHECK(find_cell(eq, "[0,2]")->marked);
  CHECK(find_cell(eq, "[1,3]")->marked);
  CHECK_FALSE(find_cell(eq, "[0,1]")->marked);
  CHECK(marked_count(eq, 2) == 4);
  CHECK(marked_count(eq, 3) == 1);

  GeneratorMap gm1 = build_generator(GeneratorFamily::ComplicialSaturation, -1);
  CHECK(gm1.validate().empty());
  CHECK(gm1.domain.cells.size() == 15);
  CHECK(gm1.domain.dim_top() == 3);

  GeneratorMap g0 = build_generator(GeneratorFamily::ComplicialSaturation, 0);
  CHECK(g0.validate().empty());
  // joining a point: 5 vertices, top dimension 4
  int vertices = 0;
  for (const auto& c : g0.domain.cells) vertices += c.dim == 0;
  CHECK(vertices == 5);
  CHECK(g0.domain.dim_top() == 4);
}

TEST_CASE("marked join conventions") {
  MarkedComplex empty;
  MarkedComplex d3 = delta3_eq();
  MarkedComplex same = marked_join(d3, empty);
  CHECK(same.cells.size() == d3.cells.size());

  MarkedComplex pt = standard_simplex(0);
  MarkedComplex seg = marked_join(pt, pt);
  CHECK(seg.cells.size() == 3);
  CHECK(seg.dim_top() == 1);
  for (const auto& c : seg.cells) CHECK_FALSE(c.marked);  // Delta[0] * Delta[0] = Delta[1] unmarked

  MarkedComplex big = marked_join(d3, pt);
  int v = 0;
  for (const auto& c : big.cells) v += c.dim == 0;
  CHECK(v == 5);
  CHECK(big.dim_top() == 4);
  CHECK(big.validate().empty());
  // count: every pair (sigma or empty, tau or empty)
  CHECK(big.cells.size() == 15 + 1 + 15);
}

TEST_CASE("scaled generators") {
  GeneratorMap g = build_generator(GeneratorFamily::ScaledInnerHorn, 3, 1);
  CHECK(g.validate().empty());
  CHECK(marked_count(g.codomain, 2) == 1);
  CHECK(marked_count(g.codomain, 3) == 0);

  GeneratorMap outer = build_generator(GeneratorFamily::ScaledOuterHorn, 3);
  CHECK(outer.validate().empty());
  // quotient: vertices {01}, {2}, {3}
  int v = 0;
  for (const auto& c : outer.codomain.cells) v += c.dim == 0;
  CHECK(v == 3);
  // the 2-simplex [0,1,2] survives the collapse with a degenerate [0,1] face
  const auto* tri = find_cell(outer.codomain, "[0,1,2]");
  REQUIRE(tri != nullptr);
  bool has_degenerate_face = false;
  for (const auto& f : tri->faces)
    if (f.surj.size() == 2 && f.surj[0] == f.surj[1]) has_degenerate_face = true;
  CHECK(has_degenerate_face);

  GeneratorMap sat = build_generator(GeneratorFamily::ScaledSaturation, 0);
  CHECK(sat.validate().empty());
  CHECK(marked_count(sat.domain, 2) == 5);
  CHECK(marked_count(sat.codomain, 2) == 7);
}

TEST_CASE("rlp against the point nerve") {
  Fin2Category pt = terminal_two_category();
  TdeltaNerve nerve(pt, 5);
  for (auto fam : {GeneratorFamily::ComplicialInnerHorn, GeneratorFamily::ComplicialThinness}) {
    GeneratorMap g = build_generator(fam, 2, 1);
    CHECK(has_rlp(g, nerve).pass);
  }
  GeneratorMap sat = build_generator(GeneratorFamily::ComplicialSaturation, -1);
  CHECK(has_rlp(sat, nerve).pass);
}

TEST_CASE("inner horn lifts in the tdelta nerve of the walking 2-cell") {
  Fin2Category d = walking_two_cell();
  TdeltaNerve nerve(d, 4);
  GeneratorMap g = build_generator(GeneratorFamily::ComplicialInnerHorn, 2, 1);
  RlpResult r = has_rlp(g, nerve);
  CHECK(r.pass);
  CHECK(r.maps_checked > 0);
}

TEST_CASE("thinness lifts in the tdelta nerve of the walking 2-iso") {
  Fin2Category d = walking_two_iso();
  TdeltaNerve nerve(d, 4);
  GeneratorMap g = build_generator(GeneratorFamily::ComplicialThinness, 2, 1);
  RlpResult r = has_rlp(g, nerve);
  CHECK(r.pass);
}

TEST_CASE("fibrancy spot checks") {
  for (const Fin2Category& d : {discrete_two_category(ordinal_category(2)), walking_two_iso()}) {
    for (auto mode : {NerveMode::Tdelta, NerveMode::Scaled})
      for (const auto& line : fibrancy_report(d, 3, mode)) CHECK_MESSAGE(line.pass, line.generator);
  }
}

TEST_CASE("negative controls: removing a marking rule breaks a lift") {
  // rule 2 removed: inner horns over a composable pair of nonidentities fail
  Fin2Category ord2 = discrete_two_category(ordinal_category(2));
  auto lines = fibrancy_report(ord2, 2, NerveMode::Tdelta, TdeltaNerve::kRule1 | TdeltaNerve::kRuleHigh);
  bool some_fail = false;
  for (const auto& l : lines) some_fail |= !l.pass;
  CHECK(some_fail);

  // rule 1 removed: the saturation extension fails on ch_star(retract)
  Fin2Category cs = ch_star(walking_retract());
  auto lines1 = fibrancy_report(cs, 3, NerveMode::Tdelta, TdeltaNerve::kRule2 | TdeltaNerve::kRuleHigh);
  some_fail = false;
  for (const auto& l : lines1) some_fail |= !l.pass;
  CHECK(some_fail);

  // high rule removed: triviality fails wherever a nondegenerate 3-simplex exists
  Fin2Category ord3 = discrete_two_category(ordinal_category(3));
  auto lines2 = fibrancy_report(ord3, 3, NerveMode::Tdelta, TdeltaNerve::kRule1 | TdeltaNerve::kRule2);
  some_fail = false;
  for (const auto& l : lines2) some_fail |= !l.pass;
  CHECK(some_fail);
}
