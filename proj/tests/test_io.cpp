#include "doctest.h"
#include "twocat/corpus.hpp"
#include "twocat/jsonio.hpp"
#include "twocat/report.hpp"
#include "twocat/suites.hpp"

#include <cstdio>
#include <filesystem>

using namespace twocat;

TEST_CASE("fincategory json round trip") {
  for (const FinCategory& c : {ordinal_category(2), chaotic_category(1), walking_retract(),
                               product_category(ordinal_category(1), chaotic_category(1))}) {
    json j = fincategory_to_json(c);
    FinCategory back = fincategory_from_json(j, "roundtrip");
    CHECK(back.objects() == c.objects());
    CHECK(back.morphisms() == c.morphisms());
    CHECK(back.validate().empty());
    CHECK(fincategory_to_json(back) == j);
  }
}

TEST_CASE("fin2category json round trip") {
  for (const Fin2Category& d : default_corpus()) {
    json j = fin2category_to_json(d);
    Fin2Category back = fin2category_from_json(j, d.name());
    CHECK(back.objects() == d.objects());
    CHECK(back.one_cells() == d.one_cells());
    CHECK(back.two_cells() == d.two_cells());
    CHECK(fin2category_to_json(back) == j);
  }
}

TEST_CASE("malformed input names the location") {
  json j = fincategory_to_json(ordinal_category(1));
  j["compose"][0][2] = "nonexistent";
  CHECK_THROWS_WITH_AS(fincategory_from_json(j, "bad.json"),
                       doctest::Contains("bad.json"), SchemaError);
  json k = fincategory_to_json(ordinal_category(1));
  k["compose"][0] = json::array({"a0", "a2", "a0"});  // non-composable pair
  bool threw = false;
  try {
    fincategory_from_json(k, "bad2.json");
  } catch (const SchemaError& e) {
    threw = true;
    CHECK(std::string(e.what()).find("bad2.json") != std::string::npos);
    CHECK(std::string(e.what()).find("not composable") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("nps json round trip") {
  Fin2Category a = theta_category(1, {1});
  Fin2Category b = walking_two_iso();
  auto all = enumerate_nps(a, b);
  REQUIRE(!all.empty());
  json j = nps_to_json(a, b, all.front());
  NpsFile f = nps_from_json(j, "nps.json");
  CHECK(validate_nps(f.domain, f.codomain, f.map).empty());
  CHECK(f.map == all.front());
}

TEST_CASE("corpus save and load round trip") {
  auto corpus = default_corpus();
  std::string dir = std::filesystem::temp_directory_path() / "twocat-corpus-test";
  std::filesystem::remove_all(dir);
  corpus_save(dir, corpus);
  auto loaded = corpus_load(dir);
  REQUIRE(loaded.size() == corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    CHECK(loaded[i].objects() == corpus[i].objects());
    CHECK(fin2category_to_json(loaded[i]) == fin2category_to_json(corpus[i]));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("default corpus is lawful and well sized") {
  auto corpus = default_corpus();
  CHECK(corpus.size() >= 10);
  for (const auto& d : corpus) CHECK(d.validate().empty());
}

TEST_CASE("reports are byte-identical across runs") {
  auto corpus = default_corpus();
  SuiteParams p;
  VerificationReport a = run_suite("nps-axioms", corpus, p);
  VerificationReport b = run_suite("nps-axioms", corpus, p);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK(a.all_pass());
  // parallel dispatch assembles in the same order
  SuiteParams p4 = p;
  p4.jobs = 4;
  VerificationReport c = run_suite("nps-axioms", corpus, p4);
  CHECK(c.to_json(false).dump() == a.to_json(false).dump());
}

TEST_CASE("content hash is stable") {
  json j = {{"a", 1}, {"b", "two"}};
  CHECK(content_hash(j) == content_hash(j));
  json k = j;
  k["a"] = 2;
  CHECK(content_hash(j) != content_hash(k));
}

TEST_CASE("seeded corruption helper") {
  Fin2Category cell = walking_two_cell();
  std::string what;
  auto bad = seed_corruption(cell, "hcomp2", &what);
  REQUIRE(bad.has_value());
  CHECK_FALSE(bad->validate().empty());
  CHECK_THROWS(seed_corruption(cell, "nonsense", &what));
}
