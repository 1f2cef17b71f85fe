// Command line front end: validate and enumerate over JSON-encoded finite
// 2-categories, dump nerve levels, and run the verification suites.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twocat/complicial.hpp"
#include "twocat/corpus.hpp"
#include "twocat/duskin.hpp"
#include "twocat/homchecks.hpp"
#include "twocat/jsonio.hpp"
#include "twocat/rezk.hpp"
#include "twocat/suites.hpp"
#include "twocat/theta2.hpp"

using namespace twocat;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitConfig = 2;

Fin2Category load_two_category(const std::string& path) {
  json j = load_json_file(path);
  // accept either a bare 1-category (promoted to a discrete 2-category) or a
  // full 2-category
  if (j.contains("hom")) return fin2category_from_json(j, path);
  Fin2Category d = discrete_two_category(fincategory_from_json(j, path));
  d.set_name(path);
  return d;
}

int cmd_validate(const std::string& path, const std::string& format) {
  json j = load_json_file(path);
  std::vector<std::string> bad;
  if (j.contains("on_objects")) {
    NpsFile f = nps_from_json(j, path);
    bad = validate_nps(f.domain, f.codomain, f.map);
  } else if (j.contains("hom")) {
    bad = fin2category_from_json(j, path).validate();
  } else {
    bad = fincategory_from_json(j, path).validate();
  }
  if (format == "json") {
    json out;
    out["file"] = path;
    out["pass"] = bad.empty();
    out["violations"] = bad;
    std::cout << out.dump(2) << "\n";
  } else {
    if (bad.empty()) {
      std::cout << path << ": valid\n";
    } else {
      std::cout << path << ": " << bad.size() << " violation(s)\n";
      for (const auto& b : bad) std::cout << "  " << b << "\n";
    }
  }
  return bad.empty() ? kExitPass : kExitFail;
}

int cmd_enumerate(const std::string& from, const std::string& to, const std::string& kind,
                  const std::string& format) {
  long long count = 0;
  json listing = json::array();
  if (kind == "functor") {
    FinCategory c = fincategory_from_json(load_json_file(from), from);
    FinCategory d = fincategory_from_json(load_json_file(to), to);
    auto fs = enumerate_functors(c, d);
    count = static_cast<long long>(fs.size());
    for (const auto& f : fs) listing.push_back(json{{"objects", f.obj}, {"morphisms", f.mor}});
  } else if (kind == "2functor") {
    Fin2Category a = load_two_category(from);
    Fin2Category b = load_two_category(to);
    auto fs = enumerate_two_functors(a, b);
    count = static_cast<long long>(fs.size());
    for (const auto& f : fs)
      listing.push_back(json{{"objects", f.obj}, {"one_cells", f.one}, {"two_cells", f.two}});
  } else {
    std::cerr << "unknown --kind '" << kind << "'\n";
    return kExitConfig;
  }
  if (format == "json") {
    json out;
    out["count"] = count;
    out["elements"] = listing;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << count << " " << kind << "(s)\n";
  }
  return kExitPass;
}

int cmd_nerve(const std::string& kind, const std::string& input, int dim, int grid_i, int grid_j, int grid_k,
              const std::string& format) {
  Fin2Category d = load_two_category(input);
  json out;
  out["kind"] = kind;
  out["input"] = input;
  if (kind == "duskin" || kind == "tdelta" || kind == "sc") {
    TdeltaNerve td(d, dim);
    ScaledNerve sc(d, dim);
    LevelProvider* prov = kind == "sc" ? static_cast<LevelProvider*>(&sc) : &td;
    json levels = json::array();
    for (int n = 0; n <= dim; ++n) {
      json lv;
      lv["dim"] = n;
      lv["size"] = prov->size(n);
      if (kind != "duskin") {
        json marks = json::array();
        for (int x = 0; x < prov->size(n); ++x) marks.push_back(prov->marking(n, x));
        lv["markings"] = marks;
      }
      json faces = json::array();
      if (n >= 1)
        for (int x = 0; x < prov->size(n); ++x) {
          json fs = json::array();
          for (int i = 0; i <= n; ++i) fs.push_back(prov->face(n, i, x));
          faces.push_back(fs);
        }
      lv["faces"] = faces;
      levels.push_back(lv);
    }
    out["levels"] = levels;
  } else if (kind == "theta2") {
    json levels = json::array();
    for (int i = 0; i <= grid_i; ++i)
      for (int j = 0; j <= grid_j; ++j) {
        json lv;
        lv["shape"] = "[" + std::to_string(i) + "|" + std::to_string(j) + ",...]";
        lv["size"] = static_cast<long long>(theta2_level(d, diag_shape(i, j)).size());
        levels.push_back(lv);
      }
    out["levels"] = levels;
  } else if (kind == "rezk") {
    FinCategory c = ob_star(d);
    RezkNerve n(c, grid_j, grid_k);
    json levels = json::array();
    for (int j = 0; j <= grid_j; ++j)
      for (int k = 0; k <= grid_k; ++k)
        levels.push_back(json{{"j", j}, {"k", k}, {"size", n.size(j, k)}});
    out["levels"] = levels;
    out["note"] = "levels of the underlying category's classifying diagram";
  } else if (kind == "precat") {
    PrecatNerve pn(d, grid_i, grid_j, grid_k);
    json levels = json::array();
    for (int i = 0; i <= grid_i; ++i)
      for (int j = 0; j <= grid_j; ++j)
        for (int k = 0; k <= grid_k; ++k)
          levels.push_back(json{{"i", i}, {"j", j}, {"k", k}, {"size", pn.size(i, j, k)}});
    out["levels"] = levels;
  } else {
    std::cerr << "unknown --kind '" << kind << "'\n";
    return kExitConfig;
  }
  if (format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << out["kind"].get<std::string>() << ": levels computed (use --format json for detail)\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-category computation engine and verification harness"};
  app.require_subcommand(1);

  std::string format = "text";

  auto* validate = app.add_subcommand("validate", "validate a JSON category, 2-category or pseudofunctor");
  std::string vfile;
  validate->add_option("file", vfile, "input JSON file")->required();
  validate->add_option("--format", format, "json|text");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate functors between finite (2-)categories");
  std::string efrom, eto, ekind = "functor";
  enumerate->add_option("--from", efrom, "domain JSON file")->required();
  enumerate->add_option("--to", eto, "codomain JSON file")->required();
  enumerate->add_option("--kind", ekind, "functor|2functor");
  enumerate->add_option("--format", format, "json|text");

  auto* nerve = app.add_subcommand("nerve", "dump nerve levels of a 2-category");
  std::string nkind = "duskin", ninput;
  int ndim = 4;
  std::string ngrid = "2,2,1";
  nerve->add_option("--kind", nkind, "duskin|tdelta|sc|theta2|rezk|precat");
  nerve->add_option("--input", ninput, "2-category JSON file")->required();
  nerve->add_option("--dim", ndim, "truncation dimension (default 4)");
  nerve->add_option("--grid", ngrid, "i,j,k bounds for the multi-indexed nerves");
  nerve->add_option("--format", format, "json|text");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, corpus_dir, seed, mode;
  int max_dim = 4, jobs = 1, fib_m = 3;
  std::string vgrid = "2,2,1";
  bool timings = false;
  verify->add_option("--suite", suite, "suite name")->required();
  std::string verify_file;
  verify->add_option("file", verify_file, "pseudofunctor JSON (nps-axioms only)");
  verify->add_option("--corpus", corpus_dir, "corpus directory (default: built-in corpus)");
  verify->add_option("--format", format, "json|text");
  verify->add_option("--max-dim", max_dim, "simplicial truncation (default 4)");
  verify->add_option("--grid", vgrid, "i,j,k grid bounds (default 2,2,1)");
  verify->add_option("--jobs", jobs, "worker pool size");
  verify->add_option("--seed-violation", seed, "negative-control kind");
  verify->add_option("--fib-max", fib_m, "fibrancy generator bound (default 3)");
  verify->add_flag("--timings", timings, "include wall times (breaks byte-determinism)");
  verify->add_option("--mode", mode, "tdelta|scaled (fibrancy; default both)");

  auto* corpus_cmd = app.add_subcommand("corpus", "write the default corpus as JSON files");
  std::string out_dir;
  corpus_cmd->add_option("--out", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(vfile, format);
    if (*enumerate) return cmd_enumerate(efrom, eto, ekind, format);
    if (*nerve) {
      int gi = 2, gj = 2, gk = 1;
      if (std::sscanf(ngrid.c_str(), "%d,%d,%d", &gi, &gj, &gk) != 3) {
        std::cerr << "bad --grid\n";
        return kExitConfig;
      }
      return cmd_nerve(nkind, ninput, ndim, gi, gj, gk, format);
    }
    if (*corpus_cmd) {
      corpus_save(out_dir, default_corpus());
      std::cout << "wrote default corpus to " << out_dir << "\n";
      return kExitPass;
    }
    if (*verify) {
      if (!verify_file.empty()) {
        if (suite != "nps-axioms") {
          std::cerr << "a file argument is only meaningful for --suite nps-axioms\n";
          return kExitConfig;
        }
        return cmd_validate(verify_file, format);
      }
      SuiteParams params;
      params.max_dim = max_dim;
      params.jobs = jobs;
      params.seed_violation = seed;
      params.fib_m_max = fib_m;
      params.mode = mode;
      if (!mode.empty() && mode != "tdelta" && mode != "scaled") {
        std::cerr << "bad --mode (tdelta|scaled)\n";
        return kExitConfig;
      }
      if (std::sscanf(vgrid.c_str(), "%d,%d,%d", &params.grid_i, &params.grid_j, &params.grid_k) != 3) {
        std::cerr << "bad --grid\n";
        return kExitConfig;
      }
      std::vector<Fin2Category> corpus;
      if (corpus_dir.empty())
        corpus = default_corpus();
      else
        corpus = corpus_load(corpus_dir);
      auto names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (const auto& s : names) std::cerr << " " << s;
        std::cerr << "\n";
        return kExitConfig;
      }
      VerificationReport rep = run_suite(suite, corpus, params);
      if (format == "json")
        std::cout << rep.to_json(timings).dump(2) << "\n";
      else
        std::cout << rep.to_text();
      return rep.all_pass() ? kExitPass : kExitFail;
    }
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}
