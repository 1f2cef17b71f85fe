#include "twocat/suites.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <stdexcept>

#include "twocat/complicial.hpp"
#include "twocat/corpus.hpp"
#include "twocat/homchecks.hpp"
#include "twocat/nps.hpp"
#include "twocat/rezk.hpp"
#include "twocat/theta2.hpp"

namespace twocat {

std::vector<std::string> suite_names() {
  return {"laws",        "optimistic", "leinster-vs-moser", "icon-pullback",
          "replace-pseudo", "pushouts",   "nps-axioms",        "appendix",
          "withinsimplicial", "segal",      "fibrancy",          "precat-maps"};
}

std::optional<Fin2Category> seed_corruption(const Fin2Category& d, const std::string& kind,
                                            std::string* what) {
  Fin2Category::Data data = d.raw();
  const int n = d.objects();
  if (kind == "identity") {
    for (int a = 0; a < n; ++a)
      if (d.hom(a, a).objects() > 1) {
        data.id1[a] = (data.id1[a] + 1) % d.hom(a, a).objects();
        if (what) *what = "id1 of object " + std::to_string(a);
        return Fin2Category(std::move(data), d.name());
      }
    return std::nullopt;
  }
  if (kind == "compose") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const FinCategory& h = d.hom(a, b);
        if (h.morphisms() < 2) continue;
        // redirect one vertical composite
        for (int x = 0; x < h.morphisms(); ++x)
          for (int y = 0; y < h.morphisms(); ++y) {
            if (h.tgt(x) != h.src(y)) continue;
            std::vector<Mor> mor;
            for (int m = 0; m < h.morphisms(); ++m) mor.push_back({h.src(m), h.tgt(m)});
            std::vector<int> ids(h.objects());
            for (int o = 0; o < h.objects(); ++o) ids[o] = h.identity(o);
            std::vector<int> table(static_cast<size_t>(h.morphisms()) * h.morphisms(), -1);
            for (int u = 0; u < h.morphisms(); ++u)
              for (int v = 0; v < h.morphisms(); ++v)
                if (h.tgt(u) == h.src(v)) table[static_cast<size_t>(u) * h.morphisms() + v] = h.compose(u, v);
            int old = h.compose(x, y);
            int alt = (old + 1) % h.morphisms();
            table[static_cast<size_t>(x) * h.morphisms() + y] = alt;
            data.hom[a * n + b] = FinCategory(h.objects(), std::move(mor), std::move(ids), std::move(table));
            if (what)
              *what = "vcompose (" + std::to_string(x) + "," + std::to_string(y) + ") in hom(" +
                      std::to_string(a) + "," + std::to_string(b) + ")";
            return Fin2Category(std::move(data), d.name());
          }
      }
    return std::nullopt;
  }
  if (kind == "hcomp1" || kind == "hcomp2") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          size_t key = (static_cast<size_t>(a) * n + b) * n + c;
          auto& t = kind == "hcomp1" ? data.hcomp1[key] : data.hcomp2[key];
          int range = kind == "hcomp1" ? d.hom(a, c).objects() : d.hom(a, c).morphisms();
          if (t.empty() || range < 2) continue;
          t[0] = (t[0] + 1) % range;
          if (what)
            *what = kind + " entry 0 at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")";
          return Fin2Category(std::move(data), d.name());
        }
    return std::nullopt;
  }
  throw std::invalid_argument("seed_corruption: unknown kind " + kind);
}

namespace {

using CheckFn = std::function<CheckRecord()>;

VerificationReport run_checks(const std::string& suite, std::vector<CheckFn> checks, int jobs) {
  VerificationReport rep;
  rep.suite = suite;
  if (jobs <= 1) {
    for (auto& fn : checks) rep.checks.push_back(fn());
    return rep;
  }
  std::vector<std::future<CheckRecord>> futs;
  futs.reserve(checks.size());
  size_t next = 0;
  // simple bounded pool: launch up to `jobs` at a time, collect in order
  std::vector<std::pair<size_t, std::future<CheckRecord>>> running;
  std::vector<CheckRecord> results(checks.size());
  while (next < checks.size() || !running.empty()) {
    while (next < checks.size() && static_cast<int>(running.size()) < jobs) {
      running.emplace_back(next, std::async(std::launch::async, checks[next]));
      ++next;
    }
    auto& [idx, fut] = running.front();
    results[idx] = fut.get();
    running.erase(running.begin());
  }
  rep.checks = std::move(results);
  return rep;
}

CheckRecord timed(const std::string& id, const json& inputs, const std::function<void(CheckRecord&)>& body) {
  CheckRecord r;
  r.id = id;
  r.inputs_hash = content_hash(inputs);
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const Fin2Category* by_name(const std::vector<Fin2Category>& corpus, const std::string& name) {
  for (const auto& d : corpus)
    if (d.name() == name) return &d;
  return nullptr;
}

std::vector<const Fin2Category*> gaunt_members(const std::vector<Fin2Category>& corpus) {
  std::vector<const Fin2Category*> out;
  for (const auto& d : corpus)
    if (is_gaunt(d)) out.push_back(&d);
  return out;
}

json inputs_of(std::initializer_list<std::string> parts) {
  json j = json::array();
  for (const auto& p : parts) j.push_back(p);
  return j;
}

}  // namespace

VerificationReport run_suite(const std::string& name, const std::vector<Fin2Category>& corpus,
                             const SuiteParams& p) {
  std::vector<CheckFn> checks;

  if (name == "laws") {
    for (const auto& d : corpus)
      checks.push_back([&d]() {
        return timed("laws/" + d.name(), inputs_of({d.name()}), [&](CheckRecord& r) {
          auto bad = d.validate();
          r.pass = bad.empty();
          if (!bad.empty()) r.witness = bad.front();
          r.counts["one_cells"] = d.one_cells();
          r.counts["two_cells"] = d.two_cells();
        });
      });
    std::vector<std::string> kinds =
        p.seed_violation.empty() ? std::vector<std::string>{"compose", "hcomp1", "hcomp2", "identity"}
                                 : std::vector<std::string>{p.seed_violation};
    for (const auto& d : corpus)
      for (const auto& kind : kinds)
        checks.push_back([&d, kind]() {
          return timed("laws/" + d.name() + "/seeded-" + kind, inputs_of({d.name(), kind}),
                       [&](CheckRecord& r) {
                         std::string what;
                         auto bad = seed_corruption(d, kind, &what);
                         if (!bad) {
                           r.counts["skipped"] = 1;
                           return;  // nothing corruptible of this kind
                         }
                         auto report = bad->validate();
                         r.pass = !report.empty();
                         r.witness = r.pass ? report.front() : "corruption of " + what + " went undetected";
                       });
        });
  } else if (name == "optimistic" || name == "leinster-vs-moser") {
    bool ops = name != "optimistic";
    for (const Fin2Category* a : gaunt_members(corpus))
      checks.push_back([a, ops, &p, name]() {
        return timed(name + "/" + a->name(), inputs_of({a->name()}), [&](CheckRecord& r) {
          GridCheckResult g = ops ? check_leinster_vs_moser(*a, p.grid_i, p.grid_j)
                                  : check_optimistic(*a, p.grid_i, p.grid_j);
          r.pass = g.pass;
          r.witness = g.detail;
          r.counts["grid_checks"] = static_cast<long long>(g.lines.size());
        });
      });
  } else if (name == "icon-pullback") {
    std::vector<Fin2Category> bs = {terminal_two_category(), theta_category(1, {0}), theta_category(1, {1})};
    bs[0].set_name("point");
    bs[1].set_name("arrow");
    bs[2].set_name("cell");
    for (const auto& b : bs)
      for (const auto& d : corpus)
        checks.push_back([b, &d]() {
          return timed("icon-pullback/" + b.name() + "/" + d.name(), inputs_of({b.name(), d.name()}),
                       [&](CheckRecord& r) {
                         std::string why;
                         r.pass = check_icon_pullback(b, d, &why);
                         r.witness = why;
                       });
        });
  } else if (name == "replace-pseudo") {
    Fin2Category a = discrete_two_category(chaotic_category(1));
    a.set_name("gpd1");
    std::vector<Fin2Category> bs = {theta_category(1, {0}), theta_category(1, {1})};
    bs[0].set_name("arrow");
    bs[1].set_name("cell");
    for (const auto& b : bs)
      for (const auto& d : corpus)
        checks.push_back([a, b, &d]() {
          return timed("replace-pseudo/" + b.name() + "/" + d.name(), inputs_of({a.name(), b.name(), d.name()}),
                       [&](CheckRecord& r) {
                         auto res = check_replace_pseudo(a, b, d);
                         r.pass = res.pass;
                         r.witness = res.detail;
                       });
        });
  } else if (name == "pushouts") {
    struct Item {
      std::string id;
      Fin2Category a;
      int i;
    };
    std::vector<Item> items;
    items.push_back({"suspension/cell", walking_two_cell(), 1});
    items.push_back({"suspension/gpd1", discrete_two_category(chaotic_category(1)), 1});
    items.push_back({"multiple-suspension/gpd1-i2", discrete_two_category(chaotic_category(1)), 2});
    for (const auto& it : items)
      for (const auto& d : corpus)
        checks.push_back([it, &d]() {
          return timed("pushouts/" + it.id + "/" + d.name(), inputs_of({it.id, d.name()}),
                       [&](CheckRecord& r) {
                         PushoutSpec spec;
                         spec.kind = PushoutSpec::Suspension;
                         spec.a = &it.a;
                         spec.i = it.i;
                         auto res = check_corepresented_pushout(spec, {d});
                         r.pass = res.front().pass;
                         r.witness = res.front().detail;
                         r.counts["apex"] = res.front().apex_count;
                         r.counts["pullback"] = res.front().pullback_count;
                       });
        });
    for (const auto& d : corpus)
      checks.push_back([&d]() {
        return timed("pushouts/degenerate/" + d.name(), inputs_of({"degenerate", d.name()}),
                     [&](CheckRecord& r) {
                       Fin2Category base = walking_two_cell();
                       PushoutSpec spec;
                       spec.kind = PushoutSpec::Degenerate;
                       spec.base = &base;
                       auto res = check_corepresented_pushout(spec, {d});
                       r.pass = res.front().pass;
                     });
      });
  } else if (name == "nps-axioms") {
    for (const auto& d : corpus) {
      checks.push_back([&d]() {
        return timed("nps-axioms/identity/" + d.name(), inputs_of({d.name()}), [&](CheckRecord& r) {
          Nps idn = nps_from_strict(d, d, identity_two_functor(d));
          auto bad = validate_nps(d, d, idn);
          r.pass = bad.empty();
          if (!bad.empty()) r.witness = bad.front();
        });
      });
      checks.push_back([&d]() {
        return timed("nps-axioms/seeded/" + d.name(), inputs_of({d.name(), "seed"}), [&](CheckRecord& r) {
          Nps idn = nps_from_strict(d, d, identity_two_functor(d));
          bool corrupted = false;
          for (size_t q = 0; q < idn.compositor.size() && !corrupted; ++q) {
            int old = idn.compositor[q];
            for (int v = 0; v < d.two_cells() && !corrupted; ++v) {
              if (v == old) continue;
              idn.compositor[q] = v;
              corrupted = true;
            }
            if (!corrupted) idn.compositor[q] = old;
          }
          if (!corrupted) {
            r.counts["skipped"] = 1;
            return;
          }
          r.pass = !validate_nps(d, d, idn).empty();
          if (!r.pass) r.witness = "corrupted compositor went undetected";
        });
      });
    }
  } else if (name == "appendix") {
    std::vector<Fin2Category> objs;
    objs.push_back(terminal_two_category());
    objs.push_back(theta_category(1, {0}));
    objs.push_back(theta_category(1, {1}));
    objs.push_back(theta_category(2, {0, 0}));
    objs[0].set_name("point");
    objs[1].set_name("t10");
    objs[2].set_name("t11");
    objs[3].set_name("t200");
    for (const auto& a : objs)
      for (const auto& b : objs)
        checks.push_back([a, b]() {
          return timed("appendix/" + a.name() + "/" + b.name(), inputs_of({a.name(), b.name()}),
                       [&](CheckRecord& r) {
                         AppendixReport rep = appendix_roundtrip(a, b);
                         r.pass = rep.pass;
                         r.witness = rep.detail;
                         r.counts["maps"] = rep.n_maps;
                         r.counts["nps"] = rep.n_nps;
                       });
        });
  } else if (name == "withinsimplicial") {
    for (const auto& d : corpus)
      checks.push_back([&d, &p]() {
        return timed("withinsimplicial/" + d.name(), inputs_of({d.name()}), [&](CheckRecord& r) {
          std::string why;
          r.pass = check_within_simplicial(d, p.max_dim, &why);
          r.witness = why;
        });
      });
  } else if (name == "segal") {
    for (const auto& d : corpus)
      checks.push_back([&d, &p]() {
        return timed("segal/" + d.name(), inputs_of({d.name()}), [&](CheckRecord& r) {
          PrecatNerve pn(d, p.grid_i, p.grid_j, p.grid_k);
          for (int i = 0; i <= p.grid_i && r.pass; ++i)
            for (int j = 0; j <= p.grid_j && r.pass; ++j)
              for (int k = 0; k <= p.grid_k && r.pass; ++k) {
                std::string why;
                if (!pn.check_segal(i, j, k, &why)) {
                  r.pass = false;
                  r.witness = why;
                }
              }
          if (r.pass) {
            auto bad = check_precat_identities(pn, p.grid_i, p.grid_j, p.grid_k);
            r.pass = bad.empty();
            if (!bad.empty()) r.witness = bad.front();
          }
          r.counts["top_level"] = pn.size(p.grid_i, p.grid_j, p.grid_k);
        });
      });
  } else if (name == "fibrancy") {
    bool negative = !p.seed_violation.empty() && p.seed_violation.rfind("mark-", 0) == 0;
    unsigned mask = TdeltaNerve::kRule1 | TdeltaNerve::kRule2 | TdeltaNerve::kRuleHigh;
    if (p.seed_violation == "mark-1") mask &= ~TdeltaNerve::kRule1;
    if (p.seed_violation == "mark-2") mask &= ~TdeltaNerve::kRule2;
    if (p.seed_violation == "mark-high") mask &= ~TdeltaNerve::kRuleHigh;
    std::vector<NerveMode> modes;
    if (p.mode.empty() || p.mode == "tdelta") modes.push_back(NerveMode::Tdelta);
    if (p.mode.empty() || p.mode == "scaled") modes.push_back(NerveMode::Scaled);
    if (!negative) {
      for (const auto& d : corpus)
        for (NerveMode mode : modes)
          checks.push_back([&d, mode, &p]() {
            std::string mn = mode == NerveMode::Tdelta ? "tdelta" : "scaled";
            return timed("fibrancy/" + mn + "/" + d.name(), inputs_of({d.name(), mn}), [&](CheckRecord& r) {
              for (const auto& line : fibrancy_report(d, p.fib_m_max, mode)) {
                r.counts["lifts"] += line.maps;
                if (!line.pass) {
                  r.pass = false;
                  r.witness = line.generator;
                }
              }
            });
          });
    } else {
      // negative control: the masked nerve must fail at least one lift on at
      // least one corpus member
      checks.push_back([&corpus, mask, &p]() {
        return timed("fibrancy/negative/" + p.seed_violation, inputs_of({p.seed_violation}),
                     [&](CheckRecord& r) {
                       bool any_fail = false;
                       for (const auto& d : corpus) {
                         for (const auto& line : fibrancy_report(d, p.fib_m_max, NerveMode::Tdelta, mask))
                           if (!line.pass) {
                             any_fail = true;
                             r.witness = d.name() + ": " + line.generator;
                           }
                         if (any_fail) break;
                       }
                       r.pass = any_fail;
                       if (!any_fail) r.witness = "mask produced no lifting failure";
                     });
      });
    }
  } else if (name == "precat-maps") {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"point", "point"}, {"ord1", "cell"}, {"isocell", "isocell"}, {"cell", "cell"}, {"gpd1", "gpd1"}};
    for (const auto& [an, bn] : pairs) {
      const Fin2Category* a = by_name(corpus, an);
      const Fin2Category* b = by_name(corpus, bn);
      if (!a || !b) continue;
      checks.push_back([a, b]() {
        return timed("precat-maps/" + a->name() + "/" + b->name(), inputs_of({a->name(), b->name()}),
                     [&](CheckRecord& r) {
                       auto rep = check_precat_maps(*a, *b);
                       r.pass = rep.pass;
                       r.witness = rep.detail;
                       r.counts["maps"] = rep.n_maps;
                       r.counts["functors"] = rep.n_functors;
                     });
      });
    }
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }

  return run_checks(name, std::move(checks), p.jobs);
}

}  // namespace twocat
