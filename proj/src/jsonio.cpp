#include "twocat/jsonio.hpp"

#include <fstream>
#include <map>

namespace twocat {

namespace {

std::string obj_name(int a) { return "x" + std::to_string(a); }
std::string one_name(int a, int b, int k) {
  return "f" + std::to_string(a) + "." + std::to_string(b) + "." + std::to_string(k);
}
std::string two_name(int a, int b, int k) {
  return "m" + std::to_string(a) + "." + std::to_string(b) + "." + std::to_string(k);
}

[[noreturn]] void bail(const std::string& where, const std::string& what) {
  throw SchemaError(where.empty() ? what : where + ": " + what);
}

int lookup(const std::map<std::string, int>& m, const std::string& key, const std::string& where,
           const std::string& what) {
  auto it = m.find(key);
  if (it == m.end()) bail(where, what + " '" + key + "' unknown");
  return it->second;
}

}  // namespace

json fincategory_to_json(const FinCategory& c) {
  json j;
  json objects = json::array();
  for (int a = 0; a < c.objects(); ++a) objects.push_back(obj_name(a));
  j["objects"] = objects;
  json mor = json::array();
  for (int f = 0; f < c.morphisms(); ++f)
    mor.push_back({{"id", "a" + std::to_string(f)}, {"src", obj_name(c.src(f))}, {"tgt", obj_name(c.tgt(f))}});
  j["morphisms"] = mor;
  json ids = json::object();
  for (int a = 0; a < c.objects(); ++a) ids[obj_name(a)] = "a" + std::to_string(c.identity(a));
  j["identities"] = ids;
  json comp = json::array();
  for (int f = 0; f < c.morphisms(); ++f)
    for (int g = 0; g < c.morphisms(); ++g)
      if (c.tgt(f) == c.src(g))
        comp.push_back(
            json::array({"a" + std::to_string(f), "a" + std::to_string(g), "a" + std::to_string(c.compose(f, g))}));
  j["compose"] = comp;
  return j;
}

FinCategory fincategory_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bail(where, "category must be an object");
  for (const char* key : {"objects", "morphisms", "identities", "compose"})
    if (!j.contains(key)) bail(where, std::string("missing '") + key + "'");
  std::map<std::string, int> objs, mors;
  int n = 0;
  for (const auto& o : j["objects"]) {
    std::string name = o.get<std::string>();
    if (objs.count(name)) bail(where, "duplicate object '" + name + "'");
    objs[name] = n++;
  }
  std::vector<Mor> mor;
  for (const auto& m : j["morphisms"]) {
    for (const char* key : {"id", "src", "tgt"})
      if (!m.contains(key)) bail(where, std::string("morphism missing '") + key + "'");
    std::string id = m["id"].get<std::string>();
    if (mors.count(id)) bail(where, "duplicate morphism '" + id + "'");
    mors[id] = static_cast<int>(mor.size());
    mor.push_back({lookup(objs, m["src"].get<std::string>(), where, "object"),
                   lookup(objs, m["tgt"].get<std::string>(), where, "object")});
  }
  std::vector<int> ids(n, -1);
  for (auto it = j["identities"].begin(); it != j["identities"].end(); ++it)
    ids[lookup(objs, it.key(), where, "object")] = lookup(mors, it.value().get<std::string>(), where, "morphism");
  for (int a = 0; a < n; ++a)
    if (ids[a] < 0) bail(where, "an object lacks an identity");
  const int m = static_cast<int>(mor.size());
  std::vector<int> table(static_cast<size_t>(m) * m, -1);
  for (const auto& t : j["compose"]) {
    if (!t.is_array() || t.size() != 3) bail(where, "compose entries are triples [first, second, composite]");
    int f = lookup(mors, t[0].get<std::string>(), where, "morphism");
    int g = lookup(mors, t[1].get<std::string>(), where, "morphism");
    int h = lookup(mors, t[2].get<std::string>(), where, "morphism");
    if (mor[f].tgt != mor[g].src)
      bail(where, "compose triple [" + t[0].get<std::string>() + "," + t[1].get<std::string>() +
                      ",...] is not composable");
    table[static_cast<size_t>(f) * m + g] = h;
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (mor[f].tgt == mor[g].src && table[static_cast<size_t>(f) * m + g] < 0)
        bail(where, "compose missing for a composable pair");
  return FinCategory(n, std::move(mor), std::move(ids), std::move(table));
}

json fin2category_to_json(const Fin2Category& d) {
  json j;
  if (!d.name().empty()) j["name"] = d.name();
  json objects = json::array();
  for (int a = 0; a < d.objects(); ++a) objects.push_back(obj_name(a));
  j["objects"] = objects;
  json homs = json::array();
  for (int a = 0; a < d.objects(); ++a)
    for (int b = 0; b < d.objects(); ++b) {
      const FinCategory& h = d.hom(a, b);
      json hj;
      hj["src"] = obj_name(a);
      hj["tgt"] = obj_name(b);
      json cells = json::array();
      for (int k = 0; k < h.objects(); ++k) cells.push_back(one_name(a, b, k));
      json mors = json::array();
      for (int k = 0; k < h.morphisms(); ++k)
        mors.push_back({{"id", two_name(a, b, k)},
                        {"src", one_name(a, b, h.src(k))},
                        {"tgt", one_name(a, b, h.tgt(k))}});
      json vcomp = json::array();
      for (int x = 0; x < h.morphisms(); ++x)
        for (int y = 0; y < h.morphisms(); ++y)
          if (h.tgt(x) == h.src(y))
            vcomp.push_back(json::array({two_name(a, b, x), two_name(a, b, y), two_name(a, b, h.compose(x, y))}));
      json ids = json::object();
      for (int k = 0; k < h.objects(); ++k) ids[one_name(a, b, k)] = two_name(a, b, h.identity(k));
      hj["one_cells"] = cells;
      hj["two_cells"] = mors;
      hj["identities"] = ids;
      hj["vcompose"] = vcomp;
      homs.push_back(hj);
    }
  j["hom"] = homs;
  json id1 = json::object();
  for (int a = 0; a < d.objects(); ++a) id1[obj_name(a)] = one_name(a, a, d.raw().id1[a]);
  j["id1"] = id1;
  json hc = json::array();
  for (int a = 0; a < d.objects(); ++a)
    for (int b = 0; b < d.objects(); ++b)
      for (int c = 0; c < d.objects(); ++c) {
        const FinCategory &hab = d.hom(a, b), &hbc = d.hom(b, c);
        if (hab.objects() == 0 || hbc.objects() == 0) continue;
        json e;
        e["triple"] = json::array({obj_name(a), obj_name(b), obj_name(c)});
        json ones = json::array();
        for (int f = 0; f < hab.objects(); ++f)
          for (int g = 0; g < hbc.objects(); ++g) {
            int v = d.one_local(d.compose1(d.one_cell_id(a, b, f), d.one_cell_id(b, c, g)));
            ones.push_back(json::array({one_name(a, b, f), one_name(b, c, g), one_name(a, c, v)}));
          }
        json twos = json::array();
        for (int x = 0; x < hab.morphisms(); ++x)
          for (int y = 0; y < hbc.morphisms(); ++y) {
            int v = d.two_local(d.hcomp(d.two_cell_id(a, b, x), d.two_cell_id(b, c, y)));
            twos.push_back(json::array({two_name(a, b, x), two_name(b, c, y), two_name(a, c, v)}));
          }
        e["ones"] = ones;
        e["twos"] = twos;
        hc.push_back(e);
      }
  j["hcomp"] = hc;
  return j;
}

Fin2Category fin2category_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bail(where, "2-category must be an object");
  for (const char* key : {"objects", "hom", "id1", "hcomp"})
    if (!j.contains(key)) bail(where, std::string("missing '") + key + "'");
  std::map<std::string, int> objs;
  int n = 0;
  for (const auto& o : j["objects"]) {
    std::string name = o.get<std::string>();
    if (objs.count(name)) bail(where, "duplicate object '" + name + "'");
    objs[name] = n++;
  }
  Fin2Category::Data data;
  data.n_objects = n;
  data.hom.resize(static_cast<size_t>(n) * n);
  std::vector<std::map<std::string, int>> one_names(static_cast<size_t>(n) * n);
  std::vector<std::map<std::string, int>> two_names(static_cast<size_t>(n) * n);
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  for (const auto& hj : j["hom"]) {
    int a = lookup(objs, hj.at("src").get<std::string>(), where, "object");
    int b = lookup(objs, hj.at("tgt").get<std::string>(), where, "object");
    std::string hw =
        where + " hom(" + hj.at("src").get<std::string>() + "," + hj.at("tgt").get<std::string>() + ")";
    if (seen[a * n + b]) bail(hw, "duplicate hom block");
    seen[a * n + b] = 1;
    auto& on = one_names[a * n + b];
    auto& tn = two_names[a * n + b];
    int no = 0;
    for (const auto& c : hj.at("one_cells")) {
      std::string name = c.get<std::string>();
      if (on.count(name)) bail(hw, "duplicate 1-cell '" + name + "'");
      on[name] = no++;
    }
    std::vector<Mor> mor;
    for (const auto& m : hj.at("two_cells")) {
      std::string id = m.at("id").get<std::string>();
      if (tn.count(id)) bail(hw, "duplicate 2-cell '" + id + "'");
      tn[id] = static_cast<int>(mor.size());
      mor.push_back({lookup(on, m.at("src").get<std::string>(), hw, "1-cell"),
                     lookup(on, m.at("tgt").get<std::string>(), hw, "1-cell")});
    }
    std::vector<int> ids(no, -1);
    for (auto it = hj.at("identities").begin(); it != hj.at("identities").end(); ++it)
      ids[lookup(on, it.key(), hw, "1-cell")] = lookup(tn, it.value().get<std::string>(), hw, "2-cell");
    for (int k = 0; k < no; ++k)
      if (ids[k] < 0) bail(hw, "a 1-cell lacks an identity 2-cell");
    const int m = static_cast<int>(mor.size());
    std::vector<int> table(static_cast<size_t>(m) * m, -1);
    for (const auto& t : hj.at("vcompose")) {
      int x = lookup(tn, t[0].get<std::string>(), hw, "2-cell");
      int y = lookup(tn, t[1].get<std::string>(), hw, "2-cell");
      int z = lookup(tn, t[2].get<std::string>(), hw, "2-cell");
      if (mor[x].tgt != mor[y].src) bail(hw, "vcompose triple not composable");
      table[static_cast<size_t>(x) * m + y] = z;
    }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (mor[x].tgt == mor[y].src && table[static_cast<size_t>(x) * m + y] < 0)
          bail(hw, "vcompose missing for a composable pair");
    data.hom[a * n + b] = FinCategory(no, std::move(mor), std::move(ids), std::move(table));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!seen[a * n + b]) bail(where, "missing hom block (" + obj_name(a) + "," + obj_name(b) + ")");
  data.id1.assign(n, -1);
  for (auto it = j["id1"].begin(); it != j["id1"].end(); ++it) {
    int a = lookup(objs, it.key(), where, "object");
    data.id1[a] = lookup(one_names[a * n + a], it.value().get<std::string>(), where, "1-cell");
  }
  for (int a = 0; a < n; ++a)
    if (data.id1[a] < 0) bail(where, "an object lacks an identity 1-cell");

  data.hcomp1.assign(static_cast<size_t>(n) * n * n, {});
  data.hcomp2.assign(static_cast<size_t>(n) * n * n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        size_t key = (static_cast<size_t>(a) * n + b) * n + c;
        data.hcomp1[key].assign(
            static_cast<size_t>(data.hom[a * n + b].objects()) * data.hom[b * n + c].objects(), -1);
        data.hcomp2[key].assign(
            static_cast<size_t>(data.hom[a * n + b].morphisms()) * data.hom[b * n + c].morphisms(), -1);
      }
  for (const auto& e : j["hcomp"]) {
    if (!e.contains("triple")) bail(where, "hcomp entry missing 'triple'");
    int a = lookup(objs, e["triple"][0].get<std::string>(), where, "object");
    int b = lookup(objs, e["triple"][1].get<std::string>(), where, "object");
    int c = lookup(objs, e["triple"][2].get<std::string>(), where, "object");
    std::string hw = where + " hcomp(" + obj_name(a) + "," + obj_name(b) + "," + obj_name(c) + ")";
    size_t key = (static_cast<size_t>(a) * n + b) * n + c;
    int nbc = data.hom[b * n + c].objects();
    int mbc = data.hom[b * n + c].morphisms();
    for (const auto& t : e.at("ones")) {
      int f = lookup(one_names[a * n + b], t[0].get<std::string>(), hw, "1-cell");
      int g = lookup(one_names[b * n + c], t[1].get<std::string>(), hw, "1-cell");
      int v = lookup(one_names[a * n + c], t[2].get<std::string>(), hw, "1-cell");
      data.hcomp1[key][static_cast<size_t>(f) * nbc + g] = v;
    }
    for (const auto& t : e.at("twos")) {
      int x = lookup(two_names[a * n + b], t[0].get<std::string>(), hw, "2-cell");
      int y = lookup(two_names[b * n + c], t[1].get<std::string>(), hw, "2-cell");
      int v = lookup(two_names[a * n + c], t[2].get<std::string>(), hw, "2-cell");
      data.hcomp2[key][static_cast<size_t>(x) * mbc + y] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        size_t key = (static_cast<size_t>(a) * n + b) * n + c;
        for (int v : data.hcomp1[key])
          if (v < 0)
            bail(where,
                 "hcomp ones incomplete at (" + obj_name(a) + "," + obj_name(b) + "," + obj_name(c) + ")");
        for (int v : data.hcomp2[key])
          if (v < 0)
            bail(where,
                 "hcomp twos incomplete at (" + obj_name(a) + "," + obj_name(b) + "," + obj_name(c) + ")");
      }
  Fin2Category out(std::move(data));
  if (j.contains("name")) out.set_name(j["name"].get<std::string>());
  return out;
}

json nps_to_json(const Fin2Category& a, const Fin2Category& b, const Nps& f) {
  json j;
  j["domain"] = fin2category_to_json(a);
  j["codomain"] = fin2category_to_json(b);
  json onobj = json::object(), onone = json::object(), ontwo = json::object();
  for (int p = 0; p < a.objects(); ++p) onobj[obj_name(p)] = obj_name(f.obj[p]);
  for (int g = 0; g < a.one_cells(); ++g) {
    int v = f.one[g];
    onone[one_name(a.one_src(g), a.one_tgt(g), a.one_local(g))] =
        one_name(b.one_src(v), b.one_tgt(v), b.one_local(v));
  }
  for (int x = 0; x < a.two_cells(); ++x) {
    int v = f.two[x];
    ontwo[two_name(a.two_src_obj(x), a.two_tgt_obj(x), a.two_local(x))] =
        two_name(b.two_src_obj(v), b.two_tgt_obj(v), b.two_local(v));
  }
  j["on_objects"] = onobj;
  j["on_one_cells"] = onone;
  j["on_two_cells"] = ontwo;
  json comp = json::array();
  const auto& pairs = a.composable_pairs();
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [ff, gg] = pairs[p];
    int v = f.compositor[p];
    comp.push_back({{"first", one_name(a.one_src(ff), a.one_tgt(ff), a.one_local(ff))},
                    {"second", one_name(a.one_src(gg), a.one_tgt(gg), a.one_local(gg))},
                    {"cell", two_name(b.two_src_obj(v), b.two_tgt_obj(v), b.two_local(v))}});
  }
  j["compositor"] = comp;
  return j;
}

NpsFile nps_from_json(const json& j, const std::string& where) {
  for (const char* key : {"domain", "codomain", "on_objects", "on_one_cells", "on_two_cells", "compositor"})
    if (!j.contains(key)) bail(where, std::string("missing '") + key + "'");
  NpsFile out{fin2category_from_json(j["domain"], where + " domain"),
              fin2category_from_json(j["codomain"], where + " codomain"), Nps{}};
  const Fin2Category& a = out.domain;
  const Fin2Category& b = out.codomain;
  auto parse_obj = [&](const std::string& s) -> int {
    if (s.size() < 2 || s[0] != 'x') bail(where, "bad object name '" + s + "'");
    return std::stoi(s.substr(1));
  };
  auto parse_cell = [&](const Fin2Category& c, const std::string& s, bool two) -> int {
    size_t d1 = s.find('.'), d2 = s.rfind('.');
    if (s.size() < 6 || d1 == std::string::npos || d1 == d2) bail(where, "bad cell name '" + s + "'");
    int p = std::stoi(s.substr(1, d1 - 1));
    int q = std::stoi(s.substr(d1 + 1, d2 - d1 - 1));
    int k = std::stoi(s.substr(d2 + 1));
    return two ? c.two_cell_id(p, q, k) : c.one_cell_id(p, q, k);
  };
  out.map.obj.assign(a.objects(), -1);
  for (auto it = j["on_objects"].begin(); it != j["on_objects"].end(); ++it)
    out.map.obj[parse_obj(it.key())] = parse_obj(it.value().get<std::string>());
  out.map.one.assign(a.one_cells(), -1);
  for (auto it = j["on_one_cells"].begin(); it != j["on_one_cells"].end(); ++it)
    out.map.one[parse_cell(a, it.key(), false)] = parse_cell(b, it.value().get<std::string>(), false);
  out.map.two.assign(a.two_cells(), -1);
  for (auto it = j["on_two_cells"].begin(); it != j["on_two_cells"].end(); ++it)
    out.map.two[parse_cell(a, it.key(), true)] = parse_cell(b, it.value().get<std::string>(), true);
  out.map.compositor.assign(a.composable_pairs().size(), -1);
  for (const auto& e : j["compositor"]) {
    int ff = parse_cell(a, e.at("first").get<std::string>(), false);
    int gg = parse_cell(a, e.at("second").get<std::string>(), false);
    if (a.one_tgt(ff) != a.one_src(gg)) bail(where, "compositor entry on a non-composable pair");
    out.map.compositor[a.pair_index(ff, gg)] = parse_cell(b, e.at("cell").get<std::string>(), true);
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw SchemaError(path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

}  // namespace twocat
