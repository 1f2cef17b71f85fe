#include "twocat/corpus.hpp"

#include <algorithm>
#include <filesystem>

#include "twocat/jsonio.hpp"

namespace twocat {

std::vector<Fin2Category> default_corpus() {
  std::vector<Fin2Category> out;
  auto add = [&](Fin2Category d, const std::string& name) {
    d.set_name(name);
    out.push_back(std::move(d));
  };
  add(terminal_two_category(), "point");
  add(discrete_two_category(ordinal_category(1)), "ord1");
  add(discrete_two_category(ordinal_category(2)), "ord2");
  add(discrete_two_category(ordinal_category(3)), "ord3");
  add(discrete_two_category(chaotic_category(1)), "gpd1");
  add(discrete_two_category(chaotic_category(2)), "gpd2");
  add(walking_two_cell(), "cell");
  add(walking_two_iso(), "isocell");
  add(theta_category(2, {1, 0}), "theta-2-10");
  add(theta_category(2, {1, 1}), "theta-2-11");
  add(theta_category(3, {1, 1, 1}), "theta-3-111");
  add(ch_star(walking_retract()), "retract");
  add(sigma(product_category(ordinal_category(1), chaotic_category(1))), "cylinder");
  return out;
}

std::vector<Fin2Category> corpus_load(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<Fin2Category> out;
  for (const auto& f : files) {
    // schema-level validation only; the laws suite owns the law checks, so a
    // corpus with a seeded violation still loads and fails exactly there
    Fin2Category d = fin2category_from_json(load_json_file(f), f);
    if (d.name().empty()) d.set_name(fs::path(f).stem().string());
    out.push_back(std::move(d));
  }
  return out;
}

void corpus_save(const std::string& dir, const std::vector<Fin2Category>& corpus) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  int index = 0;
  for (const auto& d : corpus) {
    std::string stem = d.name().empty() ? "member" + std::to_string(index) : d.name();
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d", index);
    save_json_file(dir + "/" + buf + "-" + stem + ".json", fin2category_to_json(d));
    ++index;
  }
}

}  // namespace twocat
