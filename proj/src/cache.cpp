#include "wcalc/cache.hpp"

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "wcalc/util.hpp"

namespace wcalc {

namespace fs = std::filesystem;

std::filesystem::path cache_file_path(const fs::path& dir, const std::string& type_string) {
  return dir / ("weyl-" + type_string + "-v" + std::to_string(kCacheSchemaVersion) + ".json");
}

namespace {

bool try_load(const WeylGroup& g, const fs::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception&) {
    return false;
  }
  if (!doc.is_object()) return false;
  if (doc.value("schema", -1) != kCacheSchemaVersion) return false;
  if (doc.value("type", std::string()) != g.rs().type_string()) return false;
  if (doc.value("order", std::uint64_t{0}) != g.order()) return false;
  if (!doc.contains("words") || !doc["words"].is_array() ||
      doc["words"].size() != g.order())
    return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (doc["words"][i] != g.to_string(g.at(i))) return false;
  std::vector<std::uint64_t> blob;
  if (!doc.contains("bruhat_hex") || !doc["bruhat_hex"].is_string() ||
      !from_hex(doc["bruhat_hex"].get<std::string>(), blob))
    return false;
  return g.install_bruhat_blob(std::move(blob));
}

void save(const WeylGroup& g, const fs::path& file) {
  nlohmann::ordered_json doc;
  doc["schema"] = kCacheSchemaVersion;
  doc["type"] = g.rs().type_string();
  doc["order"] = g.order();
  auto words = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.order(); ++i) words.push_back(g.to_string(g.at(i)));
  doc["words"] = std::move(words);
  doc["bruhat_hex"] = to_hex(g.bruhat_blob());

  fs::create_directories(file.parent_path());
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump() << "\n";
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, file);
}

}  // namespace

bool attach_bruhat_cache(const WeylGroup& g, const fs::path& dir) {
  fs::path file = cache_file_path(dir, g.rs().type_string());
  bool existed = fs::exists(file);
  if (existed && try_load(g, file)) return true;
  if (existed)
    std::cerr << "warning: cache file " << file.string()
              << " is unusable, rebuilding\n";
  (void)g.bruhat_blob();  // force the build
  save(g, file);
  return false;
}

int clear_cache(const fs::path& dir) {
  if (!fs::exists(dir)) return 0;
  int removed = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("weyl-", 0) == 0 && name.size() > 5 &&
        entry.path().extension() == ".json") {
      fs::remove(entry.path());
      ++removed;
    }
  }
  return removed;
}

}  // namespace wcalc
