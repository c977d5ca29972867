#include "schurlc/product_cache.hpp"

#include <fstream>
#include <mutex>

#include "json.hpp"

namespace schurlc {

ProductCache& ProductCache::instance() {
  static ProductCache cache;
  return cache;
}

std::pair<Partition, Partition> ProductCache::key(const Partition& a,
                                                  const Partition& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

bool ProductCache::lookup(const Partition& a, const Partition& b,
                          SchurVector& out) const {
  if (!enabled_) return false;
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key(a, b));
  if (it == entries_.end()) return false;
  out = it->second;
  return true;
}

void ProductCache::store(const Partition& a, const Partition& b,
                         SchurVector value) {
  if (!enabled_) return;
  std::unique_lock lock(mutex_);
  entries_.emplace(key(a, b), std::move(value));
}

void ProductCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::size_t ProductCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

namespace {

nlohmann::json partition_to_json(const Partition& p) {
  return nlohmann::json(p.parts());
}

std::optional<Partition> partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) return std::nullopt;
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) return std::nullopt;
    parts.push_back(x.get<int>());
  }
  return Partition::make(std::move(parts));
}

}  // namespace

bool ProductCache::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("entries"))
    return false;
  std::unique_lock lock(mutex_);
  for (const auto& entry : doc["entries"]) {
    auto a = partition_from_json(entry.value("a", nlohmann::json()));
    auto b = partition_from_json(entry.value("b", nlohmann::json()));
    if (!a || !b || !entry.contains("product")) continue;
    SchurVector v;
    bool ok = true;
    for (const auto& term : entry["product"]) {
      auto lambda = partition_from_json(term.value("lambda", nlohmann::json()));
      if (!lambda || !term.contains("c")) {
        ok = false;
        break;
      }
      const auto& c = term["c"];
      if (c.is_number_integer())
        v.add_term(*lambda, Int(c.get<long long>()));
      else if (c.is_string())
        v.add_term(*lambda, Int(c.get<std::string>()));
      else {
        ok = false;
        break;
      }
    }
    if (ok) entries_.emplace(key(*a, *b), std::move(v));
  }
  return true;
}

bool ProductCache::save_file(const std::string& path) const {
  nlohmann::json entries = nlohmann::json::array();
  {
    std::shared_lock lock(mutex_);
    for (const auto& [k, v] : entries_) {
      nlohmann::json product = nlohmann::json::array();
      for (const auto& [lambda, c] : v.terms()) {
        nlohmann::json term;
        term["lambda"] = partition_to_json(lambda);
        if (c >= std::numeric_limits<long long>::min() &&
            c <= std::numeric_limits<long long>::max())
          term["c"] = static_cast<long long>(c);
        else
          term["c"] = c.str();
        product.push_back(std::move(term));
      }
      entries.push_back({{"a", partition_to_json(k.first)},
                         {"b", partition_to_json(k.second)},
                         {"product", std::move(product)}});
    }
  }
  nlohmann::json doc;
  doc["version"] = 1;
  doc["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) return false;
  out << doc.dump();
  return bool(out);
}

}  // namespace schurlc
