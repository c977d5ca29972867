#include "schurlc/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <limits>

namespace schurlc {

namespace {

Json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

std::optional<Int> int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Partition> partition_from_json(const Json& j) {
  if (!j.is_array()) return std::nullopt;
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) return std::nullopt;
    parts.push_back(x.get<int>());
  }
  return Partition::make(std::move(parts));
}

}  // namespace

Json schur_vector_to_json(const SchurVector& v) {
  Json out = Json::array();
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    Json term;
    term["lambda"] = it->first.parts();
    term["c"] = int_to_json(it->second);
    out.push_back(std::move(term));
  }
  return out;
}

std::optional<SchurVector> schur_vector_from_json(const Json& j) {
  if (!j.is_array()) return std::nullopt;
  SchurVector v;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("lambda") || !term.contains("c"))
      return std::nullopt;
    auto lambda = partition_from_json(term["lambda"]);
    auto c = int_from_json(term["c"]);
    if (!lambda || !c) return std::nullopt;
    v.add_term(*lambda, *c);
  }
  return v;
}

Json schur_poly_to_json(const SchurPoly& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k)
    out.push_back(schur_vector_to_json(p.coeff(k)));
  return out;
}

std::optional<SchurPoly> schur_poly_from_json(const Json& j) {
  if (!j.is_array()) return std::nullopt;
  std::vector<SchurVector> coeffs;
  for (const auto& entry : j) {
    auto v = schur_vector_from_json(entry);
    if (!v) return std::nullopt;
    coeffs.push_back(std::move(*v));
  }
  return SchurPoly(std::move(coeffs));
}

Json int_poly_to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k).str());
  Json out;
  out["coeffs"] = std::move(coeffs);
  out["text"] = p.to_string();
  return out;
}

Json check_report_to_json(const CheckReport& r) {
  Json witnesses = Json::array();
  for (const Witness& w : r.witnesses) {
    Json entry;
    entry["i"] = w.i;
    entry["j"] = w.j;
    entry["difference"] = schur_vector_to_json(w.difference);
    witnesses.push_back(std::move(entry));
  }
  Json out;
  out["verdict"] = r.verdict;
  out["witnesses"] = std::move(witnesses);
  out["cells_checked"] = r.cells_checked;
  return out;
}

std::string fnv1a64_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

Json data_file_to_json(const std::string& source, const SchurPoly& p) {
  Json poly = schur_poly_to_json(p);
  Json out;
  out["source"] = source;
  out["checksum"] = fnv1a64_digest(poly.dump());
  out["poly"] = std::move(poly);
  return out;
}

std::optional<SchurPoly> schur_poly_from_data_json(const Json& j) {
  if (j.is_array()) return schur_poly_from_json(j);
  if (!j.is_object() || !j.contains("poly")) return std::nullopt;
  if (j.contains("checksum")) {
    // Re-dump through the canonical encoder so formatting differences in the
    // file itself do not matter.
    auto poly = schur_poly_from_json(j["poly"]);
    if (!poly) return std::nullopt;
    const std::string digest =
        fnv1a64_digest(schur_poly_to_json(*poly).dump());
    if (j["checksum"].get<std::string>() != digest) return std::nullopt;
    return poly;
  }
  return schur_poly_from_json(j["poly"]);
}

}  // namespace schurlc
