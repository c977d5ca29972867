#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "schurlc/intpoly.hpp"
#include "schurlc/logconcave.hpp"
#include "schurlc/schur.hpp"

namespace schurlc {

/// Canonical JSON throughout: objects keep insertion order, Schur terms are
/// listed in descending lexicographic partition order, no zero terms, and
/// integer coefficients are emitted as JSON numbers when they fit in 64 bits
/// and as decimal strings otherwise.
using Json = nlohmann::ordered_json;

Json schur_vector_to_json(const SchurVector& v);
std::optional<SchurVector> schur_vector_from_json(const Json& j);

Json schur_poly_to_json(const SchurPoly& p);
std::optional<SchurPoly> schur_poly_from_json(const Json& j);

Json int_poly_to_json(const IntPoly& p);

Json check_report_to_json(const CheckReport& r);

/// FNV-1a 64-bit digest, rendered as "fnv1a64:<hex>".
std::string fnv1a64_digest(const std::string& bytes);

/// Data file wrapper for ingested constants: {"source", "checksum", "poly"}.
Json data_file_to_json(const std::string& source, const SchurPoly& p);
/// Accepts either a wrapped data file or a bare SchurPoly array; a wrapped
/// file with a checksum that does not match its poly is rejected.
std::optional<SchurPoly> schur_poly_from_data_json(const Json& j);

}  // namespace schurlc
