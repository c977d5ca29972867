#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>

#include "schurlc/partition.hpp"
#include "schurlc/schur.hpp"

namespace schurlc {

/// Process-wide memo for Schur basis products, keyed by the unordered pair
/// of factors. Purely a performance device: enabling, disabling or
/// prepopulating it never changes any computed value, and lookups/inserts
/// are safe for concurrent use.
class ProductCache {
 public:
  static ProductCache& instance();

  void set_enabled(bool on) { enabled_ = on; }
  bool enabled() const { return enabled_; }

  bool lookup(const Partition& a, const Partition& b, SchurVector& out) const;
  void store(const Partition& a, const Partition& b, SchurVector value);

  void clear();
  std::size_t size() const;

  /// Optional persistence (the SCHURLC_CACHE knob). Loading tolerates a
  /// missing file; malformed content is reported as false and ignored.
  bool load_file(const std::string& path);
  bool save_file(const std::string& path) const;

 private:
  ProductCache() = default;
  static std::pair<Partition, Partition> key(const Partition& a,
                                             const Partition& b);

  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Partition>, SchurVector> entries_;
  bool enabled_ = true;
};

}  // namespace schurlc
