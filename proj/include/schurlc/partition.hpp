#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schurlc {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0. Values are immutable
/// after construction and all operations on them are pure.
///
/// Trailing zeros are trimmed on construction, so equality is always on the
/// trimmed form. Constructions that would need a negative repetition count
/// or a negative part (the degenerate shapes of exponent notation) are
/// rejected: `make`/`from_runs` return nullopt, the checked constructors
/// throw degenerate_shape_error.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Trims trailing zeros; nullopt if the remaining parts are not weakly
  /// decreasing positive integers.
  static std::optional<Partition> make(std::vector<int> parts);

  /// Exponent-notation builder: {{a,k},{b,l},...} denotes (a^k, b^l, ...).
  /// A zero count denotes absence; a negative count or a negative value with
  /// positive count is degenerate and yields nullopt.
  static std::optional<Partition> from_runs(
      std::initializer_list<std::pair<int, int>> runs);
  static std::optional<Partition> from_runs(
      const std::vector<std::pair<int, int>>& runs);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                 // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 0-indexed part access, 0 beyond the last part.
  int part_at(int i) const;

  bool contains(const Partition& inner) const;
  Partition conjugate() const;
  /// Hook lengths of all cells, as a descending-sorted multiset.
  std::vector<int> hook_lengths() const;
  /// The statistic n(lambda) = sum over rows i (1-indexed) of (i-1)*lambda_i.
  long long n_stat() const;

  /// Text form "6,5,4"; the empty partition prints as "-".
  std::string to_string() const;
  static std::optional<Partition> parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A skew shape: an ordered pair of partitions with inner contained in
/// outer. The checked constructor throws degenerate_shape_error.
class SkewShape {
 public:
  SkewShape() = default;  // the empty shape ()/()
  SkewShape(Partition outer, Partition inner);
  static std::optional<SkewShape> make(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }

  /// The shape obtained by rotating the diagram 180 degrees inside the
  /// bounding rectangle length(outer) x outer.parts[0], trailing zero parts
  /// trimmed.
  SkewShape rotate180() const;

  /// Text form "6,5,4/3,2"; straight shapes print as "6,5,4/-".
  std::string to_string() const;
  /// Accepts "6,5,4/3,2", "3/-", "-/-" and, for convenience, a bare
  /// partition "3" meaning the straight shape.
  static std::optional<SkewShape> parse(std::string_view text);

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_, inner_;
};

/// Merge the parts of a and b into one weakly decreasing sequence
/// alpha_1 >= alpha_2 >= ... and split by parity of position:
/// ((alpha_1,alpha_3,...), (alpha_2,alpha_4,...)).
std::pair<Partition, Partition> sort_split(const Partition& a,
                                           const Partition& b);

/// Coordinate-wise (ceil((a+b)/2), floor((a+b)/2)) after zero-padding to a
/// common length. The ceil half dominates the floor half coordinate-wise.
std::pair<Partition, Partition> midpoint_pair(const Partition& a,
                                              const Partition& b);

/// The star operation on an ordered pair of partitions:
///   lambda_k = mu_k - k + #{ j : nu_j - j >= mu_k - k }
///   rho_j    = nu_j - j + 1 + #{ k : mu_k - k > nu_j - j }
/// computed after zero-padding both inputs to the same number of parts.
std::pair<Partition, Partition> star_pair(const Partition& mu,
                                          const Partition& nu);

}  // namespace schurlc
