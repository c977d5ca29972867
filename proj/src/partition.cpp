#include "schurlc/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "schurlc/errors.hpp"

namespace schurlc {

namespace {

bool valid_parts(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  auto made = make(std::move(parts));
  if (!made) throw degenerate_shape_error("degenerate shape: invalid partition");
  parts_ = std::move(made->parts_);
}

std::optional<Partition> Partition::make(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!valid_parts(parts)) return std::nullopt;
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

std::optional<Partition> Partition::from_runs(
    std::initializer_list<std::pair<int, int>> runs) {
  return from_runs(std::vector<std::pair<int, int>>(runs));
}

std::optional<Partition> Partition::from_runs(
    const std::vector<std::pair<int, int>>& runs) {
  std::vector<int> parts;
  for (auto [value, count] : runs) {
    if (count < 0) return std::nullopt;  // negative repetition is degenerate
    if (count > 0 && value < 0) return std::nullopt;
    parts.insert(parts.end(), static_cast<std::size_t>(count), value);
  }
  return make(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part_at(int i) const {
  if (i < 0 || i >= length()) return 0;
  return parts_[static_cast<std::size_t>(i)];
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  out.resize(static_cast<std::size_t>(parts_[0]));
  for (int col = 1; col <= parts_[0]; ++col) {
    int rows = 0;
    for (int p : parts_)
      if (p >= col) ++rows;
    out[static_cast<std::size_t>(col - 1)] = rows;
  }
  return Partition(std::move(out));
}

std::vector<int> Partition::hook_lengths() const {
  const Partition conj = conjugate();
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j)
      hooks.push_back(parts_[i] - j + conj.part_at(j) - i - 1);
  std::sort(hooks.begin(), hooks.end(), std::greater<int>());
  return hooks;
}

long long Partition::n_stat() const {
  long long acc = 0;
  for (int i = 0; i < length(); ++i)
    acc += static_cast<long long>(i) * parts_[i];
  return acc;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::optional<Partition> Partition::parse(std::string_view text) {
  // Strip surrounding whitespace.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  // Numeric parse succeeded; shape validity is the caller's concern, so a
  // non-partition like "7,9" maps to nullopt via make as well.
  return make(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner) {
  auto made = make(std::move(outer), std::move(inner));
  if (!made)
    throw degenerate_shape_error("degenerate shape: inner not contained in outer");
  *this = *made;
}

std::optional<SkewShape> SkewShape::make(Partition outer, Partition inner) {
  if (!outer.contains(inner)) return std::nullopt;
  SkewShape s;
  s.outer_ = std::move(outer);
  s.inner_ = std::move(inner);
  return s;
}

SkewShape SkewShape::rotate180() const {
  const int rows = outer_.length();
  if (rows == 0) return SkewShape();
  const int width = outer_.part_at(0);
  std::vector<int> new_outer(static_cast<std::size_t>(rows));
  std::vector<int> new_inner(static_cast<std::size_t>(rows));
  for (int k = 0; k < rows; ++k) {
    new_outer[static_cast<std::size_t>(k)] = width - inner_.part_at(rows - 1 - k);
    new_inner[static_cast<std::size_t>(k)] = width - outer_.part_at(rows - 1 - k);
  }
  return SkewShape(Partition(std::move(new_outer)), Partition(std::move(new_inner)));
}

std::string SkewShape::to_string() const {
  return outer_.to_string() + "/" + inner_.to_string();
}

std::optional<SkewShape> SkewShape::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  std::optional<Partition> outer, inner;
  if (slash == std::string_view::npos) {
    outer = Partition::parse(text);
    inner = Partition();
  } else {
    outer = Partition::parse(text.substr(0, slash));
    inner = Partition::parse(text.substr(slash + 1));
  }
  if (!outer || !inner) return std::nullopt;
  return make(std::move(*outer), std::move(*inner));
}

std::pair<Partition, Partition> sort_split(const Partition& a,
                                           const Partition& b) {
  std::vector<int> merged = a.parts();
  merged.insert(merged.end(), b.parts().begin(), b.parts().end());
  std::sort(merged.begin(), merged.end(), std::greater<int>());
  std::vector<int> odd, even;
  for (std::size_t i = 0; i < merged.size(); ++i)
    (i % 2 == 0 ? odd : even).push_back(merged[i]);
  return {Partition(std::move(odd)), Partition(std::move(even))};
}

std::pair<Partition, Partition> midpoint_pair(const Partition& a,
                                              const Partition& b) {
  const int len = std::max(a.length(), b.length());
  std::vector<int> hi, lo;
  hi.reserve(static_cast<std::size_t>(len));
  lo.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int s = a.part_at(i) + b.part_at(i);
    hi.push_back((s + 1) / 2);
    lo.push_back(s / 2);
  }
  return {Partition(std::move(hi)), Partition(std::move(lo))};
}

std::pair<Partition, Partition> star_pair(const Partition& mu,
                                          const Partition& nu) {
  const int len = std::max(mu.length(), nu.length());
  // Content statistics mu_k - k and nu_j - j on the zero-padded pair.
  std::vector<int> cmu, cnu;
  for (int k = 1; k <= len; ++k) cmu.push_back(mu.part_at(k - 1) - k);
  for (int j = 1; j <= len; ++j) cnu.push_back(nu.part_at(j - 1) - j);
  std::vector<int> lambda(static_cast<std::size_t>(len)),
      rho(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) {
    int count = 0;
    for (int j = 0; j < len; ++j)
      if (cnu[j] >= cmu[k]) ++count;
    lambda[static_cast<std::size_t>(k)] = cmu[k] + count;
  }
  for (int j = 0; j < len; ++j) {
    int count = 0;
    for (int k = 0; k < len; ++k)
      if (cmu[k] > cnu[j]) ++count;
    rho[static_cast<std::size_t>(j)] = cnu[j] + 1 + count;
  }
  return {Partition(std::move(lambda)), Partition(std::move(rho))};
}

}  // namespace schurlc
