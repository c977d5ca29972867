#include "schurlc/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "schurlc/errors.hpp"
#include "schurlc/product_cache.hpp"

namespace schurlc {

SchurVector SchurVector::basis(Partition lambda) {
  SchurVector v;
  v.terms_.emplace(std::move(lambda), Int(1));
  return v;
}

Int SchurVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Int(0) : it->second;
}

void SchurVector::add_term(const Partition& lambda, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SchurVector::is_schur_positive() const {
  for (const auto& [lambda, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::optional<int> SchurVector::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  const int n = terms_.begin()->first.size();
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() != n) return std::nullopt;
  return n;
}

SchurVector& SchurVector::operator+=(const SchurVector& rhs) {
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& rhs) {
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, -c);
  return *this;
}

SchurVector& SchurVector::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= scalar;
  return *this;
}

SchurVector SchurVector::operator-() const {
  SchurVector out(*this);
  for (auto& [lambda, c] : out.terms_) c = -c;
  return out;
}

std::string SchurVector::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending lexicographic order, matching the canonical JSON layout.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const Int mag = abs(c);
    if (mag != 1) out += mag.str() + " ";
    out += "s(" + (it->first.empty() ? std::string() : it->first.to_string()) + ")";
  }
  return out;
}

Int syt_count(const Partition& lambda) {
  Int hooks = 1;
  for (int h : lambda.hook_lengths()) hooks *= h;
  return factorial(lambda.size()) / hooks;
}

Int dimension(const SchurVector& f) {
  Int acc = 0;
  for (const auto& [lambda, c] : f.terms()) acc += c * syt_count(lambda);
  return acc;
}

bool is_schur_positive(const SchurVector& f) { return f.is_schur_positive(); }

namespace {

// ---------------------------------------------------------------------------
// Cell-by-cell enumeration of lattice semistandard fillings of a skew
// diagram, visiting cells in reverse reading order (each row right to left,
// rows top to bottom) so the lattice-word condition can be checked
// incrementally as entries are placed.
// ---------------------------------------------------------------------------

struct SkewFillState {
  std::vector<int> outer, inner;          // zero-padded rows of the shape
  std::vector<std::vector<int>> entries;  // entries[row][col], 0-indexed
  std::vector<int> letter_count;          // occurrences of each letter so far
  const std::vector<int>* content = nullptr;  // content bound, if fixed
  std::function<void(const std::vector<int>&)> emit;  // final letter counts
};

void fill_cells(SkewFillState& st, int row, int col) {
  const int rows = static_cast<int>(st.outer.size());
  if (row == rows) {
    st.emit(st.letter_count);
    return;
  }
  // Advance to the next cell in reverse reading order.
  if (col < st.inner[static_cast<std::size_t>(row)]) {
    int next = row + 1;
    if (next < rows)
      fill_cells(st, next, st.outer[static_cast<std::size_t>(next)] - 1);
    else
      fill_cells(st, rows, 0);
    return;
  }

  int lo = 1;
  if (row > 0 && col < st.outer[static_cast<std::size_t>(row - 1)] &&
      col >= st.inner[static_cast<std::size_t>(row - 1)]) {
    lo = st.entries[static_cast<std::size_t>(row - 1)]
                   [static_cast<std::size_t>(col)] + 1;  // strict down columns
  }
  int hi = row + 1;  // lattice fillings never exceed the row index
  if (col + 1 < st.outer[static_cast<std::size_t>(row)]) {
    hi = std::min(hi, st.entries[static_cast<std::size_t>(row)]
                                [static_cast<std::size_t>(col + 1)]);
  }
  const int max_letter = static_cast<int>(st.letter_count.size());
  hi = std::min(hi, max_letter);
  for (int v = lo; v <= hi; ++v) {
    int& cnt = st.letter_count[static_cast<std::size_t>(v - 1)];
    if (st.content &&
        cnt >= (*st.content)[static_cast<std::size_t>(v - 1)]) continue;
    if (v > 1 && cnt >= st.letter_count[static_cast<std::size_t>(v - 2)])
      continue;  // lattice prefix condition
    st.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
    ++cnt;
    fill_cells(st, row, col - 1 >= 0 ? col - 1 : -1);
    --cnt;
  }
}

void enumerate_skew_fillings(const SkewShape& shape,
                             const std::vector<int>* content,
                             std::function<void(const std::vector<int>&)> emit) {
  const int rows = shape.outer().length();
  SkewFillState st;
  st.outer.resize(static_cast<std::size_t>(rows));
  st.inner.resize(static_cast<std::size_t>(rows));
  st.entries.resize(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    st.outer[static_cast<std::size_t>(i)] = shape.outer().part_at(i);
    st.inner[static_cast<std::size_t>(i)] = shape.inner().part_at(i);
    st.entries[static_cast<std::size_t>(i)].resize(
        static_cast<std::size_t>(shape.outer().part_at(i)), 0);
  }
  st.letter_count.assign(
      content ? content->size() : static_cast<std::size_t>(std::max(rows, 1)),
      0);
  st.content = content;
  st.emit = std::move(emit);
  if (rows == 0) {
    if (!content || content->empty()) st.emit(st.letter_count);
    return;
  }
  fill_cells(st, 0, st.outer[0] - 1);
}

}  // namespace

Int lr_coefficient(const Partition& lam, const Partition& mu,
                   const Partition& nu) {
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (!lam.contains(mu)) return 0;
  auto shape = SkewShape::make(lam, mu);
  if (!shape) return 0;
  const std::vector<int>& content = nu.parts();
  Int count = 0;
  enumerate_skew_fillings(*shape, &content,
                          [&count](const std::vector<int>&) { ++count; });
  return count;
}

SchurVector skew_expand(const SkewShape& shape) {
  SchurVector out;
  enumerate_skew_fillings(shape, nullptr,
                          [&out](const std::vector<int>& counts) {
                            // Lattice words have weakly decreasing content.
                            out.add_term(Partition(counts), 1);
                          });
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Product of two Schur basis elements by growing the content partition onto
// the base shape letter by letter, each letter a horizontal strip, with the
// lattice condition checked via cumulative per-row letter counts.
// ---------------------------------------------------------------------------

struct GrowState {
  std::vector<int> shape;       // current shape, zero padded
  std::vector<int> prev_shape;  // shape before the current letter's strip
  std::vector<int> cum_prev;    // cum_prev[r] = # of previous letter in rows <= r
  std::vector<int> cum_cur;     // same for the current letter
  std::vector<int> content;     // the partition being multiplied in
  SchurVector* out = nullptr;
};

void grow_letter(GrowState& st, int v);

void grow_strip(GrowState& st, int v, int row, int remaining) {
  if (remaining == 0) {
    const int rows = static_cast<int>(st.shape.size());
    for (int r = row; r <= rows; ++r)
      st.cum_cur[static_cast<std::size_t>(r)] =
          st.cum_cur[static_cast<std::size_t>(row - 1)];
    grow_letter(st, v + 1);
    return;
  }
  const int rows = static_cast<int>(st.shape.size());
  if (row > rows) return;
  const std::size_t ri = static_cast<std::size_t>(row - 1);
  int cap = remaining;
  if (row >= 2)
    cap = std::min(cap, st.prev_shape[ri - 1] - st.shape[ri]);
  if (v >= 2)
    cap = std::min(cap, st.cum_prev[ri] - st.cum_cur[ri]);
  for (int add = 0; add <= cap; ++add) {
    st.shape[ri] += add;
    st.cum_cur[static_cast<std::size_t>(row)] = st.cum_cur[ri] + add;
    grow_strip(st, v, row + 1, remaining - add);
    st.shape[ri] -= add;
  }
}

void grow_letter(GrowState& st, int v) {
  if (v > static_cast<int>(st.content.size())) {
    st.out->add_term(Partition(st.shape), 1);
    return;
  }
  const std::vector<int> saved_prev_shape = st.prev_shape;
  const std::vector<int> saved_cum_prev = st.cum_prev;
  st.prev_shape = st.shape;
  st.cum_prev = st.cum_cur;
  std::fill(st.cum_cur.begin(), st.cum_cur.end(), 0);
  grow_strip(st, v, 1, st.content[static_cast<std::size_t>(v - 1)]);
  // Restore the caller's view: cum_cur again holds the previous letter's
  // cumulative counts, cum_prev the one before that.
  st.cum_cur = st.cum_prev;
  st.prev_shape = saved_prev_shape;
  st.cum_prev = saved_cum_prev;
}

SchurVector basis_product_uncached(const Partition& base,
                                   const Partition& content) {
  SchurVector out;
  const int rows = base.length() + content.length();
  GrowState st;
  st.shape.resize(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < base.length(); ++i)
    st.shape[static_cast<std::size_t>(i)] = base.part_at(i);
  st.prev_shape = st.shape;
  st.cum_prev.assign(static_cast<std::size_t>(rows + 1), 0);
  st.cum_cur.assign(static_cast<std::size_t>(rows + 1), 0);
  st.content = content.parts();
  st.out = &out;
  if (rows == 0) {
    out.add_term(Partition(), 1);
    return out;
  }
  grow_letter(st, 1);
  return out;
}

}  // namespace

SchurVector schur_product(const Partition& lambda, const Partition& mu) {
  // Canonicalize the factor order so cached and uncached runs follow the
  // same enumeration; the product is symmetric.
  const Partition& small = std::min(lambda, mu);
  const Partition& large = std::max(lambda, mu);
  ProductCache& cache = ProductCache::instance();
  SchurVector cached;
  if (cache.lookup(small, large, cached)) return cached;
  SchurVector result = basis_product_uncached(large, small);
  cache.store(small, large, result);
  return result;
}

SchurVector schur_product(const SchurVector& f, const SchurVector& g) {
  SchurVector out;
  for (const auto& [lambda, c] : f.terms()) {
    for (const auto& [mu, d] : g.terms()) {
      SchurVector prod = schur_product(lambda, mu);
      const Int scale = c * d;
      for (const auto& [nu, e] : prod.terms()) out.add_term(nu, scale * e);
    }
  }
  return out;
}

namespace {

void pieri_rows(const std::vector<int>& lam, int row, int remaining,
                std::vector<int>& cur, const Int& coeff, SchurVector& out) {
  const int rows = static_cast<int>(cur.size());
  if (row == rows) {
    if (remaining == 0) out.add_term(Partition(cur), coeff);
    return;
  }
  const std::size_t ri = static_cast<std::size_t>(row);
  // Boxes added to this row may not pass the previous shape's row above.
  int cap = remaining;
  if (row > 0)
    cap = std::min(cap, lam[ri - 1] - lam[ri]);
  for (int add = 0; add <= cap; ++add) {
    cur[ri] = lam[ri] + add;
    pieri_rows(lam, row + 1, remaining - add, cur, coeff, out);
  }
  cur[ri] = lam[ri];
}

}  // namespace

SchurVector pieri_multiply(const SchurVector& f, int n) {
  if (n < 0) throw std::invalid_argument("pieri_multiply: negative strip size");
  if (n == 0) return f;
  SchurVector out;
  for (const auto& [lambda, c] : f.terms()) {
    std::vector<int> lam(static_cast<std::size_t>(lambda.length() + 1), 0);
    for (int i = 0; i < lambda.length(); ++i)
      lam[static_cast<std::size_t>(i)] = lambda.part_at(i);
    std::vector<int> cur = lam;
    pieri_rows(lam, 0, n, cur, c, out);
  }
  return out;
}

namespace {

// h-monomial -> Schur conversion used by the Jacobi-Trudi oracle. Uses Pieri
// steps only, memoized on the sorted exponent multiset.
SchurVector h_monomial_to_schur(const std::vector<int>& sorted_parts) {
  static std::map<std::vector<int>, SchurVector> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(sorted_parts);
    if (it != memo.end()) return it->second;
  }
  SchurVector acc = SchurVector::unit();
  for (int p : sorted_parts) acc = pieri_multiply(acc, p);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(sorted_parts, acc);
  }
  return acc;
}

// Signed expansion of det(h_{lambda_i - mu_j - i + j}), skipping zero
// entries (negative subscripts). Collects h-monomials with signs.
void det_rows(const std::vector<int>& lam, const std::vector<int>& mu, int row,
              std::vector<bool>& used, std::vector<int>& parts, int sign,
              std::map<std::vector<int>, Int>& monomials) {
  const int n = static_cast<int>(lam.size());
  if (row == n) {
    std::vector<int> key = parts;
    std::sort(key.begin(), key.end(), std::greater<int>());
    monomials[key] += sign;
    return;
  }
  int unused_before = 0;
  for (int col = 0; col < n; ++col) {
    if (used[static_cast<std::size_t>(col)]) continue;
    const int e = lam[static_cast<std::size_t>(row)] -
                  mu[static_cast<std::size_t>(col)] - row + col;
    if (e >= 0) {
      const int term_sign = (unused_before % 2 == 0) ? sign : -sign;
      used[static_cast<std::size_t>(col)] = true;
      if (e > 0) parts.push_back(e);
      det_rows(lam, mu, row + 1, used, parts, term_sign, monomials);
      if (e > 0) parts.pop_back();
      used[static_cast<std::size_t>(col)] = false;
    }
    ++unused_before;
  }
}

}  // namespace

SchurVector jacobi_trudi_expand(const SkewShape& shape) {
  const int n = shape.outer().length();
  std::vector<int> lam(static_cast<std::size_t>(n)),
      mu(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    lam[static_cast<std::size_t>(i)] = shape.outer().part_at(i);
    mu[static_cast<std::size_t>(i)] = shape.inner().part_at(i);
  }
  std::map<std::vector<int>, Int> monomials;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> parts;
  det_rows(lam, mu, 0, used, parts, 1, monomials);
  SchurVector out;
  for (const auto& [mono, coeff] : monomials) {
    if (coeff == 0) continue;
    SchurVector term = h_monomial_to_schur(mono);
    term *= coeff;
    out += term;
  }
  return out;
}

SchurVector hook_product_closed_form(int m, int a, int n, int b) {
  if (m < 1 || n < 1 || a < 0 || b < 0)
    throw std::invalid_argument("hook_product_closed_form: need m,n >= 1 and a,b >= 0");
  if (a + b == 0) throw std::invalid_argument("use Pieri");
  SchurVector out;
  auto add_shape = [&out](std::optional<Partition> p) {
    if (p) out.add_term(*p, 1);  // degenerate summands contribute nothing
  };
  // First family: the extra letter 2 occupies the first column at row b+2.
  // When b = 0 that row is the second row, which already carries the j
  // ones, so only j = 0 admits a filling there.
  for (int j = 0; j <= std::min(m, n - 1) && (b >= 1 || j == 0); ++j)
    add_shape(Partition::from_runs(
        {{m + n - j, 1}, {j + 1, 1}, {1, a + b - 1}}));
  for (int r = 1; r <= std::min(a, b - 1); ++r)
    for (int j = 1; j <= std::min(m, n - 1); ++j)
      add_shape(Partition::from_runs(
          {{m + n - j, 1}, {j + 1, 1}, {2, r}, {1, a + b - 2 * r - 1}}));
  for (int r = 0; r <= std::min(a - 1, b - 1); ++r)
    for (int j = 1; j <= std::min(m, n); ++j)
      add_shape(Partition::from_runs(
          {{m + n - j + 1, 1}, {j + 1, 1}, {2, r}, {1, a + b - 2 * r - 2}}));
  for (int j = 0; j <= std::min(m - 1, n - 1); ++j)
    add_shape(Partition::from_runs(
        {{m + n - j - 1, 1}, {j + 1, 1}, {1, a + b}}));
  for (int r = 1; r <= std::min(a, b); ++r)
    for (int j = 1; j <= std::min(m - 1, n - 1); ++j)
      add_shape(Partition::from_runs(
          {{m + n - j - 1, 1}, {j + 1, 1}, {2, r}, {1, a + b - 2 * r}}));
  for (int r = 0; r <= std::min(a - 1, b); ++r)
    for (int j = 1; j <= std::min(m - 1, n); ++j)
      add_shape(Partition::from_runs(
          {{m + n - j, 1}, {j + 1, 1}, {2, r}, {1, a + b - 2 * r - 1}}));
  return out;
}

}  // namespace schurlc
