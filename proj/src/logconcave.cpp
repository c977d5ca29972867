#include "schurlc/logconcave.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurlc/errors.hpp"

namespace schurlc {

SchurPoly::SchurPoly(std::vector<SchurVector> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void SchurPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const SchurVector& SchurPoly::coeff(int k) const {
  static const SchurVector zero;
  if (k < 0 || k > degree()) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void SchurPoly::set_coeff(int k, SchurVector v) {
  if (k < 0) throw std::invalid_argument("SchurPoly: negative exponent");
  if (k >= static_cast<int>(coeffs_.size()))
    coeffs_.resize(static_cast<std::size_t>(k + 1));
  coeffs_[static_cast<std::size_t>(k)] = std::move(v);
  trim();
}

void SchurPoly::add_to_coeff(int k, const SchurVector& v) {
  if (k < 0) throw std::invalid_argument("SchurPoly: negative exponent");
  if (k >= static_cast<int>(coeffs_.size()))
    coeffs_.resize(static_cast<std::size_t>(k + 1));
  coeffs_[static_cast<std::size_t>(k)] += v;
  trim();
}

bool SchurPoly::positive() const {
  for (const SchurVector& c : coeffs_)
    if (!c.is_schur_positive()) return false;
  return true;
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

SchurPoly operator*(const SchurPoly& lhs, const SchurPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return SchurPoly();
  std::vector<SchurVector> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out[i + j] += schur_product(lhs.coeffs_[i], rhs.coeffs_[j]);
    }
  }
  return SchurPoly(std::move(out));
}

SchurVector SchurPoly::evaluate_at_one() const {
  SchurVector acc;
  for (const SchurVector& c : coeffs_) acc += c;
  return acc;
}

SchurPoly SchurPoly::reversed(int frame_degree) const {
  if (degree() > frame_degree)
    throw std::invalid_argument("reversed: degree exceeds frame");
  std::vector<SchurVector> out(static_cast<std::size_t>(frame_degree + 1));
  for (int k = 0; k <= degree(); ++k)
    out[static_cast<std::size_t>(frame_degree - k)] = coeffs_[static_cast<std::size_t>(k)];
  return SchurPoly(std::move(out));
}

std::string SchurPoly::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    if (coeff(k).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeff(k).to_text() + ")";
    if (k == 1) out += " t";
    if (k > 1) out += " t^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

void require_honest(const SchurPoly& p) {
  if (!p.positive())
    throw std::invalid_argument("coefficients must be honest");
}

}  // namespace

CheckReport check_ilc(const SchurPoly& p) {
  require_honest(p);
  CheckReport report;
  const int deg = p.degree();
  for (int i = 1; i <= deg; ++i) {
    ++report.cells_checked;
    // The boundary cell i = deg has c_{deg+1} = 0, so the difference is the
    // square of an honest coefficient; counted but never a witness.
    if (i == deg) continue;
    SchurVector diff = schur_product(p.coeff(i), p.coeff(i)) -
                       schur_product(p.coeff(i - 1), p.coeff(i + 1));
    if (!diff.is_schur_positive())
      report.witnesses.push_back({i, i, std::move(diff)});
  }
  report.verdict = report.witnesses.empty();
  return report;
}

CheckReport check_strong_ilc(const SchurPoly& p) {
  require_honest(p);
  CheckReport report;
  const int deg = p.degree();
  for (int i = 1; i <= deg; ++i) {
    for (int j = i; j <= deg; ++j) {
      ++report.cells_checked;
      if (j == deg) continue;  // difference is c_i * c_deg, trivially honest
      SchurVector diff = schur_product(p.coeff(i), p.coeff(j)) -
                         schur_product(p.coeff(i - 1), p.coeff(j + 1));
      if (!diff.is_schur_positive())
        report.witnesses.push_back({i, j, std::move(diff)});
    }
  }
  report.verdict = report.witnesses.empty();
  return report;
}

SchurPoly times_t_plus_one(const SchurPoly& p) {
  if (p.is_zero()) return SchurPoly();
  std::vector<SchurVector> out(static_cast<std::size_t>(p.degree() + 2));
  for (int k = 0; k <= p.degree() + 1; ++k)
    out[static_cast<std::size_t>(k)] = p.coeff(k - 1) + p.coeff(k);
  return SchurPoly(std::move(out));
}

SchurPoly substitute_t_plus_one(const SchurPoly& p) {
  if (p.is_zero()) return SchurPoly();
  std::vector<SchurVector> out(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) {
    SchurVector acc;
    for (int j = i; j <= p.degree(); ++j) {
      SchurVector term = p.coeff(j);
      term *= binomial(j, i);
      acc += term;
    }
    out[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return SchurPoly(std::move(out));
}

namespace {

CheckReport report_difference(SchurVector difference, int i = 1, int j = 1) {
  CheckReport report;
  report.cells_checked = 1;
  if (!difference.is_schur_positive()) {
    report.witnesses.push_back({i, j, std::move(difference)});
    report.verdict = false;
  }
  return report;
}

std::optional<SkewShape> family_shape(int n, int k, int a, int b, int c, int d,
                                      int i) {
  const int reps = c * i + d;
  auto outer = Partition::from_runs({{n + k * i, 1}, {a + k * i, reps}});
  auto inner = Partition::from_runs({{b + k * i, reps}});
  if (!outer || !inner) return std::nullopt;
  return SkewShape::make(std::move(*outer), std::move(*inner));
}

}  // namespace

CheckReport verify_skew_family(int n, int k, int a, int b, int c, int d, int i) {
  auto lo = family_shape(n, k, a, b, c, d, i - 1);
  auto mid = family_shape(n, k, a, b, c, d, i);
  auto hi = family_shape(n, k, a, b, c, d, i + 1);
  if (!lo || !mid || !hi) throw inapplicable_error("inapplicable");
  const SchurVector mid_vec = skew_expand(*mid);
  SchurVector difference = schur_product(mid_vec, mid_vec) -
                           schur_product(skew_expand(*lo), skew_expand(*hi));
  return report_difference(std::move(difference), i, i);
}

CheckReport verify_hook_corollary(int a, int b, int p, int q) {
  if (!(1 <= a && a <= b && 1 <= p && p <= q))
    throw inapplicable_error("inapplicable");
  auto hook = [](int head, int leg) { return Partition::from_runs({{head, 1}, {1, leg}}); };
  auto qa = hook(q, a);
  auto pb = hook(p, b);
  auto qa1 = hook(q + 1, a - 1);
  auto pb1 = hook(p - 1, b + 1);
  if (!qa || !pb || !qa1) throw inapplicable_error("inapplicable");
  SchurVector lhs = schur_product(*qa, *pb);
  // For p = 1 the right factor has a vanishing first part; the straightening
  // convention makes that Schur function zero and the product drops out.
  SchurVector rhs = pb1 ? schur_product(*qa1, *pb1) : SchurVector();
  return report_difference(lhs - rhs);
}

CheckReport verify_lpp_midpoint(const SkewShape& x, const SkewShape& y) {
  auto [outer_hi, outer_lo] = midpoint_pair(x.outer(), y.outer());
  auto [inner_hi, inner_lo] = midpoint_pair(x.inner(), y.inner());
  auto hi = SkewShape::make(std::move(outer_hi), std::move(inner_hi));
  auto lo = SkewShape::make(std::move(outer_lo), std::move(inner_lo));
  if (!hi || !lo) throw inapplicable_error("inapplicable");
  SchurVector difference =
      schur_product(skew_expand(*hi), skew_expand(*lo)) -
      schur_product(skew_expand(x), skew_expand(y));
  return report_difference(std::move(difference));
}

CheckReport verify_lpp_sort(const SkewShape& x, const SkewShape& y) {
  auto [outer1, outer2] = sort_split(x.outer(), y.outer());
  auto [inner1, inner2] = sort_split(x.inner(), y.inner());
  auto s1 = SkewShape::make(std::move(outer1), std::move(inner1));
  auto s2 = SkewShape::make(std::move(outer2), std::move(inner2));
  if (!s1 || !s2) throw inapplicable_error("inapplicable");
  SchurVector difference =
      schur_product(skew_expand(*s1), skew_expand(*s2)) -
      schur_product(skew_expand(x), skew_expand(y));
  return report_difference(std::move(difference));
}

IntPoly dimension_poly(const SchurPoly& p) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int k = 0; k <= p.degree(); ++k) out.push_back(dimension(p.coeff(k)));
  return IntPoly(std::move(out));
}

IntPoly q_dimension_poly(const SchurPoly& p, int q) {
  if (q < 1) throw std::invalid_argument("q_dimension_poly: q must be positive");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int k = 0; k <= p.degree(); ++k) {
    Int acc = 0;
    for (const auto& [lambda, c] : p.coeff(k).terms())
      acc += c * generic_degree(lambda).evaluate(q);
    out.push_back(std::move(acc));
  }
  return IntPoly(std::move(out));
}

bool is_log_concave(const IntPoly& p) {
  for (int i = 1; i < p.degree(); ++i)
    if (p.coeff(i) * p.coeff(i) < p.coeff(i - 1) * p.coeff(i + 1)) return false;
  return true;
}

}  // namespace schurlc
