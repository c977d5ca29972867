#include "schurlc/intpoly.hpp"

#include <stdexcept>

namespace schurlc {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) { return monomial(std::move(c), 0); }

IntPoly IntPoly::monomial(Int c, int k) {
  if (c == 0 || k < 0) return IntPoly();
  std::vector<Int> coeffs(static_cast<std::size_t>(k + 1));
  coeffs.back() = std::move(c);
  return IntPoly(std::move(coeffs));
}

Int IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero())
    throw std::invalid_argument("divide_exact: division by zero");
  if (divisor.coeffs_.back() != 1)
    throw std::invalid_argument("divide_exact: divisor must be monic");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree())
    throw std::invalid_argument("divide_exact: remainder is nonzero");
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  for (int k = degree() - divisor.degree(); k >= 0; --k) {
    const Int q = rem[static_cast<std::size_t>(k + divisor.degree())];
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= divisor.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -=
          q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const Int& r : rem)
    if (r != 0) throw std::invalid_argument("divide_exact: remainder is nonzero");
  return IntPoly(std::move(quot));
}

Int IntPoly::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::abs() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const Int& c : coeffs_) out.push_back(c < 0 ? Int(-c) : c);
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Int& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Int mag = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0)
      out += mag.str();
    else {
      if (mag != 1) out += mag.str();
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

QPoly gauss_number(int k) {
  if (k < 0) return QPoly();
  return QPoly(std::vector<Int>(static_cast<std::size_t>(k), Int(1)));
}

QPoly generic_degree(const Partition& p) {
  const int n = p.size();
  QPoly num = QPoly::constant(1);
  for (int k = 1; k <= n; ++k) num = num * gauss_number(k);
  for (int h : p.hook_lengths()) num = num.divide_exact(gauss_number(h));
  std::vector<Int> shift(static_cast<std::size_t>(p.n_stat() + 1));
  shift.back() = 1;
  return num * QPoly(std::move(shift));
}

}  // namespace schurlc
