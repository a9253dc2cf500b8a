#include "quarticib/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qib {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& l, const IntPoly& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<Integer> out(l.coeffs_.size() + r.coeffs_.size() - 1);
  for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntDivMod divmod_monic(const IntPoly& f, const IntPoly& g) {
  if (!g.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
  std::vector<Integer> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {IntPoly{}, f};
  std::vector<Integer> quo(static_cast<std::size_t>(f.degree() - dg + 1));
  for (int i = f.degree(); i >= dg; --i) {
    const Integer c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(i - dg);
    quo[shift] = c;
    for (int j = 0; j <= dg; ++j) rem[shift + static_cast<std::size_t>(j)] -= c * g.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly pow(const IntPoly& f, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly taylor_shift(const IntPoly& p, const Integer& t) {
  // Horner in the ring Z[X]: ((c_n)(X+t) + c_{n-1})(X+t) + ...
  std::vector<Integer> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += t * c[j + 1];
  return IntPoly(std::move(c));
}

IntPoly divide_exact(const IntPoly& p, const Integer& d) {
  std::vector<Integer> c = p.coeffs();
  for (auto& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) throw std::domain_error("divide_exact: not divisible");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

}  // namespace qib
