#include "quarticib/modpoly.hpp"

#include <algorithm>

namespace qib {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) + m - b);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

std::uint64_t reduce_mod(const Integer& x, Prime p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

ModPoly::ModPoly(std::vector<std::uint64_t> coeffs, Prime p) : c_(std::move(coeffs)), p_(p) {
  for (auto& c : c_) c %= p_;
  trim();
}

ModPoly ModPoly::reduce(const IntPoly& f, Prime p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(reduce_mod(x, p));
  return ModPoly(std::move(c), p);
}

ModPoly ModPoly::monomial(std::uint64_t c, std::size_t degree, Prime p) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return ModPoly(std::move(v), p);
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t ModPoly::operator()(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mul_mod(acc, x, p_), *it, p_);
  return acc;
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_);
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mul_mod(c_[i], i % p_, p_);
  return ModPoly(std::move(d), p_);
}

ModPoly ModPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(inv_mod(c_.back(), p_));
}

ModPoly ModPoly::scaled(std::uint64_t c) const {
  std::vector<std::uint64_t> v = c_;
  for (auto& x : v) x = mul_mod(x, c, p_);
  return ModPoly(std::move(v), p_);
}

IntPoly ModPoly::lift() const {
  std::vector<Integer> v;
  v.reserve(c_.size());
  for (auto c : c_) v.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(v));
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = add_mod(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = sub_mod(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

ModPoly operator*(const ModPoly& l, const ModPoly& r) {
  if (l.is_zero() || r.is_zero()) return ModPoly(l.p_);
  std::vector<std::uint64_t> out(l.c_.size() + r.c_.size() - 1, 0);
  for (std::size_t i = 0; i < l.c_.size(); ++i)
    for (std::size_t j = 0; j < r.c_.size(); ++j)
      out[i + j] = add_mod(out[i + j], mul_mod(l.c_[i], r.c_[j], l.p_), l.p_);
  return ModPoly(std::move(out), l.p_);
}

ModDivMod divmod(const ModPoly& f, const ModPoly& g) {
  if (g.is_zero()) throw std::domain_error("ModPoly division by zero");
  const Prime p = f.modulus();
  const int dg = g.degree();
  if (f.degree() < dg) return {ModPoly(p), f};
  std::vector<std::uint64_t> rem = f.coeffs();
  std::vector<std::uint64_t> quo(static_cast<std::size_t>(f.degree() - dg + 1), 0);
  const std::uint64_t inv = inv_mod(g.leading(), p);
  for (int i = f.degree(); i >= dg; --i) {
    const std::uint64_t c = mul_mod(rem[static_cast<std::size_t>(i)], inv, p);
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(i - dg);
    quo[shift] = c;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = rem[shift + static_cast<std::size_t>(j)];
      slot = sub_mod(slot, mul_mod(c, g.coeffs()[static_cast<std::size_t>(j)], p), p);
    }
  }
  return {ModPoly(std::move(quo), p), ModPoly(std::move(rem), p)};
}

ModPoly operator%(const ModPoly& f, const ModPoly& g) { return divmod(f, g).remainder; }

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& modulus) {
  if (e < 0) throw std::invalid_argument("powmod: negative exponent");
  ModPoly result = ModPoly::monomial(1, 0, base.modulus()) % modulus;
  ModPoly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

namespace {

std::vector<ModFactor> factor_exhaustive(ModPoly f) {
  const Prime p = f.modulus();
  std::vector<ModFactor> out;
  for (std::uint64_t r = 0; r < p && f.degree() >= 1; ++r) {
    const ModPoly lin({sub_mod(0, r, p), 1}, p);
    int mult = 0;
    while (f.degree() >= 1 && f(r) == 0) {
      f = divmod(f, lin).quotient;
      ++mult;
    }
    if (mult > 0) out.push_back({lin, mult});
  }
  if (f.degree() == 2 || f.degree() == 3) {
    out.push_back({f, 1});
  } else if (f.degree() == 4) {
    // No roots left: f is irreducible or a product of two irreducible quadratics.
    bool split = false;
    for (std::uint64_t u = 0; u < p && !split; ++u) {
      for (std::uint64_t v = 0; v < p && !split; ++v) {
        const ModPoly q({v, u, 1}, p);
        auto [quo, rem] = divmod(f, q);
        if (!rem.is_zero()) continue;
        split = true;
        if (quo == q) {
          out.push_back({q, 2});
        } else {
          out.push_back({q, 1});
          out.push_back({quo, 1});
        }
      }
    }
    if (!split) out.push_back({f, 1});
  }
  return out;
}

std::vector<ModPoly> equal_degree_split(const ModPoly& f, int d) {
  const Prime p = f.modulus();
  if (f.degree() == d) return {f};
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  const Integer e = (pd - 1) / 2;
  const ModPoly one = ModPoly::monomial(1, 0, p);
  for (std::uint64_t c = 0; c < p; ++c) {
    const ModPoly h({c, 1}, p);
    const ModPoly s = powmod(h, e, f) - one;
    const ModPoly u = gcd(f, s);
    if (u.degree() > 0 && u.degree() < f.degree()) {
      auto left = equal_degree_split(u, d);
      auto right = equal_degree_split(divmod(f, u).quotient.monic(), d);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  throw std::logic_error("equal_degree_split: no splitting shift found");
}

std::vector<ModFactor> factor_distinct_degree(const ModPoly& f) {
  const Prime p = f.modulus();
  if (p == 2 || static_cast<std::uint64_t>(f.degree()) >= p)
    throw std::invalid_argument("distinct-degree path needs an odd prime exceeding the degree");
  // Yun's squarefree decomposition; valid because p > deg f.
  std::vector<std::pair<ModPoly, int>> parts;
  ModPoly a0 = gcd(f, f.derivative());
  ModPoly b = divmod(f, a0).quotient;
  ModPoly c = divmod(f.derivative(), a0).quotient;
  ModPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    ModPoly a = gcd(b, d);
    if (a.degree() > 0) parts.emplace_back(a, i);
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
  }

  std::vector<ModFactor> out;
  const ModPoly x = ModPoly::monomial(1, 1, p);
  for (auto& [g0, mult] : parts) {
    ModPoly g = g0.monic();
    ModPoly h = x % g;
    for (int deg = 1; g.degree() >= 2 * deg; ++deg) {
      h = powmod(h, Integer(static_cast<unsigned long>(p)), g);
      const ModPoly t = gcd(g, h - x);
      if (t.degree() > 0) {
        for (auto& irr : equal_degree_split(t, deg)) out.push_back({irr.monic(), mult});
        g = divmod(g, t).quotient.monic();
        h = h % g;
      }
    }
    if (g.degree() > 0) out.push_back({g, mult});
  }
  return out;
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const IntPoly& f, Prime p, FactorMethod method) {
  ModPoly fbar = ModPoly::reduce(f, p);
  if (fbar.degree() <= 0) return {};
  if (fbar.degree() > 4) throw std::invalid_argument("factor_mod_p: degree above 4 is unsupported");
  fbar = fbar.monic();
  if (method == FactorMethod::Auto) method = p < 1000 ? FactorMethod::Exhaustive : FactorMethod::DistinctDegree;
  std::vector<ModFactor> out =
      method == FactorMethod::Exhaustive ? factor_exhaustive(fbar) : factor_distinct_degree(fbar);
  std::sort(out.begin(), out.end(), [](const ModFactor& l, const ModFactor& r) {
    if (l.factor.degree() != r.factor.degree()) return l.factor.degree() < r.factor.degree();
    return l.factor.coeffs() < r.factor.coeffs();
  });
  return out;
}

}  // namespace qib
