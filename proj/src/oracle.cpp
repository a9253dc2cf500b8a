#include "quarticib/oracle.hpp"

#include <algorithm>

#include "quarticib/modpoly.hpp"
#include "quarticib/polyring.hpp"

namespace qib::oracle {

namespace {

constexpr std::size_t kDim = 4;

using IntRow = std::array<Integer, kDim>;

void require_quartic(const IntPoly& ambient) {
  if (ambient.degree() != 4 || !ambient.is_monic())
    throw std::invalid_argument("oracle: ambient polynomial must be a monic quartic");
}

Coords zero_coords() { return {Rational(0), Rational(0), Rational(0), Rational(0)}; }

Coords scale(const Coords& u, const Rational& c) {
  Coords out;
  for (std::size_t i = 0; i < kDim; ++i) out[i] = u[i] * c;
  return out;
}

Coords combination(const std::array<Coords, kDim>& basis, const std::vector<std::uint64_t>& c) {
  Coords out = zero_coords();
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) out[j] += basis[i][j] * Rational(static_cast<unsigned long>(c[i]));
  return out;
}

// Lower-triangular Hermite form of an integer row set of rank 4.
std::array<IntRow, kDim> hermite_rows(std::vector<IntRow> pool) {
  std::array<IntRow, kDim> out{};
  for (std::size_t col = kDim; col-- > 0;) {
    for (;;) {
      std::size_t best = pool.size();
      for (std::size_t r = 0; r < pool.size(); ++r) {
        if (pool[r][col] == 0) continue;
        if (best == pool.size() || abs(pool[r][col]) < abs(pool[best][col])) best = r;
      }
      if (best == pool.size()) throw std::invalid_argument("hermite_basis: generators do not span a lattice of rank 4");
      bool done = true;
      for (std::size_t r = 0; r < pool.size(); ++r) {
        if (r == best || pool[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), pool[r][col].get_mpz_t(), pool[best][col].get_mpz_t());
        for (std::size_t j = 0; j <= col; ++j) pool[r][j] -= q * pool[best][j];
        if (pool[r][col] != 0) done = false;
      }
      if (done) {
        IntRow pivot = pool[best];
        if (pivot[col] < 0)
          for (auto& e : pivot) e = -e;
        out[col] = pivot;
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        pool.erase(std::remove_if(pool.begin(), pool.end(),
                                  [](const IntRow& row) {
                                    return std::all_of(row.begin(), row.end(), [](const Integer& e) { return e == 0; });
                                  }),
                   pool.end());
        break;
      }
    }
  }
  // Reduce entries left of the diagonal into [0, pivot).
  for (std::size_t k = 1; k < kDim; ++k) {
    for (std::size_t j = k; j-- > 0;) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), out[k][j].get_mpz_t(), out[j][j].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = 0; c <= j; ++c) out[k][c] -= q * out[j][c];
    }
  }
  return out;
}

std::uint64_t residue(const Rational& integral, Prime p) {
  if (integral.get_den() != 1) throw std::logic_error("oracle: expected an integral coordinate");
  return reduce_mod(integral.get_num(), p);
}

}  // namespace

Coords multiply(const Coords& u, const Coords& v, const IntPoly& ambient) {
  std::array<Rational, 2 * kDim - 1> prod;
  for (auto& e : prod) e = 0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) prod[i + j] += u[i] * v[j];
  // alpha^4 = -(c3 alpha^3 + c2 alpha^2 + c1 alpha + c0)
  for (std::size_t k = 2 * kDim - 2; k >= kDim; --k) {
    const Rational top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (std::size_t j = 0; j < kDim; ++j) prod[k - kDim + j] -= top * Rational(ambient.coeff(j));
  }
  return {prod[0], prod[1], prod[2], prod[3]};
}

OrderBasis::OrderBasis(std::array<Coords, 4> rows, IntPoly ambient) : rows_(std::move(rows)), ambient_(std::move(ambient)) {
  require_quartic(ambient_);
  for (std::size_t k = 0; k < kDim; ++k) {
    if (rows_[k][k] <= 0) throw std::invalid_argument("OrderBasis: diagonal must be positive");
    for (std::size_t j = k + 1; j < kDim; ++j)
      if (rows_[k][j] != 0) throw std::invalid_argument("OrderBasis: rows must be lower triangular");
  }
}

Coords OrderBasis::coordinates(const Coords& element) const {
  Coords rest = element;
  Coords out = zero_coords();
  for (std::size_t col = kDim; col-- > 0;) {
    out[col] = rest[col] / rows_[col][col];
    for (std::size_t j = 0; j <= col; ++j) rest[j] -= out[col] * rows_[col][j];
  }
  return out;
}

bool OrderBasis::contains_local(const Coords& element, Prime p) const {
  for (const auto& c : coordinates(element))
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return false;
  return true;
}

Rational OrderBasis::index() const {
  Rational det = 1;
  for (std::size_t k = 0; k < kDim; ++k) det *= rows_[k][k];
  return 1 / det;
}

long OrderBasis::vp_index(Prime p) const {
  const Rational idx = index();
  return vp_int(idx.get_num(), p).value() - vp_int(idx.get_den(), p).value();
}

bool OrderBasis::is_multiplicatively_closed() const {
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i; j < kDim; ++j)
      for (const auto& c : coordinates(multiply(rows_[i], rows_[j], ambient_)))
        if (c.get_den() != 1) return false;
  return true;
}

OrderBasis hermite_basis(const std::vector<Coords>& generators, const IntPoly& ambient) {
  Integer denom = 1;
  for (const auto& g : generators)
    for (const auto& c : g) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
  std::vector<IntRow> pool;
  for (const auto& g : generators) {
    IntRow row;
    for (std::size_t j = 0; j < kDim; ++j) {
      Rational scaled = g[j] * Rational(denom);
      row[j] = scaled.get_num();
    }
    pool.push_back(row);
  }
  const auto h = hermite_rows(std::move(pool));
  std::array<Coords, kDim> rows;
  for (std::size_t k = 0; k < kDim; ++k)
    for (std::size_t j = 0; j < kDim; ++j) {
      rows[k][j] = Rational(h[k][j], denom);
      rows[k][j].canonicalize();
    }
  return OrderBasis(rows, ambient);
}

OrderBasis power_basis_order(const IntPoly& ambient) {
  std::array<Coords, kDim> rows;
  for (std::size_t k = 0; k < kDim; ++k) {
    rows[k] = zero_coords();
    rows[k][k] = 1;
  }
  return OrderBasis(rows, ambient);
}

OrderBasis order_from_triangular(const std::array<IntPoly, 3>& numerators,
                                 const std::array<unsigned long, 3>& exponents, Prime p, const IntPoly& ambient) {
  std::vector<Coords> gens;
  Coords one = zero_coords();
  one[0] = 1;
  gens.push_back(one);
  for (std::size_t i = 0; i < 3; ++i) {
    if (numerators[i].degree() > 3) throw std::invalid_argument("order_from_triangular: numerator degree above 3");
    Coords c;
    const Integer d = ipow(p, exponents[i]);
    for (std::size_t j = 0; j < kDim; ++j) {
      c[j] = Rational(numerators[i].coeff(j), d);
      c[j].canonicalize();
    }
    gens.push_back(c);
  }
  return hermite_basis(gens, ambient);
}

std::vector<std::vector<std::uint64_t>> left_kernel_mod_p(std::vector<std::vector<std::uint64_t>> rows, Prime p) {
  const std::size_t m = rows.size();
  if (m == 0) return {};
  const std::size_t n = rows[0].size();
  // Augment with the identity and row-reduce the left block.
  std::vector<std::vector<std::uint64_t>> aug(m, std::vector<std::uint64_t>(n + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = rows[i][j] % p;
    aug[i][n + i] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && aug[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(aug[piv], aug[rank]);
    const std::uint64_t inv = inv_mod(aug[rank][col], p);
    for (auto& e : aug[rank]) e = mul_mod(e, inv, p);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      const std::uint64_t f = aug[r][col];
      for (std::size_t c = 0; c < n + m; ++c) aug[r][c] = sub_mod(aug[r][c], mul_mod(f, aug[rank][c], p), p);
    }
    ++rank;
  }
  std::vector<std::vector<std::uint64_t>> kernel;
  for (std::size_t r = rank; r < m; ++r) kernel.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(n), aug[r].end());
  return kernel;
}

namespace {

using Table = std::array<std::array<std::array<std::uint64_t, kDim>, kDim>, kDim>;

Table structure_constants_mod_p(const OrderBasis& o, Prime p) {
  Table t{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) {
      const Coords c = o.coordinates(multiply(o.rows()[i], o.rows()[j], o.ambient()));
      for (std::size_t k = 0; k < kDim; ++k) t[i][j][k] = residue(c[k], p);
    }
  return t;
}

using Vec = std::array<std::uint64_t, kDim>;

Vec algebra_mul(const Vec& u, const Vec& v, const Table& t, Prime p) {
  Vec out{};
  for (std::size_t i = 0; i < kDim; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (v[j] == 0) continue;
      const std::uint64_t uv = mul_mod(u[i], v[j], p);
      for (std::size_t k = 0; k < kDim; ++k) out[k] = add_mod(out[k], mul_mod(uv, t[i][j][k], p), p);
    }
  }
  return out;
}

Vec algebra_pow(Vec base, std::uint64_t e, const Vec& one, const Table& t, Prime p) {
  Vec r = one;
  while (e > 0) {
    if (e & 1U) r = algebra_mul(r, base, t, p);
    base = algebra_mul(base, base, t, p);
    e >>= 1U;
  }
  return r;
}

}  // namespace

MaximalOrder p_maximalize(const OrderBasis& start, Prime p) {
  const Integer disc = discriminant(start.ambient());
  if (disc == 0) throw std::invalid_argument("p_maximalize: ambient polynomial has a repeated root");
  // Each round grows the index by a power of p; 2 v_p(ind) <= v_p(disc) bounds the rounds.
  const long max_rounds = vp_int(disc, p).value() / 2 + 1;
  OrderBasis order = start;
  const Rational prime(static_cast<unsigned long>(p));
  int rounds = 0;
  for (;;) {
    if (++rounds > max_rounds + 1) throw std::logic_error("p_maximalize: order failed to stabilize");
    const Table t = structure_constants_mod_p(order, p);
    const Vec one = [&] {
      const Coords c = order.coordinates({Rational(1), Rational(0), Rational(0), Rational(0)});
      Vec v{};
      for (std::size_t k = 0; k < kDim; ++k) v[k] = residue(c[k], p);
      return v;
    }();

    // Radical of O/pO = kernel of x -> x^(p^k), p^k >= 4.
    std::vector<std::vector<std::uint64_t>> frob(kDim, std::vector<std::uint64_t>(kDim));
    for (std::size_t i = 0; i < kDim; ++i) {
      Vec v{};
      v[i] = 1;
      for (std::uint64_t q = 1; q < kDim; q *= p) v = algebra_pow(v, p, one, t, p);
      frob[i].assign(v.begin(), v.end());
    }
    std::vector<Coords> radical_gens;
    for (const auto& row : order.rows()) radical_gens.push_back(scale(row, prime));
    for (const auto& c : left_kernel_mod_p(frob, p)) radical_gens.push_back(combination(order.rows(), c));
    const OrderBasis radical = hermite_basis(radical_gens, order.ambient());

    // U/pO with U = {u in O : u I in pI}; the multiplier ring is (1/p) U.
    std::vector<std::vector<std::uint64_t>> action(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
      for (const auto& beta : radical.rows()) {
        const Coords c = radical.coordinates(multiply(order.rows()[i], beta, order.ambient()));
        for (const auto& e : c) action[i].push_back(residue(e, p));
      }
    }
    const auto kernel = left_kernel_mod_p(action, p);
    if (kernel.empty()) break;
    std::vector<Coords> gens(order.rows().begin(), order.rows().end());
    for (const auto& c : kernel) gens.push_back(scale(combination(order.rows(), c), 1 / prime));
    order = hermite_basis(gens, order.ambient());
  }
  const long v = order.vp_index(p);
  return MaximalOrder{std::move(order), v, rounds};
}

MaximalOrder p_maximal_order(const IntPoly& ambient, Prime p) {
  return p_maximalize(power_basis_order(ambient), p);
}

bool contains(const OrderBasis& order, const QuarticElement& w) {
  const Integer d = ipow(w.p, w.i);
  Coords c;
  for (std::size_t j = 0; j < kDim; ++j) {
    c[j] = Rational(w.numerator().coeff(j), d);
    c[j].canonicalize();
  }
  return order.contains_local(c, w.p);
}

}  // namespace qib::oracle
