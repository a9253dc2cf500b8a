#include "quarticib/cli.hpp"

#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "quarticib/globalize.hpp"
#include "quarticib/newton.hpp"
#include "quarticib/oracle.hpp"
#include "quarticib/trinomial.hpp"

namespace qib::cli {

using json = nlohmann::ordered_json;

namespace {

Prime parse_prime(const std::string& s) {
  const Integer p = integer_from_string(s);
  if (p < 2 || !p.fits_ulong_p() || !is_probable_prime(p)) throw std::invalid_argument("--p must be a prime: " + s);
  return p.get_ui();
}

const std::string& require(const std::string& value, const char* flag) {
  if (value.empty()) throw std::invalid_argument(std::string("missing ") + flag);
  return value;
}

json numerator_json(const IntPoly& L) {
  json c = json::array();
  for (int j = 0; j <= L.degree(); ++j) c.push_back(L.coeff(static_cast<std::size_t>(j)).get_str());
  return c;
}

std::string element_text(const IntPoly& L, const std::string& denom) {
  const std::string num = L.to_string("alpha");
  return denom == "1" ? num : "(" + num + ")/" + denom;
}

CommandResult error_result(const JobSpec& job, int code, const std::string& type, const std::string& message,
                           json extra = json::object()) {
  if (job.text) return {code, "error (" + type + "): " + message + "\n"};
  json doc = {{"error", {{"type", type}, {"message", message}}}};
  doc.update(extra);
  return {code, doc.dump(2) + "\n"};
}

// Runs a command body, mapping library errors to exit codes.
CommandResult guarded(const JobSpec& job, const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ReducibleError& e) {
    return error_result(job, kReducible, "reducible", e.what());
  } catch (const UnnormalizedError& e) {
    return error_result(job, kContractViolation, "unnormalized", e.what());
  } catch (const TableMismatchError& e) {
    return error_result(job, kContractViolation, "table_mismatch", e.what());
  } catch (const FactorizationIncompleteError& e) {
    return error_result(job, kFactorizationIncomplete, "factorization_incomplete", e.what());
  } catch (const std::exception& e) {
    return error_result(job, kFailure, "invalid_input", e.what());
  }
}

json order_json(const oracle::OrderBasis& order) {
  json rows = json::array();
  for (const auto& row : order.rows()) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    rows.push_back(r);
  }
  return rows;
}

bool oracle_agrees(const TriangularPBasis& basis, const oracle::MaximalOrder& m) {
  if (m.vp_index != basis.vp_index) return false;
  for (std::size_t i = 0; i < 3; ++i)
    if (!oracle::contains(m.order, basis.element(i))) return false;
  return true;
}

}  // namespace

CommandResult cmd_pbasis(const JobSpec& job) {
  return guarded(job, [&]() -> CommandResult {
    const Integer a = integer_from_string(require(job.a, "--a"));
    const Integer b = integer_from_string(require(job.b, "--b"));
    if (!job.p) throw std::invalid_argument("missing --p");
    const Prime p = parse_prime(*job.p);
    const TrinomialField field(a, b);
    TriangularPBasis basis;
    try {
      basis = p_basis_scaled(field, p);
    } catch (const TableMismatchError& e) {
      // The table row is wrong for this input; report the oracle's answer next
      // to the failure so the caller still gets a usable order.
      const auto m = oracle::p_maximal_order(field.polynomial(), p);
      return error_result(job, kContractViolation, "table_mismatch", e.what(),
                          {{"oracle_vp_index", m.vp_index}, {"oracle_basis", order_json(m.order)}});
    }
    std::optional<oracle::MaximalOrder> m;
    if (job.verify) m = oracle::p_maximal_order(field.polynomial(), p);
    const bool verified = !m || oracle_agrees(basis, *m);

    if (job.text) {
      std::ostringstream os;
      os << "case " << basis.label << " at p=" << p << "\n";
      os << "v_p(disc)=" << basis.vp_disc << " v_p(ind)=" << basis.vp_index << " v_p(dK)=" << basis.vp_dK << "\n";
      os << "w0 = 1\n";
      for (std::size_t i = 0; i < 3; ++i) {
        const std::string denom = basis.exponents[i] == 0 ? "1"
                                  : basis.exponents[i] == 1
                                      ? std::to_string(p)
                                      : std::to_string(p) + "^" + std::to_string(basis.exponents[i]);
        os << "w" << i + 1 << " = " << element_text(basis.numerators[i], denom) << "\n";
      }
      if (m) os << "oracle v_p(ind)=" << m->vp_index << (verified ? " (agrees)" : " (MISMATCH)") << "\n";
      return {verified ? kOk : kContractViolation, os.str()};
    }
    json elems = json::array({{{"numerator", json::array({"1"})}, {"denom_exp", 0}}});
    for (std::size_t i = 0; i < 3; ++i)
      elems.push_back({{"numerator", numerator_json(basis.numerators[i])}, {"denom_exp", basis.exponents[i]}});
    json doc = {{"a", a.get_str()},
                {"b", b.get_str()},
                {"p", p},
                {"case", basis.label},
                {"vp_disc", basis.vp_disc},
                {"vp_index", basis.vp_index},
                {"vp_dK", basis.vp_dK},
                {"basis", elems},
                {"verified", verified}};
    if (m) doc["oracle_vp_index"] = m->vp_index;
    return {verified ? kOk : kContractViolation, doc.dump(2) + "\n"};
  });
}

CommandResult cmd_basis(const JobSpec& job) {
  return guarded(job, [&]() -> CommandResult {
    const Integer a = integer_from_string(require(job.a, "--a"));
    const Integer b = integer_from_string(require(job.b, "--b"));
    const TrinomialField field(a, b);
    const GlobalTriangularBasis g = integral_basis(field, job.max_trial_division);
    const int code = g.conditional ? kFactorizationIncomplete : kOk;
    if (job.text) {
      std::ostringstream os;
      os << "disc = " << g.disc << "\n";
      os << "d1 = " << g.divisors[0] << ", d2 = " << g.divisors[1] << ", d3 = " << g.divisors[2] << "\n";
      os << "ind = " << g.index << "\ndK = " << g.dK << "\n";
      os << "w0 = 1\n";
      for (std::size_t i = 0; i < 3; ++i)
        os << "w" << i + 1 << " = " << element_text(g.numerators[i], g.divisors[i].get_str()) << "\n";
      if (g.conditional) os << "conditional: cofactor " << g.unfactored << " assumed squarefree\n";
      return {code, os.str()};
    }
    json elems = json::array({{{"numerator", json::array({"1"})}, {"denominator", "1"}}});
    for (std::size_t i = 0; i < 3; ++i)
      elems.push_back({{"numerator", numerator_json(g.numerators[i])}, {"denominator", g.divisors[i].get_str()}});
    json doc = {{"a", a.get_str()},
                {"b", b.get_str()},
                {"disc", g.disc.get_str()},
                {"d1", g.divisors[0].get_str()},
                {"d2", g.divisors[1].get_str()},
                {"d3", g.divisors[2].get_str()},
                {"ind", g.index.get_str()},
                {"dK", g.dK.get_str()},
                {"basis", elems},
                {"conditional", g.conditional}};
    if (g.conditional) doc["unfactored"] = g.unfactored.get_str();
    return {code, doc.dump(2) + "\n"};
  });
}

CommandResult cmd_disc(const JobSpec& job) {
  return guarded(job, [&]() -> CommandResult {
    const Integer a = integer_from_string(require(job.a, "--a"));
    const Integer b = integer_from_string(require(job.b, "--b"));
    const Integer disc = trinomial_disc(a, b);
    const Factorization fac = factor_integer(disc, job.max_trial_division);
    const int code = fac.complete() ? kOk : kFactorizationIncomplete;
    if (job.text) {
      std::ostringstream os;
      os << disc << "\n";
      os << (disc < 0 ? "-1" : "1");
      for (const auto& [q, e] : fac.factors) os << " * " << q << (e > 1 ? "^" + std::to_string(e) : "");
      if (!fac.complete()) os << " * [" << fac.cofactor << "]";
      os << "\n";
      return {code, os.str()};
    }
    json factors = json::array();
    for (const auto& [q, e] : fac.factors) factors.push_back({{"p", q.get_str()}, {"e", e}});
    json doc = {{"a", a.get_str()},         {"b", b.get_str()},          {"disc", disc.get_str()},
                {"factorization", factors}, {"complete", fac.complete()}, {"cofactor", fac.cofactor.get_str()}};
    return {code, doc.dump(2) + "\n"};
  });
}

CommandResult cmd_polygon(const JobSpec& job) {
  return guarded(job, [&]() -> CommandResult {
    const Integer a = integer_from_string(require(job.a, "--a"));
    const Integer b = integer_from_string(require(job.b, "--b"));
    if (!job.p) throw std::invalid_argument("missing --p");
    const Prime p = parse_prime(*job.p);
    if (b == 0) throw ReducibleError("b = 0: X divides X^4 + aX");
    const IntPoly f{b, a, 0, 0, 1};
    const NewtonPolygon n = phi_polygon(f, IntPoly::x(), p);
    const std::string rendered = render_polygon(n);
    if (job.text) return {kOk, rendered};

    const auto sides_json = [](const NewtonPolygon& poly) {
      json sides = json::array();
      for (const auto& s : poly.sides())
        sides.push_back({{"start", {s.start().abscissa, s.start().ordinate}},
                         {"end", {s.end().abscissa, s.end().ordinate}},
                         {"slope", std::to_string(s.slope_numerator()) + "/" + std::to_string(s.slope_denominator())},
                         {"degree", s.degree()}});
      return sides;
    };
    const RegularityCertificate cert = p_regularity(f, p);
    json factors = json::array();
    for (const auto& e : cert.entries) {
      json residuals = json::array();
      for (const auto& r : e.residuals) residuals.push_back(r.to_string());
      factors.push_back({{"phi", e.phi.to_string()},
                         {"multiplicity", e.multiplicity},
                         {"principal_sides", sides_json(e.index.principal)},
                         {"ind_N", e.index.index},
                         {"residual_polynomials", residuals},
                         {"regular", e.regular}});
    }
    json doc = {{"a", a.get_str()},
                {"b", b.get_str()},
                {"p", p},
                {"sides", sides_json(n)},
                {"text", rendered},
                {"regular", cert.regular},
                {"index_bound", cert.index_bound()},
                {"factors", factors}};
    return {kOk, doc.dump(2) + "\n"};
  });
}

namespace {

std::pair<Integer, Integer> parse_range(const std::string& s, const char* flag) {
  require(s, flag);
  const auto colon = s.find(':', 1);  // a leading '-' is a sign, not a separator
  if (colon == std::string::npos) {
    const Integer v = integer_from_string(s);
    return {v, v};
  }
  const Integer lo = integer_from_string(s.substr(0, colon)), hi = integer_from_string(s.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument(std::string(flag) + " range is empty: " + s);
  return {lo, hi};
}

struct CheckOutcome {
  bool reducible = false;
  json mismatches = json::array();
};

CheckOutcome check_one(const Integer& a, const Integer& b, const std::vector<Prime>& primes) {
  CheckOutcome out;
  std::optional<TrinomialField> field;
  try {
    if (b == 0) throw ReducibleError("b = 0");
    field.emplace(a, b);
  } catch (const ReducibleError&) {
    out.reducible = true;
    return out;
  }
  for (const Prime p : primes) {
    const auto m = oracle::p_maximal_order(field->polynomial(), p);
    json entry = {{"a", a.get_str()}, {"b", b.get_str()}, {"p", p}, {"oracle_vp_index", m.vp_index}};
    try {
      const TriangularPBasis basis = p_basis_scaled(*field, p);
      if (oracle_agrees(basis, m)) continue;
      entry["case"] = basis.label;
      entry["vp_index"] = basis.vp_index;
      entry["reason"] = "oracle disagrees";
    } catch (const std::exception& e) {
      entry["reason"] = e.what();
    }
    out.mismatches.push_back(entry);
  }
  return out;
}

}  // namespace

CommandResult cmd_check(const JobSpec& job, unsigned threads) {
  return guarded(job, [&]() -> CommandResult {
    const auto [a_lo, a_hi] = parse_range(job.a, "--a");
    const auto [b_lo, b_hi] = parse_range(job.b, "--b");
    std::vector<Prime> primes{2, 3, 5, 7, 11, 13};
    if (job.p) primes = {parse_prime(*job.p)};

    std::vector<std::pair<Integer, Integer>> grid;
    for (Integer a = a_lo; a <= a_hi; ++a)
      for (Integer b = b_lo; b <= b_hi; ++b) grid.emplace_back(a, b);
    std::vector<CheckOutcome> outcomes(grid.size());

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(grid.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < grid.size(); i += threads) outcomes[i] = check_one(grid[i].first, grid[i].second, primes);
      });
    for (auto& th : pool) th.join();

    std::size_t reducible = 0, checks = 0;
    json mismatches = json::array();
    for (const auto& o : outcomes) {
      if (o.reducible) {
        ++reducible;
        continue;
      }
      checks += primes.size();
      for (const auto& m : o.mismatches) mismatches.push_back(m);
    }
    const int code = mismatches.empty() ? kOk : kContractViolation;
    if (job.text) {
      std::ostringstream os;
      os << grid.size() << " pairs, " << reducible << " reducible skipped, " << checks << " prime checks, "
         << mismatches.size() << " mismatches\n";
      for (const auto& m : mismatches) os << m.dump() << "\n";
      return {code, os.str()};
    }
    json doc = {{"pairs", grid.size()},
                {"reducible_skipped", reducible},
                {"checks", checks},
                {"primes", primes},
                {"mismatches", mismatches}};
    return {code, doc.dump(2) + "\n"};
  });
}

}  // namespace qib::cli
