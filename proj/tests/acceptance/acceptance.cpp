// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quarticib/globalize.hpp"
#include "quarticib/irreducible.hpp"
#include "quarticib/newton.hpp"
#include "quarticib/oracle.hpp"
#include "quarticib/polyring.hpp"
#include "quarticib/quartic_general.hpp"
#include "quarticib/trinomial.hpp"

using namespace qib;

namespace {

using Clock = std::chrono::steady_clock;
using Exps = std::array<unsigned long, 3>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Plain repeated division; deliberately not the library's vp_int.
long val(Integer x, long p) {
  if (x == 0) return 1000000;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long mod(const Integer& x, long m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r.get_si();
}

Integer disc_of(const Integer& a, const Integer& b) { return 256 * b * b * b - 27 * a * a * a * a; }

// Criteria 3, 5 and 7 share one fuzz run, so lines are collected and printed in order.
struct Report {
  int failures = 0;
  std::map<int, std::string> lines;
  void line(int id, const std::string& name, bool ok, const std::string& detail) {
    lines[id] = std::string(ok ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + ": " + name + " -- " + detail;
    if (!ok) ++failures;
  }
};

std::string exps_str(const Exps& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
}

// ---------------------------------------------------------------- criterion 1

void criterion_figure(Report& rep) {
  const auto t0 = Clock::now();
  const auto n = build_polygon({{0, 0}, {1, 3}, {2, 0}, {4, 2}, {5, 2}, {6, 4}, {7, 6}});
  const auto pp = principal_part(n);
  const double dt = seconds_since(t0);
  bool ok = n.sides().size() == 3 && n.sides()[0].slope() == Rational(0) && n.sides()[1].slope() == Rational(2, 3) &&
            n.sides()[2].slope() == Rational(2) && pp.length() == 5 && pp.height() == 6 && dt < 1e-3;
  std::ostringstream d;
  d << "slopes";
  for (const auto& s : n.sides()) d << " " << s.slope().get_str();
  d << ", principal length " << pp.length() << " height " << pp.height() << ", " << dt * 1e6 << " us";
  rep.line(1, "figure polygon", ok, d.str());
}

// ---------------------------------------------------------------- criterion 2

struct Row {
  std::string label;
  long p;
  // Table conditions on (a, b), transcribed.
  std::function<bool(const Integer&, const Integer&)> conditions;
  // Sampler biased toward the row; candidates are filtered by `conditions`.
  std::function<std::pair<Integer, Integer>(std::mt19937_64&)> sample;
  Exps exponents;  // unused when `expect` is set
  long dK = -1;
  std::optional<long> vdisc;
  // Rows whose expectations depend on v_p(disc): returns (exponents, dK).
  std::function<std::pair<Exps, long>(long vdisc)> expect;
};

Integer rnd(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Integer unit(std::mt19937_64& rng, long p) {
  for (;;) {
    Integer u = rnd(rng, -200, 200);
    if (u != 0 && u % p != 0) return u;
  }
}

Integer pw(long p, long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}

// a = p^ea * (random), b = p^eb * (random) with random small exponents.
std::pair<Integer, Integer> generic_sample(std::mt19937_64& rng, long p) {
  const long ea = std::uniform_int_distribution<long>(0, 6)(rng), eb = std::uniform_int_distribution<long>(0, 6)(rng);
  return {pw(p, ea) * rnd(rng, -300, 300), pw(p, eb) * rnd(rng, -300, 300)};
}

// With s = 1: A = 4 + a and B = 1 + a + b are the shifted coefficients.
std::pair<Integer, Integer> from_shift(const Integer& A, const Integer& B) {
  const Integer a = A - 4;
  return {a, B - 1 - a};
}

std::vector<Row> table_rows() {
  using I = const Integer&;
  std::vector<Row> rows;
  const auto va = [](I x, long p) { return val(x, p); };
  auto add = [&](std::string label, long p, std::function<bool(I, I)> cond, Exps e, long dK, std::optional<long> vd) {
    Row r;
    r.label = std::move(label);
    r.p = p;
    r.conditions = std::move(cond);
    r.sample = [p](std::mt19937_64& rng) { return generic_sample(rng, p); };
    r.exponents = e;
    r.dK = dK;
    r.vdisc = vd;
    rows.push_back(std::move(r));
  };

  for (long p : {5L, 7L}) {
    add("A1", p, [=](I a, I b) { return va(b, p) == 3 && va(a, p) >= 3; }, {0, 1, 2}, 3, 9);
    add("A2", p, [=](I a, I b) { return va(b, p) >= 3 && va(a, p) == 2; }, {0, 1, 2}, 2, 8);
    add("A3", p, [=](I a, I b) { return va(b, p) >= 1 && va(a, p) == 0; }, {0, 0, 0}, 0, 0);
    add("A4", p, [=](I a, I b) { return va(b, p) == 2 && va(a, p) >= 2; }, {0, 1, 1}, 2, 6);
    add("A5", p, [=](I a, I b) { return va(b, p) == 1 && va(a, p) >= 1; }, {0, 0, 0}, 3, 3);
    add("A6", p, [=](I a, I b) { return va(b, p) >= 2 && va(a, p) == 1; }, {0, 0, 1}, 2, 4);
    add("A7", p, [=](I a, I b) { return va(b, p) == 0 && va(a, p) >= 1; }, {0, 0, 0}, 0, 0);
    // A8: m = floor(v/2), dK = v mod 2; sampled until v_p(disc) >= 2 so the row is not the trivial one.
    for (int parity = 0; parity < 2; ++parity) {
      Row r;
      r.label = "A8";
      r.p = p;
      r.conditions = [=](I a, I b) {
        const long v = val(disc_of(a, b), p);
        return va(b, p) == 0 && va(a, p) == 0 && v >= 2 && v % 2 == parity;
      };
      r.sample = [p](std::mt19937_64& rng) { return std::pair{unit(rng, p), unit(rng, p)}; };
      r.expect = [](long v) { return std::pair{Exps{0, 0, static_cast<unsigned long>(v / 2)}, v % 2}; };
      rows.push_back(std::move(r));
    }
  }

  const long p2 = 2;
  add("B1", p2, [](I a, I b) { return val(b, 2) >= 3 && val(a, 2) == 2; }, {0, 1, 2}, 2, 8);
  add("B2", p2, [](I a, I b) { return val(b, 2) == 3 && val(a, 2) >= 5; }, {0, 1, 2}, 11, 17);
  add("B3", p2, [](I a, I b) { return val(b, 2) == 3 && val(a, 2) == 4; }, {0, 1, 2}, 10, 16);
  add("B4", p2, [](I a, I b) { return val(b, 2) == 3 && val(a, 2) == 3; }, {0, 1, 2}, 6, 12);
  add("B5", p2, [](I a, I b) { return mod(b, 16) == 4 && mod(a, 16) == 0 && mod(a / 16, 2) == mod((b - 4) / 16, 2); },
      {0, 2, 3}, 4, 14);
  add("B6", p2, [](I a, I b) { return mod(b, 16) == 4 && mod(a, 16) == 0 && mod(a / 16, 2) != mod((b - 4) / 16, 2); },
      {0, 2, 2}, 6, 14);
  add("B7", p2, [](I a, I b) { return mod(b, 16) == 12 && mod(a, 16) == 0; }, {0, 2, 2}, 6, 14);
  add("B8", p2, [](I a, I b) { return val(b, 2) == 2 && val(a, 2) == 3; }, {0, 1, 2}, 6, 12);
  add("B9", p2, [](I a, I b) { return val(b, 2) == 2 && val(a, 2) == 2; }, {0, 1, 1}, 4, 8);
  add("B10", p2, [](I a, I b) { return val(b, 2) >= 2 && val(a, 2) == 1; }, {0, 0, 1}, 2, 4);
  add("B11", p2, [](I a, I b) { return val(b, 2) == 1 && val(a, 2) >= 3; }, {0, 0, 0}, 11, 11);
  add("B12", p2, [](I a, I b) { return val(b, 2) == 1 && val(a, 2) == 2; }, {0, 0, 0}, 8, 8);
  add("B13", p2, [](I a, I b) { return val(b, 2) == 1 && val(a, 2) == 1; }, {0, 0, 0}, 4, 4);
  add("B14", p2, [](I a, I) { return val(a, 2) == 0; }, {0, 0, 0}, 0, 0);
  add("B15", p2, [](I a, I b) { return val(a, 2) >= 3 && mod(b, 4) == 1; }, {0, 0, 0}, 8, 8);
  add("B16", p2, [](I a, I b) { return val(a, 2) >= 3 && mod(b, 8) == 3; }, {0, 1, 1}, 4, 8);
  add("B17", p2, [](I a, I b) { return val(a, 2) >= 3 && mod(b, 8) == 7; }, {0, 1, 2}, 2, 8);
  add("B18", p2, [](I a, I b) { return val(a, 2) == 2 && mod(b, 4) == 1; }, {0, 0, 0}, 9, 9);
  add("B19", p2, [](I a, I b) { return val(a, 2) == 2 && mod(b, 8) == 7; }, {0, 1, 1}, 6, 10);
  add("B20", p2, [](I a, I b) { return val(a, 2) == 1 && mod(b, 4) == 3; }, {0, 0, 0}, 4, 4);
  add("B21", p2, [](I a, I b) { return val(a, 2) == 1 && mod(b, 4) == 1; }, {0, 0, 1}, 2, 4);

  // B*: v2(a) = 2, b = 3 [8], rows read on A = 4 + a, B = 1 + a + b (s = 1).
  for (long r : {3L, 4L, 5L}) {
    Row row;
    row.label = "B*1";
    row.p = 2;
    row.conditions = [r](I a, I b) {
      const Integer A = 4 + a, B = 1 + a + b;
      return val(a, 2) == 2 && mod(b, 8) == 3 && val(B, 2) >= 2 * r - 1 && val(A, 2) == r;
    };
    row.sample = [r](std::mt19937_64& rng) { return from_shift(pw(2, r) * unit(rng, 2), pw(2, 2 * r - 1) * unit(rng, 1 << 30)); };
    row.exponents = {0, 1, static_cast<unsigned long>(r)};
    row.dK = 3;
    row.vdisc = 2 * r + 5;
    rows.push_back(std::move(row));
  }
  for (long r : {2L, 3L, 4L}) {
    Row row;
    row.label = "B*2";
    row.p = 2;
    row.conditions = [r](I a, I b) {
      const Integer A = 4 + a, B = 1 + a + b;
      return val(a, 2) == 2 && mod(b, 8) == 3 && val(B, 2) == 2 * r && val(A, 2) == r + 1;
    };
    row.sample = [r](std::mt19937_64& rng) { return from_shift(pw(2, r + 1) * unit(rng, 2), pw(2, 2 * r) * unit(rng, 2)); };
    row.exponents = {0, 1, static_cast<unsigned long>(r)};
    row.dK = 5;
    row.vdisc = 2 * r + 7;
    rows.push_back(std::move(row));

    row.label = "B*3";
    row.conditions = [r](I a, I b) {
      const Integer A = 4 + a, B = 1 + a + b;
      return val(a, 2) == 2 && mod(b, 8) == 3 && val(B, 2) == 2 * r && val(A, 2) >= r + 2;
    };
    row.sample = [r](std::mt19937_64& rng) { return from_shift(pw(2, r + 2) * rnd(rng, -200, 200), pw(2, 2 * r) * unit(rng, 2)); };
    row.dK = 6;
    row.vdisc = 2 * r + 8;
    rows.push_back(std::move(row));
  }

  {
    // b = 3 [8], v2(a) = 2 with P(X+1) not 2-regular: the shift iteration has
    // to move s.  The row is then whichever of B*1..B*3 the final shift meets.
    Row row;
    row.label = "B*iter";
    row.p = 2;
    row.conditions = [](I a, I b) {
      const Integer A = 4 + a, B = 1 + a + b;
      const long vA = val(A, 2), vB = val(B, 2);
      const bool s1_regular = (vA >= 3 && vB >= 2 * vA - 1) || (vB % 2 == 0 && vA >= vB / 2 + 1);
      return val(a, 2) == 2 && mod(b, 8) == 3 && !s1_regular;
    };
    row.sample = [](std::mt19937_64& rng) {
      const long k = std::uniform_int_distribution<long>(1, 4)(rng);
      return from_shift(pw(2, k + 2) * rnd(rng, -300, 300), pw(2, 2 * k + 1) * unit(rng, 2));
    };
    rows.push_back(std::move(row));
  }

  const long p3 = 3;
  const auto a2is = [](I a, long r) { return mod(a * a, 9) == r; };
  add("C1", p3, [](I a, I b) { return val(b, 3) >= 4 && val(a, 3) == 2; }, {0, 1, 2}, 5, 11);
  add("C2", p3, [](I a, I b) { return val(b, 3) >= 4 && val(a, 3) == 1; }, {0, 0, 1}, 5, 7);
  add("C3", p3, [=](I a, I b) { return val(b, 3) >= 4 && val(a, 3) == 0 && !a2is(a, 1); }, {0, 0, 0}, 3, 3);
  add("C4", p3, [=](I a, I b) { return val(b, 3) >= 4 && val(a, 3) == 0 && a2is(a, 1); }, {0, 0, 1}, 1, 3);
  add("C5", p3, [](I a, I b) { return val(b, 3) == 3 && val(a, 3) >= 2; }, {0, 1, 2}, 3, 9);
  add("C6", p3, [](I a, I b) { return val(b, 3) == 3 && val(a, 3) == 1; }, {0, 0, 1}, 5, 7);
  add("C7", p3, [=](I a, I b) { return val(b, 3) == 3 && a2is(a, 1); }, {0, 0, 1}, 1, 3);
  add("C8", p3, [=](I a, I b) { return val(b, 3) == 3 && val(a, 3) == 0 && !a2is(a, 1); }, {0, 0, 0}, 3, 3);
  add("C9", p3, [](I a, I b) { return val(b, 3) == 2 && val(a, 3) >= 2; }, {0, 1, 1}, 2, 6);
  add("C10", p3, [](I a, I b) { return val(b, 3) == 2 && val(a, 3) == 1; }, {0, 0, 1}, 4, 6);
  add("C11", p3, [=](I a, I b) { return val(b, 3) == 2 && a2is(a, 1); }, {0, 0, 1}, 1, 3);
  add("C12", p3, [=](I a, I b) { return val(b, 3) == 2 && val(a, 3) == 0 && !a2is(a, 1); }, {0, 0, 0}, 3, 3);
  add("C13", p3, [](I a, I b) { return val(b, 3) == 1 && val(a, 3) >= 1; }, {0, 0, 0}, 3, 3);
  add("C14", p3, [=](I a, I b) { return mod(b, 9) == 6 && val(a, 3) == 0 && !a2is(a, 4); }, {0, 0, 0}, 3, 3);
  add("C15", p3, [=](I a, I b) { return mod(b, 9) == 6 && a2is(a, 4); }, {0, 0, 1}, 1, 3);
  add("C16", p3, [=](I a, I b) { return mod(b, 9) == 3 && val(a, 3) == 0 && !a2is(a, 7); }, {0, 0, 0}, 4, 4);
  {
    // C17 with the proof's exponent m = floor((v - 2)/2); the table's floor(v/2)
    // is rejected separately by the discriminant identity.
    Row r;
    r.label = "C17";
    r.p = 3;
    r.conditions = [=](I a, I b) {
      return mod(b, 9) == 3 && a2is(a, 7) && mod(a * a * a * a - a * a + b, 27) == 0;
    };
    r.sample = [](std::mt19937_64& rng) { return generic_sample(rng, 3); };
    r.expect = [](long v) { return std::pair{Exps{0, 1, static_cast<unsigned long>((v - 2) / 2)}, v % 2}; };
    rows.push_back(std::move(r));
  }
  add("C18", p3, [=](I a, I b) { return mod(b, 9) == 3 && a2is(a, 7) && val(a * a * a * a - a * a + b, 3) == 2; },
      {0, 0, 1}, 3, 5);
  add("C19", p3, [](I, I b) { return val(b, 3) == 0; }, {0, 0, 0}, 0, 0);
  return rows;
}

bool normalized(const Integer& a, const Integer& b, long p) { return val(a, p) <= 2 || val(b, p) <= 3; }

void criterion_tables(Report& rep) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240501);
  const auto rows = table_rows();
  int instances = 0;
  std::vector<std::string> problems;
  for (const auto& row : rows) {
    int found = 0;
    for (int tries = 0; tries < 2000000 && found < 3; ++tries) {
      const auto [a, b] = row.sample(rng);
      if (!row.conditions(a, b) || !normalized(a, b, row.p) || !trinomial_is_irreducible(a, b)) continue;
      ++found;
      ++instances;
      const long vd = val(disc_of(a, b), row.p);
      Exps exps = row.exponents;
      long dK = row.dK;
      if (row.expect) std::tie(exps, dK) = row.expect(vd);
      std::ostringstream where;
      where << row.label << " (a,b,p)=(" << a << "," << b << "," << row.p << ")";
      try {
        const auto r = p_basis(TrinomialField(a, b), static_cast<Prime>(row.p));
        if (row.label == "B*iter") {
          // v2(disc) = 2r + 5, 2r + 7, 2r + 8 with dK = 3, 5, 6 for B*1, B*2, B*3.
          const long rr = static_cast<long>(r.exponents[2]);
          const std::map<std::string, std::pair<long, long>> table{{"B*1", {2 * rr + 5, 3}}, {"B*2", {2 * rr + 7, 5}}, {"B*3", {2 * rr + 8, 6}}};
          const auto it = table.find(r.label);
          if (it == table.end() || it->second != std::pair{vd, r.vp_dK} || r.exponents[0] != 0 || r.exponents[1] != 1)
            problems.push_back(where.str() + ": " + r.label + " " + exps_str(r.exponents) + " v2(dK)=" + std::to_string(r.vp_dK));
          const auto m = oracle::p_maximal_order(TrinomialField(a, b).polynomial(), 2);
          if (m.vp_index != r.vp_index) problems.push_back(where.str() + ": oracle index differs");
          continue;
        }
        if (r.label != row.label) problems.push_back(where.str() + ": label " + r.label);
        if (r.exponents != exps) problems.push_back(where.str() + ": exponents " + exps_str(r.exponents) + " vs " + exps_str(exps));
        if (r.vp_dK != dK) problems.push_back(where.str() + ": v_p(dK) " + std::to_string(r.vp_dK) + " vs " + std::to_string(dK));
        if (row.vdisc && vd != *row.vdisc) problems.push_back(where.str() + ": v_p(disc) " + std::to_string(vd) + " vs table " + std::to_string(*row.vdisc));
        if (r.vp_disc != vd) problems.push_back(where.str() + ": reported v_p(disc) " + std::to_string(r.vp_disc));
        if (vd != 2 * r.vp_index + r.vp_dK) problems.push_back(where.str() + ": identity does not close");
        // Known typos, resolved: C17 table exponent and B17/B19 elements.
        if (row.label == "C17") {
          const long table_m = vd / 2;
          if (vd == 2 * (1 + table_m) + vd % 2) problems.push_back(where.str() + ": table exponent unexpectedly closes");
        }
        if (row.label == "B17" && r.numerators[2] != taylor_shift(IntPoly{Integer(0), Integer(6), Integer(4), Integer(1)}, -1))
          problems.push_back(where.str() + ": B17 numerator");
        if (row.label == "B19" && r.numerators[2] != IntPoly{Integer(0), Integer(1), Integer(0), Integer(1)})
          problems.push_back(where.str() + ": B19 numerator");
      } catch (const std::exception& e) {
        problems.push_back(where.str() + ": threw " + e.what());
      }
    }
    if (found == 0) problems.push_back(row.label + ": no instance constructed");
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << rows.size() << " row variants, " << instances << " instances, " << problems.size() << " discrepancies, " << dt << " s";
  for (std::size_t i = 0; i < problems.size() && i < 10; ++i) d << "\n    " << problems[i];
  rep.line(2, "table conformance (A1-A8, B1-B21, B*1-B*3, C1-C19)", problems.empty() && dt < 5.0, d.str());
}

// ---------------------------------------------------------------- criteria 3, 5, 7

struct FuzzInstance {
  Integer a, b;
};

std::vector<FuzzInstance> fuzz_instances() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-500, 500);
  std::vector<FuzzInstance> out;
  while (out.size() < 500) {
    const Integer a = d(rng), b = d(rng);
    if (trinomial_is_irreducible(a, b)) out.push_back({a, b});
  }
  return out;
}

const Prime kPrimes[] = {2, 3, 5, 7, 11, 13};

void criteria_fuzz(Report& rep) {
  const auto instances = fuzz_instances();

  // 3: table bases against the oracle
  auto t0 = Clock::now();
  long mismatches = 0, checked = 0;
  std::vector<std::vector<long>> oracle_index(instances.size());
  std::string first;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const TrinomialField field(instances[k].a, instances[k].b);
    for (Prime p : kPrimes) {
      ++checked;
      const auto m = oracle::p_maximal_order(field.polynomial(), p);
      oracle_index[k].push_back(m.vp_index);
      bool ok = true;
      try {
        const auto r = p_basis_scaled(field, p);
        ok = r.vp_index == m.vp_index;
        for (std::size_t i = 0; i < 3 && ok; ++i) ok = oracle::contains(m.order, r.element(i));
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) {
        ++mismatches;
        if (first.empty()) first = " first: a=" + instances[k].a.get_str() + " b=" + instances[k].b.get_str() + " p=" + std::to_string(p);
      }
    }
  }
  double dt = seconds_since(t0);
  rep.line(3, "oracle equivalence fuzz", mismatches == 0 && dt < 60.0,
           std::to_string(checked) + " (instance, p) pairs, " + std::to_string(mismatches) + " mismatches, " +
               std::to_string(dt) + " s" + first);

  // 5: index theorem
  t0 = Clock::now();
  long violations = 0, regular = 0;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const IntPoly f = TrinomialField(instances[k].a, instances[k].b).polynomial();
    for (std::size_t j = 0; j < 6; ++j) {
      const auto cert = p_regularity(f, kPrimes[j]);
      const long bound = cert.index_bound();
      if (oracle_index[k][j] < bound) ++violations;
      if (cert.regular) {
        ++regular;
        if (oracle_index[k][j] != bound) ++violations;
      }
    }
  }
  dt = seconds_since(t0);
  rep.line(5, "index theorem", violations == 0,
           std::to_string(regular) + " regular of " + std::to_string(checked) + " pairs, " + std::to_string(violations) +
               " violations, " + std::to_string(dt) + " s");

  // 7: the p-regular bases against the tables on every p-regular instance
  t0 = Clock::now();
  long compared = 0, disagreements = 0;
  std::string first7;
  for (const auto& inst : instances) {
    for (Prime p : kPrimes) {
      const Normalized n = normalize(inst.a, inst.b, p);
      const TrinomialField field(n.a, n.b);
      if (!is_p_regular(field.polynomial(), p)) continue;
      ++compared;
      bool ok = true;
      try {
        const auto table = p_basis(field, p);
        const auto thm = p_basis_regular(QuarticField(field.polynomial()), p);
        ok = table.vp_index == thm.vp_index;
        for (std::size_t i = 0; i < 3 && ok; ++i) ok = is_p_integral(table.element(i)) && is_p_integral(thm.element(i));
        const auto o1 = oracle::order_from_triangular(table.numerators, table.exponents, p, field.polynomial());
        const auto o2 = oracle::order_from_triangular(thm.numerators, thm.exponents, p, field.polynomial());
        for (std::size_t i = 0; i < 3 && ok; ++i) ok = oracle::contains(o1, thm.element(i)) && oracle::contains(o2, table.element(i));
        ok = ok && o1 == o2;
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) {
        ++disagreements;
        if (first7.empty()) first7 = " first: a=" + n.a.get_str() + " b=" + n.b.get_str() + " p=" + std::to_string(p);
      }
    }
  }
  bool case6 = false;
  try {
    const auto r = p_basis_regular(QuarticField(IntPoly{Integer(10), Integer(9), Integer(2), Integer(0), Integer(1)}), 3);
    case6 = r.label == "T6" && r.exponents == Exps{0, 1, 1};
  } catch (const std::exception&) {
  }
  dt = seconds_since(t0);
  rep.line(7, "p-regular bases vs tables", disagreements == 0 && compared > 0 && case6,
           std::to_string(compared) + " regular pairs compared, " + std::to_string(disagreements) +
               " disagreements; case 6 X^4+2X^2+9X+10 at 3 denominators (1,1,3,3): " + (case6 ? "yes" : "no") + ", " +
               std::to_string(dt) + " s" + first7);
}

// ---------------------------------------------------------------- criterion 4

void criterion_lemma(Report& rep) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::uniform_int_distribution<unsigned long> e(0, 3);
  long bad = 0;
  for (int n = 0; n < 1000; ++n) {
    const Prime p = kPrimes[n % 6];
    const IntPoly f{Integer(d(rng)), Integer(d(rng)), Integer(0), Integer(0), Integer(1)};
    const QuarticElement w{d(rng), d(rng), d(rng), d(rng), e(rng), p, f};
    const auto l = char_poly_lemma(w);
    const auto g = char_poly_generic(w);
    const Integer q = ipow(p, w.i);
    const Integer scaled[4] = {l.a3, l.a2, l.a1, l.a0};
    Integer qk = 1;
    for (std::size_t k = 0; k < 4; ++k) {
      qk *= q;
      Rational expect(scaled[k], qk);
      expect.canonicalize();
      if (g[k] != expect) ++bad;
    }
  }
  const double dt = seconds_since(t0);
  rep.line(4, "Lemma closed forms vs generic characteristic polynomial", bad == 0 && dt < 1.0,
           "1000 elements, " + std::to_string(bad) + " coefficient mismatches, " + std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- criterion 6

void criterion_global(Report& rep) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(66);
  std::uniform_int_distribution<long> d(-100000, 100000);
  int done = 0, bad = 0;
  std::string first;
  while (done < 100) {
    // scale by small prime powers so that several primes contribute
    const Integer a = Integer(d(rng)) * (done % 4 == 0 ? 8 : 1) * (done % 3 == 0 ? 9 : 1);
    const Integer b = Integer(d(rng)) * (done % 5 == 0 ? 16 : 1);
    if (!trinomial_is_irreducible(a, b)) continue;
    const TrinomialField field(a, b);
    if (!factor_integer(field.disc()).complete()) continue;
    ++done;
    bool ok = true;
    try {
      const auto g = integral_basis(field);
      ok = !g.conditional && field.disc() == g.index * g.index * g.dK && g.divisors[1] % g.divisors[0] == 0 &&
           g.divisors[2] % g.divisors[1] == 0 && g.index == g.divisors[0] * g.divisors[1] * g.divisors[2] &&
           abs(change_of_basis_determinant(g)) == Rational(Integer(1), g.index);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      ++bad;
      if (first.empty()) first = " first: a=" + a.get_str() + " b=" + b.get_str();
    }
  }
  const double dt = seconds_since(t0);
  rep.line(6, "globalization", bad == 0 && dt < 30.0,
           "100 fields, " + std::to_string(bad) + " failures, " + std::to_string(dt) + " s" + first);
}

}  // namespace

int main() {
  Report rep;
  criterion_figure(rep);
  criterion_tables(rep);
  criterion_lemma(rep);
  criteria_fuzz(rep);
  criterion_global(rep);
  for (const auto& [id, text] : rep.lines) std::printf("%s\n", text.c_str());
  std::printf("%s: %d of 7 criteria failed\n", rep.failures ? "FAIL" : "PASS", rep.failures);
  return rep.failures ? 1 : 0;
}
