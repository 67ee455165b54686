// Acceptance suite: one PASS/FAIL line per criterion.

#include <fjsa/homology.hpp>
#include <fjsa/lambda_ops.hpp>
#include <fjsa/solver.hpp>
#include <fjsa/tag.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace fjsa;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<GDim> gdims(std::initializer_list<std::pair<long, long>> v) {
  std::vector<GDim> out;
  for (auto [e, o] : v) out.emplace_back(e, o);
  return out;
}

std::string join(const std::vector<GDim>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

SuperSeries random_effective(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> d(0, 2);
  SuperSeries s(order);
  for (int n = 1; n <= order; ++n) s.set(n, GDim(d(rng), d(rng)));
  return s;
}

void criterion1(Outcome& o) {
  auto timed = [&](long d1, long d2, int order) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveReport r = solve_E(d1, d2, order);
    const double s = seconds_since(t0);
    o.require(s < 1.0, "runtime for (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
    return r;
  };
  const SolveReport r01 = timed(0, 1, 10);
  std::vector<GDim> expect01(10);
  expect01[0] = GDim(0, 1);
  o.require(r01.a == expect01, "(0,1) a = (0,1)z only");
  const SolveReport r02 = timed(0, 2, 4);
  o.require(r02.a == gdims({{0, 2}, {1, 0}, {0, 2}, {5, 0}}), "(0,2) table");
  const SolveReport r11 = timed(1, 1, 4);
  o.require(r11.a == gdims({{1, 1}, {1, 1}, {2, 2}, {3, 3}}), "(1,1) table");
  o.detail << " (0,2): " << join(r02.a) << "; (1,1): " << join(r11.a);
}

void criterion2(Outcome& o) {
  const SolveReport p = solve_phi_system(0, 1, 8);
  std::vector<GDim> a(8), b(8);
  a[0] = GDim(0, 1);
  b[1] = GDim(1, 0);
  o.require(p.a == a && *p.b == b, "(0,1) system values");
  int pairs = 0;
  for (long d1 = 0; d1 <= 4; ++d1)
    for (long d2 = 0; d1 + d2 <= 4; ++d2) {
      if (d1 + d2 == 0) continue;
      ++pairs;
      o.require(solve_phi_system(d1, d2, 12).a == solve_E(d1, d2, 12).a,
                "a agrees for (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
    }
  o.detail << " (0,1): a1=(0,1), b2=(1,0); a-series agree on " << pairs << " pairs through order 12";
}

void criterion3(Outcome& o) {
  auto check = [&](long d1, long d2, int n, const std::vector<GDim>& expect) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto dims = graded_dims(build_free_jordan(d1, d2, n));
    const double s = seconds_since(t0);
    const std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    o.require(dims == expect, tag + " dims " + join(dims));
    if (n <= 4) o.require(s < 5.0, tag + " runtime");
  };
  check(0, 1, 6, gdims({{0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}));
  check(0, 2, 4, gdims({{0, 2}, {1, 0}, {0, 2}, {5, 0}}));
  check(1, 1, 4, gdims({{1, 1}, {1, 1}, {2, 2}, {3, 3}}));
  check(1, 0, 8, std::vector<GDim>(8, GDim(1, 0)));
  o.detail << " J(0|1) zero beyond degree 1; J(0|2), J(1|1) degrees 1-4; J(1|0) through 8";
}

void criterion4(Outcome& o) {
  for (auto [d1, d2] : {std::pair{1L, 1L}, {0L, 2L}}) {
    const auto alg = build_free_jordan(d1, d2, 4);
    const int v = vanishing_order(residual_check(graded_dims_series(alg, 4), d1, d2));
    o.require(v >= 4, "oracle residue mod z^5 for (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
  }
  const SolveReport s = solve_E(2, 0, 15);
  const int v = vanishing_order(residual_check(s.a_series(), 2, 0));
  o.require(v >= 15, "solver residue for (2,0) mod z^16");
  JordanBuildOptions opts;
  opts.entry_budget = 20'000'000;
  const FrontierBuild fb = build_free_jordan_frontier(2, 0, 9, opts);
  const auto dims = graded_dims(fb.algebra);
  std::size_t agree = 0;
  for (; agree < dims.size() && dims[agree] == s.a[agree]; ++agree) {
  }
  o.detail << " oracle residues vanish mod z^5 for (1,1), (0,2); (2,0) solver residue vanishes mod z^" << v + 1
           << "; solver prefix matches J(2|0) oracle through degree " << agree << " of " << dims.size();
  if (agree < dims.size())
    o.detail << " (conjecture-level discrepancy at degree " << agree + 1 << ": solver " << s.a[agree].str()
             << " vs oracle " << dims[agree].str() << ")";
}

void criterion5(Outcome& o) {
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    const SuperSeries a1 = random_effective(rng, 6), a2 = random_effective(rng, 6);
    if (!(build_Psi(a1 + a2) == build_Psi(a1) * build_Psi(a2))) {
      o.require(false, "homomorphism on sample " + std::to_string(i));
      break;
    }
  }

  const int N = 30;
  TZSeries plus(N), minus(N), closed(N);
  for (int n = 0; n <= N; ++n) {
    const GDim sign = n % 2 ? GDim(0, -1) : GDim(1, 0);
    plus.set(n, RLaurent::monomial(sign, n));
    minus.set(n, RLaurent::monomial(sign, -n));
    closed.set(n, t_integer(n + 1) * sign);
  }
  o.require(plus * minus == closed, "odd-line product identity through order 30");
  o.require(lambda_adjoint_line(GDim(0, 1), 1, N) == closed, "closed form through order 30");

  for (int i = 0; i < 50; ++i) {
    const int order = 1 + static_cast<int>(rng() % 8);
    const DimSeriesPair p(random_effective(rng, order), random_effective(rng, order));
    if (!(build_Phi(p) == lift(build_Theta(p)) * build_Psi(p.a))) {
      o.require(false, "Phi = Theta * Psi on sample " + std::to_string(i));
      break;
    }
  }

  int spaces = 0;
  bool enum_ok = true;
  const int order = 8;
  std::vector<int> mult(8, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == mult.size()) {
      std::vector<GradedPiece> pieces;
      SuperSeries closed_form = SuperSeries::one(order);
      for (int d = 1; d <= 4; ++d) {
        const GDim g(mult[2 * (d - 1)], mult[2 * (d - 1) + 1]);
        if (g.is_zero()) continue;
        pieces.push_back({g, d});
        closed_form = closed_form * lambda_line(g, d, order);
      }
      enum_ok = enum_ok && lambda_s_direct(pieces, order) == closed_form;
      ++spaces;
      return;
    }
    for (int k = 0; used + k <= 4; ++k) {
      mult[i] = k;
      rec(i + 1, used + k);
    }
    mult[i] = 0;
  };
  rec(0, 0);
  o.require(enum_ok, "closed form vs enumeration");
  o.detail << " homomorphism on 100 samples; odd-line identity to order 30; Phi = Theta*Psi on 50 samples; "
           << spaces << " superspaces enumerated";
}

void criterion6(Outcome& o) {
  std::size_t sc = 0, sj = 0, anti = 0, jac = 0, dsq = 0;
  for (auto [d1, d2, n] : {std::tuple{0L, 1L, 5}, {0L, 2L, 5}, {1L, 1L, 5}, {2L, 0L, 6}, {1L, 0L, 8}, {1L, 2L, 4},
                           {0L, 3L, 4}, {3L, 0L, 4}}) {
    const auto alg = build_free_jordan(d1, d2, n);
    const std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    const IdentityCheck c1 = check_supercommutativity(alg);
    const IdentityCheck c2 = check_jordan_identity(alg);
    o.require(c1.ok(), tag + " supercommutativity: " + c1.first_failure);
    o.require(c2.ok(), tag + " Jordan identity: " + c2.first_failure);
    sc += c1.checked;
    sj += c2.checked;
    const int t = std::min(n, 5);
    const BsAlgebra bs = build_Bs(alg, t);
    const TagAlgebra tag_alg = build_tag(bs, t, false);
    const TagSelfTest st = tag_alg.self_test();
    o.require(st.anticommutativity.ok(), tag + " TAG anticommutativity: " + st.anticommutativity.first_failure);
    o.require(st.jacobi.ok(), tag + " TAG Jacobi: " + st.jacobi.first_failure);
    anti += st.anticommutativity.checked;
    jac += st.jacobi.checked;
    try {
      dsq += build_chain_complex(tag_alg, 3, t).d_squared_checks();
    } catch (const InvariantViolation& e) {
      o.require(false, tag + " " + e.what());
    }
  }
  o.detail << " " << sc << " supercommutativity and " << sj << " Jordan instances; " << anti
           << " anticommutativity and " << jac << " Jacobi instances; d^2 = 0 on " << dsq << " chain monomials";
}

void criterion7(Outcome& o) {
  for (auto [d1, d2] : {std::pair{0L, 1L}, {1L, 1L}}) {
    const std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    const HomologyReport rep = compute_homology(d1, d2, 4, 5);
    const HomologyChecks c = check_homology(rep);
    o.require(c.h0_trivial, tag + " H_0 = k");
    o.require(c.h1_generators, tag + " H_1 = sl2 (x) J_1");
    o.require(c.h2_l4_isotypic && invariant_violations(rep, 2).empty(), tag + " H_2 L(4)-isotypic");
    o.require(c.weight_strings, tag + " weight strings");
    for (const auto& e : rep.euler) {
      o.require(e.chains_complete && e.chains_match(), tag + " Euler (chains) at degree " + std::to_string(e.degree));
      if (e.homology_complete) o.require(e.homology_match(), tag + " Euler (homology) at degree " + std::to_string(e.degree));
    }
    GDim h2;
    for (int d = 0; d <= 5; ++d) h2 += rep.at(2, d).total;
    o.detail << " " << tag << ": dim H_2 (degrees <= 5) = " << h2.str() << ";";
  }
  o.detail << " H_0, H_1, H_2 and Euler identity through degree 5 reproduced";
}

void criterion8(Outcome& o) {
  for (auto [d1, d2, dmax] : {std::tuple{0L, 1L, 8}, {1L, 1L, 6}}) {
    const HomologyReport rep = compute_homology(d1, d2, 3, dmax);
    o.detail << " (" << d1 << "," << d2 << ") H_3 degrees 0-" << dmax << " mult(0),mult(2):";
    for (int d = 0; d <= dmax; ++d) {
      const HomologyBlock& b = rep.at(3, d);
      o.require(b.multiplicities.ok(), "weight string at degree " + std::to_string(d));
      const auto& m = b.multiplicities.mult;
      o.detail << " " << (m.empty() ? GDim() : m[0]).str() << "/" << (m.size() > 1 ? m[1] : GDim()).str();
    }
    const auto bad = invariant_violations(rep, 3);
    o.detail << (bad.empty() ? " (all zero)" : " (NONZERO)") << ";";
  }
  o.detail << " reported, not asserted";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"solver golden values", criterion1},
      {"two-series system golden values", criterion2},
      {"oracle golden values", criterion3},
      {"residue vanishing", criterion4},
      {"lambda-operation properties", criterion5},
      {"algebraic gates", criterion6},
      {"homology reproduction", criterion7},
      {"third homology evidence", criterion8},
  };
  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    passed += o.pass ? 1 : 0;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << seconds_since(t0) << " s):" << o.detail.str() << std::endl;
  }
  std::cout << "acceptance: " << passed << "/" << criteria.size() << " criteria passed" << std::endl;
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
