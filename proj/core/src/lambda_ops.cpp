#include <fjsa/lambda_ops.hpp>

#include <stdexcept>

namespace fjsa {

DimSeriesPair::DimSeriesPair(SuperSeries a_, SuperSeries b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.order() != b.order()) throw SeriesError("DimSeriesPair: truncation order mismatch");
  if (!a[0].is_zero() || !b[0].is_zero()) throw std::invalid_argument("DimSeriesPair: constant terms must vanish");
}

namespace {

void require_degree(int m) {
  if (m < 1) throw std::invalid_argument("lambda line: degree must be >= 1");
}

// sum_r (-1)^r [S^r of an odd line in degree m]
SuperSeries odd_line_lambda(int m, int order) {
  SuperSeries s(order);
  for (long r = 0; r * m <= order; ++r) s.set(static_cast<int>(r * m), (r % 2 == 0) ? GDim(1, 0) : GDim(0, -1));
  return s;
}

TZSeries odd_line_weight_pair(int m, int order) {
  TZSeries s(order);
  for (long i = 0;; ++i) {
    const long even_deg = 2 * i * m;
    if (even_deg > order) break;
    s.set(static_cast<int>(even_deg), t_integer(static_cast<int>(2 * i + 1)));
    const long odd_deg = (2 * i + 1) * m;
    if (odd_deg <= order) s.set(static_cast<int>(odd_deg), t_integer(static_cast<int>(2 * i + 2)) * GDim(0, -1));
  }
  return s;
}

}  // namespace

SuperSeries lambda_line(const GDim& a, int m, int order) {
  require_degree(m);
  SuperSeries even_factor = SuperSeries::one(order);
  even_factor.add_to(m, GDim(-1, 0));
  return series_pow(even_factor, a.even) * series_pow(odd_line_lambda(m, order), a.odd);
}

TZSeries lambda_adjoint_line(const GDim& a, int m, int order) {
  require_degree(m);
  TZSeries even_factor = TZSeries::one(order);
  even_factor.add_to(m, t_integer(2) * BigInt(-1));
  even_factor.add_to(2 * m, RLaurent::one());
  return series_pow(even_factor, a.even) * series_pow(odd_line_weight_pair(m, order), a.odd);
}

TZSeries build_Psi(const SuperSeries& a) {
  if (!a[0].is_zero()) throw std::invalid_argument("build_Psi: constant term must vanish");
  TZSeries out = TZSeries::one(a.order());
  for (int n = 1; n <= a.order(); ++n) {
    if (a[n].is_zero()) continue;
    out = out * lambda_adjoint_line(a[n], n, a.order());
  }
  return out;
}

SuperSeries build_Theta(const DimSeriesPair& p) {
  SuperSeries out = SuperSeries::one(p.order());
  for (int n = 1; n <= p.order(); ++n) {
    const GDim c = p.a[n] + p.b[n];
    if (c.is_zero()) continue;
    out = out * lambda_line(c, n, p.order());
  }
  return out;
}

TZSeries build_Phi(const DimSeriesPair& p) { return lift(build_Theta(p)) * build_Psi(p.a); }

TZSeries build_psi(long d1, long d2, int order) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("build_psi: generator counts must be >= 0");
  TZSeries k(order);
  k.set(0, RLaurent::one() + RLaurent::monomial(GDim(-1, 0), 1));
  if (order >= 1) {
    const GDim d(d1, d2);
    k.set(1, RLaurent::monomial(d, -1) + RLaurent(-d));
  }
  return k;
}

namespace {

struct EnumState {
  std::vector<std::pair<Parity, int>> basis;  // (parity, degree)
  int order;
  SuperSeries acc;
};

// Each basis vector is used at most once when even, any number of times when odd.
void enumerate(EnumState& st, size_t idx, int degree, int count, int odd_count) {
  if (idx == st.basis.size()) {
    GDim term = GDim::of_parity((odd_count % 2) ? Parity::Odd : Parity::Even);
    if (count % 2) term = -term;
    st.acc.add_to(degree, term);
    return;
  }
  const auto [parity, d] = st.basis[idx];
  const int max_mult = (parity == Parity::Even) ? 1 : st.order;
  for (int k = 0; k <= max_mult && degree + k * d <= st.order; ++k)
    enumerate(st, idx + 1, degree + k * d, count + k, odd_count + (parity == Parity::Odd ? k : 0));
}

}  // namespace

SuperSeries lambda_s_direct(std::span<const GradedPiece> pieces, int order) {
  EnumState st{{}, order, SuperSeries(order)};
  for (const auto& p : pieces) {
    if (p.degree < 1) throw std::invalid_argument("lambda_s_direct: degree must be >= 1");
    if (sgn(p.dims.even) < 0 || sgn(p.dims.odd) < 0)
      throw std::invalid_argument("lambda_s_direct: needs an effective class");
    for (long i = 0; i < p.dims.even.get_si(); ++i) st.basis.emplace_back(Parity::Even, p.degree);
    for (long i = 0; i < p.dims.odd.get_si(); ++i) st.basis.emplace_back(Parity::Odd, p.degree);
  }
  enumerate(st, 0, 0, 0, 0);
  return st.acc;
}

}  // namespace fjsa
