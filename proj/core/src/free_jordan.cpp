#include <fjsa/free_jordan.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <tuple>

namespace fjsa {

namespace {

using BasisRef = std::pair<int, std::size_t>;

std::string wrap(const std::string& name, int degree) { return degree > 1 ? "(" + name + ")" : name; }

int sign_of(Parity a, Parity b) { return koszul_sign(a, b); }

}  // namespace

GDim JordanComponent::gdim() const {
  GDim g;
  for (Parity p : parity) (p == Parity::Even ? g.even : g.odd) += 1;
  return g;
}

GradedJordanAlgebra::GradedJordanAlgebra(long d1, long d2, JordanBuildOptions opts)
    : d1_(d1), d2_(d2), opts_(std::move(opts)) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("generator counts must be >= 0");
  if (d1 + d2 < 1) throw std::invalid_argument("need d1 + d2 >= 1");
  const auto total = static_cast<std::size_t>(d1 + d2);
  if (opts_.generator_order.empty()) {
    opts_.generator_order.resize(total);
    std::iota(opts_.generator_order.begin(), opts_.generator_order.end(), std::size_t{0});
  }
  auto sorted = opts_.generator_order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted.size() != total || sorted[i] != i) throw std::invalid_argument("generator_order is not a permutation");
}

void GradedJordanAlgebra::build_degree_one() {
  JordanComponent c;
  c.degree = 1;
  for (std::size_t g : opts_.generator_order) {
    const bool even = g < static_cast<std::size_t>(d1_);
    c.parity.push_back(even ? Parity::Even : Parity::Odd);
    c.name.push_back(even ? "x" + std::to_string(g + 1) : "y" + std::to_string(g - static_cast<std::size_t>(d1_) + 1));
  }
  components_.push_back(std::move(c));
  layouts_.emplace_back();
}

GradedJordanAlgebra::PairLayout GradedJordanAlgebra::layout_for(int n) const {
  struct Entry {
    Parity parity;
    int i;
    std::size_t a, b;
  };
  std::vector<Entry> entries;
  PairLayout lay;
  lay.col.resize(static_cast<std::size_t>(n / 2));
  for (int i = 1; 2 * i <= n; ++i) {
    const int j = n - i;
    const auto& ci = component(i);
    const auto& cj = component(j);
    lay.col[static_cast<std::size_t>(i - 1)].assign(ci.dim() * cj.dim(), npos);
    for (std::size_t a = 0; a < ci.dim(); ++a)
      for (std::size_t b = (i == j ? a : 0); b < cj.dim(); ++b) {
        if (i == j && a == b && ci.parity[a] == Parity::Odd) continue;
        entries.push_back({ci.parity[a] + cj.parity[b], i, a, b});
      }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& l, const Entry& r) { return parity_bit(l.parity) < parity_bit(r.parity); });
  for (const auto& e : entries) {
    const int j = n - e.i;
    const std::size_t col = lay.col_parity.size();
    lay.col[static_cast<std::size_t>(e.i - 1)][e.a * component(j).dim() + e.b] = col;
    lay.col_parity.push_back(e.parity);
    lay.col_name.push_back(wrap(component(e.i).name[e.a], e.i) + "·" + wrap(component(j).name[e.b], j));
  }
  lay.width = entries.size();
  return lay;
}

std::pair<std::size_t, int> GradedJordanAlgebra::canonical(const PairLayout& lay, int i, std::size_t a, int j,
                                                           std::size_t b) const {
  int sign = 1;
  if (i > j || (i == j && a > b)) {
    sign = sign_of(component(i).parity[a], component(j).parity[b]);
    std::swap(i, j);
    std::swap(a, b);
  }
  const std::size_t col = lay.col[static_cast<std::size_t>(i - 1)][a * component(j).dim() + b];
  return {col, sign};
}

std::size_t GradedJordanAlgebra::pair_space_width(int n) const {
  if (n < 2) return 0;
  if (n > max_degree() + 1) throw std::out_of_range("pair_space_width: degree beyond construction");
  if (n <= max_degree()) return layouts_[static_cast<std::size_t>(n - 1)].width;
  return layout_for(n).width;
}

JordanElement GradedJordanAlgebra::zero(int n) const { return {n, DenseVec(component(n).dim())}; }

JordanElement GradedJordanAlgebra::basis(int n, std::size_t index) const {
  JordanElement e = zero(n);
  e.coords.at(index) = 1;
  return e;
}

SparseVec GradedJordanAlgebra::basis_product(int i, std::size_t a, int j, std::size_t b) const {
  const int n = i + j;
  if (n > max_degree()) throw std::out_of_range("product degree " + std::to_string(n) + " exceeds construction");
  const PairLayout& lay = layouts_[static_cast<std::size_t>(n - 1)];
  const auto [col, sign] = canonical(lay, i, a, j, b);
  if (col == npos) return {};
  SparseVec out = component(n).projection[col];
  if (sign < 0)
    for (auto& e : out) e.second = -e.second;
  return out;
}

JordanElement GradedJordanAlgebra::multiply(const JordanElement& u, const JordanElement& v) const {
  JordanElement r = zero(u.degree + v.degree);
  for (std::size_t a = 0; a < u.coords.size(); ++a) {
    if (sgn(u.coords[a]) == 0) continue;
    for (std::size_t b = 0; b < v.coords.size(); ++b) {
      if (sgn(v.coords[b]) == 0) continue;
      axpy(r.coords, u.coords[a] * v.coords[b], basis_product(u.degree, a, v.degree, b));
    }
  }
  return r;
}

void GradedJordanAlgebra::product_into_pairs(const PairLayout& lay, const JordanElement& u, const JordanElement& v,
                                             const Rational& scale, DenseVec& out) const {
  for (std::size_t a = 0; a < u.coords.size(); ++a) {
    if (sgn(u.coords[a]) == 0) continue;
    for (std::size_t b = 0; b < v.coords.size(); ++b) {
      if (sgn(v.coords[b]) == 0) continue;
      const auto [col, sign] = canonical(lay, u.degree, a, v.degree, b);
      if (col == npos) continue;
      const Rational c = scale * u.coords[a] * v.coords[b];
      if (sign > 0)
        out[col] += c;
      else
        out[col] -= c;
    }
  }
}

DenseVec GradedJordanAlgebra::relation(const PairLayout& lay, BasisRef x, BasisRef y, BasisRef z, BasisRef w) const {
  DenseVec out(lay.width);
  const std::array<BasisRef, 3> t{x, y, z};
  const JordanElement we = basis(w.first, w.second);
  for (int rot = 0; rot < 3; ++rot) {
    const BasisRef p = t[static_cast<std::size_t>(rot)];
    const BasisRef q = t[static_cast<std::size_t>((rot + 1) % 3)];
    const BasisRef r = t[static_cast<std::size_t>((rot + 2) % 3)];
    const Parity pp = component(p.first).parity[p.second];
    const Parity pq = component(q.first).parity[q.second];
    const Parity pr = component(r.first).parity[r.second];
    const int s = sign_of(pp, pr);
    const JordanElement re = basis(r.first, r.second);
    const JordanElement pq_e = multiply(basis(p.first, p.second), basis(q.first, q.second));
    product_into_pairs(lay, pq_e, multiply(re, we), Rational(s), out);
    product_into_pairs(lay, re, multiply(pq_e, we), Rational(-s * sign_of(pp + pq, pr)), out);
  }
  return out;
}

DenseVec GradedJordanAlgebra::relation_in_pairs(BasisRef x, BasisRef y, BasisRef z, BasisRef w) const {
  const int n = x.first + y.first + z.first + w.first;
  if (n != max_degree() + 1) throw std::invalid_argument("relation_in_pairs: total degree must be max_degree()+1");
  return relation(layout_for(n), x, y, z, w);
}

void GradedJordanAlgebra::build_degree(int n) {
  PairLayout lay = layout_for(n);
  RowEchelon ech(lay.width, opts_.entry_budget);
  std::vector<BasisRef> refs;
  for (int d = 1; d < n; ++d)
    for (std::size_t i = 0; i < component(d).dim(); ++i) refs.emplace_back(d, i);

  // x, y, z up to cyclic rotation (keep the lexicographically least rotation)
  for (const auto& x : refs) {
    if (ech.full()) break;
    for (const auto& y : refs) {
      if (x.first + y.first > n - 2) continue;
      for (const auto& z : refs) {
        const int dw = n - x.first - y.first - z.first;
        if (dw < 1) continue;
        const auto key = std::tie(x, y, z);
        if (std::tie(y, z, x) < key || std::tie(z, x, y) < key) continue;
        for (std::size_t wi = 0; wi < component(dw).dim(); ++wi) {
          if (ech.full()) break;
          DenseVec rel = relation(lay, x, y, z, {dw, wi});
          if (!is_zero(rel)) ech.insert(std::move(rel));
        }
      }
    }
  }

  JordanComponent c;
  c.degree = n;
  c.relation_rank = ech.rank();
  for (std::size_t col : ech.free_columns()) {
    c.parity.push_back(lay.col_parity[col]);
    c.name.push_back(lay.col_name[col]);
  }
  c.projection = ech.quotient_images();
  components_.push_back(std::move(c));
  layouts_.push_back(std::move(lay));
}

void GradedJordanAlgebra::extend(int n) {
  if (components_.empty() && n >= 1) build_degree_one();
  for (int d = max_degree() + 1; d <= n; ++d) build_degree(d);
}

GradedJordanAlgebra GradedJordanAlgebra::from_components(long d1, long d2, std::vector<JordanComponent> comps,
                                                         JordanBuildOptions opts) {
  GradedJordanAlgebra alg(d1, d2, std::move(opts));
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const int n = static_cast<int>(k) + 1;
    if (comps[k].degree != n) throw std::invalid_argument("from_components: degrees must be 1..k in order");
    if (n == 1) {
      alg.build_degree_one();
      if (alg.components_[0].parity != comps[0].parity)
        throw std::invalid_argument("from_components: degree-1 parities disagree with generators");
      alg.components_[0] = std::move(comps[0]);
      continue;
    }
    PairLayout lay = alg.layout_for(n);
    if (comps[k].projection.size() != lay.width)
      throw std::invalid_argument("from_components: projection width mismatch at degree " + std::to_string(n));
    alg.components_.push_back(std::move(comps[k]));
    alg.layouts_.push_back(std::move(lay));
  }
  return alg;
}

GradedJordanAlgebra build_free_jordan(long d1, long d2, int n, JordanBuildOptions opts) {
  if (n < 1) throw std::invalid_argument("max degree must be >= 1");
  GradedJordanAlgebra alg(d1, d2, std::move(opts));
  alg.extend(n);
  return alg;
}

FrontierBuild build_free_jordan_frontier(long d1, long d2, int n, JordanBuildOptions opts) {
  if (n < 1) throw std::invalid_argument("max degree must be >= 1");
  FrontierBuild out{GradedJordanAlgebra(d1, d2, std::move(opts)), false};
  try {
    out.algebra.extend(n);
  } catch (const ResourceBudgetExceeded&) {
    out.budget_hit = true;
  }
  return out;
}

Parity parity_of(const GradedJordanAlgebra& alg, const JordanElement& u) {
  std::optional<Parity> p;
  const auto& c = alg.component(u.degree);
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    if (sgn(u.coords[i]) == 0) continue;
    if (p && *p != c.parity[i]) throw std::invalid_argument("element is not parity-homogeneous");
    p = c.parity[i];
  }
  return p.value_or(Parity::Even);
}

JordanElement jordan_identity_residual(const GradedJordanAlgebra& alg, const JordanElement& x, const JordanElement& y,
                                       const JordanElement& z, const JordanElement& w) {
  const std::array<const JordanElement*, 3> t{&x, &y, &z};
  JordanElement out = alg.zero(x.degree + y.degree + z.degree + w.degree);
  for (int rot = 0; rot < 3; ++rot) {
    const JordanElement& p = *t[static_cast<std::size_t>(rot)];
    const JordanElement& q = *t[static_cast<std::size_t>((rot + 1) % 3)];
    const JordanElement& r = *t[static_cast<std::size_t>((rot + 2) % 3)];
    const Parity pp = parity_of(alg, p), pq = parity_of(alg, q), pr = parity_of(alg, r);
    const int s = koszul_sign(pp, pr);
    const JordanElement pq_e = alg.multiply(p, q);
    const JordanElement t1 = alg.multiply(pq_e, alg.multiply(r, w));
    const JordanElement t2 = alg.multiply(r, alg.multiply(pq_e, w));
    const int s2 = -s * koszul_sign(pp + pq, pr);
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
      out.coords[i] += s * t1.coords[i];
      out.coords[i] += s2 * t2.coords[i];
    }
  }
  return out;
}

std::vector<GDim> graded_dims(const GradedJordanAlgebra& alg) {
  std::vector<GDim> out;
  for (const auto& c : alg.components()) out.push_back(c.gdim());
  return out;
}

SuperSeries graded_dims_series(const GradedJordanAlgebra& alg, int order) {
  SuperSeries s(order);
  for (int n = 1; n <= std::min(order, alg.max_degree()); ++n) s.set(n, alg.component(n).gdim());
  return s;
}

IdentityCheck check_supercommutativity(const GradedJordanAlgebra& alg) {
  IdentityCheck res;
  const int N = alg.max_degree();
  for (int i = 1; i < N; ++i)
    for (int j = 1; i + j <= N; ++j) {
      const auto& ci = alg.component(i);
      const auto& cj = alg.component(j);
      const auto& cn = alg.component(i + j);
      for (std::size_t a = 0; a < ci.dim(); ++a)
        for (std::size_t b = 0; b < cj.dim(); ++b) {
          ++res.checked;
          const SparseVec uv = alg.basis_product(i, a, j, b);
          SparseVec vu = alg.basis_product(j, b, i, a);
          if (koszul_sign(ci.parity[a], cj.parity[b]) < 0)
            for (auto& e : vu) e.second = -e.second;
          bool ok = uv == vu;
          for (const auto& e : uv)
            if (cn.parity[e.first] != ci.parity[a] + cj.parity[b]) ok = false;
          if (!ok && res.failures++ == 0) {
            std::ostringstream os;
            os << "e" << a << "@" << i << " * e" << b << "@" << j;
            res.first_failure = os.str();
          }
        }
    }
  return res;
}

IdentityCheck check_jordan_identity(const GradedJordanAlgebra& alg) {
  IdentityCheck res;
  const int N = alg.max_degree();
  std::vector<BasisRef> refs;
  for (int d = 1; d < N; ++d)
    for (std::size_t i = 0; i < alg.component(d).dim(); ++i) refs.emplace_back(d, i);
  for (const auto& x : refs)
    for (const auto& y : refs)
      for (const auto& z : refs)
        for (const auto& w : refs) {
          if (x.first + y.first + z.first + w.first > N) continue;
          ++res.checked;
          const JordanElement r =
              jordan_identity_residual(alg, alg.basis(x.first, x.second), alg.basis(y.first, y.second),
                                       alg.basis(z.first, z.second), alg.basis(w.first, w.second));
          if (!is_zero(r.coords) && res.failures++ == 0) {
            std::ostringstream os;
            os << "(" << x.first << ":" << x.second << ", " << y.first << ":" << y.second << ", " << z.first << ":"
               << z.second << ", " << w.first << ":" << w.second << ")";
            res.first_failure = os.str();
          }
        }
  return res;
}

}  // namespace fjsa
