#include <fjsa/tag.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

namespace fjsa {

namespace {

using Kind = TagBasisElement::Kind;

std::string wrap(const std::string& name, int degree) { return degree > 1 ? "(" + name + ")" : name; }

// sl2 basis e, h, f as 0, 1, 2
int sl2_pos(Kind k) { return k == Kind::E ? 0 : (k == Kind::H ? 1 : 2); }

// [a, b] = coeff * c
struct Sl2Bracket {
  int coeff;
  Kind result;
};
Sl2Bracket sl2_bracket(Kind a, Kind b) {
  static const Sl2Bracket table[3][3] = {
      {{0, Kind::E}, {-2, Kind::E}, {1, Kind::H}},
      {{2, Kind::E}, {0, Kind::H}, {-2, Kind::F}},
      {{-1, Kind::H}, {2, Kind::F}, {0, Kind::F}},
  };
  return table[sl2_pos(a)][sl2_pos(b)];
}

// kappa(a, b) / 2 with kappa(h,h) = 8, kappa(e,f) = 4
int half_killing(Kind a, Kind b) {
  if (a == Kind::H && b == Kind::H) return 4;
  if ((a == Kind::E && b == Kind::F) || (a == Kind::F && b == Kind::E)) return 2;
  return 0;
}

const char* sl2_name(Kind k) { return k == Kind::E ? "e" : (k == Kind::H ? "h" : "f"); }

void add_scaled(std::map<std::size_t, Rational>& acc, const Rational& c, const SparseVec& v) {
  for (const auto& [i, x] : v) {
    auto [it, inserted] = acc.try_emplace(i, c * x);
    if (!inserted) {
      it->second += c * x;
      if (sgn(it->second) == 0) acc.erase(it);
    }
  }
}

SparseVec from_map(const std::map<std::size_t, Rational>& m) {
  SparseVec out;
  for (const auto& [i, c] : m)
    if (sgn(c) != 0) out.emplace_back(i, c);
  return out;
}

}  // namespace

GDim BsComponent::gdim() const {
  GDim g;
  for (Parity p : parity) (p == Parity::Even ? g.even : g.odd) += 1;
  return g;
}

BsAlgebra::Layout BsAlgebra::layout_for(int n) const {
  struct Entry {
    Parity parity;
    int i;
    std::size_t a, b;
  };
  std::vector<Entry> entries;
  Layout lay;
  lay.col.resize(static_cast<std::size_t>(n / 2));
  for (int i = 1; 2 * i <= n; ++i) {
    const int j = n - i;
    const auto& ci = alg_->component(i);
    const auto& cj = alg_->component(j);
    lay.col[static_cast<std::size_t>(i - 1)].assign(ci.dim() * cj.dim(), npos);
    for (std::size_t a = 0; a < ci.dim(); ++a)
      for (std::size_t b = (i == j ? a : 0); b < cj.dim(); ++b) {
        if (i == j && a == b && ci.parity[a] == Parity::Even) continue;
        entries.push_back({ci.parity[a] + cj.parity[b], i, a, b});
      }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& l, const Entry& r) { return parity_bit(l.parity) < parity_bit(r.parity); });
  for (const auto& e : entries) {
    const std::size_t col = lay.col_parity.size();
    lay.col[static_cast<std::size_t>(e.i - 1)][e.a * alg_->component(n - e.i).dim() + e.b] = col;
    lay.col_parity.push_back(e.parity);
    lay.col_pair.emplace_back(e.i, e.a, e.b);
  }
  lay.width = entries.size();
  return lay;
}

std::pair<std::size_t, int> BsAlgebra::canonical(const Layout& lay, int i, std::size_t a, int j,
                                                 std::size_t b) const {
  int sign = 1;
  if (i > j || (i == j && a > b)) {
    sign = -koszul_sign(alg_->component(i).parity[a], alg_->component(j).parity[b]);
    std::swap(i, j);
    std::swap(a, b);
  }
  return {lay.col[static_cast<std::size_t>(i - 1)][a * alg_->component(j).dim() + b], sign};
}

void BsAlgebra::add_pairs(const Layout& lay, const JordanElement& x, const JordanElement& y, const Rational& scale,
                          DenseVec& out) const {
  for (std::size_t a = 0; a < x.coords.size(); ++a) {
    if (sgn(x.coords[a]) == 0) continue;
    for (std::size_t b = 0; b < y.coords.size(); ++b) {
      if (sgn(y.coords[b]) == 0) continue;
      const auto [col, sign] = canonical(lay, x.degree, a, y.degree, b);
      if (col == npos) continue;
      const Rational c = scale * x.coords[a] * y.coords[b];
      if (sign > 0)
        out[col] += c;
      else
        out[col] -= c;
    }
  }
}

BsAlgebra::BsAlgebra(const GradedJordanAlgebra& alg, int max_degree) : alg_(&alg) {
  if (max_degree < 1) throw std::invalid_argument("build_Bs: degree must be >= 1");
  if (alg.max_degree() < max_degree - 1)
    throw std::invalid_argument("build_Bs: algebra known through degree " + std::to_string(alg.max_degree()) +
                                ", need " + std::to_string(max_degree - 1));
  components_.push_back(BsComponent{1, {}, {}, {}, {}, 0});
  layouts_.emplace_back();
  using Ref = std::pair<int, std::size_t>;
  for (int n = 2; n <= max_degree; ++n) {
    Layout lay = layout_for(n);
    RowEchelon ech(lay.width);
    std::vector<Ref> refs;
    for (int d = 1; d <= n - 2; ++d)
      for (std::size_t i = 0; i < alg.component(d).dim(); ++i) refs.emplace_back(d, i);
    for (const auto& x : refs)
      for (const auto& y : refs)
        for (const auto& z : refs) {
          if (x.first + y.first + z.first != n) continue;
          const auto key = std::tie(x, y, z);
          if (std::tie(y, z, x) < key || std::tie(z, x, y) < key) continue;
          if (ech.full()) break;
          const std::array<Ref, 3> t{x, y, z};
          DenseVec rel(lay.width);
          for (int rot = 0; rot < 3; ++rot) {
            const Ref p = t[static_cast<std::size_t>(rot)];
            const Ref q = t[static_cast<std::size_t>((rot + 1) % 3)];
            const Ref r = t[static_cast<std::size_t>((rot + 2) % 3)];
            const int s = koszul_sign(alg.component(p.first).parity[p.second], alg.component(r.first).parity[r.second]);
            const JordanElement pq = alg.multiply(alg.basis(p.first, p.second), alg.basis(q.first, q.second));
            add_pairs(lay, pq, alg.basis(r.first, r.second), Rational(s), rel);
          }
          if (!is_zero(rel)) ech.insert(std::move(rel));
        }
    BsComponent c;
    c.degree = n;
    c.relation_rank = ech.rank();
    for (std::size_t col : ech.free_columns()) {
      c.parity.push_back(lay.col_parity[col]);
      c.representative.push_back(lay.col_pair[col]);
      const auto [i, a, b] = lay.col_pair[col];
      c.name.push_back("{" + wrap(alg.component(i).name[a], i) + "⊗" + wrap(alg.component(n - i).name[b], n - i) +
                       "}");
    }
    c.projection = ech.quotient_images();
    components_.push_back(std::move(c));
    layouts_.push_back(std::move(lay));
  }
}

SparseVec BsAlgebra::pair_class(int i, std::size_t a, int j, std::size_t b) const {
  const int n = i + j;
  if (n > max_degree()) throw std::out_of_range("pair_class: degree beyond construction");
  const auto [col, sign] = canonical(layouts_[static_cast<std::size_t>(n - 1)], i, a, j, b);
  if (col == npos) return {};
  SparseVec out = component(n).projection[col];
  if (sign < 0)
    for (auto& e : out) e.second = -e.second;
  return out;
}

DenseVec BsAlgebra::class_of(const JordanElement& x, const JordanElement& y) const {
  DenseVec out(component(x.degree + y.degree).dim());
  for (std::size_t a = 0; a < x.coords.size(); ++a) {
    if (sgn(x.coords[a]) == 0) continue;
    for (std::size_t b = 0; b < y.coords.size(); ++b) {
      if (sgn(y.coords[b]) == 0) continue;
      axpy(out, x.coords[a] * y.coords[b], pair_class(x.degree, a, y.degree, b));
    }
  }
  return out;
}

BsAlgebra build_Bs(const GradedJordanAlgebra& alg, int n) { return BsAlgebra(alg, n); }

JordanElement apply_partial_derivation(const GradedJordanAlgebra& alg, const JordanElement& x,
                                       const JordanElement& y, const JordanElement& z) {
  const int s = koszul_sign(parity_of(alg, x), parity_of(alg, y));
  JordanElement out = alg.multiply(x, alg.multiply(y, z));
  const JordanElement second = alg.multiply(y, alg.multiply(x, z));
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= s * second.coords[i];
  return out;
}

std::vector<DenseVec> partial_derivation_matrix(const GradedJordanAlgebra& alg, const JordanElement& x,
                                                const JordanElement& y, int m) {
  if (m < 1 || x.degree + y.degree + m > alg.max_degree())
    throw std::out_of_range("partial_derivation_matrix: degree overflow");
  std::vector<DenseVec> images;
  for (std::size_t k = 0; k < alg.component(m).dim(); ++k)
    images.push_back(apply_partial_derivation(alg, x, y, alg.basis(m, k)).coords);
  return images;
}

GDim inner_rank_diagnostic(const BsAlgebra& bs, int n, int horizon) {
  const auto& alg = bs.jordan();
  if (n < 2 || n > bs.max_degree()) throw std::out_of_range("inner_rank_diagnostic: degree outside B(J)");
  if (horizon <= n || horizon > alg.max_degree())
    throw std::out_of_range("inner_rank_diagnostic: horizon must satisfy n < horizon <= algebra degree");
  const auto& comp = bs.component(n);
  std::array<std::vector<SparseVec>, 2> rows;
  std::size_t width = 0;
  for (int m = 1; m <= horizon - n; ++m) width += alg.component(m).dim() * alg.component(m + n).dim();
  for (std::size_t k = 0; k < comp.dim(); ++k) {
    const auto [i, a, b] = comp.representative[k];
    const JordanElement x = alg.basis(i, a), y = alg.basis(n - i, b);
    DenseVec flat;
    flat.reserve(width);
    for (int m = 1; m <= horizon - n; ++m)
      for (auto& img : partial_derivation_matrix(alg, x, y, m)) flat.insert(flat.end(), img.begin(), img.end());
    rows[static_cast<std::size_t>(parity_bit(comp.parity[k]))].push_back(to_sparse(flat));
  }
  return GDim(static_cast<long>(rank_of(rows[0], width)), static_cast<long>(rank_of(rows[1], width)));
}

std::size_t TagAlgebra::index_of(Kind kind, int degree, std::size_t index) const {
  if (degree < 1 || degree > max_degree_) throw std::out_of_range("TagAlgebra::index_of: degree");
  const std::size_t lo = offsets_[static_cast<std::size_t>(degree - 1)];
  const std::size_t hi = offsets_[static_cast<std::size_t>(degree)];
  for (std::size_t u = lo; u < hi; ++u)
    if (basis_[u].kind == kind && basis_[u].index == index) return u;
  throw std::out_of_range("TagAlgebra::index_of: no such element");
}

SparseVec TagAlgebra::bracket(const SparseVec& u, const SparseVec& v) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) add_scaled(acc, a * b, bracket(i, j));
  return from_map(acc);
}

TagSelfTest TagAlgebra::self_test() const {
  TagSelfTest res;
  const std::size_t n = basis_.size();
  auto describe = [&](std::initializer_list<std::size_t> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i : idx) {
      os << (first ? "" : ", ") << basis_[i].name;
      first = false;
    }
    os << ")";
    return os.str();
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      ++res.anticommutativity.checked;
      SparseVec neg = bracket(v, u);
      const int s = -koszul_sign(basis_[u].parity, basis_[v].parity);
      if (s < 0)
        for (auto& e : neg) e.second = -e.second;
      if (neg != bracket(u, v) && res.anticommutativity.failures++ == 0)
        res.anticommutativity.first_failure = describe({u, v});
    }
  // super antisymmetry lets the Jacobiator be checked on u <= v <= w only
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      if (basis_[u].degree + basis_[v].degree >= max_degree_) break;
      for (std::size_t w = v; w < n; ++w) {
        if (basis_[u].degree + basis_[v].degree + basis_[w].degree > max_degree_) break;
        ++res.jacobi.checked;
        const Parity pu = basis_[u].parity, pv = basis_[v].parity, pw = basis_[w].parity;
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, c] : bracket(v, w)) add_scaled(acc, c * koszul_sign(pu, pw), bracket(u, k));
        for (const auto& [k, c] : bracket(w, u)) add_scaled(acc, c * koszul_sign(pv, pu), bracket(v, k));
        for (const auto& [k, c] : bracket(u, v)) add_scaled(acc, c * koszul_sign(pw, pv), bracket(w, k));
        if (!acc.empty() && res.jacobi.failures++ == 0) res.jacobi.first_failure = describe({u, v, w});
      }
    }
  return res;
}

TagAlgebra tag_from_table(int max_degree, std::vector<TagBasisElement> basis, std::vector<SparseVec> table) {
  if (table.size() != basis.size() * basis.size()) throw std::invalid_argument("tag_from_table: table size");
  TagAlgebra t;
  t.max_degree_ = max_degree;
  t.basis_ = std::move(basis);
  t.table_ = std::move(table);
  t.offsets_.assign(static_cast<std::size_t>(max_degree) + 1, t.basis_.size());
  for (std::size_t u = t.basis_.size(); u-- > 0;) {
    const int d = t.basis_[u].degree;
    if (d < 1 || d > max_degree) throw std::invalid_argument("tag_from_table: degree out of range");
    t.offsets_[static_cast<std::size_t>(d - 1)] = u;
  }
  for (std::size_t d = max_degree; d-- > 0;) t.offsets_[d] = std::min(t.offsets_[d], t.offsets_[d + 1]);
  return t;
}

TagAlgebra build_tag(const BsAlgebra& bs, int n, bool self_test) {
  const auto& alg = bs.jordan();
  if (n < 1 || bs.max_degree() < n || alg.max_degree() < n)
    throw std::invalid_argument("build_tag: B(J) and J must be known through degree " + std::to_string(n));

  std::vector<TagBasisElement> basis;
  for (int d = 1; d <= n; ++d) {
    const auto& jc = alg.component(d);
    for (Kind k : {Kind::E, Kind::H, Kind::F})
      for (std::size_t i = 0; i < jc.dim(); ++i)
        basis.push_back({k, d, i, k == Kind::E ? 2 : (k == Kind::H ? 0 : -2), jc.parity[i],
                         std::string(sl2_name(k)) + "⊗" + wrap(jc.name[i], d)});
    const auto& bc = bs.component(d);
    for (std::size_t i = 0; i < bc.dim(); ++i) basis.push_back({Kind::B, d, i, 0, bc.parity[i], bc.name[i]});
  }
  const std::size_t size = basis.size();
  TagAlgebra t = tag_from_table(n, basis, std::vector<SparseVec>(size * size));

  auto sl2_tensor = [&](Kind k, const JordanElement& x) {
    SparseVec out;
    for (std::size_t i = 0; i < x.coords.size(); ++i)
      if (sgn(x.coords[i]) != 0) out.emplace_back(t.index_of(k, x.degree, i), x.coords[i]);
    return out;
  };
  auto bs_vector = [&](int d, const SparseVec& coords) {
    SparseVec out;
    for (const auto& [i, c] : coords) out.emplace_back(t.index_of(Kind::B, d, i), c);
    return out;
  };
  auto rep = [&](const TagBasisElement& b) {
    const auto [i, a, c] = bs.component(b.degree).representative[b.index];
    return std::pair{alg.basis(i, a), alg.basis(b.degree - i, c)};
  };
  // [B, a (x) z] = a (x) d_{x,y}(z)
  auto b_on_sl2 = [&](const TagBasisElement& b, const TagBasisElement& s) {
    const auto [x, y] = rep(b);
    return sl2_tensor(s.kind, apply_partial_derivation(alg, x, y, alg.basis(s.degree, s.index)));
  };

  for (std::size_t u = 0; u < size; ++u)
    for (std::size_t v = 0; v < size; ++v) {
      const auto& bu = t.basis_[u];
      const auto& bv = t.basis_[v];
      const int d = bu.degree + bv.degree;
      if (d > n) continue;
      std::map<std::size_t, Rational> acc;
      if (bu.kind != Kind::B && bv.kind != Kind::B) {
        const int hk = half_killing(bu.kind, bv.kind);
        if (hk != 0) add_scaled(acc, Rational(hk), bs_vector(d, bs.pair_class(bu.degree, bu.index, bv.degree, bv.index)));
        const Sl2Bracket br = sl2_bracket(bu.kind, bv.kind);
        if (br.coeff != 0) {
          JordanElement xy = alg.zero(d);
          axpy(xy.coords, Rational(1), alg.basis_product(bu.degree, bu.index, bv.degree, bv.index));
          add_scaled(acc, Rational(br.coeff), sl2_tensor(br.result, xy));
        }
      } else if (bu.kind == Kind::B && bv.kind != Kind::B) {
        add_scaled(acc, Rational(1), b_on_sl2(bu, bv));
      } else if (bu.kind != Kind::B && bv.kind == Kind::B) {
        add_scaled(acc, Rational(-koszul_sign(bu.parity, bv.parity)), b_on_sl2(bv, bu));
      } else {
        const auto [x, y] = rep(bu);
        const auto [z, w] = rep(bv);
        const int s = koszul_sign(parity_of(alg, x) + parity_of(alg, y), parity_of(alg, z));
        const DenseVec first = bs.class_of(apply_partial_derivation(alg, x, y, z), w);
        const DenseVec second = bs.class_of(z, apply_partial_derivation(alg, x, y, w));
        add_scaled(acc, Rational(1), bs_vector(d, to_sparse(first)));
        add_scaled(acc, Rational(s), bs_vector(d, to_sparse(second)));
      }
      t.table_[u * size + v] = from_map(acc);
    }

  if (self_test) {
    const TagSelfTest st = t.self_test();
    if (!st.anticommutativity.ok())
      throw InvariantViolation("TAG anticommutativity fails at " + st.anticommutativity.first_failure);
    if (!st.jacobi.ok()) throw InvariantViolation("TAG Jacobi identity fails at " + st.jacobi.first_failure);
  }
  return t;
}

}  // namespace fjsa
