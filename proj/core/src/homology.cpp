#include <fjsa/homology.hpp>

#include <fjsa/lambda_ops.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fjsa {

namespace {

struct MonomialHash {
  std::size_t operator()(const ChainMonomial& m) const {
    std::size_t h = m.size();
    for (auto x : m) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using BlockIndex = std::unordered_map<ChainMonomial, std::size_t, MonomialHash>;


class Builder {
 public:
  Builder(const TagAlgebra& tag, int r_max, int d_max, const ChainOptions& opts)
      : tag_(tag), top_(r_max + 1), d_max_(d_max), budget_(opts.monomial_budget), super_(opts.super_signs) {
    for (Parity p : {Parity::Even, Parity::Odd})
      for (std::size_t i = 0; i < tag.size(); ++i)
        if (tag.element(i).parity == p) order_.push_back(static_cast<std::uint32_t>(i));
    key_.resize(tag.size());
    for (std::size_t k = 0; k < order_.size(); ++k) key_[order_[k]] = k;
  }

  std::map<BlockKey, ChainBlock> run(std::size_t& d_squared_checks) {
    ChainMonomial word;
    enumerate(0, word, 0, 0, Parity::Even);
    for (auto& [key, block] : blocks_)
      if (key.r >= 2) fill_boundary(key, block);
    for (auto& [key, block] : blocks_) {
      if (key.r < 2) continue;
      const ChainBlock* target = find({key.r - 1, key.degree, key.weight, key.parity});
      block.rank = target ? rank_of(block.boundary, target->basis.size()) : 0;
    }
    d_squared_checks = check_d_squared();
    return std::move(blocks_);
  }

 private:
  const ChainBlock* find(const BlockKey& k) const {
    const auto it = blocks_.find(k);
    return it == blocks_.end() ? nullptr : &it->second;
  }

  void enumerate(std::size_t start, ChainMonomial& word, int degree, int weight, Parity parity) {
    const BlockKey key{static_cast<int>(word.size()), degree, weight, parity};
    ChainBlock& b = blocks_[key];
    index_[key].emplace(word, b.basis.size());
    b.basis.push_back(word);
    if (++count_ > budget_) throw ResourceBudgetExceeded("chain complex exceeds monomial budget");
    if (static_cast<int>(word.size()) == top_) return;
    for (std::size_t k = start; k < order_.size(); ++k) {
      const TagBasisElement& e = tag_.element(order_[k]);
      if (degree + e.degree > d_max_) continue;
      word.push_back(order_[k]);
      enumerate(e.parity == Parity::Odd ? k : k + 1, word, degree + e.degree, weight + e.weight, parity + e.parity);
      word.pop_back();
    }
  }

  Parity par(std::uint32_t i) const { return tag_.element(i).parity; }
  // sign of swapping adjacent a, b in the super-wedge
  int swap_sign(Parity a, Parity b) const { return (super_ && a == Parity::Odd && b == Parity::Odd) ? 1 : -1; }

  void fill_boundary(const BlockKey& key, ChainBlock& block) {
    const BlockKey tkey{key.r - 1, key.degree, key.weight, key.parity};
    const auto tit = index_.find(tkey);
    const BlockIndex* target = tit == index_.end() ? nullptr : &tit->second;
    block.boundary.resize(block.basis.size());
    ChainMonomial rest;
    for (std::size_t row = 0; row < block.basis.size(); ++row) {
      const ChainMonomial& m = block.basis[row];
      std::map<std::size_t, Rational> acc;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
          const SparseVec& br = tag_.bracket(m[i], m[j]);
          if (br.empty()) continue;
          int s = 1;
          for (std::size_t k = 0; k < i; ++k) s *= swap_sign(par(m[i]), par(m[k]));
          for (std::size_t k = 0; k < j; ++k)
            if (k != i) s *= swap_sign(par(m[j]), par(m[k]));
          rest.clear();
          for (std::size_t k = 0; k < m.size(); ++k)
            if (k != i && k != j) rest.push_back(m[k]);
          for (const auto& [t, c] : br) {
            int sign = s;
            std::size_t pos = 0;
            while (pos < rest.size() && key_[rest[pos]] < key_[t]) sign *= swap_sign(par(t), par(rest[pos++]));
            if (pos < rest.size() && rest[pos] == t && par(t) == Parity::Even) continue;
            ChainMonomial out(rest);
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<std::uint32_t>(t));
            const auto it = target ? target->find(out) : BlockIndex::const_iterator();
            if (!target || it == target->end()) throw InvariantViolation("boundary leaves its block at " + key.str());
            acc[it->second] += sign * c;
          }
        }
      for (auto& [col, c] : acc)
        if (sgn(c) != 0) block.boundary[row].emplace_back(col, std::move(c));
    }
  }

  std::size_t check_d_squared() const {
    std::size_t checks = 0;
    for (const auto& [key, block] : blocks_) {
      if (key.r < 2) continue;
      const ChainBlock* mid = find({key.r - 1, key.degree, key.weight, key.parity});
      for (std::size_t row = 0; row < block.basis.size(); ++row) {
        ++checks;
        if (!mid || mid->boundary.empty()) continue;
        std::map<std::size_t, Rational> acc;
        for (const auto& [col, c] : block.boundary[row])
          for (const auto& [col2, c2] : mid->boundary[col]) acc[col2] += c * c2;
        for (const auto& [col2, v] : acc)
          if (sgn(v) != 0) {
            std::ostringstream os;
            os << "d^2 != 0 at " << key.str() << ", monomial " << row;
            throw InvariantViolation(os.str());
          }
      }
    }
    return checks;
  }

  const TagAlgebra& tag_;
  int top_;
  int d_max_;
  std::size_t budget_;
  bool super_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> order_;
  std::vector<std::size_t> key_;
  std::map<BlockKey, ChainBlock> blocks_;
  std::map<BlockKey, BlockIndex> index_;
};

RLaurent weight_term(const GDim& g, int weight) { return RLaurent::monomial(g, weight / 2); }

}  // namespace

std::string BlockKey::str() const {
  std::ostringstream os;
  os << "r=" << r << " degree=" << degree << " weight=" << weight << " parity=" << (parity == Parity::Odd ? "odd" : "even");
  return os.str();
}

const ChainBlock* ChainComplex::block(const BlockKey& key) const {
  const auto it = blocks_.find(key);
  return it == blocks_.end() ? nullptr : &it->second;
}

std::size_t ChainComplex::dim(const BlockKey& key) const {
  const ChainBlock* b = block(key);
  return b ? b->basis.size() : 0;
}

std::string ChainComplex::monomial_name(const ChainMonomial& m) const {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? " ∧ " : "") + tag_->element(m[i]).name;
  return out;
}

ChainComplex build_chain_complex(const TagAlgebra& tag, int r_max, int d_max, ChainOptions opts) {
  if (r_max < 0 || d_max < 0) throw std::invalid_argument("r_max and d_max must be >= 0");
  if (tag.max_degree() < d_max) throw std::invalid_argument("TAG truncated below d_max");
  ChainComplex cx;
  cx.tag_ = &tag;
  cx.r_max_ = r_max;
  cx.d_max_ = d_max;
  cx.blocks_ = Builder(tag, r_max, d_max, opts).run(cx.d_squared_checks_);
  return cx;
}

std::map<int, GDim> homology_weights(const ChainComplex& cx, int r, int d) {
  if (r < 0 || r > cx.r_max()) throw std::out_of_range("homological degree outside the built range");
  std::map<int, GDim> out;
  for (const auto& [key, block] : cx.blocks()) {
    if (key.r != r || key.degree != d) continue;
    const ChainBlock* above = cx.block({r + 1, d, key.weight, key.parity});
    const long h = static_cast<long>(block.basis.size() - block.rank - (above ? above->rank : 0));
    if (h != 0) out[key.weight] += key.parity == Parity::Even ? GDim(h, 0) : GDim(0, h);
  }
  return out;
}

Multiplicities isotypic_multiplicities(const std::map<int, GDim>& weights) {
  Multiplicities m;
  auto dim = [&](int w) {
    const auto it = weights.find(w);
    return it == weights.end() ? GDim() : it->second;
  };
  int top = 0;
  for (const auto& [w, g] : weights) {
    if (w % 2 != 0) m.odd_weights += g;
    if (dim(-w) != g) m.symmetric = false;
    top = std::max(top, w);
  }
  for (int w = 0; w <= top; w += 2) {
    const GDim g = dim(w) - dim(w + 2);
    if (sgn(g.even) < 0 || sgn(g.odd) < 0) m.negative = true;
    m.mult.push_back(g);
  }
  while (!m.mult.empty() && m.mult.back().is_zero()) m.mult.pop_back();
  return m;
}

bool HomologyBlock::invariants_vanish() const {
  auto mult = [&](std::size_t m) { return m < multiplicities.mult.size() ? multiplicities.mult[m] : GDim(); };
  return mult(0).is_zero() && mult(1).is_zero();
}

const HomologyBlock& HomologyReport::at(int r, int degree) const {
  if (r < 0 || r > r_max || degree < 0 || degree > d_max) throw std::out_of_range("homology block outside report");
  return blocks.at(static_cast<std::size_t>(r * (d_max + 1) + degree));
}

HomologyReport compute_homology(const TagAlgebra& tag, long d1, long d2, int r_max, int d_max, ChainOptions opts) {
  const ChainComplex cx = build_chain_complex(tag, r_max, d_max, opts);
  HomologyReport rep;
  rep.d1 = d1;
  rep.d2 = d2;
  rep.r_max = r_max;
  rep.d_max = d_max;
  rep.d_squared_checks = cx.d_squared_checks();

  for (int r = 0; r <= r_max; ++r)
    for (int d = 0; d <= d_max; ++d) {
      HomologyBlock b;
      b.r = r;
      b.degree = d;
      b.weights = homology_weights(cx, r, d);
      b.multiplicities = isotypic_multiplicities(b.weights);
      for (const auto& [w, g] : b.weights) b.total += g;
      rep.blocks.push_back(std::move(b));
    }

  const int order = std::max(d_max, 1);
  SuperSeries a(order), bser(order);
  for (const auto& e : tag.basis()) {
    if (e.degree > order) continue;
    if (e.kind == TagBasisElement::Kind::H) a.add_to(e.degree, GDim::of_parity(e.parity));
    if (e.kind == TagBasisElement::Kind::B) bser.add_to(e.degree, GDim::of_parity(e.parity));
  }
  const TZSeries phi = build_Phi(DimSeriesPair(a, bser));

  for (int d = 0; d <= d_max; ++d) {
    EulerCheck ec;
    ec.degree = d;
    ec.lambda = phi.coeff(d);
    ec.chains_complete = cx.chain_top() >= d;
    ec.homology_complete = r_max >= d;
    for (const auto& [key, block] : cx.blocks()) {
      if (key.degree != d) continue;
      const GDim g = GDim::of_parity(key.parity) * BigInt(static_cast<long>(block.basis.size()));
      ec.chains += weight_term(key.r % 2 ? -g : g, key.weight);
    }
    for (int r = 0; r <= r_max; ++r)
      for (const auto& [w, g] : rep.at(r, d).weights) ec.homology += weight_term(r % 2 ? -g : g, w);
    rep.euler.push_back(std::move(ec));
  }
  return rep;
}

HomologyChecks check_homology(const HomologyReport& rep) {
  HomologyChecks c;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    c.failures.push_back(what);
  };
  const GDim j1(rep.d1, rep.d2);
  for (const auto& b : rep.blocks) {
    const std::string at = "H_" + std::to_string(b.r) + " degree " + std::to_string(b.degree);
    if (!b.multiplicities.ok()) fail(c.weight_strings, at + ": not a weight string");
    if (b.r == 0) {
      const std::map<int, GDim> expect = b.degree == 0 ? std::map<int, GDim>{{0, GDim::one()}} : std::map<int, GDim>{};
      if (b.weights != expect) fail(c.h0_trivial, at);
    } else if (b.r == 1) {
      const std::map<int, GDim> expect =
          b.degree == 1 ? std::map<int, GDim>{{-2, j1}, {0, j1}, {2, j1}} : std::map<int, GDim>{};
      if (b.weights != expect) fail(c.h1_generators, at);
    } else if (b.r == 2) {
      for (std::size_t m = 0; m < b.multiplicities.mult.size(); ++m)
        if (m != 2 && !b.multiplicities.mult[m].is_zero()) {
          fail(c.h2_l4_isotypic, at + ": L(" + std::to_string(2 * m) + ") present");
          break;
        }
    }
  }
  for (const auto& e : rep.euler)
    if (!e.ok()) fail(c.euler, "Euler characteristic at degree " + std::to_string(e.degree));
  return c;
}

std::vector<int> invariant_violations(const HomologyReport& rep, int r) {
  std::vector<int> out;
  for (int d = 0; d <= rep.d_max; ++d)
    if (!rep.at(r, d).invariants_vanish()) out.push_back(d);
  return out;
}

HomologyReport compute_homology(long d1, long d2, int r_max, int d_max) {
  if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
  const GradedJordanAlgebra alg = build_free_jordan(d1, d2, d_max);
  const BsAlgebra bs = build_Bs(alg, d_max);
  const TagAlgebra tag = build_tag(bs, d_max);
  return compute_homology(tag, d1, d2, r_max, d_max);
}

}  // namespace fjsa
