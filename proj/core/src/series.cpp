#include <fjsa/series.hpp>

namespace fjsa {

TZSeries lift(const SuperSeries& s) {
  TZSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) out.set(n, RLaurent(s[n]));
  return out;
}

SuperSeries residue_series(const TZSeries& f) {
  SuperSeries out(f.order());
  for (int n = 0; n <= f.order(); ++n) out.set(n, residue(f[n]));
  return out;
}

// Res((t^{-1} - 1) a) = a_0 - a_{-1}
SuperSeries extract_L0(const TZSeries& f) {
  SuperSeries out(f.order());
  for (int n = 0; n <= f.order(); ++n) out.set(n, f[n].coeff(0) - f[n].coeff(-1));
  return out;
}

// Res((1 - t) a) = a_{-1} - a_{-2}
SuperSeries extract_L2(const TZSeries& f) {
  SuperSeries out(f.order());
  for (int n = 0; n <= f.order(); ++n) out.set(n, f[n].coeff(-1) - f[n].coeff(-2));
  return out;
}

int vanishing_order(const SuperSeries& s) { return s.valuation() - 1; }

}  // namespace fjsa
