#include "catconf/catalecticant.hpp"

#include <algorithm>
#include <stdexcept>

#include "catconf/rng.hpp"

namespace catconf {

namespace {

Poly nth_derivative(const Poly& p, const Exponent& alpha) {
  Poly cur = p;
  for (int var = 0; var < static_cast<int>(alpha.size()); ++var)
    for (int k = 0; k < alpha[var]; ++k) cur = derivative(cur, var);
  return cur;
}

CMat stacked_derivative_matrix(const PolyVector& f, int h) {
  const int n = f.n;
  const MonomialOrder cols = monomials(n, h);
  std::int64_t rows = 0;
  for (const auto& form : f.forms) rows += binomial(form.degree - h + n, n);
  CMat m(rows, cols.size());
  for (int c = 0; c < cols.size(); ++c) {
    std::int64_t row0 = 0;
    for (const auto& form : f.forms) {
      const Poly d = nth_derivative(form, cols.exponent(c));
      for (size_t i = 0; i < d.coeffs.size(); ++i) m(row0 + i, c) = d.coeffs[i];
      row0 += static_cast<std::int64_t>(d.coeffs.size());
    }
  }
  return m;
}

}  // namespace

CMat build_catalecticant(const PolyVector& f, int h) {
  if (f.forms.empty()) throw std::invalid_argument("build_catalecticant: empty form vector");
  const int d = f.forms.front().degree;
  for (const auto& form : f.forms)
    if (form.degree != d)
      throw std::invalid_argument(
          "build_catalecticant: mixed degrees; use build_catalecticant_mixed");
  if (h < 1 || h > d - 1)
    throw std::invalid_argument("build_catalecticant: need 1 <= h <= d-1");
  return stacked_derivative_matrix(f, h);
}

CMat build_catalecticant_mixed(const PolyVector& f, int h) {
  if (f.forms.empty()) throw std::invalid_argument("build_catalecticant_mixed: empty form vector");
  int dmin = f.forms.front().degree;
  for (const auto& form : f.forms) dmin = std::min(dmin, form.degree);
  if (h < 1 || h > dmin)
    throw std::invalid_argument("build_catalecticant_mixed: need 1 <= h <= min degree");
  return stacked_derivative_matrix(f, h);
}

SvdRank numerical_rank(const CMat& m, double tol) {
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU);
  SvdRank out;
  const auto& s = svd.singularValues();
  out.sigma.assign(s.data(), s.data() + s.size());
  if (s.size() == 0 || s[0] <= 0.0) {
    out.rank = 0;
    out.image_basis = CMat(m.rows(), 0);
    return out;
  }
  int rank = 0;
  while (rank < s.size() && s[rank] >= tol * s[0]) ++rank;
  out.rank = rank;
  out.gap = (rank > 0 && rank < s.size()) ? s[rank] / s[rank - 1] : 0.0;
  out.image_basis = svd.matrixU().leftCols(rank);
  return out;
}

double membership_residual(const CVec& point, const CMat& basis) {
  const double norm = point.norm();
  if (norm == 0.0) throw std::invalid_argument("membership_residual: zero point");
  const CVec unit = point / norm;
  const CVec residual = unit - basis * (basis.adjoint() * unit);
  return residual.norm();
}

CVec membership_point(const std::vector<Complex>& point, const std::vector<Complex>& weights,
                      int d_minus_h) {
  std::vector<Complex> lin(point.size() + 1);
  lin[0] = Complex(1.0, 0.0);
  std::copy(point.begin(), point.end(), lin.begin() + 1);
  const CVec block = linear_power_coeffs(lin, d_minus_h);
  CVec v(static_cast<Eigen::Index>(weights.size()) * block.size());
  for (size_t j = 0; j < weights.size(); ++j)
    v.segment(static_cast<Eigen::Index>(j) * block.size(), block.size()) = weights[j] * block;
  return v;
}

CVec membership_point_mixed(const std::vector<Complex>& point,
                            const std::vector<Complex>& weights,
                            const std::vector<int>& degrees, int h) {
  if (weights.size() != degrees.size())
    throw std::invalid_argument("membership_point_mixed: weights/degrees length mismatch");
  std::vector<Complex> lin(point.size() + 1);
  lin[0] = Complex(1.0, 0.0);
  std::copy(point.begin(), point.end(), lin.begin() + 1);
  std::vector<CVec> blocks;
  Eigen::Index total = 0;
  for (size_t j = 0; j < degrees.size(); ++j) {
    // Block j of a matrix column carries the falling factorial of h
    // derivatives of a degree-a_j power. Uniform degrees share one factor,
    // which cancels in the normalized residual; mixed degrees do not.
    double falling = 1.0;
    for (int i = 0; i < h; ++i) falling *= static_cast<double>(degrees[j] - i);
    blocks.push_back(falling * weights[j] * linear_power_coeffs(lin, degrees[j] - h));
    total += blocks.back().size();
  }
  CVec v(total);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    v.segment(at, b.size()) = b;
    at += b.size();
  }
  return v;
}

Rank1Point rank1_point(const std::vector<Complex>& point, const std::vector<Complex>& weights) {
  return Rank1Point{point, weights, membership_point(point, weights, 1)};
}

RankReport rank_report(const CMat& m, double tol, const std::vector<CVec>& generator_points) {
  const SvdRank sr = numerical_rank(m, tol);
  RankReport rep;
  rep.rows = m.rows();
  rep.cols = m.cols();
  rep.rank = sr.rank;
  rep.sigma = sr.sigma;
  rep.gap = sr.gap;
  rep.memberships.reserve(generator_points.size());
  for (const auto& p : generator_points)
    rep.memberships.push_back(membership_residual(p, sr.image_basis));
  return rep;
}

namespace {

RankReport summand_instance_report(int r, int degree, int k, int h, std::uint64_t seed,
                                   double tol) {
  Rng rng(seed);
  std::vector<Summand> summands(k);
  for (auto& s : summands) {
    s.point = {rng.gaussian_complex(), rng.gaussian_complex()};
    s.weights.resize(r);
    for (auto& w : s.weights) w = rng.gaussian_complex();
  }
  const PolyVector f = waring_forward_eval(summands, 2, std::vector<int>(r, degree));
  const CMat m = build_catalecticant(f, h);
  std::vector<CVec> gens;
  gens.reserve(summands.size());
  for (const auto& s : summands)
    gens.push_back(membership_point(s.point, s.weights, degree - h));
  return rank_report(m, tol, gens);
}

}  // namespace

RankReport octic_hyperplane_check(std::uint64_t seed, double tol) {
  return summand_instance_report(1, 8, 14, 4, seed, tol);
}

const std::vector<RankPreset>& rank_presets() {
  static const std::vector<RankPreset> presets = {
      {"cubics333", 3, 3, 6, 2},
      {"quartics4444", 4, 4, 10, 3},
      {"sextic-rank9", 1, 6, 9, 3},
      {"octic-rank14", 1, 8, 14, 4},
  };
  return presets;
}

const RankPreset& rank_preset(const std::string& name) {
  for (const auto& p : rank_presets())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown rank preset: " + name);
}

RankReport rank_preset_report(const std::string& name, std::uint64_t seed, double tol) {
  const RankPreset& p = rank_preset(name);
  return summand_instance_report(p.r, p.degree, p.k, p.h, seed, tol);
}

}  // namespace catconf
