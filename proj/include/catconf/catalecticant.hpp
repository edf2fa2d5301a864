#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catconf/poly.hpp"
#include "catconf/types.hpp"

namespace catconf {

// Stacked matrix of all order-h partial derivatives of the forms in f.
// Requires equal degrees d and 1 <= h <= d-1. Column c corresponds to the
// c-th exponent tuple of monomials(n, h) read as a derivative operator;
// derivatives keep their integer factors. Block row j holds the coefficient
// vector (monomials(n, d-h) order) of that derivative of f_j, so the shape
// is r*binom(d-h+n, n) x binom(h+n, n).
CMat build_catalecticant(const PolyVector& f, int h);

// Mixed-degree variant: same derivative order h applied to every form,
// blocks stacked with per-form row counts binom(a_j-h+n, n).
// Requires 1 <= h <= min_j a_j.
CMat build_catalecticant_mixed(const PolyVector& f, int h);

struct SvdRank {
  int rank = 0;
  std::vector<double> sigma;   // descending singular values
  double gap = 0.0;            // sigma[rank]/sigma[rank-1]; 0 when undefined
  CMat image_basis;            // first `rank` left singular vectors, orthonormal
};

// rank = number of singular values with sigma_i >= tol * sigma_0.
SvdRank numerical_rank(const CMat& m, double tol = 1e-8);

// Norm of the component of point/|point| orthogonal to the span of the
// orthonormal columns of basis. Zero iff point lies in the span.
double membership_residual(const CVec& point, const CMat& basis);

// Membership generator for a decomposition summand against C_f^h: the
// concatenation over the r forms of weight^j times the coefficient vector of
// ell^(d-h), ell = x0 + point[0] x1 + ... For d-h = 1 the block is
// weight^j * (1, point...).
CVec membership_point(const std::vector<Complex>& point, const std::vector<Complex>& weights,
                      int d_minus_h);

// Mixed-degree variant: per-form blocks of degree degrees[j] - h.
CVec membership_point_mixed(const std::vector<Complex>& point,
                            const std::vector<Complex>& weights,
                            const std::vector<int>& degrees, int h);

// Convenience for the d-h = 1 case: vector of length (n+1)*r.
struct Rank1Point {
  std::vector<Complex> point;
  std::vector<Complex> weights;
  CVec vector;
};

Rank1Point rank1_point(const std::vector<Complex>& point, const std::vector<Complex>& weights);

struct RankReport {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  int rank = 0;
  std::vector<double> sigma;
  double gap = 0.0;
  std::vector<double> memberships;  // empty when no generating decomposition is known
};

RankReport rank_report(const CMat& m, double tol,
                       const std::vector<CVec>& generator_points = {});

// Seeded demonstration instance: a single plane octic built from 14 random
// summands. Reports the rank of its order-4 derivative matrix (15 x 15,
// expected rank 14) and the membership residuals of the 14 generating points.
RankReport octic_hyperplane_check(std::uint64_t seed, double tol = 1e-8);

// Seeded rank instances: k random summands for r ternary forms of one
// degree, reported against the order-h derivative matrix together with the
// membership residuals of the generating points.
struct RankPreset {
  std::string name;
  int r;
  int degree;
  int k;
  int h;
};

const std::vector<RankPreset>& rank_presets();  // cubics333, quartics4444,
                                                // sextic-rank9, octic-rank14
const RankPreset& rank_preset(const std::string& name);
RankReport rank_preset_report(const std::string& name, std::uint64_t seed, double tol = 1e-8);

}  // namespace catconf
