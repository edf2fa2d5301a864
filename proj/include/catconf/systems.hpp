#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "catconf/poly.hpp"
#include "catconf/rng.hpp"
#include "catconf/types.hpp"

namespace catconf {

// How a family moves through parameter space during continuation.
//   kLinear: path points are the parameters themselves; segments interpolate
//            them directly and the residual is affine in the parameters.
//   kPushforward: path points live in a latent solution space; the actual
//            parameters are their image under the forward map, which keeps
//            segments on the parameter locus where solutions exist. Beware
//            when the latent space coincides with the unknowns: x(t) = q(t)
//            then lifts every closed latent loop, so such loops fix the start
//            class and monodromy degenerates. No system here uses this mode.
enum class PathStrategy { kLinear, kPushforward };

struct StartPair {
  CVec path_point;
  CVec x;
};

// Square parameterized polynomial system F(x; theta) = 0 with x_dim
// equations. theta is a "path point": the parameter vector for kLinear
// systems, a latent vector for kPushforward ones.
class ParameterizedSystem {
 public:
  virtual ~ParameterizedSystem() = default;

  const std::string& name() const { return name_; }
  int x_dim() const { return x_dim_; }
  int path_dim() const { return path_dim_; }
  PathStrategy strategy() const { return strategy_; }
  int summand_count() const { return summand_count_; }
  int summand_size() const { return summand_size_; }

  virtual void residual(const CVec& x, const CVec& theta, CVec& out) const = 0;
  virtual void jacobian(const CVec& x, const CVec& theta, CMat& out) const = 0;
  // d/dt residual(x, theta(t)) along theta(t) = (1-t) theta0 + t theta1.
  virtual void path_dt(const CVec& x, const CVec& theta0, const CVec& theta1, double t,
                       CVec& out) const = 0;

  CVec residual(const CVec& x, const CVec& theta) const;
  CMat jacobian(const CVec& x, const CVec& theta) const;

  // Residual of the unreduced/unrandomized equations; identical to residual()
  // unless a system squares a rectangular residual internally.
  virtual CVec full_residual(const CVec& x, const CVec& theta) const;

  // Exact solution with matching path point, drawn from the generator
  // (complex Gaussian coordinates, parameters via the forward construction).
  virtual StartPair make_start(Rng& rng) const = 0;

  // Random path point for monodromy loop vertices.
  virtual CVec random_path_point(Rng& rng) const;

  // Contiguous blocks of x, one per decomposition summand; the unit dedup
  // works on these.
  std::vector<CVec> split_summands(const CVec& x) const;

 protected:
  ParameterizedSystem(std::string name, int x_dim, int path_dim, PathStrategy strategy,
                      int summand_count, int summand_size);

  std::string name_;
  int x_dim_;
  int path_dim_;
  PathStrategy strategy_;
  int summand_count_;
  int summand_size_;
};

// Coefficient image of a k-summand decomposition and its derivative: maps
// the stacked unknowns (per summand: n point coordinates, then r weights) to
// the concatenated coefficient vectors of sum_i w_i^j ell_i^(a_j).
class WaringCoefficientMap {
 public:
  WaringCoefficientMap(int n, std::vector<int> degrees, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int r() const { return r_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int domain_dim() const { return k_ * (n_ + r_); }
  int coeff_dim() const { return coeff_dim_; }

  void value(const CVec& x, CVec& out) const;
  void add_jacobian(const CVec& x, CMat& out) const;  // adds into a zeroed matrix

 private:
  struct Term {
    std::vector<int> exps;  // exponents of the n non-leading coordinates
    double factor;          // multinomial coefficient
  };

  int n_;
  std::vector<int> degrees_;
  int k_;
  int r_;
  int coeff_dim_;
  std::vector<std::vector<Term>> form_terms_;  // per form, one Term per coefficient
  std::vector<int> form_offsets_;              // start of each form in the coefficient vector
};

// Full simultaneous decomposition system for r forms of the given degrees in
// n+1 variables with k summands. Unknowns per summand: n point coordinates
// followed by r weights. Parameters: concatenated coefficient vectors of the
// forms. Residual: coefficients of sum_i w_i^j ell_i^(a_j) minus parameters.
// Throws std::invalid_argument unless k*(n+r) equals the total coefficient
// count (message reports both sides).
class WaringSystem final : public ParameterizedSystem {
 public:
  using ParameterizedSystem::jacobian;
  using ParameterizedSystem::residual;

  WaringSystem(int n, std::vector<int> degrees, int k);

  void residual(const CVec& x, const CVec& theta, CVec& out) const override;
  void jacobian(const CVec& x, const CVec& theta, CMat& out) const override;
  void path_dt(const CVec& x, const CVec& theta0, const CVec& theta1, double t,
               CVec& out) const override;
  StartPair make_start(Rng& rng) const override;

  // Parameter vector produced by a solution (the coefficient image).
  CVec forward(const CVec& x) const;

  int n() const { return map_.n(); }
  const std::vector<int>& degrees() const { return map_.degrees(); }

 private:
  WaringCoefficientMap map_;
};

std::unique_ptr<WaringSystem> build_waring_system(int n, const std::vector<int>& degrees, int k);

// Bidegree-(1,5) system for 10 summands g_i * h_i^5 after restriction to the
// biforms vanishing at two fixed points: a 2x21 coefficient matrix with the
// (s, y2^5) and (t, y1^5) entries dropped, leaving 40 equations in the 40
// unknowns v (per summand: h-coefficients v_{4i}, v_{4i+1} and
// g-coefficients v_{4i+2}, v_{4i+3}).
class ReducedQuarticSystem final : public ParameterizedSystem {
 public:
  using ParameterizedSystem::jacobian;
  using ParameterizedSystem::residual;

  ReducedQuarticSystem();

  void residual(const CVec& x, const CVec& theta, CVec& out) const override;
  void jacobian(const CVec& x, const CVec& theta, CMat& out) const override;
  void path_dt(const CVec& x, const CVec& theta0, const CVec& theta1, double t,
               CVec& out) const override;
  StartPair make_start(Rng& rng) const override;

  CVec forward(const CVec& x) const;

  // 2x21 coefficient matrix of sum_i (v_{4i+2}, v_{4i+3})^T (x) nu5(1, v_{4i}, v_{4i+1}).
  BiForm coefficient_matrix(const CVec& x) const;

  // Kept (row, column) positions, in parameter order.
  const std::vector<std::pair<int, int>>& kept_positions() const { return kept_; }

 private:
  std::vector<std::pair<int, int>> kept_;
  std::vector<std::pair<int, int>> col_exps_;  // per column: exponents of y1, y2
};

std::unique_ptr<ReducedQuarticSystem> build_reduced_quartic_system();

// Published exact start solution for the reduced system (40 coordinates).
const std::vector<Complex>& reduced_quartic_reference_start();
StartPair reduced_quartic_reference_pair();

// Decompositions of a plane sextic with 9 summands: 27 unknowns but 28
// coefficients, squared by a fixed random full-rank 27x28 matrix R drawn
// from the seed. Path points are the 28 sextic coefficients theta themselves
// and the tracked residual is R * (m(x) - theta), so the solution set over a
// generic theta is the whole pencil theta + c*ker(R) sliced by the rank-9
// hypersurface: the two decompositions of the base sextic plus extra classes
// decomposing nearby sextics on the kernel line. Loops in coefficient space
// permute all of them (the unknowns form an irreducible cover, unlike loops
// pulled back from latent space, which lift tautologically and permute
// nothing). full_residual returns the unrandomized 28-entry residual
// m(x) - theta, which is what separates the base decompositions (residual 0)
// from the kernel-line extras (residual a visible multiple of ker(R)).
class SexticRank9System final : public ParameterizedSystem {
 public:
  using ParameterizedSystem::jacobian;
  using ParameterizedSystem::residual;

  explicit SexticRank9System(std::uint64_t seed);

  void residual(const CVec& x, const CVec& theta, CVec& out) const override;
  void jacobian(const CVec& x, const CVec& theta, CMat& out) const override;
  void path_dt(const CVec& x, const CVec& theta0, const CVec& theta1, double t,
               CVec& out) const override;
  CVec full_residual(const CVec& x, const CVec& theta) const override;
  StartPair make_start(Rng& rng) const override;

  // Coefficient image of a latent vector (28 sextic coefficients).
  CVec forward(const CVec& q) const;
  const CMat& squaring_matrix() const { return squarer_; }

 private:
  WaringCoefficientMap map_;
  CMat squarer_;  // 27x28
};

std::unique_ptr<SexticRank9System> build_sextic_rank9_system(std::uint64_t seed);

// Zero-dimensional linear-section systems on the product of two projective
// planes, in the affine chart a = (1, a1, a2), b = (1, b1, b2).
//   kSegre6:   four bilinear forms; 6 solutions.
//   kC2Twelve: three bilinear forms plus one form of degree 3 in a and 1 in
//              b; 12 solutions.
// Parameters are the concatenated coefficient vectors of the forms.
enum class SliceKind { kSegre6, kC2Twelve };

class SliceSystem final : public ParameterizedSystem {
 public:
  using ParameterizedSystem::jacobian;
  using ParameterizedSystem::residual;

  SliceSystem(SliceKind kind, std::uint64_t seed);

  void residual(const CVec& x, const CVec& theta, CVec& out) const override;
  void jacobian(const CVec& x, const CVec& theta, CMat& out) const override;
  void path_dt(const CVec& x, const CVec& theta0, const CVec& theta1, double t,
               CVec& out) const override;
  StartPair make_start(Rng& rng) const override;

  SliceKind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

 private:
  // Residual is linear in the coefficient vector; evaluating with coefficient
  // differences also yields the path derivative.
  void eval_forms(const CVec& x, const CVec& coeffs, CVec& out) const;

  SliceKind kind_;
  std::uint64_t seed_;
  std::vector<std::pair<int, int>> cubic_exps_;  // exponents of a1, a2 per degree-3 monomial
};

std::unique_ptr<SliceSystem> build_slice_system(SliceKind kind, std::uint64_t seed);

// Count presets by name: london, london-mixed, quartics-full,
// quartics-reduced, sextic9, segre-slice-6, c2-slice-12.
// Throws std::invalid_argument for unknown names.
std::unique_ptr<ParameterizedSystem> make_count_preset(const std::string& name,
                                                       std::uint64_t seed);
std::vector<std::string> count_preset_names();

}  // namespace catconf
