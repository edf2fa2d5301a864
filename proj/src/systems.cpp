#include "catconf/systems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catconf {

ParameterizedSystem::ParameterizedSystem(std::string name, int x_dim, int path_dim,
                                         PathStrategy strategy, int summand_count,
                                         int summand_size)
    : name_(std::move(name)),
      x_dim_(x_dim),
      path_dim_(path_dim),
      strategy_(strategy),
      summand_count_(summand_count),
      summand_size_(summand_size) {}

CVec ParameterizedSystem::residual(const CVec& x, const CVec& theta) const {
  CVec out(x_dim_);
  residual(x, theta, out);
  return out;
}

CMat ParameterizedSystem::jacobian(const CVec& x, const CVec& theta) const {
  CMat out(x_dim_, x_dim_);
  jacobian(x, theta, out);
  return out;
}

CVec ParameterizedSystem::full_residual(const CVec& x, const CVec& theta) const {
  return residual(x, theta);
}

CVec ParameterizedSystem::random_path_point(Rng& rng) const {
  return rng.gaussian_cvec(path_dim_);
}

std::vector<CVec> ParameterizedSystem::split_summands(const CVec& x) const {
  std::vector<CVec> blocks;
  blocks.reserve(summand_count_);
  for (int i = 0; i < summand_count_; ++i)
    blocks.push_back(x.segment(static_cast<Eigen::Index>(i) * summand_size_, summand_size_));
  return blocks;
}

// ---------------------------------------------------------------------------
// WaringCoefficientMap

WaringCoefficientMap::WaringCoefficientMap(int n, std::vector<int> degrees, int k)
    : n_(n), degrees_(std::move(degrees)), k_(k), r_(static_cast<int>(degrees_.size())) {
  if (n_ < 1 || k_ < 1 || r_ < 1)
    throw std::invalid_argument("WaringCoefficientMap: need n, k, r >= 1");
  coeff_dim_ = 0;
  for (int a : degrees_) {
    if (a < 1) throw std::invalid_argument("WaringCoefficientMap: degrees must be >= 1");
    form_offsets_.push_back(coeff_dim_);
    const MonomialOrder ord = monomials(n_, a);
    std::vector<Term> terms;
    terms.reserve(ord.size());
    for (int m = 0; m < ord.size(); ++m) {
      const Exponent& e = ord.exponent(m);
      Term t;
      t.exps.assign(e.begin() + 1, e.end());
      t.factor = static_cast<double>(multinomial(a, e));
      terms.push_back(std::move(t));
    }
    form_terms_.push_back(std::move(terms));
    coeff_dim_ += ord.size();
  }
}

namespace {

// powers[v][e] = coord_v^e, for the n non-leading summand coordinates.
void fill_powers(const CVec& x, int base, int n, int max_deg,
                 std::vector<std::vector<Complex>>& powers) {
  powers.resize(n);
  for (int v = 0; v < n; ++v) {
    auto& pv = powers[v];
    pv.assign(max_deg + 1, Complex(1.0, 0.0));
    const Complex c = x[base + v];
    for (int e = 1; e <= max_deg; ++e) pv[e] = pv[e - 1] * c;
  }
}

}  // namespace

void WaringCoefficientMap::value(const CVec& x, CVec& out) const {
  out.setZero(coeff_dim_);
  const int stride = n_ + r_;
  const int max_deg = *std::max_element(degrees_.begin(), degrees_.end());
  std::vector<std::vector<Complex>> powers;
  for (int i = 0; i < k_; ++i) {
    const int base = i * stride;
    fill_powers(x, base, n_, max_deg, powers);
    for (int j = 0; j < r_; ++j) {
      const Complex w = x[base + n_ + j];
      const auto& terms = form_terms_[j];
      const int off = form_offsets_[j];
      for (size_t m = 0; m < terms.size(); ++m) {
        Complex mono(terms[m].factor, 0.0);
        for (int v = 0; v < n_; ++v) mono *= powers[v][terms[m].exps[v]];
        out[off + m] += w * mono;
      }
    }
  }
}

void WaringCoefficientMap::add_jacobian(const CVec& x, CMat& out) const {
  const int stride = n_ + r_;
  const int max_deg = *std::max_element(degrees_.begin(), degrees_.end());
  std::vector<std::vector<Complex>> powers;
  for (int i = 0; i < k_; ++i) {
    const int base = i * stride;
    fill_powers(x, base, n_, max_deg, powers);
    for (int j = 0; j < r_; ++j) {
      const Complex w = x[base + n_ + j];
      const auto& terms = form_terms_[j];
      const int off = form_offsets_[j];
      for (size_t m = 0; m < terms.size(); ++m) {
        const auto& e = terms[m].exps;
        Complex mono(terms[m].factor, 0.0);
        for (int v = 0; v < n_; ++v) mono *= powers[v][e[v]];
        out(off + m, base + n_ + j) += mono;
        for (int v = 0; v < n_; ++v) {
          if (e[v] == 0) continue;
          Complex d(terms[m].factor * e[v], 0.0);
          for (int u = 0; u < n_; ++u) d *= powers[u][u == v ? e[u] - 1 : e[u]];
          out(off + m, base + v) += w * d;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// WaringSystem

namespace {

WaringCoefficientMap make_square_map(int n, std::vector<int> degrees, int k) {
  WaringCoefficientMap map(n, std::move(degrees), k);
  if (map.domain_dim() != map.coeff_dim()) {
    std::ostringstream msg;
    msg << "build_waring_system: not square: " << map.k() << " summands give "
        << map.domain_dim() << " unknowns but the forms have " << map.coeff_dim()
        << " coefficients";
    throw std::invalid_argument(msg.str());
  }
  return map;
}

}  // namespace

WaringSystem::WaringSystem(int n, std::vector<int> degrees, int k)
    : ParameterizedSystem("waring", k * (n + static_cast<int>(degrees.size())),
                          k * (n + static_cast<int>(degrees.size())), PathStrategy::kLinear, k,
                          n + static_cast<int>(degrees.size())),
      map_(make_square_map(n, std::move(degrees), k)) {}

void WaringSystem::residual(const CVec& x, const CVec& theta, CVec& out) const {
  map_.value(x, out);
  out -= theta;
}

void WaringSystem::jacobian(const CVec& x, const CVec& /*theta*/, CMat& out) const {
  out.setZero(x_dim_, x_dim_);
  map_.add_jacobian(x, out);
}

void WaringSystem::path_dt(const CVec& /*x*/, const CVec& theta0, const CVec& theta1,
                           double /*t*/, CVec& out) const {
  out = theta0 - theta1;
}

StartPair WaringSystem::make_start(Rng& rng) const {
  StartPair sp;
  sp.x = rng.gaussian_cvec(x_dim_);
  sp.path_point = forward(sp.x);
  return sp;
}

CVec WaringSystem::forward(const CVec& x) const {
  CVec p(path_dim_);
  map_.value(x, p);
  return p;
}

std::unique_ptr<WaringSystem> build_waring_system(int n, const std::vector<int>& degrees, int k) {
  return std::make_unique<WaringSystem>(n, degrees, k);
}

// ---------------------------------------------------------------------------
// ReducedQuarticSystem

ReducedQuarticSystem::ReducedQuarticSystem()
    : ParameterizedSystem("reduced-quartic", 40, 40, PathStrategy::kLinear, 10, 4) {
  const MonomialOrder ord = monomials(2, 5);
  col_exps_.reserve(ord.size());
  for (int c = 0; c < ord.size(); ++c)
    col_exps_.emplace_back(ord.exponent(c)[1], ord.exponent(c)[2]);
  // Kept positions: the dropped entries are (row s, last monomial y2^5) and
  // (row t, monomial y1^5).
  const int y2_fifth = ord.index_of({0, 0, 5});
  const int y1_fifth = ord.index_of({0, 5, 0});
  for (int c = 0; c < ord.size(); ++c)
    if (c != y2_fifth) kept_.emplace_back(0, c);
  for (int c = 0; c < ord.size(); ++c)
    if (c != y1_fifth) kept_.emplace_back(1, c);
}

BiForm ReducedQuarticSystem::coefficient_matrix(const CVec& x) const {
  BiForm m = BiForm::Zero(2, static_cast<Eigen::Index>(col_exps_.size()));
  for (int i = 0; i < summand_count_; ++i) {
    const Complex h1 = x[4 * i];
    const Complex h2 = x[4 * i + 1];
    const Complex gs = x[4 * i + 2];
    const Complex gt = x[4 * i + 3];
    Complex p1[6], p2[6];
    p1[0] = p2[0] = Complex(1.0, 0.0);
    for (int e = 1; e <= 5; ++e) {
      p1[e] = p1[e - 1] * h1;
      p2[e] = p2[e - 1] * h2;
    }
    for (size_t c = 0; c < col_exps_.size(); ++c) {
      const Complex mono = p1[col_exps_[c].first] * p2[col_exps_[c].second];
      m(0, static_cast<Eigen::Index>(c)) += gs * mono;
      m(1, static_cast<Eigen::Index>(c)) += gt * mono;
    }
  }
  return m;
}

void ReducedQuarticSystem::residual(const CVec& x, const CVec& theta, CVec& out) const {
  const BiForm m = coefficient_matrix(x);
  out.resize(40);
  for (size_t j = 0; j < kept_.size(); ++j)
    out[j] = m(kept_[j].first, kept_[j].second) - theta[j];
}

void ReducedQuarticSystem::jacobian(const CVec& x, const CVec& /*theta*/, CMat& out) const {
  out.setZero(40, 40);
  for (int i = 0; i < summand_count_; ++i) {
    const Complex h1 = x[4 * i];
    const Complex h2 = x[4 * i + 1];
    const Complex gs = x[4 * i + 2];
    const Complex gt = x[4 * i + 3];
    Complex p1[6], p2[6];
    p1[0] = p2[0] = Complex(1.0, 0.0);
    for (int e = 1; e <= 5; ++e) {
      p1[e] = p1[e - 1] * h1;
      p2[e] = p2[e - 1] * h2;
    }
    for (size_t j = 0; j < kept_.size(); ++j) {
      const int row = kept_[j].first;
      const auto [e1, e2] = col_exps_[kept_[j].second];
      const Complex mono = p1[e1] * p2[e2];
      const Complex u = (row == 0) ? gs : gt;
      if (e1 > 0) out(j, 4 * i) = u * static_cast<double>(e1) * p1[e1 - 1] * p2[e2];
      if (e2 > 0) out(j, 4 * i + 1) = u * static_cast<double>(e2) * p1[e1] * p2[e2 - 1];
      out(j, 4 * i + 2 + row) = mono;
    }
  }
}

void ReducedQuarticSystem::path_dt(const CVec& /*x*/, const CVec& theta0, const CVec& theta1,
                                   double /*t*/, CVec& out) const {
  out = theta0 - theta1;
}

StartPair ReducedQuarticSystem::make_start(Rng& rng) const {
  StartPair sp;
  sp.x = rng.gaussian_cvec(40);
  sp.path_point = forward(sp.x);
  return sp;
}

CVec ReducedQuarticSystem::forward(const CVec& x) const {
  const BiForm m = coefficient_matrix(x);
  CVec p(40);
  for (size_t j = 0; j < kept_.size(); ++j) p[j] = m(kept_[j].first, kept_[j].second);
  return p;
}

std::unique_ptr<ReducedQuarticSystem> build_reduced_quartic_system() {
  return std::make_unique<ReducedQuarticSystem>();
}

const std::vector<Complex>& reduced_quartic_reference_start() {
  static const std::vector<Complex> start = {
      {3.803150504548735e-1, 1.080968803617349e-1},
      {4.012914786260265e-2, 1.194906105430308e-2},
      {-5.791791173087690e-1, 7.036742613968909e-1},
      {-3.976968438023937e-1, 9.044873244848521e-1},
      {2.231698943133415e-1, 6.687608922343052e-1},
      {6.002906583490685e-1, 2.206993065311951e-1},
      {3.867065923659511e-1, 1.345756657407951e-1},
      {1.526038777608076e-1, -6.566938139632470e-1},
      {-1.736311597636939e-1, -7.609350872905872e-1},
      {4.316168188831709e-1, -4.213795287363188e-1},
      {-1.741310170829991e-1, 2.308979289387978e-1},
      {-1.859590880062348e-1, 2.841353874294199e-1},
      {-1.169608247513672e-1, 8.765209704988050e-1},
      {5.407734749067091e-1, -3.124118196630669e-1},
      {1.527995379711511e-1, 6.089233207073497e-1},
      {3.204152865278664e-1, -5.904671666326385e-1},
      {-1.330737937092930e-1, -6.578838258756913e-1},
      {-7.385080142922554e-1, 5.831003376892393e-1},
      {6.699288861915320e-1, -5.533657523766588e-1},
      {3.902845736728862e-1, -1.485132206413023e-1},
      {2.065574523959247e-1, -6.446211342534475e-1},
      {-5.935341284909806e-1, 9.380573668092805e-1},
      {6.398816151374838e-1, 7.796882650167238e-1},
      {-5.451582606670785e-1, 7.278281716630082e-1},
      {-8.648295254072200e-1, 9.603906925323353e-1},
      {1.185927730430883e-1, 9.581113986558572e-1},
      {-1.272156730720730e-1, -3.826018264098715e-1},
      {-6.204082514618516e-1, 1.303932410632590e-1},
      {-4.055191686841270e-1, -1.061742318012200e-1},
      {5.497821295556304e-1, -9.390776649698522e-1},
      {-9.573483983309962e-1, 6.119729292434732e-1},
      {-3.625771545885574e-1, 5.248770839543854e-1},
      {-1.256230679554358e-1, -1.784554662383838e-1},
      {-2.906342421922776e-1, -5.154050022761094e-1},
      {-2.436126820291677e-1, -3.569908300218846e-1},
      {-8.981673995870921e-1, 1.329775006009424e-1},
      {-1.778113408966572e-1, 1.553732129113020e-1},
      {2.014979024950735e-1, 2.767539435584817e-1},
      {-7.897330203466324e-1, 9.827999531425403e-1},
      {-3.766244866562784e-1, 1.708209472557658e-1},
  };
  return start;
}

StartPair reduced_quartic_reference_pair() {
  const auto& coords = reduced_quartic_reference_start();
  ReducedQuarticSystem sys;
  StartPair sp;
  sp.x.resize(static_cast<Eigen::Index>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) sp.x[i] = coords[i];
  sp.path_point = sys.forward(sp.x);
  return sp;
}

// ---------------------------------------------------------------------------
// SexticRank9System

namespace {
// Keeps the start sextic's coefficients of the same order as the Gaussian
// loop vertices; degree-6 powers of unit-scale draws would push the residual
// magnitude (and with it the attainable Newton floor) past the endpoint
// refinement tolerance.
constexpr double kSexticStartScale = 0.4;
}  // namespace

SexticRank9System::SexticRank9System(std::uint64_t seed)
    : ParameterizedSystem("sextic-rank9", 27, 28, PathStrategy::kLinear, 9, 3),
      map_(2, std::vector<int>{6}, 9) {
  // Fixed squaring matrix: 27x28 complex Gaussian, full rank with probability 1.
  Rng rng(seed ^ 0x5ead71c9ULL);
  squarer_.resize(27, 28);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 28; ++j) squarer_(i, j) = rng.gaussian_complex();
}

CVec SexticRank9System::forward(const CVec& q) const {
  CVec out(map_.coeff_dim());
  map_.value(q, out);
  return out;
}

void SexticRank9System::residual(const CVec& x, const CVec& theta, CVec& out) const {
  CVec fx(map_.coeff_dim());
  map_.value(x, fx);
  out = squarer_ * (fx - theta);
}

void SexticRank9System::jacobian(const CVec& x, const CVec& /*theta*/, CMat& out) const {
  CMat jf = CMat::Zero(map_.coeff_dim(), map_.domain_dim());
  map_.add_jacobian(x, jf);
  out = squarer_ * jf;
}

void SexticRank9System::path_dt(const CVec& /*x*/, const CVec& theta0, const CVec& theta1,
                                double /*t*/, CVec& out) const {
  out = squarer_ * (theta0 - theta1);
}

CVec SexticRank9System::full_residual(const CVec& x, const CVec& theta) const {
  CVec fx(map_.coeff_dim());
  map_.value(x, fx);
  return fx - theta;
}

StartPair SexticRank9System::make_start(Rng& rng) const {
  StartPair sp;
  sp.x = kSexticStartScale * rng.gaussian_cvec(27);
  sp.path_point = forward(sp.x);  // exact on all 28 coefficients
  return sp;
}

std::unique_ptr<SexticRank9System> build_sextic_rank9_system(std::uint64_t seed) {
  return std::make_unique<SexticRank9System>(seed);
}

// ---------------------------------------------------------------------------
// SliceSystem

namespace {

int slice_path_dim(SliceKind kind) {
  return kind == SliceKind::kSegre6 ? 36 : 27 + 30;
}

}  // namespace

SliceSystem::SliceSystem(SliceKind kind, std::uint64_t seed)
    : ParameterizedSystem(kind == SliceKind::kSegre6 ? "segre-slice" : "c2-slice", 4,
                          slice_path_dim(kind), PathStrategy::kLinear, 1, 4),
      kind_(kind),
      seed_(seed) {
  const MonomialOrder ord = monomials(2, 3);
  cubic_exps_.reserve(ord.size());
  for (int m = 0; m < ord.size(); ++m)
    cubic_exps_.emplace_back(ord.exponent(m)[1], ord.exponent(m)[2]);
}

void SliceSystem::eval_forms(const CVec& x, const CVec& coeffs, CVec& out) const {
  const Complex a[3] = {Complex(1.0, 0.0), x[0], x[1]};
  const Complex b[3] = {Complex(1.0, 0.0), x[2], x[3]};
  const int bilinear = kind_ == SliceKind::kSegre6 ? 4 : 3;
  out.resize(4);
  for (int e = 0; e < bilinear; ++e) {
    Complex acc(0.0, 0.0);
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) acc += coeffs[9 * e + 3 * u + v] * a[u] * b[v];
    out[e] = acc;
  }
  if (kind_ == SliceKind::kC2Twelve) {
    Complex p1[4], p2[4];
    p1[0] = p2[0] = Complex(1.0, 0.0);
    for (int e = 1; e <= 3; ++e) {
      p1[e] = p1[e - 1] * x[0];
      p2[e] = p2[e - 1] * x[1];
    }
    Complex acc(0.0, 0.0);
    for (size_t m = 0; m < cubic_exps_.size(); ++m) {
      const Complex mono = p1[cubic_exps_[m].first] * p2[cubic_exps_[m].second];
      for (int v = 0; v < 3; ++v) acc += coeffs[27 + 3 * m + v] * mono * b[v];
    }
    out[3] = acc;
  }
}

void SliceSystem::residual(const CVec& x, const CVec& theta, CVec& out) const {
  eval_forms(x, theta, out);
}

void SliceSystem::jacobian(const CVec& x, const CVec& theta, CMat& out) const {
  out.setZero(4, 4);
  const Complex a[3] = {Complex(1.0, 0.0), x[0], x[1]};
  const Complex b[3] = {Complex(1.0, 0.0), x[2], x[3]};
  const int bilinear = kind_ == SliceKind::kSegre6 ? 4 : 3;
  for (int e = 0; e < bilinear; ++e) {
    for (int v = 0; v < 3; ++v) {
      out(e, 0) += theta[9 * e + 3 * 1 + v] * b[v];  // d/d a1
      out(e, 1) += theta[9 * e + 3 * 2 + v] * b[v];  // d/d a2
    }
    for (int u = 0; u < 3; ++u) {
      out(e, 2) += theta[9 * e + 3 * u + 1] * a[u];  // d/d b1
      out(e, 3) += theta[9 * e + 3 * u + 2] * a[u];  // d/d b2
    }
  }
  if (kind_ == SliceKind::kC2Twelve) {
    Complex p1[4], p2[4];
    p1[0] = p2[0] = Complex(1.0, 0.0);
    for (int e = 1; e <= 3; ++e) {
      p1[e] = p1[e - 1] * x[0];
      p2[e] = p2[e - 1] * x[1];
    }
    for (size_t m = 0; m < cubic_exps_.size(); ++m) {
      const auto [e1, e2] = cubic_exps_[m];
      const Complex mono = p1[e1] * p2[e2];
      const Complex da1 = e1 > 0 ? static_cast<double>(e1) * p1[e1 - 1] * p2[e2] : Complex(0, 0);
      const Complex da2 = e2 > 0 ? static_cast<double>(e2) * p1[e1] * p2[e2 - 1] : Complex(0, 0);
      for (int v = 0; v < 3; ++v) {
        const Complex c = theta[27 + 3 * m + v];
        out(3, 0) += c * da1 * b[v];
        out(3, 1) += c * da2 * b[v];
      }
      out(3, 2) += theta[27 + 3 * m + 1] * mono;
      out(3, 3) += theta[27 + 3 * m + 2] * mono;
    }
  }
}

void SliceSystem::path_dt(const CVec& x, const CVec& theta0, const CVec& theta1, double /*t*/,
                          CVec& out) const {
  const CVec delta = theta1 - theta0;
  eval_forms(x, delta, out);
}

StartPair SliceSystem::make_start(Rng& rng) const {
  StartPair sp;
  sp.x = rng.gaussian_cvec(4);
  sp.path_point = rng.gaussian_cvec(path_dim_);
  // The constant coefficient of each form multiplies exactly 1 in the affine
  // chart, so shifting it by the current value makes the form vanish at x.
  CVec vals;
  eval_forms(sp.x, sp.path_point, vals);
  const int bilinear = kind_ == SliceKind::kSegre6 ? 4 : 3;
  for (int e = 0; e < bilinear; ++e) sp.path_point[9 * e] -= vals[e];
  if (kind_ == SliceKind::kC2Twelve) sp.path_point[27] -= vals[3];
  return sp;
}

std::unique_ptr<SliceSystem> build_slice_system(SliceKind kind, std::uint64_t seed) {
  return std::make_unique<SliceSystem>(kind, seed);
}

// ---------------------------------------------------------------------------
// Presets

std::unique_ptr<ParameterizedSystem> make_count_preset(const std::string& name,
                                                       std::uint64_t seed) {
  if (name == "london") return build_waring_system(2, {3, 3, 3}, 6);
  if (name == "london-mixed") return build_waring_system(2, {3, 3, 3, 2}, 6);
  if (name == "quartics-full") return build_waring_system(2, {4, 4, 4, 4}, 10);
  if (name == "quartics-reduced") return build_reduced_quartic_system();
  if (name == "sextic9") return build_sextic_rank9_system(seed);
  if (name == "segre-slice-6") return build_slice_system(SliceKind::kSegre6, seed);
  if (name == "c2-slice-12") return build_slice_system(SliceKind::kC2Twelve, seed);
  throw std::invalid_argument("unknown count preset: " + name);
}

std::vector<std::string> count_preset_names() {
  return {"london",  "london-mixed",  "quartics-full", "quartics-reduced",
          "sextic9", "segre-slice-6", "c2-slice-12"};
}

}  // namespace catconf
