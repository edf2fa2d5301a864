#include "doctest.h"

#include <stdexcept>
#include <string>

#include "catconf/systems.hpp"

using namespace catconf;

namespace {

// Central-difference Jacobian in the complex-analytic sense: perturb each
// coordinate by a real step (holomorphy makes one direction sufficient).
CMat finite_difference_jacobian(const ParameterizedSystem& sys, const CVec& x,
                                const CVec& theta) {
  const double eps = 1e-6;
  CMat fd(sys.x_dim(), sys.x_dim());
  for (int j = 0; j < sys.x_dim(); ++j) {
    CVec xp = x, xm = x;
    xp[j] += eps;
    xm[j] -= eps;
    fd.col(j) = (sys.residual(xp, theta) - sys.residual(xm, theta)) / (2.0 * eps);
  }
  return fd;
}

void check_jacobian(const ParameterizedSystem& sys, Rng& rng, int points) {
  for (int trial = 0; trial < points; ++trial) {
    const CVec x = rng.gaussian_cvec(sys.x_dim());
    const CVec theta = sys.random_path_point(rng);
    const CMat j = sys.jacobian(x, theta);
    const CMat fd = finite_difference_jacobian(sys, x, theta);
    const double scale = std::max(1.0, j.norm());
    CHECK((j - fd).norm() <= 1e-5 * scale);
  }
}

void check_path_dt(const ParameterizedSystem& sys, Rng& rng) {
  const CVec x = rng.gaussian_cvec(sys.x_dim());
  const CVec t0 = sys.random_path_point(rng);
  const CVec t1 = sys.random_path_point(rng);
  const double t = 0.37, eps = 1e-6;
  const CVec segp = (1.0 - (t + eps)) * t0 + (t + eps) * t1;
  const CVec segm = (1.0 - (t - eps)) * t0 + (t - eps) * t1;
  const CVec fd = (sys.residual(x, segp) - sys.residual(x, segm)) / (2.0 * eps);
  const CVec dt = [&] {
    CVec out;
    sys.path_dt(x, t0, t1, t, out);
    return out;
  }();
  CHECK((dt - fd).norm() <= 1e-5 * std::max(1.0, fd.norm()));
}

void check_start_duality(const ParameterizedSystem& sys, Rng& rng, int points) {
  for (int trial = 0; trial < points; ++trial) {
    const StartPair sp = sys.make_start(rng);
    REQUIRE(sp.x.size() == sys.x_dim());
    REQUIRE(sp.path_point.size() == sys.path_dim());
    CHECK(sys.residual(sp.x, sp.path_point).norm() <= 1e-10);
    CHECK(sys.full_residual(sp.x, sp.path_point).norm() <= 1e-10);
  }
}

}  // namespace

TEST_SUITE("systems") {

TEST_CASE("square system dimensions for the standard families") {
  const auto cubics = build_waring_system(2, {3, 3, 3}, 6);
  CHECK(cubics->x_dim() == 30);
  CHECK(cubics->path_dim() == 30);
  CHECK(cubics->summand_count() == 6);
  CHECK(cubics->summand_size() == 5);

  const auto mixed = build_waring_system(2, {3, 3, 3, 2}, 6);
  CHECK(mixed->x_dim() == 36);
  CHECK(mixed->path_dim() == 36);

  const auto quartics = build_waring_system(2, {4, 4, 4, 4}, 10);
  CHECK(quartics->x_dim() == 60);
  CHECK(quartics->path_dim() == 60);
}

TEST_CASE("non-square requests are rejected with both counts in the message") {
  try {
    build_waring_system(2, {3, 3, 3}, 5);
    FAIL("expected std::invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("25") != std::string::npos);
    CHECK(msg.find("30") != std::string::npos);
  }
}

TEST_CASE("waring residual vanishes exactly on constructed decompositions") {
  Rng rng(211);
  check_start_duality(*build_waring_system(2, {3, 3, 3}, 6), rng, 5);
  check_start_duality(*build_waring_system(2, {3, 3, 3, 2}, 6), rng, 5);
  check_start_duality(*build_waring_system(2, {4, 4, 4, 4}, 10), rng, 3);
}

TEST_CASE("waring jacobian and path derivative match finite differences") {
  Rng rng(223);
  const auto sys = build_waring_system(2, {3, 3, 3}, 6);
  check_jacobian(*sys, rng, 5);
  check_path_dt(*sys, rng);
  const auto mixed = build_waring_system(2, {3, 3, 3, 2}, 6);
  check_jacobian(*mixed, rng, 3);
  check_path_dt(*mixed, rng);
}

TEST_CASE("waring forward map reproduces the path point of a start pair") {
  Rng rng(227);
  const auto sys = build_waring_system(2, {3, 3, 3}, 6);
  const StartPair sp = sys->make_start(rng);
  CHECK((sys->forward(sp.x) - sp.path_point).norm() <= 1e-12 * sp.path_point.norm());
}

TEST_CASE("split_summands partitions the unknown vector in order") {
  const auto sys = build_waring_system(2, {3, 3, 3}, 6);
  CVec x(30);
  for (int i = 0; i < 30; ++i) x[i] = Complex(i, -i);
  const auto blocks = sys->split_summands(x);
  REQUIRE(blocks.size() == 6);
  for (int i = 0; i < 6; ++i) {
    REQUIRE(blocks[i].size() == 5);
    for (int j = 0; j < 5; ++j) CHECK(blocks[i][j] == x[5 * i + j]);
  }
}

TEST_CASE("reduced quartic drops exactly the two cross positions") {
  const auto sys = build_reduced_quartic_system();
  CHECK(sys->x_dim() == 40);
  CHECK(sys->path_dim() == 40);
  CHECK(sys->summand_count() == 10);
  CHECK(sys->summand_size() == 4);
  const auto& kept = sys->kept_positions();
  REQUIRE(kept.size() == 40);
  // Row 0 keeps columns 0..19 (drops y2^5 at 20); row 1 keeps 0..14 and
  // 16..20 (drops y1^5 at 15).
  for (int i = 0; i < 20; ++i) {
    CHECK(kept[i].first == 0);
    CHECK(kept[i].second == i);
  }
  for (int i = 0; i < 15; ++i) {
    CHECK(kept[20 + i].first == 1);
    CHECK(kept[20 + i].second == i);
  }
  for (int i = 0; i < 5; ++i) {
    CHECK(kept[35 + i].first == 1);
    CHECK(kept[35 + i].second == 16 + i);
  }
}

TEST_CASE("reduced quartic residual equals kept entries of the coefficient matrix") {
  Rng rng(229);
  const auto sys = build_reduced_quartic_system();
  const CVec x = rng.gaussian_cvec(40);
  const CVec theta = rng.gaussian_cvec(40);
  const BiForm m = sys->coefficient_matrix(x);
  const CVec res = sys->residual(x, theta);
  const auto& kept = sys->kept_positions();
  for (int i = 0; i < 40; ++i) {
    const Complex want = m(kept[i].first, kept[i].second) - theta[i];
    CHECK(std::abs(res[i] - want) <= 1e-12 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("reduced quartic jacobian, path derivative, and start duality") {
  Rng rng(233);
  const auto sys = build_reduced_quartic_system();
  check_jacobian(*sys, rng, 4);
  check_path_dt(*sys, rng);
  check_start_duality(*sys, rng, 4);
}

TEST_CASE("published reference start solves its own parameters") {
  const auto sys = build_reduced_quartic_system();
  const auto& vals = reduced_quartic_reference_start();
  REQUIRE(vals.size() == 40);
  CHECK(vals[0].real() == doctest::Approx(3.803150504548735e-1).epsilon(1e-15));
  CHECK(vals[0].imag() == doctest::Approx(1.080968803617349e-1).epsilon(1e-15));
  const StartPair sp = reduced_quartic_reference_pair();
  const double scale = std::max(1.0, sp.path_point.norm());
  CHECK(sys->residual(sp.x, sp.path_point).norm() <= 1e-13 * scale);
}

TEST_CASE("sextic rank-9 squared-system geometry") {
  Rng rng(239);
  const auto sys = build_sextic_rank9_system(5);
  CHECK(sys->x_dim() == 27);
  CHECK(sys->path_dim() == 28);
  CHECK(sys->strategy() == PathStrategy::kLinear);
  CHECK(sys->squaring_matrix().rows() == 27);
  CHECK(sys->squaring_matrix().cols() == 28);

  // Same seed, same squaring matrix; different seed, different matrix.
  const auto again = build_sextic_rank9_system(5);
  CHECK((sys->squaring_matrix() - again->squaring_matrix()).norm() == 0.0);
  const auto other = build_sextic_rank9_system(6);
  CHECK((sys->squaring_matrix() - other->squaring_matrix()).norm() > 1e-3);

  check_start_duality(*sys, rng, 4);
  check_jacobian(*sys, rng, 3);
  check_path_dt(*sys, rng);

  // full_residual is the unrandomized 28-entry residual; the squared residual
  // is its image under the squaring matrix.
  const CVec x = rng.gaussian_cvec(27);
  const CVec theta = sys->random_path_point(rng);
  REQUIRE(theta.size() == 28);
  const CVec full = sys->full_residual(x, theta);
  REQUIRE(full.size() == 28);
  const CVec squared = sys->residual(x, theta);
  CHECK((sys->squaring_matrix() * full - squared).norm() <= 1e-10 * (1.0 + squared.norm()));
}

TEST_CASE("sextic latent points parameterize actual sextics") {
  Rng rng(241);
  const auto sys = build_sextic_rank9_system(7);
  // Any latent vector decomposes the sextic it maps to: at (q, forward(q))
  // every one of the 28 coefficient equations vanishes, not just the 27
  // randomized combinations.
  for (int trial = 0; trial < 5; ++trial) {
    const CVec q = rng.gaussian_cvec(27);
    CHECK(sys->full_residual(q, sys->forward(q)).norm() <= 1e-12);
    CHECK(sys->residual(q, sys->forward(q)).norm() <= 1e-12);
  }

  // Starts are exact on all 28 coefficients and keep moderate magnitude.
  const auto sp = sys->make_start(rng);
  CHECK(sp.path_point.size() == 28);
  CHECK(sys->full_residual(sp.x, sp.path_point).norm() == 0.0);
  CHECK(sp.x.norm() < 5.0);
}

TEST_CASE("slice systems have the advertised shapes") {
  const auto segre = build_slice_system(SliceKind::kSegre6, 3);
  CHECK(segre->x_dim() == 4);
  CHECK(segre->path_dim() == 36);
  const auto c2 = build_slice_system(SliceKind::kC2Twelve, 3);
  CHECK(c2->x_dim() == 4);
  CHECK(c2->path_dim() == 57);
}

TEST_CASE("slice jacobians, path derivatives, and start duality") {
  Rng rng(251);
  for (const SliceKind kind : {SliceKind::kSegre6, SliceKind::kC2Twelve}) {
    const auto sys = build_slice_system(kind, 11);
    check_jacobian(*sys, rng, 5);
    check_path_dt(*sys, rng);
    check_start_duality(*sys, rng, 5);
  }
}

TEST_CASE("count presets construct the advertised systems") {
  const auto names = count_preset_names();
  REQUIRE(names.size() == 7);
  for (const auto& name : names) {
    const auto sys = make_count_preset(name, 17);
    CHECK(sys->x_dim() > 0);
    CHECK(sys->x_dim() == sys->jacobian(CVec::Zero(sys->x_dim()),
                                        CVec::Zero(sys->path_dim()))
                              .rows());
  }
  CHECK(make_count_preset("london", 1)->x_dim() == 30);
  CHECK(make_count_preset("london-mixed", 1)->x_dim() == 36);
  CHECK(make_count_preset("quartics-full", 1)->x_dim() == 60);
  CHECK(make_count_preset("quartics-reduced", 1)->x_dim() == 40);
  CHECK(make_count_preset("sextic9", 1)->x_dim() == 27);
  CHECK(make_count_preset("segre-slice-6", 1)->x_dim() == 4);
  CHECK(make_count_preset("c2-slice-12", 1)->x_dim() == 4);
  CHECK_THROWS_AS(make_count_preset("nope", 1), std::invalid_argument);
}

}  // TEST_SUITE
