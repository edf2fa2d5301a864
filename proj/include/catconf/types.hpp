#pragma once

#include <complex>
#include <Eigen/Dense>

namespace catconf {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

// Coefficient matrix of a bidegree-(1,d2) form in (s,t) x (y0..y2):
// 2 rows indexed by (s,t), one column per degree-d2 monomial.
using BiForm = Eigen::Matrix<Complex, 2, Eigen::Dynamic>;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catconf
