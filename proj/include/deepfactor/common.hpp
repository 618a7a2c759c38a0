#ifndef DEEPFACTOR_COMMON_HPP
#define DEEPFACTOR_COMMON_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace df {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Bad run configuration or inconsistent model specification.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input data violates the expected schema (missing columns, bad dates, NaN).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure: divergence, degenerate series, non-finite values.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const Matrix& m) { return m.allFinite(); }
inline bool all_finite(const Vector& v) { return v.allFinite(); }

}  // namespace df

#endif
