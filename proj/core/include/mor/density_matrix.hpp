#pragma once

#include "mor/params.hpp"

#include <Eigen/Core>

namespace mor {

using Matrix4c = Eigen::Matrix<Complex, kNumLevels, kNumLevels>;

/// 4x4 density operator over (g, 1, 2, e). Invariants are checked on demand, not on construction,
/// so intermediate integration states can be represented too.
class DensityMatrix
{
public:
    DensityMatrix() : rho_(Matrix4c::Zero()) {}
    explicit DensityMatrix(const Matrix4c& rho) : rho_(rho) {}

    static DensityMatrix pure(Level level);

    const Matrix4c& matrix() const noexcept { return rho_; }

    Complex operator()(Level row, Level col) const { return rho_(index(row), index(col)); }
    Complex operator()(int row, int col) const { return rho_(row, col); }

    /// max |rho - rho^dagger|
    double hermiticity_error() const;
    /// |Tr rho - 1|
    double trace_error() const;
    /// Smallest eigenvalue of the Hermitian part.
    double min_eigenvalue() const;

    /// Hermitian within 1e-12, unit trace within 1e-12, min eigenvalue >= -1e-10.
    bool is_physical() const;

    /// max |rho_ij - other_ij|
    double distance(const DensityMatrix& other) const;

private:
    Matrix4c rho_;
};

} // namespace mor
