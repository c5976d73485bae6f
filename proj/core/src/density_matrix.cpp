#include "mor/density_matrix.hpp"

#include <Eigen/Eigenvalues>

namespace mor {

DensityMatrix DensityMatrix::pure(Level level)
{
    Matrix4c rho = Matrix4c::Zero();
    rho(index(level), index(level)) = 1.0;
    return DensityMatrix(rho);
}

double DensityMatrix::hermiticity_error() const
{
    return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_error() const
{
    return std::abs(rho_.trace() - Complex(1.0));
}

double DensityMatrix::min_eigenvalue() const
{
    const Matrix4c hermitian = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical() const
{
    return hermiticity_error() <= 1e-12 && trace_error() <= 1e-12 && min_eigenvalue() >= -1e-10;
}

double DensityMatrix::distance(const DensityMatrix& other) const
{
    return (rho_ - other.rho_).cwiseAbs().maxCoeff();
}

} // namespace mor
