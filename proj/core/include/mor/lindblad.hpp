#pragma once

#include "mor/density_matrix.hpp"
#include "mor/params.hpp"

#include <Eigen/Core>

namespace mor {

inline constexpr int kLiouvilleDim = kNumLevels * kNumLevels;

using Matrix16c = Eigen::Matrix<Complex, kLiouvilleDim, kLiouvilleDim>;
using Vector16c = Eigen::Matrix<Complex, kLiouvilleDim, 1>;

/// Position of rho(row, col) in the column-stacked vector.
constexpr int vec_index(int row, int col) noexcept { return row + kNumLevels * col; }

Vector16c vectorize(const Matrix4c& rho);
Matrix4c unvectorize(const Vector16c& v);

/// Generator of d vec(rho)/dt = L vec(rho), acting on column-stacked density matrices.
struct Liouvillian
{
    Matrix16c matrix;

    Vector16c apply(const Vector16c& rho) const { return matrix * rho; }
    Matrix4c apply(const Matrix4c& rho) const { return unvectorize(matrix * vectorize(rho)); }

    /// d(Tr rho)/dt for the given state; zero for a trace-preserving generator.
    Complex trace_derivative(const Matrix4c& rho) const;
};

/**
 * Rotating-frame Hamiltonian (hbar = 1):
 *
 *   H = (delta+Omega)|1><1| + (delta-Omega)|2><2| + (delta+Delta)|e><e|
 *       - [g1|1><g| + g2|2><g| + G1|e><1| + G2|e><2| + h.c.]
 *
 * The coupling sign is the one for which the weak-probe steady state reproduces the
 * closed-form susceptibilities with chi+ = gamma1 rho_1g / g1.
 */
Matrix4c build_hamiltonian(const SystemParams& p);

/// -i[H, .] plus the Lindblad dissipator with jumps sqrt(2 gamma_i)|g><i| and sqrt(2 Gamma_i)|i><e|.
Liouvillian build_liouvillian(const SystemParams& p);

/// Same dissipator, caller-supplied Hamiltonian. Used by the validation suite to mutate conventions.
Liouvillian build_liouvillian(const SystemParams& p, const Matrix4c& hamiltonian);

/// Solves L vec(rho) = 0 with the rho_gg row replaced by Tr rho = 1 (dense LU, partial pivoting).
/// Throws SingularSystem when the condition estimate exceeds 1e14.
DensityMatrix steady_state(const SystemParams& p);
DensityMatrix steady_state(const Liouvillian& liouvillian);

/// max |L vec(rho)|
double residual(const Liouvillian& liouvillian, const DensityMatrix& rho);

/// Classical RK4 integration of d rho/dt = L rho from rho0 up to t_final.
/// Throws StepTooLarge once any |rho_ij| exceeds 10.
DensityMatrix time_evolve(const SystemParams& p, const DensityMatrix& rho0, double t_final, double dt);
DensityMatrix time_evolve(const Liouvillian& liouvillian, const DensityMatrix& rho0, double t_final, double dt);

/// 0.01 / max(1, largest parameter magnitude).
double recommended_time_step(const SystemParams& p);

} // namespace mor
