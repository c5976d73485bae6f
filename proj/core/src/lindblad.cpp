#include "mor/lindblad.hpp"

#include "mor/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <string>

namespace mor {

namespace {

constexpr int g = index(Level::g);
constexpr int l1 = index(Level::one);
constexpr int l2 = index(Level::two);
constexpr int e = index(Level::e);

constexpr double kMaxCondition = 1e14;
constexpr double kDivergenceBound = 10.0;

/// vec(A X B) = (B^T kron A) vec(X)
void add_sandwich(Matrix16c& out, const Matrix4c& left, const Matrix4c& right, Complex scale)
{
    for (int a = 0; a < kNumLevels; ++a)
        for (int b = 0; b < kNumLevels; ++b) {
            const Complex rba = right(b, a);
            if (rba == Complex{})
                continue;
            for (int c = 0; c < kNumLevels; ++c)
                for (int d = 0; d < kNumLevels; ++d)
                    out(c + kNumLevels * a, d + kNumLevels * b) += scale * rba * left(c, d);
        }
}

void add_jump(Matrix16c& out, const Matrix4c& jump, double rate)
{
    const Matrix4c id = Matrix4c::Identity();
    const Matrix4c number = jump.adjoint() * jump;
    add_sandwich(out, jump, jump.adjoint(), rate);
    add_sandwich(out, number, id, -0.5 * rate);
    add_sandwich(out, id, number, -0.5 * rate);
}

Matrix4c transition(int to, int from)
{
    Matrix4c m = Matrix4c::Zero();
    m(to, from) = 1.0;
    return m;
}

} // namespace

Vector16c vectorize(const Matrix4c& rho)
{
    Vector16c v;
    for (int col = 0; col < kNumLevels; ++col)
        for (int row = 0; row < kNumLevels; ++row)
            v(vec_index(row, col)) = rho(row, col);
    return v;
}

Matrix4c unvectorize(const Vector16c& v)
{
    Matrix4c rho;
    for (int col = 0; col < kNumLevels; ++col)
        for (int row = 0; row < kNumLevels; ++row)
            rho(row, col) = v(vec_index(row, col));
    return rho;
}

Complex Liouvillian::trace_derivative(const Matrix4c& rho) const
{
    const Vector16c d = matrix * vectorize(rho);
    Complex sum{};
    for (int k = 0; k < kNumLevels; ++k)
        sum += d(vec_index(k, k));
    return sum;
}

Matrix4c build_hamiltonian(const SystemParams& p)
{
    Matrix4c h = Matrix4c::Zero();
    h(l1, l1) = p.delta + p.Omega;
    h(l2, l2) = p.delta - p.Omega;
    h(e, e) = p.delta + p.Delta;

    h(l1, g) = -p.g1;
    h(l2, g) = -p.g2;
    h(e, l1) = -p.G1;
    h(e, l2) = -p.G2;
    h(g, l1) = std::conj(h(l1, g));
    h(g, l2) = std::conj(h(l2, g));
    h(l1, e) = std::conj(h(e, l1));
    h(l2, e) = std::conj(h(e, l2));
    return h;
}

Liouvillian build_liouvillian(const SystemParams& p)
{
    return build_liouvillian(p, build_hamiltonian(p));
}

Liouvillian build_liouvillian(const SystemParams& p, const Matrix4c& hamiltonian)
{
    p.validate();
    const Complex minus_i(0.0, -1.0);
    const Matrix4c id = Matrix4c::Identity();

    Liouvillian l{Matrix16c::Zero()};
    add_sandwich(l.matrix, hamiltonian, id, minus_i);
    add_sandwich(l.matrix, id, hamiltonian, -minus_i);

    add_jump(l.matrix, transition(g, l1), 2.0 * p.gamma1);
    add_jump(l.matrix, transition(g, l2), 2.0 * p.gamma2);
    add_jump(l.matrix, transition(l1, e), 2.0 * p.Gamma1);
    add_jump(l.matrix, transition(l2, e), 2.0 * p.Gamma2);
    return l;
}

DensityMatrix steady_state(const SystemParams& p)
{
    return steady_state(build_liouvillian(p));
}

DensityMatrix steady_state(const Liouvillian& liouvillian)
{
    Matrix16c a = liouvillian.matrix;
    const int constraint_row = vec_index(g, g);
    a.row(constraint_row).setZero();
    for (int k = 0; k < kNumLevels; ++k)
        a(constraint_row, vec_index(k, k)) = 1.0;

    Vector16c rhs = Vector16c::Zero();
    rhs(constraint_row) = 1.0;

    const Eigen::PartialPivLU<Matrix16c> lu(a);
    // the rcond estimate is unreliable once a pivot is exactly zero, so also bound the pivot spread
    const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double pivot_spread = pivots.maxCoeff() / pivots.minCoeff();
    const double rcond = lu.rcond();
    const double condition = std::max(rcond > 0.0 ? 1.0 / rcond : INFINITY, pivot_spread);
    if (!(condition < kMaxCondition))
        throw SingularSystem("steady-state system is singular (condition estimate " + std::to_string(condition) + ")",
                             condition);

    Matrix4c rho = unvectorize(lu.solve(rhs));
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return DensityMatrix(rho);
}

double residual(const Liouvillian& liouvillian, const DensityMatrix& rho)
{
    return liouvillian.apply(vectorize(rho.matrix())).cwiseAbs().maxCoeff();
}

DensityMatrix time_evolve(const SystemParams& p, const DensityMatrix& rho0, double t_final, double dt)
{
    return time_evolve(build_liouvillian(p), rho0, t_final, dt);
}

DensityMatrix time_evolve(const Liouvillian& liouvillian, const DensityMatrix& rho0, double t_final, double dt)
{
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw InvalidArgument("time step must be positive and finite");
    if (!(t_final >= 0.0) || !std::isfinite(t_final))
        throw InvalidArgument("t_final must be non-negative and finite");

    // For an autonomous linear system one RK4 step is the degree-4 Taylor polynomial of exp(h L).
    auto propagator = [&](double h) {
        const Matrix16c hl = h * liouvillian.matrix;
        const Matrix16c hl2 = hl * hl;
        const Matrix16c hl3 = hl2 * hl;
        const Matrix16c hl4 = hl3 * hl;
        return Matrix16c(Matrix16c::Identity() + hl + hl2 / 2.0 + hl3 / 6.0 + hl4 / 24.0);
    };

    const auto full_steps = static_cast<long long>(std::floor(t_final / dt));
    const double remainder = t_final - static_cast<double>(full_steps) * dt;
    const Matrix16c step = propagator(dt);

    Vector16c state = vectorize(rho0.matrix());
    auto check = [&](long long n) {
        if (!(state.cwiseAbs().maxCoeff() <= kDivergenceBound))
            throw StepTooLarge("RK4 diverged after " + std::to_string(n) + " steps of dt = " + std::to_string(dt));
    };

    for (long long n = 0; n < full_steps; ++n) {
        state = step * state;
        if ((n & 1023) == 0)
            check(n);
    }
    if (remainder > 1e-15 * std::max(1.0, t_final))
        state = propagator(remainder) * state;
    check(full_steps);
    return DensityMatrix(unvectorize(state));
}

double recommended_time_step(const SystemParams& p)
{
    const double scale = std::max({1.0, p.gamma1, p.gamma2, p.Gamma1, p.Gamma2, std::abs(p.Omega),
                                   std::abs(p.delta), std::abs(p.Delta), std::abs(p.g1), std::abs(p.g2),
                                   std::abs(p.G1), std::abs(p.G2)});
    return 0.01 / scale;
}

} // namespace mor
