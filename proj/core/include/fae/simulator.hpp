#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace fae::sim {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense operator on an n-qubit work register plus two ancillas.
///
/// Basis index layout is (register << 2) | (a << 1) | r, where a is the
/// ancilla written by A and r the attenuation ancilla written by R. The "good"
/// subspace is therefore every index with its two low bits set.
struct UnitaryOp {
    int n = 1;
    Matrix matrix;

    Eigen::Index dim() const noexcept { return matrix.rows(); }
};

/// chi = A (x) R. A puts Hadamards on the register and rotates the A-ancilla so
/// that its |1> branch has amplitude sin(theta_a); R maps |0> to
/// (sqrt(15)/4)|0> + (1/4)|1>. Requires 1 <= n <= 3.
UnitaryOp build_chi(double theta_a, int n = 1);

/// Q = chi (I - 2|0><0|) chi^dagger (I - 2 I_n (x) |11><11|).
UnitaryOp build_grover(const UnitaryOp& chi);

/// I - 2|0><0| on the full register.
Matrix reflect_zero(int n);

/// I - 2 I_n (x) |11><11|.
Matrix reflect_good(int n);

/// chi |0...0>.
Vector prepared_state(const UnitaryOp& chi);

/// Probability mass on the good subspace.
double good_mass(const Vector& state);

/// Probability of reading 11 on the ancillas after m applications of q to chi|0>.
double p11_after(const UnitaryOp& chi, const UnitaryOp& q, std::uint64_t m);

/// p11_after for every m in [0, m_max], sharing the state evolution.
std::vector<double> p11_sequence(const UnitaryOp& chi, const UnitaryOp& q, std::uint64_t m_max);

/// Largest entrywise deviation of U U^dagger from the identity.
double unitarity_defect(const Matrix& u);

} // namespace fae::sim
