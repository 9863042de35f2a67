#include "fae/simulator.hpp"

#include "fae/errors.hpp"

#include <cmath>
#include <complex>

namespace fae::sim {

namespace {

Matrix ry(double half_angle_sin, double half_angle_cos) {
    // Real rotation with column 0 = (cos, sin).
    Matrix m(2, 2);
    m << half_angle_cos, -half_angle_sin,
         half_angle_sin, half_angle_cos;
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void check_register(int n) {
    if (n < 1 || n > 3) throw DomainError("register size must be in [1, 3]");
}

Eigen::Index dimension(int n) { return Eigen::Index{1} << (n + 2); }

} // namespace

UnitaryOp build_chi(double theta_a, int n) {
    check_register(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix h(2, 2);
    h << inv_sqrt2, inv_sqrt2,
         inv_sqrt2, -inv_sqrt2;

    Matrix reg = h;
    for (int q = 1; q < n; ++q) reg = kron(reg, h);

    const Matrix a_anc = ry(std::sin(theta_a), std::cos(theta_a));
    const Matrix r_anc = ry(0.25, std::sqrt(15.0) / 4.0);

    return {n, kron(kron(reg, a_anc), r_anc)};
}

Matrix reflect_zero(int n) {
    check_register(n);
    Matrix m = Matrix::Identity(dimension(n), dimension(n));
    m(0, 0) = -1.0;
    return m;
}

Matrix reflect_good(int n) {
    check_register(n);
    Matrix m = Matrix::Identity(dimension(n), dimension(n));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if ((i & 3) == 3) m(i, i) = -1.0;
    }
    return m;
}

UnitaryOp build_grover(const UnitaryOp& chi) {
    const Matrix& x = chi.matrix;
    return {chi.n, x * reflect_zero(chi.n) * x.adjoint() * reflect_good(chi.n)};
}

Vector prepared_state(const UnitaryOp& chi) { return chi.matrix.col(0); }

double good_mass(const Vector& state) {
    double p = 0.0;
    for (Eigen::Index i = 3; i < state.size(); i += 4) p += std::norm(state(i));
    return p;
}

double p11_after(const UnitaryOp& chi, const UnitaryOp& q, std::uint64_t m) {
    Vector psi = prepared_state(chi);
    for (std::uint64_t k = 0; k < m; ++k) psi = q.matrix * psi;
    return good_mass(psi);
}

std::vector<double> p11_sequence(const UnitaryOp& chi, const UnitaryOp& q, std::uint64_t m_max) {
    std::vector<double> out;
    out.reserve(m_max + 1);
    Vector psi = prepared_state(chi);
    out.push_back(good_mass(psi));
    for (std::uint64_t k = 0; k < m_max; ++k) {
        psi = q.matrix * psi;
        out.push_back(good_mass(psi));
    }
    return out;
}

double unitarity_defect(const Matrix& u) {
    const Matrix diff = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
    return diff.cwiseAbs().maxCoeff();
}

} // namespace fae::sim
