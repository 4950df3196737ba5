#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace egoprune {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 identity();
    static Mat3 translation(double tx, double ty);

    double& operator()(int r, int c) { return m[static_cast<size_t>(r) * 3 + c]; }
    double operator()(int r, int c) const { return m[static_cast<size_t>(r) * 3 + c]; }

    Mat3 operator*(const Mat3& rhs) const;

    double det() const;
    double frobenius_norm() const;

    /// Adjugate-based inverse; throws Errc::singular_matrix when |det| is
    /// below 1e-12 relative to the matrix scale.
    Mat3 inverse() const;
};

/// Cosine similarity, clamped to [-1, 1]. A vector whose norm is below 1e-12
/// is treated as similar to nothing: the result is 0. Throws on d mismatch.
double cosine_sim(std::span<const double> a, std::span<const double> b);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

/// Eigen-decomposition of a symmetric 9x9 matrix (row-major, 81 entries) via
/// cyclic Jacobi sweeps. Eigenvalues ascend; eigenvectors(k) is the unit
/// eigenvector for values[k].
struct EigenSym9 {
    std::array<double, 9> values{};
    std::array<double, 81> vectors{};  // column k = eigenvector k

    std::array<double, 9> eigenvector(int k) const;
};

EigenSym9 jacobi_eigen_sym9(const std::array<double, 81>& a);

/// Unit-norm h minimizing ||A h||_2 for a stacked constraint matrix A of
/// shape 2M x 9 (row-major), computed as the smallest eigenvector of A^T A.
/// Throws Errc::insufficient_data when M < 4 and Errc::degenerate_geometry
/// when the smallest eigenvalue is not isolated (rank-deficient system).
std::array<double, 9> null_vector_9(std::span<const double> a_rows, int n_rows);

}  // namespace egoprune
