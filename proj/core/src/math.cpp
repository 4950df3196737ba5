#include "egoprune/math.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "egoprune/error.hpp"

namespace egoprune {

Mat3 Mat3::identity() {
    Mat3 r;
    r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return r;
}

Mat3 Mat3::translation(double tx, double ty) {
    Mat3 r = identity();
    r(0, 2) = tx;
    r(1, 2) = ty;
    return r;
}

Mat3 Mat3::operator*(const Mat3& rhs) const {
    Mat3 out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) {
                acc += (*this)(r, k) * rhs(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

double Mat3::det() const {
    const auto& a = m;
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

double Mat3::frobenius_norm() const {
    double s = 0.0;
    for (double v : m) {
        s += v * v;
    }
    return std::sqrt(s);
}

Mat3 Mat3::inverse() const {
    const double d = det();
    const double scale = frobenius_norm();
    if (std::abs(d) <= 1e-12 * std::max(1.0, scale * scale * scale)) {
        fail(Errc::singular_matrix, "Mat3::inverse: matrix is singular (det=" + std::to_string(d) + ")");
    }
    const auto& a = m;
    Mat3 inv;
    inv.m = {
        a[4] * a[8] - a[5] * a[7], a[2] * a[7] - a[1] * a[8], a[1] * a[5] - a[2] * a[4],
        a[5] * a[6] - a[3] * a[8], a[0] * a[8] - a[2] * a[6], a[2] * a[3] - a[0] * a[5],
        a[3] * a[7] - a[4] * a[6], a[1] * a[6] - a[0] * a[7], a[0] * a[4] - a[1] * a[3],
    };
    for (double& v : inv.m) {
        v /= d;
    }
    return inv;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double norm(std::span<const double> a) {
    return std::sqrt(dot(a, a));
}

double cosine_sim(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        fail(Errc::dimension_mismatch, "cosine_sim: dimension mismatch (" + std::to_string(a.size()) +
                                           " vs " + std::to_string(b.size()) + ")");
    }
    const double na = norm(a);
    const double nb = norm(b);
    if (na < 1e-12 || nb < 1e-12) {
        return 0.0;
    }
    const double c = dot(a, b) / (na * nb);
    return std::clamp(c, -1.0, 1.0);
}

std::array<double, 9> EigenSym9::eigenvector(int k) const {
    std::array<double, 9> v;
    for (int r = 0; r < 9; ++r) {
        v[r] = vectors[static_cast<size_t>(r) * 9 + k];
    }
    return v;
}

EigenSym9 jacobi_eigen_sym9(const std::array<double, 81>& input) {
    constexpr int n = 9;
    std::array<double, 81> a = input;
    std::array<double, 81> v{};
    for (int i = 0; i < n; ++i) {
        v[static_cast<size_t>(i) * n + i] = 1.0;
    }

    auto at = [&](std::array<double, 81>& mm, int r, int c) -> double& {
        return mm[static_cast<size_t>(r) * n + c];
    };

    double scale = 0.0;
    for (double x : input) {
        scale += x * x;
    }
    scale = std::sqrt(scale);
    const double stop = (scale > 0.0 ? scale : 1.0) * 1e-15;

    constexpr int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                off += at(a, p, q) * at(a, p, q);
            }
        }
        if (std::sqrt(2.0 * off) <= stop) {
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double app = at(a, p, p);
                const double aqq = at(a, q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = at(a, k, p);
                    const double akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(a, p, k);
                    const double aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = at(v, k, p);
                    const double vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    // Sort eigenpairs ascending by value.
    std::array<int, 9> order;
    for (int i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return at(a, i, i) < at(a, j, j); });

    EigenSym9 out;
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        out.values[k] = at(a, src, src);
        for (int r = 0; r < n; ++r) {
            out.vectors[static_cast<size_t>(r) * n + k] = at(v, r, src);
        }
    }
    return out;
}

std::array<double, 9> null_vector_9(std::span<const double> a_rows, int n_rows) {
    if (n_rows < 8 || n_rows % 2 != 0) {
        fail(Errc::insufficient_data,
             "null_vector_9: need at least 8 constraint rows (4 correspondences), got " +
                 std::to_string(n_rows));
    }
    if (a_rows.size() != static_cast<size_t>(n_rows) * 9) {
        fail(Errc::dimension_mismatch, "null_vector_9: row buffer size does not match n_rows");
    }

    // Accumulate the 9x9 normal matrix A^T A.
    std::array<double, 81> ata{};
    for (int r = 0; r < n_rows; ++r) {
        const double* row = a_rows.data() + static_cast<size_t>(r) * 9;
        for (int i = 0; i < 9; ++i) {
            for (int j = i; j < 9; ++j) {
                ata[static_cast<size_t>(i) * 9 + j] += row[i] * row[j];
            }
        }
    }
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < i; ++j) {
            ata[static_cast<size_t>(i) * 9 + j] = ata[static_cast<size_t>(j) * 9 + i];
        }
    }

    const EigenSym9 eig = jacobi_eigen_sym9(ata);
    const double lambda_max = std::max(std::abs(eig.values[8]), 1e-300);
    // The null vector is only well defined when the smallest eigenvalue is
    // isolated; two near-zero eigenvalues mean a rank-deficient (e.g.
    // collinear) configuration.
    if (eig.values[1] <= 1e-10 * lambda_max) {
        fail(Errc::degenerate_geometry,
             "null_vector_9: degenerate configuration (smallest eigenvalue is not unique)");
    }
    return eig.eigenvector(0);
}

}  // namespace egoprune
