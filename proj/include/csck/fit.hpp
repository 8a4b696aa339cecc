#ifndef CSCK_FIT_HPP
#define CSCK_FIT_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "csck/rational.hpp"

namespace csck {

struct FitResult {
    std::vector<real> coefficients;
    real rms_residual = 0;
    real condition = 0;   ///< max/min |R_ii| of the column-equilibrated QR
};

/// Linear least squares via Householder QR with column equilibration.
/// `design` is row-major, rows >= cols required.
inline FitResult least_squares(std::vector<std::vector<real>> design, std::vector<real> rhs) {
    const size_t rows = design.size();
    if (rows == 0 || rhs.size() != rows)
        throw std::invalid_argument("least_squares: empty or mismatched system");
    const size_t cols = design[0].size();
    if (cols == 0 || rows < cols)
        throw std::invalid_argument("least_squares: need rows >= cols >= 1");

    std::vector<real> scale(cols, 0);
    for (size_t j = 0; j < cols; ++j) {
        for (size_t i = 0; i < rows; ++i) scale[j] = std::max(scale[j], std::fabs(design[i][j]));
        if (scale[j] == 0) scale[j] = 1;
        for (size_t i = 0; i < rows; ++i) design[i][j] /= scale[j];
    }

    // Householder QR, applying reflectors to rhs as we go
    for (size_t j = 0; j < cols; ++j) {
        real norm = 0;
        for (size_t i = j; i < rows; ++i) norm += design[i][j] * design[i][j];
        norm = std::sqrt(norm);
        if (norm == 0) throw std::invalid_argument("least_squares: rank-deficient design");
        if (design[j][j] > 0) norm = -norm;
        real vjj = design[j][j] - norm;
        std::vector<real> v(rows - j);
        v[0] = vjj;
        for (size_t i = j + 1; i < rows; ++i) v[i - j] = design[i][j];
        real vnorm2 = 0;
        for (real x : v) vnorm2 += x * x;
        design[j][j] = norm;
        for (size_t i = j + 1; i < rows; ++i) design[i][j] = 0;
        if (vnorm2 == 0) continue;
        for (size_t k = j + 1; k < cols; ++k) {
            real dot = 0;
            for (size_t i = j; i < rows; ++i) dot += v[i - j] * design[i][k];
            real f = 2 * dot / vnorm2;
            for (size_t i = j; i < rows; ++i) design[i][k] -= f * v[i - j];
        }
        real dot = 0;
        for (size_t i = j; i < rows; ++i) dot += v[i - j] * rhs[i];
        real f = 2 * dot / vnorm2;
        for (size_t i = j; i < rows; ++i) rhs[i] -= f * v[i - j];
    }

    FitResult res;
    res.coefficients.assign(cols, 0);
    for (size_t jj = cols; jj-- > 0;) {
        real s = rhs[jj];
        for (size_t k = jj + 1; k < cols; ++k) s -= design[jj][k] * res.coefficients[k];
        res.coefficients[jj] = s / design[jj][jj];
    }
    real rmax = 0, rmin = 0;
    for (size_t j = 0; j < cols; ++j) {
        real d = std::fabs(design[j][j]);
        rmax = std::max(rmax, d);
        rmin = (j == 0) ? d : std::min(rmin, d);
    }
    res.condition = rmin > 0 ? rmax / rmin : INFINITY;
    real ss = 0;
    for (size_t i = cols; i < rows; ++i) ss += rhs[i] * rhs[i];
    res.rms_residual = std::sqrt(ss / static_cast<real>(rows));
    for (size_t j = 0; j < cols; ++j) res.coefficients[j] /= scale[j];
    return res;
}

} // namespace csck

#endif
