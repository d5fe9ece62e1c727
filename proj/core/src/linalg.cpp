#include "wqed/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "wqed/errors.hpp"

namespace wqed::linalg {
namespace {

struct Lu {
    CMatrix m;
    std::vector<std::size_t> piv;
    bool singular = false;
};

Lu factor(CMatrix a) {
    const std::size_t n = a.n;
    Lu lu{std::move(a), {}, false};
    lu.piv.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu.m.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu.m.at(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        lu.piv[k] = p;
        if (best == 0.0) {
            lu.singular = true;
            return lu;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu.m.at(k, j), lu.m.at(p, j));
        }
        const Complex pivot = lu.m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex l = lu.m.at(i, k) / pivot;
            lu.m.at(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) {
                lu.m.at(i, j) -= l * lu.m.at(k, j);
            }
        }
    }
    return lu;
}

std::vector<Complex> lu_solve(const Lu& lu, std::span<const Complex> b) {
    const std::size_t n = lu.m.n;
    std::vector<Complex> x(b.begin(), b.end());
    // Rows were interchanged in full during factorization, so the whole
    // permutation applies to the right-hand side up front.
    for (std::size_t k = 0; k < n; ++k) {
        if (lu.piv[k] != k) std::swap(x[k], x[lu.piv[k]]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i) x[i] -= lu.m.at(i, k) * x[k];
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu.m.at(i, j) * x[j];
        x[i] /= lu.m.at(i, i);
    }
    return x;
}

}  // namespace

double norm1(const CMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < m.n; ++i) col += std::abs(m.at(i, j));
        best = std::max(best, col);
    }
    return best;
}

double rcond(const CMatrix& a) {
    const Lu lu = factor(a);
    if (lu.singular) return 0.0;
    const std::size_t n = a.n;
    double inv_norm = 0.0;
    std::vector<Complex> e(n, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const auto col = lu_solve(lu, e);
        e[j] = 0.0;
        double sum = 0.0;
        for (const auto& v : col) sum += std::abs(v);
        inv_norm = std::max(inv_norm, sum);
    }
    const double a_norm = norm1(a);
    if (a_norm == 0.0 || inv_norm == 0.0) return 0.0;
    return 1.0 / (a_norm * inv_norm);
}

std::vector<Complex> solve(const CMatrix& a, std::span<const Complex> b, double rcond_min) {
    if (a.n == 0 || b.size() != a.n) throw std::domain_error("linalg::solve: size mismatch");
    if (rcond_min > 0.0) {
        const double rc = rcond(a);
        if (rc < rcond_min) {
            throw NumericsError("linalg::solve: singular system (rcond " +
                                std::to_string(rc) + " below " + std::to_string(rcond_min) +
                                "); the chain has an exact dark-state degeneracy");
        }
    }
    const Lu lu = factor(a);
    if (lu.singular) throw NumericsError("linalg::solve: exactly singular matrix");
    return lu_solve(lu, b);
}

}  // namespace wqed::linalg
