// linalg.hpp — Dense complex linear solves for the small chain systems

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wqed::linalg {

using Complex = std::complex<double>;

// Row-major dense complex matrix, sized for N <= a few dozen qubits.
struct CMatrix {
    std::size_t n = 0;
    std::vector<Complex> a;

    CMatrix() = default;
    explicit CMatrix(std::size_t size) : n(size), a(size * size, Complex{0.0, 0.0}) {}

    Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// 1-norm of the matrix (max column sum).
double norm1(const CMatrix& m);

// Solves A x = b by LU with partial pivoting. rcond_min > 0 additionally
// estimates the reciprocal 1-norm condition number (exactly, via the
// inverse; N is tiny) and throws NumericsError below the floor — an exact
// dark-state degeneracy makes the system singular.
std::vector<Complex> solve(const CMatrix& a, std::span<const Complex> b,
                           double rcond_min = 0.0);

// Reciprocal condition estimate 1 / (||A||_1 ||A^-1||_1); 0 for singular A.
double rcond(const CMatrix& a);

}  // namespace wqed::linalg
