#pragma once

#include <optional>
#include <span>

#include "enlarge/matrix.hpp"

// Field-specific dense kernels. Every routine has an exact overload (rational
// Gauss-Jordan, no rounding) and a float overload (SVD / symmetric
// eigensolver with the relative tolerance kTau).
namespace enlarge::linalg {

/// Canonical basis of the row span. Exact: reduced row echelon form with unit
/// pivots. Float: orthonormal rows obtained from the orthogonal projector onto
/// the span by pivoted Gram-Schmidt, so the result depends only on the span.
Matrix<Rational> row_basis(const Matrix<Rational>& rows);
Matrix<double> row_basis(const Matrix<double>& rows);

/// Canonical basis (as in row_basis) of {v : m v = 0}; `cols` fixes the ambient
/// dimension when m has no rows.
Matrix<Rational> kernel(const Matrix<Rational>& m, std::size_t cols);
Matrix<double> kernel(const Matrix<double>& m, std::size_t cols);

/// `basis` must be a canonical basis produced by row_basis/kernel.
bool in_row_span(const Matrix<Rational>& basis, std::span<const Rational> v);
bool in_row_span(const Matrix<double>& basis, std::span<const double> v);

std::size_t rank(const Matrix<Rational>& m);
std::size_t rank(const Matrix<double>& m);

/// Positive semidefiniteness of a symmetric matrix. Exact: symmetric pivoting
/// on positive diagonal entries. Float: lambda_min >= -tau (1 + |lambda|_max).
bool is_psd(const Matrix<Rational>& sym);
bool is_psd(const Matrix<double>& sym);

/// For symmetric `sym`: when c lies in range(sym) returns z with sym z = c
/// (minimum-norm z in float mode), otherwise nullopt. Float range test is
/// ||sym sym^+ c - c|| <= tau (1 + ||c||).
std::optional<Vec<Rational>> solve_in_range(const Matrix<Rational>& sym, const Vec<Rational>& c);
std::optional<Vec<double>> solve_in_range(const Matrix<double>& sym, const Vec<double>& c);

/// Eigenvalues of a symmetric matrix, ascending (float only; used for reporting).
Vec<double> symmetric_eigenvalues(const Matrix<double>& sym);

}  // namespace enlarge::linalg
