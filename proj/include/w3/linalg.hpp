#pragma once

#include <cstddef>
#include <vector>

#include "w3/engine.hpp"
#include "w3/rational.hpp"
#include "w3/state.hpp"

namespace w3 {

// Dense exact matrix whose columns are coordinate vectors of mode images:
// column j holds apply_mode(op, col_basis[j]) expressed in row_basis.
struct ExactMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> entries;  // row-major
    std::vector<NormalMonomial> row_basis;
    std::vector<NormalMonomial> col_basis;

    Rat& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Matrix of apply_mode(op, .) from the weight-h basis to the weight-(h-n)
// basis, both in the fixed enumerate_basis order.
inline ExactMatrix mode_matrix(Mode op, int h) {
    ExactMatrix M;
    M.col_basis = enumerate_basis(h);
    M.row_basis = enumerate_basis(h - op.index);
    M.rows = M.row_basis.size();
    M.cols = M.col_basis.size();
    M.entries.assign(M.rows * M.cols, Rat(0));
    std::map<NormalMonomial, std::size_t> row_index;
    for (std::size_t i = 0; i < M.rows; ++i) row_index[M.row_basis[i]] = i;
    for (std::size_t jcol = 0; jcol < M.cols; ++jcol) {
        StateVector img = apply_mode(op, M.col_basis[jcol]);
        for (const auto& [mono, c] : img.terms()) M.at(row_index.at(mono), jcol) = c;
    }
    return M;
}

// Stacks matrices with a common column basis.
inline ExactMatrix vstack(const std::vector<ExactMatrix>& blocks) {
    ExactMatrix M;
    M.cols = blocks.empty() ? 0 : blocks.front().cols;
    M.col_basis = blocks.empty() ? std::vector<NormalMonomial>{} : blocks.front().col_basis;
    for (const auto& b : blocks) M.rows += b.rows;
    M.entries.reserve(M.rows * M.cols);
    for (const auto& b : blocks) {
        M.entries.insert(M.entries.end(), b.entries.begin(), b.entries.end());
        M.row_basis.insert(M.row_basis.end(), b.row_basis.begin(), b.row_basis.end());
    }
    return M;
}

// Basis of the right kernel, one coordinate vector per free column, computed
// by fraction-free (Bareiss) elimination with first-nonzero pivoting.
// Deterministic for a fixed column order.
inline std::vector<std::vector<Rat>> kernel(const ExactMatrix& M) {
    const std::size_t rows = M.rows, cols = M.cols;
    // Clear denominators row by row; row scaling leaves the kernel unchanged.
    std::vector<std::vector<Int>> A(rows, std::vector<Int>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Int lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const Int& den = M.at(r, c).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Rat& q = M.at(r, c);
            A[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }

    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    Int prev = 1;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < cols && prow < rows; ++col) {
        std::size_t sel = prow;
        while (sel < rows && A[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(A[prow], A[sel]);
        const Int piv = A[prow][col];
        for (std::size_t r = prow + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                Int t = piv * A[r][c] - A[r][col] * A[prow][c];
                mpz_divexact(A[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            A[r][col] = 0;
        }
        prev = piv;
        pivot_cols.push_back(col);
        pivot_rows.push_back(prow);
        ++prow;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> ker;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (std::size_t i = pivot_cols.size(); i-- > 0;) {
            const std::size_t r = pivot_rows[i], pc = pivot_cols[i];
            Rat s(0);
            for (std::size_t c = pc + 1; c < cols; ++c)
                if (v[c] != 0 && A[r][c] != 0) s += Rat(A[r][c]) * v[c];
            v[pc] = -s / Rat(A[r][pc]);
        }
        ker.push_back(std::move(v));
    }
    return ker;
}

}  // namespace w3
