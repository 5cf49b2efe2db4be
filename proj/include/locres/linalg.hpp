#pragma once

#include <exception>
#include <optional>
#include <vector>

#include "locres/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace locres {

// Execution policy for the data-parallel kernels. Serial is the reference;
// Parallel must produce identical results (the row updates are independent).
enum class Exec { Serial, Parallel };

template <class K>
struct Matrix {
    int nr = 0, nc = 0;
    std::vector<K> a;
    Matrix() = default;
    Matrix(int r, int c) : nr(r), nc(c), a((std::size_t)r * c, K(0)) {}
    K& at(int r, int c) { return a[(std::size_t)r * nc + c]; }
    const K& at(int r, int c) const { return a[(std::size_t)r * nc + c]; }
};

// In-place reduced row echelon form over an exact field. Pivot: first row,
// top-down, whose entry in the current column is not identically zero.
// Returns the pivot columns, ascending.
template <class K>
std::vector<int> rref(Matrix<K>& M, Exec exec = Exec::Parallel) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.nc && r < M.nr; ++c) {
        int p = -1;
        for (int i = r; i < M.nr; ++i) {
            if (!(M.at(i, c) == K(0))) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < M.nc; ++j) std::swap(M.at(p, j), M.at(r, j));
        K piv_inv = M.at(r, c).inv();
        for (int j = c; j < M.nc; ++j) M.at(r, j) = M.at(r, j) * piv_inv;
        const bool par = exec == Exec::Parallel;
        std::exception_ptr fail;
#pragma omp parallel for schedule(dynamic) if (par)
        for (int i = 0; i < M.nr; ++i) {
            try {
                if (i == r) continue;
                K f = M.at(i, c);
                if (f == K(0)) continue;
                for (int j = c; j < M.nc; ++j) M.at(i, j) = M.at(i, j) - f * M.at(r, j);
            } catch (...) {
#pragma omp critical
                if (!fail) fail = std::current_exception();
            }
        }
        if (fail) std::rethrow_exception(fail);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
struct LinSolve {
    bool consistent = false;
    bool unique = false;
    std::vector<K> x;  // one solution, free variables set to zero
};

// Solve A x = b exactly.
template <class K>
LinSolve<K> solve_linear(const Matrix<K>& A, const std::vector<K>& b, Exec exec = Exec::Parallel) {
    if ((int)b.size() != A.nr) throw Error("rhs size mismatch");
    Matrix<K> M(A.nr, A.nc + 1);
    for (int i = 0; i < A.nr; ++i) {
        for (int j = 0; j < A.nc; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.nc) = b[i];
    }
    std::vector<int> pivots = rref(M, exec);
    LinSolve<K> out;
    if (!pivots.empty() && pivots.back() == A.nc) return out;  // 0 = 1 row
    out.consistent = true;
    out.unique = (int)pivots.size() == A.nc;
    out.x.assign(A.nc, K(0));
    for (int k = 0; k < (int)pivots.size(); ++k) out.x[pivots[k]] = M.at(k, A.nc);
    return out;
}

// Incremental echelon form with expression tracking: feeds vectors one at a
// time; a dependent vector comes back as its expansion over the previously
// accepted ones.
template <class K>
class Echelon {
  public:
    explicit Echelon(int dim) : dim_(dim) {}

    int accepted() const { return (int)rows_.size(); }

    // nullopt: independent, vector kept. Otherwise: coefficients over the
    // accepted vectors, in acceptance order.
    std::optional<std::vector<K>> insert(std::vector<K> v) {
        if ((int)v.size() != dim_) throw Error("echelon dimension mismatch");
        std::vector<K> expr(rows_.size(), K(0));
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Row& row = rows_[k];
            K f = v[row.pivot];
            if (f == K(0)) continue;
            for (int j = 0; j < dim_; ++j) v[j] = v[j] - f * row.vec[j];
            for (std::size_t t = 0; t < row.combo.size(); ++t)
                expr[t] += f * row.combo[t];
        }
        int pivot = -1;
        for (int j = 0; j < dim_; ++j) {
            if (!(v[j] == K(0))) {
                pivot = j;
                break;
            }
        }
        if (pivot < 0) return expr;
        K d_inv = v[pivot].inv();
        for (int j = 0; j < dim_; ++j) v[j] = v[j] * d_inv;
        std::vector<K> combo(rows_.size() + 1, K(0));
        for (std::size_t t = 0; t < expr.size(); ++t) combo[t] = -expr[t] * d_inv;
        combo[rows_.size()] = d_inv;
        rows_.push_back({std::move(v), std::move(combo), pivot});
        return std::nullopt;
    }

  private:
    struct Row {
        std::vector<K> vec;    // pivot entry normalized to 1
        std::vector<K> combo;  // vec as a combination of accepted originals
        int pivot;
    };
    int dim_;
    std::vector<Row> rows_;
};

}  // namespace locres
