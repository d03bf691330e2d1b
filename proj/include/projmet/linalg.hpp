#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "projmet/field.hpp"

namespace projmet {

// Dense vector over one field, coordinates as canonical encodings.
struct FqVector {
    Field field;
    std::vector<int> c;

    int size() const { return (int)c.size(); }
    bool is_zero() const {
        for (int x : c)
            if (x) return false;
        return true;
    }
    friend bool operator==(const FqVector& a, const FqVector& b) {
        return a.field->same(*b.field) && a.c == b.c;
    }
    friend bool operator!=(const FqVector& a, const FqVector& b) { return !(a == b); }
};

FqVector zero_vector(const Field& f, int n);
FqVector unit_vector(const Field& f, int n, int i);
FqVector add(const FqVector& a, const FqVector& b);
FqVector sub(const FqVector& a, const FqVector& b);
FqVector scale(int lambda, const FqVector& v);
int hamming_weight(const FqVector& v);

// Bijection F_q^n <-> [0, q^n): coordinate 0 is the most significant base-q
// digit, so index order equals lexicographic order on coordinate tuples.
std::uint64_t rank_index(const FqVector& v);
FqVector vector_from_index(const Field& f, int n, std::uint64_t idx);

// Dense row-major matrix over one field.
struct FqMatrix {
    Field field;
    int rows = 0, cols = 0;
    std::vector<int> a;

    static FqMatrix zero(const Field& f, int r, int c) { return {f, r, c, std::vector<int>((size_t)r * c, 0)}; }
    static FqMatrix identity(const Field& f, int n);
    static FqMatrix from_rows(const Field& f, const std::vector<FqVector>& rows, int ncols = -1);

    int& at(int r, int c) { return a[(size_t)r * cols + c]; }
    int at(int r, int c) const { return a[(size_t)r * cols + c]; }
    FqVector row(int r) const;
    std::vector<FqVector> row_list() const;
    friend bool operator==(const FqMatrix& x, const FqMatrix& y) {
        return x.field->same(*y.field) && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

FqMatrix transpose(const FqMatrix& m);
FqMatrix matmul(const FqMatrix& x, const FqMatrix& y);
// y * M for a row vector y of length M.rows.
FqVector apply_rows(const FqVector& y, const FqMatrix& m);
// M * x for a column vector x of length M.cols (result length M.rows).
FqVector apply_cols(const FqMatrix& m, const FqVector& x);

struct RrefResult {
    FqMatrix mat;
    int rank = 0;
    std::vector<int> pivots; // pivot column per pivot row
};

// Reduced row echelon form with deterministic pivoting (leftmost nonzero
// column, first available row), so results are canonical.
RrefResult rref(const FqMatrix& m);
int rank(const FqMatrix& m);

// Basis of the right kernel {x : M x = 0}, one vector per row, in the
// canonical free-variable order.  May have zero rows.
FqMatrix kernel_basis(const FqMatrix& m);

bool in_span(const std::vector<FqVector>& vectors, const FqVector& x);

// Coefficients c with sum_i c_i * rows_i = target, free variables set to 0;
// nullopt when target is outside the row span.
std::optional<std::vector<int>> solve_rows(const std::vector<FqVector>& rows, const FqVector& target);

// Inverse of a square matrix; throws Error when singular.
FqMatrix inverse(const FqMatrix& m);

// All q^k elements of the span, each exactly once, in rank-index order.
// The empty basis yields {0}.  Throws Error when the basis rows are dependent.
std::vector<FqVector> enumerate_subspace(const Field& f, int n, const std::vector<FqVector>& basis,
                                         const Budget& budget = {});
inline std::vector<FqVector> enumerate_subspace(const std::vector<FqVector>& basis,
                                                const Budget& budget = {}) {
    if (basis.empty()) throw Error("ambient dimension unknown for an empty basis");
    return enumerate_subspace(basis[0].field, basis[0].size(), basis, budget);
}

} // namespace projmet
