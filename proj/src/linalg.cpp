#include "projmet/linalg.hpp"

#include <algorithm>

namespace projmet {

FqVector zero_vector(const Field& f, int n) { return {f, std::vector<int>(n, 0)}; }

FqVector unit_vector(const Field& f, int n, int i) {
    FqVector v = zero_vector(f, n);
    v.c[i] = 1;
    return v;
}

FqVector add(const FqVector& a, const FqVector& b) {
    require_same_field(a.field, b.field);
    if (a.size() != b.size()) throw Error("vector length mismatch");
    FqVector r = a;
    for (int i = 0; i < r.size(); ++i) r.c[i] = a.field->add(a.c[i], b.c[i]);
    return r;
}

FqVector sub(const FqVector& a, const FqVector& b) {
    require_same_field(a.field, b.field);
    if (a.size() != b.size()) throw Error("vector length mismatch");
    FqVector r = a;
    for (int i = 0; i < r.size(); ++i) r.c[i] = a.field->sub(a.c[i], b.c[i]);
    return r;
}

FqVector scale(int lambda, const FqVector& v) {
    FqVector r = v;
    for (int& x : r.c) x = v.field->mul(lambda, x);
    return r;
}

int hamming_weight(const FqVector& v) {
    int w = 0;
    for (int x : v.c) w += (x != 0);
    return w;
}

std::uint64_t rank_index(const FqVector& v) {
    std::uint64_t idx = 0;
    const std::uint64_t q = v.field->q();
    for (int x : v.c) idx = idx * q + (std::uint64_t)x;
    return idx;
}

FqVector vector_from_index(const Field& f, int n, std::uint64_t idx) {
    FqVector v = zero_vector(f, n);
    const std::uint64_t q = f->q();
    for (int i = n - 1; i >= 0; --i) {
        v.c[i] = (int)(idx % q);
        idx /= q;
    }
    return v;
}

FqMatrix FqMatrix::identity(const Field& f, int n) {
    FqMatrix m = zero(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::from_rows(const Field& f, const std::vector<FqVector>& rows, int ncols) {
    int c = ncols >= 0 ? ncols : (rows.empty() ? 0 : rows[0].size());
    FqMatrix m = zero(f, (int)rows.size(), c);
    for (int r = 0; r < m.rows; ++r) {
        require_same_field(f, rows[r].field);
        if (rows[r].size() != c) throw Error("ragged rows");
        for (int j = 0; j < c; ++j) m.at(r, j) = rows[r].c[j];
    }
    return m;
}

FqVector FqMatrix::row(int r) const {
    FqVector v = zero_vector(field, cols);
    for (int j = 0; j < cols; ++j) v.c[j] = at(r, j);
    return v;
}

std::vector<FqVector> FqMatrix::row_list() const {
    std::vector<FqVector> out;
    out.reserve(rows);
    for (int r = 0; r < rows; ++r) out.push_back(row(r));
    return out;
}

FqMatrix transpose(const FqMatrix& m) {
    FqMatrix t = FqMatrix::zero(m.field, m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

FqMatrix matmul(const FqMatrix& x, const FqMatrix& y) {
    require_same_field(x.field, y.field);
    if (x.cols != y.rows) throw Error("matmul shape mismatch");
    const auto& F = *x.field;
    FqMatrix r = FqMatrix::zero(x.field, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
        }
    return r;
}

FqVector apply_rows(const FqVector& y, const FqMatrix& m) {
    require_same_field(y.field, m.field);
    if (y.size() != m.rows) throw Error("apply_rows shape mismatch");
    const auto& F = *m.field;
    FqVector r = zero_vector(m.field, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        int v = y.c[i];
        if (!v) continue;
        for (int j = 0; j < m.cols; ++j) r.c[j] = F.add(r.c[j], F.mul(v, m.at(i, j)));
    }
    return r;
}

FqVector apply_cols(const FqMatrix& m, const FqVector& x) {
    require_same_field(x.field, m.field);
    if (x.size() != m.cols) throw Error("apply_cols shape mismatch");
    const auto& F = *m.field;
    FqVector r = zero_vector(m.field, m.rows);
    for (int i = 0; i < m.rows; ++i) {
        int acc = 0;
        for (int j = 0; j < m.cols; ++j) acc = F.add(acc, F.mul(m.at(i, j), x.c[j]));
        r.c[i] = acc;
    }
    return r;
}

RrefResult rref(const FqMatrix& m) {
    RrefResult res{m, 0, {}};
    FqMatrix& A = res.mat;
    const auto& F = *m.field;
    int r = 0;
    for (int col = 0; col < A.cols && r < A.rows; ++col) {
        int piv = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
        int s = F.inv(A.at(r, col));
        for (int j = 0; j < A.cols; ++j) A.at(r, j) = F.mul(s, A.at(r, j));
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || !A.at(i, col)) continue;
            int f = A.at(i, col);
            for (int j = 0; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        res.pivots.push_back(col);
        ++r;
    }
    res.rank = r;
    return res;
}

int rank(const FqMatrix& m) { return rref(m).rank; }

FqMatrix kernel_basis(const FqMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    std::vector<FqVector> rows;
    for (int freec = 0; freec < m.cols; ++freec) {
        if (is_pivot[freec]) continue;
        FqVector v = zero_vector(m.field, m.cols);
        v.c[freec] = 1;
        for (int i = 0; i < rr.rank; ++i)
            v.c[rr.pivots[i]] = m.field->neg(rr.mat.at(i, freec));
        rows.push_back(std::move(v));
    }
    return FqMatrix::from_rows(m.field, rows, m.cols);
}

bool in_span(const std::vector<FqVector>& vectors, const FqVector& x) {
    if (x.is_zero()) return true;
    if (vectors.empty()) return false;
    FqMatrix A = FqMatrix::from_rows(x.field, vectors, x.size());
    int r = rank(A);
    std::vector<FqVector> withx = vectors;
    withx.push_back(x);
    return rank(FqMatrix::from_rows(x.field, withx, x.size())) == r;
}

std::optional<std::vector<int>> solve_rows(const std::vector<FqVector>& rows, const FqVector& target) {
    const Field& f = target.field;
    int m = (int)rows.size(), n = target.size();
    // Augmented system over columns: [rows^T | target^T].
    FqMatrix A = FqMatrix::zero(f, n, m + 1);
    for (int i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw Error("solve_rows length mismatch");
        for (int j = 0; j < n; ++j) A.at(j, i) = rows[i].c[j];
    }
    for (int j = 0; j < n; ++j) A.at(j, m) = target.c[j];
    RrefResult rr = rref(A);
    std::vector<int> coeff(m, 0);
    for (int i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == m) return std::nullopt; // pivot in augmented column
        coeff[rr.pivots[i]] = rr.mat.at(i, m);
    }
    return coeff;
}

FqMatrix inverse(const FqMatrix& m) {
    if (m.rows != m.cols) throw Error("inverse of a non-square matrix");
    int n = m.rows;
    FqMatrix aug = FqMatrix::zero(m.field, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots.back() >= n) throw Error("matrix is singular");
    FqMatrix inv = FqMatrix::zero(m.field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
    return inv;
}

std::vector<FqVector> enumerate_subspace(const Field& f, int n, const std::vector<FqVector>& basis,
                                         const Budget& budget) {
    if (basis.empty()) return {zero_vector(f, n)};
    FqMatrix B = FqMatrix::from_rows(f, basis, n);
    if (rank(B) != (int)basis.size()) throw Error("dependent basis");
    int k = (int)basis.size();
    std::uint64_t total = checked_pow(f->q(), k, budget.max_states, "subspace enumeration");
    std::vector<FqVector> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        out.push_back(apply_rows(vector_from_index(f, k, idx), B));
    }
    std::sort(out.begin(), out.end(),
              [](const FqVector& a, const FqVector& b) { return rank_index(a) < rank_index(b); });
    return out;
}

} // namespace projmet
