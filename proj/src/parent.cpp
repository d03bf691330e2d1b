#include "projmet/parent.hpp"

namespace projmet {

LinearCode::LinearCode(Field f, int n, const std::vector<FqVector>& generators)
    : field_(std::move(f)), n_(n) {
    for (const auto& g : generators) {
        require_same_field(field_, g.field);
        if (g.size() != n) throw Error("generator length mismatch");
    }
    RrefResult rr = rref(FqMatrix::from_rows(field_, generators, n));
    std::vector<FqVector> rows;
    for (int i = 0; i < rr.rank; ++i) rows.push_back(rr.mat.row(i));
    basis_ = FqMatrix::from_rows(field_, rows, n);
}

bool LinearCode::contains(const FqVector& x) const {
    if (x.size() != n_) throw Error("length mismatch");
    if (dim() == 0) return x.is_zero();
    return solve_rows(basis_.row_list(), x).has_value();
}

std::vector<FqVector> LinearCode::codewords(const Budget& budget) const {
    std::uint64_t count = checked_pow(field_->q(), dim(), budget.max_states, "codeword enumeration");
    std::vector<FqVector> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(apply_rows(vector_from_index(field_, dim(), i), basis_));
    return out;
}

int LinearCode::min_hamming_distance(const Budget& budget) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->dmin >= 0) return cache_->dmin;
    int best = kInfWeight;
    for (const auto& c : codewords(budget)) {
        if (c.is_zero()) continue;
        best = std::min(best, hamming_weight(c));
    }
    cache_->dmin = best;
    return best;
}

std::vector<std::uint64_t> LinearCode::hamming_weight_enumerator(const Budget& budget) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->wenum.empty()) return cache_->wenum;
    cache_->wenum.assign(n_ + 1, 0);
    for (const auto& c : codewords(budget)) ++cache_->wenum[hamming_weight(c)];
    return cache_->wenum;
}

ParentFunction parent_function(const SpanningFamily& fam) {
    if (fam.size() == 0) throw Error("empty family");
    return {fam, family_matrix(fam)};
}

LinearCode parent_code(const ParentFunction& pf) {
    // ker(phi) for the row-vector action y -> y*A is the right kernel of A^T.
    FqMatrix k = kernel_basis(transpose(pf.matrix));
    return LinearCode(pf.family.field, pf.matrix.rows, k.row_list());
}

std::vector<std::uint16_t> hamming_weight_array(const Field& f, int n, const Budget& budget) {
    std::uint64_t states = checked_pow(f->q(), n, budget.max_states, "Hamming table");
    std::vector<std::uint16_t> w(states, 0);
    const int q = f->q();
    for (std::uint64_t x = 1; x < states; ++x) {
        std::uint64_t v = x;
        int cnt = 0;
        while (v) {
            cnt += (v % q) != 0;
            v /= q;
        }
        w[x] = (std::uint16_t)cnt;
    }
    return w;
}

std::vector<std::uint16_t> quotient_weight(const std::vector<std::uint16_t>& wt_domain,
                                           const FqMatrix& xi, const Budget& budget) {
    const Field& f = xi.field;
    std::uint64_t dom = checked_pow(f->q(), xi.rows, budget.max_states, "quotient domain");
    if (wt_domain.size() != dom) throw Error("domain weight array has the wrong size");
    std::uint64_t img = pow_u64(f->q(), xi.cols);
    std::vector<std::uint16_t> out(img, kInfWeight);
    for (std::uint64_t y = 0; y < dom; ++y) {
        std::uint64_t z = rank_index(apply_rows(vector_from_index(f, xi.rows, y), xi));
        out[z] = std::min(out[z], wt_domain[y]);
    }
    return out;
}

FqVector coset_leader(const LinearCode& code, const FqVector& y, const Budget& budget) {
    require_same_field(code.field(), y.field);
    if (y.size() != code.length()) throw Error("length mismatch");
    FqVector best = y;
    int bw = hamming_weight(y);
    std::uint64_t bidx = rank_index(y);
    for (const auto& c : code.codewords(budget)) {
        FqVector cand = add(y, c);
        int wct = hamming_weight(cand);
        std::uint64_t idx = rank_index(cand);
        if (wct < bw || (wct == bw && idx < bidx)) {
            best = cand;
            bw = wct;
            bidx = idx;
        }
    }
    return best;
}

std::vector<std::uint64_t> coset_leader_weight_distribution(const LinearCode& code,
                                                            const Budget& budget) {
    const Field& f = code.field();
    const int q = f->q(), n = code.length(), k = code.dim();
    std::uint64_t states = checked_pow(q, n, budget.max_states, "coset enumeration");
    FqMatrix H = kernel_basis(code.basis());
    std::uint64_t ncosets = pow_u64(q, n - k);
    std::vector<std::uint16_t> minw(ncosets, kInfWeight);
    for (std::uint64_t x = 0; x < states; ++x) {
        FqVector v = vector_from_index(f, n, x);
        std::uint64_t s = rank_index(apply_cols(H, v));
        minw[s] = std::min<std::uint16_t>(minw[s], (std::uint16_t)hamming_weight(v));
    }
    std::vector<std::uint64_t> alpha(n + 1, 0);
    for (auto w : minw) ++alpha[w];
    return alpha;
}

RowMonomialFactorization factor_row_monomial(const FqMatrix& m) {
    const Field& f = m.field;
    std::vector<FqVector> classes;
    std::vector<std::pair<int, int>> row_map(m.rows, {-1, 0}); // (class index, scalar)
    for (int i = 0; i < m.rows; ++i) {
        FqVector r = m.row(i);
        if (r.is_zero()) continue;
        FqVector rep = canonical_point(r);
        int j = -1;
        for (int k = 0; k < (int)classes.size(); ++k)
            if (classes[k].c == rep.c) { j = k; break; }
        if (j < 0) {
            j = (int)classes.size();
            classes.push_back(rep);
        }
        // scalar lambda with row = lambda * rep: read off the first nonzero
        int pos = 0;
        while (rep.c[pos] == 0) ++pos;
        row_map[i] = {j, r.c[pos]};
    }
    FqMatrix R = FqMatrix::zero(f, m.rows, (int)classes.size());
    for (int i = 0; i < m.rows; ++i)
        if (row_map[i].first >= 0) R.at(i, row_map[i].first) = row_map[i].second;
    return {R, FqMatrix::from_rows(f, classes, m.cols)};
}

ParentFunction reduce_to_parent(const FqMatrix& xi) {
    if (rank(xi) != xi.cols) throw Error("map is not surjective");
    RowMonomialFactorization fac = factor_row_monomial(xi);
    SpanningFamily fam = family_from_vectors(xi.field, fac.P.row_list());
    if (fam.size() != fac.P.rows) throw Error("internal: factorization rows not pairwise independent");
    return {fam, fac.P};
}

SpanningFamily family_from_code(const LinearCode& code, const Budget& budget) {
    if (code.min_hamming_distance(budget) < 3) throw Error("distance too small: need d_H >= 3");
    const Field& f = code.field();
    const int n = code.length(), k = code.dim(), N = n - k;
    if (N == 0) throw Error("code fills the whole space; no family exists");

    // Deterministic complement: non-pivot columns of the rref basis, in order.
    RrefResult rr = rref(code.basis());
    std::vector<char> is_pivot(n, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    std::vector<int> qcols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) qcols.push_back(c);

    // phi(e_i): reduce e_i mod the code, then read the complement coordinates.
    std::vector<FqVector> rows;
    for (int i = 0; i < n; ++i) {
        FqVector r = zero_vector(f, N);
        if (is_pivot[i]) {
            int j = 0;
            while (rr.pivots[j] != i) ++j;
            for (int t = 0; t < N; ++t) r.c[t] = f->neg(rr.mat.at(j, qcols[t]));
        } else {
            int t = 0;
            while (qcols[t] != i) ++t;
            r.c[t] = 1;
        }
        rows.push_back(std::move(r));
    }
    SpanningFamily fam = family_from_vectors(f, rows);
    if (fam.size() != n) throw Error("internal: family rows not pairwise independent");
    return fam;
}

} // namespace projmet
