#include "projmet/family.hpp"

#include <algorithm>
#include <map>

namespace projmet {

FqVector canonical_point(const FqVector& x) {
    for (int i = 0; i < x.size(); ++i) {
        if (x.c[i]) {
            if (x.c[i] == 1) return x;
            return scale(x.field->inv(x.c[i]), x);
        }
    }
    throw Error("zero vector has no projective class");
}

bool is_canonical_point(const FqVector& x) {
    for (int v : x.c) {
        if (v) return v == 1;
    }
    return false;
}

int SpanningFamily::find(const FqVector& rep) const {
    for (int i = 0; i < size(); ++i)
        if (points[i].c == rep.c) return i;
    return -1;
}

bool same_points(const SpanningFamily& a, const SpanningFamily& b) {
    if (!a.field->same(*b.field) || a.ambient_dim != b.ambient_dim || a.size() != b.size())
        return false;
    std::vector<std::uint64_t> ia, ib;
    for (const auto& p : a.points) ia.push_back(rank_index(p));
    for (const auto& p : b.points) ib.push_back(rank_index(p));
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    return ia == ib;
}

SpanningFamily family_from_vectors(const Field& f, const std::vector<FqVector>& vectors) {
    SpanningFamily fam;
    fam.field = f;
    fam.ambient_dim = vectors.empty() ? 0 : vectors[0].size();
    for (const auto& v : vectors) {
        require_same_field(f, v.field);
        if (v.size() != fam.ambient_dim) throw Error("mixed ambient dimensions");
        if (v.is_zero()) {
            ++fam.merged_count;
            continue;
        }
        FqVector rep = canonical_point(v);
        if (fam.find(rep) >= 0) {
            ++fam.merged_count;
            continue;
        }
        fam.points.push_back(std::move(rep));
    }
    if (fam.points.empty()) throw Error("empty family");
    fam.spanning = rank(family_matrix(fam)) == fam.ambient_dim;
    return fam;
}

std::vector<FqVector> projective_points(const Field& f, int n, const Budget& budget) {
    std::uint64_t total = checked_pow(f->q(), n, budget.max_states, "projective point enumeration");
    std::vector<FqVector> pts;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        FqVector v = vector_from_index(f, n, idx);
        if (is_canonical_point(v)) pts.push_back(std::move(v));
    }
    return pts;
}

SpanningFamily hamming_family(const Field& f, int n) {
    std::vector<FqVector> pts;
    for (int i = 0; i < n; ++i) pts.push_back(unit_vector(f, n, i));
    return family_from_vectors(f, pts);
}

SpanningFamily discrete_family(const Field& f, int n, const Budget& budget) {
    return family_from_vectors(f, projective_points(f, n, budget));
}

SpanningFamily phase_rotation_family(const Field& f, int n) {
    std::vector<FqVector> pts;
    for (int i = 0; i < n; ++i) pts.push_back(unit_vector(f, n, i));
    pts.push_back({f, std::vector<int>(n, 1)});
    return family_from_vectors(f, pts);
}

namespace {

FqVector outer_flat(const FqVector& u, const FqVector& v) {
    FqVector r = zero_vector(u.field, u.size() * v.size());
    for (int i = 0; i < u.size(); ++i)
        for (int j = 0; j < v.size(); ++j)
            r.c[i * v.size() + j] = u.field->mul(u.c[i], v.c[j]);
    return r;
}

} // namespace

SpanningFamily rank_family(const Field& f, int m, int n, const Budget& budget) {
    std::vector<FqVector> pts;
    for (const auto& u : projective_points(f, m, budget))
        for (const auto& v : projective_points(f, n, budget))
            pts.push_back(outer_flat(u, v));
    SpanningFamily fam = family_from_vectors(f, pts);
    fam.shape = {m, n};
    return fam;
}

SpanningFamily row_family(const Field& f, int m, int n, const Budget& budget) {
    std::vector<FqVector> pts;
    for (int i = 0; i < m; ++i)
        for (const auto& v : projective_points(f, n, budget))
            pts.push_back(outer_flat(unit_vector(f, m, i), v));
    SpanningFamily fam = family_from_vectors(f, pts);
    fam.shape = {m, n};
    return fam;
}

SpanningFamily column_family(const Field& f, int m, int n, const Budget& budget) {
    std::vector<FqVector> pts;
    for (const auto& u : projective_points(f, m, budget))
        for (int j = 0; j < n; ++j)
            pts.push_back(outer_flat(u, unit_vector(f, n, j)));
    SpanningFamily fam = family_from_vectors(f, pts);
    fam.shape = {m, n};
    return fam;
}

SpanningFamily cover_family(const Field& f, int m, int n, const Budget& budget) {
    SpanningFamily fam = family_union(row_family(f, m, n, budget), column_family(f, m, n, budget));
    fam.shape = {m, n};
    return fam;
}

SpanningFamily sum_rank_family(const Field& f, const std::vector<std::pair<int, int>>& blocks,
                               const Budget& budget) {
    if (blocks.empty()) throw Error("sum_rank needs at least one block");
    SpanningFamily fam = rank_family(f, blocks[0].first, blocks[0].second, budget);
    for (size_t i = 1; i < blocks.size(); ++i)
        fam = disjoint_union(fam, rank_family(f, blocks[i].first, blocks[i].second, budget));
    fam.shape.reset();
    return fam;
}

SpanningFamily tensor_rank_family(const Field& f, const std::vector<int>& dims, const Budget& budget) {
    if (dims.empty()) throw Error("tensor_rank needs at least one dimension");
    std::uint64_t states = 1;
    for (int d : dims) {
        if (d <= 0) throw Error("tensor dimensions must be positive");
        states *= pow_u64(f->q(), d);
        if (states > budget.max_states) throw BudgetError("tensor enumeration exceeds budget");
    }
    // Rank-1 tensors as iterated outer products of canonical factors.
    std::vector<FqVector> pts = projective_points(f, dims[0], budget);
    for (size_t k = 1; k < dims.size(); ++k) {
        std::vector<FqVector> next;
        for (const auto& t : pts)
            for (const auto& v : projective_points(f, dims[k], budget))
                next.push_back(outer_flat(t, v));
        pts = std::move(next);
    }
    return family_from_vectors(f, pts);
}

SpanningFamily ppf(const Field& f, int n, const std::vector<std::vector<FqVector>>& subspaces,
                   const Budget& budget) {
    std::vector<FqVector> pts;
    for (const auto& gens : subspaces) {
        for (const auto& g : gens) {
            require_same_field(f, g.field);
            if (g.size() != n) throw Error("generator outside the ambient space");
        }
        // independent subset spanning <gens>
        std::vector<FqVector> basis;
        for (const auto& g : gens) {
            if (!in_span(basis, g)) basis.push_back(g);
        }
        for (const auto& v : enumerate_subspace(f, n, basis, budget))
            if (is_canonical_point(v)) pts.push_back(v);
    }
    std::sort(pts.begin(), pts.end(),
              [](const FqVector& a, const FqVector& b) { return rank_index(a) < rank_index(b); });
    return family_from_vectors(f, pts);
}

SpanningFamily combinatorial_family(const Field& f, int n,
                                    const std::vector<std::vector<int>>& index_sets,
                                    const Budget& budget) {
    std::vector<std::vector<FqVector>> subspaces;
    for (const auto& I : index_sets) {
        std::vector<FqVector> gens;
        for (int i : I) {
            if (i < 0 || i >= n) throw Error("index set out of range");
            gens.push_back(unit_vector(f, n, i));
        }
        subspaces.push_back(std::move(gens));
    }
    return ppf(f, n, subspaces, budget);
}

SpanningFamily family_union(const SpanningFamily& a, const SpanningFamily& b) {
    require_same_field(a.field, b.field);
    if (a.ambient_dim != b.ambient_dim) throw Error("dimension mismatch in family union");
    std::vector<FqVector> pts = a.points;
    pts.insert(pts.end(), b.points.begin(), b.points.end());
    return family_from_vectors(a.field, pts);
}

SpanningFamily disjoint_union(const SpanningFamily& a, const SpanningFamily& b) {
    require_same_field(a.field, b.field);
    int n = a.ambient_dim + b.ambient_dim;
    std::vector<FqVector> pts;
    for (const auto& p : a.points) {
        FqVector v = zero_vector(a.field, n);
        std::copy(p.c.begin(), p.c.end(), v.c.begin());
        pts.push_back(std::move(v));
    }
    for (const auto& p : b.points) {
        FqVector v = zero_vector(a.field, n);
        std::copy(p.c.begin(), p.c.end(), v.c.begin() + a.ambient_dim);
        pts.push_back(std::move(v));
    }
    return family_from_vectors(a.field, pts);
}

SpanningFamily tensor_product(const SpanningFamily& a, const SpanningFamily& b, TensorKind kind) {
    require_same_field(a.field, b.field);
    std::vector<FqVector> pts;
    if (kind == TensorKind::Outer) {
        for (const auto& u : a.points)
            for (const auto& v : b.points) pts.push_back(outer_flat(u, v));
        SpanningFamily fam = family_from_vectors(a.field, pts);
        fam.shape = {a.ambient_dim, b.ambient_dim};
        return fam;
    }
    // Kronecker on the stored matrix shapes.
    auto [r1, c1] = a.shape.value_or(std::pair<int, int>{1, a.ambient_dim});
    auto [r2, c2] = b.shape.value_or(std::pair<int, int>{1, b.ambient_dim});
    if (r1 * c1 != a.ambient_dim || r2 * c2 != b.ambient_dim)
        throw Error("shape mismatch in Kronecker product");
    for (const auto& u : a.points)
        for (const auto& v : b.points) {
            FqVector t = zero_vector(a.field, a.ambient_dim * b.ambient_dim);
            for (int i1 = 0; i1 < r1; ++i1)
                for (int j1 = 0; j1 < c1; ++j1)
                    for (int i2 = 0; i2 < r2; ++i2)
                        for (int j2 = 0; j2 < c2; ++j2) {
                            int row = i1 * r2 + i2, col = j1 * c2 + j2;
                            t.c[row * (c1 * c2) + col] =
                                a.field->mul(u.c[i1 * c1 + j1], v.c[i2 * c2 + j2]);
                        }
            pts.push_back(std::move(t));
        }
    SpanningFamily fam = family_from_vectors(a.field, pts);
    fam.shape = {r1 * r2, c1 * c2};
    return fam;
}

FqMatrix family_matrix(const SpanningFamily& fam) {
    return FqMatrix::from_rows(fam.field, fam.points, fam.ambient_dim);
}

FqMatrix family_columns(const SpanningFamily& fam) { return transpose(family_matrix(fam)); }

} // namespace projmet
