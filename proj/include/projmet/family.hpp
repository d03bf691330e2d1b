#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "projmet/linalg.hpp"

namespace projmet {

// Canonical representative of a projective point <x>: nonzero, scaled so the
// first nonzero coordinate is 1.
FqVector canonical_point(const FqVector& x);
bool is_canonical_point(const FqVector& x);

// Ordered family of distinct projective points in F_q^N.  The order is part
// of the object: it fixes the parent matrix and every index-based bijection.
struct SpanningFamily {
    Field field;
    int ambient_dim = 0;
    std::vector<FqVector> points; // canonical reps, pairwise distinct
    bool spanning = false;
    int merged_count = 0; // zero vectors dropped + proportional duplicates merged
    // Matrix shape (rows, cols) when the ambient space is a flattened matrix
    // space; used by the Kronecker tensor product.
    std::optional<std::pair<int, int>> shape;

    int size() const { return (int)points.size(); }
    // index of a canonical point, -1 if absent
    int find(const FqVector& canonical_rep) const;
    bool contains(const FqVector& x) const { return find(canonical_point(x)) >= 0; }
};

// Set equality of the point sets (order and shape ignored).
bool same_points(const SpanningFamily& a, const SpanningFamily& b);

// Canonicalizes, drops zero vectors, merges proportional duplicates keeping
// the first occurrence.  Throws Error when nothing is left.
SpanningFamily family_from_vectors(const Field& f, const std::vector<FqVector>& vectors);

// All of Gr_1(F_q^n) in rank-index order.
std::vector<FqVector> projective_points(const Field& f, int n, const Budget& budget = {});

SpanningFamily hamming_family(const Field& f, int n);
SpanningFamily discrete_family(const Field& f, int n, const Budget& budget = {});
SpanningFamily phase_rotation_family(const Field& f, int n);
// Rank-1 m x n matrices, flattened row-major.
SpanningFamily rank_family(const Field& f, int m, int n, const Budget& budget = {});
SpanningFamily row_family(const Field& f, int m, int n, const Budget& budget = {});
SpanningFamily column_family(const Field& f, int m, int n, const Budget& budget = {});
SpanningFamily cover_family(const Field& f, int m, int n, const Budget& budget = {});
SpanningFamily sum_rank_family(const Field& f, const std::vector<std::pair<int, int>>& blocks,
                               const Budget& budget = {});
SpanningFamily tensor_rank_family(const Field& f, const std::vector<int>& dims,
                                  const Budget& budget = {});
// Combinatorial metric: ppf of the coordinate subspaces <e_i : i in I_j>.
SpanningFamily combinatorial_family(const Field& f, int n,
                                    const std::vector<std::vector<int>>& index_sets,
                                    const Budget& budget = {});

// Projective point form: union of Gr_1(<S>) over the generator sets S.
SpanningFamily ppf(const Field& f, int n, const std::vector<std::vector<FqVector>>& subspaces,
                   const Budget& budget = {});

SpanningFamily family_union(const SpanningFamily& a, const SpanningFamily& b);
// Ambient space becomes the direct sum; points embed block-wise.
SpanningFamily disjoint_union(const SpanningFamily& a, const SpanningFamily& b);

enum class TensorKind { Outer, Kronecker };
// Outer: families of flat vectors, result on F_q^{N1 x N2} row-major.
// Kronecker: uses the stored matrix shapes ((1, N) when absent).
SpanningFamily tensor_product(const SpanningFamily& a, const SpanningFamily& b, TensorKind kind);

// Rows = point representatives in family order (the parent matrix layout).
FqMatrix family_matrix(const SpanningFamily& fam);
// Columns = point representatives (the matroid layout).
FqMatrix family_columns(const SpanningFamily& fam);

} // namespace projmet
