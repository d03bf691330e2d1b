#include <doctest.h>

#include <random>

#include "projmet/family.hpp"

using namespace projmet;

namespace {
Field f2 = FiniteField::make(2);
Field f3 = FiniteField::make(3);

FqVector vec(const Field& f, std::vector<int> c) { return {f, std::move(c)}; }
} // namespace

TEST_CASE("canonicalization and duplicate merging") {
    auto fam = family_from_vectors(f2, {unit_vector(f2, 2, 0), unit_vector(f2, 2, 1),
                                        unit_vector(f2, 2, 0)});
    CHECK(fam.size() == 2);
    CHECK(fam.merged_count == 1);

    // proportional vectors over F_3: (2,1) = 2*(1,2)
    auto prop = family_from_vectors(f3, {vec(f3, {1, 2}), vec(f3, {2, 1})});
    CHECK(prop.size() == 1);
    CHECK(prop.points[0] == vec(f3, {1, 2}));

    // zero vectors dropped
    auto z = family_from_vectors(f2, {zero_vector(f2, 2), unit_vector(f2, 2, 0)});
    CHECK(z.size() == 1);
    CHECK_THROWS_AS(family_from_vectors(f2, {zero_vector(f2, 2)}), Error);
}

TEST_CASE("canonicalization is scaling-invariant, random") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + (int)(rng() % 3);
        std::vector<FqVector> vs, scaled;
        for (int i = 0; i < 4; ++i) {
            FqVector v = zero_vector(f3, n);
            while (v.is_zero())
                for (int& c : v.c) c = (int)(rng() % 3);
            vs.push_back(v);
            scaled.push_back(scale(1 + (int)(rng() % 2), v));
        }
        CHECK(same_points(family_from_vectors(f3, vs), family_from_vectors(f3, scaled)));
    }
}

TEST_CASE("phase rotation family") {
    auto fam = phase_rotation_family(f2, 4);
    CHECK(fam.size() == 5);
    CHECK(fam.spanning);
    CHECK(fam.points[4] == vec(f2, {1, 1, 1, 1}));
}

TEST_CASE("discrete family size is (q^N-1)/(q-1)") {
    CHECK(discrete_family(f3, 2).size() == 4);
    CHECK(discrete_family(f2, 3).size() == 7);
    CHECK(discrete_family(f3, 3).size() == 13);
    Field f4 = FiniteField::make(2, 2);
    CHECK(discrete_family(f4, 2).size() == 5);
}

TEST_CASE("rank family counts canonical rank-1 matrices") {
    auto fam = rank_family(f2, 2, 2);
    CHECK(fam.size() == 9); // (2^2-1)^2/(2-1)^2
    CHECK(fam.spanning);
    auto f33 = rank_family(f3, 2, 2);
    CHECK(f33.size() == 16); // ((9-1)/2)^2
}

TEST_CASE("ppf") {
    // a single 1-dim subspace is returned unchanged
    auto one = ppf(f2, 3, {{unit_vector(f2, 3, 0)}});
    CHECK(one.size() == 1);

    // Gr_1 of a 2-dim F_2 space has 3 points
    auto gr = ppf(f2, 2, {{unit_vector(f2, 2, 0), unit_vector(f2, 2, 1)}});
    CHECK(gr.size() == 3);

    // ppf of a family of 1-dim spaces is the identity on the point set
    auto fam = phase_rotation_family(f2, 3);
    std::vector<std::vector<FqVector>> singles;
    for (const auto& p : fam.points) singles.push_back({p});
    CHECK(same_points(ppf(f2, 3, singles), fam));
}

TEST_CASE("cover = row union column, also via ppf index sets") {
    auto cover = cover_family(f2, 2, 2);
    auto uni = family_union(row_family(f2, 2, 2), column_family(f2, 2, 2));
    CHECK(same_points(cover, uni));

    // index sets: rows {0,1}, {2,3}; columns {0,2}, {1,3} of the flattened 2x2
    auto comb = combinatorial_family(f2, 4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
    CHECK(same_points(comb, cover));
}

TEST_CASE("union is idempotent and checks dimensions") {
    auto fam = phase_rotation_family(f2, 3);
    CHECK(same_points(family_union(fam, fam), fam));
    CHECK_THROWS_AS(family_union(fam, hamming_family(f2, 2)), Error);
}

TEST_CASE("disjoint union of hamming families is hamming") {
    auto h = disjoint_union(hamming_family(f2, 2), hamming_family(f2, 3));
    CHECK(same_points(h, hamming_family(f2, 5)));
}

TEST_CASE("tensor products reproduce the matrix metrics") {
    // discrete x discrete = rank
    auto t = tensor_product(discrete_family(f2, 2), discrete_family(f2, 2), TensorKind::Outer);
    CHECK(same_points(t, rank_family(f2, 2, 2)));
    auto t3 = tensor_product(discrete_family(f3, 2), discrete_family(f3, 2), TensorKind::Outer);
    CHECK(same_points(t3, rank_family(f3, 2, 2)));

    // hamming x discrete = row
    auto r = tensor_product(hamming_family(f2, 2), discrete_family(f2, 3), TensorKind::Outer);
    CHECK(same_points(r, row_family(f2, 2, 3)));

    // discrete x hamming = column
    auto c = tensor_product(discrete_family(f2, 2), hamming_family(f2, 3), TensorKind::Outer);
    CHECK(same_points(c, column_family(f2, 2, 3)));

    // single points
    auto s = tensor_product(hamming_family(f2, 1), hamming_family(f2, 1), TensorKind::Outer);
    CHECK(s.size() == 1);
}

TEST_CASE("kronecker respects matrix shapes") {
    // hamming(l) (x)_Kron rank(n,m) lays the blocks side by side; it must be a
    // coordinate permutation of the block-diagonal sum-rank family
    auto kron = tensor_product(hamming_family(f2, 2), rank_family(f2, 2, 2), TensorKind::Kronecker);
    auto sr = sum_rank_family(f2, {{2, 2}, {2, 2}});
    CHECK(kron.size() == sr.size());
    CHECK(kron.ambient_dim == sr.ambient_dim);
    // explicit permutation: horizontal layout (i, j1*m+j2) <-> block layout
    // block j1 entry (i, j2); both flattened row-major
    std::vector<int> perm(8);
    for (int i = 0; i < 2; ++i)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int j2 = 0; j2 < 2; ++j2) perm[i * 4 + j1 * 2 + j2] = j1 * 4 + i * 2 + j2;
    std::vector<FqVector> mapped;
    for (const auto& p : kron.points) {
        FqVector v = zero_vector(f2, 8);
        for (int k = 0; k < 8; ++k) v.c[perm[k]] = p.c[k];
        mapped.push_back(v);
    }
    CHECK(same_points(family_from_vectors(f2, mapped), sr));
}

TEST_CASE("tensor_rank matches rank for 2-tensors") {
    auto t = tensor_rank_family(f2, {2, 3});
    CHECK(same_points(t, rank_family(f2, 2, 3)));
    auto t3 = tensor_rank_family(f2, {2, 2, 2});
    CHECK(t3.size() == 27); // 3 canonical factors per axis
}
