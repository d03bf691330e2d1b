#include <doctest.h>

#include <random>

#include "projmet/family.hpp"
#include "projmet/linalg.hpp"

using namespace projmet;

namespace {
Field f2 = FiniteField::make(2);
Field f3 = FiniteField::make(3);

FqVector vec(const Field& f, std::vector<int> c) { return {f, std::move(c)}; }
} // namespace

TEST_CASE("rank index round trip and order") {
    FqVector v = vec(f3, {1, 2, 0});
    CHECK(rank_index(v) == 1 * 9 + 2 * 3 + 0);
    CHECK(vector_from_index(f3, 3, rank_index(v)) == v);
    for (std::uint64_t i = 0; i < 27; ++i)
        CHECK(rank_index(vector_from_index(f3, 3, i)) == i);
}

TEST_CASE("rref of the identity") {
    FqMatrix I = FqMatrix::identity(f2, 3);
    RrefResult rr = rref(I);
    CHECK(rr.rank == 3);
    CHECK(kernel_basis(I).rows == 0);
}

TEST_CASE("phase-rotation parent matrix kernel is the repetition code") {
    for (const Field& f : {f2, f3}) {
        int n = 4;
        std::vector<FqVector> rows;
        for (int i = 0; i < n; ++i) rows.push_back(unit_vector(f, n, i));
        FqVector last = zero_vector(f, n);
        for (int i = 0; i < n; ++i) last.c[i] = f->neg(1);
        rows.push_back(last);
        FqMatrix A = FqMatrix::from_rows(f, rows, n); // (n+1) x n
        FqMatrix K = kernel_basis(transpose(A));      // left kernel of A
        REQUIRE(K.rows == 1);
        FqVector k = canonical_point(K.row(0));
        CHECK(k == vec(f, {1, 1, 1, 1, 1}));
    }
}

TEST_CASE("rref idempotent and kernel annihilates, random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Field& f = trial % 2 ? f2 : f3;
        int m = 2 + (int)(rng() % 4), n = 2 + (int)(rng() % 5);
        FqMatrix A = FqMatrix::zero(f, m, n);
        for (int& x : A.a) x = (int)(rng() % f->q());
        RrefResult rr = rref(A);
        CHECK(rref(rr.mat).mat == rr.mat);
        FqMatrix K = kernel_basis(A);
        CHECK(rr.rank + K.rows == n);
        for (const auto& k : K.row_list()) CHECK(apply_cols(A, k).is_zero());
    }
}

TEST_CASE("rank plus nullity over F_3, exhaustive kernel membership") {
    std::mt19937 rng(11);
    FqMatrix A = FqMatrix::zero(f3, 4, 6);
    for (int& x : A.a) x = (int)(rng() % 3);
    RrefResult rr = rref(A);
    FqMatrix K = kernel_basis(A);
    CHECK(rr.rank + K.rows == 6);
    // count kernel members by brute force over 3^6 vectors
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < pow_u64(3, 6); ++i)
        if (apply_cols(A, vector_from_index(f3, 6, i)).is_zero()) ++count;
    CHECK(count == pow_u64(3, K.rows));
}

TEST_CASE("in_span basics") {
    std::vector<FqVector> gens{vec(f2, {1, 0, 0}), vec(f2, {0, 1, 0})};
    CHECK(in_span(gens, vec(f2, {1, 1, 0})));
    CHECK_FALSE(in_span(gens, vec(f2, {0, 0, 1})));
    CHECK(in_span({}, zero_vector(f2, 3)));
    CHECK_FALSE(in_span({}, vec(f2, {1, 0, 0})));
    CHECK(in_span({vec(f2, {1, 1, 0}), vec(f2, {0, 1, 1})}, vec(f2, {1, 0, 1})));
}

TEST_CASE("in_span agrees with the rank test, random") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Field& f = trial % 2 ? f2 : f3;
        int n = 3 + (int)(rng() % 3);
        std::vector<FqVector> gens;
        for (int i = 0; i < 2 + (int)(rng() % 3); ++i) {
            FqVector v = zero_vector(f, n);
            for (int& x : v.c) x = (int)(rng() % f->q());
            gens.push_back(v);
        }
        FqVector x = zero_vector(f, n);
        for (int& c : x.c) c = (int)(rng() % f->q());
        int r1 = rank(FqMatrix::from_rows(f, gens, n));
        auto withx = gens;
        withx.push_back(x);
        int r2 = rank(FqMatrix::from_rows(f, withx, n));
        CHECK(in_span(gens, x) == (r1 == r2));
    }
}

TEST_CASE("solve_rows reconstructs the combination") {
    std::vector<FqVector> rows{vec(f3, {1, 1, 0}), vec(f3, {0, 1, 1})};
    auto c = solve_rows(rows, vec(f3, {1, 2, 1}));
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<int>{1, 1});
    CHECK_FALSE(solve_rows(rows, vec(f3, {1, 0, 1})).has_value());
    CHECK_FALSE(in_span(rows, vec(f3, {1, 0, 1})));
}

TEST_CASE("enumerate_subspace") {
    auto one = enumerate_subspace(f3, 2, {vec(f3, {1, 0})});
    REQUIRE(one.size() == 3);
    CHECK(one[0] == vec(f3, {0, 0}));
    CHECK(one[1] == vec(f3, {1, 0}));
    CHECK(one[2] == vec(f3, {2, 0}));

    CHECK(enumerate_subspace(f2, 3, {}).size() == 1);

    auto four = enumerate_subspace(f2, 2, {vec(f2, {1, 0}), vec(f2, {0, 1})});
    CHECK(four.size() == 4);
    for (size_t i = 1; i < four.size(); ++i)
        CHECK(rank_index(four[i - 1]) < rank_index(four[i]));

    CHECK_THROWS_AS(enumerate_subspace(f2, 2, {vec(f2, {1, 0}), vec(f2, {1, 0})}), Error);
}

TEST_CASE("matrix inverse") {
    FqMatrix A = FqMatrix::zero(f3, 2, 2);
    A.at(0, 0) = 1, A.at(0, 1) = 2, A.at(1, 0) = 1, A.at(1, 1) = 1;
    FqMatrix Ai = inverse(A);
    CHECK(matmul(A, Ai) == FqMatrix::identity(f3, 2));
    FqMatrix S = FqMatrix::zero(f3, 2, 2);
    S.at(0, 0) = 1, S.at(0, 1) = 2, S.at(1, 0) = 2, S.at(1, 1) = 1; // singular over F_3
    CHECK_THROWS_AS(inverse(S), Error);
}
