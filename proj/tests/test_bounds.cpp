#include <doctest.h>

#include "helpers.hpp"
#include "projmet/bounds.hpp"

using namespace projmet;
using namespace projmet::testing;

namespace {
Field f2 = FiniteField::make(2);
Field f3 = FiniteField::make(3);

// All subspaces of F_q^n of every dimension, as rref bases (exhaustive
// enumeration by independent-tuple scan + dedup by rref).
std::vector<LinearCode> all_subspaces(const Field& f, int n) {
    std::vector<LinearCode> out{LinearCode::zero_code(f, n)};
    std::vector<std::vector<int>> seen;
    std::uint64_t states = pow_u64(f->q(), n);
    std::vector<FqVector> gens;
    auto rec = [&](auto&& self, std::uint64_t start) -> void {
        for (std::uint64_t v = start; v < states; ++v) {
            FqVector x = vector_from_index(f, n, v);
            if (in_span(gens, x)) continue;
            gens.push_back(x);
            LinearCode c(f, n, gens);
            auto key = c.basis().a;
            key.push_back(c.dim());
            bool fresh = true;
            for (const auto& k : seen)
                if (k == key) { fresh = false; break; }
            if (fresh) {
                seen.push_back(key);
                out.push_back(c);
                self(self, v + 1);
            }
            gens.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}
} // namespace

TEST_CASE("mu of the classic families") {
    // hamming: mu(t) = t
    for (int t = 0; t <= 4; ++t) CHECK(mu(hamming_family(f2, 4), t).value == t);
    for (int t = 0; t <= 3; ++t) CHECK(mu(hamming_family(f3, 3), t).value == t);

    // phase rotation: t below the max weight, N at or above it
    for (auto [fptr, n] : {std::pair{&f2, 4}, {&f3, 3}}) {
        auto fam = phase_rotation_family(*fptr, n);
        int top = phase_weight_upper_bound(*fptr, n);
        for (int t = 0; t <= n; ++t) {
            int expect = t < top ? t : n;
            CHECK(mu(fam, t).value == expect);
        }
    }

    // rank(2,3)/F_2: mu(1) = 3, mu(2) = 6
    auto rk = rank_family(f2, 2, 3);
    CHECK(mu(rk, 1).value == 3);
    CHECK(mu(rk, 2).value == 6);
    // and the witness realizes it
    auto m1 = mu(rk, 1);
    WeightTable t = weight_table(rk);
    std::vector<FqVector> wit;
    for (int i : m1.witness) wit.push_back(rk.points[i]);
    for (const auto& v : enumerate_subspace(f2, 6, wit)) CHECK(t.at(v) <= 1);
}

TEST_CASE("mu properties on random families") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 4; ++trial) {
        const Field& f = trial % 2 ? f2 : f3;
        int n = 2 + (int)(rng() % 2);
        auto fam = random_spanning_family(f, n, n + 2, rng);
        WeightTable tab = weight_table(fam);
        int prev = 0;
        for (int t = 0; t <= n; ++t) {
            MuValue m = mu(tab, t, {});
            CHECK(m.value >= t);
            if (t > 0 && prev < n) CHECK(m.value > prev); // strict growth below N
            CHECK((m.value == n) == (t >= tab.max_weight));
            prev = m.value;
        }
        // monotone under family inclusion: drop a point (if still spanning)
        std::vector<FqVector> fewer(fam.points.begin(), fam.points.end() - 1);
        SpanningFamily sub = family_from_vectors(f, fewer);
        if (sub.spanning) {
            for (int t = 1; t < n; ++t)
                CHECK(mu(fam, t).value >= mu(sub, t).value);
        }
    }
}

TEST_CASE("singleton bound values") {
    // hamming: q^(N-d+1)
    for (int d = 1; d <= 4; ++d) {
        auto b = singleton_bound(hamming_family(f3, 4), d);
        CHECK(b.mu_bound == pow_u64(3, 4 - d + 1));
        CHECK(b.mu_bound == b.classical);
    }
    // rank metric: q^(max(m,n) * (min(m,n)-d+1))
    CHECK(singleton_bound(rank_family(f2, 2, 2), 2).mu_bound == pow_u64(2, 2 * (2 - 2 + 1)));
    CHECK(singleton_bound(rank_family(f2, 2, 3), 2).mu_bound == pow_u64(2, 3 * (2 - 2 + 1)));
    // d = 1 gives the whole space
    CHECK(singleton_bound(phase_rotation_family(f2, 3), 1).mu_bound == 8);
}

TEST_CASE("singleton bound holds for every code at desk scale") {
    for (auto [fptr, n] : {std::pair{&f2, 3}, {&f3, 2}}) {
        auto fam = phase_rotation_family(*fptr, n);
        WeightTable tab = weight_table(fam);
        for (const auto& c : all_subspaces(*fptr, n)) {
            if (c.dim() == 0) continue;
            int d = kInfWeight;
            for (const auto& w : c.codewords())
                if (!w.is_zero()) d = std::min<int>(d, tab.at(w));
            auto b = singleton_bound(fam, d);
            CHECK(c.size() <= b.mu_bound);
            CHECK(b.mu_bound <= b.classical);
        }
    }
}

TEST_CASE("exact anticode maximum equals mu on hamming and rank") {
    for (int t = 0; t <= 3; ++t) {
        auto r = exact_anticode_max(hamming_family(f2, 4), t, 4);
        CHECK(r.dim == t);
        CHECK(r.equals_mu);
    }
    auto r22 = exact_anticode_max(rank_family(f2, 2, 2), 1, 3);
    CHECK(r22.dim == 2);
    CHECK(r22.equals_mu);
}

TEST_CASE("the 14-point family keeps its anticode gap") {
    auto fam = anticode_gap_family_f2_10();
    CHECK(fam.size() == 14);
    CHECK(fam.spanning);

    LinearCode pc = parent_code(fam);
    CHECK(pc.min_hamming_distance() == 6);

    Budget big;
    big.max_search = std::uint64_t(1) << 26;
    WeightTable tab = weight_table(fam, big);
    // the known anticode <e1+e2, e3+e4, e5+e6> sits inside B_2
    std::vector<FqVector> gens;
    for (int i : {0, 2, 4}) {
        FqVector v = zero_vector(f2, 10);
        v.c[i] = v.c[i + 1] = 1;
        gens.push_back(v);
    }
    for (const auto& v : enumerate_subspace(f2, 10, gens)) CHECK(tab.at(v) <= 2);

    CHECK(mu(tab, 2, big).value == 2);
    auto ex = exact_anticode_max(fam, 2, 3, big);
    CHECK(ex.dim == 3);
    CHECK_FALSE(ex.equals_mu);
}

TEST_CASE("general anticode counterexample construction") {
    // G = [8,3,4] subcode of the extended Hamming code
    LinearCode G(f2, 8, {vec(f2, {1, 1, 1, 1, 0, 0, 0, 0}), vec(f2, {0, 0, 1, 1, 1, 1, 0, 0}),
                         vec(f2, {0, 0, 0, 0, 1, 1, 1, 1})});
    REQUIRE(G.dim() == 3);
    REQUIRE(G.min_hamming_distance() == 4);

    auto fam = anticode_counterexample_family(G);
    CHECK(fam.size() == 8 + 7 + 7); // basis + e_g + f_g per nonzero codeword
    LinearCode pc = parent_code(fam);
    CHECK(pc.min_hamming_distance() == G.min_hamming_distance() + 2);

    Budget big;
    big.max_states = std::uint64_t(1) << 26;
    big.max_search = std::uint64_t(1) << 26;
    WeightTable tab = weight_table(fam, big);
    // G embeds as a 2-anticode of dimension 3
    for (const auto& c : G.codewords()) {
        FqVector v = zero_vector(f2, fam.ambient_dim);
        std::copy(c.c.begin(), c.c.end(), v.c.begin());
        CHECK(tab.at(v) <= 2);
    }
    CHECK(mu(tab, 2, big).value == 2);

    // preconditions enforced
    LinearCode small(f2, 4, {vec(f2, {1, 1, 1, 0}), vec(f2, {0, 1, 1, 1})});
    CHECK_THROWS_AS(anticode_counterexample_family(small), Error);
}

TEST_CASE("phase weight closed form") {
    CHECK(phase_weight(vec(f2, {1, 1, 0, 1})) == 2);
    CHECK(phase_weight(zero_vector(f2, 4)) == 0);
    // matches BFS on all of F_3^3 and respects the upper bound
    auto fam = phase_rotation_family(f3, 3);
    WeightTable t = weight_table(fam);
    int top = phase_weight_upper_bound(f3, 3);
    for (std::uint64_t i = 0; i < 27; ++i) {
        FqVector x = vector_from_index(f3, 3, i);
        CHECK(phase_weight(x) == (int)t.w[i]);
        CHECK(phase_weight(x) <= top);
    }
}

TEST_CASE("anticode search honors the dimension cap") {
    auto r = exact_anticode_max(hamming_family(f2, 4), 3, 2);
    CHECK(r.dim == 2); // true maximum is 3, capped at 2
}

TEST_CASE("classical bound clamps at one") {
    auto b = singleton_bound(hamming_family(f2, 3), 5);
    CHECK(b.classical == 1);
    CHECK(b.mu_bound == 1);
}
