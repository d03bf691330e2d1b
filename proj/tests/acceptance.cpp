// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "projmet/bounds.hpp"
#include "projmet/codes.hpp"
#include "projmet/embed.hpp"
#include "projmet/isometry.hpp"
#include "projmet/matroid.hpp"

using namespace projmet;
using namespace projmet::testing;

namespace {

Field f2 = FiniteField::make(2);
Field f3 = FiniteField::make(3);
Field f7 = FiniteField::make(7);

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

// shared corpus for criteria 2-5: 50 random spanning families,
// q in {2,3}, N <= 4, |F| <= 7
std::vector<SpanningFamily> corpus() {
    static std::vector<SpanningFamily> fams = [] {
        std::vector<SpanningFamily> out;
        std::mt19937 rng(20240811);
        while ((int)out.size() < 50) {
            const Field& f = out.size() % 2 ? f3 : f2;
            int n = 2 + (int)(rng() % 3);
            int size = n + (int)(rng() % (8 - n));
            out.push_back(random_spanning_family(f, n, std::min(size, 7), rng));
        }
        return out;
    }();
    return fams;
}

LinearCode hamming_7_4() {
    return LinearCode(f2, 7,
                      {vec(f2, {1, 0, 0, 0, 1, 1, 0}), vec(f2, {0, 1, 0, 0, 1, 0, 1}),
                       vec(f2, {0, 0, 1, 0, 0, 1, 1}), vec(f2, {0, 0, 0, 1, 1, 1, 1})});
}

// 1. phase-rotation figure value and minimal representation length
void criterion1() {
    auto fam = phase_rotation_family(f2, 4);
    FqVector x = vec(f2, {1, 1, 0, 1});
    expect(weight_table(fam).at(x) == 2, "wt(1101) != 2");
    expect(minimal_representation(fam, x).size() == 2, "representation length != 2");
}

// 2. BFS table = quotient of the Hamming weight through the parent function
void criterion2() {
    for (const auto& fam : corpus()) {
        auto quot = quotient_weight(hamming_weight_array(fam.field, fam.size()),
                                    parent_function(fam).matrix);
        expect(quot == weight_table(fam).w, "table mismatch on a corpus family");
    }
}

// 3. sphere sizes = coset leader weight distribution of the parent code
void criterion3() {
    for (const auto& fam : corpus()) {
        auto spheres = weight_table(fam).spheres;
        auto alpha = coset_leader_weight_distribution(parent_code(fam));
        expect(alpha.size() >= spheres.size(), "distribution shorter than spheres");
        for (size_t t = 0; t < alpha.size(); ++t) {
            std::uint64_t s = t < spheres.size() ? spheres[t] : 0;
            expect(alpha[t] == s, "coset distribution != sphere sizes");
        }
    }
}

// 4. S_t = (q-1)^t binom(|F|,t) for t up to half the parent distance
void criterion4() {
    for (const auto& fam : corpus()) {
        WeightTable tab = weight_table(fam);
        int d = parent_code(fam).min_hamming_distance();
        int r = d == kInfWeight ? tab.max_weight : (d - 1) / 2;
        const std::uint64_t qm1 = fam.field->q() - 1;
        for (int t = 0; t <= r; ++t) {
            std::uint64_t expected = pow_u64(qm1, t) * binom(fam.size(), t);
            expect(tab.spheres[t] == expected, "small-sphere formula failed");
        }
    }
}

// 5. convexity of projective tables; the two normality counterexamples; the
// convex <=> correction-normal & equal-detection-normal equivalence,
// exhaustively over weight tables on F_2^3 with max weight <= 3
void criterion5() {
    for (const auto& fam : corpus())
        expect(is_convex(weight_table(fam)), "projective table not convex");

    std::vector<std::uint16_t> mod(16);
    for (std::uint64_t i = 0; i < 16; ++i)
        mod[i] = (std::uint16_t)hamming_weight(vector_from_index(f2, 4, i));
    mod[15] = 3;
    auto m = normality(f2, 4, mod);
    expect(m.correction_normal, "modified Hamming must stay correction-normal");
    expect(!m.equal_detection_normal && m.detection_sigma == 2 && m.detection_witness &&
               *m.detection_witness == vec(f2, {1, 1, 1, 1}),
           "sigma_eq(0000,1111) = 2 witness missing");

    auto d = normality(f2, 2, {0, 2, 2, 4});
    expect(!d.correction_normal && d.correction_tau == 1, "tau(00,10) = 1 witness missing");
    expect(d.equal_detection_normal, "doubled Hamming must stay equal-detection-normal");

    // exhaustive equivalence on F_2^3: assign weights in {1,2,3} to the 7
    // nonzero vectors; keep the triangle-inequality tables (weight functions)
    int tables = 0, convex_count = 0;
    std::vector<std::uint16_t> w(8, 0);
    for (int code = 0; code < 2187; ++code) {
        int c = code;
        for (int i = 1; i < 8; ++i, c /= 3) w[i] = (std::uint16_t)(1 + c % 3);
        bool triangle = true;
        for (int x = 0; x < 8 && triangle; ++x)
            for (int y = 0; y < 8; ++y)
                if (w[x ^ y] > w[x] + w[y]) { triangle = false; break; }
        if (!triangle) continue;
        ++tables;
        bool cvx = is_convex(f2, 3, w);
        auto r = normality(f2, 3, w);
        expect(cvx == (r.correction_normal && r.equal_detection_normal),
               "convex <=> both-normal equivalence failed");
        convex_count += cvx;
    }
    expect(tables > 100 && convex_count > 0, "table enumeration degenerate");
}

// 6. mu profiles of the three examples and the rank Singleton values
void criterion6() {
    for (int t = 0; t <= 4; ++t)
        expect(mu(hamming_family(f2, 4), t).value == t, "hamming mu(t) != t");
    for (auto [f, n] : {std::pair{f2, 4}, {f3, 3}}) {
        auto fam = phase_rotation_family(f, n);
        int top = phase_weight_upper_bound(f, n);
        for (int t = 0; t <= n; ++t)
            expect(mu(fam, t).value == (t < top ? t : n), "phase mu profile mismatch");
    }
    auto rk23 = rank_family(f2, 2, 3);
    expect(mu(rk23, 1).value == 3 && mu(rk23, 2).value == 6, "rank(2,3) mu mismatch");
    expect(singleton_bound(rank_family(f2, 2, 2), 2).mu_bound == pow_u64(2, 2 * (2 - 2 + 1)),
           "rank(2,2) singleton mismatch");
    expect(singleton_bound(rk23, 2).mu_bound == pow_u64(2, 3 * (2 - 2 + 1)),
           "rank(2,3) singleton mismatch");
}

// 7. the 14-point F_2^10 family: parent distance 6, anticode gap at t = 2
void criterion7() {
    Budget big{std::uint64_t(1) << 24, std::uint64_t(1) << 26};
    auto fam = anticode_gap_family_f2_10();
    expect(parent_code(fam).min_hamming_distance(big) == 6, "parent d_H != 6");
    WeightTable tab = weight_table(fam, big);
    std::vector<FqVector> gens;
    for (int i : {0, 2, 4}) {
        FqVector v = zero_vector(f2, 10);
        v.c[i] = v.c[i + 1] = 1;
        gens.push_back(v);
    }
    for (const auto& v : enumerate_subspace(f2, 10, gens, big))
        expect(tab.at(v) <= 2, "witness span leaves B_2");
    auto ex = exact_anticode_max(fam, 2, 3, big);
    expect(ex.dim == 3, "exact anticode max != 3");
    expect(mu(tab, 2, big).value == 2, "mu(2) != 2");
}

// 8. the F_7 pair: matroid-equivalent, linearly inequivalent, equal spheres;
// ball formula = BFS on the pair, hamming(<=3), phase_rotation(<=3)
void criterion8() {
    auto F = family_from_vectors(f7, {vec(f7, {1, 0}), vec(f7, {0, 1}), vec(f7, {1, 1}),
                                      vec(f7, {1, 2})});
    auto G = family_from_vectors(f7, {vec(f7, {1, 0}), vec(f7, {0, 1}), vec(f7, {1, 1}),
                                      vec(f7, {1, 3})});
    expect(same_points(extended_family(F), F) && same_points(extended_family(G), G),
           "dim-2 families must be closed under extension");
    expect(extended_matroid_equivalent(F, G).has_value(), "pair not matroid-equivalent");
    expect(!are_equivalent(F, G).has_value(), "pair must not be linearly equivalent");
    expect(weight_table(F).spheres == weight_table(G).spheres, "sphere sizes differ");

    auto check_ball_formula = [](const SpanningFamily& fam) {
        WeightTable t = weight_table(fam);
        for (int r = 0; r <= fam.ambient_dim; ++r) {
            std::uint64_t bfs = r <= t.max_weight ? t.balls[r] : t.balls.back();
            expect(ball_size_via_extended_matroid(fam, r, {}, 64) == bfs,
                   "ball formula != BFS");
        }
    };
    check_ball_formula(F);
    check_ball_formula(G);
    for (int n = 1; n <= 3; ++n) {
        check_ball_formula(hamming_family(f2, n));
        check_ball_formula(hamming_family(f3, n));
        if (n >= 2) {
            check_ball_formula(phase_rotation_family(f2, n));
            check_ball_formula(phase_rotation_family(f3, n));
        }
    }
}

// 9. extended family of phase_rotation(3)/F_3: exactly the points whose
// coordinates take at most two values, one of which is zero
void criterion9() {
    auto ext = extended_family(phase_rotation_family(f3, 3));
    std::vector<FqVector> expect_pts;
    for (std::uint64_t mask = 1; mask < 8; ++mask) {
        FqVector v = zero_vector(f3, 3);
        for (int i = 0; i < 3; ++i)
            if (mask & (1u << i)) v.c[i] = 1;
        expect_pts.push_back(v);
    }
    expect(same_points(ext, family_from_vectors(f3, expect_pts)),
           "extension != 0/1 indicator points");
}

// 10. perfect-code transfer through the phase_rotation(6) parent map
void criterion10() {
    auto rep = perfect_transfer(hamming_7_4(), parent_function(phase_rotation_family(f2, 6)));
    expect(rep.hypothesis_ok, "transfer hypothesis must hold");
    expect(rep.f_t == 1, "image not F-perfect with t = 1");
    expect(rep.hamming_t == 1, "Hamming side not perfect with t = 1");
    expect(rep.d_f == 3 && rep.d_hamming == 3 && rep.agree, "distances must agree at 3");
}

// 11. embedding verification on 20 random weights; Pareto frontier at the
// three stated triples
void criterion11() {
    std::mt19937 rng(0xE71BED);
    int done = 0;
    std::vector<std::pair<Field, int>> spaces{{f2, 2}, {f3, 2}, {f2, 3}};
    while (done < 20) {
        auto [f, n] = spaces[done % spaces.size()];
        std::vector<std::uint16_t> w(pow_u64(f->q(), n), 0);
        for (const auto& p : projective_points(f, n)) {
            std::uint16_t t = (std::uint16_t)(1 + rng() % 4);
            for (int lam = 1; lam < f->q(); ++lam) w[rank_index(scale(lam, p))] = t;
        }
        try {
            WeightedSpace V = WeightedSpace::make(f, n, w);
            expect(embed_into_projective(V).verified, "fiber minima != weights");
            ++done;
        } catch (const Error&) {
            // triangle violated; redraw
        }
    }

    Budget big{std::uint64_t(1) << 24, std::uint64_t(1) << 24};
    auto check_frontier = [&](int t1, int t2, int t3) {
        auto fr = pareto_frontier_f2_dim2(t1, t2, t3);
        expect(2 * fr[0].first - fr[0].second == t1 + t2 + t3 - 4, "2a-b identity failed");
        WeightedSpace V = WeightedSpace::make(
            f2, 2, {0, (std::uint16_t)t1, (std::uint16_t)t2, (std::uint16_t)t3});
        auto [a, b] = fr[0];
        expect(is_ab_embeddable(V, a, b, big).has_value(), "frontier pair not embeddable");
        if (a > 0) expect(!is_ab_embeddable(V, a - 1, b, big).has_value(), "(a-1,b) embeddable");
        if (b > 0) expect(!is_ab_embeddable(V, a, b - 1, big).has_value(), "(a,b-1) embeddable");
    };
    check_frontier(1, 1, 1);
    check_frontier(1, 1, 2);
    check_frontier(2, 2, 3);
}

// 12. |aut(phase_rotation(2)/F_2)| = |stab(repetition_3)| = 6, weights preserved
void criterion12() {
    auto fam = phase_rotation_family(f2, 2);
    auto aut = aut_group(fam);
    auto stab = hamming_stabilizer(parent_code(fam));
    expect(aut.size() == 6 && stab.size() == 6, "group orders != 6");
    WeightTable t = weight_table(fam);
    for (const auto& L : aut)
        for (std::uint64_t i = 0; i < t.states(); ++i) {
            FqVector x = vector_from_index(f2, 2, i);
            expect(t.w[i] == t.at(apply(L, x)), "automorphism moved a weight");
        }
}

// 13. |B_t^{F u f}| = |S_t^F| + q|B_{t-1}^F| for t <= wt_F(f)/2, BFS oracle
void criterion13() {
    std::mt19937 rng(0xADD5EC);
    int done = 0;
    while (done < 30) {
        const Field& f = done % 2 ? f3 : f2;
        int n = 2 + (int)(rng() % 3);
        std::uint64_t npoints = (pow_u64(f->q(), n) - 1) / (f->q() - 1);
        int size = n + (int)(rng() % 3);
        if ((std::uint64_t)size >= npoints) continue;
        SpanningFamily fam = random_spanning_family(f, n, size, rng);
        if ((std::uint64_t)fam.size() >= npoints) continue;
        // pick a fresh point
        FqVector fnew = zero_vector(f, n);
        do {
            fnew = vector_from_index(f, n, 1 + rng() % (pow_u64(f->q(), n) - 1));
        } while (fam.contains(fnew));
        std::uint32_t wf = weight_table(fam).at(fnew);
        SpanningFamily grown = family_union(fam, family_from_vectors(f, {fnew}));
        WeightTable gt = weight_table(grown);
        for (int t = 0; 2 * t <= (int)wf; ++t) {
            std::uint64_t lhs = t <= gt.max_weight ? gt.balls[t] : gt.balls.back();
            auto r = add_vector_ball_sizes(fam, fnew, t);
            expect(r.tight, "t <= wt/2 must be tight");
            expect(r.value == lhs, "recurrence != BFS ball size");
        }
        ++done;
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* summary;
        std::function<void()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "phase-rotation figure value and representation", criterion1},
        {2, "weight table = quotient of Hamming through the parent function (50 families)",
         criterion2},
        {3, "sphere sizes = coset leader weight distribution", criterion3},
        {4, "small-sphere formula below half the parent distance", criterion4},
        {5, "convexity and normality, incl. exhaustive F_2^3 equivalence", criterion5},
        {6, "mu profiles and Singleton-type bounds", criterion6},
        {7, "anticode gap on the 14-point F_2^10 family", criterion7},
        {8, "matroid equivalence and the extended-matroid ball formula", criterion8},
        {9, "extended family of phase_rotation(3)/F_3", criterion9},
        {10, "perfect-code transfer through the parent map", criterion10},
        {11, "embeddings verified; Pareto frontier on F_2^2", criterion11},
        {12, "isometry group = parent-code stabilizer, order 6", criterion12},
        {13, "add-a-vector ball recurrence (30 random pairs)", criterion13},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            c.fn();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failed;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "criterion " << c.id << ": " << verdict << " — " << c.summary << " (" << ms
                  << " ms)";
        if (!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << std::endl;
    }
    if (failed) std::cout << failed << " criterion(s) failed" << std::endl;
    else std::cout << "all 13 criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
