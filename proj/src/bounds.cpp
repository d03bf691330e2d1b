#include "projmet/bounds.hpp"

#include <algorithm>

namespace projmet {

namespace {

// span(current + candidate) stays inside B_t: check every new span element.
bool span_stays_inside(const WeightTable& tab, const std::vector<FqVector>& span_elems,
                       const FqVector& cand, int t) {
    const Field& f = tab.family.field;
    const int q = f->q();
    for (const auto& v : span_elems)
        for (int lam = 1; lam < q; ++lam) {
            FqVector w = add(v, scale(lam, cand));
            if (tab.w[rank_index(w)] == kInfWeight || tab.w[rank_index(w)] > t) return false;
        }
    return true;
}

void grow_span(const Field& f, std::vector<FqVector>& span_elems, const FqVector& cand) {
    const int q = f->q();
    std::vector<FqVector> added;
    for (const auto& v : span_elems)
        for (int lam = 1; lam < q; ++lam) added.push_back(add(v, scale(lam, cand)));
    span_elems.insert(span_elems.end(), added.begin(), added.end());
}

} // namespace

MuValue mu(const WeightTable& tab, int t, const Budget& budget) {
    const SpanningFamily& fam = tab.family;
    if (t < 0) throw Error("mu needs t >= 0");
    MuValue best;
    std::vector<int> cur;
    std::vector<FqVector> basis;
    std::vector<FqVector> span_elems{zero_vector(fam.field, fam.ambient_dim)};
    std::uint64_t steps = 0;

    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() > best.value) {
            best.value = (int)cur.size();
            best.witness = cur;
        }
        for (int i = start; i < fam.size(); ++i) {
            if (++steps > budget.max_search) throw BudgetError("mu search exceeds budget");
            // prune: not enough elements left to beat the best
            if ((int)cur.size() + (fam.size() - i) <= best.value) return;
            const FqVector& cand = fam.points[i];
            if (tab.w[rank_index(cand)] > t) continue;
            if (in_span(basis, cand)) continue;
            if (!span_stays_inside(tab, span_elems, cand, t)) continue;
            size_t save = span_elems.size();
            grow_span(fam.field, span_elems, cand);
            basis.push_back(cand);
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
            basis.pop_back();
            span_elems.resize(save);
        }
    };
    rec(rec, 0);
    return best;
}

MuValue mu(const SpanningFamily& fam, int t, const Budget& budget) {
    return mu(weight_table(fam, budget), t, budget);
}

SingletonBound singleton_bound(const SpanningFamily& fam, int d, const Budget& budget) {
    if (d < 1) throw Error("distance must be >= 1");
    const int n = fam.ambient_dim;
    MuValue m = mu(fam, d - 1, budget);
    SingletonBound b;
    b.mu_value = m.value;
    b.mu_bound = pow_u64(fam.field->q(), (unsigned)(n - m.value));
    b.classical = pow_u64(fam.field->q(), (unsigned)std::max(0, n - d + 1));
    return b;
}

AnticodeMax exact_anticode_max(const SpanningFamily& fam, int t, int dim_cap, const Budget& budget) {
    WeightTable tab = weight_table(fam, budget);
    const Field& f = fam.field;
    const int n = fam.ambient_dim;

    // candidate generators: canonical points inside the ball
    std::vector<FqVector> ball_pts;
    for (const auto& v : projective_points(f, n, budget))
        if (tab.w[rank_index(v)] <= t) ball_pts.push_back(v);

    AnticodeMax best;
    std::vector<FqVector> basis;
    std::vector<FqVector> span_elems{zero_vector(f, n)};
    std::uint64_t steps = 0;

    // each subspace visited once: the next generator must be the minimal
    // rank-index canonical point of span(new) outside span(old)
    auto rec = [&](auto&& self, size_t start) -> void {
        if ((int)basis.size() > best.dim) {
            best.dim = (int)basis.size();
            best.witness = basis;
        }
        if ((int)basis.size() >= dim_cap) return;
        for (size_t i = start; i < ball_pts.size(); ++i) {
            if (++steps > budget.max_search) throw BudgetError("anticode search exceeds budget");
            const FqVector& cand = ball_pts[i];
            if (in_span(basis, cand)) continue;
            if (!span_stays_inside(tab, span_elems, cand, t)) continue;
            // canonical generation: cand must be minimal among the new points
            std::uint64_t cidx = rank_index(cand);
            bool minimal = true;
            for (const auto& v : span_elems) {
                for (int lam = 1; lam < f->q() && minimal; ++lam) {
                    FqVector w = add(v, scale(lam, cand));
                    if (rank_index(canonical_point(w)) < cidx) minimal = false;
                }
                if (!minimal) break;
            }
            if (!minimal) continue;
            size_t save = span_elems.size();
            grow_span(f, span_elems, cand);
            basis.push_back(cand);
            self(self, i + 1);
            basis.pop_back();
            span_elems.resize(save);
        }
    };
    rec(rec, 0);
    best.equals_mu = (best.dim == mu(tab, t, budget).value);
    return best;
}

SpanningFamily anticode_gap_family_f2_10() {
    Field f = FiniteField::make(2);
    std::vector<FqVector> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(unit_vector(f, 10, i));
    pts.push_back({f, {1, 1, 1, 1, 0, 0, 1, 0, 0, 0}});
    pts.push_back({f, {1, 1, 0, 0, 1, 1, 0, 1, 0, 0}});
    pts.push_back({f, {0, 0, 1, 1, 1, 1, 0, 0, 1, 0}});
    pts.push_back({f, {1, 1, 1, 1, 1, 1, 0, 0, 0, 1}});
    return family_from_vectors(f, pts);
}

SpanningFamily anticode_counterexample_family(const LinearCode& G, const Budget& budget) {
    if (G.dim() < 3) throw Error("precondition failed: need dim(G) >= 3");
    if (G.min_hamming_distance(budget) <= 3) throw Error("precondition failed: need d_H(G) > 3");
    const Field& f = G.field();
    const int n = G.length();
    std::vector<FqVector> nonzero;
    for (const auto& c : G.codewords(budget))
        if (!c.is_zero()) nonzero.push_back(c);
    const int total = n + (int)nonzero.size();
    std::vector<FqVector> pts;
    for (int i = 0; i < total; ++i) pts.push_back(unit_vector(f, total, i));
    for (size_t j = 0; j < nonzero.size(); ++j) {
        FqVector v = zero_vector(f, total);
        for (int i = 0; i < n; ++i) v.c[i] = nonzero[j].c[i];
        v.c[n + (int)j] = 1; // e_g + g
        pts.push_back(std::move(v));
    }
    return family_from_vectors(f, pts);
}

int phase_weight(const FqVector& x) {
    const Field& f = x.field;
    const int q = f->q(), n = x.size();
    int best = hamming_weight(x);
    for (int c = 1; c < q; ++c) {
        int w = 0;
        for (int i = 0; i < n; ++i) w += (x.c[i] != c);
        best = std::min(best, w + 1);
    }
    return best;
}

int phase_weight_upper_bound(const Field& f, int n) {
    const int q = f->q();
    return n - n / q; // ceil(N - N/q) = N - floor(N/q)
}

} // namespace projmet
