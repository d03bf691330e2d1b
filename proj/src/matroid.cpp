#include "projmet/matroid.hpp"

#include <algorithm>
#include <map>

namespace projmet {

LinearMatroid::LinearMatroid(const SpanningFamily& fam) : cols_(family_columns(fam)) {
    if (ground_size() > 31) throw Error("matroid ground set too large (max 31)");
}

LinearMatroid::LinearMatroid(FqMatrix columns) : cols_(std::move(columns)) {
    if (ground_size() > 31) throw Error("matroid ground set too large (max 31)");
}

int LinearMatroid::popcount(std::uint32_t m) {
    int c = 0;
    while (m) {
        m &= m - 1;
        ++c;
    }
    return c;
}

int LinearMatroid::rank(std::uint32_t mask) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->ranks.find(mask);
        if (it != cache_->ranks.end()) return it->second;
    }
    FqMatrix rows = transpose(cols_);
    std::vector<FqVector> sel;
    for (int i = 0; i < ground_size(); ++i)
        if (mask & (1u << i)) sel.push_back(rows.row(i));
    int r = sel.empty() ? 0 : projmet::rank(FqMatrix::from_rows(cols_.field, sel, cols_.rows));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->ranks[mask] = r;
    return r;
}

int LinearMatroid::rank(const std::vector<int>& subset) const {
    std::uint32_t mask = 0;
    for (int i : subset) {
        if (i < 0 || i >= ground_size()) throw Error("matroid index out of range");
        mask |= 1u << i;
    }
    return rank(mask);
}

bool LinearMatroid::independent(const std::vector<int>& subset) const {
    return rank(subset) == (int)subset.size();
}

std::vector<std::vector<int>> circuits(const LinearMatroid& m, int max_size, const Budget& budget) {
    const int n = m.ground_size();
    std::vector<std::vector<int>> out;
    std::uint64_t steps = 0;
    // extend independent sets; I u {e} dependent with I independent contains a
    // unique circuit, which is I u {e} itself iff dropping any element
    // restores independence
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() >= max_size) return;
        for (int e = start; e < n; ++e) {
            if (++steps > budget.max_search) throw BudgetError("circuit enumeration exceeds budget");
            cur.push_back(e);
            int r = m.rank(cur);
            if (r == (int)cur.size()) {
                self(self, e + 1);
            } else if (cur.size() >= 2 || r == 0) {
                bool minimal = true;
                for (size_t drop = 0; drop < cur.size() && minimal; ++drop) {
                    std::vector<int> sub;
                    for (size_t j = 0; j < cur.size(); ++j)
                        if (j != drop) sub.push_back(cur[j]);
                    minimal = m.independent(sub);
                }
                if (minimal) out.push_back(cur);
            }
            cur.pop_back();
        }
    };
    // loops (rank-0 singletons) are circuits of size 1
    for (int e = 0; e < n; ++e)
        if (m.rank(std::vector<int>{e}) == 0) out.push_back({e});
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Normals of the distinct hyperplanes spanned by independent (N-1)-subsets of
// the family, as canonical points.
std::vector<FqVector> hyperplane_normals(const SpanningFamily& fam, const Budget& budget) {
    const int n = fam.ambient_dim, nn = fam.size();
    std::map<std::vector<int>, char> seen;
    std::vector<FqVector> normals;
    if (n == 0) return normals;
    std::vector<int> comb(n - 1);
    if (n == 1) {
        // hyperplane = {0}; the empty stack has the whole space as kernel
        return normals;
    }
    for (int i = 0; i < n - 1; ++i) comb[i] = i;
    std::uint64_t steps = 0;
    while (true) {
        if (++steps > budget.max_search) throw BudgetError("hyperplane enumeration exceeds budget");
        std::vector<FqVector> sel;
        for (int i : comb) sel.push_back(fam.points[i]);
        FqMatrix M = FqMatrix::from_rows(fam.field, sel, n);
        if (projmet::rank(M) == n - 1) {
            FqMatrix K = kernel_basis(M); // 1 x n
            FqVector normal = canonical_point(K.row(0));
            if (!seen.count(normal.c)) {
                seen[normal.c] = 1;
                normals.push_back(std::move(normal));
            }
        }
        int i = n - 2;
        while (i >= 0 && comb[i] == nn - (n - 1) + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < n - 1; ++j) comb[j] = comb[j - 1] + 1;
    }
    return normals;
}

} // namespace

SpanningFamily extended_family(const SpanningFamily& fam, const Budget& budget) {
    const int n = fam.ambient_dim;
    std::vector<FqVector> normals = hyperplane_normals(fam, budget);
    // <v> lies in F-bar iff the normals of the hyperplanes through v cut it
    // out, i.e. have rank N-1.
    std::vector<FqVector> pts;
    for (const auto& v : projective_points(fam.field, n, budget)) {
        std::vector<FqVector> ortho;
        for (const auto& h : normals) {
            int dot = 0;
            for (int i = 0; i < n; ++i)
                dot = fam.field->add(dot, fam.field->mul(h.c[i], v.c[i]));
            if (dot == 0) ortho.push_back(h);
        }
        int r = ortho.empty() ? 0 : projmet::rank(FqMatrix::from_rows(fam.field, ortho, n));
        if (r == n - 1) pts.push_back(v);
    }
    SpanningFamily out = family_from_vectors(fam.field, pts);
    for (const auto& p : fam.points)
        if (out.find(p) < 0) throw Error("internal: extension lost a family point");
    return out;
}

namespace {

struct MatroidIsoSearch {
    const LinearMatroid& m1;
    const LinearMatroid& m2;
    const Budget& budget;
    int n;
    std::vector<char> indep1, indep2; // per mask
    std::vector<int> psi, used;
    std::uint64_t steps = 0;

    MatroidIsoSearch(const LinearMatroid& a, const LinearMatroid& b, const Budget& bud)
        : m1(a), m2(b), budget(bud), n(a.ground_size()) {
        std::uint64_t masks = std::uint64_t(1) << n;
        if (masks > budget.max_search) throw BudgetError("matroid ground set exceeds search budget");
        indep1.resize(masks);
        indep2.resize(masks);
        for (std::uint32_t m = 0; m < masks; ++m) {
            indep1[m] = m1.independent(m);
            indep2[m] = m2.independent(m);
        }
        psi.assign(n, -1);
        used.assign(n, 0);
    }

    bool consistent(int i) {
        // all subsets of the assigned prefix containing i
        std::uint32_t others = 0;
        for (int j = 0; j < i; ++j) others |= 1u << j;
        // iterate subsets of `others`
        std::uint32_t sub = others;
        while (true) {
            std::uint32_t t1 = sub | (1u << i);
            std::uint32_t t2 = 0;
            for (int j = 0; j <= i; ++j)
                if (t1 & (1u << j)) t2 |= 1u << psi[j];
            if (indep1[t1] != indep2[t2]) return false;
            if (sub == 0) break;
            sub = (sub - 1) & others;
        }
        return true;
    }

    bool dfs(int i) {
        if (++steps > budget.max_search) throw BudgetError("matroid isomorphism search exceeds budget");
        if (i == n) return true;
        for (int t = 0; t < n; ++t) {
            if (used[t]) continue;
            psi[i] = t;
            used[t] = 1;
            if (consistent(i) && dfs(i + 1)) return true;
            used[t] = 0;
            psi[i] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> matroid_isomorphic(const LinearMatroid& m1, const LinearMatroid& m2,
                                                   const Budget& budget) {
    if (m1.ground_size() != m2.ground_size()) return std::nullopt;
    MatroidIsoSearch s(m1, m2, budget);
    if (!s.dfs(0)) return std::nullopt;
    return s.psi;
}

std::optional<std::vector<int>> extended_matroid_equivalent(const SpanningFamily& F,
                                                            const SpanningFamily& G,
                                                            const Budget& budget) {
    require_same_field(F.field, G.field);
    if (F.size() != G.size() || F.ambient_dim != G.ambient_dim) return std::nullopt;
    SpanningFamily Fbar = extended_family(F, budget);
    SpanningFamily Gbar = extended_family(G, budget);
    if (Fbar.size() != Gbar.size()) return std::nullopt;

    std::vector<char> in_f(Fbar.size(), 0), in_g(Gbar.size(), 0);
    for (const auto& p : F.points) in_f[Fbar.find(p)] = 1;
    for (const auto& p : G.points) in_g[Gbar.find(p)] = 1;

    LinearMatroid m1(Fbar), m2(Gbar);
    // same search but targets restricted so that psi(F) = G
    struct Restricted : MatroidIsoSearch {
        const std::vector<char>&inf, &ing;
        Restricted(const LinearMatroid& a, const LinearMatroid& b, const Budget& bud,
                   const std::vector<char>& f_, const std::vector<char>& g_)
            : MatroidIsoSearch(a, b, bud), inf(f_), ing(g_) {}
        bool dfs2(int i) {
            if (++steps > budget.max_search) throw BudgetError("matroid isomorphism search exceeds budget");
            if (i == n) return true;
            for (int t = 0; t < n; ++t) {
                if (used[t] || inf[i] != ing[t]) continue;
                psi[i] = t;
                used[t] = 1;
                if (consistent(i) && dfs2(i + 1)) return true;
                used[t] = 0;
                psi[i] = -1;
            }
            return false;
        }
    };
    Restricted s(m1, m2, budget, in_f, in_g);
    if (!s.dfs2(0)) return std::nullopt;
    return s.psi;
}

std::uint64_t ball_size_via_extended_matroid(const SpanningFamily& fam, int t, const Budget& budget,
                                             int max_indep_sets) {
    if (t <= 0) return 1;
    const int n = fam.ambient_dim;
    const Field& f = fam.field;
    t = std::min(t, n);

    LinearMatroid mat(fam);
    // independent t-subsets of F
    std::vector<std::vector<int>> indep_sets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == t) {
            indep_sets.push_back(cur);
            return;
        }
        for (int e = start; e < fam.size(); ++e) {
            cur.push_back(e);
            if (mat.independent(cur)) self(self, e + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    if ((int)indep_sets.size() > max_indep_sets)
        throw BudgetError("too many independent t-subsets for inclusion-exclusion (" +
                          std::to_string(indep_sets.size()) + " > " + std::to_string(max_indep_sets) + ")");
    if (indep_sets.empty()) return 1;

    SpanningFamily fbar = extended_family(fam, budget);
    // normal-space basis per independent set (kernel of the span)
    std::vector<FqMatrix> normals;
    for (const auto& I : indep_sets) {
        std::vector<FqVector> sel;
        for (int i : I) sel.push_back(fam.points[i]);
        normals.push_back(kernel_basis(FqMatrix::from_rows(f, sel, n)));
    }

    std::uint64_t total_subsets = std::uint64_t(1) << indep_sets.size();
    long long acc = 0;
    for (std::uint64_t H = 1; H < total_subsets; ++H) {
        // intersection of the spans = kernel of the stacked normals
        std::vector<FqVector> stack;
        for (size_t i = 0; i < indep_sets.size(); ++i)
            if (H & (std::uint64_t(1) << i))
                for (const auto& r : normals[i].row_list()) stack.push_back(r);
        FqMatrix inter = kernel_basis(FqMatrix::from_rows(f, stack, n));
        std::vector<FqVector> inter_rows = inter.row_list();
        // greedy maximal independent subset of F-bar inside the intersection
        std::vector<FqVector> chosen;
        for (const auto& p : fbar.points) {
            if (!in_span(inter_rows, p)) continue;
            if (!in_span(chosen, p)) chosen.push_back(p);
        }
        std::uint64_t term = pow_u64(f->q(), (unsigned)chosen.size());
        acc += (LinearMatroid::popcount((std::uint32_t)H) % 2 == 1) ? (long long)term : -(long long)term;
    }
    return (std::uint64_t)acc;
}

} // namespace projmet
