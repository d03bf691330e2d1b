#include "projmet/isometry.hpp"

#include <algorithm>
#include <map>

namespace projmet {

MonomialMap MonomialMap::identity(const Field& f, int n) {
    MonomialMap m{f, std::vector<int>(n), std::vector<int>(n, 1)};
    for (int i = 0; i < n; ++i) m.perm[i] = i;
    return m;
}

FqVector apply(const MonomialMap& m, const FqVector& x) {
    require_same_field(m.field, x.field);
    if (x.size() != m.size()) throw Error("length mismatch");
    FqVector r = zero_vector(m.field, m.size());
    for (int i = 0; i < m.size(); ++i)
        r.c[m.perm[i]] = m.field->mul(m.scal[i], x.c[i]);
    return r;
}

MonomialMap compose(const MonomialMap& a, const MonomialMap& b) {
    require_same_field(a.field, b.field);
    if (a.size() != b.size()) throw Error("length mismatch");
    MonomialMap r{a.field, std::vector<int>(a.size()), std::vector<int>(a.size())};
    for (int i = 0; i < a.size(); ++i) {
        r.perm[i] = a.perm[b.perm[i]];
        r.scal[i] = a.field->mul(a.scal[b.perm[i]], b.scal[i]);
    }
    return r;
}

MonomialMap inverse(const MonomialMap& m) {
    MonomialMap r{m.field, std::vector<int>(m.size()), std::vector<int>(m.size())};
    for (int i = 0; i < m.size(); ++i) {
        r.perm[m.perm[i]] = i;
        r.scal[m.perm[i]] = m.field->inv(m.scal[i]);
    }
    return r;
}

FqMatrix to_matrix(const MonomialMap& m) {
    FqMatrix M = FqMatrix::zero(m.field, m.size(), m.size());
    for (int i = 0; i < m.size(); ++i) M.at(m.perm[i], i) = m.scal[i];
    return M;
}

LinearCode apply(const MonomialMap& m, const LinearCode& code) {
    std::vector<FqVector> rows;
    for (const auto& r : code.basis().row_list()) rows.push_back(apply(m, r));
    return LinearCode(code.field(), code.length(), rows);
}

LinearIso make_linear_iso(const FqMatrix& m) {
    if (m.rows != m.cols || rank(m) != m.rows) throw Error("map is not invertible");
    return {m};
}

LinearIso compose(const LinearIso& a, const LinearIso& b) { return {matmul(a.mat, b.mat)}; }

namespace {

// canonical-point -> family index
std::map<std::vector<int>, int> point_index(const SpanningFamily& fam) {
    std::map<std::vector<int>, int> m;
    for (int i = 0; i < fam.size(); ++i) m[fam.points[i].c] = i;
    return m;
}

} // namespace

bool is_isometry(const LinearIso& L, const SpanningFamily& F, const SpanningFamily& G) {
    if (F.size() != G.size()) return false;
    auto gidx = point_index(G);
    std::vector<char> hit(G.size(), 0);
    for (const auto& f : F.points) {
        FqVector img = apply(L, f);
        if (img.is_zero()) return false;
        auto it = gidx.find(canonical_point(img).c);
        if (it == gidx.end() || hit[it->second]) return false;
        hit[it->second] = 1;
    }
    return true;
}

MonomialMap lift(const LinearIso& L, const SpanningFamily& F, const SpanningFamily& G) {
    if (!is_isometry(L, F, G)) throw Error("map is not an isometry between the families");
    auto gidx = point_index(G);
    MonomialMap m{F.field, std::vector<int>(F.size()), std::vector<int>(F.size())};
    for (int i = 0; i < F.size(); ++i) {
        FqVector img = apply(L, F.points[i]);
        FqVector rep = canonical_point(img);
        int j = gidx.at(rep.c);
        int pos = 0;
        while (rep.c[pos] == 0) ++pos;
        m.perm[i] = j;
        m.scal[i] = img.c[pos]; // img = scal * rep
    }
    return m;
}

namespace {

// Shared state of the equivalence backtracking: maps an independent basis
// B subset of F onto scaled points of G level by level; at level k every point of
// F inside <b_1..b_k> must land on a distinct point of G.
struct EquivSearch {
    const SpanningFamily& F;
    const SpanningFamily& G;
    const Budget& budget;
    std::uint64_t steps = 0;

    std::vector<int> basis_idx;            // indices in F of b_1..b_N
    std::vector<std::vector<int>> coeffs;  // per F-point: coefficients over the basis
    std::vector<int> level;                // per F-point: 1 + last nonzero coeff position
    std::vector<std::vector<int>> by_level;
    std::map<std::vector<int>, int> gidx;

    std::vector<int> target;  // basis image: index into G per level
    std::vector<int> scalar;  // basis image scalar per level
    std::vector<int> assigned; // F index -> G index or -1
    std::vector<char> used;    // G index taken

    explicit EquivSearch(const SpanningFamily& F_, const SpanningFamily& G_, const Budget& b)
        : F(F_), G(G_), budget(b) {}

    bool prepare() {
        // greedy lexicographic independent basis inside F
        std::vector<FqVector> bas;
        for (int i = 0; i < F.size() && (int)bas.size() < F.ambient_dim; ++i) {
            if (!in_span(bas, F.points[i])) {
                bas.push_back(F.points[i]);
                basis_idx.push_back(i);
            }
        }
        if ((int)bas.size() != F.ambient_dim) return false; // F does not span
        coeffs.resize(F.size());
        level.assign(F.size(), 0);
        by_level.assign(F.ambient_dim + 1, {});
        for (int i = 0; i < F.size(); ++i) {
            auto c = solve_rows(bas, F.points[i]);
            coeffs[i] = *c;
            int lv = 0;
            for (int j = 0; j < (int)c->size(); ++j)
                if ((*c)[j]) lv = j + 1;
            level[i] = lv;
            by_level[lv].push_back(i);
        }
        gidx = point_index(G);
        assigned.assign(F.size(), -1);
        used.assign(G.size(), 0);
        return true;
    }

    // image of F-point i under the partial map (levels 1..k fixed)
    FqVector image(int i) {
        const Field& f = F.field;
        FqVector acc = zero_vector(f, G.ambient_dim);
        for (int j = 0; j < level[i]; ++j) {
            int c = coeffs[i][j];
            if (!c) continue;
            acc = add(acc, scale(f->mul(c, scalar[j]), G.points[target[j]]));
        }
        return acc;
    }

    bool dfs(int k) {
        if (++steps > budget.max_search) throw BudgetError("equivalence search exceeds budget");
        if (k == F.ambient_dim) return true;
        const int q = F.field->q();
        for (int t = 0; t < G.size(); ++t) {
            if (used[t]) continue;
            for (int lam = 1; lam < (k == 0 ? 2 : q); ++lam) {
                target.resize(k + 1);
                scalar.resize(k + 1);
                target[k] = t;
                scalar[k] = lam;
                // every F-point whose expansion closes at this level must map
                // into G, injectively
                std::vector<int> touched;
                bool ok = true;
                for (int i : by_level[k + 1]) {
                    FqVector img = image(i);
                    if (img.is_zero()) { ok = false; break; }
                    auto it = gidx.find(canonical_point(img).c);
                    if (it == gidx.end() || used[it->second]) { ok = false; break; }
                    used[it->second] = 1;
                    assigned[i] = it->second;
                    touched.push_back(i);
                }
                if (ok && dfs(k + 1)) return true;
                for (int i : touched) {
                    used[assigned[i]] = 0;
                    assigned[i] = -1;
                }
            }
        }
        return false;
    }
};

} // namespace

std::optional<LinearIso> are_equivalent(const SpanningFamily& F, const SpanningFamily& G,
                                        const Budget& budget) {
    require_same_field(F.field, G.field);
    if (F.size() != G.size() || F.ambient_dim != G.ambient_dim) return std::nullopt;
    if (F.spanning != G.spanning) return std::nullopt; // invertible maps preserve spanning
    EquivSearch s(F, G, budget);
    if (!s.prepare()) throw Error("equivalence requires spanning families");
    if (!s.dfs(0)) return std::nullopt;
    // L maps b_k -> scalar_k * g_{target_k}: L = U * B^{-1} on columns.
    const Field& f = F.field;
    int n = F.ambient_dim;
    FqMatrix B = FqMatrix::zero(f, n, n), U = FqMatrix::zero(f, n, n);
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) {
            B.at(r, k) = F.points[s.basis_idx[k]].c[r];
            U.at(r, k) = f->mul(s.scalar[k], G.points[s.target[k]].c[r]);
        }
    LinearIso L{matmul(U, inverse(B))};
    if (!is_isometry(L, F, G)) throw Error("internal: equivalence witness failed the check");
    return L;
}

namespace {

// Per-coordinate invariant under monomial maps: for each weight, the number
// of codewords with a nonzero entry at that coordinate.
std::vector<std::vector<std::uint64_t>> column_invariants(const LinearCode& code,
                                                          const Budget& budget) {
    std::vector<std::vector<std::uint64_t>> inv(code.length(),
                                                std::vector<std::uint64_t>(code.length() + 1, 0));
    for (const auto& c : code.codewords(budget)) {
        int w = hamming_weight(c);
        for (int j = 0; j < code.length(); ++j)
            if (c.c[j]) ++inv[j][w];
    }
    return inv;
}

// DFS over monomial maps position by position in lexicographic (perm, scal)
// order; calls sink on every full map sending c1 onto c2.
template <typename Sink>
void monomial_search(const LinearCode& c1, const LinearCode& c2, const Budget& budget, Sink&& sink) {
    const Field& f = c1.field();
    const int n = c1.length(), q = f->q();
    auto inv1 = column_invariants(c1, budget);
    auto inv2 = column_invariants(c2, budget);

    std::vector<int> perm(n, -1), scal(n, 1);
    std::vector<char> used(n, 0);
    std::uint64_t steps = 0;

    auto full_check = [&]() {
        MonomialMap m{f, perm, scal};
        return apply(m, c1) == c2;
    };

    auto rec = [&](auto&& self, int i) -> bool {
        if (++steps > budget.max_search) throw BudgetError("monomial search exceeds budget");
        if (i == n) {
            if (full_check()) {
                MonomialMap m{f, perm, scal};
                if (sink(m)) return true; // stop requested
            }
            return false;
        }
        for (int t = 0; t < n; ++t) {
            if (used[t] || inv1[i] != inv2[t]) continue;
            used[t] = 1;
            perm[i] = t;
            for (int lam = 1; lam < q; ++lam) {
                scal[i] = lam;
                if (self(self, i + 1)) return true;
            }
            scal[i] = 1;
            used[t] = 0;
            perm[i] = -1;
        }
        return false;
    };
    rec(rec, 0);
}

} // namespace

std::vector<MonomialMap> hamming_stabilizer(const LinearCode& code, const Budget& budget) {
    std::vector<MonomialMap> out;
    monomial_search(code, code, budget, [&](const MonomialMap& m) {
        out.push_back(m);
        return false;
    });
    // contract: lexicographic on (perm, scal) as concatenated tuples
    std::sort(out.begin(), out.end(), [](const MonomialMap& a, const MonomialMap& b) {
        if (a.perm != b.perm) return a.perm < b.perm;
        return a.scal < b.scal;
    });
    return out;
}

std::optional<MonomialMap> are_hamming_equivalent(const LinearCode& c1, const LinearCode& c2,
                                                  const Budget& budget) {
    if (c1.length() != c2.length() || c1.dim() != c2.dim()) return std::nullopt;
    require_same_field(c1.field(), c2.field());
    std::optional<MonomialMap> found;
    monomial_search(c1, c2, budget, [&](const MonomialMap& m) {
        found = m;
        return true;
    });
    return found;
}

std::vector<LinearIso> aut_group(const SpanningFamily& F, const Budget& budget) {
    ParentFunction pf = parent_function(F);
    LinearCode pc = parent_code(pf);
    const Field& f = F.field;
    const int n = F.ambient_dim;

    // independent basis among the family points, plus coefficient solve data
    std::vector<FqVector> bas;
    std::vector<int> bidx;
    for (int i = 0; i < F.size() && (int)bas.size() < n; ++i)
        if (!in_span(bas, F.points[i])) {
            bas.push_back(F.points[i]);
            bidx.push_back(i);
        }
    if ((int)bas.size() != n) throw Error("aut_group requires a spanning family");
    FqMatrix B = FqMatrix::zero(f, n, n);
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) B.at(r, k) = bas[k].c[r];
    FqMatrix Binv = inverse(B);

    std::vector<LinearIso> out;
    for (const auto& m : hamming_stabilizer(pc, budget)) {
        // Phi(m): L(f_i) = scal_i * f_{perm_i}; solve L from the basis images.
        FqMatrix U = FqMatrix::zero(f, n, n);
        for (int k = 0; k < n; ++k) {
            int i = bidx[k];
            FqVector img = scale(m.scal[i], F.points[m.perm[i]]);
            for (int r = 0; r < n; ++r) U.at(r, k) = img.c[r];
        }
        out.push_back({matmul(U, Binv)});
    }
    return out;
}

} // namespace projmet
