#include "projmet/embed.hpp"

#include <algorithm>
#include <set>

#include "projmet/weight.hpp"

namespace projmet {

WeightedSpace WeightedSpace::make(Field f, int n, std::vector<std::uint16_t> w, const Budget& budget) {
    const int q = f->q();
    std::uint64_t states = checked_pow(q, n, budget.max_states, "weighted space");
    if (w.size() != states) throw Error("weight array has the wrong size");
    if (w[0] != 0) throw Error("wt(0) must be 0");
    for (std::uint64_t x = 1; x < states; ++x) {
        if (w[x] == 0) throw Error("wt(x) must be positive for x != 0");
        if (w[x] == kInfWeight) throw Error("weight must be finitely valued");
    }
    // scale invariance
    for (std::uint64_t x = 1; x < states; ++x) {
        FqVector v = vector_from_index(f, n, x);
        for (int lam = 2; lam < q; ++lam)
            if (w[rank_index(scale(lam, v))] != w[x]) throw Error("weight is not scale-invariant");
    }
    // triangle inequality, exhaustive over pairs
    checked_pow(q, 2 * n, budget.max_states, "triangle check");
    for (std::uint64_t x = 0; x < states; ++x) {
        FqVector vx = vector_from_index(f, n, x);
        for (std::uint64_t y = 0; y < states; ++y) {
            FqVector vy = vector_from_index(f, n, y);
            if (w[rank_index(add(vx, vy))] > w[x] + w[y])
                throw Error("weight violates the triangle inequality");
        }
    }
    return {std::move(f), n, std::move(w)};
}

int FreeWeightedSpace::weight(const FqVector& x) const {
    if (x.size() != (int)reps.size()) throw Error("length mismatch");
    int s = 0;
    for (int i = 0; i < x.size(); ++i)
        if (x.c[i]) s += t[i];
    return s;
}

FreeWeightedSpace free_weighted_space(const WeightedSpace& V, const Budget& budget) {
    FreeWeightedSpace fr;
    fr.reps = projective_points(V.field, V.n, budget);
    for (const auto& r : fr.reps) fr.t.push_back(V.at(r));
    return fr;
}

namespace {

// Quotient map F_q^r -> F_q^{r-k} with the given kernel, via the pivot
// complement of the kernel's rref basis.  Rows = images of e_i.
FqMatrix quotient_matrix(const Field& f, int r, const FqMatrix& kernel_rows) {
    RrefResult rr = rref(kernel_rows);
    std::vector<char> is_pivot(r, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    std::vector<int> qcols;
    for (int c = 0; c < r; ++c)
        if (!is_pivot[c]) qcols.push_back(c);
    const int w = (int)qcols.size();
    FqMatrix M = FqMatrix::zero(f, r, w);
    for (int i = 0; i < r; ++i) {
        if (is_pivot[i]) {
            int j = 0;
            while (rr.pivots[j] != i) ++j;
            for (int t = 0; t < w; ++t) M.at(i, t) = f->neg(rr.mat.at(j, qcols[t]));
        } else {
            int t = 0;
            while (qcols[t] != i) ++t;
            M.at(i, t) = 1;
        }
    }
    return M;
}

} // namespace

EmbeddingReport embed_into_projective(const WeightedSpace& V, const Budget& budget) {
    const Field& f = V.field;
    const int n = V.n;
    FreeWeightedSpace fr = free_weighted_space(V, budget);
    const int D = (int)fr.reps.size();
    int r = 0;
    for (int t : fr.t) r += t;

    // phi: F_q^D -> V, rows = representatives
    FqMatrix phi = FqMatrix::from_rows(f, fr.reps, n);
    // rho: F_q^D -> F_q^r, row i = block of t_i ones
    FqMatrix rho = FqMatrix::zero(f, D, r);
    {
        int off = 0;
        for (int i = 0; i < D; ++i) {
            for (int j = 0; j < fr.t[i]; ++j) rho.at(i, off + j) = 1;
            off += fr.t[i];
        }
    }
    // ker(phi) and its image under rho
    FqMatrix ker = kernel_basis(transpose(phi));
    std::vector<FqVector> rho_ker;
    for (const auto& k : ker.row_list()) rho_ker.push_back(apply_rows(k, rho));

    EmbeddingReport rep;
    rep.r = r;
    rep.psi = quotient_matrix(f, r, FqMatrix::from_rows(f, rho_ker, r));
    rep.w_dim = rep.psi.cols;

    // iota: image of each basis vector of V through a chosen phi-preimage
    std::vector<FqVector> iota_rows;
    std::vector<FqVector> preimage_rows; // the same preimages, kept for the check
    for (int j = 0; j < n; ++j) {
        auto x = solve_rows(fr.reps, unit_vector(f, n, j));
        if (!x) throw Error("internal: phi is not surjective");
        FqVector xt{f, *x};
        preimage_rows.push_back(xt);
        iota_rows.push_back(apply_rows(apply_rows(xt, rho), rep.psi));
    }
    rep.iota = FqMatrix::from_rows(f, iota_rows, rep.w_dim);

    // verify wt_V(x) = min Hamming weight over the fiber rho(x~) + rho(ker phi)
    std::uint64_t fiber = pow_u64(f->q(), ker.rows);
    checked_pow(f->q(), n, budget.max_states / std::max<std::uint64_t>(fiber, 1), "fiber check");
    std::uint64_t states = pow_u64(f->q(), n);
    rep.verified = true;
    for (std::uint64_t xi = 0; xi < states && rep.verified; ++xi) {
        FqVector x = vector_from_index(f, n, xi);
        FqVector xt = zero_vector(f, D);
        for (int j = 0; j < n; ++j)
            if (x.c[j]) xt = add(xt, scale(x.c[j], preimage_rows[j]));
        FqVector y0 = apply_rows(xt, rho);
        int best = kInfWeight;
        for (std::uint64_t ci = 0; ci < fiber; ++ci) {
            FqVector y = y0;
            FqVector coeff = vector_from_index(f, ker.rows, ci);
            for (int j = 0; j < ker.rows; ++j)
                if (coeff.c[j]) y = add(y, scale(coeff.c[j], rho_ker[j]));
            best = std::min(best, hamming_weight(y));
        }
        if (best != (int)V.w[xi]) rep.verified = false;
    }
    return rep;
}

namespace {

// Orbit-canonical form of a point-index subset under coordinate permutations.
std::vector<std::uint64_t> perm_canonical(const std::vector<std::uint64_t>& pts, int q, int m) {
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::vector<std::uint64_t> best;
    std::vector<int> digits(m);
    do {
        std::vector<std::uint64_t> mapped;
        for (std::uint64_t x : pts) {
            std::uint64_t v = x;
            for (int i = m - 1; i >= 0; --i) {
                digits[i] = (int)(v % q);
                v /= q;
            }
            std::uint64_t y = 0;
            for (int i = 0; i < m; ++i) y = y * q + (std::uint64_t)digits[perm[i]];
            mapped.push_back(y);
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

namespace {

// Search spanning families of exactly `s` points in F_q^m for one realizing
// the weights of V through some injection.
std::optional<AbWitness> ab_search_size(const WeightedSpace& V, int m, int s,
                                        const Budget& budget, std::uint64_t& steps) {
    const Field& f = V.field;
    const int q = f->q(), n = V.n;

    std::vector<FqVector> pts = projective_points(f, m, budget);
    const int np = (int)pts.size();
    if (s > np) return std::nullopt;

    // candidate iota images: tuples of independent nonzero vectors
    std::uint64_t mstates = pow_u64(q, m);

    std::set<std::vector<std::uint64_t>> seen_orbits;

    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
        std::vector<FqVector> fam_pts;
        std::vector<std::uint64_t> fam_idx;
        for (int i : comb) {
            fam_pts.push_back(pts[i]);
            fam_idx.push_back(rank_index(pts[i]));
        }
        // skip permutation-equivalent families; embeddability is isometry-invariant
        auto canon = perm_canonical(fam_idx, q, m);
        if (seen_orbits.insert(canon).second) {
            SpanningFamily fam = family_from_vectors(f, fam_pts);
            if (fam.spanning) {
                WeightTable tab = weight_table(fam, budget);
                // all injections iota: independent image tuples
                std::vector<FqVector> images(n, zero_vector(f, m));
                std::vector<std::uint64_t> img_idx(n, 0);
                auto try_iota = [&](auto&& self, int j) -> bool {
                    if (++steps > budget.max_search)
                        throw BudgetError("embedding search exceeds budget");
                    if (j == n) {
                        // check the full table through iota
                        std::uint64_t vstates = pow_u64(q, n);
                        for (std::uint64_t xi = 1; xi < vstates; ++xi) {
                            FqVector x = vector_from_index(f, n, xi);
                            FqVector img = zero_vector(f, m);
                            for (int k = 0; k < n; ++k)
                                if (x.c[k]) img = add(img, scale(x.c[k], images[k]));
                            if (img.is_zero() || tab.w[rank_index(img)] != V.w[xi]) return false;
                        }
                        return true;
                    }
                    for (std::uint64_t v = 1; v < mstates; ++v) {
                        images[j] = vector_from_index(f, m, v);
                        std::vector<FqVector> sofar(images.begin(), images.begin() + j);
                        if (in_span(sofar, images[j])) continue;
                        if (self(self, j + 1)) return true;
                    }
                    return false;
                };
                if (try_iota(try_iota, 0)) {
                    AbWitness w;
                    w.family = fam;
                    w.iota = FqMatrix::from_rows(f, images, m);
                    return w;
                }
            }
        }
        int i = s - 1;
        while (i >= 0 && comb[i] == np - s + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    return std::nullopt;
}

} // namespace

std::optional<AbWitness> is_ab_embeddable(const WeightedSpace& V, int a, int b, const Budget& budget) {
    if (a < 0 || b < 0) throw Error("a, b must be nonnegative");
    // A quotient of Hamming F_q^{n+a+b} reduces to a parent function with at
    // most n+a+b rows, so any spanning family size in [n+a, n+a+b] qualifies.
    std::uint64_t steps = 0;
    for (int s = V.n + a; s <= V.n + a + b; ++s)
        if (auto w = ab_search_size(V, V.n + a, s, budget, steps)) return w;
    return std::nullopt;
}

std::vector<std::pair<int, int>> pareto_frontier_f2_dim2(int t1, int t2, int t3) {
    if (t1 <= 0 || t2 <= 0 || t3 <= 0) throw Error("weights must be positive");
    if (t1 > t2 + t3 || t2 > t1 + t3 || t3 > t1 + t2)
        throw Error("triangle inequality violated");
    int sum = t1 + t2 + t3;
    int D = (sum + 1) / 2;
    if (sum % 2 == 0) return {{D - 2, 0}};
    return {{D - 2, 1}};
}

} // namespace projmet
