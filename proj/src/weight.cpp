#include "projmet/weight.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <unordered_map>

namespace projmet {

namespace {

// Generator coordinates {lambda*f} plus, for q = 2, their rank indices
// (neighbor = x XOR g there).
struct Generators {
    std::vector<std::vector<int>> coords;
    std::vector<std::uint64_t> idx;
};

Generators make_generators(const SpanningFamily& fam) {
    Generators g;
    const int q = fam.field->q();
    for (const auto& p : fam.points)
        for (int lambda = 1; lambda < q; ++lambda) {
            FqVector v = scale(lambda, p);
            g.idx.push_back(rank_index(v));
            g.coords.push_back(std::move(v.c));
        }
    return g;
}

// digit-wise x + g in index space; digits holds x base-q, most significant first
std::uint64_t shifted_index(const FiniteField& F, const std::vector<int>& xdigits,
                            const std::vector<int>& g) {
    std::uint64_t idx = 0;
    const std::uint64_t q = F.q();
    for (size_t i = 0; i < xdigits.size(); ++i) idx = idx * q + (std::uint64_t)F.add(xdigits[i], g[i]);
    return idx;
}

void decode_index(std::uint64_t x, int q, std::vector<int>& out) {
    for (int i = (int)out.size() - 1; i >= 0; --i) {
        out[i] = (int)(x % q);
        x /= q;
    }
}

void fill_spheres(WeightTable& t) {
    t.max_weight = 0;
    for (std::uint16_t v : t.w)
        if (v != kInfWeight && v > t.max_weight) t.max_weight = v;
    t.spheres.assign(t.max_weight + 1, 0);
    for (std::uint16_t v : t.w)
        if (v != kInfWeight) ++t.spheres[v];
    t.balls = t.spheres;
    for (size_t i = 1; i < t.balls.size(); ++i) t.balls[i] += t.balls[i - 1];
}

} // namespace

WeightTable weight_table(const SpanningFamily& fam, const Budget& budget) {
    const auto& F = *fam.field;
    const int q = F.q(), n = fam.ambient_dim;
    std::uint64_t states = checked_pow(q, n, budget.max_states, "weight table");

    WeightTable t;
    t.family = fam;
    t.w.assign(states, kInfWeight);
    t.w[0] = 0;

    Generators gen = make_generators(fam);
    std::vector<std::uint32_t> frontier{0}, next;
    std::vector<int> digits(n);
    std::uint16_t layer = 0;
    while (!frontier.empty()) {
        ++layer;
        next.clear();
        for (std::uint32_t x : frontier) {
            if (q == 2) {
                for (std::uint64_t g : gen.idx) {
                    std::uint64_t y = x ^ g;
                    if (t.w[y] == kInfWeight) {
                        t.w[y] = layer;
                        next.push_back((std::uint32_t)y);
                    }
                }
            } else {
                decode_index(x, q, digits);
                for (const auto& g : gen.coords) {
                    std::uint64_t y = shifted_index(F, digits, g);
                    if (t.w[y] == kInfWeight) {
                        t.w[y] = layer;
                        next.push_back((std::uint32_t)y);
                    }
                }
            }
        }
        frontier.swap(next);
    }
    fill_spheres(t);
    return t;
}

std::uint32_t projective_weight(const SpanningFamily& fam, const FqVector& x, const Budget& budget) {
    require_same_field(fam.field, x.field);
    if (x.size() != fam.ambient_dim) throw Error("vector outside the ambient space");
    if (x.is_zero()) return 0;

    const auto& F = *fam.field;
    const int q = F.q(), n = fam.ambient_dim;
    Generators gen = make_generators(fam);
    // Bidirectional BFS; the Cayley graph is undirected (generators closed
    // under negation), so the two searches use the same steps.
    std::unordered_map<std::uint64_t, std::uint16_t> dist[2];
    std::vector<std::uint64_t> frontier[2];
    dist[0][0] = 0;
    frontier[0] = {0};
    std::uint64_t x0 = rank_index(x);
    dist[1][x0] = 0;
    frontier[1] = {x0};
    std::uint16_t depth[2] = {0, 0};
    std::vector<int> digits(n);

    std::uint64_t visited = 2;
    while (!frontier[0].empty() && !frontier[1].empty()) {
        int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        std::vector<std::uint64_t> next;
        ++depth[side];
        for (std::uint64_t v : frontier[side]) {
            decode_index(v, q, digits);
            for (const auto& g : gen.coords) {
                std::uint64_t y = shifted_index(F, digits, g);
                if (dist[side].count(y)) continue;
                dist[side][y] = depth[side];
                auto it = dist[1 - side].find(y);
                if (it != dist[1 - side].end()) return depth[side] + it->second;
                next.push_back(y);
                if (++visited > budget.max_states) throw BudgetError("weight search exceeds budget");
            }
        }
        frontier[side].swap(next);
    }
    return kInfWeight;
}

std::vector<std::pair<FieldElement, int>> minimal_representation(const SpanningFamily& fam,
                                                                 const FqVector& x,
                                                                 const Budget& budget) {
    std::uint32_t wv = projective_weight(fam, x, budget);
    if (wv == kInfWeight) throw Error("vector not in the span of the family");
    int w = (int)wv;
    std::vector<std::pair<FieldElement, int>> rep;
    if (w == 0) return rep;

    const int nn = fam.size();
    // lexicographic combinations of size w
    std::vector<int> comb(w);
    for (int i = 0; i < w; ++i) comb[i] = i;
    std::uint64_t tried = 0;
    while (true) {
        if (++tried > budget.max_search) throw BudgetError("representation search exceeds budget");
        std::vector<FqVector> sel;
        for (int i : comb) sel.push_back(fam.points[i]);
        if (auto coeff = solve_rows(sel, x)) {
            bool all_nonzero = true;
            for (int c : *coeff) all_nonzero &= (c != 0);
            if (all_nonzero) {
                for (int i = 0; i < w; ++i) rep.push_back({FieldElement(fam.field, (*coeff)[i]), comb[i]});
                return rep;
            }
        }
        // next combination
        int i = w - 1;
        while (i >= 0 && comb[i] == nn - w + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
    }
    throw Error("no representation of minimal length found"); // unreachable for a correct weight
}

SphereSizes sphere_and_ball_sizes(const SpanningFamily& fam, const Budget& budget) {
    WeightTable t = weight_table(fam, budget);
    return {t.spheres, t.balls};
}

std::vector<std::uint64_t> disjoint_union_spheres(const std::vector<std::uint64_t>& a,
                                                  const std::vector<std::uint64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

bool is_convex(const Field& f, int n, const std::vector<std::uint16_t>& w) {
    const auto& F = *f;
    const int q = F.q();
    if (w.size() != pow_u64(q, n)) throw Error("weight array has the wrong size");
    std::vector<std::uint64_t> units;
    for (std::uint64_t x = 0; x < w.size(); ++x)
        if (w[x] == 1) units.push_back(x);
    std::vector<int> dx(n), dy(n), diff(n);
    for (std::uint64_t x = 1; x < w.size(); ++x) {
        if (w[x] == kInfWeight || w[x] == 0) continue;
        decode_index(x, q, dx);
        bool ok = false;
        for (std::uint64_t y : units) {
            decode_index(y, q, dy);
            std::uint64_t idx = 0;
            for (int i = 0; i < n; ++i) idx = idx * q + (std::uint64_t)F.sub(dx[i], dy[i]);
            if (w[idx] == w[x] - 1) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

NormalityReport normality(const Field& f, int n, const std::vector<std::uint16_t>& w,
                          const Budget& budget) {
    const auto& F = *f;
    const int q = F.q();
    const std::uint64_t states = pow_u64(q, n);
    if (w.size() != states) throw Error("weight array has the wrong size");
    for (auto v : w)
        if (v == kInfWeight) throw Error("normality requires a finitely valued table");

    NormalityReport rep;
    std::vector<std::uint64_t> diffs;
    if (states * states <= budget.max_states) {
        for (std::uint64_t v = 1; v < states; ++v) diffs.push_back(v);
    } else {
        rep.sampled = true;
        std::mt19937_64 rng(0x5eed);
        std::uint64_t count = std::max<std::uint64_t>(1, budget.max_states / states);
        for (std::uint64_t i = 0; i < count; ++i) diffs.push_back(1 + rng() % (states - 1));
    }

    std::vector<int> dv(n), dx(n);
    for (std::uint64_t v : diffs) {
        decode_index(v, q, dv);
        int d = w[v];
        int tau = std::numeric_limits<int>::max();
        int min_eq = std::numeric_limits<int>::max();
        // per x: a = d(0,x) = wt(x), b = d(x,v) = wt(v-x)
        std::vector<std::pair<int, int>> ab(states);
        for (std::uint64_t x = 0; x < states; ++x) {
            decode_index(x, q, dx);
            std::uint64_t vmx = 0;
            for (int i = 0; i < n; ++i) vmx = vmx * q + (std::uint64_t)F.sub(dv[i], dx[i]);
            int a = w[x], b = w[vmx];
            ab[x] = {a, b};
            tau = std::min(tau, std::max(a, b));
            if (a == b) min_eq = std::min(min_eq, a);
        }
        tau -= 1;
        if (rep.correction_normal && tau != (d - 1) / 2) {
            rep.correction_normal = false;
            rep.correction_witness = vector_from_index(f, n, v);
            rep.correction_tau = tau;
        }
        int sigma = 0;
        if (min_eq != std::numeric_limits<int>::max()) {
            int s = min_eq;
            bool balls_disjoint = true;
            for (std::uint64_t x = 0; x < states && balls_disjoint; ++x) {
                auto [a, b] = ab[x];
                if ((a <= s && b <= s - 1) || (a <= s - 1 && b <= s)) balls_disjoint = false;
            }
            if (balls_disjoint) sigma = s;
        }
        if (rep.equal_detection_normal && sigma != 0 && d != 2 * sigma) {
            rep.equal_detection_normal = false;
            rep.detection_witness = vector_from_index(f, n, v);
            rep.detection_sigma = sigma;
        }
        if (!rep.correction_normal && !rep.equal_detection_normal) break;
    }
    return rep;
}

AddVectorBall add_vector_ball_sizes(const SpanningFamily& fam, const FqVector& f, int t,
                                    const Budget& budget) {
    if (f.is_zero()) throw Error("cannot add the zero vector to a family");
    if (fam.contains(f)) throw Error("family already contains this point");
    WeightTable tab = weight_table(fam, budget);
    std::uint32_t wf = tab.w[rank_index(f)];
    const std::uint64_t q = fam.field->q();

    auto sphere = [&](int r) -> std::uint64_t {
        return (r >= 0 && r < (int)tab.spheres.size()) ? tab.spheres[r] : 0;
    };
    auto ball = [&](int r) -> std::uint64_t {
        if (r < 0) return 0;
        if (r >= (int)tab.balls.size()) return tab.balls.back();
        return tab.balls[r];
    };

    AddVectorBall out;
    out.value = sphere(t) + q * ball(t - 1);
    out.tight = (wf == kInfWeight) || (2 * (std::uint32_t)t <= wf);
    return out;
}

void write_weight_table(std::ostream& os, const WeightTable& t) {
    auto put32 = [&](std::uint32_t v) {
        unsigned char b[4] = {(unsigned char)(v & 0xff), (unsigned char)((v >> 8) & 0xff),
                              (unsigned char)((v >> 16) & 0xff), (unsigned char)((v >> 24) & 0xff)};
        os.write((const char*)b, 4);
    };
    put32((std::uint32_t)t.family.field->q());
    put32((std::uint32_t)t.family.ambient_dim);
    for (std::uint16_t v : t.w) {
        unsigned char b[2] = {(unsigned char)(v & 0xff), (unsigned char)((v >> 8) & 0xff)};
        os.write((const char*)b, 2);
    }
}

} // namespace projmet
