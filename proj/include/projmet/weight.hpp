#pragma once

#include <iosfwd>
#include <limits>

#include "projmet/family.hpp"

namespace projmet {

// Sentinel for unreachable vectors (non-spanning families).
constexpr std::uint16_t kInfWeight = 0xFFFF;

// Exact projective weights for every vector of F_q^N, indexed by rank index.
struct WeightTable {
    SpanningFamily family;
    std::vector<std::uint16_t> w;       // size q^N
    std::vector<std::uint64_t> spheres; // S_0..S_max
    std::vector<std::uint64_t> balls;   // prefix sums of spheres
    int max_weight = 0;                 // largest finite weight

    std::uint16_t at(const FqVector& x) const { return w[rank_index(x)]; }
    std::uint64_t states() const { return w.size(); }
};

// Multi-source BFS from 0 on the Cayley graph with generator set
// {lambda*f : f in F, lambda != 0}; table entry = BFS layer.
WeightTable weight_table(const SpanningFamily& fam, const Budget& budget = {});

// One-shot weight without a table: bidirectional BFS between 0 and x.
std::uint32_t projective_weight(const SpanningFamily& fam, const FqVector& x,
                                const Budget& budget = {});

// Minimal-length combination x = sum alpha_i f_{idx_i}; the index set is the
// lexicographically smallest one realizing wt_F(x).  Throws Error when x is
// outside the span.
std::vector<std::pair<FieldElement, int>> minimal_representation(const SpanningFamily& fam,
                                                                 const FqVector& x,
                                                                 const Budget& budget = {});

struct SphereSizes {
    std::vector<std::uint64_t> spheres;
    std::vector<std::uint64_t> balls;
};
SphereSizes sphere_and_ball_sizes(const SpanningFamily& fam, const Budget& budget = {});

// Sphere sequence of a disjoint union from the factors' sequences
// (convolution).
std::vector<std::uint64_t> disjoint_union_spheres(const std::vector<std::uint64_t>& a,
                                                  const std::vector<std::uint64_t>& b);

// Layered-reachability convexity test on an arbitrary weight array: every x
// with 0 < wt(x) < inf must admit y with wt(y) = 1 and wt(x-y) = wt(x)-1.
bool is_convex(const Field& f, int n, const std::vector<std::uint16_t>& w);
inline bool is_convex(const WeightTable& t) {
    return is_convex(t.family.field, t.family.ambient_dim, t.w);
}

struct NormalityReport {
    bool correction_normal = true;
    bool equal_detection_normal = true;
    // first violating difference vector v (pair (0, v)) plus the values seen
    std::optional<FqVector> correction_witness;
    int correction_tau = 0;
    std::optional<FqVector> detection_witness;
    int detection_sigma = 0;
    bool sampled = false;
};

// Correction capability tau and equal-detection threshold sigma_eq for the
// translation-invariant metric d(x,y) = wt(y-x); flags tau = floor((d-1)/2)
// and d = 2*sigma_eq (sigma_eq != 0) over all pairs, or a deterministic
// sample above budget.
NormalityReport normality(const Field& f, int n, const std::vector<std::uint16_t>& w,
                          const Budget& budget = {});
inline NormalityReport normality(const WeightTable& t, const Budget& budget = {}) {
    return normality(t.family.field, t.family.ambient_dim, t.w, budget);
}

struct AddVectorBall {
    std::uint64_t value = 0;
    bool tight = false; // exact iff t <= wt_F(f)/2, upper bound otherwise
};

// |S_t^F| + q*|B_{t-1}^F|: the ball size of F u {f}, exact for
// t <= wt_F(f)/2 and an upper bound above.  f must be a new point.
AddVectorBall add_vector_ball_sizes(const SpanningFamily& fam, const FqVector& f, int t,
                                    const Budget& budget = {});

// Binary export: uint32 q, uint32 N, then q^N little-endian uint16 weights.
void write_weight_table(std::ostream& os, const WeightTable& t);

} // namespace projmet
