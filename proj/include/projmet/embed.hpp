#pragma once

#include "projmet/family.hpp"

namespace projmet {

// F_q^n with an integral, finitely valued, scale-invariant weight satisfying
// the weight axioms; all checked at construction.
struct WeightedSpace {
    Field field;
    int n = 0;
    std::vector<std::uint16_t> w; // size q^n, rank-index order

    static WeightedSpace make(Field f, int n, std::vector<std::uint16_t> w,
                              const Budget& budget = {});
    std::uint16_t at(const FqVector& x) const { return w[rank_index(x)]; }
};

struct FreeWeightedSpace {
    std::vector<FqVector> reps; // canonical Gr_1 representatives, rank-index order
    std::vector<int> t;         // t_i = wt_V(reps[i])
    // free weight of a coefficient vector x in F_q^{|reps|}
    int weight(const FqVector& x) const;
};

FreeWeightedSpace free_weighted_space(const WeightedSpace& V, const Budget& budget = {});

struct EmbeddingReport {
    int r = 0;      // ambient Hamming length, sum of the t_i
    int w_dim = 0;  // dim W = r - (D - n)
    FqMatrix iota;  // n x w_dim, rows = images of V's basis vectors
    FqMatrix psi;   // r x w_dim, rows = psi(e_i)
    bool verified = false;
};

// The projective embedding built from the free weighted space: rho spreads
// coordinate i over a block of t_i ones, psi quotients F_q^r by rho(ker phi),
// iota maps V into the quotient.  `verified` records the exhaustive check
// wt_V(x) = min Hamming weight over the fiber of iota(x), for every x.
EmbeddingReport embed_into_projective(const WeightedSpace& V, const Budget& budget = {});

struct AbWitness {
    SpanningFamily family; // spanning family of size n+a+b in F_q^{n+a}
    FqMatrix iota;         // n x (n+a), rows = images of V's basis vectors
};

// Exhaustive search for an (a,b)-Hamming-embedding of V.  Feasible only at
// tiny sizes (documented hard cap: q = 2, n = 2, a + b <= 4).
std::optional<AbWitness> is_ab_embeddable(const WeightedSpace& V, int a, int b,
                                          const Budget& budget = {});

// Closed-form Pareto frontier for F_2^2 with weights (t1, t2, t3):
// {(D-2, 0)} for even t1+t2+t3, {(D-2, 1)} for odd, D = ceil(sum/2).
std::vector<std::pair<int, int>> pareto_frontier_f2_dim2(int t1, int t2, int t3);

} // namespace projmet
