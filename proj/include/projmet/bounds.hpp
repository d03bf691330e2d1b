#pragma once

#include "projmet/parent.hpp"

namespace projmet {

struct MuValue {
    int value = 0;
    std::vector<int> witness; // family indices of a realizing subset
};

// mu_F(t): maximum size of an independent G subset of F with <G> inside B_t^F.
// The table may be passed in to avoid recomputation.
MuValue mu(const SpanningFamily& fam, int t, const Budget& budget = {});
MuValue mu(const WeightTable& table, int t, const Budget& budget = {});

struct SingletonBound {
    std::uint64_t mu_bound = 0;    // q^(N - mu(d-1))
    std::uint64_t classical = 0;   // q^(N - d + 1)
    int mu_value = 0;
};

SingletonBound singleton_bound(const SpanningFamily& fam, int d, const Budget& budget = {});

struct AnticodeMax {
    int dim = 0;
    std::vector<FqVector> witness; // basis of a maximal linear t-anticode
    bool equals_mu = false;
};

// Maximum dimension (capped at dim_cap) of ANY linear subspace inside B_t^F,
// found by exhaustive search over canonical generating tuples; >= mu_F(t) by
// construction.
AnticodeMax exact_anticode_max(const SpanningFamily& fam, int t, int dim_cap,
                               const Budget& budget = {});

// The explicit 14-point family in F_2^10 whose 2-anticode maximum exceeds
// mu(2).
SpanningFamily anticode_gap_family_f2_10();

// General gap construction from a code G with dim >= 3 and d_H(G) > 3:
// standard basis of F_q^(N + #nonzero codewords) plus e_g + g per nonzero
// codeword g.
SpanningFamily anticode_counterexample_family(const LinearCode& G, const Budget& budget = {});

// Closed-form phase-rotation weight min(w_H(x), min_c w_H(x - c*1) + 1).
int phase_weight(const FqVector& x);
// ceil(N - N/q), the largest phase-rotation weight
int phase_weight_upper_bound(const Field& f, int n);

} // namespace projmet
