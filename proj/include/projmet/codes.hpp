#pragma once

#include "projmet/parent.hpp"

namespace projmet {

// Minimum projective weight over nonzero codewords; kInfWeight for the zero
// code.
int min_distance_F(const LinearCode& code, const SpanningFamily& fam, const Budget& budget = {});
int min_distance_F(const LinearCode& code, const WeightTable& table, const Budget& budget = {});

// t such that the radius-t balls around codewords partition V, or nullopt.
// Checked by the counting identity AND a full nearest-codeword partition scan,
// so overlapping balls in non-convex inputs are caught.
std::optional<int> is_perfect(const LinearCode& code, const SpanningFamily& fam,
                              const Budget& budget = {});
std::optional<int> is_perfect(const LinearCode& code, const WeightTable& table,
                              const Budget& budget = {});
// Same check against an arbitrary weight array on F_q^n.
std::optional<int> is_perfect_raw(const LinearCode& code, const std::vector<std::uint16_t>& w,
                                  const Budget& budget = {});

// phi(C_hat) with a recomputed basis.
LinearCode image_code(const LinearCode& c_hat, const ParentFunction& phi);
// full inverse image phi^-1(C); contains the parent code.
LinearCode preimage_code(const LinearCode& code, const ParentFunction& phi);

struct PerfectTransferReport {
    bool hypothesis_ok = false; // d_H(parent) >= max weight
    int parent_distance = 0;
    int max_weight = 0;
    std::optional<int> hamming_t;
    std::optional<int> f_t;
    int d_hamming = 0;
    int d_f = 0;
    bool agree = false;
};

// Both perfectness verdicts for C_hat (Hamming) and phi(C_hat) (projective).
// The hypothesis failure is reported, never asserted.  Throws Error when
// C_hat does not contain the parent code.
PerfectTransferReport perfect_transfer(const LinearCode& c_hat, const ParentFunction& phi,
                                       const Budget& budget = {});

} // namespace projmet
