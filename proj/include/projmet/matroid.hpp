#pragma once

#include <mutex>
#include <unordered_map>

#include "projmet/family.hpp"

namespace projmet {

// Column matroid of the family matrix; rank queries are memoized per subset.
class LinearMatroid {
public:
    explicit LinearMatroid(const SpanningFamily& fam);
    // matrix with the ground-set vectors as columns
    explicit LinearMatroid(FqMatrix columns);

    int ground_size() const { return cols_.cols; }
    int rank(std::uint32_t mask) const;
    int rank(const std::vector<int>& subset) const;
    bool independent(std::uint32_t mask) const { return rank(mask) == popcount(mask); }
    bool independent(const std::vector<int>& subset) const;
    const FqMatrix& columns() const { return cols_; }

    static int popcount(std::uint32_t m);

private:
    FqMatrix cols_; // N x ground
    // shared by copies; guarded so concurrent rank queries stay safe
    struct Cache {
        std::mutex mutex;
        std::unordered_map<std::uint32_t, int> ranks;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline LinearMatroid matroid_of(const SpanningFamily& fam) { return LinearMatroid(fam); }

// Minimal dependent subsets of size <= max_size, ascending by (size, mask).
std::vector<std::vector<int>> circuits(const LinearMatroid& m, int max_size,
                                       const Budget& budget = {});

// Extended family: every projective point that is an intersection of
// hyperplanes spanned by (N-1)-subsets of F.  Contains F; emitted in
// rank-index order.
SpanningFamily extended_family(const SpanningFamily& fam, const Budget& budget = {});

// Ground-set bijection preserving independence both ways, or nullopt.
std::optional<std::vector<int>> matroid_isomorphic(const LinearMatroid& m1, const LinearMatroid& m2,
                                                   const Budget& budget = {});

// Matroid isomorphism psi of the extended families with psi(F) = G.
std::optional<std::vector<int>> extended_matroid_equivalent(const SpanningFamily& F,
                                                            const SpanningFamily& G,
                                                            const Budget& budget = {});

// |B_t^F| via inclusion-exclusion over independent t-subsets, with each
// intersection measured through a maximal independent subset of the extended
// family.  max_indep_sets caps |M_t|.
std::uint64_t ball_size_via_extended_matroid(const SpanningFamily& fam, int t,
                                             const Budget& budget = {}, int max_indep_sets = 12);

} // namespace projmet
