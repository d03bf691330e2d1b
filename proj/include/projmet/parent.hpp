#pragma once

#include <mutex>

#include "projmet/weight.hpp"

namespace projmet {

// Subspace of F_q^n held as a canonical rref basis; two codes are equal iff
// their rref bases are.
class LinearCode {
public:
    LinearCode(Field f, int n, const std::vector<FqVector>& generators);
    static LinearCode zero_code(Field f, int n) { return LinearCode(std::move(f), n, {}); }

    const Field& field() const { return field_; }
    int length() const { return n_; }
    int dim() const { return basis_.rows; }
    const FqMatrix& basis() const { return basis_; }
    std::uint64_t size() const { return pow_u64(field_->q(), dim()); }

    bool contains(const FqVector& x) const;
    // all q^k codewords, in coefficient order
    std::vector<FqVector> codewords(const Budget& budget = {}) const;

    // Minimum Hamming weight over nonzero codewords; kInfWeight for the zero
    // code.  Cached after the first call.
    int min_hamming_distance(const Budget& budget = {}) const;
    // counts of codewords by Hamming weight, length n+1
    std::vector<std::uint64_t> hamming_weight_enumerator(const Budget& budget = {}) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    Field field_;
    int n_;
    FqMatrix basis_;
    // shared by copies of the same code; guarded for concurrent first access
    struct Cache {
        std::mutex mutex;
        int dmin = -1;
        std::vector<std::uint64_t> wenum;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// phi: F_q^|F| -> V with phi(e_i) = f_i; the matrix rows are the family
// representatives in family order.
struct ParentFunction {
    SpanningFamily family;
    FqMatrix matrix; // |F| x N
};

ParentFunction parent_function(const SpanningFamily& fam);
inline FqVector apply(const ParentFunction& pf, const FqVector& y) { return apply_rows(y, pf.matrix); }
LinearCode parent_code(const ParentFunction& pf);
inline LinearCode parent_code(const SpanningFamily& fam) { return parent_code(parent_function(fam)); }

// Hamming weights of every vector of F_q^n by rank index.
std::vector<std::uint16_t> hamming_weight_array(const Field& f, int n, const Budget& budget = {});

// wt_quot(z) = min{wt_X(y) : y*xi = z} over the fibers of the row-vector map
// y -> y*xi; unreached outputs get kInfWeight.
std::vector<std::uint16_t> quotient_weight(const std::vector<std::uint16_t>& wt_domain,
                                           const FqMatrix& xi, const Budget& budget = {});

// Minimum-Hamming-weight element of y + C; ties broken by rank index.
FqVector coset_leader(const LinearCode& code, const FqVector& y, const Budget& budget = {});

// alpha_0..alpha_n: number of cosets of each leader weight.  Single pass over
// F_q^n bucketing by syndrome.
std::vector<std::uint64_t> coset_leader_weight_distribution(const LinearCode& code,
                                                            const Budget& budget = {});

struct RowMonomialFactorization {
    FqMatrix R; // weakly row monomial, rows x rows(P)
    FqMatrix P; // pairwise independent rows, first-occurrence canonical classes
};

// M = R*P with R weakly row monomial and P's rows the distinct canonical
// projective classes of M's nonzero rows in first-occurrence order.
RowMonomialFactorization factor_row_monomial(const FqMatrix& m);

// Parent function with the same quotient weight as the surjective map xi.
ParentFunction reduce_to_parent(const FqMatrix& xi);

// Inverse of the parent-code bijection: a deterministic family whose parent
// code is Hamming-equivalent to C.  Requires d_H(C) >= 3.
SpanningFamily family_from_code(const LinearCode& code, const Budget& budget = {});

} // namespace projmet
