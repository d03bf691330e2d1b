#pragma once

#include "projmet/parent.hpp"

namespace projmet {

// Hamming isometry of F_q^n: e_i -> scal[i] * e_{perm[i]}.
struct MonomialMap {
    Field field;
    std::vector<int> perm;
    std::vector<int> scal;

    int size() const { return (int)perm.size(); }
    static MonomialMap identity(const Field& f, int n);
    friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
        return a.perm == b.perm && a.scal == b.scal;
    }
};

FqVector apply(const MonomialMap& m, const FqVector& x);
MonomialMap compose(const MonomialMap& a, const MonomialMap& b); // a after b
MonomialMap inverse(const MonomialMap& m);
FqMatrix to_matrix(const MonomialMap& m);
LinearCode apply(const MonomialMap& m, const LinearCode& code);

// Invertible linear map of V, columns = images of the basis vectors.
struct LinearIso {
    FqMatrix mat; // N x N

    static LinearIso identity(const Field& f, int n) { return {FqMatrix::identity(f, n)}; }
    friend bool operator==(const LinearIso& a, const LinearIso& b) { return a.mat == b.mat; }
};

inline FqVector apply(const LinearIso& L, const FqVector& x) { return apply_cols(L.mat, x); }
LinearIso make_linear_iso(const FqMatrix& m); // checks invertibility
LinearIso compose(const LinearIso& a, const LinearIso& b);

// True iff L maps F's point set onto G's.
bool is_isometry(const LinearIso& L, const SpanningFamily& F, const SpanningFamily& G);

// The unique Hamming isometry L~ with phi_G o L~ = L o phi_F.  Throws Error
// when L is not an isometry from F to G.
MonomialMap lift(const LinearIso& L, const SpanningFamily& F, const SpanningFamily& G);

// Backtracking search for L with L(F) = G; exhaustive None when absent.
std::optional<LinearIso> are_equivalent(const SpanningFamily& F, const SpanningFamily& G,
                                        const Budget& budget = {});

// All monomial maps stabilizing the code, in lexicographic (perm, scal) order.
std::vector<MonomialMap> hamming_stabilizer(const LinearCode& code, const Budget& budget = {});

// Images under the isometry-lifting bijection of the parent-code stabilizer;
// same order and cardinality as hamming_stabilizer(parent_code(F)).
std::vector<LinearIso> aut_group(const SpanningFamily& F, const Budget& budget = {});

std::optional<MonomialMap> are_hamming_equivalent(const LinearCode& c1, const LinearCode& c2,
                                                  const Budget& budget = {});

} // namespace projmet
