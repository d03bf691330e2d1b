#pragma once

#include <random>

#include "projmet/weight.hpp"

namespace projmet::testing {

inline FqVector vec(const Field& f, std::vector<int> c) { return {f, std::move(c)}; }

// Independent oracle for Def-style projective weight: smallest subset of the
// family whose span contains x, by direct subset scan.
inline int oracle_weight(const SpanningFamily& fam, const FqVector& x) {
    if (x.is_zero()) return 0;
    const int nn = fam.size();
    for (int w = 1; w <= nn; ++w) {
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        while (true) {
            std::vector<FqVector> sel;
            for (int i : comb) sel.push_back(fam.points[i]);
            if (in_span(sel, x)) return w;
            int i = w - 1;
            while (i >= 0 && comb[i] == nn - w + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return kInfWeight;
}

// Random spanning family of the requested size, clamped to the number of
// projective points available.
inline SpanningFamily random_spanning_family(const Field& f, int n, int size, std::mt19937& rng) {
    std::uint64_t states = pow_u64(f->q(), n);
    std::uint64_t npoints = (states - 1) / (f->q() - 1);
    size = (int)std::min<std::uint64_t>(size, npoints);
    while (true) {
        std::vector<FqVector> pts;
        for (int i = 0; i < 8 * size + 16; ++i)
            pts.push_back(vector_from_index(f, n, 1 + rng() % (states - 1)));
        SpanningFamily fam = family_from_vectors(f, pts);
        if (!fam.spanning || fam.size() < size) continue;
        fam.points.resize(size);
        SpanningFamily cut = family_from_vectors(f, fam.points);
        if (cut.spanning) return cut;
    }
}

} // namespace projmet::testing
