#include "projmet/codes.hpp"

namespace projmet {

int min_distance_F(const LinearCode& code, const WeightTable& table, const Budget& budget) {
    require_same_field(code.field(), table.family.field);
    if (code.length() != table.family.ambient_dim) throw Error("code length != ambient dimension");
    int best = kInfWeight;
    for (const auto& c : code.codewords(budget)) {
        if (c.is_zero()) continue;
        best = std::min<int>(best, table.w[rank_index(c)]);
    }
    return best;
}

int min_distance_F(const LinearCode& code, const SpanningFamily& fam, const Budget& budget) {
    return min_distance_F(code, weight_table(fam, budget), budget);
}

std::optional<int> is_perfect_raw(const LinearCode& code, const std::vector<std::uint16_t>& w,
                                  const Budget& budget) {
    const Field& f = code.field();
    const int n = code.length();
    const std::uint64_t states = pow_u64(f->q(), n);
    if (w.size() != states) throw Error("weight array has the wrong size");

    int max_weight = 0;
    for (auto v : w)
        if (v != kInfWeight && v > max_weight) max_weight = v;
    std::vector<std::uint64_t> balls(max_weight + 1, 0);
    for (auto v : w)
        if (v != kInfWeight) ++balls[v];
    for (int i = 1; i <= max_weight; ++i) balls[i] += balls[i - 1];

    auto codewords = code.codewords(budget);
    for (int t = 0; t <= max_weight; ++t) {
        if (code.size() * balls[t] != states) continue; // counting identity
        // exhaustive partition: every vector covered exactly once
        std::vector<std::uint8_t> covered(states, 0);
        std::vector<std::uint64_t> ball_idx;
        for (std::uint64_t x = 0; x < states; ++x)
            if (w[x] != kInfWeight && (int)w[x] <= t) ball_idx.push_back(x);
        bool ok = true;
        for (const auto& c : codewords) {
            for (std::uint64_t v : ball_idx) {
                std::uint64_t i = rank_index(add(c, vector_from_index(f, n, v)));
                if (covered[i]) { ok = false; break; }
                covered[i] = 1;
            }
            if (!ok) break;
        }
        for (std::uint64_t x = 0; ok && x < states; ++x)
            if (!covered[x]) ok = false;
        if (ok) return t;
    }
    return std::nullopt;
}

std::optional<int> is_perfect(const LinearCode& code, const WeightTable& table, const Budget& budget) {
    require_same_field(code.field(), table.family.field);
    if (code.length() != table.family.ambient_dim) throw Error("code length != ambient dimension");
    return is_perfect_raw(code, table.w, budget);
}

std::optional<int> is_perfect(const LinearCode& code, const SpanningFamily& fam, const Budget& budget) {
    return is_perfect(code, weight_table(fam, budget), budget);
}

LinearCode image_code(const LinearCode& c_hat, const ParentFunction& phi) {
    if (c_hat.length() != phi.matrix.rows) throw Error("code length != family size");
    std::vector<FqVector> rows;
    for (const auto& r : c_hat.basis().row_list()) rows.push_back(apply(phi, r));
    return LinearCode(c_hat.field(), phi.matrix.cols, rows);
}

LinearCode preimage_code(const LinearCode& code, const ParentFunction& phi) {
    if (code.length() != phi.matrix.cols) throw Error("code length != ambient dimension");
    // parent code plus one chosen preimage per basis codeword
    LinearCode pc = parent_code(phi);
    std::vector<FqVector> rows = pc.basis().row_list();
    for (const auto& c : code.basis().row_list()) {
        auto coeff = solve_rows(phi.matrix.row_list(), c);
        if (!coeff) throw Error("codeword outside the image of the parent function");
        rows.push_back({code.field(), *coeff});
    }
    return LinearCode(code.field(), phi.matrix.rows, rows);
}

PerfectTransferReport perfect_transfer(const LinearCode& c_hat, const ParentFunction& phi,
                                       const Budget& budget) {
    LinearCode pc = parent_code(phi);
    // parent code must sit inside C_hat
    for (const auto& r : pc.basis().row_list())
        if (!c_hat.contains(r)) throw Error("code does not contain the parent code");

    WeightTable tab = weight_table(phi.family, budget);
    PerfectTransferReport rep;
    rep.parent_distance = pc.min_hamming_distance(budget);
    rep.max_weight = tab.max_weight;
    rep.hypothesis_ok = rep.parent_distance >= rep.max_weight;

    LinearCode img = image_code(c_hat, phi);
    rep.d_hamming = c_hat.min_hamming_distance(budget);
    rep.d_f = min_distance_F(img, tab, budget);
    rep.f_t = is_perfect(img, tab, budget);

    // Hamming-perfectness of C_hat via the Hamming table of F_q^n
    SpanningFamily ham = hamming_family(c_hat.field(), c_hat.length());
    rep.hamming_t = is_perfect(c_hat, ham, budget);

    rep.agree = (rep.hamming_t.has_value() == rep.f_t.has_value()) &&
                (!rep.hamming_t || rep.d_hamming == rep.d_f);
    return rep;
}

} // namespace projmet
