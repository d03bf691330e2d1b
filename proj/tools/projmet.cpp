// projmet: compute with projective metrics on F_q^N.
//
// Subcommands: spheres, weight, parent, equiv, aut, matroid, bounds, perfect,
// embed, verify.  Exit codes: 0 success, 1 domain error, 2 budget exceeded,
// 64 usage error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "projmet/bounds.hpp"
#include "projmet/codes.hpp"
#include "projmet/embed.hpp"
#include "projmet/isometry.hpp"
#include "projmet/json_io.hpp"
#include "projmet/matroid.hpp"

using namespace projmet;
using nlohmann::json;

namespace {

struct GlobalOpts {
    int q = 2;
    std::vector<int> modulus;
    std::string field_file;
    bool as_json = false;
    std::uint64_t max_states = std::uint64_t(1) << 24;
    std::uint64_t max_search = std::uint64_t(1) << 20;
    std::uint64_t seed = 0x9e3779b9;
};

Field make_field(const GlobalOpts& g) {
    if (!g.field_file.empty()) {
        std::ifstream in(g.field_file);
        if (!in) throw Error("cannot open field file " + g.field_file);
        json j;
        in >> j;
        return field_from_json(j);
    }
    int q = g.q;
    if (q < 2) throw Error("q must be at least 2");
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0, t = q;
    while (t > 1) {
        if (t % p != 0) throw Error("q must be a prime power");
        t /= p;
        ++e;
    }
    return FiniteField::make(p, e, g.modulus);
}

Budget make_budget(const GlobalOpts& g) { return {g.max_states, g.max_search}; }

std::string vec_str(const FqVector& v) {
    std::string s;
    for (int i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v.c[i]);
    }
    return s;
}

void print_matrix(std::ostream& os, const FqMatrix& m, const std::string& indent = "  ") {
    for (const auto& r : m.row_list()) os << indent << vec_str(r) << "\n";
}

FqVector parse_vector(const Field& f, const std::string& s) {
    std::vector<int> c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(std::stoi(item));
    for (int x : c)
        if (x < 0 || x >= f->q()) throw Error("coordinate out of range");
    return {f, c};
}

LinearCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open code file " + path);
    json j;
    in >> j;
    return code_from_json(j);
}

// ---------------------------------------------------------------- verify ---

struct Check {
    std::string name;
    bool (*fn)(const Budget&, std::uint64_t seed);
};

const std::vector<Check>& golden_checks() {
    static const std::vector<Check> checks = {
        {"F_7 arithmetic: 3 * 5 = 1",
         [](const Budget&, std::uint64_t) {
             Field f7 = FiniteField::make(7);
             return f7->inv(3) == 5 && f7->mul(3, 5) == 1;
         }},
        {"phase-rotation parent matrix has the repetition code as kernel",
         [](const Budget&, std::uint64_t) {
             Field f3 = FiniteField::make(3);
             std::vector<FqVector> rows;
             for (int i = 0; i < 4; ++i) rows.push_back(unit_vector(f3, 4, i));
             FqVector w = zero_vector(f3, 4);
             for (int& c : w.c) c = f3->neg(1);
             rows.push_back(w);
             FqMatrix K = kernel_basis(transpose(FqMatrix::from_rows(f3, rows, 4)));
             return K.rows == 1 && canonical_point(K.row(0)) == FqVector{f3, {1, 1, 1, 1, 1}};
         }},
        {"phase-rotation family B u {w} in F_2^4 has size 5",
         [](const Budget&, std::uint64_t) {
             return phase_rotation_family(FiniteField::make(2), 4).size() == 5;
         }},
        {"wt_Row u wt_Column = wt_Cover (2x2, F_2)",
         [](const Budget&, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             return same_points(family_union(row_family(f2, 2, 2), column_family(f2, 2, 2)),
                                cover_family(f2, 2, 2));
         }},
        {"wt_Dis (x) wt_Dis = wt_Rank (2x2, F_2)",
         [](const Budget&, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             return same_points(tensor_product(discrete_family(f2, 2), discrete_family(f2, 2),
                                               TensorKind::Outer),
                                rank_family(f2, 2, 2));
         }},
        {"wt_H (x) wt_Dis = wt_Row (2x3, F_2)",
         [](const Budget&, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             return same_points(tensor_product(hamming_family(f2, 2), discrete_family(f2, 3),
                                               TensorKind::Outer),
                                row_family(f2, 2, 3));
         }},
        {"cover metric from row/column index sets (projective point form)",
         [](const Budget&, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             auto comb = combinatorial_family(f2, 4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
             return same_points(comb, cover_family(f2, 2, 2));
         }},
        {"phase Cayley figure: wt(1101) = 2 on phase_rotation(4)/F_2",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             return weight_table(phase_rotation_family(f2, 4), b).at({f2, {1, 1, 0, 1}}) == 2;
         }},
        {"discrete metric assigns weight 1 to any nonzero vector",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             WeightTable t = weight_table(discrete_family(f2, 3), b);
             for (std::uint64_t i = 1; i < t.states(); ++i)
                 if (t.w[i] != 1) return false;
             return t.w[0] == 0;
         }},
        {"the all-ones generator has weight 1 (phase rotation, F_3^4)",
         [](const Budget& b, std::uint64_t) {
             Field f3 = FiniteField::make(3);
             return weight_table(phase_rotation_family(f3, 4), b).at({f3, {1, 1, 1, 1}}) == 1;
         }},
        {"minimal representation of 1101 is {e3, 1111}",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             auto rep = minimal_representation(phase_rotation_family(f2, 4), {f2, {1, 1, 0, 1}}, b);
             return rep.size() == 2 && rep[0].second == 2 && rep[1].second == 4;
         }},
        {"small spheres: S_t = (q-1)^t binom(|F|,t) below half the parent distance",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             WeightTable t = weight_table(phase_rotation_family(f2, 4), b);
             return t.spheres[1] == 5 && t.spheres[2] == 10;
         }},
        {"projective weight tables are convex",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             Field f3 = FiniteField::make(3);
             return is_convex(weight_table(phase_rotation_family(f2, 4), b)) &&
                    is_convex(weight_table(rank_family(f2, 2, 2, b), b)) &&
                    is_convex(weight_table(discrete_family(f3, 2, b), b));
         }},
        {"modified Hamming wt(1111)=3: sigma_eq(0000,1111) = 2 while d = 3",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             std::vector<std::uint16_t> mod(16);
             for (std::uint64_t i = 0; i < 16; ++i)
                 mod[i] = (std::uint16_t)hamming_weight(vector_from_index(f2, 4, i));
             mod[15] = 3;
             auto r = normality(f2, 4, mod, b);
             return r.correction_normal && !r.equal_detection_normal && r.detection_sigma == 2 &&
                    r.detection_witness && *r.detection_witness == FqVector{f2, {1, 1, 1, 1}};
         }},
        {"doubled Hamming: tau(00,10) = 1 breaks correction normality",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             auto r = normality(f2, 2, {0, 2, 2, 4}, b);
             return !r.correction_normal && r.equal_detection_normal && r.correction_tau == 1;
         }},
        {"wt_F equals the quotient of the Hamming weight through a parent function",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             for (const auto& fam : {phase_rotation_family(f2, 4), rank_family(f2, 2, 2, b)}) {
                 auto quot = quotient_weight(hamming_weight_array(f2, fam.size(), b),
                                             parent_function(fam).matrix, b);
                 if (quot != weight_table(fam, b).w) return false;
             }
             return true;
         }},
        {"quotient through a surjective weakly row monomial map is Hamming",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             FqMatrix xi = FqMatrix::zero(f2, 3, 2);
             xi.at(0, 0) = xi.at(1, 1) = xi.at(2, 1) = 1;
             return quotient_weight(hamming_weight_array(f2, 3, b), xi, b) ==
                    hamming_weight_array(f2, 2, b);
         }},
        {"coset leader distribution of repetition_5 = sphere sizes [1,5,10]",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             LinearCode rep(f2, 5, {{f2, {1, 1, 1, 1, 1}}});
             auto alpha = coset_leader_weight_distribution(rep, b);
             return alpha == std::vector<std::uint64_t>{1, 5, 10, 0, 0, 0};
         }},
        {"coset leaders realize the projective weight (20 random cosets)",
         [](const Budget& b, std::uint64_t seed) {
             Field f2 = FiniteField::make(2);
             auto fam = phase_rotation_family(f2, 4);
             ParentFunction pf = parent_function(fam);
             LinearCode pc = parent_code(pf);
             WeightTable t = weight_table(fam, b);
             std::mt19937_64 rng(seed);
             for (int i = 0; i < 20; ++i) {
                 FqVector y = vector_from_index(f2, 5, rng() % 32);
                 if (hamming_weight(coset_leader(pc, y, b)) != (int)t.at(apply(pf, y)))
                     return false;
             }
             return true;
         }},
        {"the 14-point family's parent code has minimum distance 6",
         [](const Budget& b, std::uint64_t) {
             return parent_code(anticode_gap_family_f2_10()).min_hamming_distance(b) == 6;
         }},
        {"repetition code maps back to the phase-rotation family",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             LinearCode rep(f2, 5, {{f2, {1, 1, 1, 1, 1}}});
             return same_points(family_from_code(rep, b), phase_rotation_family(f2, 4));
         }},
        {"a coordinate swap lifts to the monomial swap on phase rotation",
         [](const Budget&, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             auto fam = phase_rotation_family(f2, 3);
             LinearIso L = make_linear_iso({f2, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}});
             if (lift(LinearIso::identity(f2, 3), fam, fam).perm != std::vector<int>{0, 1, 2, 3})
                 return false;
             return lift(L, fam, fam).perm == std::vector<int>{1, 0, 2, 3};
         }},
        {"the matrix with columns (1,1),(1,2) maps hamming(2)/F_3 isometrically",
         [](const Budget&, std::uint64_t) {
             Field f3 = FiniteField::make(3);
             auto g = family_from_vectors(f3, {{f3, {1, 1}}, {f3, {1, 2}}});
             return is_isometry(make_linear_iso({f3, 2, 2, {1, 1, 1, 2}}), hamming_family(f3, 2), g);
         }},
        {"the F_7 pair: matroid equivalent but not linearly equivalent",
         [](const Budget& b, std::uint64_t) {
             Field f7 = FiniteField::make(7);
             auto F = family_from_vectors(f7, {{f7, {1, 0}}, {f7, {0, 1}}, {f7, {1, 1}}, {f7, {1, 2}}});
             auto G = family_from_vectors(f7, {{f7, {1, 0}}, {f7, {0, 1}}, {f7, {1, 1}}, {f7, {1, 3}}});
             return matroid_isomorphic(matroid_of(F), matroid_of(G), b).has_value() &&
                    !are_equivalent(F, G, b).has_value() &&
                    weight_table(F, b).spheres == weight_table(G, b).spheres;
         }},
        {"parent codes under reordered families are Hamming equivalent",
         [](const Budget& b, std::uint64_t) {
             Field f3 = FiniteField::make(3);
             auto fam = phase_rotation_family(f3, 2);
             std::vector<FqVector> rev(fam.points.rbegin(), fam.points.rend());
             return are_hamming_equivalent(parent_code(fam),
                                           parent_code(family_from_vectors(f3, rev)), b)
                 .has_value();
         }},
        {"isometry group of phase_rotation(2)/F_2 = parent stabilizer, order 6",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             auto fam = phase_rotation_family(f2, 2);
             return aut_group(fam, b).size() == 6 &&
                    hamming_stabilizer(parent_code(fam), b).size() == 6;
         }},
        {"extended family of phase_rotation(3)/F_3 = 0/1 indicator points",
         [](const Budget& b, std::uint64_t) {
             Field f3 = FiniteField::make(3);
             std::vector<FqVector> expect;
             for (std::uint64_t mask = 1; mask < 8; ++mask) {
                 FqVector v = zero_vector(f3, 3);
                 for (int i = 0; i < 3; ++i)
                     if (mask & (1u << i)) v.c[i] = 1;
                 expect.push_back(v);
             }
             return same_points(extended_family(phase_rotation_family(f3, 3), b),
                                family_from_vectors(f3, expect));
         }},
        {"extended family of phase_rotation(3)/F_2 = all of Gr_1",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             return same_points(extended_family(phase_rotation_family(f2, 3), b),
                                discrete_family(f2, 3, b));
         }},
        {"extension of a direct sum = direct sum of extensions",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             auto a = phase_rotation_family(f2, 2);
             auto c = phase_rotation_family(f2, 3);
             return same_points(extended_family(disjoint_union(a, c), b),
                                disjoint_union(extended_family(a, b), extended_family(c, b)));
         }},
        {"extended-matroid ball formula equals BFS ball sizes",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             Field f7 = FiniteField::make(7);
             for (const auto& fam :
                  {phase_rotation_family(f2, 3),
                   family_from_vectors(f7, {{f7, {1, 0}}, {f7, {0, 1}}, {f7, {1, 1}}, {f7, {1, 2}}})}) {
                 WeightTable t = weight_table(fam, b);
                 for (int r = 0; r <= fam.ambient_dim; ++r) {
                     std::uint64_t bfs = r <= t.max_weight ? t.balls[r] : t.balls.back();
                     if (ball_size_via_extended_matroid(fam, r, b, 40) != bfs) return false;
                 }
             }
             return true;
         }},
        {"mu of hamming(4): mu(t) = t",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             for (int t = 0; t <= 4; ++t)
                 if (mu(hamming_family(f2, 4), t, b).value != t) return false;
             return true;
         }},
        {"mu of phase rotation: t below the top weight, N at it",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             Field f3 = FiniteField::make(3);
             for (auto [f, n] : {std::pair{f2, 4}, {f3, 3}}) {
                 auto fam = phase_rotation_family(f, n);
                 int top = phase_weight_upper_bound(f, n);
                 for (int t = 0; t <= n; ++t)
                     if (mu(fam, t, b).value != (t < top ? t : n)) return false;
             }
             return true;
         }},
        {"mu of rank(2,3)/F_2: mu(1) = 3, mu(2) = 6",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             auto fam = rank_family(f2, 2, 3, b);
             return mu(fam, 1, b).value == 3 && mu(fam, 2, b).value == 6;
         }},
        {"Singleton bound on hamming(4)/F_3 is q^(N-d+1)",
         [](const Budget& b, std::uint64_t) {
             Field f3 = FiniteField::make(3);
             for (int d = 1; d <= 4; ++d) {
                 auto r = singleton_bound(hamming_family(f3, 4), d, b);
                 if (r.mu_bound != pow_u64(3, 4 - d + 1)) return false;
             }
             return true;
         }},
        {"rank-metric Singleton bound: q^(max(m,n)(min(m,n)-d+1))",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             return singleton_bound(rank_family(f2, 2, 2, b), 2, b).mu_bound == 4 &&
                    singleton_bound(rank_family(f2, 2, 3, b), 2, b).mu_bound == 8;
         }},
        {"anticode gap: exact 2-anticode max 3 > mu(2) = 2 on the 14-point family",
         [](const Budget&, std::uint64_t) {
             Budget big{std::uint64_t(1) << 24, std::uint64_t(1) << 26};
             auto fam = anticode_gap_family_f2_10();
             WeightTable t = weight_table(fam, big);
             Field f2 = fam.field;
             std::vector<FqVector> gens;
             for (int i : {0, 2, 4}) {
                 FqVector v = zero_vector(f2, 10);
                 v.c[i] = v.c[i + 1] = 1;
                 gens.push_back(v);
             }
             for (const auto& v : enumerate_subspace(f2, 10, gens, big))
                 if (t.at(v) > 2) return false;
             return mu(t, 2, big).value == 2 && exact_anticode_max(fam, 2, 3, big).dim == 3;
         }},
        {"phase weight closed form matches BFS and the upper bound",
         [](const Budget& b, std::uint64_t) {
             Field f3 = FiniteField::make(3);
             WeightTable t = weight_table(phase_rotation_family(f3, 3), b);
             int top = phase_weight_upper_bound(f3, 3);
             for (std::uint64_t i = 0; i < t.states(); ++i) {
                 FqVector x = vector_from_index(f3, 3, i);
                 if (phase_weight(x) != (int)t.w[i] || phase_weight(x) > top) return false;
             }
             return true;
         }},
        {"the [7,4] Hamming code is Hamming-perfect with t = 1",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             LinearCode h(f2, 7,
                          {{f2, {1, 0, 0, 0, 1, 1, 0}},
                           {f2, {0, 1, 0, 0, 1, 0, 1}},
                           {f2, {0, 0, 1, 0, 0, 1, 1}},
                           {f2, {0, 0, 0, 1, 1, 1, 1}}});
             return is_perfect(h, hamming_family(f2, 7), b) == 1;
         }},
        {"perfect codes transfer through the phase-rotation parent map",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             LinearCode h(f2, 7,
                          {{f2, {1, 0, 0, 0, 1, 1, 0}},
                           {f2, {0, 1, 0, 0, 1, 0, 1}},
                           {f2, {0, 0, 1, 0, 0, 1, 1}},
                           {f2, {0, 0, 0, 1, 1, 1, 1}}});
             auto rep = perfect_transfer(h, parent_function(phase_rotation_family(f2, 6)), b);
             return rep.hypothesis_ok && rep.hamming_t == 1 && rep.f_t == 1 && rep.d_hamming == 3 &&
                    rep.d_f == 3 && rep.agree;
         }},
        {"free weight of the discrete metric is the Hamming weight",
         [](const Budget& b, std::uint64_t) {
             Field f3 = FiniteField::make(3);
             std::vector<std::uint16_t> disc(9, 1);
             disc[0] = 0;
             auto fr = free_weighted_space(WeightedSpace::make(f3, 2, disc, b), b);
             for (std::uint64_t i = 0; i < pow_u64(3, 4); ++i) {
                 FqVector x = vector_from_index(f3, 4, i);
                 if (fr.weight(x) != hamming_weight(x)) return false;
             }
             return true;
         }},
        {"embedding frontier on F_2^2: t1+t2+t3-4 = 2a-b, discrete at (0,1)",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             auto fr = pareto_frontier_f2_dim2(1, 1, 1);
             if (fr != std::vector<std::pair<int, int>>{{0, 1}}) return false;
             WeightedSpace disc = WeightedSpace::make(f2, 2, {0, 1, 1, 1}, b);
             return is_ab_embeddable(disc, 0, 1, b).has_value() &&
                    !is_ab_embeddable(disc, 0, 0, b).has_value();
         }},
        {"even-sum weights (2,2,2) embed into Hamming at (D-2, 0) = (1,0)",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             WeightedSpace v = WeightedSpace::make(f2, 2, {0, 2, 2, 2}, b);
             if (pareto_frontier_f2_dim2(2, 2, 2) != std::vector<std::pair<int, int>>{{1, 0}})
                 return false;
             return is_ab_embeddable(v, 1, 0, b).has_value();
         }},
        {"scale-translation-invariant weights embed into projective spaces",
         [](const Budget& b, std::uint64_t) {
             Field f2 = FiniteField::make(2);
             for (auto w : {std::vector<std::uint16_t>{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 2, 2, 3}}) {
                 if (!embed_into_projective(WeightedSpace::make(f2, 2, w, b), b).verified)
                     return false;
             }
             return true;
         }},
    };
    return checks;
}

int run_verify(const GlobalOpts& g) {
    Budget b = make_budget(g);
    int passed = 0, failed = 0;
    json results = json::array();
    for (const auto& c : golden_checks()) {
        bool ok = false;
        std::string err;
        try {
            ok = c.fn(b, g.seed);
        } catch (const std::exception& e) {
            err = e.what();
        }
        (ok ? passed : failed)++;
        if (g.as_json) {
            results.push_back({{"name", c.name}, {"ok", ok}});
        } else {
            std::cout << (ok ? "ok   " : "FAIL ") << c.name;
            if (!err.empty()) std::cout << " (" << err << ")";
            std::cout << "\n";
        }
    }
    if (g.as_json)
        std::cout << json{{"passed", passed}, {"failed", failed}, {"checks", results}}.dump(2)
                  << "\n";
    else
        std::cout << passed << "/" << (passed + failed) << " examples reproduced\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective metrics on finite vector spaces"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--q", g.q, "field order q = p^e")->capture_default_str();
    app.add_option("--modulus", g.modulus, "modulus coefficients c0,c1,... for extension fields");
    app.add_option("--field", g.field_file, "field descriptor JSON file (overrides --q)");
    app.add_flag("--json", g.as_json, "machine-readable output");
    app.add_option("--max-states", g.max_states, "state budget for exhaustive enumeration")
        ->capture_default_str();
    app.add_option("--max-search", g.max_search, "step budget for backtracking searches")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized replay checks")->capture_default_str();

    std::string family_a, vector_arg, code_file, weights_file, export_file;
    std::vector<std::string> equiv_fams;
    int dist = 1, radius = -1, dim_cap = 4;
    bool extend = false, anticode_exact = false;

    auto* sp = app.add_subcommand("spheres", "sphere and ball sizes as CSV");
    sp->add_option("--family", family_a, "family spec (name:params or @file.json)")->required();

    auto* wt = app.add_subcommand("weight", "projective weight of a vector");
    wt->add_option("--family", family_a)->required();
    wt->add_option("--vector", vector_arg, "comma-separated coordinates");
    wt->add_option("--export-table", export_file, "write the full table (binary) to a file");

    auto* pa = app.add_subcommand("parent", "parent matrix, parent code, coset distribution");
    pa->add_option("--family", family_a)->required();

    auto* eq = app.add_subcommand("equiv", "linear equivalence of two families");
    eq->add_option("--family", equiv_fams, "family spec, given twice")->required()->expected(2);

    auto* au = app.add_subcommand("aut", "automorphism group of a family");
    au->add_option("--family", family_a)->required();

    auto* ma = app.add_subcommand("matroid", "matroid data and the extended family");
    ma->add_option("--family", family_a)->required();
    ma->add_flag("--extend", extend, "print the extended family");

    auto* bo = app.add_subcommand("bounds", "mu profile and Singleton-type bounds");
    bo->add_option("--family", family_a)->required();
    bo->add_option("--d", dist, "design distance")->required();
    bo->add_flag("--anticode-exact", anticode_exact, "also run the exact anticode search");
    bo->add_option("--t", radius, "anticode radius (default d-1)");
    bo->add_option("--dim-cap", dim_cap, "exact anticode dimension cap")->capture_default_str();

    auto* pe = app.add_subcommand("perfect", "perfect-code check under a projective metric");
    pe->add_option("--family", family_a)->required();
    pe->add_option("--code", code_file, "code JSON file")->required();

    auto* em = app.add_subcommand("embed", "embed a weighted space into a projective metric");
    em->add_option("--weights", weights_file, "JSON array of q^N weights in rank-index order")
        ->required();

    app.add_subcommand("verify", "replay the documented example values");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        Budget budget = make_budget(g);
        Field field = make_field(g);

        if (sp->parsed()) {
            SpanningFamily fam = parse_family_spec(family_a, field, budget);
            WeightTable t = weight_table(fam, budget);
            if (g.as_json) {
                std::cout << json{{"spheres", t.spheres}, {"balls", t.balls}}.dump(2) << "\n";
            } else {
                std::cout << "t,sphere,ball\n";
                for (size_t i = 0; i < t.spheres.size(); ++i)
                    std::cout << i << "," << t.spheres[i] << "," << t.balls[i] << "\n";
            }
        } else if (wt->parsed()) {
            SpanningFamily fam = parse_family_spec(family_a, field, budget);
            if (!export_file.empty()) {
                WeightTable t = weight_table(fam, budget);
                std::ofstream out(export_file, std::ios::binary);
                if (!out) throw Error("cannot open " + export_file);
                write_weight_table(out, t);
                if (!g.as_json) std::cout << "table written to " << export_file << "\n";
            }
            if (!vector_arg.empty()) {
                FqVector x = parse_vector(field, vector_arg);
                if (x.size() != fam.ambient_dim) throw Error("vector length != ambient dimension");
                std::uint32_t w = projective_weight(fam, x, budget);
                json rep = json::array();
                std::string rep_str;
                if (w != kInfWeight && w > 0) {
                    for (const auto& [c, idx] : minimal_representation(fam, x, budget)) {
                        rep.push_back({c.value(), idx});
                        rep_str += " + " + std::to_string(c.value()) + "*f" + std::to_string(idx);
                    }
                }
                if (g.as_json) {
                    json j{{"weight", w == kInfWeight ? json(nullptr) : json(w)},
                           {"representation", rep}};
                    std::cout << j.dump(2) << "\n";
                } else if (w == kInfWeight) {
                    std::cout << "inf\n";
                } else {
                    std::cout << w << "\n";
                    if (!rep_str.empty()) std::cout << "x = " << rep_str.substr(3) << "\n";
                }
            } else if (export_file.empty()) {
                throw Error("weight needs --vector or --export-table");
            }
        } else if (pa->parsed()) {
            SpanningFamily fam = parse_family_spec(family_a, field, budget);
            ParentFunction pf = parent_function(fam);
            LinearCode pc = parent_code(pf);
            int d = pc.min_hamming_distance(budget);
            auto alpha = coset_leader_weight_distribution(pc, budget);
            if (g.as_json) {
                json j{{"parent_matrix", matrix_to_json(pf.matrix)},
                       {"code", code_to_json(pc)},
                       {"d_H", d == kInfWeight ? json(nullptr) : json(d)},
                       {"coset_distribution", alpha}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "parent matrix (" << pf.matrix.rows << "x" << pf.matrix.cols << "):\n";
                print_matrix(std::cout, pf.matrix);
                std::cout << "parent code basis (dim " << pc.dim() << "):\n";
                print_matrix(std::cout, pc.basis());
                if (d == kInfWeight)
                    std::cout << "d_H = inf\n";
                else
                    std::cout << "d_H = " << d << "\n";
                std::cout << "coset leader distribution:";
                for (auto v : alpha) std::cout << " " << v;
                std::cout << "\n";
            }
        } else if (eq->parsed()) {
            SpanningFamily A = parse_family_spec(equiv_fams[0], field, budget);
            SpanningFamily B = parse_family_spec(equiv_fams[1], field, budget);
            auto L = are_equivalent(A, B, budget);
            if (g.as_json) {
                json j{{"equivalent", L.has_value()}};
                if (L) j["witness"] = matrix_to_json(L->mat);
                std::cout << j.dump(2) << "\n";
            } else if (L) {
                std::cout << "EQUIVALENT, witness matrix:\n";
                print_matrix(std::cout, L->mat);
            } else {
                std::cout << "NONE\n";
            }
        } else if (au->parsed()) {
            SpanningFamily fam = parse_family_spec(family_a, field, budget);
            auto aut = aut_group(fam, budget);
            if (g.as_json) {
                json elems = json::array();
                for (const auto& L : aut) elems.push_back(matrix_to_json(L.mat));
                std::cout << json{{"order", aut.size()}, {"elements", elems}}.dump(2) << "\n";
            } else {
                std::cout << "order " << aut.size() << "\n";
                for (const auto& L : aut) {
                    print_matrix(std::cout, L.mat);
                    std::cout << "--\n";
                }
            }
        } else if (ma->parsed()) {
            SpanningFamily fam = parse_family_spec(family_a, field, budget);
            LinearMatroid m = matroid_of(fam);
            std::vector<int> all(fam.size());
            for (int i = 0; i < fam.size(); ++i) all[i] = i;
            auto circ = circuits(m, fam.size(), budget);
            json j{{"ground", fam.size()}, {"rank", m.rank(all)}, {"circuits", circ}};
            if (!g.as_json) {
                std::cout << "ground set " << fam.size() << ", rank " << m.rank(all) << ", "
                          << circ.size() << " circuit(s)\n";
            }
            if (extend) {
                SpanningFamily ext = extended_family(fam, budget);
                bool closed = same_points(ext, fam);
                if (g.as_json) {
                    json pts = json::array();
                    for (const auto& p : ext.points) pts.push_back(vector_to_json(p));
                    j["extended"] = pts;
                    j["closed"] = closed;
                } else {
                    std::cout << "extended family (" << ext.size() << " points, "
                              << (closed ? "closed" : "not closed") << "):\n";
                    for (const auto& p : ext.points) std::cout << "  " << vec_str(p) << "\n";
                }
            }
            if (g.as_json) std::cout << j.dump(2) << "\n";
        } else if (bo->parsed()) {
            SpanningFamily fam = parse_family_spec(family_a, field, budget);
            WeightTable tab = weight_table(fam, budget);
            json mus = json::array();
            if (!g.as_json) std::cout << "mu profile:\n";
            for (int t = 0; t <= tab.max_weight; ++t) {
                MuValue m = mu(tab, t, budget);
                mus.push_back(m.value);
                if (!g.as_json) std::cout << "  mu(" << t << ") = " << m.value << "\n";
            }
            auto s = singleton_bound(fam, dist, budget);
            json j{{"mu", mus},
                   {"singleton", {{"mu_bound", s.mu_bound}, {"classical", s.classical}}}};
            if (!g.as_json)
                std::cout << "singleton: |C| <= " << s.mu_bound << " (classical " << s.classical
                          << ")\n";
            if (anticode_exact) {
                int t = radius >= 0 ? radius : dist - 1;
                auto a = exact_anticode_max(fam, t, dim_cap, budget);
                int muv = mu(tab, t, budget).value;
                j["anticode"] = {{"t", t}, {"exact_max", a.dim}, {"mu", muv}, {"gap", a.dim > muv}};
                if (!g.as_json)
                    std::cout << "exact " << t << "-anticode max dim = " << a.dim << " vs mu = "
                              << muv << (a.dim > muv ? "  [GAP]" : "") << "\n";
            }
            if (g.as_json) std::cout << j.dump(2) << "\n";
        } else if (pe->parsed()) {
            SpanningFamily fam = parse_family_spec(family_a, field, budget);
            LinearCode code = load_code(code_file);
            WeightTable tab = weight_table(fam, budget);
            int d = min_distance_F(code, tab, budget);
            auto t = is_perfect(code, tab, budget);
            double ratio = 1.0;
            if (!t && d != kInfWeight) {
                int tt = (d - 1) / 2;
                std::uint64_t ball = tt <= tab.max_weight ? tab.balls[tt] : tab.balls.back();
                ratio = (double)(code.size() * ball) / (double)tab.states();
            }
            if (g.as_json) {
                json j{{"perfect", t.has_value()},
                       {"t", t ? json(*t) : json(nullptr)},
                       {"d_F", d == kInfWeight ? json(nullptr) : json(d)},
                       {"packing_ratio", ratio}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (t ? "PERFECT" : "not perfect");
                if (t) std::cout << " with t = " << *t;
                std::cout << ", d_F = ";
                if (d == kInfWeight)
                    std::cout << "inf";
                else
                    std::cout << d;
                std::cout << ", packing ratio " << ratio << "\n";
            }
        } else if (em->parsed()) {
            std::ifstream in(weights_file);
            if (!in) throw Error("cannot open " + weights_file);
            json jw;
            in >> jw;
            std::vector<std::uint16_t> w = jw.get<std::vector<std::uint16_t>>();
            int n = 0;
            std::uint64_t s = 1;
            while (s < w.size()) s *= field->q(), ++n;
            if (s != w.size()) throw Error("weight array length must be a power of q");
            WeightedSpace V = WeightedSpace::make(field, n, w, budget);
            EmbeddingReport rep = embed_into_projective(V, budget);
            int a = rep.w_dim - n, b = rep.r - rep.w_dim;
            if (g.as_json) {
                json out{{"r", rep.r}, {"W_dim", rep.w_dim},
                         {"a", a},     {"b", b},
                         {"iota", matrix_to_json(rep.iota)},
                         {"verified", rep.verified}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "r = " << rep.r << ", dim W = " << rep.w_dim << " (a = " << a
                          << ", b = " << b << ")\n";
                std::cout << "iota (rows = images of basis vectors):\n";
                print_matrix(std::cout, rep.iota);
                std::cout << (rep.verified ? "verified: every weight equals its fiber minimum\n"
                                           : "VERIFICATION FAILED\n");
            }
            if (!rep.verified) return 1;
        } else {
            return run_verify(g);
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
