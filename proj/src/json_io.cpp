#include "projmet/json_io.hpp"

#include <fstream>
#include <sstream>

namespace projmet {

using nlohmann::json;

json field_to_json(const Field& f) {
    return json{{"p", f->p()}, {"e", f->e()}, {"modulus", f->modulus()}};
}

Field field_from_json(const json& j) {
    std::vector<int> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<int>>();
    return FiniteField::make(j.at("p").get<int>(), j.value("e", 1), modulus);
}

json vector_to_json(const FqVector& v) { return json(v.c); }

FqVector vector_from_json(const Field& f, const json& j) {
    FqVector v{f, j.get<std::vector<int>>()};
    for (int x : v.c)
        if (x < 0 || x >= f->q()) throw Error("coordinate out of range");
    return v;
}

json matrix_to_json(const FqMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.row_list()) rows.push_back(vector_to_json(r));
    return rows;
}

json family_to_json(const SpanningFamily& fam) {
    json pts = json::array();
    for (const auto& p : fam.points) pts.push_back(vector_to_json(p));
    return json{{"field", field_to_json(fam.field)}, {"N", fam.ambient_dim}, {"points", pts}};
}

SpanningFamily family_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    int n = j.at("N").get<int>();
    std::vector<FqVector> pts;
    for (const auto& p : j.at("points")) {
        FqVector v = vector_from_json(f, p);
        if (v.size() != n) throw Error("point length != N");
        pts.push_back(std::move(v));
    }
    return family_from_vectors(f, pts);
}

json code_to_json(const LinearCode& code) {
    json rows = json::array();
    for (const auto& r : code.basis().row_list()) rows.push_back(vector_to_json(r));
    return json{{"field", field_to_json(code.field())}, {"n", code.length()}, {"basis", rows}};
}

LinearCode code_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    int n = j.at("n").get<int>();
    std::vector<FqVector> rows;
    for (const auto& r : j.at("basis")) rows.push_back(vector_from_json(f, r));
    return LinearCode(f, n, rows);
}

namespace {

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

} // namespace

SpanningFamily parse_family_spec(const std::string& spec, const Field& f, const Budget& budget) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw Error("cannot open family file " + spec.substr(1));
        json j;
        in >> j;
        return family_from_json(j);
    }
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto nums = parse_ints(args, ',');
    auto need = [&](size_t k) {
        if (nums.size() != k) throw Error("family " + name + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "hamming") { need(1); return hamming_family(f, nums[0]); }
    if (name == "discrete") { need(1); return discrete_family(f, nums[0], budget); }
    if (name == "phase_rotation") { need(1); return phase_rotation_family(f, nums[0]); }
    if (name == "rank") { need(2); return rank_family(f, nums[0], nums[1], budget); }
    if (name == "row") { need(2); return row_family(f, nums[0], nums[1], budget); }
    if (name == "column") { need(2); return column_family(f, nums[0], nums[1], budget); }
    if (name == "cover") { need(2); return cover_family(f, nums[0], nums[1], budget); }
    if (name == "sum_rank") {
        // blocks as m1xn1+m2xn2+...
        std::vector<std::pair<int, int>> blocks;
        std::stringstream ss(args);
        std::string blk;
        while (std::getline(ss, blk, '+')) {
            auto x = blk.find('x');
            if (x == std::string::npos) throw Error("sum_rank blocks look like 2x3+2x2");
            blocks.push_back({std::stoi(blk.substr(0, x)), std::stoi(blk.substr(x + 1))});
        }
        return sum_rank_family(f, blocks, budget);
    }
    if (name == "tensor_rank") {
        if (nums.empty()) throw Error("tensor_rank expects dimensions");
        return tensor_rank_family(f, nums, budget);
    }
    if (name == "combinatorial") {
        // index sets as 0+1/2+3/0+2; ambient dimension = 1 + largest index
        std::vector<std::vector<int>> sets;
        int n = 0;
        std::stringstream ss(args);
        std::string grp;
        while (std::getline(ss, grp, '/')) {
            std::vector<int> I = parse_ints(grp, '+');
            if (I.empty()) throw Error("empty index set");
            for (int i : I) n = std::max(n, i + 1);
            sets.push_back(std::move(I));
        }
        if (sets.empty()) throw Error("combinatorial expects index sets like 0+1/2+3");
        return combinatorial_family(f, n, sets, budget);
    }
    throw Error("unknown family spec '" + spec + "'");
}

} // namespace projmet
