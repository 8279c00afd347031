#include "tables.hpp"

#include "hodgeorbit/cayley.hpp"
#include "hodgeorbit/grading.hpp"
#include "hodgeorbit/lines.hpp"
#include "hodgeorbit/reps.hpp"
#include "hodgeorbit/rootdata.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hodgeorbit::cli {

namespace {

RootSystem rs_of(const std::string& name) { return RootSystem(parse_lie_type(name)); }

GradingElement S(const RootSystem& rs, int i) { return GradingElement::from_index_set(rs.rank(), {i}); }

std::string key_of(const RootSystem& rs, const std::vector<int>& I, const std::string& rest = "") {
    std::string k = rs.lie_type().name() + "/P";
    for (std::size_t j = 0; j < I.size(); ++j) k += (j ? "," : "") + std::to_string(I[j]);
    if (!rest.empty()) k += "/" + rest;
    return k;
}

std::string weight_label(const IntWeight& w) {
    std::string out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] == 0) continue;
        if (!out.empty()) out += "+";
        if (w[j] != 1) out += std::to_string(w[j]);
        out += "w" + std::to_string(j + 1);
    }
    return out.empty() ? "0" : out;
}

std::string join(const std::vector<int>& v) { return format_coords(v); }

const std::vector<std::string> kAdjoint = {"B3", "B4", "B5", "B6", "D4", "D5", "D6", "D7", "E6", "E7", "E8", "F4", "G2"};
const std::vector<std::string> kExceptional = {"E6", "E7", "E8", "F4", "G2"};

Table highest_roots() {
    Table t{"table1", {"highest_root", "weight"}, {}};
    std::vector<std::string> names;
    for (int n = 1; n <= 8; ++n) names.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) names.push_back("B" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) names.push_back("C" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) names.push_back("D" + std::to_string(n));
    names.insert(names.end(), kExceptional.begin(), kExceptional.end());
    for (const std::string& name : names) {
        const RootSystem rs = rs_of(name);
        t.rows.push_back({t.id, name, {join(rs.highest_root()), weight_label(root_to_weight(rs, rs.highest_root()))}});
    }
    return t;
}

Table degrees() {
    Table t{"table2", {"n", "d", "N"}, {}};
    for (const std::string& name : kExceptional) {
        const RootSystem rs = rs_of(name);
        const int i = fundamental_adjoint_node(rs);
        const EmbeddingDegree e = embedding_degree(rs, {i});
        t.rows.push_back({t.id, key_of(rs, {i}), {e.n, e.d.convert_to<long long>(), e.N.convert_to<long long>()}});
    }
    return t;
}

Table grading_h() {
    Table t{"table5", {"H_in_S"}, {}};
    for (const std::string& name : kAdjoint) {
        const RootSystem rs = rs_of(name);
        const int i = fundamental_adjoint_node(rs);
        t.rows.push_back({t.id, key_of(rs, {i}), {join(weight_grading_dims(rs, i).h_in_S)}});
    }
    return t;
}

Table type_one_dims() {
    Table t{"table6", {"dot", "a", "b", "n", "dim_g"}, {}};
    for (const std::string& name : kAdjoint) {
        const RootSystem rs = rs_of(name);
        const int i = fundamental_adjoint_node(rs);
        const Sos B{rs.simple_root(i)};
        const HodgeDeligneDiamond d = bigrading(rs, S(rs, i), B);
        t.rows.push_back({t.id, key_of(rs, {i}, format_sos(B)),
                          {d.at(2, -1), d.at(1, 0), d.at(0, 0), parabolic(rs, {i}).flag_dim, rs.dim()}});
    }
    return t;
}

Table enhanced() {
    Table t{"table7", {"lines_nodes", "dim_C_o", "C_o", "Gamma", "dim_X"}, {}};
    for (const std::string& name : kAdjoint) {
        const RootSystem rs = rs_of(name);
        const int i = fundamental_adjoint_node(rs);
        const Sos B{rs.simple_root(i)};
        const FlagDescriptor fd = co_descriptor(rs, {i});
        const EnhancedSl2Descriptor ed = enhanced_sl2_descriptor(rs, S(rs, i), B);
        t.rows.push_back({t.id, key_of(rs, {i}, format_sos(B)),
                          {join(lines_parabolic(rs, {i})), fd.dimension, fd.display_name,
                           format_components(ed.gamma_type), ed.dim_X}});
    }
    return t;
}

Table schubert() {
    Table t{"table8", {"T_w", "dim"}, {}};
    const std::vector<std::vector<int>> e7 = {
        {-1, 0, 1, 0, 0, 0, 0}, {-1, 0, 0, 0, 1, 0, 0}, {-2, 0, 1, 0, 0, 1, 0}, {-3, 0, 1, 0, 1, 0, 1},
        {-2, 0, 0, 1, 0, 0, 1}, {-1, 1, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1}};
    const std::vector<std::vector<int>> e8 = {
        {0, 1, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 1, 0, 0, -2}, {0, 1, 0, 0, 0, 1, 0, -3}, {0, 1, 0, 0, 1, 0, 1, -5},
        {0, 0, 0, 1, 0, 0, 1, -4}, {0, 0, 1, 0, 0, 0, 1, -3}, {1, 0, 0, 0, 0, 0, 1, -2}, {0, 0, 0, 0, 0, 0, 1, -1}};
    for (const auto& [name, node, rows] : {std::tuple{"E7", 1, e7}, std::tuple{"E8", 8, e8}}) {
        const RootSystem rs = rs_of(name);
        for (std::size_t k = 0; k < rows.size(); ++k)
            t.rows.push_back({t.id, key_of(rs, {node}, "w" + std::to_string(k + 1)),
                              {join(rows[k]), schubert_dim_from_grading(rs, node, GradingElement{rows[k]})}});
    }
    return t;
}

Table census() {
    Table t{"table9", {"s", "c", "k", "mu", "type", "classes"}, {}};
    for (const std::string& name : kAdjoint) {
        const RootSystem rs = rs_of(name);
        const int i = fundamental_adjoint_node(rs);
        for (const CensusEntry& e : boundary_census(rs, i))
            t.rows.push_back({t.id, key_of(rs, {i}, format_sos(e.representative)),
                              {static_cast<int>(e.representative.size()), e.invariants.codim, *e.invariants.k_dim,
                               *e.invariants.mu, e.invariants.lmhs_type, e.inequivalent_count}});
    }
    return t;
}

// First two-element set in enumeration order realizing each type II label.
Table type_two_dims() {
    Table t{"table10", {"type", "dot", "circle", "box", "double_circle"}, {}};
    for (const std::string& name : kAdjoint) {
        const RootSystem rs = rs_of(name);
        const int i = fundamental_adjoint_node(rs);
        const GradingElement E = S(rs, i);
        std::map<std::string, bool> seen;
        for (const Sos& B : enumerate_sos(rs, E)) {
            if (B.size() != 2) continue;
            const HodgeDeligneDiamond d = bigrading(rs, E, B);
            const std::string label = lmhs_type(rs.lie_type(), d);
            if (label.rfind("II", 0) != 0 || label == "III" || seen[label]) continue;
            seen[label] = true;
            t.rows.push_back({t.id, key_of(rs, {i}, format_sos(B)), {label, d.at(2, 0), d.at(1, 0), d.at(1, 1), d.at(0, 0)}});
        }
    }
    return t;
}

Table lemma_weights() {
    Table t{"lemma3_5", {"weights"}, {}};
    std::vector<std::pair<std::string, std::vector<int>>> cases;
    for (int n = 2; n <= 6; ++n) cases.push_back({"A" + std::to_string(n), {1, n}});
    for (int n = 3; n <= 6; ++n) cases.push_back({"B" + std::to_string(n), {2}});
    for (int n = 2; n <= 6; ++n) cases.push_back({"C" + std::to_string(n), {1}});
    for (int n = 4; n <= 7; ++n) cases.push_back({"D" + std::to_string(n), {2}});
    cases.insert(cases.end(), {{"E6", {2}}, {"E7", {1}}, {"E8", {8}}, {"F4", {1}}, {"G2", {2}}});
    for (const auto& [name, I] : cases) {
        const RootSystem rs = rs_of(name);
        std::string ws;
        for (const Weight& w : weights_with_E_value_one(rs, GradingElement::from_index_set(rs.rank(), I)))
            ws += (ws.empty() ? "" : ",") + weight_label(w.to_ints());
        t.rows.push_back({t.id, key_of(rs, I), {ws.empty() ? "-" : ws}});
    }
    return t;
}

Table remark_sets() {
    Table t{"remark4_18", {"valid", "s", "real_rank"}, {}};
    const std::vector<std::tuple<std::string, int, std::vector<std::string>>> rows = {
        {"E7", 5, {"0000100", "0001110", "0112100", "0111110", "0101111", "0011111"}},
        {"E8", 2, {"01000000", "01121000", "11121100", "11222100", "11221110", "11122110", "01122210"}},
        {"E8", 5, {"00001000", "00011100", "01121000", "01111100", "01011110", "00111110"}},
        {"E8", 6, {"00000100", "00001110", "00011111", "01122100", "01121110", "01111111"}},
        {"F4", 2, {"0100", "1110", "0120"}},
        {"G2", 1, {"10"}},
    };
    for (const auto& [name, node, roots] : rows) {
        const RootSystem rs = rs_of(name);
        Sos B;
        for (const std::string& s : roots) {
            Coords c;
            for (char ch : s) c.push_back(ch - '0');
            B.push_back(c);
        }
        const GradingElement E = S(rs, node);
        t.rows.push_back({t.id, key_of(rs, {node}, format_sos(B)),
                          {validate_sos(rs, E, B).empty() ? 1 : 0, static_cast<int>(B.size()), real_rank(rs, E)}});
    }
    return t;
}

Table type_one_support() {
    Table t{"figure3", {"p", "q", "dim"}, {}};
    for (const std::string& name : kAdjoint) {
        const RootSystem rs = rs_of(name);
        const int i = fundamental_adjoint_node(rs);
        const Sos B{rs.simple_root(i)};
        for (const auto& [pq, v] : bigrading(rs, S(rs, i), B).entries)
            if (v) t.rows.push_back({t.id, key_of(rs, {i}, format_sos(B)), {pq.first, pq.second, v}});
    }
    return t;
}

Table hodge_numbers() {
    Table t{"intro_hodge_numbers", {"weight", "hodge_numbers"}, {}};
    const std::vector<std::tuple<std::string, IntWeight, int>> cases = {
        {"G2", {1, 0}, 2}, {"G2", {0, 1}, 2}, {"F4", {0, 0, 0, 1}, 1}, {"E6", {1, 0, 0, 0, 0, 0}, 2},
        {"E7", {0, 0, 0, 0, 0, 0, 1}, 1}};
    for (const auto& [name, w, node] : cases) {
        const RootSystem rs = rs_of(name);
        std::string seq;
        for (long long h : hodge_sequence(rep_hodge_numbers(rs, Weight::from_ints(w), S(rs, node))))
            seq += (seq.empty() ? "" : ",") + std::to_string(h);
        t.rows.push_back({t.id, key_of(rs, {node}), {weight_label(w), seq}});
    }
    return t;
}

const std::map<std::string, std::function<Table()>>& builders() {
    static const std::map<std::string, std::function<Table()>> m = {
        {"table1", highest_roots}, {"table2", degrees},       {"table5", grading_h},
        {"table6", type_one_dims}, {"table7", enhanced},      {"table8", schubert},
        {"table9", census},        {"table10", type_two_dims}, {"lemma3_5", lemma_weights},
        {"remark4_18", remark_sets}, {"figure3", type_one_support}, {"intro_hodge_numbers", hodge_numbers},
    };
    return m;
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids = {"table1", "table2", "table5", "table6", "table7", "table8",
                                                 "table9", "table10", "lemma3_5", "remark4_18", "figure3",
                                                 "intro_hodge_numbers"};
    return ids;
}

Table build_table(const std::string& id) {
    const auto it = builders().find(id);
    if (it == builders().end()) throw std::invalid_argument("unknown table id: " + id);
    return it->second();
}

std::string to_tsv(const Table& t) {
    std::ostringstream os;
    os << "key";
    for (const std::string& c : t.columns) os << '\t' << c;
    os << '\n';
    for (const TableRecord& r : t.rows) {
        os << r.key;
        for (const Json& v : r.values) os << '\t' << cell(v);
        os << '\n';
    }
    return os.str();
}

Json to_json(const Table& t) {
    Json rows = Json::array();
    for (const TableRecord& r : t.rows) rows.push_back({{"table_id", r.table_id}, {"key", r.key}, {"values", r.values}});
    return {{"table_id", t.id}, {"columns", t.columns}, {"rows", rows}};
}

}  // namespace hodgeorbit::cli
