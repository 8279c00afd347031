#include "tables.hpp"

#include "hodgeorbit/cayley.hpp"
#include "hodgeorbit/error.hpp"
#include "hodgeorbit/grading.hpp"
#include "hodgeorbit/rootdata.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hodgeorbit;
using cli::Json;

namespace {

constexpr int kOk = 0, kBadArgs = 2, kMath = 3, kIo = 4;
constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "tsv";
    std::uint64_t seed = 1;
    long long dim_cap = 0;

    std::string type;
    bool count_only = false;

    int node = 0;
    std::string chain;
    std::string sos;

    bool all = false;
    std::vector<std::string> ids;
    std::string out;

    int samples = 200;
};

Json envelope(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

// "m1,..,mr|m1,..,mr"
Sos parse_sos(const std::string& text) {
    Sos B;
    std::stringstream roots(text);
    std::string root;
    while (std::getline(roots, root, '|')) {
        Coords c;
        std::stringstream parts(root);
        std::string part;
        while (std::getline(parts, part, ',')) c.push_back(to_int(part));
        if (c.empty()) throw UsageError("empty root in --sos");
        B.push_back(c);
    }
    if (B.empty()) throw UsageError("--sos needs at least one root");
    return B;
}

Json diamond_json(const HodgeDeligneDiamond& d) {
    Json out = Json::array();
    for (const auto& [pq, v] : d.entries)
        if (v) out.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", v}});
    return out;
}

Json sos_json(const Sos& B) {
    Json out = Json::array();
    for (const Coords& b : B) out.push_back(b);
    return out;
}

int cmd_roots(const Options& o) {
    const RootSystem rs(parse_lie_type(o.type));
    if (o.format == "json") {
        Json j = envelope("roots");
        j["type"] = rs.lie_type().name();
        j["count"] = rs.num_positive();
        if (!o.count_only) {
            Json rows = Json::array();
            for (const Coords& a : rs.positive_roots())
                rows.push_back({{"coords", a}, {"height", height(a)}, {"length_squared", rs.inner(a, a)}});
            j["roots"] = rows;
        }
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    if (o.count_only) {
        std::cout << rs.num_positive() << "\n";
        return kOk;
    }
    std::cout << "coords\theight\tlength_squared\n";
    for (const Coords& a : rs.positive_roots())
        std::cout << format_coords(a) << '\t' << height(a) << '\t' << rs.inner(a, a) << '\n';
    return kOk;
}

struct OrbitRow {
    Sos B;
    OrbitInvariants inv;
    HodgeDeligneDiamond diamond;
    int classes = 1;
};

int cmd_orbit(const Options& o) {
    const RootSystem rs(parse_lie_type(o.type));
    if (!is_fundamental_adjoint(rs, {o.node}))
        throw Error(ErrorCode::NotFundamentalAdjoint,
                    rs.lie_type().name() + " node " + std::to_string(o.node) + " is not a fundamental adjoint node");
    const GradingElement E = GradingElement::from_index_set(rs.rank(), {o.node});
    std::vector<OrbitRow> rows;
    if (!o.sos.empty()) {
        const Sos B = parse_sos(o.sos);
        for (const Coords& b : B)
            if (static_cast<int>(b.size()) != rs.rank())
                throw UsageError("root " + format_coords(b) + " does not have " + std::to_string(rs.rank()) + " coordinates");
        const auto violations = validate_sos(rs, E, B);
        if (!violations.empty()) {
            for (const std::string& v : violations) std::cerr << "violation: " << v << "\n";
            return kMath;
        }
        rows.push_back({B, orbit_invariants(rs, E, B), bigrading(rs, E, B)});
    } else if (o.chain == "auto") {
        for (const CensusEntry& e : boundary_census(rs, o.node))
            rows.push_back({e.representative, e.invariants, e.diamond, e.inequivalent_count});
    } else {
        throw UsageError("orbit needs --chain auto or --sos");
    }

    if (o.format == "json") {
        Json j = envelope("orbit");
        j["type"] = rs.lie_type().name();
        j["node"] = o.node;
        Json arr = Json::array();
        for (const OrbitRow& r : rows)
            arr.push_back({{"s", r.B.size()},
                           {"B", sos_json(r.B)},
                           {"c", r.inv.codim},
                           {"k", r.inv.k_dim ? Json(*r.inv.k_dim) : Json()},
                           {"mu", r.inv.mu ? Json(*r.inv.mu) : Json()},
                           {"type", r.inv.lmhs_type},
                           {"classes", r.classes},
                           {"diamond", diamond_json(r.diamond)}});
        j["rows"] = arr;
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "s\tB\tc\tk\tmu\ttype\n";
    for (const OrbitRow& r : rows) {
        std::cout << r.B.size() << '\t' << format_sos(r.B) << '\t' << r.inv.codim << '\t'
                  << (r.inv.k_dim ? std::to_string(*r.inv.k_dim) : "-") << '\t'
                  << (r.inv.mu ? std::to_string(*r.inv.mu) : "-") << '\t' << r.inv.lmhs_type << '\n';
    }
    return kOk;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << text;
    if (!f.flush()) throw IoError("write failed: " + path.string());
}

int cmd_tables(const Options& o) {
    std::vector<std::string> ids = o.all ? cli::table_ids() : o.ids;
    if (ids.empty()) throw UsageError("tables needs --all or --id");
    for (const std::string& id : ids)
        if (std::find(cli::table_ids().begin(), cli::table_ids().end(), id) == cli::table_ids().end())
            throw UsageError("unknown table id: " + id);
    if (!o.out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(o.out, ec);
        if (ec) throw IoError("cannot create " + o.out + ": " + ec.message());
    }
    Json all = Json::array();
    for (const std::string& id : ids) {
        const cli::Table t = cli::build_table(id);
        if (o.format == "json") {
            Json j = envelope("tables");
            j["table"] = cli::to_json(t);
            if (o.out.empty()) all.push_back(j["table"]);
            else write_file(std::filesystem::path(o.out) / (id + ".json"), j.dump(2) + "\n");
        } else if (o.out.empty()) {
            std::cout << "# " << id << "\n" << cli::to_tsv(t);
        } else {
            write_file(std::filesystem::path(o.out) / (id + ".tsv"), cli::to_tsv(t));
        }
    }
    if (o.format == "json" && o.out.empty()) {
        Json j = envelope("tables");
        j["tables"] = all;
        std::cout << j.dump(2) << "\n";
    }
    return kOk;
}

// Random valid B for random maximal parabolics; checks the diamond symmetries.
int cmd_sweep(const Options& o) {
    std::mt19937_64 rng(o.seed);
    const std::vector<std::string> names = {"A3", "A5", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};
    int failures = 0;
    for (int t = 0; t < o.samples; ++t) {
        const RootSystem rs(parse_lie_type(names[rng() % names.size()]));
        const GradingElement E = GradingElement::from_index_set(rs.rank(), {1 + static_cast<int>(rng() % rs.rank())});
        std::vector<Coords> cand;
        for (const Coords& a : rs.positive_roots())
            if (E(a) == 1) cand.push_back(a);
        std::shuffle(cand.begin(), cand.end(), rng);
        Sos B;
        for (const Coords& a : cand)
            if (rng() % 2 &&
                std::all_of(B.begin(), B.end(), [&](const Coords& b) { return strongly_orthogonal(rs, a, b); }))
                B.push_back(a);
        const HodgeDeligneDiamond d = bigrading(rs, E, B);
        bool ok = d.total() == rs.dim();
        for (const auto& [pq, v] : d.entries) ok = ok && d.at(pq.second, pq.first) == v && d.at(-pq.first, -pq.second) == v;
        if (!ok) {
            ++failures;
            std::cerr << "asymmetric diamond: " << rs.lie_type().name() << " " << format_sos(B) << "\n";
        }
    }
    if (o.format == "json") {
        Json j = envelope("sweep");
        j["seed"] = o.seed;
        j["samples"] = o.samples;
        j["failures"] = failures;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "seed\tsamples\tfailures\n" << o.seed << '\t' << o.samples << '\t' << failures << '\n';
    }
    return failures ? kMath : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root data, gradings and boundary orbits of adjoint varieties"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--seed", o.seed, "seed for randomized sweeps");
    app.add_option("--dim-cap", o.dim_cap, "Freudenthal dimension cap (overrides HODGEORBIT_DIM_CAP)")
        ->check(CLI::PositiveNumber);

    CLI::App* roots = app.add_subcommand("roots", "list positive roots");
    roots->add_option("--type", o.type, "Lie type, e.g. G2")->required();
    roots->add_flag("--count-only", o.count_only, "print only the number of positive roots");

    CLI::App* orbit = app.add_subcommand("orbit", "orbit invariants for a fundamental adjoint variety");
    orbit->add_option("--type", o.type, "Lie type")->required();
    orbit->add_option("--node", o.node, "fundamental adjoint node")->required();
    auto* chain = orbit->add_option("--chain", o.chain, "'auto' runs the boundary census")->check(CLI::IsMember({"auto"}));
    auto* sos = orbit->add_option("--sos", o.sos, "explicit B, roots as 'm1,..,mr' joined by '|'");
    chain->excludes(sos);

    CLI::App* tables = app.add_subcommand("tables", "regenerate reference tables");
    auto* all = tables->add_flag("--all", o.all, "every table id");
    auto* id = tables->add_option("--id", o.ids, "table id (repeatable)");
    all->excludes(id);
    tables->add_option("--out", o.out, "output directory; stdout when omitted");

    CLI::App* sweep = app.add_subcommand("sweep", "randomized diamond symmetry sweep");
    sweep->add_option("--samples", o.samples, "number of random sets")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadArgs;
    }

    if (o.dim_cap > 0) setenv("HODGEORBIT_DIM_CAP", std::to_string(o.dim_cap).c_str(), 1);

    try {
        if (*roots) return cmd_roots(o);
        if (*orbit) return cmd_orbit(o);
        if (*tables) return cmd_tables(o);
        if (*sweep) return cmd_sweep(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool bad_name = e.code() == ErrorCode::InvalidType || e.code() == ErrorCode::InvalidRank;
        return bad_name ? kBadArgs : kMath;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kBadArgs;
}
