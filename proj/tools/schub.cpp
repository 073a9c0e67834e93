// Command-line surface for the schub library: Schubert and key
// polynomials, Rothe/skyline diagrams, dual characters, Schubert
// matroids, Schubitopes, and the theorem-checking sweeps.
//
// Exit codes: 0 success, 1 verification counterexample, 2 malformed
// input, 3 desk-scale cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "schub/algebra.hpp"
#include "schub/json_io.hpp"
#include "schub/matroid.hpp"
#include "schub/polytope.hpp"
#include "schub/verify.hpp"
#include "schub/weyl.hpp"

namespace {

using schub::Json;

struct GlobalOptions {
    bool pretty = false;
    std::string output_path;
    std::uint64_t basis_cap = schub::kDefaultBasisCap;
    std::uint64_t point_cap = schub::kDefaultPointCap;
    std::uint64_t product_cap = schub::kDefaultProductCap;
    std::uint64_t matrix_cap = schub::kDefaultMatrixCap;
};

void emit(const GlobalOptions& opts, const Json& json, const std::string& pretty_text) {
    std::string body = opts.pretty ? pretty_text : json.dump() + "\n";
    if (opts.output_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(opts.output_path);
        if (!out) throw std::runtime_error("cannot open output file " + opts.output_path);
        out << body;
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw schub::MalformedInput("bad list entry '" + item + "'");
        }
    }
    return out;
}

schub::Diagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schub::MalformedInput("cannot read diagram file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return schub::diagram_from_json(schub::parse_json_text(buffer.str()));
}

std::string pretty_diagram(const schub::Diagram& d) {
    std::ostringstream out;
    out << "n = " << d.n() << ", boxes = " << d.box_count() << "\n";
    for (int i = 1; i <= d.n(); ++i) {
        for (int j = 1; j <= d.n(); ++j) out << (d.contains(i, j) ? " #" : " .");
        out << "\n";
    }
    out << "columns:";
    for (int j = 1; j <= d.n(); ++j) {
        out << " {";
        std::vector<int> rows = schub::subset_elements(d.column(j));
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k) out << ",";
            out << rows[k];
        }
        out << "}";
    }
    out << "\n";
    return out.str();
}

std::string pretty_set_list(const std::set<schub::WeightVector>& points) {
    std::ostringstream out;
    for (const schub::WeightVector& v : points) {
        out << "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ",";
            out << v[i];
        }
        out << ")\n";
    }
    return out.str();
}

std::string pretty_polytope(const schub::GeneralizedPermutahedron& p) {
    std::ostringstream out;
    Json j = schub::polytope_to_json(p);
    for (const Json& entry : j["z"]) {
        bool full = static_cast<int>(entry["I"].size()) == p.n();
        bool first = true;
        for (const Json& i : entry["I"]) {
            if (!first) out << " + ";
            out << "t" << i.get<int>();
            first = false;
        }
        out << (full ? " = " : " <= ") << entry["z"].get<long long>() << "\n";
    }
    return out.str();
}

std::string pretty_report(const schub::SweepReport& r) {
    std::ostringstream out;
    out << "sweep " << r.sweep << ": " << r.passed << "/" << r.total << " passed, seed "
        << r.seed << ", " << r.elapsed_ms << " ms\n";
    for (const schub::SweepFailure& f : r.failures)
        out << "  FAIL " << f.item << " [" << f.check << "] " << f.detail << "\n";
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Schubert and key polynomials as lattice points of generalized permutahedra"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_flag("--pretty", opts.pretty, "human-readable output instead of JSON");
    app.add_option("--output", opts.output_path, "write output to FILE instead of stdout");
    app.add_option("--basis-cap", opts.basis_cap, "max bases per matroid enumeration");
    app.add_option("--point-cap", opts.point_cap, "max enumerated lattice points");
    app.add_option("--product-cap", opts.product_cap, "max dominated-diagram/basis tuples");
    app.add_option("--matrix-cap", opts.matrix_cap, "max weight-space matrix cells");

    // schubert --perm W
    std::string perm_text;
    CLI::App* cmd_schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    cmd_schubert->fallthrough();
    cmd_schubert->add_option("--perm", perm_text, "one-line notation, e.g. 41532")->required();

    // key --comp A
    std::string comp_text;
    CLI::App* cmd_key = app.add_subcommand("key", "key polynomial of a composition");
    cmd_key->fallthrough();
    cmd_key->add_option("--comp", comp_text, "comma-separated parts, e.g. 3,2,1,0,1")->required();

    // rothe --perm W
    std::string rothe_perm;
    CLI::App* cmd_rothe = app.add_subcommand("rothe", "Rothe diagram of a permutation");
    cmd_rothe->fallthrough();
    cmd_rothe->add_option("--perm", rothe_perm, "one-line notation")->required();

    // skyline --comp A
    std::string skyline_comp;
    CLI::App* cmd_skyline = app.add_subcommand("skyline", "skyline diagram of a composition");
    cmd_skyline->fallthrough();
    cmd_skyline->add_option("--comp", skyline_comp, "comma-separated parts")->required();

    // chi --diagram F [--support-only|--full-character]
    std::string chi_path;
    bool chi_support_only = false, chi_full = false;
    CLI::App* cmd_chi = app.add_subcommand("chi", "dual character of the flagged Weyl module");
    cmd_chi->fallthrough();
    cmd_chi->add_option("--diagram", chi_path, "diagram JSON file")->required();
    CLI::Option* chi_s = cmd_chi->add_flag("--support-only", chi_support_only, "support instead of the full character");
    cmd_chi->add_flag("--full-character", chi_full, "full character with multiplicities (default)")
        ->excludes(chi_s);

    // schubitope --diagram F [--inequalities|--lattice-points]
    std::string schubitope_path;
    bool want_inequalities = false, want_points = false;
    CLI::App* cmd_schubitope = app.add_subcommand("schubitope", "Schubitope of a diagram");
    cmd_schubitope->fallthrough();
    cmd_schubitope->add_option("--diagram", schubitope_path, "diagram JSON file")->required();
    CLI::Option* ineq = cmd_schubitope->add_flag("--inequalities", want_inequalities,
                                                 "subset bounds (default)");
    cmd_schubitope->add_flag("--lattice-points", want_points, "enumerate the lattice points")
        ->excludes(ineq);

    // matroid --n N --s S [--bases|--rank I]
    int matroid_n = 0;
    std::string matroid_s, matroid_rank_arg;
    bool matroid_bases = false;
    CLI::App* cmd_matroid = app.add_subcommand("matroid", "Schubert matroid queries");
    cmd_matroid->fallthrough();
    cmd_matroid->add_option("--n", matroid_n, "ground set size")->required();
    cmd_matroid->add_option("--s", matroid_s, "defining set, e.g. 1,3 (empty for rank 0)");
    CLI::Option* bases_flag = cmd_matroid->add_flag("--bases", matroid_bases, "list all bases");
    CLI::Option* rank_opt = cmd_matroid->add_option("--rank", matroid_rank_arg,
                                                    "rank of a subset, e.g. 2,3");
    rank_opt->excludes(bases_flag);

    // verify {schubert|key|theta}
    CLI::App* cmd_verify = app.add_subcommand("verify", "exhaustive theorem sweeps");
    cmd_verify->fallthrough();
    cmd_verify->require_subcommand(1);
    int verify_n = 5, max_part = 3, max_len = 3, jobs = 1;
    std::uint64_t seed = schub::kDefaultSweepSeed;
    bool fail_fast = false;
    CLI::App* verify_schubert = cmd_verify->add_subcommand(
        "schubert", "support = Schubitope lattice points = chi support over S_n");
    verify_schubert->fallthrough();
    verify_schubert->add_option("--n", verify_n, "symmetric group size (default 5)");
    CLI::App* verify_key = cmd_verify->add_subcommand(
        "key", "the same triple equality over compositions");
    verify_key->fallthrough();
    verify_key->add_option("--max-part", max_part, "largest part (default 3)");
    verify_key->add_option("--max-len", max_len, "number of parts (default 3)");
    CLI::App* verify_theta = cmd_verify->add_subcommand(
        "theta", "theta statistic equals matroid rank over the diagram corpus");
    verify_theta->fallthrough();
    for (CLI::App* sub : {verify_schubert, verify_key, verify_theta}) {
        sub->add_option("--seed", seed, "random corpus seed");
        sub->add_flag("--fail-fast", fail_fast, "stop at the first counterexample");
        sub->add_option("--jobs", jobs, "worker threads");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_schubert->parsed()) {
        schub::Polynomial f = schub::schubert_polynomial(schub::Permutation::parse(perm_text));
        emit(opts, schub::polynomial_to_json(f), f.to_pretty_string() + "\n");
        return 0;
    }
    if (cmd_key->parsed()) {
        schub::Polynomial f = schub::key_polynomial(schub::Composition::parse(comp_text));
        emit(opts, schub::polynomial_to_json(f), f.to_pretty_string() + "\n");
        return 0;
    }
    if (cmd_rothe->parsed()) {
        schub::Diagram d = schub::rothe_diagram(schub::Permutation::parse(rothe_perm));
        emit(opts, schub::diagram_to_json(d), pretty_diagram(d));
        return 0;
    }
    if (cmd_skyline->parsed()) {
        schub::Diagram d = schub::skyline_diagram(schub::Composition::parse(skyline_comp));
        emit(opts, schub::diagram_to_json(d), pretty_diagram(d));
        return 0;
    }
    if (cmd_chi->parsed()) {
        schub::Diagram d = load_diagram(chi_path);
        if (chi_support_only) {
            schub::LatticePointSet s;
            s.n = d.n();
            s.points = schub::chi_support(d, opts.product_cap);
            emit(opts, schub::lattice_points_to_json(s), pretty_set_list(s.points));
        } else {
            schub::Polynomial chi = schub::chi_character(d, opts.product_cap, opts.matrix_cap);
            emit(opts, schub::polynomial_to_json(chi), chi.to_pretty_string() + "\n");
        }
        return 0;
    }
    if (cmd_schubitope->parsed()) {
        schub::Diagram d = load_diagram(schubitope_path);
        schub::GeneralizedPermutahedron p = schub::schubitope(d);
        if (want_points) {
            schub::LatticePointSet s = schub::lattice_points(p, opts.point_cap);
            emit(opts, schub::lattice_points_to_json(s), pretty_set_list(s.points));
        } else {
            emit(opts, schub::polytope_to_json(p), pretty_polytope(p));
        }
        return 0;
    }
    if (cmd_matroid->parsed()) {
        schub::SchubertMatroid m(matroid_n, parse_int_list(matroid_s));
        Json j;
        j["n"] = m.ground_size();
        j["s"] = m.defining_set();
        if (!matroid_bases && rank_opt->count()) {
            schub::Subset i_set =
                schub::subset_from_elements(parse_int_list(matroid_rank_arg), m.ground_size());
            int r = schub::theta_rank(m, i_set);
            j["set"] = parse_int_list(matroid_rank_arg);
            j["rank"] = r;
            emit(opts, j, "rank = " + std::to_string(r) + "\n");
        } else {
            // default to listing bases when no query is given
            Json bases = Json::array();
            std::ostringstream pretty;
            for (schub::Subset b : m.bases(opts.basis_cap)) {
                std::vector<int> elems = schub::subset_elements(b);
                bases.push_back(elems);
                pretty << "{";
                for (std::size_t k = 0; k < elems.size(); ++k) {
                    if (k) pretty << ",";
                    pretty << elems[k];
                }
                pretty << "}\n";
            }
            j["bases"] = std::move(bases);
            emit(opts, j, pretty.str());
        }
        return 0;
    }
    if (cmd_verify->parsed()) {
        schub::SweepOptions sweep_opts;
        sweep_opts.fail_fast = fail_fast;
        sweep_opts.jobs = jobs;
        sweep_opts.seed = seed;
        sweep_opts.basis_cap = opts.basis_cap;
        sweep_opts.point_cap = opts.point_cap;
        sweep_opts.product_cap = opts.product_cap;
        schub::SweepReport report;
        if (verify_schubert->parsed()) {
            report = schub::sweep_schubert(verify_n, sweep_opts);
        } else if (verify_key->parsed()) {
            report = schub::sweep_key(max_part, max_len, sweep_opts);
        } else {
            report = schub::sweep_theta_rank(schub::theta_default_corpus(seed), sweep_opts);
        }
        emit(opts, schub::report_to_json(report), pretty_report(report));
        return report.all_passed() ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const schub::MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const schub::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
