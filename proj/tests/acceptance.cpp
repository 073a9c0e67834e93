// Acceptance suite: every check this project promises, one line of
// output per criterion.  Run all criteria by default, or a single one
// with --criterion N.  Exits nonzero if any executed criterion fails.
//
// Criterion 1 drives the installed CLI; point SCHUB_CLI at the binary
// (ctest does this automatically).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schub/algebra.hpp"
#include "schub/json_io.hpp"
#include "schub/matroid.hpp"
#include "schub/polytope.hpp"
#include "schub/verify.hpp"
#include "schub/weyl.hpp"

using namespace schub;

namespace {

std::string run_cli(const std::string& args) {
    const char* cli = std::getenv("SCHUB_CLI");
    if (cli == nullptr || *cli == '\0')
        throw std::runtime_error("SCHUB_CLI is not set; point it at the schub binary");
    std::string command = std::string("'") + cli + "' " + args;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("failed to run " + command);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe.get()))
        output.append(buffer, got);
    return output;
}

// --- criterion 1: figure fidelity through the CLI ---

bool figure_fidelity(std::ostream& log) {
    Json rothe = parse_json_text(run_cli("rothe --perm 41532"));
    if (rothe["columns"].dump() != "[[1],[1,3,4],[1,3],[],[]]") {
        log << "rothe --perm 41532 returned " << rothe["columns"].dump();
        return false;
    }
    Json skyline = parse_json_text(run_cli("skyline --comp 3,2,1,0,1"));
    if (skyline["columns"].dump() != "[[1,2,3,5],[1,2],[1],[],[]]") {
        log << "skyline --comp 3,2,1,0,1 returned " << skyline["columns"].dump();
        return false;
    }
    return true;
}

// --- criteria 2 and 3: the main sweeps ---

bool report_clean(const SweepReport& r, std::uint64_t expected_total, std::ostream& log) {
    if (r.total != expected_total) {
        log << "expected " << expected_total << " items, swept " << r.total;
        return false;
    }
    if (!r.all_passed()) {
        log << r.passed << "/" << r.total << " passed; first failure: "
            << r.failures.front().item << " [" << r.failures.front().check << "] "
            << r.failures.front().detail;
        return false;
    }
    log << r.total << "/" << r.total << " passed in " << r.elapsed_ms << " ms";
    return true;
}

bool schubert_sweep(std::ostream& log) {
    if (!report_clean(sweep_schubert(5), 120, log)) return false;
    log << "; stretch ";
    return report_clean(sweep_schubert(6), 720, log);
}

bool key_sweep(std::ostream& log) {
    if (!report_clean(sweep_key(3, 3), 64, log)) return false;
    log << "; stretch ";
    return report_clean(sweep_key(4, 4), 625, log);
}

// --- criterion 4: theta equals rank over the full corpus ---

bool theta_sweep(std::ostream& log) {
    std::vector<Diagram> corpus = theta_default_corpus(kDefaultSweepSeed);
    return report_clean(sweep_theta_rank(corpus), corpus.size(), log);
}

// --- criterion 5: character theorems ---

bool character_theorems(std::ostream& log) {
    for (const Permutation& w : all_permutations(4)) {
        if (chi_character(rothe_diagram(w)) != schubert_polynomial(w)) {
            log << "chi(Rothe(" << w.to_string() << ")) differs from the Schubert polynomial";
            return false;
        }
    }
    for (const Composition& alpha : all_compositions(3, 3)) {
        if (chi_character(skyline_diagram(alpha)) != key_polynomial(alpha)) {
            log << "chi(skyline(" << alpha.to_string() << ")) differs from the key polynomial";
            return false;
        }
    }
    log << "24 Schubert and 64 key characters match";
    return true;
}

// --- criterion 6: positivity and SNP for every polynomial above ---

bool positivity_and_snp(std::ostream& log) {
    std::size_t checked = 0;
    auto inspect = [&](const Polynomial& f, const Diagram& d, const std::string& name,
                       std::ostream& fail_log) {
        if (!f.all_coefficients_positive()) {
            fail_log << name << " has a nonpositive coefficient";
            return false;
        }
        if (!verify_snp(f, schubitope(d)).ok()) {
            fail_log << name << " fails the integer-point-transform check";
            return false;
        }
        ++checked;
        return true;
    };
    for (const Permutation& w : all_permutations(5))
        if (!inspect(schubert_polynomial(w), rothe_diagram(w), "S_" + w.to_string(), log))
            return false;
    for (const Composition& alpha : all_compositions(3, 3))
        if (!inspect(key_polynomial(alpha), skyline_diagram(alpha),
                     "kappa_" + alpha.to_string(), log))
            return false;
    for (const Permutation& w : all_permutations(4)) {
        Diagram d = rothe_diagram(w);
        if (!inspect(chi_character(d), d, "chi_D(" + w.to_string() + ")", log)) return false;
    }
    for (const Composition& alpha : all_compositions(3, 3)) {
        Diagram d = skyline_diagram(alpha);
        if (!inspect(chi_character(d), d, "chi_D(" + alpha.to_string() + ")", log))
            return false;
    }
    log << checked << " polynomials positive with saturated supports";
    return true;
}

// --- criterion 7: matroid polytope lattice points are the vertices ---

bool matroid_lattice_points(std::ostream& log) {
    std::size_t checked = 0;
    for (int n = 1; n <= 5; ++n) {
        for (Subset s = 0; s <= full_set(n); ++s) {
            SchubertMatroid m(n, subset_elements(s));
            if (!(lattice_points(matroid_polytope(m)) == vertices_from_bases(m))) {
                log << "SM_" << n << " with defining mask " << s
                    << " has extra or missing lattice points";
                return false;
            }
            ++checked;
            if (s == full_set(n)) break;
        }
    }
    log << checked << " Schubert matroids checked";
    return true;
}

// --- criterion 8: operator well-definedness ---

bool choice_invariance(std::ostream& log) {
    for (const Permutation& w : all_permutations(5)) {
        if (schubert_polynomial(w, ChoicePolicy::SmallestIndex) !=
            schubert_polynomial(w, ChoicePolicy::LargestIndex)) {
            log << "descent choice changes the Schubert polynomial of " << w.to_string();
            return false;
        }
    }
    for (const Composition& alpha : all_compositions(3, 3)) {
        if (key_polynomial(alpha, ChoicePolicy::SmallestIndex) !=
            key_polynomial(alpha, ChoicePolicy::LargestIndex)) {
            log << "ascent choice changes the key polynomial of " << alpha.to_string();
            return false;
        }
    }
    log << "120 Schubert and 64 key computations are choice-independent";
    return true;
}

// --- criterion 9: property suite ---

Polynomial random_sparse(std::mt19937_64& rng, int n) {
    Polynomial f(n);
    int terms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t) {
        Exponents e(n, 0);
        int budget = static_cast<int>(rng() % 5);
        for (int b = 0; b < budget; ++b) ++e[rng() % n];
        long c = static_cast<long>(rng() % 19) - 9;
        if (c == 0) c = 1;
        f.add_term(e, Int(c));
    }
    return f;
}

bool property_suite(std::ostream& log) {
    // Basis exchange, all Schubert matroids with n <= 6.
    for (int n = 1; n <= 6; ++n) {
        for (Subset s = 0; s <= full_set(n); ++s) {
            SchubertMatroid m(n, subset_elements(s));
            std::vector<Subset> bases = m.bases();
            for (Subset b1 : bases) {
                for (Subset b2 : bases) {
                    for (int e1 : subset_elements(b1 & ~b2)) {
                        bool exchanged = false;
                        for (int e2 : subset_elements(b2 & ~b1)) {
                            if (m.is_basis((b1 & ~(1u << (e1 - 1))) | (1u << (e2 - 1)))) {
                                exchanged = true;
                                break;
                            }
                        }
                        if (!exchanged) {
                            log << "basis exchange fails for defining mask " << s
                                << " at n=" << n;
                            return false;
                        }
                    }
                }
            }
            if (s == full_set(n)) break;
        }
    }

    // Rank submodularity over all subsets, n <= 6.
    for (int n = 1; n <= 6; ++n) {
        for (Subset s = 0; s <= full_set(n); ++s) {
            SchubertMatroid m(n, subset_elements(s));
            std::vector<int> rank(std::size_t{1} << n);
            for (Subset i_set = 0; i_set <= full_set(n); ++i_set) {
                rank[i_set] = rank_bruteforce(m, i_set);
                if (i_set == full_set(n)) break;
            }
            for (Subset a = 0; a <= full_set(n); ++a) {
                for (Subset b = a; b <= full_set(n); ++b) {
                    if (rank[a | b] + rank[a & b] > rank[a] + rank[b]) {
                        log << "submodularity fails for defining mask " << s << " at n=" << n;
                        return false;
                    }
                    if (b == full_set(n)) break;
                }
                if (a == full_set(n)) break;
            }
            if (s == full_set(n)) break;
        }
    }

    // Divided-difference operator identities on 1000 seeded sparse
    // polynomials with degree <= 4 and n <= 4.
    std::mt19937_64 rng(kDefaultSweepSeed);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Polynomial f = random_sparse(rng, n);
        for (int i = 1; i < n; ++i) {
            if (!divided_difference(divided_difference(f, i), i).is_zero()) {
                log << "d_i^2 != 0 on trial " << trial;
                return false;
            }
        }
        for (int i = 1; i + 1 < n; ++i) {
            Polynomial lhs =
                divided_difference(divided_difference(divided_difference(f, i), i + 1), i);
            Polynomial rhs = divided_difference(
                divided_difference(divided_difference(f, i + 1), i), i + 1);
            if (lhs != rhs) {
                log << "braid relation fails on trial " << trial;
                return false;
            }
        }
    }
    log << "exchange, submodularity, and operator identities all hold";
    return true;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::ostream&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "figure fidelity (rothe 41532, skyline 3,2,1,0,1)", figure_fidelity},
        {2, "Schubert sweep over S_5", schubert_sweep},
        {3, "key sweep, parts <= 3, length <= 3", key_sweep},
        {4, "theta = rank over the diagram corpus", theta_sweep},
        {5, "dual characters match Schubert and key polynomials", character_theorems},
        {6, "positivity and saturated Newton polytopes", positivity_and_snp},
        {7, "matroid polytope lattice points are basis indicators", matroid_lattice_points},
        {8, "descent/ascent choice independence", choice_invariance},
        {9, "property suite (exchange, submodularity, operator identities)", property_suite},
    };

    int failures = 0;
    bool matched = false;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        matched = true;
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " - " << c.name;
        if (log.tellp() > 0) std::cout << " (" << log.str() << ")";
        std::cout << std::endl;
        if (!ok) ++failures;
    }
    if (!matched) {
        std::cerr << "no such criterion: " << only << "\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
