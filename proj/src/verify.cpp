#include "schub/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "schub/algebra.hpp"

namespace schub {

namespace {

std::string vector_brief(const WeightVector& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    out << ")";
    return out.str();
}

std::string diagram_brief(const Diagram& d) {
    std::ostringstream out;
    out << "n=" << d.n() << " columns=";
    for (int j = 1; j <= d.n(); ++j) {
        out << (j == 1 ? "[" : ";");
        std::vector<int> rows = subset_elements(d.column(j));
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k) out << ",";
            out << rows[k];
        }
    }
    out << "]";
    return out.str();
}

// Runs fn(i) for i in [0, count) across `jobs` threads.  Results must
// be written into per-index slots by the caller, which keeps the merge
// deterministic.  The first exception is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct SweepTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Shared sweep driver: items are checked independently, failures are
// merged in item order, and fail-fast truncates at the first failing
// item (which forces sequential execution).
template <typename Item, typename Check>
SweepReport run_sweep(std::string name, const std::vector<Item>& items,
                      const SweepOptions& opts, Check&& check) {
    SweepTimer timer;
    SweepReport report;
    report.sweep = std::move(name);
    report.seed = opts.seed;

    std::vector<std::vector<SweepFailure>> failures(items.size());
    if (opts.fail_fast) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            failures[i] = check(items[i]);
            ++report.total;
            if (failures[i].empty())
                ++report.passed;
            else
                break;
        }
    } else {
        parallel_for(items.size(), opts.jobs,
                     [&](std::size_t i) { failures[i] = check(items[i]); });
        report.total = items.size();
        for (const auto& f : failures)
            if (f.empty()) ++report.passed;
    }
    for (auto& f : failures)
        report.failures.insert(report.failures.end(), f.begin(), f.end());
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

void append_snp_failures(const std::string& item, const SnpReport& snp,
                         std::vector<SweepFailure>& out) {
    if (!snp.support_in_polytope)
        out.push_back({item, "support_in_polytope",
                       "support vector outside the polytope, e.g. " +
                           vector_brief(snp.missing_from_polytope.front())});
    if (!snp.polytope_in_support)
        out.push_back({item, "polytope_in_support",
                       "lattice point with zero coefficient, e.g. " +
                           vector_brief(snp.missing_from_support.front())});
    if (!snp.coefficients_positive)
        out.push_back({item, "coefficients_positive",
                       "nonpositive coefficient at " +
                           vector_brief(snp.nonpositive_terms.front())});
}

std::string set_difference_example(const std::set<WeightVector>& a,
                                   const std::set<WeightVector>& b) {
    for (const WeightVector& v : a)
        if (!b.count(v)) return "only in the first set: " + vector_brief(v);
    for (const WeightVector& v : b)
        if (!a.count(v)) return "only in the second set: " + vector_brief(v);
    return "sets agree";
}

}  // namespace

SnpReport verify_snp(const Polynomial& f, const GeneralizedPermutahedron& p,
                     std::uint64_t point_cap) {
    if (f.num_vars() != p.n())
        throw std::invalid_argument("polynomial and polytope dimensions disagree");
    SnpReport report;
    std::set<WeightVector> supp = f.support();
    std::set<WeightVector> pts = lattice_points(p, point_cap).points;

    for (const WeightVector& v : supp)
        if (!pts.count(v)) report.missing_from_polytope.push_back(v);
    for (const WeightVector& v : pts)
        if (!supp.count(v)) report.missing_from_support.push_back(v);
    for (const auto& [exp, coeff] : f.terms())
        if (coeff <= 0) report.nonpositive_terms.push_back(exp);

    report.support_in_polytope = report.missing_from_polytope.empty();
    report.polytope_in_support = report.missing_from_support.empty();
    report.coefficients_positive = report.nonpositive_terms.empty();
    return report;
}

namespace {

// Triple equality behind both main sweeps: polynomial support,
// Schubitope lattice points, dual character support.
std::vector<SweepFailure> check_transform_triple(const std::string& item,
                                                 const Polynomial& f, const Diagram& d,
                                                 const SweepOptions& opts) {
    std::vector<SweepFailure> out;
    GeneralizedPermutahedron p = schubitope(d);
    SnpReport snp = verify_snp(f, p, opts.point_cap);
    append_snp_failures(item, snp, out);

    std::set<WeightVector> xi = chi_support(d, opts.product_cap);
    std::set<WeightVector> supp = f.support();
    if (xi != supp)
        out.push_back({item, "chi_support_equals_support",
                       set_difference_example(supp, xi)});
    return out;
}

}  // namespace

SweepReport sweep_schubert(int n, const SweepOptions& opts) {
    std::vector<Permutation> items = all_permutations(n);
    return run_sweep("schubert", items, opts, [&](const Permutation& w) {
        return check_transform_triple(w.to_string(), schubert_polynomial(w),
                                      rothe_diagram(w), opts);
    });
}

SweepReport sweep_key(int max_part, int max_len, const SweepOptions& opts) {
    std::vector<Composition> items = all_compositions(max_part, max_len);
    return run_sweep("key", items, opts, [&](const Composition& alpha) {
        return check_transform_triple(alpha.to_string(), key_polynomial(alpha),
                                      skyline_diagram(alpha), opts);
    });
}

SweepReport sweep_theta_rank(const std::vector<Diagram>& corpus, const SweepOptions& opts) {
    return run_sweep("theta", corpus, opts, [&](const Diagram& d) {
        std::vector<SweepFailure> out;
        for (int j = 1; j <= d.n(); ++j) {
            SchubertMatroid m = SchubertMatroid::from_column(d, j);
            for (Subset i_set = 0; i_set <= full_set(d.n()); ++i_set) {
                int via_theta = theta_column(d, j, i_set);
                int via_bases = rank_bruteforce(m, i_set, opts.basis_cap);
                if (via_theta != via_bases) {
                    std::ostringstream detail;
                    detail << "column " << j << ", I="
                           << vector_brief(subset_elements(i_set)) << ": theta="
                           << via_theta << " rank=" << via_bases;
                    out.push_back({diagram_brief(d), "theta_equals_rank", detail.str()});
                    if (opts.fail_fast) return out;
                }
                if (i_set == full_set(d.n())) break;
            }
        }
        return out;
    });
}

std::vector<Diagram> random_diagram_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Diagram> out;
    for (int n = 3; n <= 6; ++n) {
        for (int k = 0; k < 100; ++k) {
            std::vector<Subset> columns(n, 0);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (rng() & 1u) columns[j - 1] |= (1u << (i - 1));
            out.push_back(Diagram(n, std::move(columns)));
        }
    }
    return out;
}

std::vector<Diagram> theta_default_corpus(std::uint64_t seed) {
    std::vector<Diagram> out;
    for (int n = 1; n <= 5; ++n) {
        for (Subset col = 0; col <= full_set(n); ++col) {
            std::vector<Subset> columns(n, 0);
            columns[0] = col;
            out.push_back(Diagram(n, std::move(columns)));
        }
    }
    for (const Permutation& w : all_permutations(5)) out.push_back(rothe_diagram(w));
    for (const Composition& alpha : all_compositions(3, 3))
        out.push_back(skyline_diagram(alpha));
    std::vector<Diagram> random = random_diagram_corpus(seed);
    out.insert(out.end(), random.begin(), random.end());
    return out;
}

}  // namespace schub
