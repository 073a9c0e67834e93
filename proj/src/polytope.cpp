#include "schub/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace schub {

GeneralizedPermutahedron::GeneralizedPermutahedron(int n, std::vector<long long> z)
    : n_(n), z_(std::move(z)) {
    if (n < 0 || n > kMaxGroundSet)
        throw CapExceeded("dimension must be between 0 and " + std::to_string(kMaxGroundSet));
    if (z_.size() != (std::size_t{1} << n))
        throw MalformedInput("need one z value per nonempty subset");
    z_[0] = 0;
}

bool GeneralizedPermutahedron::is_monotone() const {
    Subset full = full_set(n_);
    for (Subset s = 0; s <= full && n_ > 0; ++s) {
        for (int i = 0; i < n_; ++i) {
            Subset si = s | (1u << i);
            if (si != s && z_[s] > z_[si]) return false;
        }
        if (s == full) break;
    }
    return true;
}

bool GeneralizedPermutahedron::is_submodular() const {
    // Local characterization: z(S+i) + z(S+j) >= z(S+i+j) + z(S) for
    // all S and i != j outside S.
    Subset full = full_set(n_);
    for (Subset s = 0; n_ > 0; ++s) {
        for (int i = 0; i < n_; ++i) {
            if ((s >> i) & 1u) continue;
            for (int j = i + 1; j < n_; ++j) {
                if ((s >> j) & 1u) continue;
                Subset si = s | (1u << i);
                Subset sj = s | (1u << j);
                Subset sij = si | sj;
                if (z_[si] + z_[sj] < z_[sij] + z_[s]) return false;
            }
        }
        if (s == full) break;
    }
    return true;
}

namespace {

void check_rank_like(const GeneralizedPermutahedron& p, const char* what) {
    if (!p.is_monotone())
        throw std::logic_error(std::string(what) + ": z is not monotone");
    if (!p.is_submodular())
        throw std::logic_error(std::string(what) + ": z is not submodular");
}

}  // namespace

GeneralizedPermutahedron matroid_polytope(const SchubertMatroid& m) {
    int n = m.ground_size();
    std::vector<long long> z(std::size_t{1} << n, 0);
    Subset full = full_set(n);
    for (Subset s = 1; s <= full && n > 0; ++s) z[s] = theta_rank(m, s);

    // Spot-check the fast oracle against the definitional one.
    for (Subset s : {Subset(0), full, Subset(full & 0x5u), Subset(full & 0x6u)}) {
        if (s > full) continue;
        if (static_cast<long long>(rank_bruteforce(m, s)) != (s ? z[s] : 0))
            throw std::logic_error("matroid polytope: theta rank disagrees with brute force");
    }

    GeneralizedPermutahedron p(n, std::move(z));
    check_rank_like(p, "matroid polytope");
    return p;
}

LatticePointSet vertices_from_bases(const SchubertMatroid& m, std::uint64_t cap) {
    LatticePointSet out;
    out.n = m.ground_size();
    for (Subset b : m.bases(cap)) {
        WeightVector v(out.n, 0);
        for (int i = 0; i < out.n; ++i)
            if ((b >> i) & 1u) v[i] = 1;
        out.points.insert(std::move(v));
    }
    return out;
}

GeneralizedPermutahedron minkowski_sum(const GeneralizedPermutahedron& p,
                                       const GeneralizedPermutahedron& q) {
    if (p.n() != q.n()) throw std::invalid_argument("dimension mismatch");
    std::vector<long long> z(std::size_t{1} << p.n(), 0);
    for (Subset s = 1; s < z.size(); ++s) z[s] = p.z(s) + q.z(s);
    return GeneralizedPermutahedron(p.n(), std::move(z));
}

GeneralizedPermutahedron schubitope(const Diagram& d) {
    int n = d.n();
    std::vector<long long> z(std::size_t{1} << n, 0);
    Subset full = full_set(n);
    for (Subset s = 1; s <= full && n > 0; ++s) z[s] = theta(d, s);
    if (n > 0 && z[full] != d.box_count())
        throw std::logic_error("schubitope: theta of the full set must equal the box count");
    GeneralizedPermutahedron p(n, std::move(z));
    check_rank_like(p, "schubitope");
    return p;
}

namespace {

// Extends t_1..t_k one coordinate at a time.  partial[I] carries
// sum_{i in I} t_i for I inside the settled prefix, so every bound
// whose maximum element is the new coordinate is enforced as a cap on
// the value being placed.
void enumerate_points(const GeneralizedPermutahedron& p, int k, long long remaining,
                      std::vector<long long>& partial, WeightVector& t,
                      std::uint64_t cap, LatticePointSet& out) {
    int n = p.n();
    if (k == n) {
        if (remaining == 0) {
            if (out.points.size() >= cap)
                throw CapExceeded("lattice point count exceeds cap " + std::to_string(cap));
            out.points.insert(t);
        }
        return;
    }
    Subset prefix_full = full_set(k);
    Subset bit = 1u << k;
    long long ub = remaining;
    for (Subset s = 0; s <= prefix_full; ++s) {
        ub = std::min(ub, p.z(s | bit) - partial[s]);
        if (s == prefix_full) break;
    }
    for (long long v = 0; v <= ub; ++v) {
        t[k] = v;
        for (Subset s = 0; s <= prefix_full; ++s) {
            partial[s | bit] = partial[s] + v;
            if (s == prefix_full) break;
        }
        enumerate_points(p, k + 1, remaining - v, partial, t, cap, out);
    }
    t[k] = 0;
}

}  // namespace

LatticePointSet lattice_points(const GeneralizedPermutahedron& p, std::uint64_t cap) {
    if (p.total() < 0)
        throw MalformedInput("lattice enumeration needs z of the full set >= 0");
    LatticePointSet out;
    out.n = p.n();
    if (p.n() == 0) {
        out.points.insert(WeightVector{});
        return out;
    }
    std::vector<long long> partial(std::size_t{1} << p.n(), 0);
    WeightVector t(p.n(), 0);
    enumerate_points(p, 0, p.total(), partial, t, cap, out);
    return out;
}

LatticePointSet minkowski_lattice_points(const std::vector<SchubertMatroid>& ms,
                                         std::uint64_t cap) {
    int n = ms.empty() ? 0 : ms.front().ground_size();
    for (const SchubertMatroid& m : ms)
        if (m.ground_size() != n) throw std::invalid_argument("ground set size mismatch");

    std::vector<std::vector<Subset>> all_bases;
    all_bases.reserve(ms.size());
    std::uint64_t product = 1;
    for (const SchubertMatroid& m : ms) {
        all_bases.push_back(m.bases());
        std::uint64_t count = all_bases.back().size();
        if (count != 0 && product > cap / count)
            throw CapExceeded("basis tuple count exceeds cap " + std::to_string(cap));
        product *= count;
    }

    LatticePointSet out;
    out.n = n;
    WeightVector sum(n, 0);
    auto walk = [&](auto&& self, std::size_t j) -> void {
        if (j == all_bases.size()) {
            out.points.insert(sum);
            return;
        }
        for (Subset b : all_bases[j]) {
            for (int i = 0; i < n; ++i)
                if ((b >> i) & 1u) ++sum[i];
            self(self, j + 1);
            for (int i = 0; i < n; ++i)
                if ((b >> i) & 1u) --sum[i];
        }
    };
    walk(walk, 0);
    return out;
}

}  // namespace schub
