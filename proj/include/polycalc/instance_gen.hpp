#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "polycalc/functions.hpp"

namespace polycalc {

// Deterministic source of small rational data.  mt19937_64 output is fixed
// by the standard and the reductions below avoid std distributions (whose
// algorithms are implementation-defined), so a seed reproduces the same
// instances on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }

    Rat rat(long bound, long den_bound) {
        long num = range(-bound, bound);
        long den = range(1, den_bound);
        return make_rat(num, den);
    }

    Vec vec(std::size_t n, long bound, long den_bound) {
        Vec v(n);
        for (auto& x : v) x = rat(bound, den_bound);
        return v;
    }

    Vec nonzero_vec(std::size_t n, long bound, long den_bound) {
        for (;;) {
            Vec v = vec(n, bound, den_bound);
            if (!is_zero(v)) return v;
        }
    }

private:
    std::mt19937_64 eng_;
};

// Seed for instance `index` of a named stream, mixed so per-instance
// regeneration never depends on loop order.
std::uint64_t instance_seed(std::uint64_t seed, const std::string& stream, int index);

struct GenOptions {
    long bound = 4;
    long den_bound = 2;
    bool allow_rays = true;
    bool allow_lines = true;
    const Vec* anchor = nullptr; // always included among the points
};

// Nonempty by construction: at least one point.
GenSet random_genset(Rng& rng, int dim, const GenOptions& opt = {});

// H-form of a random nonempty polyhedron; the generating set is available
// through `gens_out`.
HPoly random_polyhedron(Rng& rng, int dim, const GenOptions& opt = {}, GenSet* gens_out = nullptr);

// A point of the (nonempty) polyhedron: a vertex, a midpoint, a point along
// an unbounded edge or a relative interior point.
Vec pick_point(Rng& rng, const HPoly& p);

// Proper polyhedral function as a max of affine pieces over a domain;
// `anchor` (when given) is guaranteed to lie in the domain.
PolyFunc random_function(Rng& rng, int nx, bool restrict_dom, const Vec* anchor,
                         bool bounded_below = false, long bound = 3);

// Univariate function whose epigraph recedes (or, for want_monotone =
// false, provably does not recede) in the direction of decreasing argument.
PolyFunc random_univariate(Rng& rng, bool want_monotone, const Rat& dom_upper_at_least);

PolyMap random_graph_mapping(Rng& rng, int nx, int ny, const GenOptions& opt = {});

} // namespace polycalc
