#pragma once

// Seeded generators of small random cones, polyhedra and divisors.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "toroidal/cone.hpp"
#include "toroidal/divisor.hpp"
#include "toroidal/polyhedron.hpp"

namespace toroidal::fuzz {

using Rng = std::mt19937_64;

/// Uniform in [lo, hi]. Plain modulo keeps streams identical across standard libraries.
inline long uniform(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline LatticeVector lattice_vector(Rng& rng, std::size_t rank, long bound) {
    LatticeVector v(rank);
    for (auto& x : v) x = uniform(rng, -bound, bound);
    return v;
}

/// Entries p/q with q in [1, max_den] and |p/q| <= bound.
inline RatVector rat_vector(Rng& rng, std::size_t rank, long bound, long max_den) {
    RatVector v(rank);
    for (auto& x : v) {
        long q = uniform(rng, 1, max_den);
        x = Rat(uniform(rng, -bound * q, bound * q), q);
    }
    return v;
}

/// pos of up to max_gens random generators in [-bound, bound]^rank (possibly not pointed).
inline Cone cone(Rng& rng, std::size_t rank, long bound, std::size_t max_gens) {
    std::vector<LatticeVector> gens;
    auto count = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_gens)));
    for (std::size_t i = 0; i < count; ++i) gens.push_back(lattice_vector(rng, rank, bound));
    return Cone::from_generators(rank, gens);
}

inline Cone pointed_cone(Rng& rng, std::size_t rank, long bound, std::size_t max_gens) {
    while (true) {
        Cone c = cone(rng, rank, bound, max_gens);
        if (c.is_pointed()) return c;
    }
}

inline TailedPolyhedron polyhedron(Rng& rng, const Cone& tail, std::size_t max_vertices, long bound, long max_den) {
    auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_vertices)));
    std::vector<RatVector> vertices;
    for (std::size_t i = 0; i < count; ++i) vertices.push_back(rat_vector(rng, tail.rank(), bound, max_den));
    return TailedPolyhedron(tail.rank(), std::move(vertices), tail.generators());
}

struct DivisorShape {
    std::size_t max_rank = 2;
    std::size_t max_points = 3;
    std::size_t max_vertices = 3;
    long bound = 2;
    long max_den = 2;
    CurveKind kind = CurveKind::AffineLine;
};

/// A divisor with 1..max_points non-trivial coefficients at points "0", "1", ...
inline PolyhedralDivisor divisor(Rng& rng, const DivisorShape& shape = {}) {
    auto rank = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_rank)));
    Cone tail = uniform(rng, 0, 2) == 0 ? Cone::zero(rank) : pointed_cone(rng, rank, shape.bound, rank);
    auto npoints = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_points)));
    TailedPolyhedron trivial = TailedPolyhedron::of_cone(tail);

    std::vector<MarkedPoint> points;
    std::map<std::string, TailedPolyhedron> coeffs;
    for (std::size_t i = 0; i < npoints; ++i) {
        std::string label = std::to_string(i);
        MarkedPoint mp{label, std::nullopt};
        if (shape.kind == CurveKind::AffineLine || shape.kind == CurveKind::ProjectiveLine)
            mp.coordinate = Rat(static_cast<long>(i));
        points.push_back(mp);
        while (true) {
            auto p = polyhedron(rng, tail, shape.max_vertices, shape.bound, shape.max_den);
            if (p == trivial) continue;
            coeffs.emplace(label, std::move(p));
            break;
        }
    }
    return PolyhedralDivisor(BaseCurve(shape.kind, std::move(points)), tail, std::move(coeffs));
}

}  // namespace toroidal::fuzz
