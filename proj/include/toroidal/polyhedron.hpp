#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/arith.hpp"
#include "toroidal/cone.hpp"

namespace toroidal {

/// min <u, P> over a polyhedron: either a rational or -infinity.
class SupportValue {
public:
    SupportValue(Rat value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    static SupportValue minus_infinity() { return SupportValue(); }

    bool is_minus_infinity() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    const Rat& value() const {
        if (!value_) throw DomainError("support value is -infinity");
        return *value_;
    }

    friend SupportValue operator+(const SupportValue& a, const SupportValue& b) {
        if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
        return SupportValue(*a.value_ + *b.value_);
    }
    friend bool operator==(const SupportValue& a, const SupportValue& b) { return a.value_ == b.value_; }

    std::string str() const { return value_ ? to_string(*value_) : "-inf"; }

private:
    SupportValue() = default;
    std::optional<Rat> value_;
};

/// conv(vertices) + pos(rays) with a pointed tail cone.
///
/// Stored in V-representation only. Construction normalizes: vertices become
/// exactly the extreme points (sorted), rays the primitive extreme rays of the tail.
class TailedPolyhedron {
public:
    TailedPolyhedron(std::size_t rank, std::vector<RatVector> vertices, std::vector<LatticeVector> rays = {})
        : rank_(rank) {
        if (rank == 0) throw StructuralError("polyhedron rank must be positive");
        if (vertices.empty()) throw StructuralError("polyhedron needs at least one vertex");
        for (const auto& v : vertices)
            if (v.size() != rank)
                throw StructuralError("vertex of length " + std::to_string(v.size()) + " in a polyhedron of rank " +
                                      std::to_string(rank));
        detail::check_rank(rays, rank, "ray");

        // Extreme rays of the homogenization are (q, q*v) for vertices v and (0, r) for tail rays.
        Cone lifted = Cone::from_generators(rank + 1, lift(vertices, rays));
        if (!lifted.is_pointed()) throw StructuralError("tail cone of a polyhedron must be pointed");
        for (const auto& g : lifted.generators()) {
            if (g[0] == 0) {
                rays_.emplace_back(g.begin() + 1, g.end());
            } else {
                RatVector v;
                v.reserve(rank);
                for (std::size_t i = 1; i <= rank; ++i) v.emplace_back(g[i], g[0]);
                vertices_.push_back(std::move(v));
            }
        }
        sort_unique(vertices_);
        sort_unique(rays_);
    }

    /// The single point `at` plus the cone `tail`.
    static TailedPolyhedron translate(const RatVector& at, const Cone& tail) {
        return TailedPolyhedron(tail.rank(), {at}, tail.generators());
    }

    /// The tail cone itself, i.e. the neutral element for Minkowski addition.
    static TailedPolyhedron of_cone(const Cone& tail) {
        return translate(RatVector(tail.rank(), Rat(0)), tail);
    }

    std::size_t rank() const { return rank_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    bool is_compact() const { return rays_.empty(); }

    Cone tail_cone() const { return Cone::from_generators(rank_, rays_); }

    /// Canonical forms make equality structural.
    friend bool operator==(const TailedPolyhedron& a, const TailedPolyhedron& b) {
        return a.rank_ == b.rank_ && a.vertices_ == b.vertices_ && a.rays_ == b.rays_;
    }

    /// Generators of pos{(1, P), (0, tail)}; each vertex scaled to a primitive lattice vector.
    static std::vector<LatticeVector> lift(const std::vector<RatVector>& vertices,
                                           const std::vector<LatticeVector>& rays) {
        std::vector<LatticeVector> gens;
        gens.reserve(vertices.size() + rays.size());
        for (const auto& v : vertices) gens.push_back(clear_denominators(prepend(Rat(1), v)));
        for (const auto& r : rays) gens.push_back(prepend(Integer(0), r));
        return gens;
    }

private:
    std::size_t rank_;
    std::vector<RatVector> vertices_;
    std::vector<LatticeVector> rays_;
};

inline Cone tail_cone(const TailedPolyhedron& p) { return p.tail_cone(); }

/// Pairwise vertex sums; redundant points are dropped by the constructor.
inline TailedPolyhedron minkowski_sum(const TailedPolyhedron& a, const TailedPolyhedron& b) {
    if (a.rank() != b.rank())
        throw StructuralError("Minkowski sum of polyhedra of ranks " + std::to_string(a.rank()) + " and " +
                              std::to_string(b.rank()));
    std::vector<RatVector> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& v : a.vertices())
        for (const auto& w : b.vertices()) sums.push_back(add(v, w));
    auto rays = a.rays();
    rays.insert(rays.end(), b.rays().begin(), b.rays().end());
    return TailedPolyhedron(a.rank(), std::move(sums), std::move(rays));
}

inline SupportValue support_min(const LatticeVector& u, const TailedPolyhedron& p) {
    if (u.size() != p.rank())
        throw StructuralError("functional of length " + std::to_string(u.size()) + " on a polyhedron of rank " +
                              std::to_string(p.rank()));
    for (const auto& r : p.rays())
        if (dot(u, r) < 0) return SupportValue::minus_infinity();
    Rat best = dot(u, p.vertices().front());
    for (const auto& v : p.vertices()) best = std::min(best, dot(u, v));
    return best;
}

/// pos{(1, P), (0, tail)} in Z x N.
inline Cone homogenize(const TailedPolyhedron& p) {
    return Cone::from_generators(p.rank() + 1, TailedPolyhedron::lift(p.vertices(), p.rays()));
}

/// {(r, u) : <u, w> >= 0 for tail rays w, r + <u, v> >= 0 for vertices v}.
inline Cone homogenize_dual(const TailedPolyhedron& p) {
    std::vector<LatticeVector> ineqs;
    for (const auto& w : p.rays()) ineqs.push_back(prepend(Integer(0), w));
    for (const auto& v : p.vertices()) ineqs.push_back(clear_denominators(prepend(Rat(1), v)));
    return Cone::from_inequalities(p.rank() + 1, std::move(ineqs));
}

/// The lattice point v when p = v + tail, otherwise nothing.
inline std::optional<LatticeVector> is_lattice_translate_of_tail(const TailedPolyhedron& p) {
    if (p.vertices().size() != 1) return std::nullopt;
    LatticeVector v;
    for (const auto& x : p.vertices().front()) {
        if (!is_integral(x)) return std::nullopt;
        v.push_back(numerator(x));
    }
    return v;
}

/// Exact membership test via the homogenized cone.
inline bool contains(const TailedPolyhedron& p, const RatVector& x) {
    return homogenize(p).contains(prepend(Rat(1), x));
}

}  // namespace toroidal
