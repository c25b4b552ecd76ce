#pragma once

// Lattice-point semigroups {(k, u) : u in dual(sigma), k >= -min<u, Delta>}
// of the local toric models, explored by box enumeration.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/arith.hpp"
#include "toroidal/cone.hpp"
#include "toroidal/divisor.hpp"
#include "toroidal/polyhedron.hpp"

namespace toroidal {

/// Calls fn on every lattice point of [-bound, bound]^rank, in lexicographic order.
inline void for_each_box_point(std::size_t rank, std::size_t bound, const std::function<void(const LatticeVector&)>& fn) {
    const long b = static_cast<long>(bound);
    std::vector<long> idx(rank, -b);
    LatticeVector v(rank);
    while (true) {
        for (std::size_t i = 0; i < rank; ++i) v[i] = idx[i];
        fn(v);
        std::size_t i = rank;
        while (i > 0) {
            --i;
            if (idx[i] < b) {
                ++idx[i];
                break;
            }
            idx[i] = -b;
            if (i == 0) return;
        }
        if (rank == 0) return;
    }
}

/// The monomial semigroup of the toric model of one coefficient, living in Z x M.
class MonomialSemigroup {
public:
    explicit MonomialSemigroup(TailedPolyhedron coefficient) : coefficient_(std::move(coefficient)) {}

    std::size_t rank() const { return coefficient_.rank() + 1; }
    const TailedPolyhedron& coefficient() const { return coefficient_; }

    /// (k, u) with u in the dual of the tail and k >= -min<u, Delta>.
    bool contains(const LatticeVector& v) const {
        if (v.size() != rank())
            throw StructuralError("point of length " + std::to_string(v.size()) + " for a semigroup of rank " +
                                  std::to_string(rank()));
        LatticeVector u(v.begin() + 1, v.end());
        for (const auto& w : coefficient_.rays())
            if (dot(u, w) < 0) return false;
        SupportValue m = support_min(u, coefficient_);
        return Rat(v[0]) >= -m.value();
    }

    /// All nonzero members in [-bound, bound]^rank, lexicographically sorted.
    std::vector<LatticeVector> sample(std::size_t bound) const {
        std::vector<LatticeVector> out;
        for_each_box_point(rank(), bound, [&](const LatticeVector& v) {
            if (!is_zero(v) && contains(v)) out.push_back(v);
        });
        return out;
    }

private:
    TailedPolyhedron coefficient_;
};

inline bool semigroup_member(const MonomialSemigroup& s, const LatticeVector& v) { return s.contains(v); }

struct HilbertBasis {
    std::vector<LatticeVector> elements;  ///< sorted lexicographically
    std::size_t box = 0;
    bool complete = true;
    std::optional<LatticeVector> witness;  ///< a point the basis fails to account for
    std::string diagnostic;
};

namespace detail {

/// Hermite normal form rows of the lattice spanned by `vectors`: pivots
/// strictly increasing and positive, entries above each pivot reduced into [0, pivot).
inline std::vector<LatticeVector> hermite_basis(std::vector<LatticeVector> vectors, std::size_t rank) {
    std::vector<LatticeVector> rows;
    std::size_t col = 0;
    while (col < rank && !vectors.empty()) {
        // Euclid on column `col` across all remaining vectors.
        while (true) {
            std::size_t best = vectors.size();
            for (std::size_t i = 0; i < vectors.size(); ++i) {
                if (vectors[i][col] == 0) continue;
                if (best == vectors.size() ||
                    boost::multiprecision::abs(vectors[i][col]) < boost::multiprecision::abs(vectors[best][col]))
                    best = i;
            }
            if (best == vectors.size()) break;
            std::swap(vectors[0], vectors[best]);
            if (vectors[0][col] < 0) vectors[0] = negate(std::move(vectors[0]));
            bool done = true;
            for (std::size_t i = 1; i < vectors.size(); ++i) {
                if (vectors[i][col] == 0) continue;
                Integer q = vectors[i][col] / vectors[0][col];
                for (std::size_t k = 0; k < rank; ++k) vectors[i][k] -= q * vectors[0][k];
                if (vectors[i][col] != 0) done = false;
            }
            if (done) {
                rows.push_back(vectors[0]);
                vectors.erase(vectors.begin());
                break;
            }
        }
        std::erase_if(vectors, [](const LatticeVector& v) { return is_zero(v); });
        ++col;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t p = 0;
        while (rows[r][p] == 0) ++p;
        for (std::size_t above = 0; above < r; ++above) {
            Integer q = floor(Rat(rows[above][p], rows[r][p]));
            if (q == 0) continue;
            for (std::size_t k = 0; k < rank; ++k) rows[above][k] -= q * rows[r][k];
        }
    }
    return rows;
}

/// Canonical representative of v modulo the lattice with the given Hermite rows.
inline LatticeVector reduce_modulo(LatticeVector v, const std::vector<LatticeVector>& hermite) {
    for (const auto& row : hermite) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        Integer q = floor(Rat(v[p], row[p]));
        if (q == 0) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * row[k];
    }
    return v;
}

}  // namespace detail

// Box-limited Hilbert basis. Units (the lattice points of the lineality
// space) contribute a +/- Hermite basis; every other element is represented
// modulo units by its Hermite-reduced form. A grading g that is positive
// exactly off the lineality space orders the irreducibility search.
inline HilbertBasis hilbert_basis(const MonomialSemigroup& s, std::size_t box) {
    const std::size_t rank = s.rank();
    if (rank > 4) throw DomainError("Hilbert bases are only supported up to rank 4");

    HilbertBasis out;
    out.box = box;

    Cone real_cone = homogenize_dual(s.coefficient());
    LatticeVector grading = zero_lattice(rank);
    for (const auto& d : real_cone.inequalities()) grading = add(grading, d);
    auto grade = [&](const LatticeVector& v) { return dot(grading, v); };

    auto points = s.sample(box);
    std::vector<LatticeVector> units;
    std::vector<LatticeVector> others;
    for (const auto& p : points) (grade(p) == 0 ? units : others).push_back(p);

    auto hermite = detail::hermite_basis(units, rank);
    std::vector<LatticeVector> reps;
    for (const auto& p : others) reps.push_back(detail::reduce_modulo(p, hermite));
    sort_unique(reps);
    std::stable_sort(reps.begin(), reps.end(),
                     [&](const LatticeVector& a, const LatticeVector& b) { return grade(a) < grade(b); });

    std::vector<LatticeVector> irreducible;
    for (const auto& x : reps) {
        Integer gx = grade(x);
        bool reducible = false;
        for (const auto& y : reps) {
            if (grade(y) >= gx) break;
            if (s.contains(subtract(x, y))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irreducible.push_back(x);
    }

    out.elements = irreducible;
    for (const auto& h : hermite) {
        out.elements.push_back(h);
        out.elements.push_back(negate(h));
    }
    sort_unique(out.elements);

    // Every unit in the box must lie in the Hermite lattice.
    for (const auto& u : units) {
        if (!is_zero(detail::reduce_modulo(u, hermite))) {
            out.complete = false;
            out.witness = u;
            out.diagnostic = "unit not generated by the unit basis";
            return out;
        }
    }

    // Every non-unit in the box must be a sum of irreducibles modulo units.
    std::map<LatticeVector, bool> memo;
    std::function<bool(const LatticeVector&)> decomposes = [&](const LatticeVector& x) -> bool {
        if (grade(x) == 0) return is_zero(detail::reduce_modulo(x, hermite));
        auto key = detail::reduce_modulo(x, hermite);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& b : irreducible) {
            auto rest = subtract(key, b);
            if (grade(rest) < 0 || !s.contains(rest)) continue;
            if (decomposes(rest)) {
                ok = true;
                break;
            }
        }
        memo[key] = ok;
        return ok;
    };
    for (const auto& x : reps) {
        if (!decomposes(x)) {
            out.complete = false;
            out.witness = x;
            out.diagnostic = "box point does not decompose over the basis";
            return out;
        }
    }

    // The basis must also span the whole real cone, otherwise the box was too small to see a ray.
    Cone spanned = Cone::from_generators(rank, out.elements);
    for (const auto& g : real_cone.generators()) {
        if (!spanned.contains(g)) {
            out.complete = false;
            out.witness = g;
            out.diagnostic = "cone generator outside the span of the basis; enlarge the box";
            return out;
        }
    }
    return out;
}

/// The s-exponent -floor(min<u, Delta_P>) of the generator of S_u over the local ring.
inline Integer graded_piece_exponent(const PolyhedralDivisor& d, const std::string& label, const LatticeVector& u) {
    d.require_weight(u);
    return -floor(support_min(u, d.coefficient(label)).value());
}

/// Dual of the cone spanned by the semigroup's points in [-box, box]^rank.
/// Uses only membership tests; never the homogenization.
inline Cone cone_from_semigroup_sample(const MonomialSemigroup& s, std::size_t box) {
    return Cone::from_generators(s.rank(), s.sample(box)).dual();
}

struct StabilizedCone {
    std::optional<Cone> cone;  ///< empty when the cap was hit first
    std::size_t box = 0;       ///< smallest box agreeing with its successor
};

/// Smallest box holding the canonical generators of the semigroup's real cone.
/// Comparing b with b+1 alone is not enough: a face whose primitive ray is
/// long carries no lattice points for several boxes, and the sample plateaus.
/// This only sizes the search; the cone itself still comes from enumeration.
inline std::size_t generating_box(const MonomialSemigroup& s) {
    Integer m = 1;
    Cone real_cone = homogenize_dual(s.coefficient());
    for (const auto& g : real_cone.generators())
        for (const auto& x : g) m = std::max(m, Integer(boost::multiprecision::abs(x)));
    return static_cast<std::size_t>(m);
}

/// Grows the box from generating_box(s) until boxes b and b+1 give equal
/// cones, or b+1 exceeds cap.
inline StabilizedCone stabilized_semigroup_cone(const MonomialSemigroup& s, std::size_t cap = 32) {
    StabilizedCone out;
    std::size_t start = generating_box(s);
    if (start + 1 > cap) {
        out.box = cap;
        return out;
    }
    Cone previous = cone_from_semigroup_sample(s, start);
    for (std::size_t b = start; b + 1 <= cap; ++b) {
        Cone next = cone_from_semigroup_sample(s, b + 1);
        if (cone_equal(previous, next)) {
            out.cone = std::move(next);
            out.box = b;
            return out;
        }
        previous = std::move(next);
    }
    out.box = cap;
    return out;
}

}  // namespace toroidal
