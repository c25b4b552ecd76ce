#pragma once

// Rational polyhedral cones with both generator and inequality
// representations, kept in a canonical form so that duality is a swap.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/arith.hpp"

namespace toroidal {

namespace detail {

/// Minimal generators of {x : <a,x> >= 0 for all a}: a basis of the lineality
/// space plus the extreme rays of the pointed part.
struct RayDecomposition {
    std::vector<LatticeVector> lineality;
    std::vector<LatticeVector> rays;
};

inline void check_rank(const std::vector<LatticeVector>& vs, std::size_t rank, const char* what) {
    for (const auto& v : vs)
        if (v.size() != rank)
            throw StructuralError(std::string(what) + " of length " + std::to_string(v.size()) +
                                  " in a cone of rank " + std::to_string(rank));
}

// Double description with explicit lineality tracking. Invariant: every
// processed inequality vanishes on every lineality vector, and the current
// cone is span(lineality) + pos(rays) = {x : <a,x> >= 0, a processed}.
inline RayDecomposition double_description(const std::vector<LatticeVector>& inequalities, std::size_t rank) {
    RayDecomposition st;
    for (std::size_t i = 0; i < rank; ++i) {
        LatticeVector e = zero_lattice(rank);
        e[i] = 1;
        st.lineality.push_back(std::move(e));
    }

    std::vector<LatticeVector> processed;
    processed.reserve(inequalities.size());

    for (const auto& a : inequalities) {
        if (is_zero(a)) continue;

        auto pivot = std::find_if(st.lineality.begin(), st.lineality.end(),
                                  [&](const LatticeVector& l) { return dot(a, l) != 0; });
        if (pivot != st.lineality.end()) {
            LatticeVector l0 = *pivot;
            st.lineality.erase(pivot);
            Integer a0 = dot(a, l0);
            if (a0 < 0) {
                l0 = negate(std::move(l0));
                a0 = -a0;
            }
            auto project = [&](LatticeVector& v) {
                Integer av = dot(a, v);
                if (av == 0) return;
                for (std::size_t i = 0; i < rank; ++i) v[i] = a0 * v[i] - av * l0[i];
                v = primitive(std::move(v));
            };
            for (auto& l : st.lineality) project(l);
            for (auto& r : st.rays) project(r);
            st.rays.push_back(std::move(l0));
            processed.push_back(a);
            continue;
        }

        std::vector<LatticeVector> pos, neg, next;
        std::vector<Integer> pos_val, neg_val;
        for (auto& r : st.rays) {
            Integer v = dot(a, r);
            if (v > 0) {
                pos.push_back(r);
                pos_val.push_back(v);
            } else if (v < 0) {
                neg.push_back(r);
                neg_val.push_back(-v);
            } else {
                next.push_back(r);
            }
        }
        if (!neg.empty()) {
            const std::size_t face_rank = rank - st.lineality.size() - 2;
            for (std::size_t i = 0; i < pos.size(); ++i) {
                for (std::size_t j = 0; j < neg.size(); ++j) {
                    // Adjacent iff the inequalities tight at both cut out a 2-face.
                    std::vector<LatticeVector> tight;
                    for (const auto& b : processed)
                        if (dot(b, pos[i]) == 0 && dot(b, neg[j]) == 0) tight.push_back(b);
                    if (tight.size() < face_rank) continue;
                    if (span_dimension(tight, rank, face_rank) < face_rank) continue;
                    LatticeVector c(rank);
                    for (std::size_t k = 0; k < rank; ++k) c[k] = pos_val[i] * neg[j][k] + neg_val[j] * pos[i][k];
                    next.push_back(primitive(std::move(c)));
                }
            }
            for (auto& p : pos) next.push_back(std::move(p));
            sort_unique(next);
            st.rays = std::move(next);
        }
        processed.push_back(a);
    }
    return st;
}

// Canonical form: the lineality basis is the primitive integer scaling of
// its reduced row echelon form; each ray is reduced so that it vanishes on
// the lineality pivot columns, then made primitive.
inline RayDecomposition canonicalize(RayDecomposition d, std::size_t rank) {
    RayDecomposition out;
    auto rref = reduced_row_echelon(d.lineality, rank);
    for (const auto& row : rref.rows) out.lineality.push_back(clear_denominators(row));
    for (const auto& r : d.rays) {
        RatVector v = to_rat(r);
        for (std::size_t k = 0; k < rref.rows.size(); ++k) {
            Rat c = v[rref.pivots[k]];
            if (c == 0) continue;
            for (std::size_t i = 0; i < rank; ++i) v[i] -= c * rref.rows[k][i];
        }
        out.rays.push_back(clear_denominators(v));
    }
    sort_unique(out.lineality);
    sort_unique(out.rays);
    return out;
}

inline std::vector<LatticeVector> generating_set(const RayDecomposition& d) {
    std::vector<LatticeVector> gens = d.rays;
    for (const auto& l : d.lineality) {
        gens.push_back(l);
        gens.push_back(negate(l));
    }
    sort_unique(gens);
    return gens;
}

inline std::vector<LatticeVector> prepare(std::vector<LatticeVector> vs) {
    std::vector<LatticeVector> out;
    out.reserve(vs.size());
    for (auto& v : vs)
        if (!is_zero(v)) out.push_back(primitive(std::move(v)));
    sort_unique(out);
    return out;
}

}  // namespace detail

/// A rational polyhedral cone in Q^rank.
///
/// `generators` and `inequalities` are both canonical (see detail::canonicalize),
/// so the inequalities of a cone are exactly the generators of its dual.
class Cone {
public:
    static Cone from_generators(std::size_t rank, std::vector<LatticeVector> gens) {
        if (rank == 0) throw StructuralError("cone rank must be positive");
        detail::check_rank(gens, rank, "generator");
        gens = detail::prepare(std::move(gens));
        auto ineq = detail::canonicalize(detail::double_description(gens, rank), rank);
        auto ineq_set = detail::generating_set(ineq);
        auto gen = detail::canonicalize(detail::double_description(ineq_set, rank), rank);
        return Cone(rank, detail::generating_set(gen), std::move(ineq_set), gen.lineality.size());
    }

    /// {x : <a,x> >= 0 for every a in ineqs}.
    static Cone from_inequalities(std::size_t rank, std::vector<LatticeVector> ineqs) {
        if (rank == 0) throw StructuralError("cone rank must be positive");
        detail::check_rank(ineqs, rank, "inequality");
        ineqs = detail::prepare(std::move(ineqs));
        auto gen = detail::canonicalize(detail::double_description(ineqs, rank), rank);
        auto gen_set = detail::generating_set(gen);
        auto ineq = detail::canonicalize(detail::double_description(gen_set, rank), rank);
        return Cone(rank, std::move(gen_set), detail::generating_set(ineq), gen.lineality.size());
    }

    static Cone zero(std::size_t rank) { return from_generators(rank, {}); }
    static Cone whole_space(std::size_t rank) { return from_inequalities(rank, {}); }

    std::size_t rank() const { return rank_; }
    const std::vector<LatticeVector>& generators() const { return generators_; }
    const std::vector<LatticeVector>& inequalities() const { return inequalities_; }
    std::size_t lineality_dimension() const { return lineality_dim_; }

    Cone dual() const {
        std::size_t dual_lineality = rank_ - span_dimension(generators_, rank_);
        return Cone(rank_, inequalities_, generators_, dual_lineality);
    }

    bool is_pointed() const { return lineality_dim_ == 0; }
    bool is_full_dimensional() const { return span_dimension(generators_, rank_) == rank_; }
    std::size_t dimension() const { return span_dimension(generators_, rank_); }
    bool is_zero() const { return generators_.empty(); }

    bool contains(const LatticeVector& v) const {
        require_rank(v.size());
        for (const auto& a : inequalities_)
            if (dot(a, v) < 0) return false;
        return true;
    }

    bool contains(const RatVector& v) const {
        require_rank(v.size());
        for (const auto& a : inequalities_)
            if (dot(a, v) < 0) return false;
        return true;
    }

    /// Set containment: every generator of `other` lies in this cone.
    bool contains(const Cone& other) const {
        require_rank(other.rank_);
        for (const auto& g : other.generators_)
            if (!contains(g)) return false;
        return true;
    }

    /// Inequalities vanishing at v define the smallest face containing v.
    bool in_interior(const LatticeVector& v) const {
        require_rank(v.size());
        for (const auto& a : inequalities_)
            if (dot(a, v) <= 0) return false;
        return true;
    }

    friend bool operator==(const Cone& a, const Cone& b) { return cone_equal(a, b); }

    friend bool cone_equal(const Cone& a, const Cone& b) {
        if (a.rank_ != b.rank_)
            throw StructuralError("comparing cones of ranks " + std::to_string(a.rank_) + " and " +
                                  std::to_string(b.rank_));
        return a.contains(b) && b.contains(a);
    }

    friend Cone intersect(const Cone& a, const Cone& b) {
        if (a.rank_ != b.rank_)
            throw StructuralError("intersecting cones of ranks " + std::to_string(a.rank_) + " and " +
                                  std::to_string(b.rank_));
        auto ineqs = a.inequalities_;
        ineqs.insert(ineqs.end(), b.inequalities_.begin(), b.inequalities_.end());
        return from_inequalities(a.rank_, std::move(ineqs));
    }

private:
    Cone(std::size_t rank, std::vector<LatticeVector> gens, std::vector<LatticeVector> ineqs,
         std::size_t lineality_dim)
        : rank_(rank), generators_(std::move(gens)), inequalities_(std::move(ineqs)), lineality_dim_(lineality_dim) {}

    void require_rank(std::size_t r) const {
        if (r != rank_)
            throw StructuralError("vector of length " + std::to_string(r) + " tested against a cone of rank " +
                                  std::to_string(rank_));
    }

    std::size_t rank_;
    std::vector<LatticeVector> generators_;
    std::vector<LatticeVector> inequalities_;
    std::size_t lineality_dim_;
};

inline Cone dual(const Cone& c) { return c.dual(); }
inline Cone from_generators(std::size_t rank, std::vector<LatticeVector> gens) {
    return Cone::from_generators(rank, std::move(gens));
}
inline Cone from_inequalities(std::size_t rank, std::vector<LatticeVector> ineqs) {
    return Cone::from_inequalities(rank, std::move(ineqs));
}
inline bool is_pointed(const Cone& c) { return c.is_pointed(); }
inline bool is_full_dimensional(const Cone& c) { return c.is_full_dimensional(); }

/// The hyperplane {x_0 = 0} as a cone of the given rank.
inline Cone zero_height_slab(std::size_t rank) {
    LatticeVector e = zero_lattice(rank);
    e[0] = 1;
    return Cone::from_inequalities(rank, {e, negate(e)});
}

/// {(0, x) : x in c} in rank 1 + c.rank().
inline Cone embed_at_height_zero(const Cone& c) {
    std::vector<LatticeVector> gens;
    for (const auto& g : c.generators()) gens.push_back(prepend(Integer(0), g));
    return Cone::from_generators(c.rank() + 1, std::move(gens));
}

}  // namespace toroidal
