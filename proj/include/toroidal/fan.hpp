#pragma once

// The glued toroidal fan of a polyhedral divisor and the comparison of its
// charts with independently enumerated toric-model cones.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/cone.hpp"
#include "toroidal/divisor.hpp"
#include "toroidal/polyhedron.hpp"
#include "toroidal/semigroup.hpp"

namespace toroidal {

/// Internal consistency failure (should be unreachable for well-formed input).
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Cones in Z x N, one per label, all meeting {0} x N in the shared face (0, sigma).
class GluedFan {
public:
    GluedFan(Cone shared_face, std::map<std::string, Cone> charts)
        : shared_face_(std::move(shared_face)), charts_(std::move(charts)) {
        for (const auto& g : shared_face_.generators())
            if (g[0] != 0) throw InvariantViolation("shared face has a generator off height zero");
        Cone slab = zero_height_slab(rank());
        for (const auto& [label, c] : charts_) {
            if (c.rank() != rank()) throw StructuralError("chart '" + label + "' has the wrong rank");
            if (!c.is_pointed()) throw InvariantViolation("chart '" + label + "' is not pointed");
            if (!cone_equal(intersect(c, slab), shared_face_))
                throw InvariantViolation("chart '" + label + "' does not meet height zero in the shared face");
        }
    }

    std::size_t rank() const { return shared_face_.rank(); }
    const Cone& shared_face() const { return shared_face_; }
    const std::map<std::string, Cone>& charts() const { return charts_; }

private:
    Cone shared_face_;
    std::map<std::string, Cone> charts_;
};

/// Charts are the homogenizations of the non-trivial coefficients. `kept_trivial`
/// names points the caller keeps in U; each must carry the trivial coefficient.
inline GluedFan fan_from_divisor(const PolyhedralDivisor& d, const std::set<std::string>& kept_trivial = {}) {
    for (const auto& label : kept_trivial)
        if (!d.is_trivial_at(label))
            throw DomainError("point '" + label + "' has a non-trivial coefficient and cannot lie in U");
    std::map<std::string, Cone> charts;
    for (const auto& label : d.nontrivial_points()) charts.emplace(label, homogenize(d.coefficient(label)));
    return GluedFan(embed_at_height_zero(d.tail()), std::move(charts));
}

inline bool fan_isomorphic(const GluedFan& a, const GluedFan& b) {
    if (a.rank() != b.rank()) throw StructuralError("comparing fans of different ranks");
    if (a.charts().size() != b.charts().size()) return false;
    if (!cone_equal(a.shared_face(), b.shared_face())) return false;
    for (const auto& [label, c] : a.charts()) {
        auto it = b.charts().find(label);
        if (it == b.charts().end() || !cone_equal(c, it->second)) return false;
    }
    return true;
}

struct CanonicalPointSet {
    std::vector<std::string> product_points;    ///< delta_P is sigma x Q>=0
    std::vector<std::string> essential_points;  ///< the charts of the canonical embedding
};

// Only points with a non-trivial coefficient are partitioned, so adding
// explicit trivial entries leaves the result unchanged.
inline CanonicalPointSet canonical_point_set(const PolyhedralDivisor& d) {
    CanonicalPointSet out;
    for (const auto& label : d.nontrivial_points()) {
        if (is_lattice_translate_of_tail(d.coefficient(label)))
            out.product_points.push_back(label);
        else
            out.essential_points.push_back(label);
    }
    return out;
}

enum class Verdict { Equal, Different, Undetermined };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Different: return "different";
    case Verdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

struct PointVerdict {
    std::optional<Cone> lhs;  ///< enumerated toric-model cone; empty when undetermined
    Cone rhs;                 ///< homogenization of the coefficient
    Verdict verdict;
    std::size_t box;
};

struct VerificationReport {
    std::map<std::string, PointVerdict> points;
    bool overall = true;

    bool any_undetermined() const {
        return std::any_of(points.begin(), points.end(),
                           [](const auto& kv) { return kv.second.verdict == Verdict::Undetermined; });
    }
};

// lhs is computed from the semigroup by enumeration only; rhs by
// homogenization. They share nothing but the cone kernel.
inline VerificationReport verify_theorem1(const PolyhedralDivisor& d, std::size_t box_cap = 32) {
    if (d.rank() > 3) throw DomainError("verification enumerates boxes and is limited to rank(N) <= 3");
    VerificationReport report;
    for (const auto& label : d.nontrivial_points()) {
        auto coefficient = d.coefficient(label);
        auto sampled = stabilized_semigroup_cone(MonomialSemigroup(coefficient), box_cap);
        Cone rhs = homogenize(coefficient);
        Verdict verdict = !sampled.cone                   ? Verdict::Undetermined
                          : cone_equal(*sampled.cone, rhs) ? Verdict::Equal
                                                           : Verdict::Different;
        report.points.emplace(label, PointVerdict{sampled.cone, rhs, verdict, sampled.box});
        if (verdict != Verdict::Equal) report.overall = false;
    }
    return report;
}

}  // namespace toroidal
