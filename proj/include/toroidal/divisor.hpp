#pragma once

// Polyhedral divisors on a marked curve and their evaluations D(u).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/arith.hpp"
#include "toroidal/cone.hpp"
#include "toroidal/polyhedron.hpp"

namespace toroidal {

enum class CurveKind { AffineLine, ProjectiveLine, AbstractAffine, AbstractComplete };

inline bool is_complete(CurveKind k) { return k == CurveKind::ProjectiveLine || k == CurveKind::AbstractComplete; }

inline constexpr const char* kInfinityLabel = "∞";

struct MarkedPoint {
    std::string label;
    std::optional<Rat> coordinate;
};

/// A curve known only through its kind and a set of labelled points.
class BaseCurve {
public:
    BaseCurve(CurveKind kind, std::vector<MarkedPoint> points) : kind_(kind), points_(std::move(points)) {
        std::set<std::string> labels;
        std::set<Rat> coords;
        for (const auto& p : points_) {
            if (!labels.insert(p.label).second) throw StructuralError("duplicate point label '" + p.label + "'");
            if (p.label == kInfinityLabel && kind_ != CurveKind::ProjectiveLine)
                throw StructuralError("the label '∞' is only legal on the projective line");
            if (p.coordinate) {
                if (kind_ != CurveKind::AffineLine && kind_ != CurveKind::ProjectiveLine)
                    throw StructuralError("coordinates are only meaningful on the affine or projective line");
                if (!coords.insert(*p.coordinate).second)
                    throw StructuralError("duplicate coordinate " + to_string(*p.coordinate));
            }
        }
    }

    CurveKind kind() const { return kind_; }
    const std::vector<MarkedPoint>& points() const { return points_; }
    bool has_point(const std::string& label) const {
        return std::any_of(points_.begin(), points_.end(), [&](const MarkedPoint& p) { return p.label == label; });
    }

private:
    CurveKind kind_;
    std::vector<MarkedPoint> points_;
};

/// A finite formal sum of labelled points with rational coefficients. Zero entries are never stored.
class QDivisor {
public:
    QDivisor() = default;

    void set(const std::string& label, Rat c) {
        if (c == 0)
            coeffs_.erase(label);
        else
            coeffs_[label] = std::move(c);
    }

    Rat at(const std::string& label) const {
        auto it = coeffs_.find(label);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    const std::map<std::string, Rat>& coefficients() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    friend QDivisor operator+(const QDivisor& a, const QDivisor& b) {
        QDivisor out = a;
        for (const auto& [l, c] : b.coeffs_) out.set(l, a.at(l) + c);
        return out;
    }

    friend QDivisor operator*(const Integer& k, const QDivisor& d) {
        QDivisor out;
        for (const auto& [l, c] : d.coeffs_) out.set(l, Rat(k) * c);
        return out;
    }

    friend bool operator==(const QDivisor& a, const QDivisor& b) { return a.coeffs_ == b.coeffs_; }

    /// Coefficient-wise comparison.
    friend bool leq(const QDivisor& a, const QDivisor& b) {
        for (const auto& [l, c] : a.coeffs_)
            if (c > b.at(l)) return false;
        for (const auto& [l, c] : b.coeffs_)
            if (a.at(l) > c) return false;
        return true;
    }

private:
    std::map<std::string, Rat> coeffs_;
};

using IntegerDivisor = std::map<std::string, Integer>;

inline Rat degree(const QDivisor& q) {
    Rat s = 0;
    for (const auto& [l, c] : q.coefficients()) s += c;
    return s;
}

/// D = sum of Delta_P (x) P with all Delta_P sharing the pointed tail cone.
class PolyhedralDivisor {
public:
    PolyhedralDivisor(BaseCurve base, Cone tail, std::map<std::string, TailedPolyhedron> coefficients)
        : base_(std::move(base)), tail_(std::move(tail)), coefficients_(std::move(coefficients)) {
        if (!tail_.is_pointed()) throw StructuralError("tail cone of a polyhedral divisor must be pointed");
        for (const auto& [label, p] : coefficients_) {
            if (!base_.has_point(label)) throw StructuralError("coefficient at unknown point '" + label + "'");
            if (p.rank() != tail_.rank())
                throw StructuralError("coefficient at '" + label + "' has rank " + std::to_string(p.rank()) +
                                      ", expected " + std::to_string(tail_.rank()));
            if (!cone_equal(p.tail_cone(), tail_))
                throw StructuralError("coefficient at '" + label + "' does not have the divisor's tail cone");
        }
    }

    const BaseCurve& base() const { return base_; }
    std::size_t rank() const { return tail_.rank(); }
    const Cone& tail() const { return tail_; }
    const std::map<std::string, TailedPolyhedron>& coefficients() const { return coefficients_; }

    /// Delta_P = sigma, the neutral element.
    TailedPolyhedron trivial_coefficient() const { return TailedPolyhedron::of_cone(tail_); }

    bool is_trivial_at(const std::string& label) const {
        auto it = coefficients_.find(label);
        return it == coefficients_.end() || it->second == trivial_coefficient();
    }

    /// Unmarked points carry the trivial coefficient.
    TailedPolyhedron coefficient(const std::string& label) const {
        auto it = coefficients_.find(label);
        return it == coefficients_.end() ? trivial_coefficient() : it->second;
    }

    /// Labels with an explicit, non-trivial coefficient.
    std::vector<std::string> nontrivial_points() const {
        std::vector<std::string> out;
        for (const auto& [label, p] : coefficients_)
            if (!(p == trivial_coefficient())) out.push_back(label);
        return out;
    }

    /// Throws DomainError unless u lies in the dual of the tail cone.
    void require_weight(const LatticeVector& u) const {
        if (u.size() != rank())
            throw StructuralError("weight of length " + std::to_string(u.size()) + " for a divisor of rank " +
                                  std::to_string(rank()));
        for (const auto& r : tail_.generators()) {
            if (dot(u, r) < 0) {
                std::string ray;
                for (std::size_t i = 0; i < r.size(); ++i) ray += (i ? "," : "") + to_string(r[i]);
                throw DomainError("weight is negative on tail ray (" + ray + ")");
            }
        }
    }

private:
    BaseCurve base_;
    Cone tail_;
    std::map<std::string, TailedPolyhedron> coefficients_;
};

/// D(u) = sum of min<u, Delta_P> * P.
inline QDivisor evaluate(const PolyhedralDivisor& d, const LatticeVector& u) {
    d.require_weight(u);
    QDivisor out;
    for (const auto& [label, p] : d.coefficients()) out.set(label, support_min(u, p).value());
    return out;
}

inline IntegerDivisor evaluate_floor(const PolyhedralDivisor& d, const LatticeVector& u) {
    IntegerDivisor out;
    QDivisor q = evaluate(d, u);
    for (const auto& [label, c] : q.coefficients()) {
        Integer f = floor(c);
        if (f != 0) out[label] = f;
    }
    return out;
}

inline TailedPolyhedron degree_polyhedron(const PolyhedralDivisor& d) {
    TailedPolyhedron sum = d.trivial_coefficient();
    for (const auto& [label, p] : d.coefficients()) sum = minkowski_sum(sum, p);
    return sum;
}

enum class Properness { Proper, Inconclusive };

struct ProperReport {
    Properness verdict;
    std::vector<std::string> reasons;
};

// On a complete base only the sufficient condition sum(Delta_P) strictly
// inside sigma is checked; failure of it is reported as inconclusive, never
// as improper.
inline ProperReport check_proper(const PolyhedralDivisor& d) {
    if (!is_complete(d.base().kind()))
        return {Properness::Proper, {"affine base: coefficients with the common tail cone suffice"}};

    TailedPolyhedron sum = degree_polyhedron(d);
    const Cone& sigma = d.tail();
    bool inside = std::all_of(sum.vertices().begin(), sum.vertices().end(),
                              [&](const RatVector& v) { return sigma.contains(v); });
    if (!inside)
        return {Properness::Inconclusive,
                {"sum of coefficients is not contained in the tail cone; the full properness criterion for complete "
                 "curves (degree and bigness conditions) is not evaluated"}};

    bool equal = sum == d.trivial_coefficient();
    if (sigma.is_zero()) {
        if (equal) return {Properness::Proper, {"zero tail cone and sum of coefficients is {0}"}};
    } else if (!equal) {
        return {Properness::Proper, {"sum of coefficients is strictly contained in the tail cone"}};
    }
    return {Properness::Inconclusive,
            {"sum of coefficients equals the tail cone; the full properness criterion for complete curves "
             "(degree and bigness conditions) is not evaluated"}};
}

struct TrivialLocus {
    std::vector<std::string> marked;  ///< explicit entries equal to the tail cone
    bool all_unmarked_trivial = true;
};

inline TrivialLocus trivial_locus(const PolyhedralDivisor& d) {
    TrivialLocus out;
    for (const auto& [label, p] : d.coefficients())
        if (p == d.trivial_coefficient()) out.marked.push_back(label);
    return out;
}

}  // namespace toroidal
