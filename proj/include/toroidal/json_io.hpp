#pragma once

// Canonical JSON encodings. Rationals are strings ("-3/2", "4"); lattice
// entries are JSON integers (strings only when they overflow 64 bits);
// objects have sorted keys.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toroidal/arith.hpp"
#include "toroidal/cone.hpp"
#include "toroidal/divisor.hpp"
#include "toroidal/fan.hpp"
#include "toroidal/polyhedron.hpp"
#include "toroidal/semigroup.hpp"

namespace toroidal::io {

using nlohmann::json;

inline json encode(const Integer& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(z);
    return z.str();
}

inline json encode(const Rat& q) { return to_string(q); }

inline json encode(const LatticeVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(encode(x));
    return out;
}

inline json encode(const RatVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(encode(x));
    return out;
}

template <class Vec>
json encode_list(std::vector<Vec> vs) {
    sort_unique(vs);
    json out = json::array();
    for (const auto& v : vs) out.push_back(encode(v));
    return out;
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw StructuralError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw StructuralError(std::string("missing field '") + key + "'");
    return *it;
}

inline std::size_t decode_rank(const json& j) {
    const auto& r = field(j, "rank");
    if (!r.is_number_integer() || r.get<std::int64_t>() <= 0) throw StructuralError("'rank' must be a positive integer");
    return r.get<std::size_t>();
}

inline Integer decode_integer(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        Rat q = parse_rat(j.get<std::string>());
        if (!is_integral(q)) throw StructuralError("expected an integer, got '" + j.get<std::string>() + "'");
        return numerator(q);
    }
    throw StructuralError("expected an integer, got " + j.dump());
}

inline Rat decode_rat(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw StructuralError("expected a rational string, got " + j.dump());
}

inline LatticeVector decode_lattice(const json& j, std::size_t rank) {
    if (!j.is_array() || j.size() != rank)
        throw StructuralError("expected an integer vector of length " + std::to_string(rank) + ", got " + j.dump());
    LatticeVector v;
    for (const auto& x : j) v.push_back(decode_integer(x));
    return v;
}

inline RatVector decode_rat_vector(const json& j, std::size_t rank) {
    if (!j.is_array() || j.size() != rank)
        throw StructuralError("expected a rational vector of length " + std::to_string(rank) + ", got " + j.dump());
    RatVector v;
    for (const auto& x : j) v.push_back(decode_rat(x));
    return v;
}

inline std::vector<LatticeVector> decode_lattice_list(const json& j, std::size_t rank) {
    if (!j.is_array()) throw StructuralError("expected a list of vectors, got " + j.dump());
    std::vector<LatticeVector> out;
    for (const auto& v : j) out.push_back(decode_lattice(v, rank));
    return out;
}

inline json encode(const Cone& c) { return {{"rank", c.rank()}, {"generators", encode_list(c.generators())}}; }

inline Cone decode_cone(const json& j) {
    std::size_t rank = decode_rank(j);
    return Cone::from_generators(rank, decode_lattice_list(field(j, "generators"), rank));
}

inline json encode(const TailedPolyhedron& p) {
    return {{"rank", p.rank()}, {"vertices", encode_list(p.vertices())}, {"rays", encode_list(p.rays())}};
}

inline TailedPolyhedron decode_polyhedron(const json& j) {
    std::size_t rank = decode_rank(j);
    const auto& vj = field(j, "vertices");
    if (!vj.is_array()) throw StructuralError("'vertices' must be a list");
    std::vector<RatVector> vertices;
    for (const auto& v : vj) vertices.push_back(decode_rat_vector(v, rank));
    std::vector<LatticeVector> rays;
    if (j.contains("rays")) rays = decode_lattice_list(j.at("rays"), rank);
    return TailedPolyhedron(rank, std::move(vertices), std::move(rays));
}

inline const char* kind_name(CurveKind k) {
    switch (k) {
    case CurveKind::AffineLine: return "affine_line";
    case CurveKind::ProjectiveLine: return "projective_line";
    case CurveKind::AbstractAffine: return "abstract_affine";
    case CurveKind::AbstractComplete: return "abstract_complete";
    }
    return "affine_line";
}

inline CurveKind decode_kind(const std::string& s) {
    if (s == "affine_line") return CurveKind::AffineLine;
    if (s == "projective_line") return CurveKind::ProjectiveLine;
    if (s == "abstract_affine") return CurveKind::AbstractAffine;
    if (s == "abstract_complete") return CurveKind::AbstractComplete;
    throw StructuralError("unknown curve kind '" + s + "'");
}

inline json encode(const BaseCurve& c) {
    json points = json::array();
    for (const auto& p : c.points()) {
        json e = {{"label", p.label}};
        if (p.coordinate) e["coordinate"] = encode(*p.coordinate);
        points.push_back(std::move(e));
    }
    return {{"kind", kind_name(c.kind())}, {"points", std::move(points)}};
}

inline BaseCurve decode_curve(const json& j) {
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) throw StructuralError("'kind' must be a string");
    std::vector<MarkedPoint> points;
    const auto& pj = field(j, "points");
    if (!pj.is_array()) throw StructuralError("'points' must be a list");
    for (const auto& p : pj) {
        MarkedPoint mp;
        if (p.is_string()) {
            mp.label = p.get<std::string>();
        } else {
            const auto& l = field(p, "label");
            if (!l.is_string()) throw StructuralError("point labels must be strings");
            mp.label = l.get<std::string>();
            if (p.contains("coordinate")) mp.coordinate = decode_rat(p.at("coordinate"));
        }
        points.push_back(std::move(mp));
    }
    return BaseCurve(decode_kind(kind.get<std::string>()), std::move(points));
}

/// A divisor together with the optional choice of U and a free-text description.
struct DivisorFile {
    PolyhedralDivisor divisor;
    std::set<std::string> kept_trivial;
    std::optional<std::string> description;
};

inline json encode(const PolyhedralDivisor& d) {
    json coeffs = json::object();
    for (const auto& [label, p] : d.coefficients()) coeffs[label] = encode(p);
    return {{"base", encode(d.base())}, {"rank", d.rank()}, {"tail", encode(d.tail())}, {"coefficients", coeffs}};
}

inline json encode(const DivisorFile& f) {
    json j = encode(f.divisor);
    j["U"] = json(std::vector<std::string>(f.kept_trivial.begin(), f.kept_trivial.end()));
    if (f.description) j["description"] = *f.description;
    return j;
}

inline DivisorFile decode_divisor_file(const json& j) {
    std::size_t rank = decode_rank(j);
    BaseCurve base = decode_curve(field(j, "base"));
    Cone tail = decode_cone(field(j, "tail"));
    if (tail.rank() != rank) throw StructuralError("tail cone rank differs from divisor rank");
    std::map<std::string, TailedPolyhedron> coeffs;
    if (j.contains("coefficients")) {
        const auto& cj = j.at("coefficients");
        if (!cj.is_object()) throw StructuralError("'coefficients' must be an object");
        for (const auto& [label, p] : cj.items()) coeffs.emplace(label, decode_polyhedron(p));
    }
    DivisorFile f{PolyhedralDivisor(std::move(base), std::move(tail), std::move(coeffs)), {}, std::nullopt};
    if (j.contains("U")) {
        if (!j.at("U").is_array()) throw StructuralError("'U' must be a list of labels");
        for (const auto& l : j.at("U")) {
            if (!l.is_string()) throw StructuralError("'U' entries must be strings");
            if (!f.divisor.is_trivial_at(l.get<std::string>()))
                throw StructuralError("'U' contains '" + l.get<std::string>() + "', which has a non-trivial coefficient");
            f.kept_trivial.insert(l.get<std::string>());
        }
    }
    if (j.contains("description")) {
        if (!j.at("description").is_string()) throw StructuralError("'description' must be a string");
        f.description = j.at("description").get<std::string>();
    }
    return f;
}

inline json encode(const QDivisor& q) {
    json out = json::object();
    for (const auto& [label, c] : q.coefficients()) out[label] = encode(c);
    return out;
}

inline json encode(const IntegerDivisor& q) {
    json out = json::object();
    for (const auto& [label, c] : q) out[label] = to_string(c);
    return out;
}

inline json encode(const GluedFan& f) {
    json charts = json::object();
    for (const auto& [label, c] : f.charts()) charts[label] = encode(c);
    return {{"rank", f.rank()}, {"shared_face", encode(f.shared_face())}, {"charts", charts}};
}

inline GluedFan decode_fan(const json& j) {
    std::size_t rank = decode_rank(j);
    Cone shared = decode_cone(field(j, "shared_face"));
    if (shared.rank() != rank) throw StructuralError("shared face rank differs from fan rank");
    std::map<std::string, Cone> charts;
    for (const auto& [label, c] : field(j, "charts").items()) charts.emplace(label, decode_cone(c));
    return GluedFan(std::move(shared), std::move(charts));
}

inline json encode(const VerificationReport& r) {
    json points = json::object();
    for (const auto& [label, v] : r.points) {
        json e = {{"rhs", encode(v.rhs)},
                  {"equal", v.verdict == Verdict::Equal},
                  {"status", to_string(v.verdict)},
                  {"box", v.box}};
        e["lhs"] = v.lhs ? encode(*v.lhs) : json(nullptr);
        points[label] = std::move(e);
    }
    return {{"overall", r.overall}, {"points", points}};
}

inline json encode(const HilbertBasis& h) {
    json j = {{"box", h.box}, {"complete", h.complete}, {"elements", encode_list(h.elements)}};
    if (h.witness) j["witness"] = encode(*h.witness);
    if (!h.diagnostic.empty()) j["diagnostic"] = h.diagnostic;
    return j;
}

inline json encode(const ProperReport& r) {
    json proper = r.verdict == Properness::Proper ? json(true) : json("inconclusive");
    return {{"proper", proper}, {"reasons", r.reasons}};
}

}  // namespace toroidal::io
