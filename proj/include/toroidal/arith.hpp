#pragma once

// Exact integer and rational scalars, lattice/rational vectors, and the
// small amount of linear algebra the cone kernel needs.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toroidal {

using Integer = boost::multiprecision::cpp_int;
/// Always in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

using LatticeVector = std::vector<Integer>;
using RatVector = std::vector<Rat>;

/// Malformed input: rank mismatches, empty polyhedra, non-pointed tails.
class StructuralError : public std::invalid_argument {
public:
    explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

/// A well-formed input outside the domain of an operation (e.g. u not in the dual of the tail).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

inline Integer numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Integer floor(const Rat& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quot = n / d;  // truncates toward zero
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

inline Integer ceil(const Rat& q) { return -floor(-q); }

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rat& q) {
    if (is_integral(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p" or "p/q". Throws StructuralError on anything else or q == 0.
inline Rat parse_rat(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> Integer {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw StructuralError("malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw StructuralError("malformed rational '" + std::string(text) + "'");
        Integer z(std::string(s[0] == '+' ? s.substr(1) : s));
        return z;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw StructuralError("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

inline LatticeVector zero_lattice(std::size_t rank) { return LatticeVector(rank, Integer(0)); }

inline bool is_zero(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const LatticeVector& a, const RatVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Integer content(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    return g;
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
inline LatticeVector primitive(LatticeVector v) {
    Integer g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

/// Smallest positive integer multiple of a rational vector, made primitive.
inline LatticeVector clear_denominators(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) {
        Integer d = denominator(x);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    LatticeVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(numerator(x) * (l / denominator(x)));
    return primitive(std::move(out));
}

inline RatVector to_rat(const LatticeVector& v) { return RatVector(v.begin(), v.end()); }

inline LatticeVector negate(LatticeVector v) {
    for (auto& x : v) x = -x;
    return v;
}

inline LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline RatVector add(const RatVector& a, const RatVector& b) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

/// (c, v) with c prepended.
template <class Vec, class Scalar>
Vec prepend(const Scalar& c, const Vec& v) {
    Vec out;
    out.reserve(v.size() + 1);
    out.emplace_back(c);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

/// Integer row echelon form, built one vector at a time.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t rank) : rank_(rank) {}

    /// Returns true if v was independent of the rows so far.
    bool insert(LatticeVector v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] == 0) continue;
            Integer a = row[pivot];
            Integer b = v[pivot];
            for (std::size_t i = 0; i < rank_; ++i) v[i] = a * v[i] - b * row[i];
            v = primitive(std::move(v));
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
        if (it == v.end()) return false;
        rows_.emplace_back(static_cast<std::size_t>(it - v.begin()), std::move(v));
        return true;
    }

    std::size_t size() const { return rows_.size(); }

private:
    std::size_t rank_;
    std::vector<std::pair<std::size_t, LatticeVector>> rows_;
};

/// Dimension of the linear span of `vectors`, stopping early once `cap` is reached.
inline std::size_t span_dimension(const std::vector<LatticeVector>& vectors, std::size_t rank,
                                  std::size_t cap = static_cast<std::size_t>(-1)) {
    EchelonBasis basis(rank);
    for (const auto& v : vectors) {
        if (basis.size() >= cap || basis.size() == rank) break;
        basis.insert(v);
    }
    return basis.size();
}

/// Reduced row echelon form over Q; zero rows dropped. Pivot columns are returned alongside.
struct ReducedEchelon {
    std::vector<RatVector> rows;
    std::vector<std::size_t> pivots;
};

inline ReducedEchelon reduced_row_echelon(const std::vector<LatticeVector>& vectors, std::size_t rank) {
    std::vector<RatVector> m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) m.push_back(to_rat(v));
    ReducedEchelon out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < rank && r < m.size(); ++col) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Rat p = m[r][col];
        for (auto& x : m[r]) x /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = 0; j < rank; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(col);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

inline bool lex_less(const LatticeVector& a, const LatticeVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<LatticeVector>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

inline bool lex_less(const RatVector& a, const RatVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<RatVector>& vs) {
    std::sort(vs.begin(), vs.end(), [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace toroidal
