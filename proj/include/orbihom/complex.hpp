#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbihom/matrix.hpp"

namespace orbihom {

using VertexId = int;

/// A simplex is its strictly ascending vertex-id list; the ascending order is
/// the canonical orientation, and every sign convention derives from it.
using Simplex = std::vector<VertexId>;

enum class SimplexClass { Regular, SemiRegular, Singular };

inline const char* to_string(SimplexClass c)
{
    switch (c) {
        case SimplexClass::Regular:     return "regular";
        case SimplexClass::SemiRegular: return "semi-regular";
        case SimplexClass::Singular:    return "singular";
    }
    return "?";
}

inline std::string simplex_to_string(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

/// Sort an arbitrary vertex list into canonical ascending order.
/// Returns the permutation sign, or 0 if a vertex repeats.
inline int canonicalize(std::vector<VertexId>& verts)
{
    int sign = 1;
    for (std::size_t i = 1; i < verts.size(); ++i)
        for (std::size_t j = i; j > 0 && verts[j - 1] >= verts[j]; --j) {
            if (verts[j - 1] == verts[j])
                return 0;
            std::swap(verts[j - 1], verts[j]);
            sign = -sign;
        }
    return sign;
}

/// Finite face-closed simplicial complex with a positive integer weight per
/// simplex satisfying w(face) | w(coface).  Immutable after construction;
/// safe to share read-only across threads.
class WeightedComplex {
public:
    WeightedComplex() = default;

    /// Assemble from an explicit simplex->weight table.  The table must be
    /// face-closed; vertex ids are taken as given (subcomplexes keep their
    /// parent's ids, so ids may have gaps here).
    static WeightedComplex from_weighted_simplices(const std::map<Simplex, Integer>& weights)
    {
        WeightedComplex K;
        for (const auto& [s, w] : weights) {
            if (s.empty())
                fail(ErrorCode::InvalidSimplex, "empty simplex");
            if (sgn(w) <= 0)
                fail(ErrorCode::InvalidWeight, "weight must be >= 1 on " + simplex_to_string(s));
            int d = static_cast<int>(s.size()) - 1;
            if (d >= static_cast<int>(K.by_dim_.size())) {
                K.by_dim_.resize(d + 1);
                K.weight_by_dim_.resize(d + 1);
            }
            K.by_dim_[d].push_back(s);
            K.weight_by_dim_[d].push_back(w);
            if (d == 0)
                K.vertex_weight_[s[0]] = w;
        }
        // std::map iteration is lexicographic per dimension already, but the
        // per-dimension vectors interleave dims; rebuild indices dim by dim.
        for (int d = 0; d <= K.dim(); ++d)
            for (int i = 0; i < static_cast<int>(K.by_dim_[d].size()); ++i)
                K.index_[K.by_dim_[d][i]] = i;
        for (const auto& [v, w] : K.vertex_weight_)
            K.vertices_.push_back(v);
        K.validate_closure_and_divisibility();
        K.divisibly_weighted_ = K.check_divisibly_weighted();
        return K;
    }

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    bool empty() const { return by_dim_.empty(); }

    std::size_t vertex_count() const { return vertices_.size(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }

    bool has_vertex(VertexId v) const { return vertex_weight_.count(v) != 0; }

    const Integer& vertex_weight(VertexId v) const
    {
        auto it = vertex_weight_.find(v);
        if (it == vertex_weight_.end())
            fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
        return it->second;
    }

    int simplex_count(int d) const
    {
        if (d < 0 || d > dim())
            return 0;
        return static_cast<int>(by_dim_[d].size());
    }

    std::size_t simplex_count() const
    {
        std::size_t n = 0;
        for (const auto& v : by_dim_)
            n += v.size();
        return n;
    }

    const std::vector<Simplex>& simplices(int d) const
    {
        static const std::vector<Simplex> kEmpty;
        if (d < 0 || d > dim())
            return kEmpty;
        return by_dim_[d];
    }

    bool contains(const Simplex& s) const { return index_.count(s) != 0; }

    /// Position of s within its dimension's lexicographic basis ordering.
    int index_of(const Simplex& s) const
    {
        auto it = index_.find(s);
        if (it == index_.end())
            fail(ErrorCode::SimplexNotInComplex, simplex_to_string(s));
        return it->second;
    }

    const Integer& weight(const Simplex& s) const
    {
        auto it = index_.find(s);
        if (it == index_.end())
            fail(ErrorCode::SimplexNotInComplex, simplex_to_string(s));
        return weight_by_dim_[s.size() - 1][it->second];
    }

    const Integer& weight_at(int d, int i) const { return weight_by_dim_[d][i]; }

    bool divisibly_weighted() const { return divisibly_weighted_; }

    /// Simplices with no proper coface.
    std::vector<Simplex> maximal_simplices() const
    {
        std::set<Simplex> facets;
        for (int d = 1; d <= dim(); ++d)
            for (const Simplex& s : by_dim_[d])
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex f = s;
                    f.erase(f.begin() + i);
                    facets.insert(f);
                }
        std::vector<Simplex> out;
        for (int d = 0; d <= dim(); ++d)
            for (const Simplex& s : by_dim_[d])
                if (!facets.count(s))
                    out.push_back(s);
        return out;
    }

    bool operator==(const WeightedComplex& other) const
    {
        return vertex_weight_ == other.vertex_weight_ && by_dim_ == other.by_dim_ &&
               weight_by_dim_ == other.weight_by_dim_;
    }

private:
    void validate_closure_and_divisibility() const
    {
        for (int d = 1; d <= dim(); ++d)
            for (int i = 0; i < static_cast<int>(by_dim_[d].size()); ++i) {
                const Simplex& s = by_dim_[d][i];
                for (std::size_t j = 0; j < s.size(); ++j) {
                    Simplex f = s;
                    f.erase(f.begin() + j);
                    auto it = index_.find(f);
                    if (it == index_.end())
                        fail(ErrorCode::InvalidSimplex,
                             "complex is not face-closed at " + simplex_to_string(s));
                    if (!divides(weight_by_dim_[d - 1][it->second], weight_by_dim_[d][i]))
                        fail(ErrorCode::FaceDivisibilityViolation,
                             "w" + simplex_to_string(f) + " does not divide w" + simplex_to_string(s));
                }
            }
    }

    bool check_divisibly_weighted() const
    {
        for (int d = 1; d <= dim(); ++d)
            for (int i = 0; i < static_cast<int>(by_dim_[d].size()); ++i) {
                const Simplex& s = by_dim_[d][i];
                std::vector<Integer> ws;
                for (VertexId v : s)
                    ws.push_back(vertex_weight_.at(v));
                std::sort(ws.begin(), ws.end());
                for (std::size_t j = 1; j < ws.size(); ++j)
                    if (!divides(ws[j - 1], ws[j]))
                        return false;
                if (ws.back() != weight_by_dim_[d][i])
                    return false;
            }
        return true;
    }

    std::vector<VertexId> vertices_;                  // ascending
    std::map<VertexId, Integer> vertex_weight_;
    std::vector<std::vector<Simplex>> by_dim_;        // per dim, lexicographic
    std::vector<std::vector<Integer>> weight_by_dim_;
    std::map<Simplex, int> index_;                    // simplex -> index in its dim
    bool divisibly_weighted_ = false;
};

using ComplexPtr = std::shared_ptr<const WeightedComplex>;

inline ComplexPtr share(WeightedComplex K)
{
    return std::make_shared<const WeightedComplex>(std::move(K));
}

/// Build a complex from vertex weights and maximal simplices.  Without
/// explicit simplex weights, w(sigma) is the lcm of its vertex weights and
/// the divisibility-chain condition is enforced (lcm must equal the chain
/// maximum).  Explicit weights may cover any subset of simplices; the rest
/// are derived by the same rule.
inline WeightedComplex build_complex(const std::map<VertexId, Integer>& vertex_weights,
                                     const std::vector<Simplex>& maximal_simplices,
                                     const std::map<Simplex, Integer>& explicit_simplex_weights = {})
{
    if (vertex_weights.empty())
        fail(ErrorCode::InvalidSimplex, "a complex needs at least one vertex");
    {
        VertexId expect = 0;
        for (const auto& [v, w] : vertex_weights) {
            if (v != expect++)
                fail(ErrorCode::UnknownVertex, "vertex ids must be dense 0..V-1, missing " + std::to_string(expect - 1));
            if (sgn(w) <= 0)
                fail(ErrorCode::InvalidWeight, "vertex " + std::to_string(v) + " has weight < 1");
        }
    }

    std::set<Simplex> closure;
    for (const auto& [v, w] : vertex_weights)
        closure.insert(Simplex{v});
    for (const Simplex& raw : maximal_simplices) {
        Simplex s = raw;
        if (canonicalize(s) == 0)
            fail(ErrorCode::InvalidSimplex, "repeated vertex in " + simplex_to_string(raw));
        if (s.size() > 24)
            fail(ErrorCode::InvalidSimplex, "simplex dimension too large for face closure");
        for (VertexId v : s)
            if (!vertex_weights.count(v))
                fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " in " + simplex_to_string(s));
        const unsigned n = static_cast<unsigned>(s.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (unsigned b = 0; b < n; ++b)
                if (mask & (1u << b))
                    f.push_back(s[b]);
            closure.insert(std::move(f));
        }
    }

    for (const auto& [s, w] : explicit_simplex_weights) {
        Simplex c = s;
        if (canonicalize(c) == 0 || c != s)
            fail(ErrorCode::InvalidSimplex, "explicit weight on non-canonical simplex " + simplex_to_string(s));
        if (!closure.count(s))
            fail(ErrorCode::SimplexNotInComplex, "explicit weight on " + simplex_to_string(s));
        if (sgn(w) <= 0)
            fail(ErrorCode::InvalidWeight, "explicit weight < 1 on " + simplex_to_string(s));
        if (s.size() == 1 && w != vertex_weights.at(s[0]))
            fail(ErrorCode::FaceDivisibilityViolation,
                 "explicit weight conflicts with declared vertex weight at " + simplex_to_string(s));
    }

    std::map<Simplex, Integer> table;
    for (const Simplex& s : closure) {
        auto it = explicit_simplex_weights.find(s);
        if (it != explicit_simplex_weights.end()) {
            table.emplace(s, it->second);
            continue;
        }
        std::vector<Integer> ws;
        for (VertexId v : s)
            ws.push_back(vertex_weights.at(v));
        std::sort(ws.begin(), ws.end());
        for (std::size_t j = 1; j < ws.size(); ++j)
            if (!divides(ws[j - 1], ws[j]))
                fail(ErrorCode::NonDivisibleChain,
                     "vertex weights of " + simplex_to_string(s) + " admit no divisibility chain");
        table.emplace(s, ws.back()); // = lcm when the chain holds
    }

    return WeightedComplex::from_weighted_simplices(table);
}

inline SimplexClass classify(const WeightedComplex& K, const Simplex& s)
{
    if (!K.contains(s))
        fail(ErrorCode::SimplexNotInComplex, simplex_to_string(s));
    if (K.weight(s) == 1)
        return SimplexClass::Regular;
    // Every face has weight >= 2 iff every vertex does (vertex weights
    // divide face weights).
    for (VertexId v : s)
        if (K.vertex_weight(v) == 1)
            return SimplexClass::SemiRegular;
    return SimplexClass::Singular;
}

/// Counts (regular, semi-regular, singular) in dimension d.
struct ClassCounts {
    long regular = 0;
    long semi_regular = 0;
    long singular = 0;
};

inline ClassCounts class_counts(const WeightedComplex& K, int d)
{
    ClassCounts c;
    for (const Simplex& s : K.simplices(d)) {
        switch (classify(K, s)) {
            case SimplexClass::Regular:     ++c.regular; break;
            case SimplexClass::SemiRegular: ++c.semi_regular; break;
            case SimplexClass::Singular:    ++c.singular; break;
        }
    }
    return c;
}

/// Singular subcomplex: all simplices every face of which has weight >= 2.
/// Vertex ids are inherited from K.
inline WeightedComplex singular_subcomplex(const WeightedComplex& K)
{
    std::map<Simplex, Integer> table;
    for (int d = 0; d <= K.dim(); ++d)
        for (const Simplex& s : K.simplices(d))
            if (classify(K, s) == SimplexClass::Singular)
                table.emplace(s, K.weight(s));
    if (table.empty())
        return WeightedComplex();
    return WeightedComplex::from_weighted_simplices(table);
}

/// n-stage singular subcomplex: singular simplices of weight <= n.
/// std::nullopt is the n = infinity sentinel and yields the full singular
/// subcomplex.
inline WeightedComplex n_stage_subcomplex(const WeightedComplex& K, const std::optional<Integer>& n)
{
    if (!n.has_value())
        return singular_subcomplex(K);
    if (sgn(*n) < 0)
        fail(ErrorCode::InvalidSpec, "stage must be non-negative");
    std::map<Simplex, Integer> table;
    for (int d = 0; d <= K.dim(); ++d)
        for (const Simplex& s : K.simplices(d))
            if (classify(K, s) == SimplexClass::Singular && K.weight(s) <= *n)
                table.emplace(s, K.weight(s));
    if (table.empty())
        return WeightedComplex();
    return WeightedComplex::from_weighted_simplices(table);
}

inline bool is_subcomplex(const WeightedComplex& K, const WeightedComplex& A)
{
    for (int d = 0; d <= A.dim(); ++d)
        for (const Simplex& s : A.simplices(d)) {
            if (!K.contains(s))
                return false;
            if (K.weight(s) != A.weight(s))
                return false;
        }
    return true;
}

/// Minimal vertex weight of a simplex.  In a divisibly-weighted complex this
/// minimum divides every other vertex weight of the simplex, so it is the
/// weight of every interior point of the realization.
inline Integer min_vertex_weight(const WeightedComplex& K, const Simplex& s)
{
    if (!K.contains(s))
        fail(ErrorCode::SimplexNotInComplex, simplex_to_string(s));
    Integer m = K.vertex_weight(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i)
        m = std::min(m, K.vertex_weight(s[i]));
    return m;
}

/// Vertex total order for weight-sorted constructions: by (weight, id).
inline std::vector<VertexId> vertices_by_weight(const WeightedComplex& K)
{
    std::vector<VertexId> order = K.vertices();
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        int c = cmp(K.vertex_weight(a), K.vertex_weight(b));
        if (c != 0)
            return c < 0;
        return a < b;
    });
    return order;
}

/// Cartesian product of divisibly-weighted complexes: staircase triangulation
/// over the weight-sorted vertex orders, with w(v,v') = w(v) * w'(v') and the
/// weight of a product simplex given by its top pair.
inline WeightedComplex cartesian_product(const WeightedComplex& K, const WeightedComplex& K2)
{
    if (!K.divisibly_weighted() || !K2.divisibly_weighted())
        fail(ErrorCode::NotDivisiblyWeighted, "cartesian_product requires divisibly-weighted factors");

    const std::vector<VertexId> ord1 = vertices_by_weight(K);
    const std::vector<VertexId> ord2 = vertices_by_weight(K2);
    std::map<VertexId, int> rank1, rank2;
    for (int i = 0; i < static_cast<int>(ord1.size()); ++i)
        rank1[ord1[i]] = i;
    for (int i = 0; i < static_cast<int>(ord2.size()); ++i)
        rank2[ord2[i]] = i;
    const int n2 = static_cast<int>(ord2.size());

    std::map<VertexId, Integer> vw;
    for (int i = 0; i < static_cast<int>(ord1.size()); ++i)
        for (int j = 0; j < n2; ++j)
            vw[i * n2 + j] = K.vertex_weight(ord1[i]) * K2.vertex_weight(ord2[j]);

    std::vector<Simplex> maximal;
    for (const Simplex& a : K.maximal_simplices())
        for (const Simplex& b : K2.maximal_simplices()) {
            std::vector<int> ra, rb;
            for (VertexId v : a)
                ra.push_back(rank1[v]);
            for (VertexId v : b)
                rb.push_back(rank2[v]);
            std::sort(ra.begin(), ra.end());
            std::sort(rb.begin(), rb.end());
            const int p = static_cast<int>(ra.size()) - 1;
            const int q = static_cast<int>(rb.size()) - 1;
            // Monotone staircase paths from (0,0) to (p,q): choose which of
            // the p+q steps advance the first factor.
            const unsigned steps = static_cast<unsigned>(p + q);
            for (unsigned mask = 0; mask < (1u << steps); ++mask) {
                if (__builtin_popcount(mask) != p)
                    continue;
                Simplex cell;
                int i = 0, j = 0;
                cell.push_back(ra[0] * n2 + rb[0]);
                for (unsigned b2 = 0; b2 < steps; ++b2) {
                    if (mask & (1u << b2))
                        ++i;
                    else
                        ++j;
                    cell.push_back(ra[i] * n2 + rb[j]);
                }
                maximal.push_back(std::move(cell));
            }
        }

    return build_complex(vw, maximal);
}

} // namespace orbihom
