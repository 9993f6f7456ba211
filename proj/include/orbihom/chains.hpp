#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "orbihom/complex.hpp"
#include "orbihom/matrix.hpp"

namespace orbihom {

/// Weighted boundary in dimension n over the canonical lexicographic bases:
/// the column of sigma has entry (-1)^i * w(sigma)/w(sigma_(i)) in the row of
/// the i-th face.  Entries are integers by face divisibility.
inline IntMatrix weighted_boundary(const WeightedComplex& K, int n)
{
    const int rows = K.simplex_count(n - 1);
    const int cols = K.simplex_count(n);
    IntMatrix m(rows, cols);
    if (n < 1 || cols == 0)
        return m;
    for (int j = 0; j < cols; ++j) {
        const Simplex& s = K.simplices(n)[j];
        const Integer& ws = K.weight_at(n, j);
        for (int i = 0; i <= n; ++i) {
            Simplex f = s;
            f.erase(f.begin() + i);
            const int r = K.index_of(f);
            Integer q = ws / K.weight_at(n - 1, r);
            m.at(r, j) += (i % 2 == 0) ? q : -q;
        }
    }
    return m;
}

enum class ChainKind { Absolute, Relative };

/// Per-dimension bases and boundary matrices of an absolute or relative
/// weighted chain complex.  Relative bases exclude the subcomplex simplices.
struct ChainComplexData {
    ChainKind kind = ChainKind::Absolute;
    std::vector<std::vector<Simplex>> basis; // basis[n], n = 0..dim
    std::vector<IntMatrix> boundaries;       // boundaries[n] : C_n -> C_{n-1}
    std::vector<std::map<Simplex, int>> index;

    int dim() const { return static_cast<int>(basis.size()) - 1; }

    int basis_size(int n) const
    {
        if (n < 0 || n > dim())
            return 0;
        return static_cast<int>(basis[n].size());
    }

    const IntMatrix& boundary(int n) const
    {
        static const IntMatrix kEmpty;
        if (n < 0 || n > dim())
            return kEmpty;
        return boundaries[n];
    }
};

/// weighted_boundary with the rows and columns of A-simplices removed
/// (the boundary induced on C_*(K)/C_*(A)).
inline IntMatrix relative_weighted_boundary(const WeightedComplex& K, const WeightedComplex& A, int n)
{
    if (!is_subcomplex(K, A))
        fail(ErrorCode::NotASubcomplex, "relative boundary needs a subcomplex");
    std::vector<int> keep_row, keep_col;
    std::map<Simplex, int> row_of;
    int r = 0;
    for (const Simplex& s : K.simplices(n - 1))
        if (!A.contains(s))
            row_of[s] = r++;
    IntMatrix full = weighted_boundary(K, n);
    int cols = 0;
    for (const Simplex& s : K.simplices(n))
        if (!A.contains(s))
            ++cols;
    IntMatrix m(r, cols);
    int j = 0;
    for (int cj = 0; cj < K.simplex_count(n); ++cj) {
        if (A.contains(K.simplices(n)[cj]))
            continue;
        for (int ci = 0; ci < K.simplex_count(n - 1); ++ci) {
            const Simplex& f = K.simplices(n - 1)[ci];
            auto it = row_of.find(f);
            if (it != row_of.end())
                m.at(it->second, j) = full.at(ci, cj);
        }
        ++j;
    }
    return m;
}

/// Assemble all boundary matrices of C_*(K) or C_*(K, rel) and verify the
/// chain-complex identity.
inline ChainComplexData chain_complex(const WeightedComplex& K, const WeightedComplex* rel = nullptr)
{
    ChainComplexData cc;
    if (rel != nullptr && !rel->empty()) {
        if (!is_subcomplex(K, *rel))
            fail(ErrorCode::NotASubcomplex, "relative chain complex needs a subcomplex");
        cc.kind = ChainKind::Relative;
    }
    const int d = K.dim();
    if (d < 0)
        return cc;
    cc.basis.resize(d + 1);
    cc.index.resize(d + 1);
    for (int n = 0; n <= d; ++n)
        for (const Simplex& s : K.simplices(n)) {
            if (cc.kind == ChainKind::Relative && rel->contains(s))
                continue;
            cc.index[n][s] = static_cast<int>(cc.basis[n].size());
            cc.basis[n].push_back(s);
        }
    cc.boundaries.resize(d + 1);
    for (int n = 0; n <= d; ++n)
        cc.boundaries[n] = (cc.kind == ChainKind::Relative) ? relative_weighted_boundary(K, *rel, n)
                                                            : weighted_boundary(K, n);
    for (int n = 0; n + 1 <= d; ++n)
        if (!(cc.boundaries[n] * cc.boundaries[n + 1]).is_zero())
            fail(ErrorCode::CompositionNotZero, "boundary composition nonzero in dim " + std::to_string(n + 1));
    return cc;
}

enum class MapKind { WeightPreserving, Morphism };

/// Vertex map between complexes.  WeightPreserving demands w'(f(sigma)) =
/// w(sigma) on every simplex; Morphism only w'(f(sigma)) | w(sigma).
struct SimplicialMapData {
    ComplexPtr source;
    ComplexPtr target;
    std::map<VertexId, VertexId> vertex_map;
    MapKind kind = MapKind::WeightPreserving;
};

/// Image of a simplex as a canonical simplex of the target (duplicate images
/// collapse), or empty when the map is not defined on some vertex.
inline Simplex map_simplex(const SimplicialMapData& f, const Simplex& s)
{
    Simplex img;
    for (VertexId v : s) {
        auto it = f.vertex_map.find(v);
        if (it == f.vertex_map.end())
            fail(ErrorCode::InvalidMap, "vertex " + std::to_string(v) + " has no image");
        img.push_back(it->second);
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

inline void validate_map(const SimplicialMapData& f)
{
    for (VertexId v : f.source->vertices())
        if (!f.vertex_map.count(v))
            fail(ErrorCode::InvalidMap, "no image for vertex " + std::to_string(v));
    for (int d = 0; d <= f.source->dim(); ++d)
        for (const Simplex& s : f.source->simplices(d)) {
            Simplex img = map_simplex(f, s);
            if (!f.target->contains(img))
                fail(ErrorCode::InvalidMap, "image of " + simplex_to_string(s) + " is not a simplex of the target");
            const Integer& w = f.source->weight(s);
            const Integer& wi = f.target->weight(img);
            if (f.kind == MapKind::WeightPreserving ? (wi != w) : !divides(wi, w))
                fail(ErrorCode::InvalidMap,
                     "weight condition fails on " + simplex_to_string(s) + " for the declared map kind");
        }
}

inline SimplicialMapData identity_map(const ComplexPtr& K)
{
    SimplicialMapData f;
    f.source = K;
    f.target = K;
    for (VertexId v : K->vertices())
        f.vertex_map[v] = v;
    f.kind = MapKind::WeightPreserving;
    return f;
}

/// g after f.  The composite is weight-preserving only if both factors are.
inline SimplicialMapData compose(const SimplicialMapData& g, const SimplicialMapData& f)
{
    SimplicialMapData h;
    h.source = f.source;
    h.target = g.target;
    for (const auto& [v, w] : f.vertex_map)
        h.vertex_map[v] = g.vertex_map.at(w);
    h.kind = (f.kind == MapKind::WeightPreserving && g.kind == MapKind::WeightPreserving)
                 ? MapKind::WeightPreserving
                 : MapKind::Morphism;
    return h;
}

/// Chain map of a simplicial map in dimension n over the absolute canonical
/// bases.  Columns of dimension-collapsing simplices are zero; otherwise the
/// entry is sign * w(sigma)/w'(f(sigma)) with the sign the parity of sorting
/// the image vertex list.
inline IntMatrix induced_chain_map(const SimplicialMapData& f, int n)
{
    validate_map(f);
    const int rows = f.target->simplex_count(n);
    const int cols = f.source->simplex_count(n);
    IntMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        const Simplex& s = f.source->simplices(n)[j];
        std::vector<VertexId> img;
        for (VertexId v : s)
            img.push_back(f.vertex_map.at(v));
        int sign = canonicalize(img);
        if (sign == 0)
            continue; // collapsed to lower dimension
        Integer q = f.source->weight(s) / f.target->weight(img);
        m.at(f.target->index_of(img), j) = (sign > 0) ? q : -q;
    }
    return m;
}

/// Restriction of an absolute chain-map matrix to relative bases on both
/// sides.  Valid whenever the map sends the source subcomplex into the
/// target subcomplex, which holds for weight-preserving maps and singular
/// subcomplexes.
inline IntMatrix restrict_to_bases(const IntMatrix& full,
                                   const std::vector<Simplex>& src_full,
                                   const std::vector<Simplex>& src_sub,
                                   const std::vector<Simplex>& tgt_full,
                                   const std::vector<Simplex>& tgt_sub,
                                   std::map<Simplex, int> const& src_sub_index,
                                   std::map<Simplex, int> const& tgt_sub_index)
{
    IntMatrix m(static_cast<int>(tgt_sub.size()), static_cast<int>(src_sub.size()));
    for (int j = 0; j < static_cast<int>(src_full.size()); ++j) {
        auto jt = src_sub_index.find(src_full[j]);
        if (jt == src_sub_index.end())
            continue;
        for (int i = 0; i < static_cast<int>(tgt_full.size()); ++i) {
            if (sgn(full.at(i, j)) == 0)
                continue;
            auto it = tgt_sub_index.find(tgt_full[i]);
            if (it != tgt_sub_index.end())
                m.at(it->second, jt->second) = full.at(i, j);
        }
    }
    return m;
}

} // namespace orbihom
