#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbihom/chains.hpp"
#include "orbihom/complex.hpp"
#include "orbihom/smith.hpp"

namespace orbihom {

enum class Theory { WT, ST, STStage };

/// Which homology theory to compute.  The stage applies to STStage only;
/// std::nullopt is the infinity sentinel.  Stage 0 is definitionally wt
/// (relative to the empty complex) and stage infinity is st.
struct TheorySelector {
    Theory kind = Theory::WT;
    std::optional<Integer> stage;

    static TheorySelector wt() { return {Theory::WT, std::nullopt}; }
    static TheorySelector st() { return {Theory::ST, std::nullopt}; }
    static TheorySelector st_stage(std::optional<Integer> n) { return {Theory::STStage, std::move(n)}; }

    TheorySelector canonicalized() const
    {
        if (kind != Theory::STStage)
            return *this;
        if (!stage.has_value())
            return st();
        if (sgn(*stage) == 0)
            return wt();
        return *this;
    }

    std::string name() const
    {
        TheorySelector c = canonicalized();
        switch (c.kind) {
            case Theory::WT: return "wt";
            case Theory::ST: return "st";
            case Theory::STStage: return "st-stage=" + c.stage->get_str();
        }
        return "?";
    }
};

/// Relative subcomplex the theory computes against (empty for wt).
inline WeightedComplex theory_subcomplex(const WeightedComplex& K, const TheorySelector& t)
{
    TheorySelector c = t.canonicalized();
    switch (c.kind) {
        case Theory::WT: return WeightedComplex();
        case Theory::ST: return singular_subcomplex(K);
        case Theory::STStage: return n_stage_subcomplex(K, c.stage);
    }
    return WeightedComplex();
}

inline ChainComplexData theory_chain_complex(const WeightedComplex& K, const TheorySelector& t)
{
    WeightedComplex sub = theory_subcomplex(K, t);
    return chain_complex(K, sub.empty() ? nullptr : &sub);
}

struct HomologyProfile {
    TheorySelector theory;
    std::vector<HomologyGroup> groups; // groups[n], n = 0..dim(K); higher dims are zero

    bool has_witnesses = false;
    std::vector<IntMatrix> witness_chains;          // [n]: basis_size(n) x #generators
    std::vector<std::vector<Simplex>> basis_labels; // chain basis the witnesses are written over

    const HomologyGroup& group(int n) const
    {
        static const HomologyGroup kTrivial;
        if (n < 0 || n >= static_cast<int>(groups.size()))
            return kTrivial;
        return groups[n];
    }

    bool same_groups(const HomologyProfile& other) const
    {
        const int top = std::max<int>(static_cast<int>(groups.size()), static_cast<int>(other.groups.size()));
        for (int n = 0; n < top; ++n)
            if (group(n) != other.group(n))
                return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Generator bases.  For each dimension the kernel of d_n is read off the SNF
// transforms of d_n; the image of d_{n+1} is rewritten in kernel coordinates
// and diagonalized, which exhibits H_n as a direct sum of cyclic groups with
// explicit representative cycles and a coordinate map for arbitrary cycles.
// ---------------------------------------------------------------------------

struct DimBasis {
    std::vector<Integer> orders; // per generator: 0 = free, d >= 2 = torsion (torsion first, ascending)
    IntMatrix generators;        // basis_size(n) x #generators, columns are representative cycles

    IntMatrix vinv_outer; // Vinv of SNF(d_n)
    int rank_outer = 0;
    IntMatrix u_inner;           // U of SNF(d_{n+1} in kernel coordinates), k x k
    std::vector<Integer> diag;   // invariant factor per diagonalized coordinate (0 past rank)
    std::vector<int> gen_coord;  // diagonalized coordinates that survive as generators
};

struct HomologyBasis {
    ChainComplexData cc;
    std::vector<DimBasis> dims;
};

inline HomologyBasis compute_homology_basis(ChainComplexData cc)
{
    HomologyBasis hb;
    const int top = cc.dim();
    hb.dims.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        DimBasis& db = hb.dims[n];
        const IntMatrix& A = cc.boundaries[n];
        const int cn = cc.basis_size(n);
        IntMatrix B = (n + 1 <= top) ? cc.boundaries[n + 1] : IntMatrix(cn, 0);

        SmithDecomposition sa = smith_normal_form(A, true);
        db.vinv_outer = std::move(sa.Vinv);
        db.rank_outer = sa.rank;
        const int k = cn - sa.rank;

        IntMatrix Z = db.vinv_outer * B;
        IntMatrix Y(k, B.cols());
        for (int i = 0; i < sa.rank; ++i)
            for (int j = 0; j < B.cols(); ++j)
                if (sgn(Z.at(i, j)) != 0)
                    fail(ErrorCode::CompositionNotZero, "image of d_{n+1} is not contained in ker d_n");
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < B.cols(); ++j)
                Y.at(i, j) = Z.at(sa.rank + i, j);

        SmithDecomposition sy = smith_normal_form(Y, true);
        db.u_inner = std::move(sy.U);
        db.diag.assign(k, Integer(0));
        for (int i = 0; i < sy.rank; ++i)
            db.diag[i] = sy.D.at(i, i);

        // Kernel basis of d_n: trailing k columns of V_A.  Generators are the
        // kernel basis re-expressed through Uinv of the inner SNF.
        IntMatrix G(cn, k);
        for (int i = 0; i < cn; ++i)
            for (int j = 0; j < k; ++j) {
                Integer acc = 0;
                for (int l = 0; l < k; ++l) {
                    const Integer& a = sa.V.at(i, sa.rank + l);
                    const Integer& b = sy.Uinv.at(l, j);
                    if (sgn(a) != 0 && sgn(b) != 0)
                        acc += a * b;
                }
                G.at(i, j) = acc;
            }
        for (int i = 0; i < k; ++i)
            if (db.diag[i] != 1)
                db.gen_coord.push_back(i);
        db.generators = IntMatrix(cn, static_cast<int>(db.gen_coord.size()));
        db.orders.reserve(db.gen_coord.size());
        for (int j = 0; j < static_cast<int>(db.gen_coord.size()); ++j) {
            db.orders.push_back(db.diag[db.gen_coord[j]]);
            for (int i = 0; i < cn; ++i)
                db.generators.at(i, j) = G.at(i, db.gen_coord[j]);
        }
    }
    hb.cc = std::move(cc);
    return hb;
}

inline HomologyGroup group_of(const DimBasis& db)
{
    HomologyGroup g;
    for (const Integer& d : db.orders) {
        if (sgn(d) == 0)
            ++g.rank;
        else
            g.torsion.push_back(d);
    }
    return g;
}

/// Coordinates of a cycle in the generator basis, torsion coordinates
/// reduced into [0, d).
inline std::vector<Integer> coords_of_cycle(const HomologyBasis& hb, int n, const std::vector<Integer>& cycle)
{
    if (n < 0 || n > hb.cc.dim()) {
        if (!cycle.empty())
            fail(ErrorCode::DimensionMismatch, "cycle outside chain complex dimensions");
        return {};
    }
    const DimBasis& db = hb.dims[n];
    std::vector<Integer> zt = db.vinv_outer.mul_vec(cycle);
    for (int i = 0; i < db.rank_outer; ++i)
        if (sgn(zt[i]) != 0)
            fail(ErrorCode::CompositionNotZero, "vector is not a cycle");
    std::vector<Integer> y(zt.begin() + db.rank_outer, zt.end());
    std::vector<Integer> u = db.u_inner.mul_vec(y);
    std::vector<Integer> out;
    out.reserve(db.gen_coord.size());
    for (std::size_t j = 0; j < db.gen_coord.size(); ++j) {
        Integer c = u[db.gen_coord[j]];
        if (db.orders[j] >= 2)
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), db.orders[j].get_mpz_t());
        out.push_back(std::move(c));
    }
    return out;
}

inline bool cycles_homologous(const HomologyBasis& hb, int n, const std::vector<Integer>& a,
                              const std::vector<Integer>& b)
{
    return coords_of_cycle(hb, n, a) == coords_of_cycle(hb, n, b);
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

inline HomologyProfile profile_from_chain(const ChainComplexData& cc, const TheorySelector& t,
                                          bool want_witnesses = false)
{
    HomologyProfile p;
    p.theory = t;
    const int top = cc.dim();
    if (top < 0)
        return p;
    p.groups.resize(top + 1);
    if (want_witnesses) {
        HomologyBasis hb = compute_homology_basis(cc);
        p.has_witnesses = true;
        p.witness_chains.resize(top + 1);
        p.basis_labels = hb.cc.basis;
        for (int n = 0; n <= top; ++n) {
            p.groups[n] = group_of(hb.dims[n]);
            p.witness_chains[n] = hb.dims[n].generators;
        }
        return p;
    }
    std::vector<int> ranks(top + 2, 0);
    std::vector<std::vector<Integer>> factors(top + 2);
    for (int n = 0; n <= top; ++n) {
        SmithDecomposition s = smith_normal_form(cc.boundaries[n], false);
        ranks[n] = s.rank;
        factors[n] = s.invariant_factors();
    }
    for (int n = 0; n <= top; ++n) {
        p.groups[n].rank = cc.basis_size(n) - ranks[n] - ranks[n + 1];
        if (n + 1 <= top)
            for (const Integer& d : factors[n + 1])
                if (d >= 2)
                    p.groups[n].torsion.push_back(d);
    }
    return p;
}

inline HomologyProfile profile_for(const WeightedComplex& K, const TheorySelector& t,
                                   bool want_witnesses = false)
{
    return profile_from_chain(theory_chain_complex(K, t), t, want_witnesses);
}

inline HomologyProfile wt_homology(const WeightedComplex& K, bool want_witnesses = false)
{
    return profile_for(K, TheorySelector::wt(), want_witnesses);
}

inline HomologyProfile st_homology(const WeightedComplex& K, bool want_witnesses = false)
{
    return profile_for(K, TheorySelector::st(), want_witnesses);
}

inline HomologyProfile n_stage_st_homology(const WeightedComplex& K, std::optional<Integer> stage,
                                           bool want_witnesses = false)
{
    return profile_for(K, TheorySelector::st_stage(std::move(stage)), want_witnesses);
}

// ---------------------------------------------------------------------------
// Coefficients
// ---------------------------------------------------------------------------

struct CoefficientRing {
    enum class Kind { Integers, Rationals, PrimeField, ModRing } kind = Kind::Integers;
    Integer modulus;

    static CoefficientRing integers() { return {Kind::Integers, 0}; }
    static CoefficientRing rationals() { return {Kind::Rationals, 0}; }

    static CoefficientRing prime_field(Integer p)
    {
        if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
            fail(ErrorCode::InvalidSpec, "F_p needs a prime, got " + p.get_str());
        return {Kind::PrimeField, std::move(p)};
    }

    static CoefficientRing mod_ring(Integer m)
    {
        if (m < 2)
            fail(ErrorCode::InvalidSpec, "Z/m needs m >= 2");
        return {Kind::ModRing, std::move(m)};
    }

    std::string name() const
    {
        switch (kind) {
            case Kind::Integers:   return "Z";
            case Kind::Rationals:  return "Q";
            case Kind::PrimeField: return "Fp=" + modulus.get_str();
            case Kind::ModRing:    return "Zm=" + modulus.get_str();
        }
        return "?";
    }
};

/// Universal-coefficient transform of the integral profile:
/// H_j(-; G) = (H_j x G) + Tor(H_{j-1}, G).  Field profiles are reported as
/// vector-space dimensions (rank field, empty torsion); Z/m profiles as
/// finite abelian groups in invariant-factor form.
inline HomologyProfile homology_with_coefficients(const WeightedComplex& K, const TheorySelector& t,
                                                  const CoefficientRing& ring)
{
    HomologyProfile integral = profile_for(K, t);
    if (ring.kind == CoefficientRing::Kind::Integers)
        return integral;

    HomologyProfile p;
    p.theory = t;
    p.groups.resize(integral.groups.size());
    for (int n = 0; n < static_cast<int>(integral.groups.size()); ++n) {
        const HomologyGroup& here = integral.group(n);
        const HomologyGroup& below = integral.group(n - 1);
        switch (ring.kind) {
            case CoefficientRing::Kind::Rationals:
                p.groups[n].rank = here.rank;
                break;
            case CoefficientRing::Kind::PrimeField: {
                int dim = here.rank;
                for (const Integer& d : here.torsion)
                    if (divides(ring.modulus, d))
                        ++dim;
                for (const Integer& d : below.torsion)
                    if (divides(ring.modulus, d))
                        ++dim;
                p.groups[n].rank = dim;
                break;
            }
            case CoefficientRing::Kind::ModRing: {
                std::vector<Integer> orders;
                for (int i = 0; i < here.rank; ++i)
                    orders.push_back(ring.modulus); // Z x Z/m = Z/m
                for (const Integer& d : here.torsion)
                    orders.push_back(gcd(d, ring.modulus)); // Z/d x Z/m
                for (const Integer& d : below.torsion)
                    orders.push_back(gcd(d, ring.modulus)); // Tor(Z/d, Z/m)
                p.groups[n] = normalize_cyclic_sum(orders);
                break;
            }
            case CoefficientRing::Kind::Integers:
                break;
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Induced maps on homology
// ---------------------------------------------------------------------------

inline void reduce_mod_orders(IntMatrix& m, const std::vector<Integer>& row_orders)
{
    for (int i = 0; i < m.rows(); ++i) {
        if (row_orders[i] < 2)
            continue;
        for (int j = 0; j < m.cols(); ++j)
            mpz_fdiv_r(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), row_orders[i].get_mpz_t());
    }
}

/// Matrices of f_* per dimension, written in the SNF-derived generator bases
/// of source and target homology.  Torsion rows are reduced mod their order.
/// st-homology (and finite nonzero stages) only accept weight-preserving
/// maps; a morphism may send singular simplices outside the singular part.
inline std::vector<IntMatrix> induced_homology_map(const SimplicialMapData& f, const TheorySelector& t)
{
    validate_map(f);
    TheorySelector c = t.canonicalized();
    if (c.kind != Theory::WT && f.kind == MapKind::Morphism)
        fail(ErrorCode::MorphismOnStHomology, "morphisms do not act on st-homology");

    HomologyBasis src = compute_homology_basis(theory_chain_complex(*f.source, t));
    HomologyBasis tgt = compute_homology_basis(theory_chain_complex(*f.target, t));

    const int top = f.source->dim();
    std::vector<IntMatrix> out(top + 1);
    for (int n = 0; n <= top; ++n) {
        IntMatrix chain_map = induced_chain_map(f, n);
        if (c.kind != Theory::WT) {
            std::map<Simplex, int> empty_index;
            const bool tgt_has = n <= tgt.cc.dim();
            chain_map = restrict_to_bases(chain_map, f.source->simplices(n), src.cc.basis[n],
                                          f.target->simplices(n),
                                          tgt_has ? tgt.cc.basis[n] : std::vector<Simplex>{},
                                          src.cc.index[n], tgt_has ? tgt.cc.index[n] : empty_index);
        }
        const int m_src = src.dims[n].generators.cols();
        const int m_tgt = (n <= tgt.cc.dim()) ? tgt.dims[n].generators.cols() : 0;
        IntMatrix F(m_tgt, m_src);
        for (int j = 0; j < m_src; ++j) {
            std::vector<Integer> g = src.dims[n].generators.column(j);
            std::vector<Integer> img = chain_map.mul_vec(g);
            if (m_tgt > 0) {
                std::vector<Integer> coords = coords_of_cycle(tgt, n, img);
                for (int i = 0; i < m_tgt; ++i)
                    F.at(i, j) = coords[i];
            } else if (n > tgt.cc.dim()) {
                for (const Integer& x : img)
                    if (sgn(x) != 0)
                        fail(ErrorCode::InvalidMap, "image chain escapes the target complex");
            }
        }
        out[n] = std::move(F);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural cross-checks
// ---------------------------------------------------------------------------

/// Alternating sum of st-homology ranks against the alternating count of
/// regular and semi-regular simplices.  The two sides agree on any weighted
/// complex.
struct EulerCheck {
    long long lhs = 0;
    long long rhs = 0;
    bool ok = false;
};

inline EulerCheck euler_check(const WeightedComplex& K)
{
    EulerCheck e;
    HomologyProfile st = st_homology(K);
    int sign = 1;
    for (const HomologyGroup& g : st.groups) {
        e.lhs += sign * g.rank;
        sign = -sign;
    }
    sign = 1;
    for (int d = 0; d <= K.dim(); ++d) {
        ClassCounts c = class_counts(K, d);
        e.rhs += sign * (c.regular + c.semi_regular);
        sign = -sign;
    }
    e.ok = (e.lhs == e.rhs);
    return e;
}

/// Rank-level exactness of the long exact sequence of (K, Sigma K): the
/// alternating rank sum of the three homology columns vanishes.
inline bool les_rank_check(const WeightedComplex& K)
{
    WeightedComplex sub = singular_subcomplex(K);
    HomologyProfile hk = wt_homology(K);
    HomologyProfile hrel = st_homology(K);
    HomologyProfile hsub;
    if (!sub.empty())
        hsub = wt_homology(sub);
    long long total = 0;
    int sign = 1;
    for (int n = 0; n <= K.dim(); ++n) {
        total += sign * (static_cast<long long>(hsub.group(n).rank) - hk.group(n).rank + hrel.group(n).rank);
        sign = -sign;
    }
    return total == 0;
}

/// All-weights-one copy of K over the same simplices (classical simplicial
/// chain complex), used as the independent comparison path for the
/// coefficient-isomorphism checks.
inline WeightedComplex strip_weights(const WeightedComplex& K)
{
    std::map<Simplex, Integer> table;
    for (int d = 0; d <= K.dim(); ++d)
        for (const Simplex& s : K.simplices(d))
            table.emplace(s, 1);
    return WeightedComplex::from_weighted_simplices(table);
}

} // namespace orbihom
