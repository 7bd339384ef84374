#pragma once

// Finitely generated graded modules as cokernels, complexes of them, and
// power-annihilation tests.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kt/dense.hpp"
#include "kt/groebner.hpp"

namespace kt {

/// coker(R: F1 -> F0).
struct PresentedModule {
    GradedMatrix relations;

    PresentedModule() = default;
    explicit PresentedModule(GradedMatrix r) : relations(std::move(r)) {}

    const GradedFreeModule& generators() const noexcept { return relations.target(); }
    std::size_t ngens() const noexcept { return relations.rows(); }

    static PresentedModule free(const GradedFreeModule& F) { return PresentedModule(GradedMatrix(F, GradedFreeModule{})); }

    static PresentedModule zero() { return PresentedModule(GradedMatrix(GradedFreeModule{}, GradedFreeModule{})); }

    /// (S/I)(-a): one generator of degree a.
    static PresentedModule quotient(const std::vector<Polynomial>& ideal, int a = 0)
    {
        GradedFreeModule src;
        std::vector<Polynomial> row;
        for (const auto& f : ideal) {
            if (f.is_zero()) continue;
            if (!poly::is_homogeneous(f)) throw ValidationError("ideal generator is not homogeneous", "module");
            src.degrees.push_back(poly::degree(f) + a);
            row.push_back(f);
        }
        return PresentedModule(GradedMatrix::from_rows(GradedFreeModule({a}), src, {row}));
    }

    void validate(const std::string& where = "module") const { relations.validate(where); }
};

inline PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b)
{
    return PresentedModule(mat::block_diagonal(a.relations, b.relations));
}

/// dim_k M_t.
inline std::size_t hilbert(const GradedPolyRing& R, const PresentedModule& M, int t)
{
    GradedPiece f0(R, M.generators(), t);
    if (f0.dim() == 0) return 0;
    GradedPiece f1(R, M.relations.source(), t);
    return f0.dim() - graded_piece_matrix(R, M.relations, t, f1, f0).rank(R.field());
}

/// dim_k M_t counted as standard monomials of a Gröbner basis of the relations.
inline std::size_t hilbert_by_standard_monomials(const GradedPolyRing& R, const SubmoduleBasis& gb, int t)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < gb.ambient.rank(); ++i)
        for (const auto& m : R.monomials_of_degree(t - gb.ambient.degree(i))) {
            bool standard = true;
            for (const auto& g : gb.gens) {
                auto lt = *lead_term(g);
                if (lt.comp == i && R.divides(lt.mono, m)) {
                    standard = false;
                    break;
                }
            }
            if (standard) ++count;
        }
    return count;
}

inline SubmoduleBasis relation_basis(const GradedPolyRing& R, const PresentedModule& M)
{
    return groebner_basis(R, SubmoduleBasis{M.generators(), M.relations.columns()});
}

inline bool is_zero(const GradedPolyRing& R, const PresentedModule& M)
{
    Membership im(R, M.generators(), M.relations.columns());
    for (std::size_t i = 0; i < M.ngens(); ++i)
        if (!im.contains(vec::basis(M.ngens(), i, R))) return false;
    return true;
}

/// A presentation with no unit entries, and maps between the old and new
/// generators inducing inverse isomorphisms of cokernels.
struct PrunedModule {
    PresentedModule module;
    GradedMatrix to_new;   // F0_old -> F0_new
    GradedMatrix from_new; // F0_new -> F0_old
};

inline PrunedModule prune(const GradedPolyRing& R, const PresentedModule& M)
{
    const PrimeField& K = R.field();
    GradedMatrix rel = M.relations;
    GradedMatrix to_new = GradedMatrix::identity(R, M.generators());
    std::vector<std::size_t> keep_old;
    for (std::size_t i = 0; i < M.ngens(); ++i) keep_old.push_back(i);

    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> unit;
        for (std::size_t j = 0; j < rel.cols() && !unit; ++j)
            for (std::size_t i = 0; i < rel.rows() && !unit; ++i)
                if (poly::constant_term(rel.at(i, j))) unit = {i, j};
        if (!unit) break;
        auto [pi, pj] = *unit;
        Coeff c = poly::constant_term(rel.at(pi, pj));
        Coeff ninv = K.neg(K.inv(c));
        // e_pi = -(1/c) Σ_{k≠pi} r_{k,pj} e_k in the cokernel.
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i < rel.rows(); ++i)
            if (i != pi) rows.push_back(i);
        for (std::size_t j = 0; j < rel.cols(); ++j)
            if (j != pj) cols.push_back(j);
        GradedMatrix next = mat::submatrix(rel, rows, cols);
        for (std::size_t a = 0; a < rows.size(); ++a) {
            Polynomial sub = poly::scale(R, rel.at(rows[a], pj), ninv);
            for (std::size_t b = 0; b < cols.size(); ++b)
                next.at(a, b) = poly::add(R, next.at(a, b), poly::mul(R, sub, rel.at(pi, cols[b])));
        }
        GradedMatrix proj = mat::submatrix(GradedMatrix::identity(R, rel.target()), rows, [&] {
            std::vector<std::size_t> all;
            for (std::size_t i = 0; i < rel.rows(); ++i) all.push_back(i);
            return all;
        }());
        for (std::size_t a = 0; a < rows.size(); ++a) proj.at(a, pi) = poly::scale(R, rel.at(rows[a], pj), ninv);
        to_new = mat::multiply(R, proj, to_new);
        keep_old.erase(keep_old.begin() + static_cast<long>(pi));
        rel = next;
    }

    std::vector<FreeElement> cols;
    for (auto& c : rel.columns())
        if (!vec::is_zero(c)) cols.push_back(c);
    cols = minimal_generators(R, rel.target(), cols);
    GradedFreeModule src;
    for (const auto& c : cols) src.degrees.push_back(*vec::degree(c, rel.target()));
    PresentedModule out(GradedMatrix::from_columns(rel.target(), src, cols));

    GradedMatrix from_new(M.generators(), rel.target());
    for (std::size_t a = 0; a < keep_old.size(); ++a) from_new.at(keep_old[a], a) = poly::constant(R, 1);
    return PrunedModule{out, to_new, from_new};
}

/// Smallest n <= cap with s^n M = 0.
inline std::optional<int> annihilates_power(const GradedPolyRing& R, const Polynomial& s, const PresentedModule& Q, int cap)
{
    if (cap < 1) throw ValidationError("cap must be at least 1", "annihilates_power");
    if (!poly::is_homogeneous(s)) throw ValidationError("element is not homogeneous", "annihilates_power");
    Membership im(R, Q.generators(), Q.relations.columns());
    Polynomial sn = s;
    for (int n = 1; n <= cap; ++n) {
        bool all = true;
        for (std::size_t i = 0; i < Q.ngens() && all; ++i) {
            FreeElement v(Q.ngens());
            v[i] = sn;
            all = im.contains(v);
        }
        if (all) return n;
        sn = poly::mul(R, sn, s);
    }
    return std::nullopt;
}

/// Generators of (N :_F s) for a submodule N of F.
inline std::vector<FreeElement> colon(const GradedPolyRing& R, const GradedFreeModule& F, const std::vector<FreeElement>& N, const Polynomial& s)
{
    int ds = poly::degree(s);
    GradedFreeModule shifted;
    for (int a : F.degrees) shifted.degrees.push_back(a + ds);
    GradedFreeModule ngen;
    for (const auto& n : N) ngen.degrees.push_back(*vec::degree(n, F));
    GradedMatrix m(F, direct_sum(shifted, ngen));
    for (std::size_t i = 0; i < F.rank(); ++i) m.at(i, i) = s;
    for (std::size_t k = 0; k < N.size(); ++k)
        for (std::size_t i = 0; i < F.rank(); ++i) m.at(i, F.rank() + k) = N[k][i];
    std::vector<FreeElement> out;
    for (const auto& k : kernel_generators(R, m)) {
        auto v = vec::slice(k, 0, F.rank());
        if (!vec::is_zero(v)) out.push_back(v);
    }
    for (const auto& n : N) out.push_back(n);
    return minimal_generators(R, F, out);
}

enum class PowerStatus { yes, no, cap_exhausted };

struct PowerAnnihilation {
    PowerStatus status = PowerStatus::no;
    int n = 0; // the exponent when status is yes, the last stage examined otherwise
};

/// Decides whether some power of s kills Q. The chain (0 :_Q s^n) is
/// increasing; once two consecutive members agree it is constant, so a
/// stable proper member proves that no power works.
inline PowerAnnihilation power_annihilation(const GradedPolyRing& R, const Polynomial& s, const PresentedModule& Q, int cap)
{
    if (cap < 1) throw ValidationError("cap must be at least 1", "support");
    const GradedFreeModule& F = Q.generators();
    std::vector<FreeElement> K = Q.relations.columns();
    auto everything = [&](const std::vector<FreeElement>& gens) {
        Membership m(R, F, gens);
        for (std::size_t i = 0; i < F.rank(); ++i)
            if (!m.contains(vec::basis(F.rank(), i, R))) return false;
        return true;
    };
    if (everything(K)) return {PowerStatus::yes, 1};
    for (int n = 1; n <= cap; ++n) {
        auto next = colon(R, F, K, s);
        if (everything(next)) return {PowerStatus::yes, n};
        Membership cur(R, F, K);
        bool same = std::all_of(next.begin(), next.end(), [&](const FreeElement& v) { return cur.contains(v); });
        if (same) return {PowerStatus::no, n};
        K = std::move(next);
    }
    return {PowerStatus::cap_exhausted, cap};
}

/// Terms are presented modules; differentials are given on the generators.
struct PresentedComplex {
    std::map<int, PresentedModule> terms;
    std::map<int, GradedMatrix> maps; // maps[n]: F0(X_n) -> F0(X_{n-1})

    bool empty() const noexcept { return terms.empty(); }
    int lo() const { return terms.begin()->first; }
    int hi() const { return terms.rbegin()->first; }

    const PresentedModule* term(int n) const
    {
        auto it = terms.find(n);
        return it == terms.end() ? nullptr : &it->second;
    }
    const GradedMatrix* map(int n) const
    {
        auto it = maps.find(n);
        return it == maps.end() ? nullptr : &it->second;
    }

    /// Differentials descend to cokernels and compose to zero there.
    void validate(const GradedPolyRing& R) const
    {
        for (const auto& [n, M] : terms) M.validate("term " + std::to_string(n));
        for (const auto& [n, d] : maps) {
            const PresentedModule* src = term(n);
            const PresentedModule* tgt = term(n - 1);
            if (!src || !tgt) throw ValidationError("differential without both terms", "map " + std::to_string(n));
            if (!(d.source() == src->generators()) || !(d.target() == tgt->generators()))
                throw ValidationError("differential does not match term generators", "map " + std::to_string(n));
            d.validate("map " + std::to_string(n));
            Membership im(R, tgt->generators(), tgt->relations.columns());
            for (const auto& c : mat::multiply(R, d, src->relations).columns())
                if (!im.contains(c)) throw ValidationError("differential does not descend to the cokernel", "map " + std::to_string(n));
            if (const GradedMatrix* e = map(n - 1)) {
                const PresentedModule* t2 = term(n - 2);
                Membership im2(R, t2->generators(), t2->relations.columns());
                for (const auto& c : mat::multiply(R, *e, d).columns())
                    if (!im2.contains(c)) throw ValidationError("consecutive differentials do not compose to zero", "map " + std::to_string(n));
            }
        }
    }
};

} // namespace kt
