#pragma once

// Homology of free and presented complexes: graded dimensions by linear
// algebra, presentations and vanishing by Gröbner bases.

#include <set>
#include <vector>

#include "kt/complex.hpp"
#include "kt/presented.hpp"

namespace kt {

/// dim_k H_n(X)_t.
inline std::size_t homology_dims(const GradedPolyRing& R, const FreeComplex& X, int n, int t)
{
    GradedPiece mid(R, X.term(n), t);
    if (mid.dim() == 0) return 0;
    std::size_t out = mid.dim();
    if (!X.term(n - 1).empty()) {
        GradedPiece below(R, X.term(n - 1), t);
        out -= graded_piece_matrix(R, X.diff(n), t, mid, below).rank(R.field());
    }
    if (!X.term(n + 1).empty()) {
        GradedPiece above(R, X.term(n + 1), t);
        out -= graded_piece_matrix(R, X.diff(n + 1), t, above, mid).rank(R.field());
    }
    return out;
}

/// Minimal generators of Z_n(X) as columns of a map into X_n.
inline GradedMatrix cycles(const GradedPolyRing& R, const FreeComplex& X, int n)
{
    if (X.term(n - 1).empty()) return GradedMatrix::identity(R, X.term(n));
    return syzygies(R, X.diff(n));
}

/// Internal degrees outside [lo, hi] carry no generators of H_n(X); an empty
/// window (lo > hi) means X_n = 0.
struct DegreeWindow {
    int lo = 0;
    int hi = -1;
};

inline DegreeWindow certified_window(const GradedPolyRing& R, const FreeComplex& X, int n)
{
    GradedFreeModule F = X.term(n);
    if (F.empty()) return {};
    GradedMatrix Z = cycles(R, X, n);
    DegreeWindow w;
    w.lo = *std::min_element(F.degrees.begin(), F.degrees.end());
    w.hi = w.lo;
    for (int d : Z.source().degrees) w.hi = std::max(w.hi, d);
    return w;
}

/// H_n(X) = 0, decided by membership of the cycle generators in B_n.
inline bool homology_vanishes(const GradedPolyRing& R, const FreeComplex& X, int n)
{
    GradedMatrix Z = cycles(R, X, n);
    if (Z.cols() == 0) return true;
    Membership B(R, X.term(n), X.diff(n + 1).columns());
    for (const auto& z : Z.columns())
        if (!B.contains(z)) return false;
    return true;
}

/// H_n(X) = 0 checked degree by degree on the certified window.
inline bool homology_vanishes_on_window(const GradedPolyRing& R, const FreeComplex& X, int n)
{
    DegreeWindow w = certified_window(R, X, n);
    for (int t = w.lo; t <= w.hi; ++t)
        if (homology_dims(R, X, n, t) != 0) return false;
    return true;
}

/// H_n(X) as the cokernel of a matrix on the cycle generators.
inline PresentedModule homology_presentation(const GradedPolyRing& R, const FreeComplex& X, int n)
{
    GradedMatrix Z = cycles(R, X, n);
    if (Z.cols() == 0) return PresentedModule::zero();
    GradedMatrix rel = syzygies(R, Z);
    GradedMatrix B = X.diff(n + 1);
    if (B.cols() > 0) {
        Lifter lift(R, Z);
        GradedMatrix lifted(Z.source(), B.source());
        for (std::size_t j = 0; j < B.cols(); ++j) {
            auto v = lift.solve(B.column(j));
            if (!v) throw ValidationError("boundary is not a cycle", "homology " + std::to_string(n));
            for (std::size_t i = 0; i < v->size(); ++i) lifted.at(i, j) = (*v)[i];
        }
        rel = mat::hstack(lifted, rel);
    }
    return prune(R, PresentedModule(rel)).module;
}

struct ComplexStats {
    std::optional<int> min_c;
    std::optional<int> max_c;
    std::optional<int> min; // lowest degree with nonzero homology; absent when acyclic
    std::set<int> supph;
    int width = 0;
};

inline ComplexStats complex_stats(const GradedPolyRing& R, const FreeComplex& X)
{
    ComplexStats s;
    if (X.empty()) return s;
    s.min_c = X.lo();
    s.max_c = X.hi();
    for (int n = X.lo(); n <= X.hi(); ++n)
        if (!homology_vanishes(R, X, n)) s.supph.insert(n);
    if (!s.supph.empty()) {
        s.min = *s.supph.begin();
        s.width = *s.supph.rbegin() - *s.supph.begin();
    }
    return s;
}

inline bool is_acyclic(const GradedPolyRing& R, const FreeComplex& X)
{
    if (X.empty()) return true;
    for (int n = X.lo(); n <= X.hi(); ++n)
        if (!homology_vanishes(R, X, n)) return false;
    return true;
}

struct QuasiIsoReport {
    bool quasi_iso = false;
    std::vector<int> nonzero_degrees; // homological degrees where the cone has homology
    std::vector<std::pair<int, DegreeWindow>> windows;
};

/// f is a quasi-isomorphism iff its cone is acyclic; each homological degree
/// is decided by Gröbner membership and cross-checked on its certified window.
inline QuasiIsoReport is_quasi_iso(const GradedPolyRing& R, const ChainMap& f)
{
    QuasiIsoReport r;
    FreeComplex C = cone(R, f);
    if (!C.empty())
        for (int n = C.lo(); n <= C.hi(); ++n) {
            bool exact = homology_vanishes(R, C, n);
            bool window = homology_vanishes_on_window(R, C, n);
            if (exact != window) throw std::logic_error("homology certificates disagree");
            r.windows.push_back({n, certified_window(R, C, n)});
            if (!exact) r.nonzero_degrees.push_back(n);
        }
    r.quasi_iso = r.nonzero_degrees.empty();
    return r;
}

/// Σ (-1)^n dim (X_n)_t and Σ (-1)^n dim H_n(X)_t.
inline std::pair<long long, long long> euler_characteristics(const GradedPolyRing& R, const FreeComplex& X, int t)
{
    long long terms = 0, hom = 0;
    for (const auto& [n, F] : X.terms()) {
        long long sign = (n % 2 == 0) ? 1 : -1;
        terms += sign * static_cast<long long>(GradedPiece(R, F, t).dim());
        hom += sign * static_cast<long long>(homology_dims(R, X, n, t));
    }
    return {terms, hom};
}

/// dim_k of the degree-t piece of the image of F_src in coker(rel_tgt) under d.
inline std::size_t induced_rank(const GradedPolyRing& R, const GradedMatrix& d, const GradedMatrix& rel_tgt, int t)
{
    GradedPiece tgt(R, d.target(), t);
    if (tgt.dim() == 0) return 0;
    GradedPiece src(R, d.source(), t), rsrc(R, rel_tgt.source(), t);
    DenseMatrix rel = graded_piece_matrix(R, rel_tgt, t, rsrc, tgt);
    DenseMatrix both = DenseMatrix::hcat(graded_piece_matrix(R, d, t, src, tgt), rel);
    return both.rank(R.field()) - rel.rank(R.field());
}

/// dim_k H_n(X)_t for a complex of presented modules.
inline std::size_t presented_homology_dims(const GradedPolyRing& R, const PresentedComplex& X, int n, int t)
{
    const PresentedModule* M = X.term(n);
    if (!M) return 0;
    std::size_t out = hilbert(R, *M, t);
    if (out == 0) return 0;
    if (const GradedMatrix* d = X.map(n)) out -= induced_rank(R, *d, X.term(n - 1)->relations, t);
    if (const GradedMatrix* d = X.map(n + 1)) out -= induced_rank(R, *d, M->relations, t);
    return out;
}

/// X ⊗ M: terms X_n ⊗ M presented by 1 ⊗ R_M, differentials ∂ ⊗ 1.
inline PresentedComplex tensor(const GradedPolyRing& R, const FreeComplex& X, const PresentedModule& M)
{
    PresentedComplex out;
    GradedMatrix idG = GradedMatrix::identity(R, M.generators());
    for (const auto& [n, F] : X.terms()) out.terms[n] = PresentedModule(mat::kronecker(R, GradedMatrix::identity(R, F), M.relations));
    for (const auto& [n, d] : X.diffs())
        if (out.term(n - 1)) out.maps[n] = mat::kronecker(R, d, idG);
    return out;
}

/// Hom(X, M) in homological indexing: degree -i holds Hom(X_i, M).
inline PresentedComplex hom(const GradedPolyRing& R, const FreeComplex& X, const PresentedModule& M) { return tensor(R, dual(X), M); }

/// Component of Hom(f, M) : Hom(X, M) -> Hom(Y, M) in homological degree -i, for f : Y -> X.
inline GradedMatrix hom_map(const GradedPolyRing& R, const ChainMap& f, const PresentedModule& M, int i)
{
    return mat::kronecker(R, mat::transpose(f.at(i)), GradedMatrix::identity(R, M.generators()));
}

/// H_n of a complex of presented modules as a presented module.
inline PresentedModule presented_homology(const GradedPolyRing& R, const PresentedComplex& X, int n)
{
    const PresentedModule* M = X.term(n);
    if (!M || M->ngens() == 0) return PresentedModule::zero();
    const GradedFreeModule& G = M->generators();
    std::vector<FreeElement> zs;
    const GradedMatrix* d = X.map(n);
    if (d && X.term(n - 1)) {
        GradedMatrix K = syzygies(R, mat::hstack(*d, X.term(n - 1)->relations));
        for (const auto& c : K.columns()) {
            FreeElement z = vec::slice(c, 0, G.rank());
            if (!vec::is_zero(z)) zs.push_back(z);
        }
        zs = minimal_generators(R, G, zs);
    } else {
        zs = GradedMatrix::identity(R, G).columns();
    }
    if (zs.empty()) return PresentedModule::zero();
    GradedFreeModule ZF;
    for (const auto& z : zs) ZF.degrees.push_back(*vec::degree(z, G));
    GradedMatrix Z = GradedMatrix::from_columns(G, ZF, zs);
    std::vector<FreeElement> bs = M->relations.columns();
    if (const GradedMatrix* e = X.map(n + 1))
        for (const auto& c : e->columns()) bs.push_back(c);
    Lifter lift(R, Z);
    std::vector<FreeElement> lifted;
    GradedFreeModule LF;
    for (const auto& b : bs) {
        if (vec::is_zero(b)) continue;
        auto v = lift.solve(b);
        if (!v) throw ValidationError("boundary is not a cycle", "homology " + std::to_string(n));
        LF.degrees.push_back(*vec::degree(b, G));
        lifted.push_back(*v);
    }
    GradedMatrix rel = mat::hstack(GradedMatrix::from_columns(ZF, LF, lifted), syzygies(R, Z));
    return prune(R, PresentedModule(rel)).module;
}

} // namespace kt
