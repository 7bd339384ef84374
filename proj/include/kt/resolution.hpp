#pragma once

// Minimal free resolutions, projective dimension, grade, resolutions of
// complexes of presented modules, and the horseshoe construction.

#include <algorithm>
#include <vector>

#include "kt/homology.hpp"

namespace kt {

struct FreeResolution {
    FreeComplex complex;
    GradedMatrix augmentation; // P_0 -> generators of the resolved module
    bool finished = false;
};

/// Minimal graded free resolution of M, at most max_len differentials deep.
inline FreeResolution free_resolution(const GradedPolyRing& R, const PresentedModule& M, int max_len)
{
    PrunedModule pm = prune(R, M);
    std::map<int, GradedFreeModule> terms;
    std::map<int, GradedMatrix> diffs;
    FreeResolution out;
    out.augmentation = pm.from_new;
    if (pm.module.ngens() == 0) {
        out.finished = true;
        return out;
    }
    terms[0] = pm.module.generators();
    GradedMatrix d = pm.module.relations;
    int n = 1;
    for (; d.cols() > 0; ++n) {
        if (n > max_len) break;
        terms[n] = d.source();
        diffs[n] = d;
        d = syzygies(R, d);
    }
    out.finished = d.cols() == 0;
    out.complex = FreeComplex::unchecked(terms, diffs);
    return out;
}

/// pd(M); -1 for the zero module.
inline int pd(const GradedPolyRing& R, const PresentedModule& M)
{
    int cap = static_cast<int>(R.nvars()) + 1;
    auto res = free_resolution(R, M, cap);
    if (!res.finished) throw SearchCapExhausted("pd", "resolution longer than " + std::to_string(cap));
    return res.complex.empty() ? -1 : res.complex.hi();
}

inline bool is_unit_ideal(const GradedPolyRing& R, const std::vector<Polynomial>& I)
{
    return is_zero(R, PresentedModule::quotient(I));
}

/// Least i with Ext^i(S/I, S) != 0.
inline int grade(const GradedPolyRing& R, const std::vector<Polynomial>& I)
{
    if (is_unit_ideal(R, I)) throw ValidationError("grade of the unit ideal is undefined", "grade");
    auto res = free_resolution(R, PresentedModule::quotient(I), static_cast<int>(R.nvars()) + 1);
    FreeComplex D = dual(res.complex);
    for (int i = 0; i <= res.complex.hi(); ++i)
        if (!homology_vanishes(R, D, -i)) return i;
    throw std::logic_error("dual of a nonzero resolution is exact");
}

inline bool is_perfect(const GradedPolyRing& R, const std::vector<Polynomial>& I)
{
    return grade(R, I) == pd(R, PresentedModule::quotient(I));
}

/// A free complex P with maps π_n : P_n -> F0(X_n) inducing a quasi-isomorphism.
struct ComplexResolution {
    FreeComplex P;
    std::map<int, GradedMatrix> pi;
};

inline bool is_free(const PresentedComplex& X)
{
    return std::all_of(X.terms.begin(), X.terms.end(), [](const auto& kv) { return kv.second.relations.cols() == 0; });
}

inline FreeComplex as_free_complex(const GradedPolyRing& R, const PresentedComplex& X)
{
    std::map<int, GradedFreeModule> t;
    for (const auto& [n, M] : X.terms) t[n] = M.generators();
    return FreeComplex(R, t, X.maps);
}

inline PresentedComplex as_presented(const FreeComplex& X)
{
    PresentedComplex out;
    for (const auto& [n, F] : X.terms()) out.terms[n] = PresentedModule::free(F);
    for (const auto& [n, F] : X.terms())
        if (X.terms().count(n - 1)) out.maps[n] = X.diff(n);
    return out;
}

/// Prunes every term and transports the differentials.
inline std::pair<PresentedComplex, std::map<int, GradedMatrix>> prune_complex(const GradedPolyRing& R, const PresentedComplex& X)
{
    std::map<int, PrunedModule> pr;
    for (const auto& [n, M] : X.terms) pr.emplace(n, prune(R, M));
    PresentedComplex Y;
    std::map<int, GradedMatrix> from_new;
    for (const auto& [n, p] : pr) {
        if (p.module.ngens() == 0) continue;
        Y.terms[n] = p.module;
        from_new[n] = p.from_new;
    }
    for (const auto& [n, d] : X.maps) {
        if (!Y.terms.count(n) || !Y.terms.count(n - 1)) continue;
        Y.maps[n] = mat::multiply(R, pr.at(n - 1).to_new, mat::multiply(R, d, pr.at(n).from_new));
    }
    return {Y, from_new};
}

/// Free resolution of a bounded complex of presented modules: P_n is
/// generated by {(p, x) : ∂p = 0, π p - d x ∈ im R_{n-1}} in P_{n-1} ⊕ F_n,
/// modulo 0 ⊕ im R_n.
inline ComplexResolution resolve_complex(const GradedPolyRing& R, const PresentedComplex& X)
{
    X.validate(R);
    if (X.empty()) return {};
    if (is_free(X)) {
        FreeComplex P = as_free_complex(R, X);
        std::map<int, GradedMatrix> pi;
        for (const auto& [n, F] : P.terms()) pi[n] = GradedMatrix::identity(R, F);
        return {P, pi};
    }
    auto [Y, from_new] = prune_complex(R, X);
    std::map<int, GradedFreeModule> terms;
    std::map<int, GradedMatrix> diffs, pi;
    if (Y.empty()) return {};
    int lo = Y.lo(), hi = Y.hi();
    int cap = hi + static_cast<int>(R.nvars()) + 2;
    auto F = [&](int n) { return Y.term(n) ? Y.term(n)->generators() : GradedFreeModule{}; };
    auto Rel = [&](int n) { return Y.term(n) ? Y.term(n)->relations : GradedMatrix(); };
    auto d = [&](int n) { return Y.map(n) ? *Y.map(n) : GradedMatrix(F(n - 1), F(n)); };
    auto Pterm = [&](int n) { return terms.count(n) ? terms[n] : GradedFreeModule{}; };
    auto Ppi = [&](int n) { return pi.count(n) ? pi[n] : GradedMatrix(F(n), Pterm(n)); };

    for (int n = lo;; ++n) {
        if (n > cap) throw SearchCapExhausted("resolve_complex", "no termination by degree " + std::to_string(cap));
        GradedFreeModule Pp = Pterm(n - 1), Fn = F(n), Pq = Pterm(n - 2), Fp = F(n - 1);
        GradedMatrix Rp = Y.term(n - 1) ? Rel(n - 1) : GradedMatrix(Fp, GradedFreeModule{});
        GradedFreeModule G = Rp.source();
        GradedFreeModule src = direct_sum(direct_sum(Pp, Fn), G);
        GradedFreeModule tgt = direct_sum(Pq, Fp);
        GradedMatrix B(tgt, src);
        GradedMatrix dP = diffs.count(n - 1) ? diffs[n - 1] : GradedMatrix(Pq, Pp);
        GradedMatrix piP = Ppi(n - 1);
        GradedMatrix dn = d(n);
        for (std::size_t i = 0; i < Pq.rank(); ++i)
            for (std::size_t j = 0; j < Pp.rank(); ++j) B.at(i, j) = dP.at(i, j);
        for (std::size_t i = 0; i < Fp.rank(); ++i) {
            for (std::size_t j = 0; j < Pp.rank(); ++j) B.at(Pq.rank() + i, j) = piP.at(i, j);
            for (std::size_t j = 0; j < Fn.rank(); ++j) B.at(Pq.rank() + i, Pp.rank() + j) = poly::neg(R, dn.at(i, j));
            for (std::size_t j = 0; j < G.rank(); ++j) B.at(Pq.rank() + i, Pp.rank() + Fn.rank() + j) = poly::neg(R, Rp.at(i, j));
        }
        GradedFreeModule W = direct_sum(Pp, Fn);
        std::vector<FreeElement> gens;
        if (tgt.empty()) {
            for (std::size_t k = 0; k < W.rank(); ++k) gens.push_back(vec::basis(W.rank(), k, R));
        } else {
            for (const auto& k : kernel_generators(R, B)) {
                auto w = vec::slice(k, 0, W.rank());
                if (!vec::is_zero(w)) gens.push_back(w);
            }
        }
        std::vector<FreeElement> base;
        if (Y.term(n))
            for (const auto& c : Rel(n).columns()) base.push_back(vec::concat(FreeElement(Pp.rank()), c));
        gens = minimal_generators(R, W, gens, base);
        if (gens.empty()) {
            if (n > hi) break;
            continue;
        }
        GradedFreeModule Pn;
        for (const auto& g : gens) Pn.degrees.push_back(*vec::degree(g, W));
        GradedMatrix dnew(Pp, Pn), pinew(Fn, Pn);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            for (std::size_t i = 0; i < Pp.rank(); ++i) dnew.at(i, j) = gens[j][i];
            for (std::size_t i = 0; i < Fn.rank(); ++i) pinew.at(i, j) = gens[j][Pp.rank() + i];
        }
        terms[n] = Pn;
        if (!Pp.empty()) diffs[n] = dnew;
        if (!Fn.empty()) pi[n] = pinew;
    }
    std::map<int, GradedMatrix> pi_orig;
    for (const auto& [n, m] : pi) pi_orig[n] = mat::multiply(R, from_new.at(n), m);
    return {FreeComplex(R, terms, diffs), pi_orig};
}

struct ComplexQuasiIsoReport {
    bool chain_map = false;
    bool quasi_iso = false;
    std::vector<int> failing_degrees;
};

/// Checks that π : P -> X commutes modulo the presentations and induces
/// isomorphisms on homology, degree by degree, by membership tests.
inline ComplexQuasiIsoReport verify_quasi_iso(const GradedPolyRing& R, const FreeComplex& P, const std::map<int, GradedMatrix>& pi, const PresentedComplex& X)
{
    ComplexQuasiIsoReport rep;
    auto F = [&](int n) { return X.term(n) ? X.term(n)->generators() : GradedFreeModule{}; };
    auto Rel = [&](int n) { return X.term(n) ? X.term(n)->relations : GradedMatrix(F(n), GradedFreeModule{}); };
    auto d = [&](int n) { return X.map(n) ? *X.map(n) : GradedMatrix(F(n - 1), F(n)); };
    auto piat = [&](int n) {
        auto it = pi.find(n);
        return it == pi.end() ? GradedMatrix(F(n), P.term(n)) : it->second;
    };
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    if (!P.empty()) {
        lo = P.lo();
        hi = P.hi();
    }
    if (!X.empty()) {
        lo = std::min(lo, X.lo());
        hi = std::max(hi, X.hi());
    }
    if (lo > hi) {
        rep.chain_map = rep.quasi_iso = true;
        return rep;
    }
    rep.chain_map = true;
    for (int n = lo; n <= hi + 1; ++n) {
        Membership im(R, F(n - 1), Rel(n - 1).columns());
        auto diff = mat::sub(R, mat::multiply(R, d(n), piat(n)), mat::multiply(R, piat(n - 1), P.diff(n)));
        for (const auto& c : diff.columns())
            if (!F(n - 1).empty() && !im.contains(c)) rep.chain_map = false;
    }
    if (!rep.chain_map) return rep;
    for (int n = lo; n <= hi; ++n) {
        bool ok = true;
        // Surjective: cycles of X_n lie in π(Z_n(P)) + im d_{n+1} + im R_n.
        GradedFreeModule Fn = F(n);
        if (!Fn.empty()) {
            GradedMatrix zx = mat::hstack(d(n), mat::neg(R, Rel(n - 1)));
            std::vector<FreeElement> targets;
            for (const auto& k : kernel_generators(R, zx)) targets.push_back(vec::slice(k, 0, Fn.rank()));
            std::vector<FreeElement> span;
            for (const auto& z : cycles(R, P, n).columns()) span.push_back(mat::apply(R, piat(n), z));
            for (const auto& c : d(n + 1).columns()) span.push_back(c);
            for (const auto& c : Rel(n).columns()) span.push_back(c);
            Membership m(R, Fn, span);
            for (const auto& z : targets)
                if (!m.contains(z)) ok = false;
        }
        // Injective: z ∈ Z_n(P) with π z ∈ im d_{n+1} + im R_n lies in B_n(P).
        GradedFreeModule Pn = P.term(n);
        if (ok && !Pn.empty()) {
            GradedMatrix top = mat::hstack(mat::hstack(P.diff(n), GradedMatrix(P.term(n - 1), F(n + 1))), GradedMatrix(P.term(n - 1), Rel(n).source()));
            GradedMatrix bottom = mat::hstack(mat::hstack(piat(n), mat::neg(R, d(n + 1))), mat::neg(R, Rel(n)));
            GradedMatrix B = mat::vstack(top, bottom);
            Membership bp(R, Pn, P.diff(n + 1).columns());
            for (const auto& k : kernel_generators(R, B))
                if (!bp.contains(vec::slice(k, 0, Pn.rank()))) ok = false;
        }
        if (!ok) rep.failing_degrees.push_back(n);
    }
    rep.quasi_iso = rep.failing_degrees.empty();
    return rep;
}

/// Stats of a presented complex, read off its free resolution.
inline ComplexStats complex_stats(const GradedPolyRing& R, const PresentedComplex& X)
{
    auto [Y, from_new] = prune_complex(R, X);
    ComplexStats s;
    if (Y.empty()) return s;
    s.min_c = Y.lo();
    s.max_c = Y.hi();
    auto res = resolve_complex(R, X);
    ComplexStats h = complex_stats(R, res.P);
    s.supph = h.supph;
    s.min = h.min;
    s.width = h.width;
    return s;
}

/// 0 -> A --g--> B --h--> C -> 0 with maps given on generators.
struct ShortExactSequence {
    PresentedModule A, B, C;
    GradedMatrix g, h;
};

/// Exactness by membership tests, cross-checked by graded ranks on a window.
inline void check_exact(const GradedPolyRing& R, const ShortExactSequence& s, int window = 6)
{
    const char* where = "short exact sequence";
    s.A.validate(where);
    s.B.validate(where);
    s.C.validate(where);
    s.g.validate(where);
    s.h.validate(where);
    if (!(s.g.source() == s.A.generators()) || !(s.g.target() == s.B.generators()) || !(s.h.source() == s.B.generators()) ||
        !(s.h.target() == s.C.generators()))
        throw ValidationError("maps do not match the modules", where);
    Membership imA(R, s.A.generators(), s.A.relations.columns());
    Membership imB(R, s.B.generators(), s.B.relations.columns());
    Membership imC(R, s.C.generators(), s.C.relations.columns());
    for (const auto& c : mat::multiply(R, s.g, s.A.relations).columns())
        if (!imB.contains(c)) throw ValidationError("first map does not descend", where);
    for (const auto& c : mat::multiply(R, s.h, s.B.relations).columns())
        if (!imC.contains(c)) throw ValidationError("second map does not descend", where);
    for (const auto& c : mat::multiply(R, s.h, s.g).columns())
        if (!imC.contains(c)) throw ValidationError("maps do not compose to zero", where);
    if (s.A.ngens() > 0) {
        GradedMatrix k = mat::hstack(s.g, s.B.relations);
        for (const auto& v : kernel_generators(R, k))
            if (!imA.contains(vec::slice(v, 0, s.A.ngens()))) throw ValidationError("first map is not injective", where);
    }
    {
        std::vector<FreeElement> span = s.h.columns();
        for (const auto& c : s.C.relations.columns()) span.push_back(c);
        Membership m(R, s.C.generators(), span);
        for (std::size_t i = 0; i < s.C.ngens(); ++i)
            if (!m.contains(vec::basis(s.C.ngens(), i, R))) throw ValidationError("second map is not surjective", where);
    }
    if (s.B.ngens() > 0) {
        std::vector<FreeElement> span = s.g.columns();
        for (const auto& c : s.B.relations.columns()) span.push_back(c);
        Membership m(R, s.B.generators(), span);
        GradedMatrix k = mat::hstack(s.h, s.C.relations);
        if (s.C.ngens() == 0) {
            for (std::size_t i = 0; i < s.B.ngens(); ++i)
                if (!m.contains(vec::basis(s.B.ngens(), i, R))) throw ValidationError("not exact in the middle", where);
        } else {
            for (const auto& v : kernel_generators(R, k))
                if (!m.contains(vec::slice(v, 0, s.B.ngens()))) throw ValidationError("not exact in the middle", where);
        }
    }
    int lo = 0;
    for (const auto* M : {&s.A, &s.B, &s.C})
        for (int a : M->generators().degrees) lo = std::min(lo, a);
    for (int t = lo; t <= lo + window; ++t)
        if (hilbert(R, s.B, t) != hilbert(R, s.A, t) + hilbert(R, s.C, t)) throw ValidationError("graded ranks do not add up", where);
}

struct Horseshoe {
    FreeResolution left, middle, right;
    ChainMap inclusion;  // left -> middle
    ChainMap projection; // middle -> right
};

inline Horseshoe horseshoe(const GradedPolyRing& R, const ShortExactSequence& s)
{
    check_exact(R, s);
    int cap = static_cast<int>(R.nvars()) + 1;
    auto L = free_resolution(R, s.A, cap);
    auto Rr = free_resolution(R, s.C, cap);
    const FreeComplex& P1 = L.complex;
    const FreeComplex& P2 = Rr.complex;
    int top = std::max(P1.empty() ? 0 : P1.hi(), P2.empty() ? 0 : P2.hi());

    // λ : P2_0 -> F0(B) lifting the augmentation of the right resolution.
    GradedMatrix epsA = mat::multiply(R, s.g, L.augmentation);
    GradedMatrix lambda(s.B.generators(), P2.term(0));
    if (!P2.term(0).empty()) {
        Lifter lift(R, s.h, s.C.relations);
        for (std::size_t j = 0; j < P2.term(0).rank(); ++j) {
            auto v = lift.solve(Rr.augmentation.column(j));
            if (!v) throw std::logic_error("surjection does not lift");
            for (std::size_t i = 0; i < v->size(); ++i) lambda.at(i, j) = (*v)[i];
        }
    }

    std::map<int, GradedMatrix> theta; // θ_n : P2_n -> P1_{n-1}
    for (int n = 1; n <= top; ++n) {
        GradedMatrix th(P1.term(n - 1), P2.term(n));
        if (!P2.term(n).empty() && !P1.term(n - 1).empty()) {
            if (n == 1) {
                Lifter lift(R, epsA, s.B.relations);
                GradedMatrix rhs = mat::neg(R, mat::multiply(R, lambda, P2.diff(1)));
                for (std::size_t j = 0; j < rhs.cols(); ++j) {
                    auto v = lift.solve(rhs.column(j));
                    if (!v) throw std::logic_error("horseshoe correction does not lift");
                    for (std::size_t i = 0; i < v->size(); ++i) th.at(i, j) = (*v)[i];
                }
            } else {
                Lifter lift(R, P1.diff(n - 1));
                GradedMatrix prev = theta.count(n - 1) ? theta[n - 1] : GradedMatrix(P1.term(n - 2), P2.term(n - 1));
                GradedMatrix rhs = mat::neg(R, mat::multiply(R, prev, P2.diff(n)));
                for (std::size_t j = 0; j < rhs.cols(); ++j) {
                    auto v = lift.solve(rhs.column(j));
                    if (!v) throw std::logic_error("horseshoe correction does not lift");
                    for (std::size_t i = 0; i < v->size(); ++i) th.at(i, j) = (*v)[i];
                }
            }
        }
        theta[n] = th;
    }

    std::map<int, GradedFreeModule> terms;
    std::map<int, GradedMatrix> diffs, inc, proj;
    for (int n = 0; n <= top; ++n) terms[n] = direct_sum(P1.term(n), P2.term(n));
    for (int n = 1; n <= top; ++n) {
        GradedMatrix upper = mat::hstack(P1.diff(n), theta[n]);
        GradedMatrix lower = mat::hstack(GradedMatrix(P2.term(n - 1), P1.term(n)), P2.diff(n));
        diffs[n] = mat::vstack(upper, lower);
    }
    FreeComplex mid(R, terms, diffs);
    for (int n = 0; n <= top; ++n) {
        if (terms[n].empty()) continue;
        if (!P1.term(n).empty())
            inc[n] = mat::vstack(GradedMatrix::identity(R, P1.term(n)), GradedMatrix(P2.term(n), P1.term(n)));
        if (!P2.term(n).empty())
            proj[n] = mat::hstack(GradedMatrix(P2.term(n), P1.term(n)), GradedMatrix::identity(R, P2.term(n)));
    }
    FreeResolution M{mid, mat::hstack(epsA, lambda), L.finished && Rr.finished};
    Horseshoe out{L, M, Rr, ChainMap(R, P1, mid, inc), ChainMap(R, mid, P2, proj)};
    return out;
}

struct DimInequalityReport {
    int pd_left = 0, pd_middle = 0, pd_right = 0;
    bool ineq1 = false; // pd A <= max(pd B, pd C - 1)
    bool ineq2 = false; // pd B <= max(pd A, pd C)
    bool ineq3 = false; // pd C <= max(pd B, pd A + 1)
    bool all() const { return ineq1 && ineq2 && ineq3; }
};

inline DimInequalityReport dim_inequality_check(const GradedPolyRing& R, const ShortExactSequence& s)
{
    check_exact(R, s);
    DimInequalityReport r;
    r.pd_left = pd(R, s.A);
    r.pd_middle = pd(R, s.B);
    r.pd_right = pd(R, s.C);
    r.ineq1 = r.pd_left <= std::max(r.pd_middle, r.pd_right - 1);
    r.ineq2 = r.pd_middle <= std::max(r.pd_left, r.pd_right);
    r.ineq3 = r.pd_right <= std::max(r.pd_middle, r.pd_left + 1);
    return r;
}

} // namespace kt
