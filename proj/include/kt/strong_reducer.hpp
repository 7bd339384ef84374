#pragma once

// Strong reducers of (X, f : X_m -> Q) for complexes with homology supported
// in V(f̃), built through Foxby maps, Tate lifts and Frobenius powers, and a
// verifier for the four defining clauses.

#include <string>
#include <vector>

#include "kt/resolution.hpp"
#include "kt/tate.hpp"

namespace kt {

struct SupportedComplexInput {
    FreeComplex X;
    std::vector<Polynomial> f; // generators of I, V = V(I)
    PresentedModule Q;
    GradedMatrix map; // X_m -> generators of Q
};

struct Clause {
    bool ok = false;
    std::string witness;
};

struct ReducerReport {
    Clause min_c;       // min_c(T) = m
    Clause supph;       // supph(T) = {m}
    Clause epimorphism; // H_m(α) onto H_m(X)
    Clause factors;     // f ∘ α_m kills ∂^T_{m+1}
    int pd = -1;        // pd H_m(T)
    bool all() const { return min_c.ok && supph.ok && epimorphism.ok && factors.ok; }
};

/// U = T(f̃^u) ⊗ P_0 with ψ = δ ∘ (φ ⊗ P_0) : U -> P.
struct BuiltU {
    int u = 0;
    int foxby_n = 0;
    TateResolution tate;
    FreeComplex U;
    ChainMap psi;
};

struct StrongReducer {
    FreeComplex T;
    ChainMap alpha;
    ReducerReport report;
    int m = 0;
    int n = 0;   // power of f̃ killing the image of f
    int u = 0;   // Tate exponent
    int e = 0;   // Frobenius exponent, q = p^e >= u
    int q = 1;
};

struct ReducerCaps {
    int n_cap = 32;
    std::optional<int> u_cap; // 16·r when absent
    int e_max = 5;
};

namespace detail {

/// β_j solving ∂^G β_j = β_{j-1} ∂^F for j > 0, given β_0.
inline ChainMap extend_comparison(const GradedPolyRing& R, const FreeComplex& F, const FreeComplex& G, const GradedMatrix& base, const char* stage)
{
    std::map<int, GradedMatrix> b{{0, base}};
    for (int j = 1; !F.empty() && j <= F.hi(); ++j) {
        GradedMatrix rhs = mat::multiply(R, b[j - 1], F.diff(j));
        GradedMatrix m(G.term(j), F.term(j));
        std::optional<Lifter> lift;
        if (!G.term(j).empty()) lift.emplace(R, G.diff(j));
        for (std::size_t c = 0; c < rhs.cols(); ++c) {
            FreeElement v = rhs.column(c);
            std::optional<FreeElement> x;
            if (lift) x = lift->solve(v);
            else if (vec::is_zero(v)) x = FreeElement{};
            if (!x) throw ValidationError("comparison map has no lift in degree " + std::to_string(j), stage);
            for (std::size_t a = 0; a < x->size(); ++a) m.at(a, c) = (*x)[a];
        }
        b[j] = m;
    }
    return ChainMap(R, F, G, b);
}

/// The submodule of Q generated by the columns of A, presented on those columns.
inline PresentedModule image_module(const GradedPolyRing& R, const GradedMatrix& A, const PresentedModule& Q)
{
    if (A.cols() == 0) return PresentedModule::zero();
    GradedMatrix K = syzygies(R, mat::hstack(A, Q.relations));
    std::vector<FreeElement> rel;
    for (const auto& c : K.columns()) {
        auto v = vec::slice(c, 0, A.cols());
        if (!vec::is_zero(v)) rel.push_back(v);
    }
    GradedFreeModule src;
    for (const auto& v : rel) src.degrees.push_back(*vec::degree(v, A.source()));
    return PresentedModule(GradedMatrix::from_columns(A.source(), src, rel));
}

/// τ_{>=m} X with Z_m presented on its minimal generators, and the inclusion
/// of Z_m into X_m.
inline std::pair<PresentedComplex, GradedMatrix> soft_truncation(const GradedPolyRing& R, const FreeComplex& X, int m)
{
    PresentedComplex out;
    GradedMatrix Z = cycles(R, X, m);
    out.terms[m] = PresentedModule(syzygies(R, Z));
    for (int n = m + 1; n <= X.hi(); ++n) {
        if (X.term(n).empty()) continue;
        out.terms[n] = PresentedModule::free(X.term(n));
        if (n > m + 1) out.maps[n] = X.diff(n);
    }
    if (out.term(m + 1)) {
        Lifter lift(R, Z);
        GradedMatrix d = X.diff(m + 1);
        GradedMatrix lifted(Z.source(), d.source());
        for (std::size_t j = 0; j < d.cols(); ++j) {
            auto v = lift.solve(d.column(j));
            if (!v) throw std::logic_error("boundary outside the cycles");
            for (std::size_t i = 0; i < v->size(); ++i) lifted.at(i, j) = (*v)[i];
        }
        out.maps[m + 1] = lifted;
    }
    return {out, Z};
}

} // namespace detail

/// Builds U and ψ for P with min_c(P) = 0; u is raised to the first exponent
/// at least u and the Foxby exponent for which the Tate lift exists.
inline BuiltU build_U(const GradedPolyRing& R, const std::vector<Polynomial>& f, int u, const FreeComplex& P, const ReducerCaps& caps = {})
{
    if (P.empty() || P.lo() != 0) throw ValidationError("complex must start in degree 0", "build_U");
    FoxbyMap fox = foxby_map(R, f, P, 1, caps.n_cap);
    int r = fox.n;
    TateLift L = tate_to_koszul_lift(R, f, r, std::max(u, r), caps.u_cap ? *caps.u_cap : 16 * r);
    GradedFreeModule P0 = P.term(0);
    FreeComplex U = tensor(R, L.source.complex, P0);
    ChainMap psi = compose(R, fox.delta, tensor(R, L.phi, P0));
    return BuiltU{L.u, r, L.source, U, psi};
}

/// Checks the four clauses for α : T -> X against f : X_m -> Q.
inline ReducerReport verify_strong_reducer(const GradedPolyRing& R, const FreeComplex& T, const ChainMap& alpha, const FreeComplex& X, const GradedMatrix& f,
                                           const PresentedModule& Q)
{
    alpha.validate(R);
    if (!(alpha.source() == T) || !(alpha.target() == X)) throw ValidationError("map does not go from T to X", "verify_strong_reducer");
    auto xs = complex_stats(R, X);
    if (!xs.min) throw ValidationError("complex is exact", "verify_strong_reducer");
    int m = *xs.min;
    if (!(f.source() == X.term(m)) || !(f.target() == Q.generators())) throw ValidationError("target map has the wrong shape", "verify_strong_reducer");
    f.validate("verify_strong_reducer");

    ReducerReport rep;
    int lo = T.empty() ? 0 : T.lo();
    rep.min_c.ok = !T.empty() && lo == m;
    rep.min_c.witness = T.empty() ? "T = 0" : "min_c(T) = " + std::to_string(lo) + ", m = " + std::to_string(m);

    auto ts = complex_stats(R, T);
    bool window_ok = true;
    if (!T.empty())
        for (int n = T.lo(); n <= T.hi(); ++n)
            if (homology_vanishes_on_window(R, T, n) != !ts.supph.count(n)) window_ok = false;
    rep.supph.ok = window_ok && ts.supph == std::set<int>{m};
    std::string s;
    for (int n : ts.supph) s += (s.empty() ? "" : ",") + std::to_string(n);
    rep.supph.witness = "supph(T) = {" + s + "}";

    GradedMatrix ZX = cycles(R, X, m);
    std::vector<FreeElement> img = mat::multiply(R, alpha.at(m), cycles(R, T, m)).columns();
    for (const auto& c : X.diff(m + 1).columns()) img.push_back(c);
    Membership im(R, X.term(m), img);
    std::size_t missing = 0;
    for (const auto& z : ZX.columns())
        if (!im.contains(z)) ++missing;
    rep.epimorphism.ok = missing == 0;
    rep.epimorphism.witness = std::to_string(ZX.cols() - missing) + " of " + std::to_string(ZX.cols()) + " cycle generators of H_m(X) hit";

    GradedMatrix comp = mat::multiply(R, f, mat::multiply(R, alpha.at(m), T.diff(m + 1)));
    Membership qrel(R, Q.generators(), Q.relations.columns());
    std::size_t bad = 0;
    for (const auto& c : comp.columns())
        if (!qrel.contains(c)) ++bad;
    rep.factors.ok = bad == 0;
    rep.factors.witness = std::to_string(bad) + " boundary columns survive in Q";

    rep.pd = pd(R, homology_presentation(R, T, m));
    return rep;
}

/// T = res(S/I^{[q]}) ⊗ P_m and α = π ∘ ψ ∘ β.
inline StrongReducer strong_reducer(const GradedPolyRing& R, const SupportedComplexInput& in, const ReducerCaps& caps = {})
{
    check_sequence(in.f, "strong_reducer");
    const FreeComplex& X = in.X;
    auto xs = complex_stats(R, X);
    if (!xs.min) throw ValidationError("complex is exact", "strong_reducer");
    int m = *xs.min;
    if (!(in.map.source() == X.term(m)) || !(in.map.target() == in.Q.generators())) throw ValidationError("target map has the wrong shape", "strong_reducer");
    in.map.validate("strong_reducer");
    if (!complex_supported_in(R, X, in.f, caps.n_cap)) throw ValidationError("homology is not supported in V(f)", "strong_reducer");

    StrongReducer out;
    out.m = m;

    // (a) P -> X with min_c(P) = m, moved to start in degree 0.
    auto [trunc, Z] = detail::soft_truncation(R, X, m);
    ComplexResolution res = resolve_complex(R, trunc);
    std::map<int, GradedMatrix> pi0;
    for (const auto& [n, F] : res.P.terms()) {
        auto it = res.pi.find(n);
        if (it == res.pi.end()) pi0[n - m] = GradedMatrix(X.term(n), F);
        else pi0[n - m] = n == m ? mat::multiply(R, Z, it->second) : it->second;
    }
    FreeComplex P0 = shift(R, res.P, m);
    FreeComplex X0 = shift(R, X, m);
    ChainMap pi(R, P0, X0, pi0);

    // (b) n with f̃^n killing the image of f ∘ π_0 in Q.
    PresentedModule image = detail::image_module(R, mat::multiply(R, in.map, pi.at(0)), in.Q);
    int n = 1;
    for (const auto& s : in.f) {
        auto st = power_annihilation(R, s, image, caps.n_cap);
        if (st.status == PowerStatus::cap_exhausted) throw SearchCapExhausted("annihilator", "n_cap " + std::to_string(caps.n_cap) + " exhausted");
        if (st.status == PowerStatus::no) throw ValidationError("image of the target map is not supported in V(f)", "strong_reducer");
        n = std::max(n, st.n);
    }
    out.n = n;

    // (c) U and ψ : U -> P.
    BuiltU B = build_U(R, in.f, n, P0, caps);
    out.u = B.u;

    // (d) q = p^e >= u, T = res(S/I^{[q]}) ⊗ P_0, β lifting S/I^{[q]} -> S/(f̃^u).
    int p = static_cast<int>(R.characteristic());
    int e = 0;
    long long q = 1;
    while (q < B.u) {
        if (e >= caps.e_max) throw SearchCapExhausted("frobenius", "e_max " + std::to_string(caps.e_max) + " gives p^e < u = " + std::to_string(B.u));
        q *= p;
        ++e;
    }
    out.e = e;
    out.q = static_cast<int>(q);
    auto Iq = frobenius_power(R, in.f, static_cast<unsigned>(e));
    FreeResolution fres = free_resolution(R, PresentedModule::quotient(Iq), static_cast<int>(R.nvars()) + 1);
    if (!fres.finished) throw SearchCapExhausted("frobenius", "resolution of S/I^[q] did not finish");
    ChainMap beta_S = detail::extend_comparison(R, fres.complex, B.tate.complex, GradedMatrix::identity(R, GradedFreeModule({0})), "strong_reducer");
    GradedFreeModule Pm = P0.term(0);
    FreeComplex T0 = tensor(R, fres.complex, Pm);
    ChainMap beta = tensor(R, beta_S, Pm);

    // (e) α = π ∘ ψ ∘ β, moved back to degree m.
    ChainMap alpha0 = compose(R, pi, compose(R, B.psi, beta));
    out.T = shift(R, T0, -m);
    std::map<int, GradedMatrix> am;
    for (const auto& [k, F] : T0.terms()) am[k + m] = alpha0.at(k);
    out.alpha = ChainMap(R, out.T, X, am);
    out.report = verify_strong_reducer(R, out.T, out.alpha, X, in.map, in.Q);
    if (!out.report.all()) throw std::logic_error("strong reducer failed its own verification");
    return out;
}

struct FrobeniusPdReport {
    std::vector<int> pds; // pd(S/I^{[p^e]}) for e = 0..e_max
    bool invariant = true;
};

inline FrobeniusPdReport frobenius_pd_invariance(const GradedPolyRing& R, const std::vector<Polynomial>& I, int e_max)
{
    if (e_max < 0) throw ValidationError("e_max must be nonnegative", "frobenius");
    FrobeniusPdReport r;
    for (int e = 0; e <= e_max; ++e) r.pds.push_back(pd(R, PresentedModule::quotient(frobenius_power(R, I, static_cast<unsigned>(e)))));
    for (int v : r.pds) r.invariant = r.invariant && v == r.pds.front();
    return r;
}

struct EfdStage {
    int e = 0;
    int q = 1;
    int m = 0;  // largest m with I^{[q]} ⊆ I^m
    int pd = 0; // pd(S/I^{[q]})
};

/// Containment of Frobenius powers in ordinary powers, e = 0..e_max.
inline std::vector<EfdStage> efd_witness(const GradedPolyRing& R, const std::vector<Polynomial>& I, int e_max)
{
    check_sequence(I, "efd_witness");
    if (e_max < 0) throw ValidationError("e_max must be nonnegative", "efd_witness");
    int dmin = std::numeric_limits<int>::max(), dmax = 0;
    for (const auto& g : I) {
        if (g.is_zero()) continue;
        dmin = std::min(dmin, poly::degree(g));
        dmax = std::max(dmax, poly::degree(g));
    }
    if (dmin == 0) throw ValidationError("ideal contains a unit", "efd_witness");
    std::vector<EfdStage> out;
    long long q = 1;
    for (int e = 0; e <= e_max; ++e, q *= static_cast<long long>(R.characteristic())) {
        auto Iq = frobenius_power(R, I, static_cast<unsigned>(e));
        EfdStage st{e, static_cast<int>(q), 0, pd(R, PresentedModule::quotient(Iq))};
        int bound = static_cast<int>(q) * dmax / dmin;
        for (int mm = 1; mm <= bound; ++mm) {
            Membership pw(R, GradedFreeModule({0}), as_elements(ideal_power(R, I, static_cast<unsigned>(mm))));
            bool inside = std::all_of(Iq.begin(), Iq.end(), [&](const Polynomial& g) { return pw.contains(as_element(g)); });
            if (!inside) break;
            st.m = mm;
        }
        out.push_back(st);
    }
    return out;
}

} // namespace kt
