#pragma once

// Graded Tate resolutions of S/(f̃), lifts to Koszul complexes, the directed
// system of such lifts, and the Foxby map K(f̃^n; P_0) -> P.

#include <vector>

#include "kt/koszul.hpp"
#include "kt/support.hpp"

namespace kt {

/// T_r = K_r ⊕ (extra generators); the Koszul basis comes first in each term.
struct TateResolution {
    FreeComplex complex;
    KoszulComplex koszul;
    std::map<int, GradedFreeModule> extra;
    std::map<int, std::vector<FreeElement>> cycles; // image of each extra generator
    bool finished = false;
    int length = 0;
};

/// Extra generators in degree r are minimal generators of Z_{r-1}(T) modulo
/// the image of K_r.
inline TateResolution tate(const GradedPolyRing& R, const std::vector<Polynomial>& f, int max_len)
{
    TateResolution T;
    T.koszul = koszul(R, f);
    const FreeComplex& K = T.koszul.complex;
    std::map<int, GradedFreeModule> terms{{0, K.term(0)}, {1, K.term(1)}};
    std::map<int, GradedMatrix> diffs{{1, K.diff(1)}};
    for (int r = 2;; ++r) {
        GradedFreeModule prev = terms[r - 1];
        GradedMatrix dprev = diffs.count(r - 1) ? diffs[r - 1] : GradedMatrix(terms[r - 2], prev);
        GradedMatrix Z = syzygies(R, dprev);
        if (Z.cols() == 0) {
            T.finished = true;
            T.length = r - 1;
            break;
        }
        if (r > max_len) {
            T.length = r - 1;
            break;
        }
        // Koszul part, padded by zeros on the extras of T_{r-1}.
        GradedMatrix dk(prev, K.term(r));
        GradedMatrix kd = K.diff(r);
        for (std::size_t i = 0; i < kd.rows(); ++i)
            for (std::size_t j = 0; j < kd.cols(); ++j) dk.at(i, j) = kd.at(i, j);
        auto extras = minimal_generators(R, prev, Z.columns(), dk.columns());
        GradedFreeModule E;
        for (auto& e : extras) {
            E.degrees.push_back(*vec::degree(e, prev));
            e = normalize_sign(R, e);
        }
        T.extra[r] = E;
        T.cycles[r] = extras;
        terms[r] = direct_sum(K.term(r), E);
        diffs[r] = mat::hstack(dk, GradedMatrix::from_columns(prev, E, extras));
    }
    T.complex = FreeComplex(R, terms, diffs);
    return T;
}

/// Inclusion K(f̃) -> T(f̃) as a chain map.
inline ChainMap koszul_inclusion(const GradedPolyRing& R, const TateResolution& T)
{
    std::map<int, GradedMatrix> maps;
    for (const auto& [n, F] : T.koszul.complex.terms()) {
        GradedMatrix m(T.complex.term(n), F);
        for (std::size_t i = 0; i < F.rank(); ++i) m.at(i, i) = poly::constant(R, 1);
        maps[n] = m;
    }
    return ChainMap(R, T.koszul.complex, T.complex, maps);
}

struct TateLift {
    int u = 0;
    TateResolution source; // T(f̃^u)
    ChainMap phi;          // T(f̃^u) -> K(f̃^r)
};

/// First u in [u_start, u_cap] for which κ^{u,r} extends over the extra
/// generators of T(f̃^u) by solving ∂^K x = φ(∂ g) degree by degree.
inline TateLift tate_to_koszul_lift(const GradedPolyRing& R, const std::vector<Polynomial>& f, int r, int u_start, int u_cap)
{
    if (r < 1) throw ValidationError("r must be at least 1", "tate_to_koszul_lift");
    if (u_start < r) throw ValidationError("u_start must be at least r", "tate_to_koszul_lift");
    check_sequence(f, "tate_to_koszul_lift");
    KoszulComplex K = koszul(R, powers(R, f, static_cast<unsigned>(r)));
    int cap_len = static_cast<int>(R.nvars() + f.size()) + 1;
    std::string obstruction = "no candidate examined";
    for (int u = u_start; u <= u_cap; ++u) {
        TateResolution T = tate(R, powers(R, f, static_cast<unsigned>(u)), cap_len);
        ChainMap kap = kappa(R, u, r, f);
        std::map<int, GradedMatrix> phi;
        bool ok = true;
        for (const auto& [j, F] : T.complex.terms()) {
            GradedMatrix m(K.complex.term(j), F);
            GradedMatrix kj = kap.at(j);
            for (std::size_t a = 0; a < kj.rows(); ++a)
                for (std::size_t b = 0; b < kj.cols(); ++b) m.at(a, b) = kj.at(a, b);
            std::size_t nk = T.koszul.complex.term(j).rank();
            if (F.rank() > nk) {
                GradedMatrix rhs = mat::multiply(R, phi.count(j - 1) ? phi[j - 1] : GradedMatrix(K.complex.term(j - 1), T.complex.term(j - 1)), T.complex.diff(j));
                std::optional<Lifter> lift;
                if (!K.complex.term(j).empty()) lift.emplace(R, K.complex.diff(j));
                for (std::size_t c = nk; c < F.rank(); ++c) {
                    FreeElement b = rhs.column(c);
                    std::optional<FreeElement> x;
                    if (lift) x = lift->solve(b);
                    else if (vec::is_zero(b)) x = FreeElement{};
                    if (!x) {
                        ok = false;
                        obstruction = "u=" + std::to_string(u) + ": extra generator " + std::to_string(c - nk) + " in degree " + std::to_string(j) +
                                      " has no lift";
                        break;
                    }
                    for (std::size_t a = 0; a < x->size(); ++a) m.at(a, c) = (*x)[a];
                }
            }
            if (!ok) break;
            phi[j] = m;
        }
        if (ok) return TateLift{u, T, ChainMap(R, T.complex, K.complex, phi)};
    }
    throw SearchCapExhausted("tate_to_koszul_lift", "u_cap " + std::to_string(u_cap) + " exhausted; last obstruction: " + obstruction);
}

struct DirectedStage {
    int n = 0;
    TateResolution tate;
};

struct DirectedSystem {
    std::vector<DirectedStage> stages;    // T(f̃^{n_k}) for n_1 < n_2 < ...
    std::vector<ChainMap> maps;           // maps[k] : T(f̃^{n_{k+1}}) -> T(f̃^{n_k})
    std::vector<int> exponents() const
    {
        std::vector<int> e;
        for (const auto& s : stages) e.push_back(s.n);
        return e;
    }
};

inline DirectedSystem start_directed_system(const GradedPolyRing& R, const std::vector<Polynomial>& f, int u_start)
{
    if (u_start < 1) throw ValidationError("u_start must be at least 1", "tate_directed_system");
    check_sequence(f, "tate_directed_system");
    DirectedSystem sys;
    int cap_len = static_cast<int>(R.nvars() + f.size()) + 1;
    sys.stages.push_back({u_start, tate(R, powers(R, f, static_cast<unsigned>(u_start)), cap_len)});
    return sys;
}

/// Appends the next stage: n_{k+1} is the first u > n_k admitting a lift, and
/// the new map is i ∘ φ.
inline void extend_directed_system(const GradedPolyRing& R, const std::vector<Polynomial>& f, DirectedSystem& sys, std::optional<int> u_cap = std::nullopt)
{
    int nk = sys.stages.back().n;
    TateLift L = tate_to_koszul_lift(R, f, nk, nk + 1, u_cap ? *u_cap : 16 * nk);
    ChainMap inc = koszul_inclusion(R, sys.stages.back().tate);
    sys.maps.push_back(compose(R, inc, L.phi));
    sys.maps.back().validate(R);
    sys.stages.push_back({L.u, L.source});
}

inline DirectedSystem tate_directed_system(const GradedPolyRing& R, const std::vector<Polynomial>& f, int depth, int u_start = 1, std::optional<int> u_cap = std::nullopt)
{
    if (depth < 1) throw ValidationError("depth must be at least 1", "tate_directed_system");
    DirectedSystem sys = start_directed_system(R, f, u_start);
    for (int k = 0; k < depth; ++k) extend_directed_system(R, f, sys, u_cap);
    return sys;
}

struct FoxbyMap {
    int n = 0;
    ChainMap delta; // K(f̃^n) ⊗ P_0 -> P
};

/// δ_0 is the identity of P_0; higher components solve ∂^P x = δ(∂ c).
inline FoxbyMap foxby_map(const GradedPolyRing& R, const std::vector<Polynomial>& f, const FreeComplex& P, int n_start, int n_cap, bool check_support = true)
{
    check_sequence(f, "foxby_map");
    if (P.empty() || P.lo() != 0) throw ValidationError("complex must start in degree 0", "foxby_map");
    if (n_start < 1) throw ValidationError("n_start must be at least 1", "foxby_map");
    if (check_support && !complex_supported_in(R, P, f)) throw ValidationError("homology is not supported in V(f)", "foxby_map");
    GradedFreeModule P0 = P.term(0);
    std::string obstruction = "no candidate examined";
    std::vector<Lifter> lifts;
    for (int j = 1; j <= P.hi(); ++j) lifts.emplace_back(R, P.diff(j));
    for (int n = n_start; n <= n_cap; ++n) {
        FreeComplex KP = koszul_with_coeffs(R, powers(R, f, static_cast<unsigned>(n)), P0);
        std::map<int, GradedMatrix> delta{{0, GradedMatrix::identity(R, P0)}};
        bool ok = true;
        for (int j = 1; j <= KP.hi() && ok; ++j) {
            GradedMatrix rhs = mat::multiply(R, delta.count(j - 1) ? delta[j - 1] : GradedMatrix(P.term(j - 1), KP.term(j - 1)), KP.diff(j));
            GradedMatrix m(P.term(j), KP.term(j));
            for (std::size_t c = 0; c < rhs.cols() && ok; ++c) {
                FreeElement b = rhs.column(c);
                std::optional<FreeElement> x;
                if (j <= P.hi()) x = lifts[static_cast<std::size_t>(j - 1)].solve(b);
                else if (vec::is_zero(b)) x = FreeElement{};
                if (!x) {
                    ok = false;
                    obstruction = "n=" + std::to_string(n) + ": column " + std::to_string(c) + " in degree " + std::to_string(j) + " has no lift";
                    break;
                }
                for (std::size_t a = 0; a < x->size(); ++a) m.at(a, c) = (*x)[a];
            }
            if (ok && !m.target().empty()) delta[j] = m;
        }
        if (ok) return FoxbyMap{n, ChainMap(R, KP, P, delta)};
    }
    throw SearchCapExhausted("foxby_map", "n_cap " + std::to_string(n_cap) + " exhausted; last obstruction: " + obstruction);
}

} // namespace kt
