#pragma once

// The acceptance criteria, each checked against an independent oracle and
// reported as one pass/fail line.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kt/local_cohomology.hpp"
#include "kt/oracle.hpp"
#include "kt/resolution.hpp"
#include "kt/strong_reducer.hpp"

namespace kt::acceptance {

// Every criterion is an exact identity over a finite field.
constexpr long long kTolerance = 0;
constexpr int kOracleDegree = 6;

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct Config {
    int n_cap = 32;
    int depth = 32;
};

inline std::string format_line(const Result& r)
{
    std::ostringstream o;
    o << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << "  (" << r.detail << ")";
    return o.str();
}

struct SesInstance {
    GradedPolyRing R;
    ShortExactSequence ses;
};

/// Seeded short exact sequences: 0 -> J/I -> S/I -> S/J -> 0 for monomial
/// I ⊆ J, 0 -> S(-d) -> S -> S/(g) -> 0, and split sums.
inline SesInstance seeded_ses(unsigned seed)
{
    std::mt19937 rng(seed);
    GradedPolyRing R(seed % 2 ? 2 : 3, {"x", "y", "z"});
    auto random_monomial = [&](int d) {
        std::vector<int> e(3, 0);
        for (int k = 0; k < d; ++k) ++e[rng() % 3];
        return poly::monomial(R, R.make(e));
    };
    auto random_ideal = [&](std::size_t k) {
        std::vector<Polynomial> J;
        for (std::size_t i = 0; i < k; ++i) J.push_back(random_monomial(1 + static_cast<int>(rng() % 2)));
        return J;
    };
    GradedFreeModule S0({0});
    switch (seed % 3) {
    case 0: {
        auto J = random_ideal(2 + rng() % 2);
        std::vector<Polynomial> I;
        for (std::size_t i = 0; i < 2; ++i) I.push_back(poly::mul(R, J[rng() % J.size()], random_monomial(1)));
        GradedFreeModule G;
        for (const auto& g : J) G.degrees.push_back(poly::degree(g));
        GradedMatrix row = GradedMatrix::from_rows(S0, G, {J});
        Lifter lift(R, row);
        std::vector<FreeElement> cols = syzygies(R, row).columns();
        for (const auto& f : I) cols.push_back(*lift.solve(as_element(f)));
        GradedFreeModule src;
        for (const auto& c : cols) src.degrees.push_back(*vec::degree(c, G));
        PresentedModule A(GradedMatrix::from_columns(G, src, cols));
        return {R, {A, PresentedModule::quotient(I), PresentedModule::quotient(J), row, GradedMatrix::identity(R, S0)}};
    }
    case 1: {
        int d = 1 + static_cast<int>(rng() % 2);
        Polynomial g = poly::add(R, random_monomial(d), random_monomial(d));
        if (g.is_zero()) g = random_monomial(d);
        GradedFreeModule A({d});
        return {R,
                {PresentedModule::free(A), PresentedModule::free(S0), PresentedModule::quotient({g}), GradedMatrix::from_rows(S0, A, {{g}}),
                 GradedMatrix::identity(R, S0)}};
    }
    default: {
        auto A = PresentedModule::quotient(random_ideal(1 + rng() % 2));
        auto C = PresentedModule::quotient(random_ideal(1 + rng() % 3));
        auto B = direct_sum(A, C);
        auto g = GradedMatrix::from_rows(B.generators(), S0, {{poly::constant(R, 1)}, {Polynomial{}}});
        auto h = GradedMatrix::from_rows(S0, B.generators(), {{Polynomial{}, poly::constant(R, 1)}});
        return {R, {A, B, C, g, h}};
    }
    }
}

struct ReducerCase {
    std::string label;
    GradedPolyRing R;
    SupportedComplexInput input;
};

inline std::vector<ReducerCase> reducer_corpus()
{
    std::vector<ReducerCase> out;
    for (Coeff p : {2u, 3u}) {
        GradedPolyRing R(p, {"x", "y"});
        auto P = [&](const char* s) { return poly::parse(R, s); };
        auto L = [&](const char* s) { return poly::parse_list(R, s); };
        GradedFreeModule S0({0});
        auto one = GradedMatrix::identity(R, S0);
        std::string tag = "F" + std::to_string(p) + " ";

        GradedFreeModule top({1});
        FreeComplex mx(R, {{1, top}, {0, S0}}, {{1, GradedMatrix::from_rows(S0, top, {{P("x")}})}});
        out.push_back({tag + "S(-1) -x-> S onto S/(x)", R, {mx, L("x"), PresentedModule::quotient(L("x")), one}});
        out.push_back({tag + "S(-1) -x-> S shifted to degree -1", R, {shift(R, mx, 1), L("x"), PresentedModule::quotient(L("x")), one}});

        auto kxy = koszul(R, L("x,x*y")).complex;
        out.push_back({tag + "K(x,xy), Q = 0", R, {kxy, L("x"), PresentedModule::zero(), GradedMatrix(GradedFreeModule{}, S0)}});
        out.push_back({tag + "K(x,xy) onto S/(x)", R, {kxy, L("x,x*y"), PresentedModule::quotient(L("x")), one}});

        auto k = koszul(R, L("x,y")).complex;
        out.push_back({tag + "K(x,y) shifted to degree 2", R, {shift(R, k, -2), L("x,y"), PresentedModule::quotient(L("x,y")), one}});
    }
    {
        GradedPolyRing R(2, {"x", "y", "z"});
        auto L = [&](const char* s) { return poly::parse_list(R, s); };
        GradedFreeModule S0({0});
        out.push_back({"F2 K(x^2,y) onto S/(x,y,z)", R,
                       {koszul(R, L("x^2,y")).complex, L("x,y"), PresentedModule::quotient(L("x,y,z")), GradedMatrix::identity(R, S0)}});
    }
    {
        GradedPolyRing R(2, {"x", "y"});
        auto P = [&](const char* s) { return poly::parse(R, s); };
        GradedFreeModule X2({1}), X1({0, 0}), X0({0});
        auto d2 = GradedMatrix::from_rows(X1, X2, {{P("x")}, {P("0")}});
        auto d1 = GradedMatrix::from_rows(X0, X1, {{P("0"), P("1")}});
        FreeComplex X(R, {{2, X2}, {1, X1}, {0, X0}}, {{2, d2}, {1, d1}});
        out.push_back({"F2 exact tail below homology", R,
                       {X, poly::parse_list(R, "x"), PresentedModule::quotient(poly::parse_list(R, "x")),
                        GradedMatrix::from_rows(GradedFreeModule({0}), X1, {{P("1"), P("0")}})}});
    }
    return out;
}

namespace detail {

inline std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

inline bool oracle_matches_homology(const GradedPolyRing& R, const FreeComplex& X, int t_lo, int t_hi, std::string& why)
{
    if (X.empty()) return true;
    for (int n = X.lo(); n <= X.hi(); ++n)
        for (int t = t_lo; t <= t_hi; ++t) {
            GradedMatrix a = X.diff(n), b = X.diff(n + 1);
            long long o = oracle::homology_dim(R, &a, &b, X.term(n), t);
            long long e = static_cast<long long>(homology_dims(R, X, n, t));
            if (std::llabs(o - e) > kTolerance) {
                why = "H_" + std::to_string(n) + " at t=" + std::to_string(t) + ": engine " + std::to_string(e) + ", oracle " + std::to_string(o);
                return false;
            }
        }
    return true;
}

} // namespace detail

inline Result koszul_exactness(const Config&)
{
    Result r{1, "koszul exactness", false, ""};
    GradedPolyRing R(2, {"x", "y", "z"});
    auto K = koszul(R, poly::parse_list(R, "x,y,z")).complex;
    for (int i = 1; i <= 3; ++i)
        if (!homology_vanishes(R, K, i) || !homology_vanishes_on_window(R, K, i)) {
            r.detail = "H_" + std::to_string(i) + " nonzero";
            return r;
        }
    std::vector<std::size_t> dims;
    for (int t = -1; t <= kOracleDegree; ++t) {
        GradedMatrix a = K.diff(0), b = K.diff(1);
        long long o = oracle::homology_dim(R, &a, &b, K.term(0), t);
        long long want = t == 0 ? 1 : 0;
        if (o != want || static_cast<long long>(homology_dims(R, K, 0, t)) != want) {
            r.detail = "H_0 at t=" + std::to_string(t);
            return r;
        }
        dims.push_back(static_cast<std::size_t>(o));
    }
    r.pass = true;
    r.detail = "H_i=0 for i=1..3; H_0 dims t=-1..6: " + detail::join(dims);
    return r;
}

inline Result koszul_validator(const Config&)
{
    Result r{2, "koszul differential validator", false, ""};
    GradedPolyRing R(2, {"x", "y", "z"});
    auto f = poly::parse_list(R, "x,y,z");
    auto K = koszul(R, f);
    std::map<int, GradedMatrix> literal;
    for (int j = 1; j <= 3; ++j) {
        const auto& src = K.labels[j];
        const auto& tgt = K.labels[j - 1];
        GradedMatrix m(K.complex.term(j - 1), K.complex.term(j));
        for (std::size_t c = 0; c < src.size(); ++c)
            for (std::size_t k = 0; k < static_cast<std::size_t>(j); ++k) {
                Subset rest = src[c];
                rest.erase(rest.begin() + static_cast<long>(k));
                auto row = static_cast<std::size_t>(std::find(tgt.begin(), tgt.end(), rest) - tgt.begin());
                m.at(row, c) = k % 2 == 0 ? f[k] : poly::neg(R, f[k]);
            }
        literal[j] = m;
    }
    bool rejected = false;
    try {
        FreeComplex(R, K.complex.terms(), literal);
    } catch (const ValidationError&) {
        rejected = true;
    }
    bool accepted = true;
    try {
        FreeComplex(R, K.complex.terms(), K.complex.diffs());
    } catch (const ValidationError&) {
        accepted = false;
    }
    r.pass = rejected && accepted;
    r.detail = std::string("f_k variant ") + (rejected ? "rejected" : "accepted") + ", f_{i_k} " + (accepted ? "accepted" : "rejected");
    return r;
}

inline Result tate_correctness(const Config&)
{
    Result r{3, "tate resolution of (x, xy)", false, ""};
    GradedPolyRing R(2, {"x", "y"});
    auto T = tate(R, poly::parse_list(R, "x,x*y"), 8);
    std::vector<int> t2{-3, -2}, t3{-3};
    if (!T.finished || T.complex.term(2).twists() != t2 || T.complex.term(3).twists() != t3 || T.complex.hi() != 3) {
        r.detail = "unexpected shape";
        return r;
    }
    for (const auto& [j, d] : T.koszul.complex.diffs())
        for (std::size_t a = 0; a < d.rows(); ++a)
            for (std::size_t b = 0; b < d.cols(); ++b)
                if (!(T.complex.diff(j).at(a, b) == d.at(a, b))) {
                    r.detail = "Koszul part differs in degree " + std::to_string(j);
                    return r;
                }
    for (int n = 1; n <= 2; ++n)
        if (!homology_vanishes(R, T.complex, n) || !homology_vanishes_on_window(R, T.complex, n)) {
            r.detail = "H_" + std::to_string(n) + " nonzero";
            return r;
        }
    std::string why;
    if (!detail::oracle_matches_homology(R, T.complex, -1, kOracleDegree, why)) {
        r.detail = why;
        return r;
    }
    for (int t = 0; t <= kOracleDegree; ++t)
        if (homology_dims(R, T.complex, 0, t) != 1) {
            r.detail = "H_0 differs from S/(x) at t=" + std::to_string(t);
            return r;
        }
    r.pass = true;
    r.detail = "T2 twists -3,-2; T3 twist -3; length 3";
    return r;
}

inline Result tate_lift(const Config&)
{
    Result r{4, "tate to koszul lift", false, ""};
    GradedPolyRing R(2, {"x", "y"});
    auto f = poly::parse_list(R, "x,x*y");
    std::string us;
    for (int rr = 1; rr <= 2; ++rr) {
        auto L = tate_to_koszul_lift(R, f, rr, rr, 16 * rr);
        L.phi.validate(R);
        if (L.u > 16 * rr || !(compose(R, L.phi, koszul_inclusion(R, L.source)) == kappa(R, L.u, rr, f))) {
            r.detail = "restriction differs from kappa for r=" + std::to_string(rr);
            return r;
        }
        us += "u(" + std::to_string(rr) + ")=" + std::to_string(L.u) + " ";
    }
    for (const char* s : {"x,y", "x^2,y"}) {
        auto g = poly::parse_list(R, s);
        for (int rr = 1; rr <= 2; ++rr) {
            auto L = tate_to_koszul_lift(R, g, rr, rr, 16 * rr);
            if (L.u != rr || !(L.phi == kappa(R, rr, rr, g))) {
                r.detail = std::string("regular sequence ") + s + " gave u=" + std::to_string(L.u);
                return r;
            }
        }
    }
    r.pass = true;
    r.detail = us + "for (x,xy); u=r for regular sequences";
    return r;
}

inline Result local_cohomology_agreement(const Config& cfg)
{
    Result r{5, "local cohomology pipelines agree", false, ""};
    GradedPolyRing R(2, {"x", "y"});
    auto S = PresentedModule::free(GradedFreeModule({0}));
    auto c = compare_pipelines(R, poly::parse_list(R, "x,y"), S, {0, 2, -5, 0}, cfg.n_cap, cfg.depth);
    std::vector<std::size_t> h2;
    std::string stages;
    for (int t = -2; t >= -5; --t) {
        h2.push_back(c.koszul.find(2, t)->dim);
        stages += std::to_string(c.koszul.find(2, t)->stage) + "/" + std::to_string(c.ext.find(2, t)->stage) + " ";
    }
    bool oracle = true;
    for (const auto& cell : c.koszul.cells) {
        // Laurent monomials x^-a y^-b, a, b >= 1, of degree t.
        std::size_t want = cell.i == 2 && cell.t <= -2 ? static_cast<std::size_t>(-cell.t - 1) : 0;
        if (cell.dim != want) oracle = false;
    }
    r.pass = c.agree() && oracle;
    r.detail = "H2 dims t=-2..-5: " + detail::join(h2) + "; stages koszul/ext: " + stages + "; unstable " + std::to_string(c.unstable.size()) + ", mismatches " +
               std::to_string(c.mismatches.size());
    return r;
}

inline Result radical_invariance(const Config& cfg)
{
    Result r{6, "radical invariance on M = S", false, ""};
    GradedPolyRing R(2, {"x", "y"});
    auto S = PresentedModule::free(GradedFreeModule({0}));
    LcWindow w{0, 1, -4, 0};
    auto a = local_cohomology_koszul(R, poly::parse_list(R, "x,x*y"), S, w, cfg.n_cap);
    auto b = local_cohomology_koszul(R, poly::parse_list(R, "x"), S, w, cfg.n_cap);
    bool ok = true;
    std::size_t unstable = 0;
    std::string h1;
    for (const auto& cell : b.cells) {
        const LcCell* other = a.find(cell.i, cell.t);
        std::size_t want = cell.i == 1 && cell.t <= -1 ? 1 : 0;
        if (!cell.stable || !other->stable) ++unstable;
        if (!cell.stable || !other->stable || cell.dim != other->dim || cell.dim != want) ok = false;
        if (cell.i == 1) h1 += std::to_string(cell.dim) + (cell.stable ? "" : "?") + " ";
    }
    r.pass = ok;
    r.detail = "H1 dims t=-4..0 for (x): " + h1 + "; " + std::to_string(unstable) + " cells unstable at n_cap " + std::to_string(cfg.n_cap);
    return r;
}

inline Result grade_perfection(const Config&)
{
    Result r{7, "grade and perfection", false, ""};
    GradedPolyRing R(2, {"x", "y", "z"});
    auto I = poly::parse_list(R, "x,y");
    auto J = poly::parse_list(R, "x*y,x*z");
    int gi = grade(R, I), pi = pd(R, PresentedModule::quotient(I));
    int gj = grade(R, J), pj = pd(R, PresentedModule::quotient(J));
    r.pass = gi == 2 && pi == 2 && is_perfect(R, I) && gj == 1 && pj == 2 && !is_perfect(R, J);
    r.detail = "(x,y): grade " + std::to_string(gi) + " pd " + std::to_string(pi) + "; (xy,xz): grade " + std::to_string(gj) + " pd " + std::to_string(pj);
    return r;
}

inline Result frobenius_invariance(const Config&)
{
    Result r{8, "frobenius pd invariance", false, ""};
    GradedPolyRing R(2, {"x", "y"});
    auto rep = frobenius_pd_invariance(R, poly::parse_list(R, "x,y"), 2);
    r.pass = rep.pds == std::vector<int>{2, 2, 2};
    std::string s;
    for (int v : rep.pds) s += std::to_string(v) + " ";
    r.detail = "pd for e=0,1,2: " + s;
    return r;
}

inline Result strong_reducers(const Config& cfg)
{
    Result r{9, "strong reducers end to end", false, ""};
    std::size_t ok = 0, total = 0;
    std::string failed;
    ReducerCaps caps;
    caps.n_cap = cfg.n_cap;
    for (const auto& c : reducer_corpus()) {
        ++total;
        try {
            auto sr = strong_reducer(c.R, c.input, caps);
            auto rep = verify_strong_reducer(c.R, sr.T, sr.alpha, c.input.X, c.input.map, c.input.Q);
            if (rep.all()) ++ok;
            else failed += c.label + "; ";
        } catch (const std::exception& e) {
            failed += c.label + ": " + e.what() + "; ";
        }
    }
    r.pass = ok == total && total >= 10;
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " verified" + (failed.empty() ? "" : ", failed: " + failed);
    return r;
}

inline std::vector<std::pair<std::string, PresentedComplex>> presented_corpus(const GradedPolyRing& R)
{
    auto L = [&](const char* s) { return poly::parse_list(R, s); };
    auto P = [&](const char* s) { return poly::parse(R, s); };
    std::vector<std::pair<std::string, PresentedComplex>> out;
    PresentedComplex a;
    a.terms[0] = PresentedModule::quotient(L("x"));
    out.push_back({"S/(x)", a});
    PresentedComplex b;
    b.terms[1] = PresentedModule::quotient(L("x^2"), 1);
    b.terms[0] = PresentedModule::quotient(L("x^3"));
    b.maps[1] = GradedMatrix::from_rows(GradedFreeModule({0}), GradedFreeModule({1}), {{P("x")}});
    out.push_back({"S/(x^2)(-1) -x-> S/(x^3)", b});
    out.push_back({"K(x,y) with coefficients in S/(x)", koszul_with_coeffs(R, L("x,y"), PresentedModule::quotient(L("x")))});
    PresentedComplex d;
    d.terms[2] = PresentedModule::quotient(L("x,y"));
    out.push_back({"S/(x,y) in degree 2", d});
    PresentedComplex e;
    e.terms[1] = PresentedModule::quotient(L("y"), 1);
    e.terms[0] = PresentedModule::quotient(L("x*y"));
    e.maps[1] = GradedMatrix::from_rows(GradedFreeModule({0}), GradedFreeModule({1}), {{P("x")}});
    out.push_back({"S/(y)(-1) -x-> S/(xy)", e});
    PresentedComplex f;
    f.terms[0] = PresentedModule::quotient(L("x^2,x*y,y^2"));
    f.terms[-1] = PresentedModule::quotient(L("x,y"));
    f.maps[0] = GradedMatrix::identity(R, GradedFreeModule({0}));
    out.push_back({"S/(x,y)^2 -> S/(x,y)", f});
    return out;
}

inline Result complex_resolution(const Config&)
{
    Result r{10, "resolution of complexes", false, ""};
    GradedPolyRing R(2, {"x", "y"});
    std::size_t ok = 0, total = 0;
    std::string failed;
    for (const auto& [label, X] : presented_corpus(R)) {
        ++total;
        auto res = resolve_complex(R, X);
        auto rep = verify_quasi_iso(R, res.P, res.pi, X);
        auto st = complex_stats(R, X);
        bool min_ok = !res.P.empty() && st.min_c && res.P.lo() == *st.min_c;
        if (rep.quasi_iso && min_ok) ++ok;
        else failed += label + "; ";
    }
    r.pass = ok == total && total >= 5;
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " quasi-isomorphic with min_c preserved" + (failed.empty() ? "" : ", failed: " + failed);
    return r;
}

inline Result dim_inequalities(const Config&)
{
    Result r{11, "dimension inequalities on seeded sequences", false, ""};
    std::size_t ok = 0;
    std::string failed;
    for (unsigned seed = 1; seed <= 20; ++seed) {
        auto inst = seeded_ses(seed);
        try {
            auto rep = dim_inequality_check(inst.R, inst.ses);
            if (rep.all()) ++ok;
            else failed += std::to_string(seed) + " ";
        } catch (const std::exception& e) {
            failed += std::to_string(seed) + "(" + e.what() + ") ";
        }
    }
    r.pass = ok == 20;
    r.detail = std::to_string(ok) + "/20 seeds" + (failed.empty() ? "" : ", failed: " + failed);
    return r;
}

inline Result oracle_equivalence(const Config&)
{
    Result r{12, "oracle equivalence up to degree 6", false, ""};
    std::size_t syz = 0, cx = 0;
    std::string why;
    auto fail = [&](const std::string& w) {
        r.detail = w;
        return r;
    };
    for (unsigned seed = 0; seed < 8; ++seed) {
        std::mt19937 rng(1000 + seed);
        GradedPolyRing R(seed % 2 ? 2 : 3, {"x", "y", "z"});
        GradedFreeModule tgt, src;
        for (int i = 0; i < 2; ++i) tgt.degrees.push_back(static_cast<int>(rng() % 3));
        for (int j = 0; j < 3; ++j) src.degrees.push_back(3 + static_cast<int>(rng() % 3));
        GradedMatrix m(tgt, src);
        for (std::size_t i = 0; i < tgt.rank(); ++i)
            for (std::size_t j = 0; j < src.rank(); ++j)
                for (const auto& mono : R.monomials_of_degree(src.degree(j) - tgt.degree(i)))
                    if (rng() % 3 == 0) m.at(i, j) = poly::add(R, m.at(i, j), poly::monomial(R, mono, 1 + rng() % (R.characteristic() - 1)));
        GradedMatrix s = syzygies(R, m);
        if (!mat::multiply(R, m, s).is_zero()) return fail("syzygy is not in the kernel");
        for (int t = 0; t <= kOracleDegree; ++t) {
            auto a = oracle::span_dim(R, src, s.columns(), t), b = oracle::kernel_dim(R, m, t);
            if (a != b) return fail("syzygies at t=" + std::to_string(t) + ": span " + std::to_string(a) + ", kernel " + std::to_string(b));
        }
        ++syz;
        FreeComplex X(R, {{1, src}, {0, tgt}, {2, s.source()}}, {{1, m}, {2, s}});
        if (!detail::oracle_matches_homology(R, X, -1, kOracleDegree, why)) return fail(why);
        ++cx;
    }
    GradedPolyRing R(2, {"x", "y", "z"});
    for (const char* seq : {"x,y,z", "x,x*y", "x*y,x*z", "x^2,y^2,x*y", "x*y,y*z,x*z"}) {
        auto f = poly::parse_list(R, seq);
        for (const FreeComplex& X : {koszul(R, f).complex, tate(R, f, 8).complex, free_resolution(R, PresentedModule::quotient(f), 6).complex}) {
            bool in_range = true;
            for (const auto& [n, F] : X.terms())
                for (int tw : F.twists()) in_range = in_range && tw >= -6 && tw <= 0;
            if (!in_range) continue;
            if (!detail::oracle_matches_homology(R, X, -1, kOracleDegree, why)) return fail(std::string(seq) + ": " + why);
            for (const auto& [n, d] : X.diffs()) {
                GradedMatrix z = syzygies(R, d);
                for (int t = 0; t <= kOracleDegree; ++t)
                    if (oracle::span_dim(R, d.source(), z.columns(), t) != oracle::kernel_dim(R, d, t)) return fail(std::string(seq) + ": syzygies of d" + std::to_string(n));
                ++syz;
            }
            ++cx;
        }
    }
    r.pass = true;
    r.detail = std::to_string(syz) + " syzygy and " + std::to_string(cx) + " homology computations matched";
    return r;
}

inline std::vector<std::function<Result(const Config&)>> criteria()
{
    return {koszul_exactness, koszul_validator,  tate_correctness, tate_lift,        local_cohomology_agreement, radical_invariance,
            grade_perfection, frobenius_invariance, strong_reducers, complex_resolution, dim_inequalities,           oracle_equivalence};
}

/// Runs every criterion; an exception counts as a failure of that criterion.
inline std::vector<Result> run_all(const Config& cfg, const std::function<void(const Result&)>& on_result = {})
{
    std::vector<Result> out;
    int id = 0;
    for (const auto& c : criteria()) {
        ++id;
        auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c(cfg);
        } catch (const std::exception& e) {
            r = Result{id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) on_result(r);
        out.push_back(r);
    }
    return out;
}

} // namespace kt::acceptance
