#include <random>

#include <gtest/gtest.h>

#include "kt/koszul.hpp"
#include "kt/resolution.hpp"
#include "kt/oracle.hpp"

using namespace kt;

namespace {

GradedPolyRing F2xy() { return GradedPolyRing(2, {"x", "y"}); }
Polynomial P(const GradedPolyRing& R, const char* s) { return poly::parse(R, s); }

std::vector<Polynomial> Ps(const GradedPolyRing& R, const char* s) { return poly::parse_list(R, s); }

/// 0 -> S --a--> S -> 0 in degrees 1, 0.
FreeComplex two_term(const GradedPolyRing& R, const char* a, int deg)
{
    GradedFreeModule top({deg}), bottom({0});
    auto m = GradedMatrix::from_rows(bottom, top, {{P(R, a)}});
    return FreeComplex(R, {{1, top}, {0, bottom}}, {{1, m}});
}

long long oracle_h(const GradedPolyRing& R, const FreeComplex& X, int n, int t)
{
    GradedMatrix a = X.diff(n), b = X.diff(n + 1);
    return oracle::homology_dim(R, &a, &b, X.term(n), t);
}

Polynomial random_homogeneous(const GradedPolyRing& R, int d, std::mt19937& rng)
{
    Polynomial p;
    for (const auto& m : R.monomials_of_degree(d)) p = poly::add(R, p, poly::monomial(R, m, rng() % R.characteristic()));
    return p;
}

} // namespace

TEST(FreeComplex, rejectsNonComplex)
{
    auto R = F2xy();
    GradedFreeModule F0({0}), F1({1}), F2({2});
    auto d1 = GradedMatrix::from_rows(F0, F1, {{P(R, "x")}});
    auto d2 = GradedMatrix::from_rows(F1, F2, {{P(R, "y")}});
    EXPECT_THROW(FreeComplex(R, {{0, F0}, {1, F1}, {2, F2}}, {{1, d1}, {2, d2}}), ValidationError);
    auto bad = GradedMatrix::from_rows(F0, F1, {{P(R, "x^2")}});
    EXPECT_THROW(FreeComplex(R, {{0, F0}, {1, F1}}, {{1, bad}}), ValidationError);
}

TEST(ChainMap, rejectsNonCommutingSquare)
{
    auto R = F2xy();
    auto K = koszul(R, {P(R, "x")}).complex;
    std::map<int, GradedMatrix> m{{0, GradedMatrix::identity(R, K.term(0))}};
    EXPECT_THROW(ChainMap(R, K, K, m), ValidationError);
}

TEST(ComplexStats, examples)
{
    auto R = F2xy();
    auto X = FreeComplex(R, {{1, GradedFreeModule({0})}, {0, GradedFreeModule({0})}}, {});
    auto s = complex_stats(R, X);
    EXPECT_EQ(s.min_c, 0);
    EXPECT_EQ(s.max_c, 1);
    EXPECT_EQ(s.min, 0);
    EXPECT_EQ(s.supph, (std::set<int>{0, 1}));
    EXPECT_EQ(s.width, 1);
    auto k = complex_stats(R, koszul(R, Ps(R, "x,y")).complex);
    EXPECT_EQ(k.supph, std::set<int>{0});
    EXPECT_EQ(k.width, 0);
    auto a = complex_stats(R, two_term(R, "1", 0));
    EXPECT_TRUE(a.supph.empty());
    EXPECT_FALSE(a.min);
    EXPECT_EQ(a.width, 0);
}

TEST(HomologyDims, koszulExamples)
{
    auto R = F2xy();
    auto K = koszul(R, Ps(R, "x,y")).complex;
    EXPECT_EQ(homology_dims(R, K, 0, 0), 1u);
    for (int t = -5; t <= 5; ++t) EXPECT_EQ(homology_dims(R, K, 1, t), 0u);
    auto K2 = koszul(R, Ps(R, "x,x*y")).complex;
    EXPECT_EQ(homology_dims(R, K2, 1, 2), 1u);
    for (int t = -2; t <= 6; ++t) EXPECT_EQ(static_cast<long long>(homology_dims(R, K2, 1, t)), t >= 2 ? 1 : 0);
}

TEST(HomologyPresentation, matchesDims)
{
    auto R = F2xy();
    auto K = koszul(R, Ps(R, "x,y")).complex;
    auto H0 = homology_presentation(R, K, 0);
    for (int t = 0; t <= 6; ++t) EXPECT_EQ(hilbert(R, H0, t), hilbert(R, PresentedModule::quotient(Ps(R, "x,y")), t));
    EXPECT_TRUE(is_zero(R, homology_presentation(R, two_term(R, "1", 0), 0)));
    auto K2 = koszul(R, Ps(R, "x,x*y")).complex;
    auto H1 = homology_presentation(R, K2, 1);
    for (int t = 0; t <= 6; ++t) EXPECT_EQ(hilbert(R, H1, t), hilbert(R, PresentedModule::quotient(Ps(R, "x"), 2), t));
}

TEST(HomologyPresentation, randomComplexesAgreeWithOracle)
{
    GradedPolyRing R(3, {"x", "y", "z"});
    std::mt19937 rng(99);
    for (int trial = 0; trial < 6; ++trial) {
        GradedFreeModule F0({0, 1}), F1({1, 2, 2});
        GradedMatrix m(F0, F1);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = random_homogeneous(R, F1.degree(j) - F0.degree(i), rng);
        auto s = syzygies(R, m);
        // Keep one syzygy so that H_1 is typically nonzero.
        std::vector<FreeElement> cols;
        if (s.cols() > 0) cols.push_back(s.column(0));
        GradedFreeModule F2;
        for (auto& c : cols) F2.degrees.push_back(*vec::degree(c, F1));
        std::map<int, GradedFreeModule> terms{{0, F0}, {1, F1}};
        std::map<int, GradedMatrix> diffs{{1, m}};
        if (!cols.empty()) {
            terms[2] = F2;
            diffs[2] = GradedMatrix::from_columns(F1, F2, cols);
        }
        FreeComplex X(R, terms, diffs);
        for (int n = 0; n <= 2; ++n) {
            auto H = homology_presentation(R, X, n);
            for (int t = -1; t <= 6; ++t) {
                EXPECT_EQ(static_cast<long long>(homology_dims(R, X, n, t)), oracle_h(R, X, n, t)) << n << " " << t;
                EXPECT_EQ(hilbert(R, H, t), homology_dims(R, X, n, t)) << n << " " << t;
            }
            EXPECT_EQ(homology_vanishes(R, X, n), homology_vanishes_on_window(R, X, n));
        }
        for (int t = -1; t <= 6; ++t) {
            auto [a, b] = euler_characteristics(R, X, t);
            EXPECT_EQ(a, b);
        }
    }
}

TEST(Cone, identityIsAcyclicAndShiftsInvert)
{
    auto R = F2xy();
    auto K = koszul(R, {P(R, "x")}).complex;
    auto C = cone(R, ChainMap::identity(R, K));
    C.validate(R);
    EXPECT_EQ(complex_stats(R, C).width, 0);
    EXPECT_TRUE(is_acyclic(R, C));
    auto K2 = koszul(R, Ps(R, "x,y")).complex;
    EXPECT_EQ(shift(R, shift(R, K2, 1), -1), K2);
    shift(R, K2, 1).validate(R);
}

TEST(Cone, ofKappaMatchesOracle)
{
    auto R = F2xy();
    auto k = kappa(R, 2, 1, {P(R, "x")});
    auto C = cone(R, k);
    C.validate(R);
    for (int n = C.lo(); n <= C.hi(); ++n)
        for (int t = -1; t <= 6; ++t) EXPECT_EQ(static_cast<long long>(homology_dims(R, C, n, t)), oracle_h(R, C, n, t));
    auto s = complex_stats(R, C);
    EXPECT_EQ(s.supph, std::set<int>{1});
    for (int t = 0; t <= 6; ++t) EXPECT_EQ(homology_dims(R, C, 1, t), hilbert(R, PresentedModule::quotient({P(R, "x")}, 1), t));
}

TEST(QuasiIso, examples)
{
    auto R = F2xy();
    auto K = koszul(R, Ps(R, "x,y")).complex;
    EXPECT_TRUE(is_quasi_iso(R, ChainMap::identity(R, K)).quasi_iso);
    auto zero = ChainMap(R, K, K, {});
    EXPECT_FALSE(is_quasi_iso(R, zero).quasi_iso);
    auto res = free_resolution(R, PresentedModule::quotient(Ps(R, "x,y")), 4);
    std::map<int, GradedMatrix> m;
    for (const auto& [n, F] : K.terms()) m[n] = GradedMatrix::identity(R, F);
    ASSERT_EQ(res.complex.term(2), K.term(2));
    ChainMap aug(R, K, res.complex, m);
    EXPECT_TRUE(is_quasi_iso(R, aug).quasi_iso);
}

TEST(FreeResolution, examples)
{
    auto R = F2xy();
    auto r = free_resolution(R, PresentedModule::quotient(Ps(R, "x,y")), 5);
    EXPECT_TRUE(r.finished);
    EXPECT_EQ(r.complex.hi(), 2);
    EXPECT_EQ(r.complex.term(0).twists(), std::vector<int>{0});
    EXPECT_EQ(r.complex.term(1).twists(), (std::vector<int>{-1, -1}));
    EXPECT_EQ(r.complex.term(2).twists(), std::vector<int>{-2});
    auto f = free_resolution(R, PresentedModule::free(GradedFreeModule::from_twists({-3})), 5);
    EXPECT_EQ(f.complex.hi(), 0);
    EXPECT_EQ(f.complex.term(0).twists(), std::vector<int>{-3});
    auto q = free_resolution(R, PresentedModule::quotient(Ps(R, "x,x*y")), 5);
    EXPECT_EQ(q.complex.hi(), 1);
    EXPECT_EQ(q.complex.term(1).twists(), std::vector<int>{-1});
}

TEST(FreeResolution, propertiesOnRandomIdeals)
{
    GradedPolyRing R(3, {"x", "y", "z"});
    std::mt19937 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Polynomial> I;
        for (int k = 0; k < 3; ++k) I.push_back(random_homogeneous(R, 1 + static_cast<int>(rng() % 2), rng));
        auto M = PresentedModule::quotient(I);
        auto res = free_resolution(R, M, 6);
        ASSERT_TRUE(res.finished);
        if (res.complex.empty()) continue;
        res.complex.validate(R);
        EXPECT_LE(res.complex.hi(), 3);
        for (const auto& [n, d] : res.complex.diffs()) EXPECT_FALSE(d.has_unit_entry());
        for (int n = 1; n <= res.complex.hi(); ++n) EXPECT_TRUE(homology_vanishes(R, res.complex, n));
        for (int t = 0; t <= 8; ++t) EXPECT_EQ(homology_dims(R, res.complex, 0, t), hilbert(R, M, t));
    }
}

TEST(ProjectiveDimension, gradeAndPerfection)
{
    auto R = F2xy();
    EXPECT_EQ(pd(R, PresentedModule::quotient(Ps(R, "x,y"))), 2);
    EXPECT_EQ(grade(R, Ps(R, "x,y")), 2);
    EXPECT_TRUE(is_perfect(R, Ps(R, "x,y")));
    EXPECT_EQ(pd(R, PresentedModule::quotient(Ps(R, "x"))), 1);
    EXPECT_EQ(grade(R, Ps(R, "x")), 1);
    EXPECT_TRUE(is_perfect(R, Ps(R, "x")));
    GradedPolyRing T(2, {"x", "y", "z"});
    EXPECT_EQ(pd(T, PresentedModule::quotient(Ps(T, "x*y,x*z"))), 2);
    EXPECT_EQ(grade(T, Ps(T, "x*y,x*z")), 1);
    EXPECT_FALSE(is_perfect(T, Ps(T, "x*y,x*z")));
    EXPECT_THROW(grade(R, Ps(R, "1")), ValidationError);
    EXPECT_EQ(pd(R, PresentedModule::zero()), -1);
}

TEST(ResolveComplex, examples)
{
    auto R = F2xy();
    PresentedComplex single;
    single.terms[0] = PresentedModule::quotient(Ps(R, "x"));
    auto r = resolve_complex(R, single);
    EXPECT_EQ(r.P, koszul(R, Ps(R, "x")).complex);
    EXPECT_TRUE(verify_quasi_iso(R, r.P, r.pi, single).quasi_iso);

    auto K = koszul(R, Ps(R, "x,y")).complex;
    auto rf = resolve_complex(R, as_presented(K));
    EXPECT_EQ(rf.P, K);

    PresentedComplex two;
    two.terms[1] = PresentedModule::quotient(Ps(R, "x^2"));
    two.terms[0] = PresentedModule::quotient(Ps(R, "x^3"));
    two.maps[1] = GradedMatrix::from_rows(GradedFreeModule({0}), GradedFreeModule({0}), {{P(R, "1")}});
    // multiplication by x needs a twist: S/(x^2)(-1) -> S/(x^3)
    two.terms[1] = PresentedModule::quotient(Ps(R, "x^2"), 1);
    two.maps[1] = GradedMatrix::from_rows(GradedFreeModule({0}), GradedFreeModule({1}), {{P(R, "x")}});
    auto r2 = resolve_complex(R, two);
    auto rep = verify_quasi_iso(R, r2.P, r2.pi, two);
    EXPECT_TRUE(rep.chain_map);
    EXPECT_TRUE(rep.quasi_iso);
    EXPECT_EQ(r2.P.lo(), 0);
    for (int n = 0; n <= 2; ++n)
        for (int t = 0; t <= 6; ++t) EXPECT_EQ(homology_dims(R, r2.P, n, t), presented_homology_dims(R, two, n, t)) << n << " " << t;
}

TEST(ResolveComplex, detectsBrokenMap)
{
    auto R = F2xy();
    PresentedComplex single;
    single.terms[0] = PresentedModule::quotient(Ps(R, "x"));
    auto r = resolve_complex(R, single);
    auto bad = r.pi;
    bad[0] = GradedMatrix(bad[0].target(), bad[0].source());
    EXPECT_FALSE(verify_quasi_iso(R, r.P, bad, single).quasi_iso);
}

TEST(Horseshoe, freeOuterTerms)
{
    auto R = F2xy();
    ShortExactSequence s{PresentedModule::free(GradedFreeModule({1})), PresentedModule::free(GradedFreeModule({0})),
                         PresentedModule::quotient(Ps(R, "x")), GradedMatrix::from_rows(GradedFreeModule({0}), GradedFreeModule({1}), {{P(R, "x")}}),
                         GradedMatrix::identity(R, GradedFreeModule({0}))};
    auto h = horseshoe(R, s);
    EXPECT_EQ(h.middle.complex.term(0).rank(), 2u);
    EXPECT_EQ(h.middle.complex.term(1).rank(), 1u);
    for (int n = 1; n <= h.middle.complex.hi(); ++n) EXPECT_TRUE(homology_vanishes(R, h.middle.complex, n));
    for (int t = 0; t <= 5; ++t) EXPECT_EQ(homology_dims(R, h.middle.complex, 0, t), hilbert(R, s.B, t));
    auto d = dim_inequality_check(R, s);
    EXPECT_EQ(d.pd_left, 0);
    EXPECT_EQ(d.pd_middle, 0);
    EXPECT_EQ(d.pd_right, 1);
    EXPECT_TRUE(d.all());
}

TEST(Horseshoe, maximalIdealSquared)
{
    auto R = F2xy();
    auto m2 = Ps(R, "x^2,x*y,y^2");
    // (x,y)/(x,y)^2 presented on generators x, y of degree 1.
    GradedFreeModule gA({1, 1});
    auto relA = GradedMatrix::from_rows(gA, GradedFreeModule({2, 2, 2, 2}), {{P(R, "x"), P(R, "y"), P(R, "0"), P(R, "0")}, {P(R, "0"), P(R, "0"), P(R, "x"), P(R, "y")}});
    ShortExactSequence s{PresentedModule(relA), PresentedModule::quotient(m2), PresentedModule::quotient(Ps(R, "x,y")),
                         GradedMatrix::from_rows(GradedFreeModule({0}), gA, {{P(R, "x"), P(R, "y")}}), GradedMatrix::identity(R, GradedFreeModule({0}))};
    auto h = horseshoe(R, s);
    for (int n = 1; n <= h.middle.complex.hi(); ++n) EXPECT_TRUE(homology_vanishes(R, h.middle.complex, n));
    for (int t = 0; t <= 5; ++t) EXPECT_EQ(homology_dims(R, h.middle.complex, 0, t), hilbert(R, s.B, t));
    EXPECT_TRUE(dim_inequality_check(R, s).all());
}

TEST(Horseshoe, rejectsNonExact)
{
    auto R = F2xy();
    ShortExactSequence s{PresentedModule::free(GradedFreeModule({1})), PresentedModule::free(GradedFreeModule({0})),
                         PresentedModule::quotient(Ps(R, "x^2")), GradedMatrix::from_rows(GradedFreeModule({0}), GradedFreeModule({1}), {{P(R, "x")}}),
                         GradedMatrix::identity(R, GradedFreeModule({0}))};
    EXPECT_THROW(horseshoe(R, s), ValidationError);
}

TEST(Horseshoe, splitSequence)
{
    auto R = F2xy();
    auto A = PresentedModule::quotient(Ps(R, "x"));
    auto C = PresentedModule::quotient(Ps(R, "x,y"));
    auto B = direct_sum(A, C);
    GradedFreeModule g0({0});
    auto g = GradedMatrix::from_rows(B.generators(), g0, {{P(R, "1")}, {P(R, "0")}});
    auto h = GradedMatrix::from_rows(g0, B.generators(), {{P(R, "0"), P(R, "1")}});
    ShortExactSequence s{A, B, C, g, h};
    auto hs = horseshoe(R, s);
    auto d = dim_inequality_check(R, s);
    EXPECT_EQ(d.pd_middle, std::max(d.pd_left, d.pd_right));
    EXPECT_TRUE(d.all());
    EXPECT_EQ(hs.middle.complex.term(1).rank(), 3u);
}
