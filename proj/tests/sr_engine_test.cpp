#include <gtest/gtest.h>

#include "kt/strong_reducer.hpp"

using namespace kt;

namespace {

GradedPolyRing F2xy() { return GradedPolyRing(2, {"x", "y"}); }
Polynomial P(const GradedPolyRing& R, const char* s) { return poly::parse(R, s); }
std::vector<Polynomial> Ps(const GradedPolyRing& R, const char* s) { return poly::parse_list(R, s); }

FreeComplex mult_by_x(const GradedPolyRing& R)
{
    GradedFreeModule top({1}), bottom({0});
    return FreeComplex(R, {{1, top}, {0, bottom}}, {{1, GradedMatrix::from_rows(bottom, top, {{P(R, "x")}})}});
}

} // namespace

TEST(Support, modules)
{
    auto R = F2xy();
    EXPECT_TRUE(support_in(R, PresentedModule::quotient(Ps(R, "x^2,y")), Ps(R, "x,y")));
    EXPECT_FALSE(support_in(R, PresentedModule::quotient(Ps(R, "x")), Ps(R, "y")));
    // S/(y) ⊕ S(-1): the free summand is never killed by a power of x.
    GradedFreeModule G({0, 1});
    PresentedModule Q(GradedMatrix::from_rows(G, GradedFreeModule({1}), {{P(R, "y")}, {P(R, "0")}}));
    EXPECT_FALSE(support_in(R, Q, Ps(R, "x")));
    EXPECT_EQ(support_status(R, Q, Ps(R, "x")).verdict, PowerStatus::no);
    for (const auto& M : {PresentedModule::quotient(Ps(R, "x^3,x*y")), PresentedModule::quotient(Ps(R, "x^2")), PresentedModule::quotient(Ps(R, "y"))})
        EXPECT_EQ(support_in(R, M, Ps(R, "x,x*y")), support_in(R, M, Ps(R, "x,x*y,x^2")));
}

TEST(Support, complexes)
{
    auto R = F2xy();
    EXPECT_TRUE(complex_supported_in(R, koszul(R, Ps(R, "x,y")).complex, Ps(R, "x,y")));
    FreeComplex S(R, {{0, GradedFreeModule({0})}}, {});
    EXPECT_FALSE(complex_supported_in(R, S, Ps(R, "x")));
    EXPECT_TRUE(complex_supported_in(R, koszul(R, Ps(R, "x,x*y")).complex, Ps(R, "x")));
    auto rep = complex_support_status(R, S, Ps(R, "x"));
    EXPECT_EQ(rep.failing_degree, 0);
}

TEST(BuildU, examples)
{
    auto R = F2xy();
    auto Kx2 = koszul(R, Ps(R, "x^2")).complex;
    auto b = build_U(R, Ps(R, "x"), 2, Kx2);
    EXPECT_EQ(b.u, 2);
    EXPECT_EQ(b.U, Kx2);
    EXPECT_EQ(b.psi, ChainMap::identity(R, Kx2));
    auto K = koszul(R, Ps(R, "x,y")).complex;
    auto c = build_U(R, Ps(R, "x,y"), 1, K);
    EXPECT_EQ(c.u, 1);
    EXPECT_EQ(c.U, K);
    EXPECT_EQ(c.psi, ChainMap::identity(R, K));
}

TEST(BuildU, nonRegularSequence)
{
    GradedPolyRing R(3, {"x", "y"});
    PresentedComplex single;
    single.terms[0] = PresentedModule::quotient(Ps(R, "x^2"));
    auto P0 = resolve_complex(R, single).P;
    auto b = build_U(R, Ps(R, "x,x*y"), 1, P0);
    b.psi.validate(R);
    EXPECT_EQ(b.psi.at(0), GradedMatrix::identity(R, P0.term(0)));
    for (int n = 1; n <= b.U.hi(); ++n) EXPECT_TRUE(homology_vanishes(R, b.U, n));
}

TEST(StrongReducer, augmentationExample)
{
    auto R = F2xy();
    auto X = mult_by_x(R);
    auto Q = PresentedModule::quotient(Ps(R, "x"));
    auto sr = strong_reducer(R, {X, Ps(R, "x"), Q, GradedMatrix::identity(R, GradedFreeModule({0}))});
    EXPECT_TRUE(sr.report.all());
    EXPECT_GE(sr.q, sr.u);
    EXPECT_EQ(sr.T.lo(), 0);
    auto H = homology_presentation(R, sr.T, 0);
    for (int t = 0; t <= 6; ++t) EXPECT_EQ(hilbert(R, H, t), hilbert(R, PresentedModule::quotient({poly::pow(R, P(R, "x"), static_cast<unsigned>(sr.q))}), t));
    EXPECT_EQ(sr.report.pd, 1);
}

TEST(StrongReducer, rejectsExactComplex)
{
    auto R = F2xy();
    GradedFreeModule F({0});
    FreeComplex X(R, {{1, F}, {0, F}}, {{1, GradedMatrix::identity(R, F)}});
    EXPECT_THROW(strong_reducer(R, {X, Ps(R, "x"), PresentedModule::zero(), GradedMatrix(GradedFreeModule{}, F)}), ValidationError);
}

TEST(StrongReducer, koszulWithZeroTarget)
{
    auto R = F2xy();
    auto X = koszul(R, Ps(R, "x,x*y")).complex;
    auto sr = strong_reducer(R, {X, Ps(R, "x"), PresentedModule::zero(), GradedMatrix(GradedFreeModule{}, X.term(0))});
    EXPECT_TRUE(sr.report.all());
    EXPECT_EQ(sr.m, 0);
}

TEST(StrongReducer, shiftedComplex)
{
    GradedPolyRing R(3, {"x", "y"});
    auto X = shift(R, koszul(R, Ps(R, "x,y")).complex, -2);
    auto Q = PresentedModule::quotient(Ps(R, "x,y"));
    auto sr = strong_reducer(R, {X, Ps(R, "x,y"), Q, GradedMatrix::identity(R, GradedFreeModule({0}))});
    EXPECT_EQ(sr.m, 2);
    EXPECT_TRUE(sr.report.all());
}

TEST(StrongReducer, rejectsUnsupportedHomology)
{
    auto R = F2xy();
    auto K = koszul(R, Ps(R, "x,x*y")).complex;
    FreeComplex X(R, {{2, K.term(2)}, {1, K.term(1)}}, {{2, K.diff(2)}});
    ASSERT_EQ(*complex_stats(R, X).min, 1);
    auto Q = PresentedModule::free(GradedFreeModule({1}));
    GradedMatrix f = GradedMatrix::from_rows(GradedFreeModule({1}), K.term(1), {{P(R, "0"), P(R, "0")}});
    EXPECT_THROW(strong_reducer(R, {X, Ps(R, "x"), Q, f}), ValidationError);
}

TEST(StrongReducer, exactTailBelowHomology)
{
    auto R = F2xy();
    GradedFreeModule X2({1}), X1({0, 0}), X0({0});
    auto d2 = GradedMatrix::from_rows(X1, X2, {{P(R, "x")}, {P(R, "0")}});
    auto d1 = GradedMatrix::from_rows(X0, X1, {{P(R, "0"), P(R, "1")}});
    FreeComplex X(R, {{2, X2}, {1, X1}, {0, X0}}, {{2, d2}, {1, d1}});
    auto Q = PresentedModule::quotient(Ps(R, "x"));
    auto f = GradedMatrix::from_rows(GradedFreeModule({0}), X1, {{P(R, "1"), P(R, "0")}});
    auto sr = strong_reducer(R, {X, Ps(R, "x"), Q, f});
    EXPECT_EQ(sr.m, 1);
    EXPECT_EQ(sr.T.lo(), 1);
    EXPECT_TRUE(sr.report.all());
}

TEST(VerifyStrongReducer, detectsBrokenClauses)
{
    auto R = F2xy();
    auto X = mult_by_x(R);
    auto Q = PresentedModule::quotient(Ps(R, "x"));
    auto f = GradedMatrix::identity(R, GradedFreeModule({0}));
    auto sr = strong_reducer(R, {X, Ps(R, "x"), Q, f});

    auto zero = ChainMap(R, sr.T, X, {});
    auto r0 = verify_strong_reducer(R, sr.T, zero, X, f, Q);
    EXPECT_FALSE(r0.epimorphism.ok);
    EXPECT_TRUE(r0.min_c.ok);

    auto T1 = shift(R, sr.T, -1);
    auto r1 = verify_strong_reducer(R, T1, ChainMap(R, T1, X, {}), X, f, Q);
    EXPECT_FALSE(r1.min_c.ok);
    EXPECT_FALSE(r1.all());
}

TEST(Frobenius, pdInvariance)
{
    auto R = F2xy();
    EXPECT_EQ(frobenius_pd_invariance(R, Ps(R, "x,y"), 2).pds, (std::vector<int>{2, 2, 2}));
    EXPECT_EQ(frobenius_pd_invariance(R, Ps(R, "x"), 3).pds, (std::vector<int>{1, 1, 1, 1}));
    GradedPolyRing T(2, {"x", "y", "z"});
    auto r = frobenius_pd_invariance(T, Ps(T, "x*y,x*z"), 1);
    EXPECT_EQ(r.pds, (std::vector<int>{2, 2}));
    EXPECT_TRUE(r.invariant);
}

TEST(Frobenius, efdWitness)
{
    auto R = F2xy();
    auto w = efd_witness(R, Ps(R, "x,y"), 2);
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[0].m, 1);
    EXPECT_EQ(w[1].q, 2);
    EXPECT_EQ(w[1].m, 2);
    EXPECT_EQ(w[2].m, 4);
    for (const auto& s : w) EXPECT_EQ(s.pd, 2);
    for (const auto& s : efd_witness(R, Ps(R, "x"), 3)) EXPECT_EQ(s.m, s.q);
    auto v = efd_witness(R, Ps(R, "x+y,y^2"), 1);
    EXPECT_EQ(v[1].m, 2);
}
