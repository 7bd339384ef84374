#include <gtest/gtest.h>

#include "kt/resolution.hpp"
#include "kt/tate.hpp"
#include "kt/oracle.hpp"

using namespace kt;

namespace {

GradedPolyRing F2xy() { return GradedPolyRing(2, {"x", "y"}); }
GradedPolyRing F3xy() { return GradedPolyRing(3, {"x", "y"}); }
Polynomial P(const GradedPolyRing& R, const char* s) { return poly::parse(R, s); }
std::vector<Polynomial> Ps(const GradedPolyRing& R, const char* s) { return poly::parse_list(R, s); }

long long binom(long long n, long long k)
{
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// H_0 of a complex augmented to S/(f^n) induces the natural surjection when
/// the degree-0 component is the identity on S.
void expect_h0_identity(const GradedPolyRing& R, const ChainMap& m)
{
    ASSERT_EQ(m.at(0).rows(), 1u);
    ASSERT_EQ(m.at(0).cols(), 1u);
    EXPECT_EQ(m.at(0).at(0, 0), poly::constant(R, 1));
}

} // namespace

TEST(Koszul, examples)
{
    auto R = F3xy();
    auto K = koszul(R, Ps(R, "x,y"));
    EXPECT_EQ(K.complex.term(0).twists(), std::vector<int>{0});
    EXPECT_EQ(K.complex.term(1).twists(), (std::vector<int>{-1, -1}));
    EXPECT_EQ(K.complex.term(2).twists(), std::vector<int>{-2});
    EXPECT_EQ(K.complex.diff(1).at(0, 0), P(R, "x"));
    EXPECT_EQ(K.complex.diff(1).at(0, 1), P(R, "y"));
    EXPECT_EQ(K.complex.diff(2).at(0, 0), P(R, "-y"));
    EXPECT_EQ(K.complex.diff(2).at(1, 0), P(R, "x"));

    auto K1 = koszul(R, Ps(R, "x")).complex;
    EXPECT_EQ(K1.hi(), 1);
    EXPECT_EQ(K1.term(1).twists(), std::vector<int>{-1});
    EXPECT_EQ(K1.diff(1).at(0, 0), P(R, "x"));

    auto R2 = F2xy();
    auto K2 = koszul(R2, Ps(R2, "x,x*y")).complex;
    EXPECT_EQ(K2.term(1).twists(), (std::vector<int>{-1, -2}));
    EXPECT_EQ(K2.term(2).twists(), std::vector<int>{-3});
    auto ref = PresentedModule::quotient(Ps(R2, "x"), 2);
    for (int t = -1; t <= 7; ++t) EXPECT_EQ(homology_dims(R2, K2, 1, t), hilbert(R2, ref, t)) << t;
    EXPECT_FALSE(homology_vanishes(R2, K2, 1));
}

TEST(Koszul, rejectsBadInput)
{
    auto R = F2xy();
    EXPECT_THROW(koszul(R, {}), ValidationError);
    EXPECT_THROW(koszul(R, Ps(R, "x+y^2")), ValidationError);
}

TEST(Koszul, ranksAndRegularAcyclicity)
{
    GradedPolyRing R(5, {"x", "y", "z", "w"});
    auto K = koszul(R, Ps(R, "x,y^2,z*w,z^3+w^3"));
    for (int j = 0; j <= 4; ++j) EXPECT_EQ(static_cast<long long>(K.complex.term(j).rank()), binom(4, j));
    for (int j = 1; j <= 4; ++j) EXPECT_TRUE(homology_vanishes(R, K.complex, j)) << j;
    auto nonreg = koszul(R, Ps(R, "x*y,x*z,x*w")).complex;
    EXPECT_FALSE(homology_vanishes(R, nonreg, 1));
}

TEST(Koszul, literalVariantFailsValidator)
{
    // Multiplying by f_k (position in the subset) instead of f_{J[k]}.
    GradedPolyRing R(3, {"x", "y", "z"});
    auto f = Ps(R, "x,y,z");
    auto K = koszul(R, f);
    std::map<int, GradedMatrix> diffs;
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
        diffs[j] = m;
    }
    EXPECT_THROW(FreeComplex(R, K.complex.terms(), diffs), ValidationError);
}

TEST(Kappa, examples)
{
    auto R = F3xy();
    auto k = kappa(R, 2, 1, Ps(R, "x"));
    EXPECT_EQ(k.at(1).at(0, 0), P(R, "x"));
    EXPECT_EQ(k.at(0).at(0, 0), P(R, "1"));
    auto k2 = kappa(R, 2, 1, Ps(R, "x,y"));
    EXPECT_EQ(k2.at(2).at(0, 0), P(R, "x*y"));
    EXPECT_EQ(k2.at(1).at(0, 0), P(R, "x"));
    EXPECT_EQ(k2.at(1).at(1, 1), P(R, "y"));
    auto id = kappa(R, 3, 3, Ps(R, "x,x*y"));
    EXPECT_EQ(id, ChainMap::identity(R, koszul(R, Ps(R, "x^3,x^3*y^3")).complex));
    EXPECT_THROW(kappa(R, 1, 2, Ps(R, "x")), ValidationError);
    EXPECT_THROW(kappa(R, 1, 0, Ps(R, "x")), ValidationError);
}

TEST(Kappa, composes)
{
    auto R = F3xy();
    auto f = Ps(R, "x+y,x*y");
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n; ++m)
            for (int k = 1; k <= m; ++k) EXPECT_EQ(kappa(R, n, k, f), compose(R, kappa(R, m, k, f), kappa(R, n, m, f))) << n << m << k;
}

TEST(Tate, regularSequenceEqualsKoszul)
{
    auto R = F2xy();
    auto T = tate(R, Ps(R, "x,y"), 6);
    EXPECT_TRUE(T.finished);
    EXPECT_EQ(T.length, 2);
    EXPECT_EQ(T.complex, T.koszul.complex);
    auto T1 = tate(R, Ps(R, "x"), 6);
    EXPECT_TRUE(T1.finished);
    EXPECT_EQ(T1.complex, koszul(R, Ps(R, "x")).complex);
}

TEST(Tate, nonRegularExample)
{
    auto R = F3xy();
    auto T = tate(R, Ps(R, "x,x*y"), 6);
    ASSERT_TRUE(T.finished);
    EXPECT_EQ(T.length, 3);
    EXPECT_EQ(T.complex.term(2).twists(), (std::vector<int>{-3, -2}));
    EXPECT_EQ(T.complex.diff(2).at(0, 1), P(R, "-y"));
    EXPECT_EQ(T.complex.diff(2).at(1, 1), P(R, "1"));
    EXPECT_EQ(T.complex.term(3).twists(), std::vector<int>{-3});
    EXPECT_EQ(T.complex.diff(3).at(0, 0), P(R, "1"));
    EXPECT_EQ(T.complex.diff(3).at(1, 0), P(R, "-x"));
}

TEST(Tate, invariantsOnSequences)
{
    GradedPolyRing R(3, {"x", "y", "z"});
    for (const char* s : {"x,x*y", "x*y,x*z", "x^2,x*y,y^2", "x*y,y*z,x*z", "x+y,x^2,x*y"}) {
        auto f = Ps(R, s);
        auto T = tate(R, f, 10);
        ASSERT_TRUE(T.finished) << s;
        EXPECT_LE(T.length, static_cast<int>(R.nvars() + f.size())) << s;
        for (int n = 1; n <= T.complex.hi(); ++n) EXPECT_TRUE(homology_vanishes(R, T.complex, n)) << s << " " << n;
        auto ref = PresentedModule::quotient(f);
        for (int t = 0; t <= 6; ++t) EXPECT_EQ(homology_dims(R, T.complex, 0, t), hilbert(R, ref, t)) << s;
        for (const auto& [j, d] : T.koszul.complex.diffs()) {
            const auto& full = T.complex.diff(j);
            for (std::size_t a = 0; a < d.rows(); ++a)
                for (std::size_t b = 0; b < d.cols(); ++b) EXPECT_EQ(full.at(a, b), d.at(a, b));
        }
        koszul_inclusion(R, T).validate(R);
    }
}

TEST(TateLift, regularSequenceGivesIdentity)
{
    auto R = F2xy();
    auto L = tate_to_koszul_lift(R, Ps(R, "x"), 1, 1, 16);
    EXPECT_EQ(L.u, 1);
    EXPECT_EQ(L.phi, ChainMap::identity(R, koszul(R, Ps(R, "x")).complex));
    auto L2 = tate_to_koszul_lift(R, Ps(R, "x,y"), 2, 2, 32);
    EXPECT_EQ(L2.u, 2);
    EXPECT_EQ(L2.phi, ChainMap::identity(R, koszul(R, Ps(R, "x^2,y^2")).complex));
    EXPECT_THROW(tate_to_koszul_lift(R, Ps(R, "x"), 2, 1, 16), ValidationError);
}

TEST(TateLift, nonRegularWitness)
{
    auto R = F3xy();
    auto f = Ps(R, "x,x*y");
    for (int r = 1; r <= 2; ++r) {
        auto L = tate_to_koszul_lift(R, f, r, r, 16 * r);
        EXPECT_GE(L.u, r);
        L.phi.validate(R);
        auto restricted = compose(R, L.phi, koszul_inclusion(R, L.source));
        EXPECT_EQ(restricted, kappa(R, L.u, r, f));
        expect_h0_identity(R, L.phi);
    }
}

TEST(TateLift, capExhaustion)
{
    auto R = F3xy();
    // u = r is never enough for (x, xy): the extra generator maps to -y e1 + e2, whose
    // image under kappa has no preimage in the degree-2 Koszul term of the same powers.
    auto f = Ps(R, "x,x*y");
    auto L = tate_to_koszul_lift(R, f, 1, 1, 16);
    if (L.u > 1) {
        EXPECT_THROW(tate_to_koszul_lift(R, f, 1, 1, L.u - 1), SearchCapExhausted);
    }
}

TEST(DirectedSystem, examples)
{
    auto R = F2xy();
    auto d1 = tate_directed_system(R, Ps(R, "x"), 3);
    EXPECT_EQ(d1.exponents(), (std::vector<int>{1, 2, 3, 4}));
    for (std::size_t k = 0; k < d1.maps.size(); ++k) {
        EXPECT_EQ(d1.maps[k], kappa(R, d1.stages[k + 1].n, d1.stages[k].n, Ps(R, "x")));
        expect_h0_identity(R, d1.maps[k]);
    }
    auto d2 = tate_directed_system(R, Ps(R, "x,y"), 2);
    for (std::size_t k = 0; k < d2.maps.size(); ++k) {
        EXPECT_EQ(d2.maps[k], kappa(R, d2.stages[k + 1].n, d2.stages[k].n, Ps(R, "x,y")));
        expect_h0_identity(R, d2.maps[k]);
    }
    auto R3 = F3xy();
    auto d3 = tate_directed_system(R3, Ps(R3, "x,x*y"), 2);
    auto e = d3.exponents();
    for (std::size_t k = 1; k < e.size(); ++k) EXPECT_GT(e[k], e[k - 1]);
    for (std::size_t k = 0; k < d3.maps.size(); ++k) {
        d3.maps[k].validate(R3);
        expect_h0_identity(R3, d3.maps[k]);
    }
}

TEST(Foxby, examples)
{
    auto R = F2xy();
    auto Kx = koszul(R, Ps(R, "x")).complex;
    auto fx = foxby_map(R, Ps(R, "x"), Kx, 1, 32);
    EXPECT_EQ(fx.n, 1);
    EXPECT_EQ(fx.delta, ChainMap::identity(R, Kx));
    auto Kx2 = koszul(R, Ps(R, "x^2")).complex;
    auto fx2 = foxby_map(R, Ps(R, "x"), Kx2, 1, 32);
    EXPECT_EQ(fx2.n, 2);
    EXPECT_EQ(fx2.delta.at(1).at(0, 0), P(R, "1"));

    auto res = free_resolution(R, PresentedModule::quotient(Ps(R, "x^2,x*y,y^2")), 6).complex;
    auto fm = foxby_map(R, Ps(R, "x,y"), res, 1, 32);
    EXPECT_LE(fm.n, 3);
    fm.delta.validate(R);
    EXPECT_EQ(fm.delta.at(0), GradedMatrix::identity(R, res.term(0)));
}

TEST(Foxby, rejectsUnsupportedComplex)
{
    auto R = F2xy();
    auto Ky = koszul(R, Ps(R, "y")).complex;
    EXPECT_THROW(foxby_map(R, Ps(R, "x"), Ky, 1, 8), ValidationError);
}
