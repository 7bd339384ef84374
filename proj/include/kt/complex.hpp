#pragma once

// Bounded chain complexes of twisted free modules and chain maps.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "kt/free_module.hpp"

namespace kt {

/// Terms C_n and differentials ∂_n : C_n -> C_{n-1}. Zero terms are not stored.
class FreeComplex {
public:
    FreeComplex() = default;

    /// Builds and validates (shapes, degree-zero entries, ∂∘∂ = 0).
    FreeComplex(const GradedPolyRing& R, std::map<int, GradedFreeModule> terms, std::map<int, GradedMatrix> diffs)
        : terms_(std::move(terms)), diffs_(std::move(diffs))
    {
        normalize();
        validate(R);
    }

    /// Builds without the ∂∘∂ check; for callers that validate separately.
    static FreeComplex unchecked(std::map<int, GradedFreeModule> terms, std::map<int, GradedMatrix> diffs)
    {
        FreeComplex c;
        c.terms_ = std::move(terms);
        c.diffs_ = std::move(diffs);
        c.normalize();
        return c;
    }

    bool empty() const noexcept { return terms_.empty(); }
    int lo() const { return terms_.begin()->first; }
    int hi() const { return terms_.rbegin()->first; }

    GradedFreeModule term(int n) const
    {
        auto it = terms_.find(n);
        return it == terms_.end() ? GradedFreeModule{} : it->second;
    }

    GradedMatrix diff(int n) const
    {
        auto it = diffs_.find(n);
        if (it != diffs_.end()) return it->second;
        return GradedMatrix(term(n - 1), term(n));
    }

    const std::map<int, GradedFreeModule>& terms() const noexcept { return terms_; }
    const std::map<int, GradedMatrix>& diffs() const noexcept { return diffs_; }

    void validate(const GradedPolyRing& R) const
    {
        for (const auto& [n, d] : diffs_) {
            std::string where = "differential " + std::to_string(n);
            if (!(d.source() == term(n)) || !(d.target() == term(n - 1)))
                throw ValidationError("differential does not match adjacent terms", where);
            d.validate(where);
        }
        for (const auto& [n, d] : diffs_) {
            auto it = diffs_.find(n - 1);
            if (it == diffs_.end()) continue;
            if (!mat::multiply(R, it->second, d).is_zero())
                throw ValidationError("composite of consecutive differentials is not zero", "differential " + std::to_string(n));
        }
    }

    friend bool operator==(const FreeComplex& a, const FreeComplex& b) { return a.terms_ == b.terms_ && a.diffs_ == b.diffs_; }

private:
    void normalize()
    {
        for (auto it = terms_.begin(); it != terms_.end();) it = it->second.empty() ? terms_.erase(it) : std::next(it);
        for (auto it = diffs_.begin(); it != diffs_.end();) {
            bool drop = it->second.rows() == 0 || it->second.cols() == 0 || it->second.is_zero();
            it = drop ? diffs_.erase(it) : std::next(it);
        }
    }

    std::map<int, GradedFreeModule> terms_;
    std::map<int, GradedMatrix> diffs_;
};

/// f_n : X_n -> Y_n for every n; missing components are zero.
class ChainMap {
public:
    ChainMap() = default;

    ChainMap(const GradedPolyRing& R, FreeComplex source, FreeComplex target, std::map<int, GradedMatrix> maps)
        : src_(std::move(source)), tgt_(std::move(target)), maps_(std::move(maps))
    {
        validate(R);
    }

    static ChainMap unchecked(FreeComplex source, FreeComplex target, std::map<int, GradedMatrix> maps)
    {
        ChainMap f;
        f.src_ = std::move(source);
        f.tgt_ = std::move(target);
        f.maps_ = std::move(maps);
        return f;
    }

    static ChainMap identity(const GradedPolyRing& R, const FreeComplex& X)
    {
        std::map<int, GradedMatrix> m;
        for (const auto& [n, F] : X.terms()) m[n] = GradedMatrix::identity(R, F);
        return unchecked(X, X, m);
    }

    const FreeComplex& source() const noexcept { return src_; }
    const FreeComplex& target() const noexcept { return tgt_; }
    const std::map<int, GradedMatrix>& maps() const noexcept { return maps_; }

    GradedMatrix at(int n) const
    {
        auto it = maps_.find(n);
        if (it != maps_.end()) return it->second;
        return GradedMatrix(tgt_.term(n), src_.term(n));
    }

    /// Shapes, degree-zero entries, and ∂^Y_n f_n = f_{n-1} ∂^X_n exactly.
    void validate(const GradedPolyRing& R) const
    {
        for (const auto& [n, f] : maps_) {
            std::string where = "chain map degree " + std::to_string(n);
            if (!(f.source() == src_.term(n)) || !(f.target() == tgt_.term(n))) throw ValidationError("component does not match the terms", where);
            f.validate(where);
        }
        int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
        for (const auto* c : {&src_, &tgt_})
            if (!c->empty()) {
                lo = std::min(lo, c->lo());
                hi = std::max(hi, c->hi());
            }
        for (int n = lo; n <= hi + 1 && lo <= hi; ++n) {
            auto left = mat::multiply(R, tgt_.diff(n), at(n));
            auto right = mat::multiply(R, at(n - 1), src_.diff(n));
            if (!(mat::sub(R, left, right).is_zero()))
                throw ValidationError("square does not commute", "chain map degree " + std::to_string(n));
        }
    }

    /// Components missing from the map are compared as zero.
    bool operator==(const ChainMap& o) const
    {
        if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) return false;
        for (const auto& [n, F] : src_.terms())
            if (!(at(n) == o.at(n))) return false;
        return true;
    }

private:
    FreeComplex src_;
    FreeComplex tgt_;
    std::map<int, GradedMatrix> maps_;
};

inline ChainMap compose(const GradedPolyRing& R, const ChainMap& g, const ChainMap& f)
{
    if (!(g.source() == f.target())) throw ValidationError("composition of chain maps with mismatched complexes");
    std::map<int, GradedMatrix> m;
    for (const auto& [n, F] : f.source().terms())
        if (!g.target().term(n).empty()) m[n] = mat::multiply(R, g.at(n), f.at(n));
    return ChainMap::unchecked(f.source(), g.target(), m);
}

/// Y_n = X_{n+k} with ∂^Y_n = (-1)^k ∂^X_{n+k}.
inline FreeComplex shift(const GradedPolyRing& R, const FreeComplex& X, int k)
{
    std::map<int, GradedFreeModule> t;
    std::map<int, GradedMatrix> d;
    for (const auto& [n, F] : X.terms()) t[n - k] = F;
    for (const auto& [n, m] : X.diffs()) d[n - k] = (k % 2 == 0) ? m : mat::neg(R, m);
    return FreeComplex::unchecked(t, d);
}

/// C_n = X_{n-1} ⊕ Y_n, ∂(x, y) = (-∂x, f(x) + ∂y).
inline FreeComplex cone(const GradedPolyRing& R, const ChainMap& f)
{
    const FreeComplex& X = f.source();
    const FreeComplex& Y = f.target();
    std::map<int, GradedFreeModule> t;
    std::map<int, GradedMatrix> d;
    if (X.empty() && Y.empty()) return {};
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    if (!X.empty()) {
        lo = X.lo() + 1;
        hi = X.hi() + 1;
    }
    if (!Y.empty()) {
        lo = std::min(lo, Y.lo());
        hi = std::max(hi, Y.hi());
    }
    for (int n = lo; n <= hi; ++n) t[n] = direct_sum(X.term(n - 1), Y.term(n));
    for (int n = lo + 1; n <= hi; ++n) {
        GradedMatrix top = mat::hstack(mat::neg(R, X.diff(n - 1)), GradedMatrix(X.term(n - 2), Y.term(n)));
        GradedMatrix bottom = mat::hstack(f.at(n - 1), Y.diff(n));
        d[n] = mat::vstack(top, bottom);
    }
    return FreeComplex::unchecked(t, d);
}

inline FreeComplex direct_sum(const FreeComplex& X, const FreeComplex& Y)
{
    std::map<int, GradedFreeModule> t;
    std::map<int, GradedMatrix> d;
    for (const auto* c : {&X, &Y})
        for (const auto& [n, F] : c->terms()) t[n] = direct_sum(X.term(n), Y.term(n));
    for (const auto& [n, F] : t)
        if (t.count(n - 1)) d[n] = mat::block_diagonal(X.diff(n), Y.diff(n));
    return FreeComplex::unchecked(t, d);
}

/// X ⊗ F termwise.
inline FreeComplex tensor(const GradedPolyRing& R, const FreeComplex& X, const GradedFreeModule& F)
{
    std::map<int, GradedFreeModule> t;
    std::map<int, GradedMatrix> d;
    for (const auto& [n, G] : X.terms()) t[n] = tensor(G, F);
    for (const auto& [n, m] : X.diffs()) d[n] = mat::tensor(R, m, F);
    return FreeComplex::unchecked(t, d);
}

inline ChainMap tensor(const GradedPolyRing& R, const ChainMap& f, const GradedFreeModule& F)
{
    std::map<int, GradedMatrix> m;
    for (const auto& [n, g] : f.maps()) m[n] = mat::tensor(R, g, F);
    return ChainMap::unchecked(tensor(R, f.source(), F), tensor(R, f.target(), F), m);
}

/// D_{-n} = (X_n)^* with ∂^D_{-n} = (∂^X_{n+1})^T.
inline FreeComplex dual(const FreeComplex& X)
{
    std::map<int, GradedFreeModule> t;
    std::map<int, GradedMatrix> d;
    for (const auto& [n, F] : X.terms()) t[-n] = dual(F);
    for (const auto& [n, m] : X.diffs()) d[-(n - 1)] = mat::transpose(m);
    return FreeComplex::unchecked(t, d);
}

/// Terms in degrees >= m; the differential out of degree m is dropped.
inline FreeComplex truncate_below(const FreeComplex& X, int m)
{
    std::map<int, GradedFreeModule> t;
    std::map<int, GradedMatrix> d;
    for (const auto& [n, F] : X.terms())
        if (n >= m) t[n] = F;
    for (const auto& [n, g] : X.diffs())
        if (n > m) d[n] = g;
    return FreeComplex::unchecked(t, d);
}

} // namespace kt
