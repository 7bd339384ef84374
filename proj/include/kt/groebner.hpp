#pragma once

// Gröbner bases of graded submodules of free modules (position over term,
// lower generator index first), syzygies, minimal generators and lifting.

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "kt/free_module.hpp"

namespace kt {

struct SubmoduleBasis {
    GradedFreeModule ambient;
    std::vector<FreeElement> gens;
    bool groebner = false;
};

struct LeadTerm {
    std::size_t comp;
    Monomial mono;
    Coeff coeff;
};

inline std::optional<LeadTerm> lead_term(const FreeElement& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return LeadTerm{i, v[i].leading().mono, v[i].leading().coeff};
    return std::nullopt;
}

/// Position over term: the lower component index is the larger one.
inline int compare_lead(const GradedPolyRing& R, const LeadTerm& a, const LeadTerm& b)
{
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return R.compare(a.mono, b.mono);
}

/// Homogeneous Buchberger with Gebauer-Möller pair pruning. Items are handled
/// in increasing degree, so the basis can be completed up to a degree bound
/// and extended later.
class GroebnerBuilder {
public:
    GroebnerBuilder(const GradedPolyRing& R, GradedFreeModule F) : R_(&R), F_(std::move(F)) {}

    const GradedFreeModule& ambient() const noexcept { return F_; }

    void add(const FreeElement& v)
    {
        if (v.size() != F_.rank()) throw ValidationError("generator does not live in the ambient module");
        auto d = vec::degree(v, F_);
        if (!d) return;
        queue_.emplace(std::make_tuple(*d, seq_++), Item{v, 0, 0, false});
    }

    /// Process every pending item of degree <= bound (all items when absent).
    void complete(std::optional<int> bound = std::nullopt)
    {
        while (!queue_.empty()) {
            auto it = queue_.begin();
            int d = std::get<0>(it->first);
            if (bound && d > *bound) break;
            Item item = std::move(it->second);
            queue_.erase(it);
            FreeElement s = item.is_pair ? spoly(item.i, item.j) : item.v;
            FreeElement h = reduce(s);
            if (vec::is_zero(h)) continue;
            insert(std::move(h), d);
        }
    }

    /// Fully reduced remainder with respect to the current active elements.
    FreeElement reduce(FreeElement p) const
    {
        const GradedPolyRing& R = *R_;
        FreeElement r(F_.rank());
        for (;;) {
            auto lt = lead_term(p);
            if (!lt) return r;
            const Elem* red = nullptr;
            for (std::size_t k : active_) {
                const Elem& e = elems_[k];
                if (e.comp == lt->comp && R.divides(e.lm, lt->mono)) {
                    red = &e;
                    break;
                }
            }
            if (red) {
                Monomial q = R.quotient(lt->mono, red->lm);
                p = vec::sub(R, p, vec::mul_term(R, red->v, q, lt->coeff));
            } else {
                r[lt->comp].terms.push_back(p[lt->comp].terms.front());
                p[lt->comp].terms.erase(p[lt->comp].terms.begin());
            }
        }
    }

    bool contains(const FreeElement& v)
    {
        auto d = vec::degree(v, F_);
        if (!d) return true;
        complete(*d);
        return vec::is_zero(reduce(v));
    }

    /// Reduced monic basis, sorted by degree then lead term.
    std::vector<FreeElement> basis()
    {
        complete();
        const GradedPolyRing& R = *R_;
        std::vector<std::size_t> idx = active_;
        std::vector<FreeElement> out;
        for (std::size_t k : idx) {
            GroebnerBuilder others(R, F_);
            others.elems_ = elems_;
            others.active_.clear();
            for (std::size_t o : idx)
                if (o != k) others.active_.push_back(o);
            const Elem& e = elems_[k];
            FreeElement tail = e.v;
            tail[e.comp].terms.erase(tail[e.comp].terms.begin());
            FreeElement v = others.reduce(tail);
            v[e.comp] = poly::add(R, v[e.comp], poly::monomial(R, e.lm, 1));
            out.push_back(std::move(v));
        }
        std::sort(out.begin(), out.end(), [&](const FreeElement& a, const FreeElement& b) {
            int da = *vec::degree(a, F_), db = *vec::degree(b, F_);
            if (da != db) return da < db;
            return compare_lead(R, *lead_term(a), *lead_term(b)) > 0;
        });
        return out;
    }

private:
    struct Elem {
        FreeElement v;
        std::size_t comp;
        Monomial lm;
        int deg;
    };
    struct Item {
        FreeElement v;
        std::size_t i, j;
        bool is_pair;
    };
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    FreeElement spoly(std::size_t i, std::size_t j) const
    {
        const GradedPolyRing& R = *R_;
        const Elem& a = elems_[i];
        const Elem& b = elems_[j];
        Monomial l = R.lcm(a.lm, b.lm);
        return vec::sub(R, vec::mul_term(R, a.v, R.quotient(l, a.lm), 1), vec::mul_term(R, b.v, R.quotient(l, b.lm), 1));
    }

    void insert(FreeElement h, int deg)
    {
        const GradedPolyRing& R = *R_;
        auto lt = *lead_term(h);
        Coeff inv = R.field().inv(lt.coeff);
        for (auto& p : h) p = poly::scale(R, p, inv);
        std::size_t hi = elems_.size();
        elems_.push_back(Elem{std::move(h), lt.comp, lt.mono, deg});
        const Elem& he = elems_[hi];

        std::vector<Pair> fresh;
        for (std::size_t g : active_)
            if (elems_[g].comp == he.comp) fresh.push_back({g, hi, R.lcm(elems_[g].lm, he.lm)});
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
                if (a == b || !R.divides(fresh[b].lcm, fresh[a].lcm)) continue;
                if (!(fresh[b].lcm == fresh[a].lcm) || b < a) drop = true;
            }
            if (!drop) kept.push_back(fresh[a]);
        }

        std::map<std::tuple<int, std::size_t>, Item> rebuilt;
        for (auto& [key, item] : queue_) {
            if (item.is_pair && elems_[item.i].comp == he.comp) {
                Monomial l = R.lcm(elems_[item.i].lm, elems_[item.j].lm);
                if (R.divides(he.lm, l) && !(R.lcm(elems_[item.i].lm, he.lm) == l) && !(R.lcm(elems_[item.j].lm, he.lm) == l))
                    continue;
            }
            rebuilt.emplace(key, std::move(item));
        }
        queue_ = std::move(rebuilt);
        for (const Pair& p : kept) {
            int d = p.lcm.degree + F_.degree(he.comp);
            queue_.emplace(std::make_tuple(d, seq_++), Item{{}, p.i, p.j, true});
        }

        std::vector<std::size_t> act;
        for (std::size_t g : active_)
            if (!(elems_[g].comp == he.comp && R.divides(he.lm, elems_[g].lm))) act.push_back(g);
        act.push_back(hi);
        active_ = std::move(act);
    }

    const GradedPolyRing* R_;
    GradedFreeModule F_;
    std::vector<Elem> elems_;
    std::vector<std::size_t> active_;
    std::map<std::tuple<int, std::size_t>, Item> queue_;
    std::size_t seq_ = 0;
};

inline SubmoduleBasis groebner_basis(const GradedPolyRing& R, const SubmoduleBasis& in)
{
    GroebnerBuilder b(R, in.ambient);
    for (const auto& g : in.gens) b.add(g);
    return SubmoduleBasis{in.ambient, b.basis(), true};
}

inline FreeElement normal_form(const GradedPolyRing& R, const FreeElement& e, const SubmoduleBasis& gb)
{
    if (!gb.groebner) throw ValidationError("normal form requires a Gröbner basis");
    if (e.size() != gb.ambient.rank()) throw ValidationError("element and basis live in different modules");
    GroebnerBuilder b(R, gb.ambient);
    for (const auto& g : gb.gens) b.add(g);
    b.complete();
    return b.reduce(e);
}

/// Scale so the coordinate of least polynomial degree (the last one on ties)
/// has leading coefficient 1.
inline FreeElement normalize_sign(const GradedPolyRing& R, FreeElement v)
{
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!pick || poly::degree(v[i]) <= poly::degree(v[*pick])) pick = i;
    }
    if (!pick) return v;
    Coeff inv = R.field().inv(v[*pick].leading().coeff);
    for (auto& p : v) p = poly::scale(R, p, inv);
    return v;
}

/// Keeps a generator only if it is not in the span of `base` and the
/// generators already kept, scanning in increasing degree.
inline std::vector<FreeElement> minimal_generators(const GradedPolyRing& R, const GradedFreeModule& F, const std::vector<FreeElement>& gens,
                                                   const std::vector<FreeElement>& base = {})
{
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        auto d = vec::degree(gens[k], F);
        if (d) order.push_back({*d, k});
    }
    std::stable_sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first < b.first; });
    GroebnerBuilder gb(R, F);
    for (const auto& b : base) gb.add(b);
    std::vector<FreeElement> out;
    for (auto [d, k] : order) {
        gb.complete(d);
        if (vec::is_zero(gb.reduce(gens[k]))) continue;
        out.push_back(gens[k]);
        gb.add(gens[k]);
    }
    return out;
}

inline SubmoduleBasis minimal_generators(const GradedPolyRing& R, const SubmoduleBasis& b)
{
    return SubmoduleBasis{b.ambient, minimal_generators(R, b.ambient, b.gens), false};
}

/// Generators of ker(m), not necessarily minimal.
inline std::vector<FreeElement> kernel_generators(const GradedPolyRing& R, const GradedMatrix& m)
{
    GradedFreeModule aug = direct_sum(m.target(), m.source());
    GroebnerBuilder gb(R, aug);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        FreeElement v = vec::concat(m.column(j), FreeElement(m.cols()));
        v[m.rows() + j] = poly::constant(R, 1);
        gb.add(v);
    }
    std::vector<FreeElement> out;
    for (const auto& g : gb.basis()) {
        auto lt = lead_term(g);
        if (lt->comp < m.rows()) continue;
        out.push_back(vec::slice(g, m.rows(), m.cols()));
    }
    return out;
}

/// Minimal homogeneous generators of ker(m) as columns of a degree-zero matrix.
inline GradedMatrix syzygies(const GradedPolyRing& R, const GradedMatrix& m)
{
    auto gens = minimal_generators(R, m.source(), kernel_generators(R, m));
    GradedFreeModule src;
    std::vector<FreeElement> cols;
    for (auto& g : gens) {
        src.degrees.push_back(*vec::degree(g, m.source()));
        cols.push_back(normalize_sign(R, std::move(g)));
    }
    return GradedMatrix::from_columns(m.source(), src, cols);
}

/// Solves M v ≡ b modulo the image of N (when given), caching the basis.
class Lifter {
public:
    Lifter(const GradedPolyRing& R, const GradedMatrix& M, const std::optional<GradedMatrix>& N = std::nullopt)
        : R_(&R), rows_(M.rows()), cols_(M.cols()), source_(M.source()), gb_(R, direct_sum(M.target(), M.source()))
    {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            FreeElement v = vec::concat(M.column(j), FreeElement(M.cols()));
            v[rows_ + j] = poly::constant(R, 1);
            gb_.add(v);
        }
        if (N) {
            if (!(N->target() == M.target())) throw ValidationError("lifting modulo a map with a different target");
            for (std::size_t k = 0; k < N->cols(); ++k) gb_.add(vec::concat(N->column(k), FreeElement(M.cols())));
        }
    }

    std::optional<FreeElement> solve(const FreeElement& b)
    {
        if (b.size() != rows_) throw ValidationError("right-hand side has the wrong length");
        FreeElement aug = vec::concat(b, FreeElement(cols_));
        auto d = vec::degree(aug, gb_.ambient());
        if (!d) return FreeElement(cols_);
        gb_.complete(*d);
        FreeElement r = gb_.reduce(aug);
        for (std::size_t i = 0; i < rows_; ++i)
            if (!r[i].is_zero()) return std::nullopt;
        FreeElement v = vec::slice(r, rows_, cols_);
        for (auto& p : v) p = poly::neg(*R_, p);
        return v;
    }

private:
    const GradedPolyRing* R_;
    std::size_t rows_, cols_;
    GradedFreeModule source_;
    GroebnerBuilder gb_;
};

/// Membership in the column span of a matrix.
class Membership {
public:
    Membership(const GradedPolyRing& R, const GradedFreeModule& F, const std::vector<FreeElement>& gens) : gb_(R, F)
    {
        for (const auto& g : gens) gb_.add(g);
    }
    bool contains(const FreeElement& v) { return gb_.contains(v); }
    FreeElement reduce(const FreeElement& v)
    {
        auto d = vec::degree(v, gb_.ambient());
        if (!d) return v;
        gb_.complete(*d);
        return gb_.reduce(v);
    }

private:
    GroebnerBuilder gb_;
};

inline std::vector<Polynomial> frobenius_power(const GradedPolyRing& R, const std::vector<Polynomial>& gens, unsigned e)
{
    unsigned long long q = 1;
    for (unsigned k = 0; k < e; ++k) q *= R.characteristic();
    std::vector<Polynomial> out;
    for (const auto& g : gens) out.push_back(poly::pow(R, g, q));
    return out;
}

/// Products of m generators (with repetition): generators of I^m.
inline std::vector<Polynomial> ideal_power(const GradedPolyRing& R, const std::vector<Polynomial>& gens, unsigned m)
{
    std::vector<Polynomial> out;
    auto rec = [&](auto&& self, std::size_t from, unsigned left, const Polynomial& acc) -> void {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t k = from; k < gens.size(); ++k) self(self, k, left - 1, poly::mul(R, acc, gens[k]));
    };
    rec(rec, 0, m, poly::constant(R, 1));
    return out;
}

/// Elements of S as a rank-one free module.
inline FreeElement as_element(const Polynomial& p) { return FreeElement{p}; }

inline std::vector<FreeElement> as_elements(const std::vector<Polynomial>& ps)
{
    std::vector<FreeElement> out;
    for (const auto& p : ps) out.push_back(as_element(p));
    return out;
}

} // namespace kt
