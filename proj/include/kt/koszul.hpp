#pragma once

// Koszul complexes on homogeneous sequences and the power maps κ^{n,m}.

#include <vector>

#include "kt/homology.hpp"

namespace kt {

using Subset = std::vector<std::size_t>;

/// All j-element subsets of {0..d-1} in lexicographic order.
inline std::vector<Subset> subsets(std::size_t d, std::size_t j)
{
    std::vector<Subset> out;
    Subset cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == j) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < d; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct KoszulComplex {
    FreeComplex complex;
    std::vector<Polynomial> sequence;
    std::map<int, std::vector<Subset>> labels; // basis e_J of each term
};

inline void check_sequence(const std::vector<Polynomial>& f, const char* where)
{
    if (f.empty()) throw ValidationError("sequence must be nonempty", where);
    for (const auto& p : f)
        if (!poly::is_homogeneous(p)) throw ValidationError("sequence element is not homogeneous", where);
}

inline int seq_degree(const std::vector<Polynomial>& f, std::size_t i) { return f[i].is_zero() ? 0 : poly::degree(f[i]); }

/// ∂(e_J) = Σ_k (-1)^k f_{J[k]} e_{J \ J[k]}.
inline KoszulComplex koszul(const GradedPolyRing& R, const std::vector<Polynomial>& f)
{
    check_sequence(f, "koszul");
    KoszulComplex K;
    K.sequence = f;
    std::size_t d = f.size();
    std::map<int, GradedFreeModule> terms;
    std::map<int, GradedMatrix> diffs;
    for (std::size_t j = 0; j <= d; ++j) {
        K.labels[static_cast<int>(j)] = subsets(d, j);
        GradedFreeModule F;
        for (const auto& J : K.labels[static_cast<int>(j)]) {
            int a = 0;
            for (auto i : J) a += seq_degree(f, i);
            F.degrees.push_back(a);
        }
        terms[static_cast<int>(j)] = F;
    }
    for (std::size_t j = 1; j <= d; ++j) {
        const auto& src = K.labels[static_cast<int>(j)];
        const auto& tgt = K.labels[static_cast<int>(j - 1)];
        GradedMatrix m(terms[static_cast<int>(j - 1)], terms[static_cast<int>(j)]);
        for (std::size_t c = 0; c < src.size(); ++c)
            for (std::size_t k = 0; k < j; ++k) {
                Subset rest = src[c];
                rest.erase(rest.begin() + static_cast<long>(k));
                std::size_t row = static_cast<std::size_t>(std::find(tgt.begin(), tgt.end(), rest) - tgt.begin());
                Polynomial e = f[src[c][k]];
                m.at(row, c) = (k % 2 == 0) ? e : poly::neg(R, e);
            }
        diffs[static_cast<int>(j)] = m;
    }
    K.complex = FreeComplex(R, terms, diffs);
    return K;
}

inline std::vector<Polynomial> powers(const GradedPolyRing& R, const std::vector<Polynomial>& f, unsigned n)
{
    std::vector<Polynomial> out;
    for (const auto& p : f) out.push_back(poly::pow(R, p, n));
    return out;
}

/// K(f̃) ⊗ F for a free module F.
inline FreeComplex koszul_with_coeffs(const GradedPolyRing& R, const std::vector<Polynomial>& f, const GradedFreeModule& F)
{
    return tensor(R, koszul(R, f).complex, F);
}

/// K(f̃) ⊗ M for a presented module M: terms Λ^j ⊗ M, differentials ∂ ⊗ 1.
inline PresentedComplex koszul_with_coeffs(const GradedPolyRing& R, const std::vector<Polynomial>& f, const PresentedModule& M)
{
    return tensor(R, koszul(R, f).complex, M);
}

/// κ^{n,m} : K(f̃^n) -> K(f̃^m), e_J ↦ (Π_{i∈J} f_i)^{n-m} e_J.
inline ChainMap kappa(const GradedPolyRing& R, int n, int m, const std::vector<Polynomial>& f)
{
    if (m < 1 || n < m) throw ValidationError("kappa needs n >= m >= 1", "kappa");
    KoszulComplex src = koszul(R, powers(R, f, static_cast<unsigned>(n)));
    KoszulComplex tgt = koszul(R, powers(R, f, static_cast<unsigned>(m)));
    std::map<int, GradedMatrix> maps;
    for (const auto& [j, labels] : src.labels) {
        GradedMatrix g(tgt.complex.term(j), src.complex.term(j));
        for (std::size_t c = 0; c < labels.size(); ++c) {
            Polynomial p = poly::constant(R, 1);
            for (auto i : labels[c]) p = poly::mul(R, p, f[i]);
            g.at(c, c) = poly::pow(R, p, static_cast<unsigned>(n - m));
        }
        maps[j] = g;
    }
    return ChainMap(R, src.complex, tgt.complex, maps);
}

} // namespace kt
