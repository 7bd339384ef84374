#pragma once

// Independent dense linear algebra used as an oracle by the tests and the
// acceptance suite: its own monomial enumeration, coordinate maps and
// Gaussian elimination.

#include <map>
#include <string>
#include <vector>

#include "kt/free_module.hpp"

namespace kt::oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long modp(long long a, long long p) { return ((a % p) + p) % p; }

inline long long inverse(long long a, long long p)
{
    long long r = 1, e = p - 2;
    a = modp(a, p);
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

inline std::size_t rank(Mat m, long long p)
{
    std::size_t rk = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
        std::size_t piv = rk;
        while (piv < m.size() && modp(m[piv][c], p) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rk]);
        long long inv = inverse(m[rk][c], p);
        for (std::size_t r = rk + 1; r < m.size(); ++r) {
            long long f = modp(m[r][c], p) * inv % p;
            if (!f) continue;
            for (std::size_t k = c; k < cols; ++k) m[r][k] = modp(m[r][k] - f * m[rk][k], p);
        }
        ++rk;
    }
    return rk;
}

inline void exps_of_degree(const std::vector<int>& w, std::size_t i, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (i == w.size()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    for (int k = 0; k * w[i] <= left; ++k) {
        cur[i] = k;
        exps_of_degree(w, i + 1, left - k * w[i], cur, out);
    }
    cur[i] = 0;
}

/// Coordinates of the degree-t piece keyed by (generator, exponent vector).
struct Piece {
    std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index;
    std::vector<std::pair<std::size_t, std::vector<int>>> basis;

    Piece(const kt::GradedPolyRing& R, const kt::GradedFreeModule& F, int t)
    {
        for (std::size_t i = 0; i < F.rank(); ++i) {
            int d = t - F.degree(i);
            if (d < 0) continue;
            std::vector<std::vector<int>> es;
            std::vector<int> cur(R.nvars(), 0);
            exps_of_degree(R.weights(), 0, d, cur, es);
            for (auto& e : es) {
                index[{i, e}] = basis.size();
                basis.push_back({i, e});
            }
        }
    }
    std::size_t dim() const { return basis.size(); }

    std::vector<long long> coords(const kt::FreeElement& v) const
    {
        std::vector<long long> c(dim(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (const auto& term : v[i].terms) c.at(index.at({i, term.mono.exps})) = term.coeff;
        return c;
    }
};

/// Columns = images of the source basis elements.
inline Mat piece_matrix(const kt::GradedPolyRing& R, const kt::GradedMatrix& m, int t)
{
    Piece src(R, m.source(), t), tgt(R, m.target(), t);
    Mat out(tgt.dim(), std::vector<long long>(src.dim(), 0));
    for (std::size_t k = 0; k < src.dim(); ++k) {
        kt::FreeElement e(m.cols());
        e[src.basis[k].first] = kt::poly::monomial(R, R.make(src.basis[k].second));
        auto img = kt::mat::apply(R, m, e);
        auto c = tgt.coords(img);
        for (std::size_t r = 0; r < c.size(); ++r) out[r][k] = c[r];
    }
    return out;
}

inline std::size_t rank_at(const kt::GradedPolyRing& R, const kt::GradedMatrix& m, int t)
{
    return rank(piece_matrix(R, m, t), R.characteristic());
}

inline std::size_t kernel_dim(const kt::GradedPolyRing& R, const kt::GradedMatrix& m, int t)
{
    return Piece(R, m.source(), t).dim() - rank_at(R, m, t);
}

/// Dimension of the degree-t piece of the submodule generated by gens.
inline std::size_t span_dim(const kt::GradedPolyRing& R, const kt::GradedFreeModule& F, const std::vector<kt::FreeElement>& gens, int t)
{
    Piece piece(R, F, t);
    Mat cols;
    for (const auto& g : gens) {
        auto d = kt::vec::degree(g, F);
        if (!d || *d > t) continue;
        std::vector<std::vector<int>> es;
        std::vector<int> cur(R.nvars(), 0);
        exps_of_degree(R.weights(), 0, t - *d, cur, es);
        for (auto& e : es) cols.push_back(piece.coords(kt::vec::mul_term(R, g, R.make(e), 1)));
    }
    return rank(cols, R.characteristic());
}

/// dim of the degree-t piece of ker(a) / im(b) where a∘b = 0.
inline long long homology_dim(const kt::GradedPolyRing& R, const kt::GradedMatrix* a, const kt::GradedMatrix* b, const kt::GradedFreeModule& mid, int t)
{
    long long dim = static_cast<long long>(Piece(R, mid, t).dim());
    if (a) dim -= static_cast<long long>(rank_at(R, *a, t));
    if (b) dim -= static_cast<long long>(rank_at(R, *b, t));
    return dim;
}

} // namespace kt::oracle
