#pragma once

// Local cohomology H^i_(f̃)(M) on a finite window of internal degrees, as the
// colimit of Koszul cohomology along the duals of κ and as the colimit of Ext
// along the directed system of Tate resolutions.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kt/resolution.hpp"
#include "kt/tate.hpp"

namespace kt {

/// H^i(f̃^n; M) = H_{-i} Hom(K(f̃^n), M).
inline PresentedModule koszul_cohomology(const GradedPolyRing& R, const std::vector<Polynomial>& f, int n, const PresentedModule& M, int i)
{
    if (n < 1) throw ValidationError("n must be at least 1", "koszul_cohomology");
    return presented_homology(R, hom(R, koszul(R, powers(R, f, static_cast<unsigned>(n))).complex, M), -i);
}

inline std::size_t koszul_cohomology_dim(const GradedPolyRing& R, const std::vector<Polynomial>& f, int n, const PresentedModule& M, int i, int t)
{
    if (n < 1) throw ValidationError("n must be at least 1", "koszul_cohomology");
    return presented_homology_dims(R, hom(R, koszul(R, powers(R, f, static_cast<unsigned>(n))).complex, M), -i, t);
}

/// Hom(κ^{n+1,n}, M) in cohomological degree i.
inline GradedMatrix koszul_transition(const GradedPolyRing& R, const std::vector<Polynomial>& f, int n, const PresentedModule& M, int i)
{
    return hom_map(R, kappa(R, n + 1, n, f), M, i);
}

/// Ext^i(S/(f̃^n), M) from the minimal free resolution of S/(f̃^n).
inline PresentedModule ext_module(const GradedPolyRing& R, const std::vector<Polynomial>& f, int n, const PresentedModule& M, int i)
{
    check_sequence(f, "ext_module");
    if (n < 1) throw ValidationError("n must be at least 1", "ext_module");
    auto res = free_resolution(R, PresentedModule::quotient(powers(R, f, static_cast<unsigned>(n))), static_cast<int>(R.nvars()) + 2);
    return presented_homology(R, hom(R, res.complex, M), -i);
}

struct LcWindow {
    int i_min = 0;
    int i_max = 0;
    int t_min = 0;
    int t_max = 0;
};

struct LcCell {
    int i = 0;
    int t = 0;
    std::size_t dim = 0;
    int stage = 0; // exponent n at which the cell stabilized, or the last one examined
    bool stable = false;
};

struct GradedDimTable {
    std::string method;
    std::vector<int> exponents; // n_k of every stage that was built
    std::vector<LcCell> cells;

    const LcCell* find(int i, int t) const
    {
        for (const auto& c : cells)
            if (c.i == i && c.t == t) return &c;
        return nullptr;
    }
    bool all_stable() const
    {
        for (const auto& c : cells)
            if (!c.stable) return false;
        return true;
    }
};

namespace detail {

struct CochainStage {
    int n = 0;
    PresentedComplex C;                  // Hom(X, M)
    std::function<GradedMatrix(int)> next; // cohomological degree i -> map to the next stage
};

/// Stages of a directed system of cochain complexes, built on demand.
class DirectedCochains {
public:
    DirectedCochains(const GradedPolyRing& R, std::function<bool(std::vector<CochainStage>&)> extend, int max_stages)
        : R_(R), extend_(std::move(extend)), max_(max_stages)
    {
    }

    bool ensure(std::size_t k)
    {
        while (stages_.size() <= k) {
            if (static_cast<int>(stages_.size()) >= max_ || !extend_(stages_)) return false;
        }
        return true;
    }

    const CochainStage& stage(std::size_t k) const { return stages_.at(k); }
    std::size_t size() const { return stages_.size(); }

    /// Columns spanning the cocycles of degree (i, t) at stage k, in the
    /// coordinates of the generator piece.
    const DenseMatrix& cocycles(std::size_t k, int i, int t) { return piece(k, i, t).Z; }
    const DenseMatrix& coboundaries(std::size_t k, int i, int t) { return piece(k, i, t).B; }

    /// Matrix of the transition from stage k to stage k+1 on (i, t) pieces.
    const DenseMatrix& transition(std::size_t k, int i, int t)
    {
        auto key = std::make_tuple(k, i, t);
        auto it = trans_.find(key);
        if (it != trans_.end()) return it->second;
        const auto& a = piece(k, i, t);
        const auto& b = piece(k + 1, i, t);
        DenseMatrix m(b.G.dim(), a.G.dim());
        if (a.G.dim() && b.G.dim()) m = graded_piece_matrix(R_, stages_[k].next(i), t, a.G, b.G);
        return trans_.emplace(key, std::move(m)).first->second;
    }

    std::size_t generator_dim(std::size_t k, int i, int t) { return piece(k, i, t).G.dim(); }

private:
    struct Piece {
        GradedPiece G;
        DenseMatrix Z;
        DenseMatrix B;
    };

    const Piece& piece(std::size_t k, int i, int t)
    {
        auto key = std::make_tuple(k, i, t);
        auto it = pieces_.find(key);
        if (it != pieces_.end()) return it->second;
        const PresentedComplex& C = stages_.at(k).C;
        const PresentedModule* M = C.term(-i);
        GradedFreeModule gens = M ? M->generators() : GradedFreeModule{};
        GradedPiece G(R_, gens, t);
        std::size_t g = G.dim();
        const auto& K = R_.field();

        DenseMatrix Z(g, 0);
        if (g) {
            const GradedMatrix* d = C.map(-i);
            const PresentedModule* up = C.term(-i - 1);
            if (d && up) {
                GradedPiece U(R_, up->generators(), t), Rsrc(R_, up->relations.source(), t);
                DenseMatrix A = DenseMatrix::hcat(graded_piece_matrix(R_, *d, t, G, U), graded_piece_matrix(R_, up->relations, t, Rsrc, U));
                auto ns = A.nullspace(K);
                DenseMatrix P(g, ns.size());
                for (std::size_t c = 0; c < ns.size(); ++c)
                    for (std::size_t r = 0; r < g; ++r) P.at(r, c) = ns[c][r];
                Z = P;
            } else {
                Z = DenseMatrix(g, g);
                for (std::size_t r = 0; r < g; ++r) Z.at(r, r) = 1;
            }
        }

        DenseMatrix B(g, 0);
        if (g) {
            GradedPiece Rsrc(R_, M->relations.source(), t);
            B = graded_piece_matrix(R_, M->relations, t, Rsrc, G);
            const GradedMatrix* e = C.map(-i + 1);
            const PresentedModule* down = C.term(-i + 1);
            if (e && down) {
                GradedPiece D(R_, down->generators(), t);
                B = DenseMatrix::hcat(graded_piece_matrix(R_, *e, t, D, G), B);
            }
        }
        return pieces_.emplace(key, Piece{std::move(G), std::move(Z), std::move(B)}).first->second;
    }

    const GradedPolyRing& R_;
    std::function<bool(std::vector<CochainStage>&)> extend_;
    int max_;
    std::vector<CochainStage> stages_;
    std::map<std::tuple<std::size_t, int, int>, Piece> pieces_;
    std::map<std::tuple<std::size_t, int, int>, DenseMatrix> trans_;
};

/// Rank of the image of H^i_t at stage k in H^i_t at stage k + j.
inline std::optional<std::size_t> image_rank(const PrimeField& K, DirectedCochains& sys, std::size_t k, std::size_t j, int i, int t)
{
    if (!sys.ensure(k + j)) return std::nullopt;
    DenseMatrix V = sys.cocycles(k, i, t);
    for (std::size_t s = 0; s < j; ++s) {
        if (V.cols() == 0) break;
        V = sys.transition(k + s, i, t).multiply(K, V);
    }
    const DenseMatrix& B = sys.coboundaries(k + j, i, t);
    if (V.cols() == 0 || V.rows() == 0) return 0;
    return DenseMatrix::hcat(V, B).rank(K) - B.rank(K);
}

/// Rank of the image of stage k in the colimit, read off once the image in
/// later stages stops shrinking.
inline std::optional<std::size_t> eventual_rank(const PrimeField& K, DirectedCochains& sys, std::size_t k, int i, int t)
{
    auto prev = image_rank(K, sys, k, 0, i, t);
    if (!prev) return std::nullopt;
    for (std::size_t j = 1;; ++j) {
        auto cur = image_rank(K, sys, k, j, i, t);
        if (!cur) return std::nullopt;
        if (*cur == *prev) return cur;
        prev = cur;
    }
}

inline int max_generator_degree(const PresentedModule& M)
{
    const auto& d = M.generators().degrees;
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

/// Sum of the i smallest degrees of the sequence.
inline int smallest_degree_sum(const std::vector<Polynomial>& f, int i)
{
    std::vector<int> d;
    for (std::size_t k = 0; k < f.size(); ++k) d.push_back(seq_degree(f, k));
    std::sort(d.begin(), d.end());
    int s = 0;
    for (int k = 0; k < i && k < static_cast<int>(d.size()); ++k) s += d[static_cast<std::size_t>(k)];
    return s;
}

/// A cell is stable at stage k once stages k and k+1 contribute images of the
/// same rank to the colimit; stages where the window cannot yet see the
/// generators of M in degree i are skipped.
inline GradedDimTable colimit_table(const GradedPolyRing& R, const std::vector<Polynomial>& f, const PresentedModule& M, const LcWindow& w, DirectedCochains& sys,
                                    std::string method)
{
    GradedDimTable table;
    table.method = std::move(method);
    const auto& K = R.field();
    int gmax = max_generator_degree(M);
    for (int i = w.i_min; i <= w.i_max; ++i) {
        int delta = smallest_degree_sum(f, i);
        for (int t = w.t_min; t <= w.t_max; ++t) {
            LcCell cell{i, t, 0, 0, false};
            std::optional<std::size_t> prev;
            for (std::size_t k = 0; sys.ensure(k); ++k) {
                int n = sys.stage(k).n;
                cell.stage = n;
                bool eligible = M.ngens() == 0 || i == 0 || t + n * delta >= gmax;
                if (!eligible) continue;
                auto s = eventual_rank(K, sys, k, i, t);
                if (!s) break;
                cell.dim = *s;
                if (prev && *prev == *s) {
                    cell.stable = true;
                    cell.stage = sys.stage(k - 1).n;
                    break;
                }
                prev = s;
            }
            table.cells.push_back(cell);
        }
    }
    for (std::size_t k = 0; k < sys.size(); ++k) table.exponents.push_back(sys.stage(k).n);
    return table;
}

} // namespace detail

inline GradedDimTable local_cohomology_koszul(const GradedPolyRing& R, const std::vector<Polynomial>& f, const PresentedModule& M, const LcWindow& w, int n_cap = 32)
{
    check_sequence(f, "local_cohomology_koszul");
    auto extend = [&](std::vector<detail::CochainStage>& st) {
        int n = static_cast<int>(st.size()) + 1;
        detail::CochainStage s;
        s.n = n;
        s.C = hom(R, koszul(R, powers(R, f, static_cast<unsigned>(n))).complex, M);
        s.next = [&R, &f, &M, n](int i) { return koszul_transition(R, f, n, M, i); };
        st.push_back(std::move(s));
        return true;
    };
    detail::DirectedCochains sys(R, extend, n_cap);
    return detail::colimit_table(R, f, M, w, sys, "koszul");
}

/// Same colimit along Hom(T(f̃^{n_k}), M) and the Tate directed system.
inline GradedDimTable local_cohomology_ext_tate(const GradedPolyRing& R, const std::vector<Polynomial>& f, const PresentedModule& M, const LcWindow& w, int depth = 32,
                                                std::optional<int> u_cap = std::nullopt)
{
    check_sequence(f, "local_cohomology_ext_tate");
    auto dsys = std::make_shared<DirectedSystem>(start_directed_system(R, f, 1));
    auto extend = [&R, &f, &M, dsys, u_cap](std::vector<detail::CochainStage>& st) {
        std::size_t k = st.size();
        if (k > 0) {
            extend_directed_system(R, f, *dsys, u_cap);
            ChainMap phi = dsys->maps[k - 1];
            st[k - 1].next = [&R, &M, phi](int i) { return hom_map(R, phi, M, i); };
        }
        detail::CochainStage s;
        s.n = dsys->stages[k].n;
        s.C = hom(R, dsys->stages[k].tate.complex, M);
        st.push_back(std::move(s));
        return true;
    };
    detail::DirectedCochains sys(R, extend, depth);
    return detail::colimit_table(R, f, M, w, sys, "ext");
}

struct PipelineMismatch {
    int i = 0;
    int t = 0;
    std::size_t koszul_dim = 0;
    std::size_t ext_dim = 0;
};

struct PipelineComparison {
    GradedDimTable koszul;
    GradedDimTable ext;
    std::vector<PipelineMismatch> mismatches;
    std::vector<std::pair<int, int>> unstable;
    bool agree() const { return mismatches.empty() && unstable.empty(); }
};

inline PipelineComparison compare_pipelines(const GradedPolyRing& R, const std::vector<Polynomial>& f, const PresentedModule& M, const LcWindow& w, int n_cap = 32,
                                            int depth = 32)
{
    PipelineComparison c;
    c.koszul = local_cohomology_koszul(R, f, M, w, n_cap);
    c.ext = local_cohomology_ext_tate(R, f, M, w, depth);
    for (const auto& a : c.koszul.cells) {
        const LcCell* b = c.ext.find(a.i, a.t);
        if (!a.stable || !b->stable) c.unstable.push_back({a.i, a.t});
        else if (a.dim != b->dim) c.mismatches.push_back({a.i, a.t, a.dim, b->dim});
    }
    return c;
}

} // namespace kt
