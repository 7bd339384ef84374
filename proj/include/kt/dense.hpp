#pragma once

// Dense matrices over F_p and graded pieces of free modules.

#include <map>
#include <optional>
#include <vector>

#include "kt/free_module.hpp"

namespace kt {

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Coeff& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Coeff at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Side-by-side concatenation; row counts must agree.
    static DenseMatrix hcat(const DenseMatrix& a, const DenseMatrix& b)
    {
        if (a.rows_ != b.rows_) throw ValidationError("hcat of matrices with different row counts");
        DenseMatrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    DenseMatrix multiply(const PrimeField& K, const DenseMatrix& b) const
    {
        DenseMatrix r(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                Coeff a = at(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) = K.add(r.at(i, j), K.mul(a, b.at(k, j)));
            }
        return r;
    }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> row_reduce(const PrimeField& K)
    {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c) == 0) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            Coeff inv = K.inv(at(r, c));
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = K.mul(at(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                Coeff f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) = K.sub(at(i, j), K.mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank(const PrimeField& K) const
    {
        DenseMatrix m = *this;
        return m.row_reduce(K).size();
    }

    /// Basis of {x : A x = 0}, one vector per free column.
    std::vector<std::vector<Coeff>> nullspace(const PrimeField& K) const
    {
        DenseMatrix m = *this;
        auto pivots = m.row_reduce(K);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Coeff>> out;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Coeff> v(cols_, 0);
            v[f] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K.neg(m.at(r, f));
            out.push_back(std::move(v));
        }
        return out;
    }

    /// Some x with A x = b, if any.
    std::optional<std::vector<Coeff>> solve(const PrimeField& K, const std::vector<Coeff>& b) const
    {
        DenseMatrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b.at(i);
        }
        auto pivots = aug.row_reduce(K);
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Coeff> x(cols_, 0);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
        return x;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Coeff> data_;
};

/// Basis of the degree-t piece of a free module: pairs (generator, monomial).
class GradedPiece {
public:
    GradedPiece(const GradedPolyRing& R, const GradedFreeModule& F, int t)
    {
        for (std::size_t i = 0; i < F.rank(); ++i) {
            auto ms = R.monomials_of_degree(t - F.degree(i));
            for (auto& m : ms) {
                index_[{i, m.exps}] = basis_.size();
                basis_.push_back({i, std::move(m)});
            }
        }
    }

    std::size_t dim() const noexcept { return basis_.size(); }
    const std::pair<std::size_t, Monomial>& at(std::size_t k) const { return basis_.at(k); }

    std::optional<std::size_t> index(std::size_t gen, const Monomial& m) const
    {
        auto it = index_.find({gen, m.exps});
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Coordinates of a homogeneous degree-t element.
    std::vector<Coeff> coords(const FreeElement& v) const
    {
        std::vector<Coeff> c(dim(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (const Term& t : v[i].terms) {
                auto k = index(i, t.mono);
                if (!k) throw ValidationError("element does not lie in this graded piece");
                c[*k] = t.coeff;
            }
        return c;
    }

    FreeElement element(const GradedPolyRing& R, std::size_t rank, const std::vector<Coeff>& c) const
    {
        FreeElement v(rank);
        for (std::size_t k = 0; k < dim(); ++k)
            if (c[k]) v[basis_[k].first] = poly::add(R, v[basis_[k].first], poly::monomial(R, basis_[k].second, c[k]));
        return v;
    }

private:
    std::vector<std::pair<std::size_t, Monomial>> basis_;
    std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index_;
};

/// Matrix of m restricted to degree-t pieces (rows: target piece, cols: source piece).
inline DenseMatrix graded_piece_matrix(const GradedPolyRing& R, const GradedMatrix& m, int t, const GradedPiece& src, const GradedPiece& tgt)
{
    DenseMatrix d(tgt.dim(), src.dim());
    for (std::size_t k = 0; k < src.dim(); ++k) {
        const auto& [j, mono] = src.at(k);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (const Term& term : m.at(i, j).terms) {
                auto r = tgt.index(i, R.mul(term.mono, mono));
                if (r) d.at(*r, k) = R.field().add(d.at(*r, k), term.coeff);
            }
    }
    (void)t;
    return d;
}

inline DenseMatrix graded_piece_matrix(const GradedPolyRing& R, const GradedMatrix& m, int t)
{
    GradedPiece src(R, m.source(), t), tgt(R, m.target(), t);
    return graded_piece_matrix(R, m, t, src, tgt);
}

/// Matrix whose columns are the degree-t coordinates of the given elements
/// multiplied by every monomial of the right degree: the spanning set of
/// the degree-t piece of the submodule they generate.
inline DenseMatrix span_matrix(const GradedPolyRing& R, const GradedFreeModule& F, const std::vector<FreeElement>& gens, int t, const GradedPiece& piece)
{
    std::vector<std::vector<Coeff>> cols;
    for (const auto& g : gens) {
        auto d = vec::degree(g, F);
        if (!d || *d > t) continue;
        for (const auto& m : R.monomials_of_degree(t - *d)) cols.push_back(piece.coords(vec::mul_term(R, g, m, 1)));
    }
    DenseMatrix out(piece.dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < piece.dim(); ++i) out.at(i, j) = cols[j][i];
    return out;
}

} // namespace kt
