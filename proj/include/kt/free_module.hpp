#pragma once

// Twisted graded free modules and degree-zero matrices between them.

#include <algorithm>
#include <string>
#include <vector>

#include "kt/polynomial.hpp"

namespace kt {

/// ⊕ S(-a_i) for the stored list (a_i).
struct GradedFreeModule {
    std::vector<int> degrees;

    GradedFreeModule() = default;
    explicit GradedFreeModule(std::vector<int> d) : degrees(std::move(d)) {}

    std::size_t rank() const noexcept { return degrees.size(); }
    int degree(std::size_t i) const { return degrees.at(i); }
    bool empty() const noexcept { return degrees.empty(); }

    /// Twist notation n_i = -a_i, i.e. the module is ⊕ S(n_i).
    std::vector<int> twists() const
    {
        std::vector<int> t;
        for (int a : degrees) t.push_back(-a);
        return t;
    }
    static GradedFreeModule from_twists(const std::vector<int>& t)
    {
        GradedFreeModule F;
        for (int n : t) F.degrees.push_back(-n);
        return F;
    }

    friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

inline GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b)
{
    GradedFreeModule r = a;
    r.degrees.insert(r.degrees.end(), b.degrees.begin(), b.degrees.end());
    return r;
}

/// F ⊗ G, basis ordered (i, k) with i major.
inline GradedFreeModule tensor(const GradedFreeModule& a, const GradedFreeModule& b)
{
    GradedFreeModule r;
    for (int x : a.degrees)
        for (int y : b.degrees) r.degrees.push_back(x + y);
    return r;
}

inline GradedFreeModule dual(const GradedFreeModule& a) { return GradedFreeModule(a.twists()); }

/// One coordinate per generator of the ambient module.
using FreeElement = std::vector<Polynomial>;

namespace vec {

inline FreeElement zero(std::size_t n) { return FreeElement(n); }

inline FreeElement basis(std::size_t n, std::size_t i, const GradedPolyRing& R)
{
    FreeElement v(n);
    v.at(i) = poly::constant(R, 1);
    return v;
}

inline bool is_zero(const FreeElement& v)
{
    return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

inline FreeElement add(const GradedPolyRing& R, const FreeElement& a, const FreeElement& b)
{
    FreeElement r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly::add(R, a[i], b[i]);
    return r;
}

inline FreeElement sub(const GradedPolyRing& R, const FreeElement& a, const FreeElement& b)
{
    FreeElement r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly::sub(R, a[i], b[i]);
    return r;
}

inline FreeElement scale(const GradedPolyRing& R, const FreeElement& a, const Polynomial& s)
{
    FreeElement r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly::mul(R, a[i], s);
    return r;
}

inline FreeElement mul_term(const GradedPolyRing& R, const FreeElement& a, const Monomial& m, Coeff c)
{
    FreeElement r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly::mul_term(R, a[i], m, c);
    return r;
}

inline FreeElement concat(const FreeElement& a, const FreeElement& b)
{
    FreeElement r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline FreeElement slice(const FreeElement& a, std::size_t from, std::size_t count)
{
    return FreeElement(a.begin() + static_cast<long>(from), a.begin() + static_cast<long>(from + count));
}

/// Degree of a homogeneous nonzero element of F, or nullopt for zero.
/// Throws if coordinates disagree.
inline std::optional<int> degree(const FreeElement& v, const GradedFreeModule& F)
{
    std::optional<int> d;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!poly::is_homogeneous(v[i])) throw ValidationError("element coordinate is not homogeneous");
        if (v[i].is_zero()) continue;
        int di = poly::degree(v[i]) + F.degree(i);
        if (d && *d != di) throw ValidationError("element is not homogeneous");
        d = di;
    }
    return d;
}

} // namespace vec

/// Degree-zero map source -> target; entries row-major, rows index target generators.
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(GradedFreeModule target, GradedFreeModule source)
        : target_(std::move(target)), source_(std::move(source)), entries_(target_.rank() * source_.rank()) {}

    static GradedMatrix from_rows(GradedFreeModule target, GradedFreeModule source, const std::vector<std::vector<Polynomial>>& rows)
    {
        GradedMatrix m(std::move(target), std::move(source));
        if (rows.size() != m.rows()) throw ValidationError("matrix row count does not match target rank");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols()) throw ValidationError("matrix column count does not match source rank");
            for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static GradedMatrix from_columns(GradedFreeModule target, GradedFreeModule source, const std::vector<FreeElement>& cols)
    {
        GradedMatrix m(std::move(target), std::move(source));
        if (cols.size() != m.cols()) throw ValidationError("column count does not match source rank");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows()) throw ValidationError("column length does not match target rank");
            for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    static GradedMatrix identity(const GradedPolyRing& R, const GradedFreeModule& F)
    {
        GradedMatrix m(F, F);
        for (std::size_t i = 0; i < F.rank(); ++i) m.at(i, i) = poly::constant(R, 1);
        return m;
    }

    const GradedFreeModule& target() const noexcept { return target_; }
    const GradedFreeModule& source() const noexcept { return source_; }
    std::size_t rows() const noexcept { return target_.rank(); }
    std::size_t cols() const noexcept { return source_.rank(); }

    Polynomial& at(std::size_t i, std::size_t j) { return entries_.at(i * cols() + j); }
    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }

    FreeElement column(std::size_t j) const
    {
        FreeElement c(rows());
        for (std::size_t i = 0; i < rows(); ++i) c[i] = at(i, j);
        return c;
    }
    std::vector<FreeElement> columns() const
    {
        std::vector<FreeElement> out;
        for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j));
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
    }

    /// Some entry has a nonzero constant term.
    bool has_unit_entry() const
    {
        return std::any_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return poly::constant_term(p) != 0; });
    }

    /// Throws unless every entry (i,j) is zero or homogeneous of degree a_j - b_i.
    void validate(const std::string& where = "matrix") const
    {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) {
                const Polynomial& p = at(i, j);
                if (p.is_zero()) continue;
                int want = source_.degree(j) - target_.degree(i);
                if (!poly::is_homogeneous(p) || poly::degree(p) != want)
                    throw ValidationError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not homogeneous of degree " + std::to_string(want), where);
            }
    }

    friend bool operator==(const GradedMatrix& a, const GradedMatrix& b)
    {
        return a.target_ == b.target_ && a.source_ == b.source_ && a.entries_ == b.entries_;
    }

private:
    GradedFreeModule target_;
    GradedFreeModule source_;
    std::vector<Polynomial> entries_;
};

namespace mat {

inline FreeElement apply(const GradedPolyRing& R, const GradedMatrix& m, const FreeElement& v)
{
    if (v.size() != m.cols()) throw ValidationError("vector length does not match matrix source");
    FreeElement r(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) r[i] = poly::add(R, r[i], poly::mul(R, m.at(i, j), v[j]));
    }
    return r;
}

/// a ∘ b.
inline GradedMatrix multiply(const GradedPolyRing& R, const GradedMatrix& a, const GradedMatrix& b)
{
    if (!(a.source() == b.target())) throw ValidationError("composition of maps with mismatched modules");
    GradedMatrix r(a.target(), b.source());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) = poly::add(R, r.at(i, j), poly::mul(R, a.at(i, k), b.at(k, j)));
        }
    return r;
}

inline GradedMatrix add(const GradedPolyRing& R, const GradedMatrix& a, const GradedMatrix& b)
{
    if (!(a.source() == b.source()) || !(a.target() == b.target())) throw ValidationError("sum of maps with mismatched modules");
    GradedMatrix r(a.target(), a.source());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = poly::add(R, a.at(i, j), b.at(i, j));
    return r;
}

inline GradedMatrix neg(const GradedPolyRing& R, const GradedMatrix& a)
{
    GradedMatrix r(a.target(), a.source());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = poly::neg(R, a.at(i, j));
    return r;
}

inline GradedMatrix sub(const GradedPolyRing& R, const GradedMatrix& a, const GradedMatrix& b) { return add(R, a, neg(R, b)); }

/// Map of duals G* -> F*.
inline GradedMatrix transpose(const GradedMatrix& a)
{
    GradedMatrix r(dual(a.source()), dual(a.target()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

/// [a b] : A ⊕ B -> T.
inline GradedMatrix hstack(const GradedMatrix& a, const GradedMatrix& b)
{
    if (!(a.target() == b.target())) throw ValidationError("hstack of maps with different targets");
    GradedMatrix r(a.target(), direct_sum(a.source(), b.source()));
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

/// [a; b] : S -> A ⊕ B.
inline GradedMatrix vstack(const GradedMatrix& a, const GradedMatrix& b)
{
    if (!(a.source() == b.source())) throw ValidationError("vstack of maps with different sources");
    GradedMatrix r(direct_sum(a.target(), b.target()), a.source());
    for (std::size_t j = 0; j < r.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

inline GradedMatrix block_diagonal(const GradedMatrix& a, const GradedMatrix& b)
{
    GradedMatrix r(direct_sum(a.target(), b.target()), direct_sum(a.source(), b.source()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

/// a ⊗ id_F.
inline GradedMatrix tensor(const GradedPolyRing& R, const GradedMatrix& a, const GradedFreeModule& F)
{
    (void)R;
    GradedMatrix r(tensor(a.target(), F), tensor(a.source(), F));
    std::size_t k = F.rank();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t l = 0; l < k; ++l) r.at(i * k + l, j * k + l) = a.at(i, j);
    return r;
}

/// a ⊗ b on tensor bases with the left factor major.
inline GradedMatrix kronecker(const GradedPolyRing& R, const GradedMatrix& a, const GradedMatrix& b)
{
    GradedMatrix r(tensor(a.target(), b.target()), tensor(a.source(), b.source()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = poly::mul(R, a.at(i, j), b.at(k, l));
        }
    return r;
}

/// Keep the listed rows and columns.
inline GradedMatrix submatrix(const GradedMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    GradedFreeModule t, s;
    for (std::size_t i : rows) t.degrees.push_back(a.target().degree(i));
    for (std::size_t j : cols) s.degrees.push_back(a.source().degree(j));
    GradedMatrix r(t, s);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = a.at(rows[i], cols[j]);
    return r;
}

inline GradedMatrix scale(const GradedPolyRing& R, const GradedMatrix& a, Coeff c)
{
    GradedMatrix r(a.target(), a.source());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = poly::scale(R, a.at(i, j), c);
    return r;
}

} // namespace mat
} // namespace kt
