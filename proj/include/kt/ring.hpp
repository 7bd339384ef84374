#pragma once

// Prime fields, weighted polynomial rings and their monomials.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kt/error.hpp"

namespace kt {

using Coeff = std::uint32_t;

/// Arithmetic in F_p. Elements are kept in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p)
    {
        if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime", "ring");
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    Coeff reduce(long long v) const noexcept
    {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    Coeff add(Coeff a, Coeff b) const noexcept
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Coeff>(s >= p_ ? s - p_ : s);
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : static_cast<Coeff>(a + (p_ - b)); }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>((std::uint64_t(a) * b) % p_); }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept
    {
        Coeff r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Coeff inv(Coeff a) const
    {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

    static bool is_prime(std::uint32_t n) noexcept
    {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

/// Exponent vector with its cached weighted degree.
struct Monomial {
    std::vector<int> exps;
    int degree = 0;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

/// F_p[x_1..x_k] graded by positive integer weights. Monomials are compared in
/// weighted-degree reverse-lexicographic order.
class GradedPolyRing {
public:
    GradedPolyRing(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights)
        : field_(p), names_(std::move(names)), weights_(std::move(weights))
    {
        if (names_.size() != weights_.size())
            throw ValidationError("variable and weight counts differ", "ring");
        std::set<std::string> seen;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (weights_[i] < 1)
                throw ValidationError("weight of '" + names_[i] + "' must be >= 1", "ring");
            if (names_[i].empty() || !seen.insert(names_[i]).second)
                throw ValidationError("variable names must be distinct and nonempty", "ring");
        }
    }

    /// Unit weights.
    GradedPolyRing(std::uint32_t p, std::vector<std::string> names)
        : GradedPolyRing(p, names, std::vector<int>(names.size(), 1)) {}

    const PrimeField& field() const noexcept { return field_; }
    std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<int>& weights() const noexcept { return weights_; }
    int weight(std::size_t i) const { return weights_.at(i); }

    std::optional<std::size_t> index_of(const std::string& name) const
    {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }

    Monomial one() const { return Monomial{std::vector<int>(nvars(), 0), 0}; }

    Monomial var(std::size_t i, int power = 1) const
    {
        Monomial m = one();
        m.exps.at(i) = power;
        m.degree = weights_[i] * power;
        return m;
    }

    Monomial make(std::vector<int> exps) const
    {
        if (exps.size() != nvars()) throw ValidationError("exponent vector has wrong length");
        int d = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0) throw ValidationError("negative exponent");
            d += exps[i] * weights_[i];
        }
        return Monomial{std::move(exps), d};
    }

    Monomial mul(const Monomial& a, const Monomial& b) const
    {
        Monomial r{a.exps, a.degree + b.degree};
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
        return r;
    }

    bool divides(const Monomial& a, const Monomial& b) const noexcept
    {
        if (a.degree > b.degree) return false;
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] > b.exps[i]) return false;
        return true;
    }

    /// b / a, assuming a | b.
    Monomial quotient(const Monomial& b, const Monomial& a) const
    {
        Monomial r{b.exps, b.degree - a.degree};
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= a.exps[i];
        return r;
    }

    Monomial lcm(const Monomial& a, const Monomial& b) const
    {
        Monomial r{a.exps, 0};
        for (std::size_t i = 0; i < r.exps.size(); ++i) {
            r.exps[i] = std::max(a.exps[i], b.exps[i]);
            r.degree += r.exps[i] * weights_[i];
        }
        return r;
    }

    Monomial pow(const Monomial& a, int e) const
    {
        Monomial r{a.exps, a.degree * e};
        for (int& x : r.exps) x *= e;
        return r;
    }

    /// Weighted degrevlex: -1 if a < b, 0 if equal, 1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const noexcept
    {
        if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        for (std::size_t i = a.exps.size(); i-- > 0;) {
            if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
        }
        return 0;
    }

    /// All monomials of weighted degree d, in descending monomial order.
    std::vector<Monomial> monomials_of_degree(int d) const
    {
        std::vector<Monomial> out;
        if (d < 0) return out;
        std::vector<int> e(nvars(), 0);
        enumerate(0, d, e, out);
        std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
        return out;
    }

    /// Textual form `p=<prime>; vars <name>:<weight> ...;`.
    std::string describe() const
    {
        std::string s = "p=" + std::to_string(characteristic()) + "; vars";
        for (std::size_t i = 0; i < nvars(); ++i) s += " " + names_[i] + ":" + std::to_string(weights_[i]);
        return s + ";";
    }

    friend bool operator==(const GradedPolyRing& a, const GradedPolyRing& b)
    {
        return a.characteristic() == b.characteristic() && a.names_ == b.names_ && a.weights_ == b.weights_;
    }

private:
    void enumerate(std::size_t i, int remaining, std::vector<int>& e, std::vector<Monomial>& out) const
    {
        if (i == nvars()) {
            if (remaining == 0) out.push_back(make(e));
            return;
        }
        for (int k = 0; k * weights_[i] <= remaining; ++k) {
            e[i] = k;
            enumerate(i + 1, remaining - k * weights_[i], e, out);
        }
        e[i] = 0;
    }

    PrimeField field_;
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

} // namespace kt
