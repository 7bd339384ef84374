#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kt/ring.hpp"

namespace kt {

struct Term {
    Monomial mono;
    Coeff coeff = 0;
};

/// Sparse polynomial; terms sorted strictly descending in the ring's order,
/// coefficients nonzero. Arithmetic lives in the free functions below, which
/// take the ring as context.
struct Polynomial {
    std::vector<Term> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    const Term& leading() const { return terms.front(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.terms.size() != b.terms.size()) return false;
        for (std::size_t i = 0; i < a.terms.size(); ++i)
            if (a.terms[i].coeff != b.terms[i].coeff || !(a.terms[i].mono == b.terms[i].mono)) return false;
        return true;
    }
};

namespace poly {

inline Polynomial constant(const GradedPolyRing& R, long long c)
{
    Polynomial p;
    Coeff v = R.field().reduce(c);
    if (v) p.terms.push_back({R.one(), v});
    return p;
}

inline Polynomial monomial(const GradedPolyRing& R, const Monomial& m, Coeff c = 1)
{
    Polynomial p;
    c = R.field().reduce(c);
    if (c) p.terms.push_back({m, c});
    return p;
}

inline Polynomial variable(const GradedPolyRing& R, std::size_t i) { return monomial(R, R.var(i)); }

inline Polynomial add(const GradedPolyRing& R, const Polynomial& a, const Polynomial& b)
{
    Polynomial r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = R.compare(a.terms[i].mono, b.terms[j].mono);
        if (c > 0) r.terms.push_back(a.terms[i++]);
        else if (c < 0) r.terms.push_back(b.terms[j++]);
        else {
            Coeff s = R.field().add(a.terms[i].coeff, b.terms[j].coeff);
            if (s) r.terms.push_back({a.terms[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

inline Polynomial scale(const GradedPolyRing& R, const Polynomial& a, Coeff c)
{
    Polynomial r;
    c = R.field().reduce(c);
    if (!c) return r;
    r.terms.reserve(a.terms.size());
    for (const Term& t : a.terms) r.terms.push_back({t.mono, R.field().mul(t.coeff, c)});
    return r;
}

inline Polynomial neg(const GradedPolyRing& R, const Polynomial& a) { return scale(R, a, R.characteristic() - 1); }

inline Polynomial sub(const GradedPolyRing& R, const Polynomial& a, const Polynomial& b) { return add(R, a, neg(R, b)); }

inline Polynomial mul_term(const GradedPolyRing& R, const Polynomial& a, const Monomial& m, Coeff c)
{
    Polynomial r;
    if (!c) return r;
    r.terms.reserve(a.terms.size());
    for (const Term& t : a.terms) r.terms.push_back({R.mul(t.mono, m), R.field().mul(t.coeff, c)});
    return r;
}

inline Polynomial mul(const GradedPolyRing& R, const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    const Polynomial& small = a.terms.size() <= b.terms.size() ? a : b;
    const Polynomial& big = &small == &a ? b : a;
    Polynomial r;
    for (const Term& t : small.terms) r = add(R, r, mul_term(R, big, t.mono, t.coeff));
    return r;
}

inline Polynomial pow(const GradedPolyRing& R, Polynomial a, unsigned long long e)
{
    Polynomial r = constant(R, 1);
    while (e) {
        if (e & 1) r = mul(R, r, a);
        e >>= 1;
        if (e) a = mul(R, a, a);
    }
    return r;
}

/// True for zero and for polynomials whose terms share one weighted degree.
inline bool is_homogeneous(const Polynomial& a)
{
    for (const Term& t : a.terms)
        if (t.mono.degree != a.terms.front().mono.degree) return false;
    return true;
}

inline int degree(const Polynomial& a)
{
    if (a.is_zero()) throw ValidationError("degree of the zero polynomial");
    return a.leading().mono.degree;
}

/// Coefficient of the constant term (0 if absent).
inline Coeff constant_term(const Polynomial& a)
{
    if (a.is_zero() || a.terms.back().mono.degree != 0) return 0;
    return a.terms.back().coeff;
}

inline std::string monomial_string(const GradedPolyRing& R, const Monomial& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!s.empty()) s += "*";
        s += R.names()[i];
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

/// Canonical text: terms in descending order, coefficients in [0, p).
inline std::string to_string(const GradedPolyRing& R, const Polynomial& a)
{
    if (a.is_zero()) return "0";
    std::string s;
    for (const Term& t : a.terms) {
        if (!s.empty()) s += "+";
        std::string m = monomial_string(R, t.mono);
        if (m.empty()) s += std::to_string(t.coeff);
        else if (t.coeff == 1) s += m;
        else s += std::to_string(t.coeff) + "*" + m;
    }
    return s;
}

namespace detail {

class Parser {
public:
    Parser(const GradedPolyRing& R, std::string_view text) : R_(R), s_(text) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ValidationError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'", "polynomial");
    }

    Polynomial expr()
    {
        bool negate = false;
        skip();
        if (eat('-')) negate = true;
        else eat('+');
        Polynomial acc = term();
        if (negate) acc = neg(R_, acc);
        for (;;) {
            if (eat('+')) acc = add(R_, acc, term());
            else if (eat('-')) acc = sub(R_, acc, term());
            else return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (eat('*')) acc = mul(R_, acc, factor());
        return acc;
    }

    unsigned long long integer()
    {
        skip();
        std::size_t start = pos_;
        unsigned long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
            if (v > (1ull << 62)) fail("integer too large");
            ++pos_;
        }
        if (start == pos_) fail("expected integer");
        return v;
    }

    Polynomial factor()
    {
        skip();
        Polynomial base;
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = constant(R_, static_cast<long long>(integer() % R_.characteristic()));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto idx = R_.index_of(name);
            if (!idx) fail("unknown variable '" + name + "'");
            base = variable(R_, *idx);
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (eat('^')) base = pow(R_, base, integer());
        return base;
    }

    const GradedPolyRing& R_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse(const GradedPolyRing& R, std::string_view text) { return detail::Parser(R, text).parse(); }

/// Comma separated list; an empty string yields an empty list.
inline std::vector<Polynomial> parse_list(const GradedPolyRing& R, std::string_view text)
{
    std::vector<Polynomial> out;
    int depth = 0;
    std::size_t start = 0;
    bool any = false;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        char c = i < text.size() ? text[i] : ',';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            std::string_view piece = text.substr(start, i - start);
            bool blank = piece.find_first_not_of(" \t\n") == std::string_view::npos;
            if (!blank || any || i < text.size()) {
                if (blank) throw ValidationError("empty entry in list '" + std::string(text) + "'", "polynomial");
                out.push_back(parse(R, piece));
            }
            any = true;
            start = i + 1;
        }
    }
    return out;
}

} // namespace poly
} // namespace kt
