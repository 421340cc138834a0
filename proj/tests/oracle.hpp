#pragma once

// Brute-force reference implementation used only by the tests. Monomials are sorted words of
// generator indices; signs come from an explicit bubble sort. Nothing here calls into the
// engine's arithmetic, only into its data accessors when importing a context.

#include "aq/der.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Poly = std::map<Word, mpq_class>;

struct Alg {
    std::vector<int> deg;
    std::vector<std::vector<unsigned>> relations;  // exponent vectors that generate the ideal
};

/// Bubble-sorts a word, flipping the sign for every swap of two odd letters.
/// Returns 0 when an odd letter repeats.
inline int bubble_sort(const Alg& a, Word& w)
{
    int sign = 1;
    for (std::size_t pass = 0; pass < w.size(); ++pass) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                if (a.deg[w[i]] % 2 != 0 && a.deg[w[i + 1]] % 2 != 0)
                    sign = -sign;
                std::swap(w[i], w[i + 1]);
            }
        }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1] && a.deg[w[i]] % 2 != 0)
            return 0;
    }
    return sign;
}

inline bool killed(const Alg& a, const Word& w)
{
    std::vector<unsigned> e(a.deg.size(), 0);
    for (int g : w)
        ++e[g];
    for (const auto& r : a.relations) {
        bool divides = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            divides = divides && r[i] <= e[i];
        if (divides)
            return true;
    }
    return false;
}

inline void add(Poly& p, const Word& w, const mpq_class& c)
{
    mpq_class& slot = p[w];
    slot += c;
    if (slot == 0)
        p.erase(w);
}

inline Poly add(Poly a, const Poly& b, const mpq_class& scale = 1)
{
    for (const auto& [w, c] : b)
        add(a, w, c * scale);
    return a;
}

inline Poly mul(const Alg& a, const Poly& p, const Poly& q)
{
    Poly out;
    for (const auto& [u, cu] : p) {
        for (const auto& [v, cv] : q) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            int s = bubble_sort(a, w);
            if (s != 0 && !killed(a, w))
                add(out, w, cu * cv * s);
        }
    }
    return out;
}

inline Poly one() { return Poly{{Word{}, mpq_class(1)}}; }

inline int word_degree(const Alg& a, const Word& w)
{
    int d = 0;
    for (int g : w)
        d += a.deg[g];
    return d;
}

struct Context {
    Alg src, tgt;
    std::vector<Poly> d_src, d_tgt, f;
    bool based = false;
};

inline Poly import(const aq::gca::Polynomial& p)
{
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Word w;
        for (std::size_t i = 0; i < m.exponents().size(); ++i)
            w.insert(w.end(), m.exponent(i), static_cast<int>(i));
        out[w] = c;
    }
    return out;
}

inline Alg import(const aq::gca::GradedAlgebra& alg)
{
    Alg a;
    for (const auto& g : alg.symbols())
        a.deg.push_back(g.degree);
    for (const auto& r : alg.ideal().generators())
        a.relations.push_back(r.exponents());
    return a;
}

inline Context import(const aq::der::DerContext& ctx)
{
    Context c;
    c.src = import(*ctx.source().algebra());
    c.tgt = import(*ctx.target().algebra());
    for (const auto& p : ctx.source().differential())
        c.d_src.push_back(import(p));
    for (const auto& p : ctx.target().differential())
        c.d_tgt.push_back(import(p));
    for (const auto& p : ctx.morphism().images())
        c.f.push_back(import(p));
    c.based = ctx.based();
    return c;
}

struct Der {
    int degree = 0;
    std::vector<Poly> values;
};

inline Der import(const aq::der::Derivation& theta)
{
    Der d{theta.degree, {}};
    for (const auto& v : theta.values)
        d.values.push_back(import(v));
    return d;
}

/// Product of factors in the given order.
inline Poly product(const Alg& a, const std::vector<const Poly*>& factors)
{
    Poly out = one();
    for (const auto* p : factors)
        out = mul(a, out, *p);
    return out;
}

/// θ on one source word, by the twisted Leibniz rule in the word's own order.
inline Poly eval_word(const Context& c, const Der& theta, const Word& w)
{
    Poly out;
    int passed = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<const Poly*> fs;
        for (std::size_t k = 0; k < w.size(); ++k)
            fs.push_back(k == i ? &theta.values[w[k]] : &c.f[w[k]]);
        int sign = (static_cast<long>(theta.degree) * passed) % 2 == 0 ? 1 : -1;
        out = add(out, product(c.tgt, fs), sign);
        passed += c.src.deg[w[i]];
    }
    return out;
}

inline Poly eval(const Context& c, const Der& theta, const Poly& p)
{
    Poly out;
    for (const auto& [w, coef] : p)
        out = add(out, eval_word(c, theta, w), coef);
    return out;
}

/// The target differential on a target polynomial, by the ordinary Leibniz rule.
inline Poly d_target(const Context& c, const Poly& p)
{
    Poly out;
    for (const auto& [w, coef] : p) {
        int passed = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Poly gens_before = one(), gens_after = one();
            for (std::size_t k = 0; k < i; ++k)
                gens_before = mul(c.tgt, gens_before, Poly{{Word{w[k]}, 1}});
            for (std::size_t k = i + 1; k < w.size(); ++k)
                gens_after = mul(c.tgt, gens_after, Poly{{Word{w[k]}, 1}});
            Poly term = mul(c.tgt, mul(c.tgt, gens_before, c.d_tgt[w[i]]), gens_after);
            out = add(out, term, coef * (passed % 2 == 0 ? 1 : -1));
            passed += c.tgt.deg[w[i]];
        }
    }
    return out;
}

inline Der boundary(const Context& c, const Der& theta)
{
    Der out{theta.degree + 1, {}};
    int sign = theta.degree % 2 == 0 ? 1 : -1;
    for (std::size_t v = 0; v < theta.values.size(); ++v)
        out.values.push_back(add(d_target(c, theta.values[v]), eval(c, theta, c.d_src[v]), -sign));
    return out;
}

/// The bracket on one word v_1 ... v_s of dv, written term by term as in its defining formula.
inline Poly bracket_word(const Context& c, const Der& phi, const Der& psi, const Word& w)
{
    const long a = phi.degree, b = psi.degree;
    Poly out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (i == j)
                continue;
            long before_i = 0, before_j = 0;
            for (std::size_t k = 0; k < i; ++k)
                before_i += c.src.deg[w[k]];
            for (std::size_t k = 0; k < j; ++k)
                before_j += c.src.deg[w[k]];
            long eps = a * before_i + b * before_j + (i < j ? a * b : 0);
            std::vector<const Poly*> fs;
            for (std::size_t k = 0; k < w.size(); ++k)
                fs.push_back(k == i ? &phi.values[w[k]] : k == j ? &psi.values[w[k]] : &c.f[w[k]]);
            long total = eps + a + b - 1;
            out = add(out, product(c.tgt, fs), ((total % 2) + 2) % 2 == 0 ? 1 : -1);
        }
    }
    return out;
}

inline Der bracket(const Context& c, const Der& phi, const Der& psi)
{
    Der out{phi.degree + psi.degree + 1, {}};
    for (const auto& dv : c.d_src) {
        Poly val;
        for (const auto& [w, coef] : dv)
            val = add(val, bracket_word(c, phi, psi, w), coef);
        out.values.push_back(std::move(val));
    }
    return out;
}

inline bool same(const Poly& a, const aq::gca::Polynomial& b) { return a == import(b); }

inline bool same(const Der& a, const aq::der::Derivation& b)
{
    if (a.degree != b.degree || a.values.size() != b.values.size())
        return false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (!same(a.values[i], b.values[i]))
            return false;
    }
    return true;
}

}  // namespace oracle
