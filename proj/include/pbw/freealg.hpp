#pragma once

// Free associative algebra over the rationals: alphabets, words with the
// degree-lexicographic order, polynomials with a generic coefficient ring,
// and affine substitutions of generators.

#include "pbw/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbw {

using Letter = int;
using Word = std::vector<Letter>;  // sequence of generator indices

struct Alphabet {
    std::vector<std::string> names;
    std::vector<int> degrees;  // per-generator degree; always 1 in this tool, kept for forward compatibility

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> n) : names(std::move(n)), degrees(names.size(), 1) {}

    std::size_t size() const { return names.size(); }

    std::optional<int> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }
};

inline bool operator==(const Alphabet& a, const Alphabet& b) { return a.names == b.names; }

inline int word_degree(const Word& w) { return static_cast<int>(w.size()); }

// Degree-lexicographic comparison: first by degree, then by the first
// differing letter, smaller generator index first. Returns -1, 0 or 1.
inline int deg_lex_compare(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != v[k]) return u[k] < v[k] ? -1 : 1;
    return 0;
}

struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const { return deg_lex_compare(a, b) < 0; }
};
struct DegLexGreater {
    bool operator()(const Word& a, const Word& b) const { return deg_lex_compare(a, b) > 0; }
};

inline Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Leftmost occurrence of pattern as a factor of w, or nullopt. The empty
// pattern occurs at position 0.
inline std::optional<std::size_t> find_factor(const Word& w, const Word& pattern) {
    if (pattern.size() > w.size()) return std::nullopt;
    const std::size_t last = w.size() - pattern.size();
    for (std::size_t p = 0; p <= last; ++p) {
        bool hit = true;
        for (std::size_t k = 0; k < pattern.size(); ++k)
            if (w[p + k] != pattern[k]) { hit = false; break; }
        if (hit) return p;
    }
    return std::nullopt;
}

inline bool occurs_at(const Word& w, const Word& pattern, std::size_t pos) {
    if (pos + pattern.size() > w.size()) return false;
    for (std::size_t k = 0; k < pattern.size(); ++k)
        if (w[pos + k] != pattern[k]) return false;
    return true;
}

// Coefficient-ring hooks. Rational satisfies them out of the box; the
// commutative polynomial ring used for symbolic shifts provides overloads.
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline Rational coeff_from_rational(const Rational& c, const Rational&) { return c; }

// Polynomial in the free algebra with coefficients in C. Terms are kept
// sorted deg-lex descending with no zero coefficients, so the leading term
// is terms.front() and the homogeneous top part is a prefix.
template <typename C>
struct BasicNCPoly {
    std::vector<std::pair<Word, C>> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const { return terms.empty() ? -1 : word_degree(terms.front().first); }
    const Word& leading_word() const {
        if (terms.empty()) throw std::domain_error("leading_word of zero polynomial");
        return terms.front().first;
    }
    const C& leading_coeff() const {
        if (terms.empty()) throw std::domain_error("leading_coeff of zero polynomial");
        return terms.front().second;
    }
};

using NCPoly = BasicNCPoly<Rational>;

template <typename C>
bool operator==(const BasicNCPoly<C>& f, const BasicNCPoly<C>& g) {
    return f.terms == g.terms;
}
template <typename C>
bool operator!=(const BasicNCPoly<C>& f, const BasicNCPoly<C>& g) {
    return !(f == g);
}

// Builds a polynomial from arbitrary (word, coeff) pairs: sorts, merges
// duplicates, drops zeros.
template <typename C>
BasicNCPoly<C> make_poly(std::vector<std::pair<Word, C>> raw) {
    std::map<Word, C, DegLexGreater> acc;
    for (auto& [w, c] : raw) {
        auto it = acc.find(w);
        if (it == acc.end())
            acc.emplace(std::move(w), std::move(c));
        else
            it->second = it->second + c;
    }
    BasicNCPoly<C> f;
    f.terms.reserve(acc.size());
    for (auto& [w, c] : acc)
        if (!coeff_is_zero(c)) f.terms.emplace_back(w, c);
    return f;
}

template <typename C>
BasicNCPoly<C> nc_monomial(Word w, C c) {
    BasicNCPoly<C> f;
    if (!coeff_is_zero(c)) f.terms.emplace_back(std::move(w), std::move(c));
    return f;
}

inline NCPoly nc_constant(const Rational& c) { return nc_monomial<Rational>({}, c); }
inline NCPoly nc_generator(int i) { return nc_monomial<Rational>({i}, Rational(1)); }

template <typename C>
BasicNCPoly<C> nc_add(const BasicNCPoly<C>& f, const BasicNCPoly<C>& g) {
    BasicNCPoly<C> r;
    r.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int cmp = deg_lex_compare(f.terms[i].first, g.terms[j].first);
        if (cmp > 0) {
            r.terms.push_back(f.terms[i++]);
        } else if (cmp < 0) {
            r.terms.push_back(g.terms[j++]);
        } else {
            C c = f.terms[i].second + g.terms[j].second;
            if (!coeff_is_zero(c)) r.terms.emplace_back(f.terms[i].first, std::move(c));
            ++i, ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

template <typename C>
BasicNCPoly<C> nc_neg(BasicNCPoly<C> f) {
    for (auto& [w, c] : f.terms) c = -c;
    return f;
}

template <typename C>
BasicNCPoly<C> nc_sub(const BasicNCPoly<C>& f, const BasicNCPoly<C>& g) {
    return nc_add(f, nc_neg(g));
}

template <typename C, typename S>
BasicNCPoly<C> nc_scale(BasicNCPoly<C> f, const S& s) {
    BasicNCPoly<C> r;
    r.terms.reserve(f.terms.size());
    for (auto& [w, c] : f.terms) {
        C cs = c * s;
        if (!coeff_is_zero(cs)) r.terms.emplace_back(std::move(w), std::move(cs));
    }
    return r;
}

template <typename C>
BasicNCPoly<C> nc_mul(const BasicNCPoly<C>& f, const BasicNCPoly<C>& g) {
    std::map<Word, C, DegLexGreater> acc;
    for (const auto& [wf, cf] : f.terms)
        for (const auto& [wg, cg] : g.terms) {
            Word w = word_concat(wf, wg);
            C c = cf * cg;
            auto it = acc.find(w);
            if (it == acc.end())
                acc.emplace(std::move(w), std::move(c));
            else
                it->second = it->second + c;
        }
    BasicNCPoly<C> r;
    r.terms.reserve(acc.size());
    for (auto& [w, c] : acc)
        if (!coeff_is_zero(c)) r.terms.emplace_back(w, c);
    return r;
}

// c * u * f * v for a reduction step.
template <typename C>
BasicNCPoly<C> nc_sandwich(const C& c, const Word& u, const BasicNCPoly<C>& f, const Word& v) {
    BasicNCPoly<C> r;
    r.terms.reserve(f.terms.size());
    for (const auto& [w, cf] : f.terms) {
        C cc = cf * c;
        if (coeff_is_zero(cc)) continue;
        Word uwv = word_concat(word_concat(u, w), v);
        r.terms.emplace_back(std::move(uwv), std::move(cc));
    }
    // Concatenation with fixed u, v preserves the deg-lex order of the middles.
    return r;
}

// Leading homogeneous part: the top-degree terms.
template <typename C>
BasicNCPoly<C> lh(const BasicNCPoly<C>& f) {
    if (f.is_zero()) throw std::domain_error("lh of zero polynomial");
    const int d = f.degree();
    BasicNCPoly<C> r;
    for (const auto& t : f.terms) {
        if (word_degree(t.first) != d) break;  // terms are grouped by degree, largest first
        r.terms.push_back(t);
    }
    return r;
}

template <typename C>
BasicNCPoly<C> homogeneous_part(const BasicNCPoly<C>& f, int d) {
    BasicNCPoly<C> r;
    for (const auto& t : f.terms)
        if (word_degree(t.first) == d) r.terms.push_back(t);
    return r;
}

template <typename C>
bool is_homogeneous(const BasicNCPoly<C>& f) {
    if (f.is_zero()) return true;
    return word_degree(f.terms.back().first) == f.degree();
}

// Substitutes images[i] for generator i and expands. Images may live over a
// larger coefficient ring; `embed` lifts the rational coefficients of f.
template <typename C>
BasicNCPoly<C> substitute(const NCPoly& f, const std::vector<BasicNCPoly<C>>& images) {
    BasicNCPoly<C> result;
    for (const auto& [w, c] : f.terms) {
        BasicNCPoly<C> prod = nc_monomial<C>({}, coeff_from_rational(c, C{}));
        for (Letter x : w) {
            if (x < 0 || static_cast<std::size_t>(x) >= images.size())
                throw std::out_of_range("substitute: letter outside image table");
            prod = nc_mul(prod, images[static_cast<std::size_t>(x)]);
        }
        result = nc_add(result, prod);
    }
    return result;
}

}  // namespace pbw
