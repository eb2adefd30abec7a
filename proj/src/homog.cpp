#include "pbw/homog.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbw {

NCPoly homogenize_poly(const NCPoly& f, int target_degree) {
    std::vector<std::pair<Word, Rational>> raw;
    raw.reserve(f.terms.size());
    for (const auto& [w, c] : f.terms) {
        if (static_cast<int>(w.size()) > target_degree)
            throw std::invalid_argument("homogenize_poly: term degree exceeds target");
        Word nw;
        nw.reserve(static_cast<std::size_t>(target_degree));
        for (Letter a : w) nw.push_back(a + 1);
        nw.resize(static_cast<std::size_t>(target_degree), 0);  // pad with the new letter
        raw.push_back({std::move(nw), c});
    }
    return make_poly(std::move(raw));
}

Presentation homogenize_presentation(const Presentation& p) {
    if (p.central_index) throw std::invalid_argument("presentation already has a central generator");
    Presentation out;
    std::vector<std::string> names;
    names.reserve(p.alphabet.size() + 1);
    names.push_back("t");
    for (const auto& n : p.alphabet.names) names.push_back(n);
    out.alphabet = Alphabet(std::move(names));
    out.central_index = 0;
    for (const auto& r : p.relations) {
        if (r.is_zero()) continue;
        out.relations.push_back(homogenize_poly(r, r.degree()));
    }
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
        const Letter x = static_cast<Letter>(i + 1);
        out.relations.push_back(nc_sub(nc_monomial<Rational>({x, 0}, 1), nc_monomial<Rational>({0, x}, 1)));
    }
    return out;
}

namespace {

Word strip_letter(const Word& w, int letter, bool& contains) {
    Word nw;
    nw.reserve(w.size());
    contains = false;
    for (Letter a : w) {
        if (a == letter) {
            contains = true;
            continue;
        }
        nw.push_back(a > letter ? a - 1 : a);
    }
    return nw;
}

}  // namespace

NCPoly specialize_one(const NCPoly& f, int letter) {
    std::vector<std::pair<Word, Rational>> raw;
    raw.reserve(f.terms.size());
    for (const auto& [w, c] : f.terms) {
        bool dummy;
        raw.push_back({strip_letter(w, letter, dummy), c});
    }
    return make_poly(std::move(raw));
}

NCPoly specialize_zero(const NCPoly& f, int letter) {
    std::vector<std::pair<Word, Rational>> raw;
    for (const auto& [w, c] : f.terms) {
        bool contains;
        Word nw = strip_letter(w, letter, contains);
        if (!contains) raw.push_back({std::move(nw), c});
    }
    return make_poly(std::move(raw));
}

namespace {

Presentation specialize_presentation(const Presentation& p, bool to_one) {
    if (!p.central_index) throw std::invalid_argument("presentation has no central generator");
    const int t = *p.central_index;
    Presentation out;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.alphabet.size(); ++i)
        if (static_cast<int>(i) != t) names.push_back(p.alphabet.names[i]);
    out.alphabet = Alphabet(std::move(names));
    for (const auto& r : p.relations) {
        NCPoly s = to_one ? specialize_one(r, t) : specialize_zero(r, t);
        if (!s.is_zero()) out.relations.push_back(std::move(s));
    }
    return out;
}

}  // namespace

Presentation specialize_presentation_one(const Presentation& p) { return specialize_presentation(p, true); }
Presentation specialize_presentation_zero(const Presentation& p) { return specialize_presentation(p, false); }

std::optional<int> poly_degree_drop(const NCPoly& f) {
    if (f.is_zero()) return std::nullopt;
    const int s = f.degree();
    std::optional<int> drop;
    for (const auto& [w, c] : f.terms) {
        const int d = word_degree(w);
        if (d == s) continue;
        const int gap = s - d;
        if (!drop || gap < *drop) drop = gap;
    }
    return drop;
}

std::optional<int> presentation_degree_drop(const Presentation& p) {
    std::optional<int> drop;
    for (const auto& r : p.relations) {
        const auto d = poly_degree_drop(r);
        if (d && (!drop || *d < *drop)) drop = *d;
    }
    return drop;
}

}  // namespace pbw
