#pragma once

// Noncommutative Groebner bases for two-sided ideals of the free algebra
// under the degree-lexicographic order, via overlap completion with a degree
// bound. Reduction is templated over the coefficient ring of the dividend so
// the same routine serves exact rational polynomials and polynomials whose
// coefficients are themselves commutative polynomials in unknown parameters;
// the reducers always have rational coefficients.

#include "pbw/freealg.hpp"
#include "pbw/presentation.hpp"

#include <string>
#include <vector>

namespace pbw {

// One rewriting step: the reduced input equals remainder plus the sum of
// coeff * left * basis[index] * right over all recorded steps.
template <class C>
struct Cofactor {
    C coeff;
    Word left;
    int index;
    Word right;
};

template <class C>
struct NFResult {
    BasicNCPoly<C> remainder;
    std::vector<Cofactor<C>> cofactors;
};

// Fully reduces f: while some term's word contains a reducer's leading word
// as a factor, rewrites the degree-lex-greatest such term, choosing the
// leftmost occurrence and then the first reducer in list order. The basis
// need not be monic.
template <class C>
NFResult<C> normal_form_with_cofactors(BasicNCPoly<C> f, const std::vector<NCPoly>& basis) {
    NFResult<C> out;
    // Terms are degree-lex descending, and a rewrite replaces its term with
    // strictly smaller words only, so the first `done` terms -- once checked
    // irreducible -- never need another look.
    std::size_t done = 0;
    while (done < f.terms.size()) {
        const auto& [w, c] = f.terms[done];
        std::size_t best_pos = 0;
        int best_idx = -1;
        for (std::size_t pos = 0; pos <= w.size() && best_idx < 0; ++pos) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const Word& lw = basis[b].leading_word();
                if (lw.size() + pos <= w.size() && occurs_at(w, lw, pos)) {
                    best_pos = pos;
                    best_idx = static_cast<int>(b);
                    break;
                }
            }
        }
        if (best_idx < 0) {
            ++done;
            continue;
        }
        const NCPoly& g = basis[static_cast<std::size_t>(best_idx)];
        const Word& lw = g.leading_word();
        Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best_pos));
        Word right(w.begin() + static_cast<std::ptrdiff_t>(best_pos + lw.size()), w.end());
        const C factor = c * (Rational(1) / g.leading_coeff());
        std::vector<std::pair<Word, C>> sub;
        sub.reserve(g.terms.size());
        for (const auto& [wg, cg] : g.terms)
            sub.push_back({word_concat(word_concat(left, wg), right), factor * cg});
        f = nc_sub(f, make_poly(std::move(sub)));
        out.cofactors.push_back({factor, std::move(left), best_idx, std::move(right)});
    }
    out.remainder = std::move(f);
    return out;
}

template <class C>
BasicNCPoly<C> normal_form(BasicNCPoly<C> f, const std::vector<NCPoly>& basis) {
    return normal_form_with_cofactors(std::move(f), basis).remainder;
}

struct GB {
    std::vector<NCPoly> basis;  // monic, inter-reduced, sorted by leading word ascending
    bool complete = false;      // false when completion stopped at the degree bound
    int bound = 0;
    int max_degree = -1;  // largest degree among basis elements
};

// Overlap completion up to the degree bound: obstructions are processed in
// increasing superposition degree; the run is complete when none remain and
// truncated when the next one would exceed the bound.
GB buchberger(std::vector<NCPoly> gens, int degree_bound);

enum class Tri { Yes, No, Unknown };

// Two-sided ideal membership, as certified by the completed or truncated
// basis. Yes needs a zero normal form and either completeness or enough
// degree headroom; No needs completeness.
Tri ideal_member(const NCPoly& f, const GB& gb);

// Counts, per degree 0..max_degree, the words containing no leading word of
// the basis as a factor; these are the monomial-basis dimensions of the
// quotient in each degree when the basis is complete.
std::vector<long long> normal_word_dims(const std::vector<Word>& leading_words, int nletters,
                                        int max_degree);

// True when every overlap obstruction of the (assumed inter-reduced) basis
// resolves to zero; a direct confluence check used by tests.
bool all_spolys_reduce(const std::vector<NCPoly>& basis);

struct PBWReport {
    enum class Verdict { Yes, No, Truncated };
    Verdict verdict = Verdict::Truncated;
    std::vector<long long> dims_filtered;
    std::vector<long long> dims_graded;
    std::string detail;
    GB gb_filtered;
    GB gb_graded;
};

// Decides whether the filtered presentation deforms its top-degree-part
// presentation without collapse: each basis element of the filtered ideal
// must have top part reducing to zero against the graded basis, and the two
// leading-word ideals must coincide. Definite verdicts require both
// completions to finish within the bound.
PBWReport is_pbw_deformation(const Presentation& filtered, int degree_bound);

}  // namespace pbw
