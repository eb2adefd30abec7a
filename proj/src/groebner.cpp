#include "pbw/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace pbw {

namespace {

// An overlap obstruction: a proper suffix of LW(basis[i]) of length k equals
// a prefix of LW(basis[j]); keyed by superposition degree first so the queue
// drains in degree order.
using Obstruction = std::tuple<int, std::size_t, std::size_t, std::size_t>;  // deg, i, j, k

// Exact completion can pass through intermediates whose true coefficients
// are astronomically larger than anything in the final basis -- artifacts of
// reducing against a basis that is not rich enough yet. Results past this
// many bits are parked instead of installed and retried once the basis has
// grown; honest answers at these input sizes stay far below the threshold.
bool coeffs_oversized(const NCPoly& f) {
    constexpr unsigned kMaxBits = 1024;
    for (const auto& [w, c] : f.terms)
        if (msb(abs(rat_num(c))) >= kMaxBits || msb(rat_den(c)) >= kMaxBits) return true;
    return false;
}

struct Completion {
    std::vector<NCPoly> elems;  // stable slots, so queue indices stay valid
    std::vector<bool> active;
    std::vector<NCPoly> cur;  // the active elements in slot order, kept in sync
    std::set<Obstruction> queue;
    std::vector<NCPoly> deferred;  // oversized normal forms awaiting a richer basis
    bool defer_oversized = false;

    // Position of active slot i within cur.
    std::size_t rank(std::size_t i) const {
        std::size_t r = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (active[j]) ++r;
        return r;
    }

    void enqueue_overlaps(std::size_t i, std::size_t j) {
        const Word& wi = elems[i].leading_word();
        const Word& wj = elems[j].leading_word();
        if (wi.empty() || wj.empty()) return;
        const std::size_t kmax = std::min(wi.size(), wj.size()) - 1;
        for (std::size_t k = 1; k <= kmax; ++k) {
            bool match = true;
            for (std::size_t p = 0; p < k && match; ++p)
                if (wi[wi.size() - k + p] != wj[p]) match = false;
            if (match)
                queue.insert({static_cast<int>(wi.size() + wj.size() - k), i, j, k});
        }
    }

    // Reduces r against the active elements and, if it survives, installs it:
    // any active element whose leading word it now divides is deactivated and
    // fed back through this same path, and the rest get their tails reduced
    // in place.
    void add(NCPoly r) {
        std::vector<NCPoly> pending;
        pending.push_back(std::move(r));
        while (!pending.empty()) {
            NCPoly f = std::move(pending.back());
            pending.pop_back();
            f = normal_form(std::move(f), cur);
            if (f.is_zero()) continue;
            if (defer_oversized && coeffs_oversized(f)) {
                deferred.push_back(std::move(f));
                continue;
            }
            // Monic storage: dividing by the leading coefficient lets the
            // rational canonicalization cancel elimination growth, keeping
            // coefficients near the size of the final reduced values.
            const Rational lc = f.leading_coeff();
            f = nc_scale(std::move(f), Rational(1) / lc);
            const Word lw = f.leading_word();
            for (std::size_t i = 0; i < elems.size(); ++i) {
                if (!active[i]) continue;
                if (find_factor(elems[i].leading_word(), lw)) {
                    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(rank(i)));
                    active[i] = false;
                    pending.push_back(std::move(elems[i]));
                }
            }
            const std::size_t idx = elems.size();
            elems.push_back(f);
            active.push_back(true);
            cur.push_back(std::move(f));
            for (std::size_t i = 0; i < idx; ++i) {
                if (!active[i]) continue;
                enqueue_overlaps(i, idx);
                enqueue_overlaps(idx, i);
            }
            enqueue_overlaps(idx, idx);
            // Tail-reduce the others so the basis stays fully reduced. Tails
            // are already normal against the older elements, so only those
            // the new leading word bites need another pass.
            for (std::size_t i = 0; i < idx; ++i) {
                if (!active[i]) continue;
                bool touched = false;
                for (std::size_t t = 1; t < elems[i].terms.size() && !touched; ++t)
                    if (find_factor(elems[i].terms[t].first, lw)) touched = true;
                if (!touched) continue;
                const auto lead = elems[i].terms.front();
                NCPoly tail = elems[i];
                tail.terms.erase(tail.terms.begin());
                NCPoly red = normal_form(std::move(tail), cur);
                red.terms.insert(red.terms.begin(), lead);
                elems[i] = std::move(red);
                cur[rank(i)] = elems[i];
            }
        }
    }
};

}  // namespace

namespace {

// Total order on polynomials (termwise word order, then coefficient) so that
// sorts are deterministic even with coinciding leading words.
bool poly_less(const NCPoly& a, const NCPoly& b) {
    const std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = deg_lex_compare(a.terms[i].first, b.terms[i].first);
        if (c != 0) return c < 0;
        if (a.terms[i].second != b.terms[i].second) return a.terms[i].second < b.terms[i].second;
    }
    return a.terms.size() < b.terms.size();
}

// Largest letter index reachable from the generators, plus one.
int reachable_letters(const std::vector<NCPoly>& gens) {
    int nletters = 0;
    for (const auto& g : gens)
        for (const auto& [w, c] : g.terms)
            for (int a : w) nletters = std::max(nletters, a + 1);
    return nletters;
}

// The pre-pass below is worthwhile only while the word space is small enough
// for dense-style elimination to be cheap.
bool prepass_feasible(const std::vector<NCPoly>& gens, int degree_bound) {
    bool any = false;
    for (const auto& g : gens)
        if (!g.is_zero()) any = true;
    return any && reachable_letters(gens) <= 2 && degree_bound <= 10;
}

// Echelonizes the span of all products u*g*v that fit under the degree
// bound, keyed by leading word, and returns the rows with minimal pivot
// words together with the original generators (so the output generates the
// same ideal by construction). Ideals that collapse toward short leading
// words enter completion already triangular this way; the
// one-overlap-at-a-time route to the same place can pass through
// intermediates whose exact coefficients dwarf anything in the result.
std::vector<NCPoly> linear_prepass(std::vector<NCPoly> gens, int degree_bound) {
    const int nletters = reachable_letters(gens);

    // All words over the reachable letters, shortest first.
    std::vector<Word> words{{}};
    std::size_t block = 0;
    for (int len = 1; len <= degree_bound; ++len) {
        const std::size_t end = words.size();
        for (std::size_t i = block; i < end; ++i)
            for (int a = 0; a < nletters; ++a) {
                Word w = words[i];
                w.push_back(a);
                words.push_back(std::move(w));
            }
        block = end;
    }

    std::map<Word, NCPoly, DegLexLess> ech;
    auto insert_row = [&ech](NCPoly row) {
        while (!row.is_zero()) {
            const auto it = ech.find(row.leading_word());
            if (it == ech.end()) break;
            const Rational c = row.leading_coeff();
            row = nc_sub(std::move(row), nc_scale(it->second, c));
        }
        if (row.is_zero()) return;
        const Rational lc = row.leading_coeff();
        Word lw = row.leading_word();
        ech.emplace(std::move(lw), nc_scale(std::move(row), Rational(1) / lc));
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        insert_row(g);
        const int room = degree_bound - g.degree();
        for (const Word& u : words) {
            if (static_cast<int>(u.size()) > room) continue;
            for (const Word& v : words) {
                if (u.empty() && v.empty()) continue;
                if (static_cast<int>(u.size() + v.size()) > room) continue;
                insert_row(nc_sandwich(Rational(1), u, g, v));
            }
        }
    }

    // Rows whose pivot sits above another pivot are linear shadows the
    // completion would discard anyway; the minimal ones carry the collapse.
    std::vector<NCPoly> rows;
    for (auto& [lw, row] : ech) {
        bool minimal = true;
        for (const auto& [lw2, row2] : ech)
            if (lw2.size() < lw.size() && find_factor(lw, lw2)) {
                minimal = false;
                break;
            }
        if (minimal) rows.push_back(std::move(row));
    }
    for (auto& g : gens)
        if (!g.is_zero()) rows.push_back(std::move(g));
    return rows;
}

}  // namespace

GB buchberger(std::vector<NCPoly> gens, int degree_bound) {
    GB out;
    out.bound = degree_bound;
    const bool can_retry = prepass_feasible(gens, degree_bound);
    for (int attempt = 0; attempt < 2; ++attempt) {
        Completion st;
        st.defer_oversized = true;
        bool truncated = false;

        // Processes obstructions in increasing superposition degree.
        auto drain = [&]() {
            while (!st.queue.empty()) {
                const Obstruction ob = *st.queue.begin();
                st.queue.erase(st.queue.begin());
                const auto [deg, i, j, k] = ob;
                if (!st.active[i] || !st.active[j]) continue;
                if (deg > degree_bound) {
                    truncated = true;
                    return;
                }
                const Word& wi = st.elems[i].leading_word();
                const Word& wj = st.elems[j].leading_word();
                // superposition w = wi . tail(wj, k) = head(wi, -k) . wj
                Word right_pad(wj.begin() + static_cast<std::ptrdiff_t>(k), wj.end());
                Word left_pad(wi.begin(), wi.end() - static_cast<std::ptrdiff_t>(k));
                NCPoly s = nc_sub(nc_sandwich(Rational(1), {}, st.elems[i], right_pad),
                                  nc_sandwich(Rational(1), left_pad, st.elems[j], {}));
                st.add(std::move(s));
            }
        };

        std::vector<NCPoly> input =
            attempt == 0 ? gens : linear_prepass(std::move(gens), degree_bound);
        std::sort(input.begin(), input.end(), poly_less);
        for (auto& g : input)
            if (!g.is_zero()) st.add(std::move(g));
        drain();

        // Parked normal forms get another chance against the grown basis;
        // most dissolve or come back small. When a round makes no progress
        // the cheapest way out is the triangularizing pre-pass, and failing
        // that, one oversized element is forced in so the run stays exact.
        bool retry_with_prepass = false;
        while (!truncated && !st.deferred.empty()) {
            std::vector<NCPoly> batch = std::move(st.deferred);
            st.deferred.clear();
            const std::size_t before = st.elems.size();
            for (auto& f : batch) st.add(std::move(f));
            drain();
            if (truncated) break;
            if (st.elems.size() == before && !st.deferred.empty()) {
                if (attempt == 0 && can_retry) {
                    retry_with_prepass = true;
                    break;
                }
                NCPoly f = std::move(st.deferred.front());
                st.deferred.erase(st.deferred.begin());
                st.defer_oversized = false;
                st.add(std::move(f));
                st.defer_oversized = true;
                drain();
            }
        }
        if (retry_with_prepass) continue;

        out.complete = !truncated;
        out.basis = std::move(st.cur);
        std::sort(out.basis.begin(), out.basis.end(), poly_less);
        for (const auto& g : out.basis) out.max_degree = std::max(out.max_degree, g.degree());
        break;
    }
    return out;
}

Tri ideal_member(const NCPoly& f, const GB& gb) {
    if (f.is_zero()) return Tri::Yes;
    const NCPoly r = normal_form(f, gb.basis);
    if (r.is_zero()) {
        if (gb.complete || f.degree() + 1 <= gb.bound) return Tri::Yes;
        return Tri::Unknown;
    }
    return gb.complete ? Tri::No : Tri::Unknown;
}

std::vector<long long> normal_word_dims(const std::vector<Word>& leading_words, int nletters,
                                        int max_degree) {
    std::vector<long long> dims(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const Word& lw : leading_words)
        if (lw.empty()) return dims;  // a unit leading word kills everything
    Word w;
    // Depth-first extension; a word is normal iff no leading word occurs as a
    // factor, and since prefixes were already checked it suffices to test
    // suffixes of the extended word.
    auto rec = [&](auto&& self) -> void {
        dims[w.size()] += 1;
        if (static_cast<int>(w.size()) == max_degree) return;
        for (int a = 0; a < nletters; ++a) {
            w.push_back(a);
            bool normal = true;
            for (const Word& lw : leading_words) {
                if (lw.size() > w.size()) continue;
                if (occurs_at(w, lw, w.size() - lw.size())) {
                    normal = false;
                    break;
                }
            }
            if (normal) self(self);
            w.pop_back();
        }
    };
    rec(rec);
    return dims;
}

bool all_spolys_reduce(const std::vector<NCPoly>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Word& wi = basis[i].leading_word();
            const Word& wj = basis[j].leading_word();
            if (wi.empty() || wj.empty()) continue;
            const std::size_t kmax = std::min(wi.size(), wj.size()) - 1;
            for (std::size_t k = 1; k <= kmax; ++k) {
                bool match = true;
                for (std::size_t p = 0; p < k && match; ++p)
                    if (wi[wi.size() - k + p] != wj[p]) match = false;
                if (!match) continue;
                Word right_pad(wj.begin() + static_cast<std::ptrdiff_t>(k), wj.end());
                Word left_pad(wi.begin(), wi.end() - static_cast<std::ptrdiff_t>(k));
                NCPoly s = nc_sub(nc_sandwich(Rational(1) / basis[i].leading_coeff(), {}, basis[i], right_pad),
                                  nc_sandwich(Rational(1) / basis[j].leading_coeff(), left_pad, basis[j], {}));
                if (!normal_form(std::move(s), basis).is_zero()) return false;
            }
        }
    return true;
}

PBWReport is_pbw_deformation(const Presentation& filtered, int degree_bound) {
    PBWReport rep;
    std::vector<NCPoly> rels;
    for (const auto& r : filtered.relations)
        if (!r.is_zero()) rels.push_back(r);
    std::vector<NCPoly> graded_rels;
    graded_rels.reserve(rels.size());
    for (const auto& r : rels) graded_rels.push_back(lh(r));
    rep.gb_filtered = buchberger(rels, degree_bound);
    rep.gb_graded = buchberger(graded_rels, degree_bound);

    std::vector<Word> lw_f, lw_g;
    for (const auto& g : rep.gb_filtered.basis) lw_f.push_back(g.leading_word());
    for (const auto& g : rep.gb_graded.basis) lw_g.push_back(g.leading_word());
    const int nletters = static_cast<int>(filtered.alphabet.size());
    rep.dims_filtered = normal_word_dims(lw_f, nletters, degree_bound);
    rep.dims_graded = normal_word_dims(lw_g, nletters, degree_bound);

    // Top parts of the completed filtered basis must die in the graded ideal.
    bool tops_vanish = true;
    std::string top_fail;
    for (const auto& g : rep.gb_filtered.basis)
        if (!normal_form(lh(g), rep.gb_graded.basis).is_zero()) {
            tops_vanish = false;
            top_fail = "top part of a filtered basis element survives reduction";
            break;
        }
    // The two leading-word ideals must agree.
    auto covered = [](const std::vector<Word>& words, const std::vector<Word>& by) {
        for (const Word& w : words) {
            bool hit = false;
            for (const Word& d : by)
                if (find_factor(w, d)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };
    const bool same_ideal = covered(lw_f, lw_g) && covered(lw_g, lw_f);

    if (tops_vanish && same_ideal) {
        if (rep.gb_filtered.complete && rep.gb_graded.complete) {
            rep.verdict = PBWReport::Verdict::Yes;
            rep.detail = "deformation preserves the monomial basis";
        } else {
            rep.verdict = PBWReport::Verdict::Truncated;
            rep.detail = "no defect found up to the degree bound; completion was truncated";
        }
    } else {
        if (rep.gb_filtered.complete && rep.gb_graded.complete) {
            rep.verdict = PBWReport::Verdict::No;
            rep.detail = tops_vanish ? "leading-word ideals differ" : top_fail;
        } else {
            rep.verdict = PBWReport::Verdict::Truncated;
            rep.detail = "defect seen before the degree bound; completion was truncated";
        }
    }
    return rep;
}

}  // namespace pbw
