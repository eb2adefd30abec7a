#include "pbw/mpoly.hpp"

#include "pbw/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbw {

bool ExpoLexGreater::operator()(const Expo& a, const Expo& b) const {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const int av = k < a.size() ? a[k] : 0;
        const int bv = k < b.size() ? b[k] : 0;
        if (av != bv) return av > bv;
    }
    return false;
}

namespace {

Expo expo_trim(Expo e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

Expo expo_mul(const Expo& a, const Expo& b) {
    Expo r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return expo_trim(std::move(r));
}

bool expo_divides(const Expo& a, const Expo& b) {
    // a | b componentwise
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > (k < b.size() ? b[k] : 0)) return false;
    return true;
}

Expo expo_div(const Expo& b, const Expo& a) {
    Expo r = b;
    for (std::size_t k = 0; k < a.size(); ++k) r[k] -= a[k];
    return expo_trim(std::move(r));
}

Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = std::max(k < a.size() ? a[k] : 0, k < b.size() ? b[k] : 0);
    return expo_trim(std::move(r));
}

int expo_total(const Expo& e) {
    int t = 0;
    for (int v : e) t += v;
    return t;
}

}  // namespace

int MPoly::total_degree() const {
    int d = terms.empty() ? -1 : 0;
    for (const auto& [e, c] : terms) d = std::max(d, expo_total(e));
    return d;
}

bool operator==(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }

MPoly mp_constant(const Rational& c) {
    MPoly p;
    if (!c.is_zero()) p.terms[{}] = c;
    return p;
}

MPoly mp_variable(int i) {
    MPoly p;
    Expo e(static_cast<std::size_t>(i) + 1, 0);
    e.back() = 1;
    p.terms[std::move(e)] = 1;
    return p;
}

MPoly mp_add(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

MPoly mp_neg(MPoly a) {
    for (auto& [e, c] : a.terms) c = -c;
    return a;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) { return mp_add(a, mp_neg(b)); }

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Expo e = expo_mul(ea, eb);
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(e), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    return r;
}

MPoly mp_scale(MPoly a, const Rational& s) {
    if (s.is_zero()) return MPoly{};
    for (auto& [e, c] : a.terms) c *= s;
    return a;
}

Rational mp_eval(const MPoly& a, const std::vector<Rational>& values) {
    Rational acc(0);
    for (const auto& [e, c] : a.terms) {
        Rational t = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (k >= values.size()) throw std::out_of_range("mp_eval: missing variable value");
            t *= rat_pow(values[k], e[k]);
        }
        acc += t;
    }
    return acc;
}

MPoly mp_substitute(const MPoly& a, int var, const Rational& value) {
    MPoly r;
    for (const auto& [e, c] : a.terms) {
        Rational cc = c;
        Expo en = e;
        if (static_cast<std::size_t>(var) < en.size() && en[var] > 0) {
            cc *= rat_pow(value, en[var]);
            en[var] = 0;
            en = expo_trim(std::move(en));
        }
        if (cc.is_zero()) continue;
        auto it = r.terms.find(en);
        if (it == r.terms.end()) {
            r.terms.emplace(std::move(en), std::move(cc));
        } else {
            it->second += cc;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

MPoly mp_monic(MPoly a) {
    if (a.is_zero()) return a;
    const Rational inv = Rational(1) / a.terms.begin()->second;
    return mp_scale(std::move(a), inv);
}

std::string mp_str(const MPoly& a, const std::vector<std::string>& var_names) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : a.terms) {
        const bool neg = c < 0;
        const Rational ac = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += k < var_names.size() ? var_names[k] : "v" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) {
            out += rat_str(ac);
        } else {
            if (ac != 1) out += rat_str(ac) + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

MPoly mp_normal_form(MPoly f, const std::vector<MPoly>& basis) {
    bool reduced = true;
    while (reduced && !f.is_zero()) {
        reduced = false;
        for (const auto& [e, c] : f.terms) {
            for (const auto& g : basis) {
                const Expo& lm = g.terms.begin()->first;
                if (!expo_divides(lm, e)) continue;
                MPoly mono;
                mono.terms[expo_div(e, lm)] = c / g.terms.begin()->second;
                f = mp_sub(f, mp_mul(mono, g));
                reduced = true;
                break;
            }
            if (reduced) break;
        }
    }
    return f;
}

}  // namespace

std::vector<MPoly> mp_groebner_lex(std::vector<MPoly> gens) {
    std::vector<MPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) {
            MPoly m = mp_monic(std::move(g));
            if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(std::move(m));
        }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
    auto pair_key = [&](const std::pair<std::size_t, std::size_t>& pr) {
        return std::tuple<int, std::size_t, std::size_t>(
            expo_total(expo_lcm(basis[pr.first].terms.begin()->first, basis[pr.second].terms.begin()->first)),
            pr.first, pr.second);
    };
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [&](const auto& a, const auto& b) { return pair_key(a) < pair_key(b); });
        auto [i, j] = *it;
        pairs.erase(it);
        const Expo& li = basis[i].terms.begin()->first;
        const Expo& lj = basis[j].terms.begin()->first;
        const Expo l = expo_lcm(li, lj);
        if (expo_total(l) == expo_total(li) + expo_total(lj) && l == expo_mul(li, lj))
            continue;  // coprime leading monomials resolve trivially
        MPoly mi, mj;
        mi.terms[expo_div(l, li)] = 1;
        mj.terms[expo_div(l, lj)] = 1;
        MPoly s = mp_sub(mp_mul(mi, basis[i]), mp_mul(mj, basis[j]));
        MPoly r = mp_normal_form(std::move(s), basis);
        if (r.is_zero()) continue;
        r = mp_monic(std::move(r));
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.push_back({k, basis.size()});
        basis.push_back(std::move(r));
    }
    // Inter-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            MPoly g = basis[i];
            std::vector<MPoly> others;
            others.reserve(basis.size() - 1);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (k != i) others.push_back(basis[k]);
            MPoly r = mp_normal_form(g, others);
            if (!(r == g)) {
                changed = true;
                if (r.is_zero()) {
                    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    basis[i] = mp_monic(std::move(r));
                }
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const MPoly& a, const MPoly& b) {
        return ExpoLexGreater{}(b.terms.begin()->first, a.terms.begin()->first);
    });
    return basis;
}

namespace {

// True iff every monomial of g uses only the variable `var`.
bool univariate_in(const MPoly& g, int var) {
    for (const auto& [e, c] : g.terms)
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0 && static_cast<int>(k) != var) return false;
    return true;
}

UPoly to_upoly(const MPoly& g, int var) {
    UPoly p;
    for (const auto& [e, c] : g.terms) {
        const int d = static_cast<std::size_t>(var) < e.size() ? e[var] : 0;
        if (p.size() <= static_cast<std::size_t>(d)) p.resize(static_cast<std::size_t>(d) + 1, Rational(0));
        p[static_cast<std::size_t>(d)] += c;
    }
    return up_trim(std::move(p));
}

void solve_rec(const std::vector<MPoly>& system, int nvars,
               const std::vector<std::string>& var_names, std::vector<Rational>& partial,
               MPSolveResult& out) {
    if (nvars == 0) {
        for (const auto& g : system)
            if (!g.is_zero()) return;  // inconsistent branch
        std::vector<Rational> point(partial.rbegin(), partial.rend());
        out.points.push_back(std::move(point));
        return;
    }
    std::vector<MPoly> gb = mp_groebner_lex(system);
    for (const auto& g : gb)
        if (!g.is_zero() && g.is_constant()) return;  // unit ideal, no solutions on this branch
    const int var = nvars - 1;
    UPoly elim;
    for (const auto& g : gb)
        if (univariate_in(g, var)) elim = up_is_zero(elim) ? up_monic(to_upoly(g, var)) : up_gcd(elim, to_upoly(g, var));
    if (up_is_zero(elim)) {
        out.positive_dimensional = true;
        return;
    }
    if (up_degree(elim) == 0) return;  // inconsistent (should have been caught as a constant)
    bool complete = true;
    auto roots = up_rational_roots(elim, complete);
    if (!complete) out.search_complete = false;
    // Anything left after removing the rational roots has only irrational zeros.
    UPoly rem = elim;
    for (const auto& r : roots) {
        const UPoly lin = {-r, Rational(1)};
        while (up_degree(rem) >= 1 && up_divides(lin, rem)) {
            UPoly q, rr;
            up_divmod(rem, lin, q, rr);
            rem = q;
        }
    }
    if (up_degree(rem) >= 1) {
        out.irrational_branches = true;
        const std::string nm =
            static_cast<std::size_t>(var) < var_names.size() ? var_names[var] : "v" + std::to_string(var + 1);
        out.eliminants.push_back(up_str(elim, nm));
    }
    for (const auto& r : roots) {
        std::vector<MPoly> next;
        next.reserve(gb.size());
        for (const auto& g : gb) {
            MPoly s = mp_substitute(g, var, r);
            if (!s.is_zero()) next.push_back(std::move(s));
        }
        partial.push_back(r);
        solve_rec(next, nvars - 1, var_names, partial, out);
        partial.pop_back();
    }
}

}  // namespace

MPSolveResult mp_solve_rational(const std::vector<MPoly>& system, int nvars,
                                const std::vector<std::string>& var_names) {
    MPSolveResult out;
    std::vector<MPoly> nontrivial;
    for (const auto& g : system)
        if (!g.is_zero()) nontrivial.push_back(g);
    if (nontrivial.empty()) {
        if (nvars == 0)
            out.points.push_back({});
        else
            out.positive_dimensional = true;
        return out;
    }
    std::vector<MPoly> gb = mp_groebner_lex(nontrivial);
    for (const auto& g : gb)
        if (!g.is_zero() && g.is_constant()) {
            out.no_solution = true;
            return out;
        }
    std::vector<Rational> partial;
    solve_rec(nontrivial, nvars, var_names, partial, out);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

}  // namespace pbw
