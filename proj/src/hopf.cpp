#include "pbw/hopf.hpp"

#include "pbw/upoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace pbw {

std::string hopf_case_name(HopfCase c) {
    switch (c) {
        case HopfCase::Diagonal1: return "diagonal_1";
        case HopfCase::Diagonal2: return "diagonal_2";
        case HopfCase::NondiagonalLambda: return "nondiagonal_lambda";
        case HopfCase::NondiagonalUnipotent: return "nondiagonal_unipotent";
        case HopfCase::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::pair<Presentation, RatVec> normalize_presentation(const Presentation& p) {
    const std::size_t n = p.alphabet.size();
    const RatVec zero(n, Rational(0));

    // One equation per (relation, degree-(top-1) word): the original
    // coefficient there plus everything the shift pushes down from the top
    // degree must cancel. The system is linear in the shift.
    RatMat a;
    RatVec rhs;
    for (const auto& r : p.relations) {
        const int top = r.degree();
        if (top <= 0) continue;
        std::map<Word, std::pair<RatVec, Rational>> rows;
        for (const auto& [w, c] : r.terms) {
            if (static_cast<int>(w.size()) == top) {
                for (std::size_t pos = 0; pos < w.size(); ++pos) {
                    Word v = w;
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
                    auto& row = rows[v];
                    if (row.first.empty()) row.first.assign(n, Rational(0));
                    row.first[static_cast<std::size_t>(w[pos])] += c;
                }
            } else if (static_cast<int>(w.size()) == top - 1) {
                auto& row = rows[w];
                if (row.first.empty()) row.first.assign(n, Rational(0));
                row.second += c;
            }
        }
        for (auto& [v, row] : rows) {
            a.push_back(row.first);
            rhs.push_back(-row.second);
        }
    }
    if (a.empty()) return {p, zero};

    const std::optional<RatVec> sol = solve_linear(a, rhs);
    if (!sol) return {p, zero};

    const AffineMap shift{mat_identity(n), *sol};
    Presentation q = p;
    for (auto& r : q.relations) r = apply_affine_map(shift, r);
    return {q, *sol};
}

bool match_pattern_a(const NCPoly& rel, int i, int j) {
    if (i == j) return false;
    for (const auto& [w, c] : rel.terms) {
        if (w.size() < 2) continue;
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            if (w[pos] != i || w[pos + 1] != j) continue;
            Word del = w;
            del.erase(del.begin() + static_cast<std::ptrdiff_t>(pos),
                      del.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
            bool has_del = false;
            bool stray_constant = false;
            for (const auto& [u, d] : rel.terms) {
                if (u == w) continue;
                if (u == del) {
                    has_del = true;
                    continue;
                }
                if (u.empty()) stray_constant = true;  // would sit inside the leftover span of 1
            }
            if (has_del && !stray_constant) return true;
        }
    }
    return false;
}

bool match_pattern_b(const NCPoly& rel, int i, int j) {
    if (i == j) return false;
    for (const auto& [w, c] : rel.terms) {
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            if (w[pos] != i || w[pos + 1] != j) continue;
            Word sw = w;
            std::swap(sw[pos], sw[pos + 1]);
            for (const auto& [u, d] : rel.terms)
                if (u == sw) return true;
        }
    }
    return false;
}

namespace {

// x = lambda for a rational lambda; nonzero exactly for lambda = 1 or -1.
int rat_unity_order(const Rational& x) {
    return root_of_unity_order(up_trim({-x, Rational(1)}));
}

std::string join_rats(const RatVec& v) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += ", ";
        s += rat_str(x);
    }
    return s;
}

// Invariant factors of the lattice spanned by the rows inside Z^cols.
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m, std::size_t cols) {
    using boost::multiprecision::abs;
    std::vector<Integer> inv;
    std::size_t top = 0;
    while (top < m.size() && top < cols) {
        std::size_t pi = top, pj = top;
        bool found = false;
        for (std::size_t i = top; i < m.size(); ++i)
            for (std::size_t j = top; j < cols; ++j)
                if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[top], m[pi]);
        for (auto& row : m) std::swap(row[top], row[pj]);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = top + 1; i < m.size(); ++i) {
                const Integer q = m[i][top] / m[top][top];
                if (q != 0)
                    for (std::size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
                if (m[i][top] != 0) {
                    std::swap(m[top], m[i]);
                    dirty = true;
                }
            }
            for (std::size_t j = top + 1; j < cols; ++j) {
                const Integer q = m[top][j] / m[top][top];
                if (q != 0)
                    for (auto& row : m) row[j] -= q * row[top];
                if (m[top][j] != 0) {
                    for (auto& row : m) std::swap(row[top], row[j]);
                    dirty = true;
                }
            }
        }
        inv.push_back(abs(m[top][top]));
        ++top;
    }
    // repair the divisibility chain gcd/lcm-wise; the multiset of prime powers
    // is preserved, which is all the quotient group cares about
    for (std::size_t i = 0; i + 1 < inv.size(); ++i)
        for (std::size_t j = i + 1; j < inv.size(); ++j)
            if (inv[j] % inv[i] != 0) {
                const Integer g = gcd(inv[i], inv[j]);
                const Integer l = inv[i] / g * inv[j];
                inv[i] = g;
                inv[j] = l;
            }
    return inv;
}

}  // namespace

HopfReport classify(const Presentation& p, const AffineMap& phi, HopfFlags flags) {
    const std::size_t n = p.alphabet.size();
    if (phi.matrix.size() != n || phi.shift.size() != n)
        throw std::invalid_argument("classify: map does not match the alphabet");

    HopfReport rep;
    rep.assumptions_used = flags;
    auto check = [&rep](std::string name, bool ok, std::string detail) {
        rep.verified_hypotheses.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };
    auto grouplike = [&rep](const std::string& s) {
        if (std::find(rep.grouplike_relations.begin(), rep.grouplike_relations.end(), s) ==
            rep.grouplike_relations.end())
            rep.grouplike_relations.push_back(s);
    };
    auto ysym = [](std::size_t i) {
        const std::string k = std::to_string(i + 1);
        return "y_" + k + k;
    };

    const JordanInfo jd = jordan_structure(phi.matrix);
    {
        std::string bad;
        for (const auto& f : jd.factors)
            if (up_degree(f.poly) > 1) bad = up_str(f.poly);
        if (!check("spectrum_rational", jd.all_rational,
                   jd.all_rational ? "characteristic polynomial splits over the rationals"
                                   : "irreducible factor " + bad))
            return rep;
    }

    bool diagonalizable = true;
    for (const auto& eg : jd.rational_eigen)
        for (int b : eg.block_sizes)
            if (b > 1) diagonalizable = false;
    check("matrix_diagonalizable", diagonalizable, "");

    if (diagonalizable) {
        std::vector<Rational> lambda;
        RatMat c;
        if (mat_is_diagonal(phi.matrix)) {
            c = mat_identity(n);
            for (std::size_t i = 0; i < n; ++i) lambda.push_back(phi.matrix[i][i]);
        } else {
            for (const auto& eg : jd.rational_eigen) {
                RatMat shifted = mat_sub(mat_transpose(phi.matrix),
                                         mat_scale(mat_identity(n), eg.value));
                for (auto& v : nullspace(shifted)) {
                    c.push_back(v);
                    lambda.push_back(eg.value);
                }
            }
        }
        RatVec spectrum(lambda.begin(), lambda.end());

        bool no_one = true;
        for (const auto& l : lambda)
            if (l == 1) no_one = false;
        if (!check("eigenvalues_avoid_1", no_one, "spectrum " + join_rats(spectrum))) return rep;

        bool eig_free = true;
        for (const auto& l : lambda)
            if (rat_unity_order(l) != 0) eig_free = false;
        bool ratio_free = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && rat_unity_order(lambda[i] / lambda[j]) != 0) ratio_free = false;
        const bool a1 = check("eigenvalues_not_roots_of_unity", eig_free, "");
        const bool a2 = check("eigenvalue_ratios_not_roots_of_unity", ratio_free, "");

        std::vector<std::string> base = {"spectrum_rational", "eigenvalues_avoid_1"};
        if (a1 && a2) {
            rep.kase = HopfCase::Diagonal1;
            base.push_back("eigenvalues_not_roots_of_unity");
            base.push_back("eigenvalue_ratios_not_roots_of_unity");
        } else {
            bool distinct = true;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (lambda[i] == lambda[j]) distinct = false;
            const bool f1 = check("assume_semisimple", flags.assume_semisimple, "flag");
            const bool f2 = check("assume_trivial_hdet", flags.assume_trivial_hdet, "flag");
            const bool f3 = check("eigenvalues_pairwise_distinct", distinct,
                                  "spectrum " + join_rats(spectrum));
            if (!(f1 && f2 && f3)) return rep;
            rep.kase = HopfCase::Diagonal2;
            base.push_back("assume_semisimple");
            base.push_back("assume_trivial_hdet");
            base.push_back("eigenvalues_pairwise_distinct");
        }

        // Rewrite the relations in the eigenbasis v = C x + e; the shift is
        // absorbed because no eigenvalue equals 1.
        RatVec e(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += c[i][j] * phi.shift[j];
            e[i] = dot / (lambda[i] - 1);
        }
        const RatMat cinv = *mat_inverse(c);
        RatVec back_shift = mat_apply(cinv, e);
        for (auto& x : back_shift) x = -x;
        std::vector<NCPoly> vrels;
        for (const auto& r : p.relations) vrels.push_back(apply_affine_map({cinv, back_shift}, r));

        std::vector<std::string> a_hits, b_hits;
        std::vector<std::vector<Integer>> rows;
        std::size_t b_pairs = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                int wit_a = -1, wit_b = -1;
                for (std::size_t r = 0; r < vrels.size(); ++r) {
                    const int ii = static_cast<int>(i), jj = static_cast<int>(j);
                    if (wit_a < 0 && (match_pattern_a(vrels[r], ii, jj) ||
                                      match_pattern_a(vrels[r], jj, ii)))
                        wit_a = static_cast<int>(r);
                    if (wit_b < 0 && (match_pattern_b(vrels[r], ii, jj) ||
                                      match_pattern_b(vrels[r], jj, ii)))
                        wit_b = static_cast<int>(r);
                }
                const std::string pair_tag =
                    "v" + std::to_string(i + 1) + "_v" + std::to_string(j + 1);
                if (wit_a >= 0) {
                    const std::string name = "pair_deletion_" + pair_tag;
                    check(name, true, "relation " + std::to_string(wit_a + 1));
                    a_hits.push_back(name);
                    grouplike(ysym(i) + "*" + ysym(j) + " = 1");
                    std::vector<Integer> row(n, 0);
                    row[i] = 1;
                    row[j] = 1;
                    rows.push_back(std::move(row));
                }
                if (wit_b >= 0) {
                    const std::string name = "pair_transposition_" + pair_tag;
                    check(name, true, "relation " + std::to_string(wit_b + 1));
                    b_hits.push_back(name);
                    grouplike(ysym(i) + "*" + ysym(j) + " = " + ysym(j) + "*" + ysym(i));
                    ++b_pairs;
                }
            }
        }

        rep.conclusions.push_back({"dual_of_group_algebra", base});
        rep.conclusions.push_back({"semisimple", base});

        const bool all_b = b_pairs == n * (n - 1) / 2;
        check("transpositions_cover_all_pairs", all_b,
              std::to_string(b_pairs) + " of " + std::to_string(n * (n - 1) / 2) + " pairs");
        if (all_b) {
            std::vector<std::string> just = base;
            just.insert(just.end(), b_hits.begin(), b_hits.end());
            just.push_back("transpositions_cover_all_pairs");
            rep.conclusions.push_back({"commutative_group_algebra", std::move(just)});
        }

        const std::vector<Integer> inv = smith_invariants(rows, n);
        const std::size_t free_rank = n - inv.size();
        std::size_t nontrivial = 0;
        std::string factors;
        for (const auto& d : inv) {
            if (d > 1) ++nontrivial;
            if (!factors.empty()) factors += ", ";
            factors += d.str();
        }
        const bool cyclic = free_rank + nontrivial <= 1;
        check("grouplike_lattice_cyclic", cyclic,
              "invariant factors [" + factors + "], free rank " + std::to_string(free_rank));
        if (cyclic) {
            std::vector<std::string> just = base;
            just.insert(just.end(), a_hits.begin(), a_hits.end());
            just.push_back("grouplike_lattice_cyclic");
            rep.conclusions.push_back({"cyclic_group_algebra_kZm", std::move(just)});
        }
        return rep;
    }

    // Non-diagonalizable: only the two-generator single-block shape is known.
    const bool single2 = n == 2 && jd.rational_eigen.size() == 1 &&
                         jd.rational_eigen[0].block_sizes == std::vector<int>{2};
    if (!check("single_jordan_block_2x2", single2, "")) return rep;

    const Rational lam = jd.rational_eigen[0].value;
    if (!check("block_eigenvalue_nonzero", lam != 0, "lambda = " + rat_str(lam))) return rep;

    if (lam != 1) {
        check("block_eigenvalue_not_1", true, "lambda = " + rat_str(lam));
        const bool f1 = check("assume_semisimple", flags.assume_semisimple, "flag");
        const bool f2 = check("assume_trivial_hdet", flags.assume_trivial_hdet, "flag");
        if (!(f1 && f2)) return rep;
        rep.kase = HopfCase::NondiagonalLambda;
        grouplike("y_11 = y_22");
        rep.conclusions.push_back(
            {"cyclic_group_algebra_kZm",
             {"spectrum_rational", "single_jordan_block_2x2", "block_eigenvalue_not_1",
              "assume_semisimple", "assume_trivial_hdet"}});
        return rep;
    }

    // Unipotent block: the class is decided by whether the shift moves the
    // invariant line. That component of the shift is the same for every lift,
    // so the answer does not depend on which one was passed in.
    check("block_eigenvalue_not_1", false, "lambda = 1");
    const std::vector<RatVec> line = nullspace(mat_sub(mat_transpose(phi.matrix), mat_identity(2)));
    Rational essential = 0;
    if (!line.empty()) essential = line[0][0] * phi.shift[0] + line[0][1] * phi.shift[1];
    if (!check("unipotent_shift_nonzero", !rat_is_zero(essential),
               "invariant-line shift " + rat_str(essential)))
        return rep;
    rep.kase = HopfCase::NondiagonalUnipotent;
    grouplike("y_11 = 1");
    grouplike("y_22 = 1");
    rep.conclusions.push_back(
        {"trivial_k",
         {"spectrum_rational", "single_jordan_block_2x2", "unipotent_shift_nonzero"}});
    return rep;
}

}  // namespace pbw
