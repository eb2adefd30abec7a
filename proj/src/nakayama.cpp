#include "pbw/nakayama.hpp"

#include "pbw/homog.hpp"
#include "pbw/mpoly.hpp"

#include <algorithm>

namespace pbw {

std::string lift_status_name(LiftStatus s) {
    switch (s) {
        case LiftStatus::Ok: return "ok";
        case LiftStatus::NoRationalSolution: return "no_rational_solution";
        case LiftStatus::PositiveDimensional: return "positive_dimensional";
        case LiftStatus::InconclusiveTruncated: return "inconclusive_truncated";
        case LiftStatus::InvalidGradedMap: return "invalid_graded_map";
    }
    return "?";
}

Tri verify_affine_endomorphism(const Presentation& p, const GB& gb, const AffineMap& map) {
    const std::vector<NCPoly> images = affine_images(map);
    bool unknown = false;
    for (const auto& r : p.relations) {
        if (r.is_zero()) continue;
        const NCPoly image = substitute<Rational>(r, images);
        if (normal_form(image, gb.basis).is_zero()) continue;
        if (gb.complete) return Tri::No;
        unknown = true;
    }
    return unknown ? Tri::Unknown : Tri::Yes;
}

LiftResult lift_nakayama(const Presentation& filtered, const RatMat& graded_map, int degree_bound,
                         bool force_residual) {
    LiftResult res;
    const std::size_t n = filtered.alphabet.size();

    std::vector<NCPoly> rels;
    for (const auto& r : filtered.relations)
        if (!r.is_zero()) rels.push_back(r);
    res.gb = buchberger(rels, degree_bound);

    if (graded_map.size() != n || (n && graded_map[0].size() != n) || !mat_inverse(graded_map)) {
        res.status = LiftStatus::InvalidGradedMap;
        return res;
    }

    // The matrix must at least be an endomorphism of the top-parts algebra.
    {
        std::vector<NCPoly> graded_rels;
        graded_rels.reserve(rels.size());
        for (const auto& r : rels) graded_rels.push_back(lh(r));
        const GB gb_graded = buchberger(graded_rels, degree_bound);
        Presentation graded{filtered.alphabet, std::move(graded_rels), std::nullopt};
        const Tri ok = verify_affine_endomorphism(graded, gb_graded,
                                                  {graded_map, RatVec(n, Rational(0))});
        if (ok == Tri::No) {
            res.status = LiftStatus::InvalidGradedMap;
            return res;
        }
        if (ok == Tri::Unknown) {
            res.status = LiftStatus::InconclusiveTruncated;
            return res;
        }
    }

    const std::optional<int> drop = presentation_degree_drop(filtered);
    if (!force_residual && (!drop || *drop >= 2)) {
        // Lower parts sit at least two degrees down, so the matrix lifts with
        // no shift at all; verify and return it.
        const AffineMap cand{graded_map, RatVec(n, Rational(0))};
        const Tri ok = verify_affine_endomorphism(filtered, res.gb, cand);
        if (ok == Tri::Yes) {
            res.status = LiftStatus::Ok;
            res.method = "fast_path_degree_drop";
            res.lifts.push_back(cand);
            res.search_complete = res.gb.complete;
            return res;
        }
        if (ok == Tri::Unknown) {
            res.status = LiftStatus::InconclusiveTruncated;
            res.method = "fast_path_degree_drop";
            return res;
        }
        // fall through: the shift-free candidate failed outright
    }

    res.method = "polynomial_system";

    if (!res.gb.complete) {
        // Normal forms against a truncated basis are not canonical, so the
        // shift equations read off them could be wrong in both directions.
        // Refuse rather than solve an unsound system.
        res.status = LiftStatus::InconclusiveTruncated;
        res.search_complete = false;
        return res;
    }

    // Symbolic images x_i -> sum_j M[i][j] x_j + b_i with the b_i as
    // commutative unknowns riding along in the coefficients.
    std::vector<BasicNCPoly<MPoly>> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BasicNCPoly<MPoly> img;
        std::vector<std::pair<Word, MPoly>> raw;
        for (std::size_t j = 0; j < n; ++j)
            if (!graded_map[i][j].is_zero())
                raw.push_back({Word{static_cast<Letter>(j)}, mp_constant(graded_map[i][j])});
        raw.push_back({Word{}, mp_variable(static_cast<int>(i))});
        images.push_back(make_poly(std::move(raw)));
    }

    std::vector<std::string> shift_names;
    for (std::size_t i = 0; i < n; ++i) shift_names.push_back("b" + std::to_string(i + 1));

    std::vector<MPoly> system;
    for (const auto& r : rels) {
        const BasicNCPoly<MPoly> image = substitute<MPoly>(r, images);
        const BasicNCPoly<MPoly> nf = normal_form(image, res.gb.basis);
        for (const auto& [w, c] : nf.terms) system.push_back(c);
    }
    for (const auto& eq : system)
        res.residual_equations.push_back(mp_str(eq, shift_names) + " = 0");
    const MPSolveResult sol = mp_solve_rational(system, static_cast<int>(n), shift_names);
    res.eliminants = sol.eliminants;
    res.search_complete = sol.search_complete && res.gb.complete;

    if (sol.positive_dimensional) {
        res.status = LiftStatus::PositiveDimensional;
        // The full solution set has free directions; pin coordinates to zero
        // one at a time (skipping any the system forces away from zero) until
        // the restricted system has finitely many points, and keep the
        // verified ones as representatives of the family.
        std::vector<MPoly> pinned = system;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<MPoly> trial = pinned;
            trial.push_back(mp_variable(static_cast<int>(i)));
            const MPSolveResult cut = mp_solve_rational(trial, static_cast<int>(n), shift_names);
            if (!cut.positive_dimensional && cut.points.empty()) continue;  // b_i != 0 forced
            pinned = std::move(trial);
            if (cut.positive_dimensional) continue;
            for (const auto& pt : cut.points) {
                const AffineMap cand{graded_map, pt};
                if (verify_affine_endomorphism(filtered, res.gb, cand) == Tri::Yes)
                    res.lifts.push_back(cand);
            }
            break;
        }
        return res;
    }
    for (const auto& pt : sol.points) {
        const AffineMap cand{graded_map, pt};
        if (verify_affine_endomorphism(filtered, res.gb, cand) == Tri::Yes) res.lifts.push_back(cand);
    }
    if (!res.lifts.empty()) {
        res.status = LiftStatus::Ok;
        return res;
    }
    if (!sol.search_complete) {
        res.status = LiftStatus::InconclusiveTruncated;
        return res;
    }
    res.status = LiftStatus::NoRationalSolution;
    return res;
}

bool is_calabi_yau(const AffineMap& lift) {
    if (!mat_is_identity(lift.matrix)) return false;
    for (const auto& b : lift.shift)
        if (!b.is_zero()) return false;
    return true;
}

AlgFile build_skew_extension(const Presentation& p, const AffineMap& lift) {
    const std::size_t n = p.alphabet.size();
    std::string zname = "z";
    for (int suffix = 1; p.alphabet.index_of(zname); ++suffix) zname = "z" + std::to_string(suffix);
    std::vector<std::string> names = p.alphabet.names;
    names.push_back(zname);

    AlgFile out;
    out.presentation.alphabet = Alphabet(std::move(names));
    out.presentation.relations = p.relations;
    const Letter z = static_cast<Letter>(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<Word, Rational>> raw;
        raw.push_back({Word{z, static_cast<Letter>(i)}, Rational(1)});
        for (std::size_t j = 0; j < n; ++j)
            if (!lift.matrix[i][j].is_zero())
                raw.push_back({Word{static_cast<Letter>(j), z}, -lift.matrix[i][j]});
        if (!lift.shift[i].is_zero()) raw.push_back({Word{z}, -lift.shift[i]});
        out.presentation.relations.push_back(make_poly(std::move(raw)));
    }
    out.graded_nakayama = mat_identity(n + 1);
    return out;
}

JordanInfo jordan_structure(const RatMat& m) {
    JordanInfo info;
    const std::size_t n = m.size();
    const UPoly cp = char_poly(m);
    std::vector<UFactor> factors = up_factor(cp);
    info.all_rational = true;
    for (const auto& f : factors) {
        if (!f.certified_irreducible) info.certified = false;
        if (up_degree(f.poly) != 1) info.all_rational = false;
        info.factors.push_back({f.poly, f.multiplicity, f.certified_irreducible,
                                root_of_unity_order(f.poly)});
    }
    for (const auto& f : info.factors) {
        if (up_degree(f.poly) != 1) continue;
        const Rational lambda = -f.poly[0] / f.poly[1];
        JordanEigen eig;
        eig.value = lambda;
        eig.algebraic_multiplicity = f.multiplicity;
        eig.unity_order = f.unity_order;
        // rank sequence of (M - lambda I)^k gives the block profile
        RatMat shifted = mat_sub(m, mat_scale(mat_identity(n), lambda));
        std::vector<int> rank(static_cast<std::size_t>(f.multiplicity) + 2);
        RatMat power = mat_identity(n);
        for (int k = 0; k <= f.multiplicity + 1; ++k) {
            rank[static_cast<std::size_t>(k)] = mat_rank(power);
            power = mat_mul(power, shifted);
        }
        for (int size = f.multiplicity; size >= 1; --size) {
            const int geq_size = rank[static_cast<std::size_t>(size) - 1] - rank[static_cast<std::size_t>(size)];
            const int geq_next = rank[static_cast<std::size_t>(size)] - rank[static_cast<std::size_t>(size) + 1];
            for (int c = 0; c < geq_size - geq_next; ++c) eig.block_sizes.push_back(size);
        }
        info.rational_eigen.push_back(std::move(eig));
    }
    std::sort(info.rational_eigen.begin(), info.rational_eigen.end(),
              [](const JordanEigen& a, const JordanEigen& b) { return a.value < b.value; });
    return info;
}

}  // namespace pbw
