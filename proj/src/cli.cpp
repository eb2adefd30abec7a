#include "pbw/cli.hpp"

#include "pbw/groebner.hpp"
#include "pbw/homog.hpp"
#include "pbw/hopf.hpp"
#include "pbw/nakayama.hpp"
#include "pbw/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace pbw {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int max_relation_degree(const Presentation& p) {
    int d = 1;
    for (const auto& r : p.relations) d = std::max(d, r.degree());
    return d;
}

ordered_json vec_json(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

ordered_json mat_json(const RatMat& m) {
    ordered_json a = ordered_json::array();
    for (const auto& row : m) a.push_back(vec_json(row));
    return a;
}

ordered_json gb_json(const GB& gb) {
    return ordered_json{{"status", gb.complete ? "complete" : "truncated"},
                        {"size", gb.basis.size()},
                        {"max_degree", gb.max_degree}};
}

ordered_json basis_json(const GB& gb, const Alphabet& ab) {
    ordered_json a = ordered_json::array();
    for (const auto& g : gb.basis) a.push_back(render_poly(g, ab));
    return a;
}

ordered_json lift_json(const LiftResult& r) {
    ordered_json sols = ordered_json::array();
    for (const auto& l : r.lifts)
        sols.push_back(ordered_json{{"matrix", mat_json(l.matrix)},
                                    {"shift", vec_json(l.shift)},
                                    {"calabi_yau", is_calabi_yau(l)}});
    ordered_json out{{"method", r.method},
                     {"status", lift_status_name(r.status)},
                     {"search_complete", r.search_complete},
                     {"solutions", std::move(sols)}};
    if (r.status == LiftStatus::PositiveDimensional)
        out["uniqueness_note"] = "solution set is positive-dimensional; listed maps are representatives";
    else if (r.lifts.size() > 1)
        out["uniqueness_note"] = "multiple verified lifts; none privileged";
    return out;
}

ordered_json jordan_json(const JordanInfo& j) {
    ordered_json factors = ordered_json::array();
    for (const auto& f : j.factors)
        factors.push_back(ordered_json{{"polynomial", up_str(f.poly)},
                                       {"multiplicity", f.multiplicity},
                                       {"certified_irreducible", f.certified_irreducible},
                                       {"unity_order", f.unity_order}});
    ordered_json blocks = ordered_json::array();
    for (const auto& e : j.rational_eigen)
        blocks.push_back(ordered_json{{"eigenvalue", rat_str(e.value)},
                                      {"multiplicity", e.algebraic_multiplicity},
                                      {"block_sizes", e.block_sizes},
                                      {"unity_order", e.unity_order}});
    return ordered_json{{"factors", std::move(factors)},
                        {"blocks", std::move(blocks)},
                        {"all_rational", j.all_rational}};
}

ordered_json hopf_json(const HopfReport& h) {
    ordered_json tags = ordered_json::array();
    for (const auto& c : h.conclusions) tags.push_back(c.tag);
    return ordered_json{{"case", hopf_case_name(h.kase)},
                        {"conclusions", std::move(tags)},
                        {"assumptions",
                         ordered_json{{"assume_semisimple", h.assumptions_used.assume_semisimple},
                                      {"assume_trivial_hdet", h.assumptions_used.assume_trivial_hdet}}}};
}

ordered_json hopf_debug_json(const HopfReport& h) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : h.verified_hypotheses)
        checks.push_back(
            ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    ordered_json just = ordered_json::array();
    for (const auto& c : h.conclusions)
        just.push_back(ordered_json{{"tag", c.tag}, {"justified_by", c.justified_by}});
    return ordered_json{{"checks", std::move(checks)},
                        {"grouplike_relations", h.grouplike_relations},
                        {"justifications", std::move(just)}};
}

std::string render_affine(const AffineMap& l, const Alphabet& ab) {
    const std::vector<NCPoly> images = affine_images(l);
    std::string s;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) s += "; ";
        s += ab.names[i] + " -> " + render_poly(images[i], ab);
    }
    return s;
}

int lift_exit(LiftStatus s) {
    switch (s) {
        case LiftStatus::Ok: return 0;
        case LiftStatus::InconclusiveTruncated: return 3;
        default: return 2;
    }
}

const char* pbw_verdict_name(PBWReport::Verdict v) {
    switch (v) {
        case PBWReport::Verdict::Yes: return "verified";
        case PBWReport::Verdict::No: return "refuted";
        default: return "truncated";
    }
}

struct Emitter {
    std::string command;
    std::vector<std::string> hashes;  // per input file, argument order
    std::string format = "json";
    bool quiet = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    // In JSON mode emits the full report; in text mode the given lines.
    void emit(ordered_json body, ordered_json debug, const std::vector<std::string>& text,
              std::ostream& out) const {
        if (format == "text") {
            for (const auto& line : text) out << line << "\n";
            return;
        }
        ordered_json rep;
        rep["command"] = command;
        rep["input_sha"] = hashes;
        for (auto& [k, v] : body.items()) rep[k] = v;
        if (!debug.is_null()) rep["debug"] = std::move(debug);
        if (!quiet)
            rep["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
        rep["version"] = kVersion;
        out << rep.dump(2) << "\n";
    }
};

AlgFile load_alg(const std::string& path, Emitter& em) {
    const std::string text = read_file(path);
    em.hashes.push_back(sha256_hex(text));
    try {
        return parse_alg_file(text);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

int cmd_gb(const std::string& path, int bound, Emitter& em, std::ostream& out) {
    const AlgFile f = load_alg(path, em);
    const Presentation& p = f.presentation;
    if (bound <= 0) bound = 2 * max_relation_degree(p) + 2;
    const GB gb = buchberger(p.relations, bound);

    ordered_json body{{"gb", gb_json(gb)}};
    ordered_json debug{{"degree_bound", bound}, {"basis", basis_json(gb, p.alphabet)}};
    const std::string line = std::string("gb: ") + (gb.complete ? "complete" : "truncated") +
                             ", " + std::to_string(gb.basis.size()) + " elements, max degree " +
                             std::to_string(gb.max_degree);
    em.emit(std::move(body), std::move(debug), {line}, out);
    return gb.complete ? 0 : 3;
}

int cmd_check_pbw(const std::string& graded_path, const std::string& filtered_path, int bound,
                  Emitter& em, std::ostream& out) {
    const AlgFile fa = load_alg(graded_path, em);
    const AlgFile fu = load_alg(filtered_path, em);
    const Presentation& a = fa.presentation;
    const Presentation& u = fu.presentation;
    if (a.alphabet.size() != u.alphabet.size())
        throw std::runtime_error("generator counts differ between the two files");
    for (const auto& r : a.relations)
        if (!r.is_zero() && !is_homogeneous(r))
            throw std::runtime_error(graded_path + ": relation " + render_poly(r, a.alphabet) +
                                     " is not homogeneous");

    if (bound <= 0) bound = 2 * std::max(max_relation_degree(a), max_relation_degree(u)) + 2;
    PBWReport rep = is_pbw_deformation(u, bound);

    // The filtered file's top parts must present the same graded ideal as the
    // graded file, otherwise it deforms some other algebra.
    const GB gb_a = buchberger(a.relations, bound);
    Tri same = Tri::Yes;
    auto fold = [&same](Tri t) {
        if (t == Tri::No) same = Tri::No;
        else if (t == Tri::Unknown && same == Tri::Yes) same = Tri::Unknown;
    };
    for (const auto& r : u.relations)
        if (!r.is_zero()) fold(ideal_member(lh(r), gb_a));
    for (const auto& r : a.relations)
        if (!r.is_zero()) fold(ideal_member(r, rep.gb_graded));

    PBWReport::Verdict verdict = rep.verdict;
    std::string detail = rep.detail;
    if (same == Tri::No) {
        verdict = PBWReport::Verdict::No;
        detail = "the graded file and the filtered file's top parts present different ideals";
    } else if (same == Tri::Unknown && verdict == PBWReport::Verdict::Yes) {
        verdict = PBWReport::Verdict::Truncated;
        detail = "ideal comparison with the graded file hit the degree bound";
    }

    ordered_json body{{"gb", gb_json(rep.gb_filtered)},
                      {"pbw",
                       ordered_json{{"verdict", pbw_verdict_name(verdict)},
                                    {"per_degree_dims",
                                     ordered_json{{"graded", rep.dims_graded},
                                                  {"filtered", rep.dims_filtered}}},
                                    {"detail", detail}}}};
    ordered_json debug{{"degree_bound", bound},
                       {"basis_filtered", basis_json(rep.gb_filtered, u.alphabet)},
                       {"basis_graded", basis_json(rep.gb_graded, u.alphabet)},
                       {"basis_graded_file", basis_json(gb_a, a.alphabet)}};
    std::string line = std::string("pbw: ") + pbw_verdict_name(verdict);
    if (verdict != PBWReport::Verdict::Yes && !detail.empty()) line += " (" + detail + ")";
    em.emit(std::move(body), std::move(debug), {line}, out);
    return verdict == PBWReport::Verdict::Yes ? 0
           : verdict == PBWReport::Verdict::No ? 2
                                               : 3;
}

int cmd_homogenize(const std::string& path, Emitter& em, std::ostream& out) {
    const AlgFile f = load_alg(path, em);
    AlgFile h;
    h.presentation = homogenize_presentation(f.presentation);
    h.options = f.options;
    const std::string rendered = render_alg_file(h);

    const std::optional<int> drop = presentation_degree_drop(f.presentation);
    ordered_json body{{"output", rendered}};
    ordered_json debug{{"degree_drop", drop ? ordered_json(*drop) : ordered_json("inf")}};
    em.emit(std::move(body), std::move(debug), {rendered}, out);
    return 0;
}

// Shared front half of nakayama, skew-ext and classify-hopf.
struct LiftStage {
    AlgFile file;
    LiftResult lift;
    JordanInfo jordan;
    int bound = 0;
};

LiftStage run_lift(const std::string& path, int bound, Emitter& em) {
    LiftStage st;
    st.file = load_alg(path, em);
    if (!st.file.graded_nakayama)
        throw std::runtime_error(path + ": no graded_nakayama block; this command needs one");
    const Presentation& p = st.file.presentation;
    st.bound = bound > 0 ? bound : 2 * max_relation_degree(p) + 2;
    st.lift = lift_nakayama(p, *st.file.graded_nakayama, st.bound);
    st.jordan = jordan_structure(*st.file.graded_nakayama);
    return st;
}

ordered_json lift_debug(const LiftStage& st) {
    return ordered_json{{"degree_bound", st.bound},
                        {"basis", basis_json(st.lift.gb, st.file.presentation.alphabet)},
                        {"residual_system", st.lift.residual_equations},
                        {"eliminants", st.lift.eliminants}};
}

std::vector<std::string> lift_text(const LiftStage& st) {
    std::vector<std::string> lines;
    lines.push_back("lift: " + lift_status_name(st.lift.status) + " via " + st.lift.method);
    for (const auto& l : st.lift.lifts) {
        lines.push_back("  " + render_affine(l, st.file.presentation.alphabet));
        lines.push_back(std::string("  calabi_yau: ") + (is_calabi_yau(l) ? "yes" : "no"));
    }
    return lines;
}

int cmd_nakayama(const std::string& path, int bound, Emitter& em, std::ostream& out) {
    const LiftStage st = run_lift(path, bound, em);
    ordered_json body{{"gb", gb_json(st.lift.gb)},
                      {"lift", lift_json(st.lift)},
                      {"jordan", jordan_json(st.jordan)}};
    em.emit(std::move(body), lift_debug(st), lift_text(st), out);
    return lift_exit(st.lift.status);
}

int cmd_skew_ext(const std::string& path, int bound, Emitter& em, std::ostream& out) {
    const LiftStage st = run_lift(path, bound, em);
    ordered_json body{{"gb", gb_json(st.lift.gb)}, {"lift", lift_json(st.lift)}};
    if (st.lift.status != LiftStatus::Ok) {
        em.emit(std::move(body), lift_debug(st), lift_text(st), out);
        return lift_exit(st.lift.status);
    }
    const AlgFile ext = build_skew_extension(st.file.presentation, st.lift.lifts[0]);
    const std::string rendered = render_alg_file(ext);
    body["output"] = rendered;
    em.emit(std::move(body), lift_debug(st), {rendered}, out);
    return 0;
}

int cmd_classify_hopf(const std::string& path, int bound, HopfFlags flags, Emitter& em,
                      std::ostream& out) {
    const LiftStage st = run_lift(path, bound, em);
    ordered_json body{{"gb", gb_json(st.lift.gb)},
                      {"lift", lift_json(st.lift)},
                      {"jordan", jordan_json(st.jordan)}};
    if (st.lift.lifts.empty()) {
        em.emit(std::move(body), lift_debug(st), lift_text(st), out);
        return lift_exit(st.lift.status) == 0 ? 3 : lift_exit(st.lift.status);
    }

    HopfReport h = classify(st.file.presentation, st.lift.lifts[0], flags);
    if (st.lift.status == LiftStatus::PositiveDimensional &&
        (h.kase == HopfCase::Diagonal1 || h.kase == HopfCase::Diagonal2)) {
        // The diagonal cases read constants off the specific shift, and with a
        // positive-dimensional family the representative's constants are not
        // canonical; only the shift-insensitive block cases survive.
        h.verified_hypotheses.push_back(
            {"lift_unique", false, "positive-dimensional lift family"});
        h.kase = HopfCase::Inconclusive;
        h.conclusions.clear();
        h.grouplike_relations.clear();
    }

    body["hopf"] = hopf_json(h);
    ordered_json debug = lift_debug(st);
    debug["hopf"] = hopf_debug_json(h);

    std::vector<std::string> lines = {"hopf: " + hopf_case_name(h.kase)};
    if (!h.conclusions.empty()) {
        std::string cs;
        for (const auto& c : h.conclusions) {
            if (!cs.empty()) cs += ", ";
            cs += c.tag;
        }
        lines.push_back("conclusions: " + cs);
    }
    em.emit(std::move(body), std::move(debug), lines, out);
    return h.conclusions.empty() ? 3 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Filtered-algebra toolkit: Groebner bases, PBW checks, automorphism lifts"};
    app.require_subcommand(1);
    app.fallthrough();

    int bound = -1;
    Emitter em;
    app.add_option("--degree-bound", bound, "completion degree bound (default 2*maxdeg+2)");
    app.add_option("--format", em.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_flag("--quiet", em.quiet, "omit the timing field");

    std::string file_a, file_b;
    CLI::App* gb = app.add_subcommand("gb", "complete a Groebner basis");
    gb->add_option("file", file_a, ".alg input")->required();

    CLI::App* pbw =
        app.add_subcommand("check-pbw", "check that the second file PBW-deforms the first");
    pbw->add_option("graded", file_a, "graded .alg input")->required();
    pbw->add_option("filtered", file_b, "filtered .alg input")->required();

    CLI::App* hom = app.add_subcommand("homogenize", "adjoin a central degree-1 generator");
    hom->add_option("file", file_a, ".alg input")->required();

    CLI::App* nak = app.add_subcommand("nakayama", "lift the graded Nakayama matrix");
    nak->add_option("file", file_a, ".alg input with a graded_nakayama block")->required();

    CLI::App* ske = app.add_subcommand("skew-ext", "extend by the lifted automorphism");
    ske->add_option("file", file_a, ".alg input with a graded_nakayama block")->required();

    HopfFlags flags;
    CLI::App* hop = app.add_subcommand("classify-hopf", "classify finite-dimensional Hopf actions");
    hop->add_option("file", file_a, ".alg input with a graded_nakayama block")->required();
    hop->add_flag("--assume-semisimple", flags.assume_semisimple,
                  "assume the acting Hopf algebra is semisimple");
    hop->add_flag("--assume-trivial-hdet", flags.assume_trivial_hdet,
                  "assume the action has trivial homological determinant");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;  // usage problems are all exit 1
    }

    try {
        if (gb->parsed()) {
            em.command = "gb";
            return cmd_gb(file_a, bound, em, out);
        }
        if (pbw->parsed()) {
            em.command = "check-pbw";
            return cmd_check_pbw(file_a, file_b, bound, em, out);
        }
        if (hom->parsed()) {
            em.command = "homogenize";
            return cmd_homogenize(file_a, em, out);
        }
        if (nak->parsed()) {
            em.command = "nakayama";
            return cmd_nakayama(file_a, bound, em, out);
        }
        if (ske->parsed()) {
            em.command = "skew-ext";
            return cmd_skew_ext(file_a, bound, em, out);
        }
        em.command = "classify-hopf";
        return cmd_classify_hopf(file_a, bound, flags, em, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pbw
