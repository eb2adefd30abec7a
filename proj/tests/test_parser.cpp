#include "pbw/parse.hpp"

#include "doctest.h"
#include "generators.hpp"

#include <random>

using namespace pbw;

namespace {

const Alphabet kXY({"x1", "x2"});

}  // namespace

TEST_CASE("expression parser handles products, powers and rationals") {
    NCPoly f = parse_expression("x1*x2 - 2*x2*x1 + 3*x1 + 5*x2 + 7", kXY);
    NCPoly expect = make_poly<Rational>({{{0, 1}, Rational(1)},
                                         {{1, 0}, Rational(-2)},
                                         {{0}, Rational(3)},
                                         {{1}, Rational(5)},
                                         {{}, Rational(7)}});
    CHECK(f == expect);

    CHECK(parse_expression("x1^3", kXY) == nc_monomial(Word{0, 0, 0}, Rational(1)));
    CHECK(parse_expression("1/2*x2", kXY) == nc_monomial(Word{1}, Rational(1, 2)));
    CHECK(parse_expression("-x1", kXY) == nc_monomial(Word{0}, Rational(-1)));
    CHECK(parse_expression("(x1 + x2)*(x1 - x2)", kXY) ==
          parse_expression("x1^2 - x1*x2 + x2*x1 - x2^2", kXY));
    CHECK(parse_expression("0", kXY).is_zero());
    // '^' only applies to generators, not numeric literals
    CHECK_THROWS_AS(parse_expression("2^3*x1", kXY), ParseError);
}

TEST_CASE("parse errors carry line and column") {
    CHECK_THROWS_AS(parse_expression("x1 +", kXY), ParseError);
    CHECK_THROWS_AS(parse_expression("x3", kXY), ParseError);
    CHECK_THROWS_AS(parse_expression("x1^0", kXY), ParseError);
    CHECK_THROWS_AS(parse_expression("x1 x2", kXY), ParseError);  // missing '*'
    CHECK_THROWS_AS(parse_expression("(x1", kXY), ParseError);
    try {
        parse_alg_file("generators: x1, x2\nrelations:\n  x1*x2 +\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.col > 0);
    }
}

TEST_CASE("alg file: sections, comments, matrix, options") {
    const std::string text =
        "# a quantum plane deformation\n"
        "generators: x1, x2\n"
        "relations:\n"
        "  x1*x2 - 2*x2*x1 + 3*x1 + 5*x2 + 7  # inline comment\n"
        "graded_nakayama: [2, 0; 0, 1/2]\n"
        "options:\n"
        "  degree_bound = 12\n";
    AlgFile f = parse_alg_file(text);
    CHECK(f.presentation.alphabet.names == std::vector<std::string>{"x1", "x2"});
    REQUIRE(f.presentation.relations.size() == 1);
    CHECK(f.presentation.relations[0] ==
          parse_expression("x1*x2 - 2*x2*x1 + 3*x1 + 5*x2 + 7", kXY));
    REQUIRE(f.graded_nakayama.has_value());
    CHECK((*f.graded_nakayama)[0][0] == Rational(2));
    CHECK((*f.graded_nakayama)[1][1] == Rational(1, 2));
    CHECK(f.options.at("degree_bound") == "12");
    CHECK(!f.presentation.central_index.has_value());
}

TEST_CASE("central generator is declared and reserved") {
    AlgFile f = parse_alg_file(
        "generators: t, x1, x2\n"
        "central: t\n"
        "relations:\n"
        "  x1*t - t*x1\n");
    REQUIRE(f.presentation.central_index.has_value());
    CHECK(*f.presentation.central_index == 0);
    // 't' without a central declaration is rejected
    CHECK_THROWS_AS(parse_alg_file("generators: t, x1\nrelations:\n  x1*t\n"), ParseError);
    // missing generators section is rejected
    CHECK_THROWS_AS(parse_alg_file("relations:\n  x1\n"), ParseError);
}

TEST_CASE("duplicate generators are rejected") {
    CHECK_THROWS_AS(parse_alg_file("generators: x1, x1\n"), ParseError);
}

TEST_CASE("render then parse is the identity on random polynomials") {
    std::mt19937 rng(21);
    const Alphabet ab = testgen::alphabet_xn(3);
    for (int it = 0; it < 300; ++it) {
        NCPoly f = testgen::rand_poly(rng, 3, 4, 6);
        CHECK(parse_expression(render_poly(f, ab), ab) == f);
    }
    CHECK(render_poly(NCPoly{}, ab) == "0");
}

TEST_CASE("render then parse round-trips whole files") {
    std::mt19937 rng(22);
    for (int it = 0; it < 50; ++it) {
        AlgFile f;
        f.presentation = testgen::rand_presentation(rng, 2, 2, 3, 4);
        f.graded_nakayama = testgen::rand_matrix(rng, 2);
        AlgFile g = parse_alg_file(render_alg_file(f));
        CHECK(g.presentation.alphabet == f.presentation.alphabet);
        CHECK(g.presentation.relations == f.presentation.relations);
        CHECK(mat_equal(*g.graded_nakayama, *f.graded_nakayama));
    }
}

TEST_CASE("generator listing order is preserved verbatim") {
    AlgFile f = parse_alg_file("generators: x2, x1\nrelations:\n  x1*x2 - x2*x1\n");
    CHECK(f.presentation.alphabet.names == std::vector<std::string>{"x2", "x1"});
    // x2 is listed first, so it is the smaller letter and x1*x2 leads
    CHECK(f.presentation.relations[0].leading_word() == Word{1, 0});
}
