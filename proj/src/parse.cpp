#include "pbw/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pbw {

namespace {

struct Token {
    enum Kind { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> lex(const std::string& s, int base_line) {
    std::vector<Token> out;
    int line = base_line, col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, int c) { out.push_back({k, std::move(text), line, c}); };
    while (i < s.size()) {
        const char ch = s[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (ch == '#') {  // comment to end of line
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        const int start_col = col;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string id;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
                id += s[i];
                ++i;
                ++col;
            }
            push(Token::Ident, std::move(id), start_col);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                num += s[i];
                ++i;
                ++col;
            }
            push(Token::Int, std::move(num), start_col);
            continue;
        }
        ++i;
        ++col;
        switch (ch) {
            case '+': push(Token::Plus, "+", start_col); break;
            case '-': push(Token::Minus, "-", start_col); break;
            case '*': push(Token::Star, "*", start_col); break;
            case '^': push(Token::Caret, "^", start_col); break;
            case '(': push(Token::LParen, "(", start_col); break;
            case ')': push(Token::RParen, ")", start_col); break;
            case '/': push(Token::Slash, "/", start_col); break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", line, start_col);
        }
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

class ExprParser {
  public:
    ExprParser(std::vector<Token> tokens, const Alphabet& alphabet)
        : toks_(std::move(tokens)), alphabet_(alphabet) {}

    NCPoly parse() {
        NCPoly f = expr();
        expect(Token::End, "end of expression");
        return f;
    }

  private:
    std::vector<Token> toks_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what + (peek().kind == Token::End ? "" : ", got '" + peek().text + "'"),
                             peek().line, peek().col);
        ++pos_;
    }

    NCPoly expr() {
        bool neg = accept(Token::Minus);
        NCPoly f = term();
        if (neg) f = nc_neg(std::move(f));
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool minus = next().kind == Token::Minus;
            NCPoly g = term();
            f = minus ? nc_sub(f, g) : nc_add(f, g);
        }
        return f;
    }

    NCPoly term() {
        NCPoly f = factor();
        while (accept(Token::Star)) f = nc_mul(f, factor());
        return f;
    }

    Rational integer_literal() {
        const Token& t = peek();
        expect(Token::Int, "an integer");
        return Rational(Integer(t.text));
    }

    NCPoly factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Int: {
                Rational c = integer_literal();
                if (accept(Token::Slash)) {
                    const Token& d = peek();
                    Rational den = integer_literal();
                    if (den.is_zero()) throw ParseError("zero denominator", d.line, d.col);
                    c /= den;
                }
                return nc_constant(c);
            }
            case Token::Ident: {
                next();
                auto idx = alphabet_.index_of(t.text);
                if (!idx) throw ParseError("unknown generator '" + t.text + "'", t.line, t.col);
                int exponent = 1;
                if (accept(Token::Caret)) {
                    const Token& e = peek();
                    Rational ev = integer_literal();
                    if (ev < 1) throw ParseError("exponent must be positive", e.line, e.col);
                    if (ev > 1000) throw ParseError("exponent too large", e.line, e.col);
                    exponent = rat_num(ev).convert_to<int>();
                }
                Word w(static_cast<std::size_t>(exponent), *idx);
                return nc_monomial<Rational>(std::move(w), Rational(1));
            }
            case Token::LParen: {
                next();
                NCPoly f = expr();
                expect(Token::RParen, "')'");
                return f;
            }
            default:
                throw ParseError("expected a term" + (t.kind == Token::End ? std::string() : ", got '" + t.text + "'"),
                                 t.line, t.col);
        }
    }
};

std::string strip_comment(const std::string& line) {
    const auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Section header: ident ':' possibly followed by inline content.
bool split_header(const std::string& line, std::string& key, std::string& rest) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t b = i;
    while (i < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        ++i;
    if (i == b) return false;
    std::size_t k = i;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k >= line.size() || line[k] != ':') return false;
    key = line.substr(b, i - b);
    rest = trim(line.substr(k + 1));
    return true;
}

Rational parse_rational_text(const std::string& s, int line, int col_base) {
    auto toks = lex(s, line);
    std::size_t p = 0;
    bool neg = false;
    if (toks[p].kind == Token::Minus) {
        neg = true;
        ++p;
    }
    if (toks[p].kind != Token::Int) throw ParseError("expected a rational number", line, col_base);
    Rational v{Integer(toks[p].text)};
    ++p;
    if (toks[p].kind == Token::Slash) {
        ++p;
        if (toks[p].kind != Token::Int) throw ParseError("expected a denominator", line, col_base);
        Rational den{Integer(toks[p].text)};
        if (den.is_zero()) throw ParseError("zero denominator", line, col_base);
        v /= den;
        ++p;
    }
    if (toks[p].kind != Token::End) throw ParseError("trailing characters after number", toks[p].line, toks[p].col);
    return neg ? Rational(-v) : v;
}

RatMat parse_matrix_text(const std::string& s, int line) {
    std::string body = trim(s);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("expected a matrix like [a,b;c,d]", line, 1);
    body = body.substr(1, body.size() - 2);
    RatMat m;
    std::size_t row_start = 0;
    while (true) {
        const auto semi = body.find(';', row_start);
        const std::string row_text = semi == std::string::npos ? body.substr(row_start) : body.substr(row_start, semi - row_start);
        RatVec row;
        std::size_t ent_start = 0;
        while (true) {
            const auto comma = row_text.find(',', ent_start);
            const std::string ent = comma == std::string::npos ? row_text.substr(ent_start) : row_text.substr(ent_start, comma - ent_start);
            row.push_back(parse_rational_text(trim(ent), line, 1));
            if (comma == std::string::npos) break;
            ent_start = comma + 1;
        }
        m.push_back(std::move(row));
        if (semi == std::string::npos) break;
        row_start = semi + 1;
    }
    for (const auto& row : m)
        if (row.size() != m[0].size()) throw ParseError("matrix rows have unequal length", line, 1);
    return m;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t b = 0;
    while (true) {
        const auto c = s.find(',', b);
        out.push_back(trim(c == std::string::npos ? s.substr(b) : s.substr(b, c - b)));
        if (c == std::string::npos) break;
        b = c + 1;
    }
    return out;
}

bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

}  // namespace

NCPoly parse_expression(const std::string& text, const Alphabet& alphabet) {
    return ExprParser(lex(text, 1), alphabet).parse();
}

AlgFile parse_alg_file(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }

    std::optional<std::pair<std::string, int>> generators_line;  // content, line no
    std::optional<std::pair<std::string, int>> matrix_line;
    std::optional<std::pair<std::string, int>> central_line;
    std::vector<std::pair<std::string, int>> relation_lines;
    std::vector<std::pair<std::string, int>> option_lines;

    enum class Block { None, Relations, Options };
    Block block = Block::None;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li) + 1;
        const std::string stripped = strip_comment(lines[li]);
        if (trim(stripped).empty()) continue;
        std::string key, rest;
        if (split_header(stripped, key, rest)) {
            if (key == "generators") {
                if (generators_line) throw ParseError("duplicate generators section", line_no, 1);
                generators_line = {rest, line_no};
                block = Block::None;
            } else if (key == "relations") {
                if (!rest.empty()) throw ParseError("relations must be listed on following lines", line_no, 1);
                block = Block::Relations;
            } else if (key == "graded_nakayama") {
                if (matrix_line) throw ParseError("duplicate graded_nakayama section", line_no, 1);
                matrix_line = {rest, line_no};
                block = Block::None;
            } else if (key == "central") {
                if (central_line) throw ParseError("duplicate central section", line_no, 1);
                central_line = {rest, line_no};
                block = Block::None;
            } else if (key == "options") {
                if (!rest.empty()) throw ParseError("options must be listed on following lines", line_no, 1);
                block = Block::Options;
            } else {
                throw ParseError("unknown section '" + key + "'", line_no, 1);
            }
            continue;
        }
        switch (block) {
            case Block::Relations: relation_lines.push_back({stripped, line_no}); break;
            case Block::Options: option_lines.push_back({trim(stripped), line_no}); break;
            case Block::None: throw ParseError("content outside any section", line_no, 1);
        }
    }

    if (!generators_line) throw ParseError("missing generators section", static_cast<int>(lines.size()), 1);

    AlgFile file;

    std::vector<std::string> names = split_commas(generators_line->first);
    if (names.size() == 1 && names[0].empty()) throw ParseError("empty generator list", generators_line->second, 1);
    for (const auto& n : names) {
        if (!valid_ident(n)) throw ParseError("invalid generator name '" + n + "'", generators_line->second, 1);
        if (std::count(names.begin(), names.end(), n) > 1)
            throw ParseError("duplicate generator '" + n + "'", generators_line->second, 1);
    }

    std::optional<std::string> central_name;
    if (central_line) {
        central_name = trim(central_line->first);
        if (!valid_ident(*central_name))
            throw ParseError("invalid central generator name", central_line->second, 1);
    }
    for (const auto& n : names)
        if (n == "t" && central_name != "t")
            throw ParseError("generator name 't' is reserved for the homogenizing generator; declare it with 'central: t'",
                             generators_line->second, 1);

    file.presentation.alphabet = Alphabet(names);
    if (central_name) {
        auto idx = file.presentation.alphabet.index_of(*central_name);
        if (!idx)
            throw ParseError("central generator '" + *central_name + "' is not in the generator list",
                             central_line->second, 1);
        file.presentation.central_index = *idx;
    }

    for (const auto& [rl, line_no] : relation_lines) {
        NCPoly f = ExprParser(lex(rl, line_no), file.presentation.alphabet).parse();
        if (f.is_zero()) throw ParseError("relation is identically zero", line_no, 1);
        file.presentation.relations.push_back(std::move(f));
    }

    if (matrix_line) {
        RatMat m = parse_matrix_text(matrix_line->first, matrix_line->second);
        const std::size_t expected =
            file.presentation.alphabet.size() - (file.presentation.central_index ? 1 : 0);
        if (m.size() != expected || m[0].size() != expected)
            throw ParseError("graded_nakayama must be " + std::to_string(expected) + "x" + std::to_string(expected),
                             matrix_line->second, 1);
        file.graded_nakayama = std::move(m);
    }

    for (const auto& [ol, line_no] : option_lines) {
        const auto eq = ol.find('=');
        if (eq == std::string::npos) throw ParseError("options take the form 'name = value'", line_no, 1);
        const std::string name = trim(ol.substr(0, eq));
        const std::string value = trim(ol.substr(eq + 1));
        if (!valid_ident(name)) throw ParseError("invalid option name", line_no, 1);
        if (file.options.count(name)) throw ParseError("duplicate option '" + name + "'", line_no, 1);
        file.options[name] = value;
    }

    return file;
}

std::string render_poly(const NCPoly& f, const Alphabet& alphabet) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms) {
        const bool neg = c < 0;
        const Rational ac = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        std::size_t i = 0;
        while (i < w.size()) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!mono.empty()) mono += "*";
            mono += alphabet.names[static_cast<std::size_t>(w[i])];
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
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

std::string render_matrix(const RatMat& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ";";
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j) out += ",";
            out += rat_str(m[i][j]);
        }
    }
    out += "]";
    return out;
}

std::string render_alg_file(const AlgFile& file) {
    std::string out = "generators: ";
    const Alphabet& ab = file.presentation.alphabet;
    for (std::size_t i = 0; i < ab.names.size(); ++i) {
        if (i) out += ", ";
        out += ab.names[i];
    }
    out += "\n";
    if (file.presentation.central_index)
        out += "central: " + ab.names[static_cast<std::size_t>(*file.presentation.central_index)] + "\n";
    out += "relations:\n";
    for (const auto& r : file.presentation.relations) out += "  " + render_poly(r, ab) + "\n";
    if (file.graded_nakayama) out += "graded_nakayama: " + render_matrix(*file.graded_nakayama) + "\n";
    if (!file.options.empty()) {
        out += "options:\n";
        for (const auto& [k, v] : file.options) out += "  " + k + " = " + v + "\n";
    }
    return out;
}

}  // namespace pbw
