#include "hamcount/io.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "hamcount/errors.hpp"

namespace hamcount {

namespace {

struct Token {
    std::string_view text;
    int line = 1;
    int col = 1;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line, col = 1, ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++col, ++i;
        } else {
            const std::size_t start = i;
            const int tline = line, tcol = col;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
                ++i, ++col;
            out.push_back({text.substr(start, i - start), tline, tcol});
        }
    }
    return out;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

int parse_small_int(const Token& t, const char* what) {
    int value = 0;
    const char* last = t.text.data() + t.text.size();
    const auto [ptr, ec] = std::from_chars(t.text.data(), last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(std::string("invalid ") + what + " '" + std::string(t.text) + "'",
                         t.line, t.col);
    return value;
}

BigInt parse_weight(const Token& t) {
    if (!is_integer_token(t.text))
        throw ParseError("invalid integer '" + std::string(t.text) + "'", t.line, t.col);
    std::string_view digits = t.text;
    if (digits[0] == '+') digits.remove_prefix(1);  // cpp_int rejects a leading '+'
    return BigInt(std::string(digits));
}

}  // namespace

SquareMatrix parse_matrix(std::string_view text) {
    const std::vector<Token> tok = tokenize(text);
    if (tok.empty()) throw ParseError("empty input", 1, 1);

    const int n = parse_small_int(tok[0], "matrix dimension");
    if (n < 1)
        throw ParseError("matrix dimension must be at least 1, got " + std::to_string(n),
                         tok[0].line, tok[0].col);

    const std::size_t want = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    const std::size_t have = tok.size() - 1;
    if (have != want) {
        const Token& at = have > want ? tok[1 + want] : tok.back();
        throw ParseError("expected " + std::to_string(want) + " entries, found " +
                             std::to_string(have),
                         at.line, at.col);
    }

    SquareMatrix a(n);
    std::size_t k = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a.at(i, j) = parse_weight(tok[k++]);
    return a;
}

SquareMatrix parse_edgelist(std::string_view text) {
    const std::vector<Token> tok = tokenize(text);
    if (tok.empty()) throw ParseError("empty input", 1, 1);
    if (tok[0].text != "n")
        throw ParseError("edge list must start with a header line 'n <count>'", tok[0].line,
                         tok[0].col);
    if (tok.size() < 2 || tok[1].line != tok[0].line)
        throw ParseError("missing vertex count in header", tok[0].line,
                         tok[0].col + 1);
    const int n = parse_small_int(tok[1], "vertex count");
    if (n < 1)
        throw ParseError("vertex count must be at least 1, got " + std::to_string(n),
                         tok[1].line, tok[1].col);
    if (tok.size() > 2 && tok[2].line == tok[0].line)
        throw ParseError("unexpected token after header", tok[2].line, tok[2].col);

    SquareMatrix a(n);
    std::size_t i = 2;
    while (i < tok.size()) {
        const int line = tok[i].line;
        std::size_t end = i;
        while (end < tok.size() && tok[end].line == line) ++end;
        const std::size_t width = end - i;
        if (width < 2 || width > 3)
            throw ParseError("expected an edge line 'u v' or 'u v w'", tok[i].line, tok[i].col);
        int uv[2];
        for (int k = 0; k < 2; ++k) {
            uv[k] = parse_small_int(tok[i + static_cast<std::size_t>(k)], "vertex");
            if (uv[k] < 1 || uv[k] > n) {
                const Token& t = tok[i + static_cast<std::size_t>(k)];
                throw ParseError("vertex " + std::to_string(uv[k]) + " out of range", t.line,
                                 t.col);
            }
        }
        const BigInt w = width == 3 ? parse_weight(tok[i + 2]) : BigInt(1);
        a.at(uv[0], uv[1]) += w;
        i = end;
    }
    return a;
}

InputGraph parse_graph(std::string_view text) {
    const std::vector<Token> tok = tokenize(text);
    InputGraph g;
    if (!tok.empty() && tok[0].text == "n") {
        g.format = InputGraph::Format::edgelist;
        g.matrix = parse_edgelist(text);
    } else {
        g.format = InputGraph::Format::matrix;
        g.matrix = parse_matrix(text);
    }
    g.n = g.matrix.size();
    return g;
}

std::string render_matrix(const SquareMatrix& a) {
    std::string out = std::to_string(a.size());
    out += '\n';
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) {
            if (j > 1) out += ' ';
            out += a.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

SquareMatrix mirror_directed_edges(const SquareMatrix& a) {
    const int n = a.size();
    SquareMatrix b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            b.at(i, j) = i == j ? a.at(i, j) : a.at(i, j) + a.at(j, i);
    return b;
}

}  // namespace hamcount
