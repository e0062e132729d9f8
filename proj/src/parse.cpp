#include "lqbetti/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lqb {

namespace {

struct Token {
    enum class Kind { ident, integer, punct, end };
    Kind kind = Kind::end;
    std::string text;
    long long value = 0;
    int line = 0;
    int col = 0;
};

std::vector<Token> lex_line(const std::string& line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({Token::Kind::ident, line.substr(i, j - i), 0, line_no, col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) {
                int digit = line[j] - '0';
                if (v > (std::numeric_limits<long long>::max() - digit) / 10)
                    throw ParseError(line_no, col, "integer literal too large");
                v = v * 10 + digit;
                ++j;
            }
            out.push_back({Token::Kind::integer, line.substr(i, j - i), v, line_no, col});
            i = j;
        } else if (std::string(":()^*+-/").find(c) != std::string::npos) {
            out.push_back({Token::Kind::punct, std::string(1, c), 0, line_no, col});
            ++i;
        } else {
            throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Kind::end, "", 0, line_no, static_cast<int>(line.size()) + 1});
    return out;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }

    bool accept_punct(const std::string& p) {
        if (peek().kind == Token::Kind::punct && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }

    Token expect_punct(const std::string& p, const std::string& what) {
        if (peek().kind != Token::Kind::punct || peek().text != p)
            throw ParseError(peek().line, peek().col,
                             "expected '" + p + "' " + what);
        return next();
    }

    Token expect_ident(const std::string& what) {
        if (peek().kind != Token::Kind::ident)
            throw ParseError(peek().line, peek().col, "expected " + what);
        return next();
    }

    Token expect_integer(const std::string& what) {
        if (peek().kind != Token::Kind::integer)
            throw ParseError(peek().line, peek().col, "expected " + what);
        return next();
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

RawTerm parse_term(TokenStream& ts, const std::map<std::string, int>& var_index,
                   int num_vars, long long sign) {
    RawTerm t;
    t.exps.assign(num_vars, 0);
    bool saw_factor = false;
    bool need_factor = true;

    if (ts.peek().kind == Token::Kind::integer) {
        t.num = ts.next().value;
        if (ts.accept_punct("/")) {
            Token d = ts.expect_integer("denominator");
            if (d.value == 0) throw ParseError(d.line, d.col, "zero denominator");
            t.den = d.value;
        }
        if (ts.accept_punct("*"))
            need_factor = true;
        else
            need_factor = false; // bare numeric term
    }
    while (need_factor) {
        Token v = ts.expect_ident("a variable");
        auto it = var_index.find(v.text);
        if (it == var_index.end())
            throw ParseError(v.line, v.col, "unknown variable '" + v.text + "'");
        int e = 1;
        if (ts.accept_punct("^")) {
            Token p = ts.expect_integer("an exponent");
            if (p.value > 1000)
                throw ParseError(p.line, p.col, "exponent too large");
            e = static_cast<int>(p.value);
        }
        t.exps[it->second] += e;
        saw_factor = true;
        need_factor = ts.accept_punct("*");
    }
    (void)saw_factor;
    t.num *= sign;
    return t;
}

RawPoly parse_poly(TokenStream& ts, const std::map<std::string, int>& var_index,
                   int num_vars, int line_no) {
    RawPoly poly;
    poly.line = line_no;
    long long sign = 1;
    if (ts.accept_punct("-"))
        sign = -1;
    else
        ts.accept_punct("+");
    poly.terms.push_back(parse_term(ts, var_index, num_vars, sign));
    while (!ts.at_end()) {
        if (ts.accept_punct("+"))
            sign = 1;
        else if (ts.accept_punct("-"))
            sign = -1;
        else
            throw ParseError(ts.peek().line, ts.peek().col,
                             "expected '+', '-', or end of line");
        poly.terms.push_back(parse_term(ts, var_index, num_vars, sign));
    }
    int degree = -1;
    for (const RawTerm& t : poly.terms) {
        int d = 0;
        for (int e : t.exps) d += e;
        if (degree < 0)
            degree = d;
        else if (d != degree)
            throw ParseError(line_no, 1, "generator is not homogeneous");
    }
    return poly;
}

FieldSpec parse_field(TokenStream& ts) {
    Token f = ts.expect_ident("a field (GF(p) or QQ)");
    if (f.text == "QQ") return FieldSpec::qq();
    if (f.text == "GF") {
        ts.expect_punct("(", "after GF");
        Token p = ts.expect_integer("a prime");
        ts.expect_punct(")", "after the prime");
        FieldSpec spec = FieldSpec::gf(p.value);
        if (!PrimeField::is_prime(p.value))
            throw ParseError(p.line, p.col, "field characteristic is not prime");
        return spec;
    }
    throw ParseError(f.line, f.col, "unknown field '" + f.text + "'");
}

OrderSpec parse_order(TokenStream& ts) {
    Token o = ts.expect_ident("a term order (grevlex or lex)");
    if (o.text == "grevlex") return OrderSpec::grevlex();
    if (o.text == "lex") return OrderSpec::lex();
    throw ParseError(o.line, o.col, "unknown term order '" + o.text + "'");
}

IdealFile parse_dsl(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    IdealFile file;
    std::map<std::string, int> var_index;
    bool have_ring = false;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        int line_no = static_cast<int>(k) + 1;
        TokenStream ts(lex_line(lines[k], line_no));
        if (ts.at_end()) continue;
        if (!have_ring) {
            Token kw = ts.expect_ident("the keyword 'ring'");
            if (kw.text != "ring")
                throw ParseError(kw.line, kw.col, "file must start with a ring line");
            while (ts.peek().kind == Token::Kind::ident) {
                Token v = ts.next();
                if (var_index.count(v.text))
                    throw ParseError(v.line, v.col,
                                     "duplicate variable '" + v.text + "'");
                var_index.emplace(v.text, static_cast<int>(file.var_names.size()));
                file.var_names.push_back(v.text);
            }
            if (file.var_names.empty())
                throw ParseError(ts.peek().line, ts.peek().col,
                                 "ring line declares no variables");
            ts.expect_punct(":", "after the variables");
            file.field = parse_field(ts);
            ts.expect_punct(":", "after the field");
            file.order = parse_order(ts);
            if (!ts.at_end())
                throw ParseError(ts.peek().line, ts.peek().col,
                                 "trailing input after the term order");
            have_ring = true;
        } else {
            file.generators.push_back(parse_poly(
                ts, var_index, static_cast<int>(file.var_names.size()), line_no));
        }
    }
    if (!have_ring) throw ParseError(1, 1, "empty input: expected a ring line");
    if (file.generators.empty())
        throw ParseError(static_cast<int>(lines.size()), 1, "no generators");
    return file;
}

IdealFile parse_json_ideal(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, 1, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("ring") || !doc.contains("generators"))
        throw ParseError(1, 1, "JSON ideal needs \"ring\" and \"generators\"");

    // reassemble an equivalent DSL document and reuse the text parser, so both
    // formats share one validation path
    std::ostringstream dsl;
    const auto& ring = doc["ring"];
    if (!ring.contains("vars") || !ring["vars"].is_array())
        throw ParseError(1, 1, "JSON ring needs a \"vars\" array");
    dsl << "ring";
    for (const auto& v : ring["vars"]) {
        if (!v.is_string()) throw ParseError(1, 1, "variable names must be strings");
        dsl << " " << v.get<std::string>();
    }
    dsl << " : " << ring.value("field", std::string("GF(32003)"));
    dsl << " : " << ring.value("order", std::string("grevlex")) << "\n";
    if (!doc["generators"].is_array() || doc["generators"].empty())
        throw ParseError(1, 1, "JSON \"generators\" must be a non-empty array");
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) throw ParseError(1, 1, "generators must be strings");
        dsl << g.get<std::string>() << "\n";
    }
    return parse_dsl(dsl.str());
}

} // namespace

IdealFile parse_ideal_file(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json_ideal(text);
        break;
    }
    return parse_dsl(text);
}

} // namespace lqb
