#include "satrees/workspace.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <sstream>

namespace satrees {

namespace {

struct Token {
    enum Kind { ident, number, symbol, end } kind;
    std::string text;
    int col; // 1-based
};

class LineLexer {
  public:
    LineLexer(const std::string& line, int lineno) : line_(line), lineno_(lineno) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg, int col) const {
        fail(ErrKind::parse,
             "line " + std::to_string(lineno_) + ", col " + std::to_string(col) + ": " + msg);
    }
    [[noreturn]] void error_here(const std::string& msg) const { error(msg, cur_.col); }

    Token expect_ident(const std::string& what) {
        if (cur_.kind != Token::ident) error_here("expected " + what);
        return take();
    }
    void expect_symbol(char c) {
        if (cur_.kind != Token::symbol || cur_.text[0] != c)
            error_here(std::string("expected '") + c + "'");
        take();
    }
    bool at_symbol(char c) const { return cur_.kind == Token::symbol && cur_.text[0] == c; }
    bool at_end() const { return cur_.kind == Token::end; }

  private:
    void advance() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
        if (pos_ >= line_.size() || line_[pos_] == '#') {
            cur_ = {Token::end, "", static_cast<int>(pos_) + 1};
            return;
        }
        size_t start = pos_;
        char c = line_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
                ++pos_;
            cur_ = {Token::ident, line_.substr(start, pos_ - start), static_cast<int>(start) + 1};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            cur_ = {Token::number, line_.substr(start, pos_ - start), static_cast<int>(start) + 1};
        } else {
            ++pos_;
            cur_ = {Token::symbol, std::string(1, c), static_cast<int>(start) + 1};
        }
    }

    const std::string& line_;
    int lineno_;
    size_t pos_ = 0;
    Token cur_;
};

class Parser {
  public:
    Workspace run(std::istream& in) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            LineLexer lex(line, lineno);
            if (lex.at_end()) continue;
            Token head = lex.expect_ident("a declaration keyword");
            if (head.text == "ring")
                parse_ring(lex);
            else if (head.text == "ideal")
                parse_ideal(lex);
            else if (head.text == "poly")
                parse_poly(lex);
            else if (head.text == "family")
                parse_family(lex);
            else
                lex.error("unknown declaration '" + head.text + "'", head.col);
            if (!lex.at_end()) lex.error_here("trailing input");
        }
        if (!has_ring_)
            fail(ErrKind::parse, "line " + std::to_string(lineno + 1) +
                                     ", col 1: workspace needs a ring declaration");
        return std::move(ws_);
    }

  private:
    void require_ring(LineLexer& lex, const Token& at) {
        if (!has_ring_) lex.error("the ring must be declared first", at.col);
    }

    void declare_name(LineLexer& lex, const Token& name) {
        if (ws_.ring.var_index(name.text) || ws_.ideals.count(name.text) ||
            ws_.polys.count(name.text) || ws_.families.count(name.text))
            lex.error("duplicate name '" + name.text + "'", name.col);
    }

    void parse_ring(LineLexer& lex) {
        if (has_ring_) lex.error_here("ring declared twice");
        std::vector<std::string> names;
        while (!lex.at_end()) {
            Token t = lex.expect_ident("a variable name");
            for (const std::string& seen : names)
                if (seen == t.text) lex.error("duplicate variable '" + t.text + "'", t.col);
            names.push_back(t.text);
        }
        if (names.empty()) fail(ErrKind::parse, "ring needs at least one variable");
        ws_.ring = RingCtx(std::move(names));
        has_ring_ = true;
    }

    Exponent parse_term(LineLexer& lex) {
        if (lex.peek().kind == Token::number)
            lex.error_here("coefficients are not allowed in ideal generators");
        Exponent e(ws_.ring.dim(), 0);
        while (true) {
            Token var = lex.expect_ident("a variable");
            auto idx = ws_.ring.var_index(var.text);
            if (!idx) lex.error("unknown variable '" + var.text + "'", var.col);
            Expo power = 1;
            if (lex.at_symbol('^')) {
                lex.take();
                if (lex.peek().kind != Token::number) lex.error_here("expected an exponent");
                Token num = lex.take();
                try {
                    unsigned long long wide = std::stoull(num.text);
                    if (wide > std::numeric_limits<Expo>::max()) throw std::out_of_range(num.text);
                    power = static_cast<Expo>(wide);
                } catch (const std::exception&) {
                    lex.error("exponent out of range", num.col);
                }
            }
            e[static_cast<size_t>(*idx)] = checked_add(e[static_cast<size_t>(*idx)], power);
            if (lex.at_symbol('*'))
                lex.take();
            else
                break;
        }
        return e;
    }

    void parse_ideal(LineLexer& lex) {
        Token name = lex.expect_ident("an ideal name");
        require_ring(lex, name);
        declare_name(lex, name);
        lex.expect_symbol('=');
        std::vector<Exponent> gens;
        while (true) {
            gens.push_back(parse_term(lex));
            if (lex.at_symbol('+') || lex.at_symbol('-'))
                lex.error_here("sums are not allowed in ideal generators (use poly)");
            if (lex.at_symbol(','))
                lex.take();
            else
                break;
        }
        ws_.ideals.emplace(name.text, minimalize(ws_.ring, std::move(gens)));
    }

    Rational parse_coefficient(LineLexer& lex) {
        Token num = lex.take();
        BigInt p(num.text);
        if (lex.at_symbol('/')) {
            lex.take();
            if (lex.peek().kind != Token::number) lex.error_here("expected a denominator");
            BigInt q(lex.take().text);
            if (q == 0) lex.error_here("zero denominator");
            return Rational(p, q);
        }
        return Rational(p);
    }

    void parse_poly(LineLexer& lex) {
        Token name = lex.expect_ident("a polynomial name");
        require_ring(lex, name);
        declare_name(lex, name);
        lex.expect_symbol('=');
        SparsePoly f = poly_zero(ws_.ring);
        bool negative = false;
        if (lex.at_symbol('-')) {
            lex.take();
            negative = true;
        }
        while (true) {
            Rational coeff = 1;
            bool has_coeff = false;
            if (lex.peek().kind == Token::number) {
                coeff = parse_coefficient(lex);
                has_coeff = true;
                if (lex.at_symbol('*')) lex.take();
            }
            Exponent e(ws_.ring.dim(), 0);
            if (lex.peek().kind == Token::ident)
                e = parse_term(lex);
            else if (!has_coeff)
                lex.error_here("expected a term");
            if (negative) coeff = -coeff;
            f = add(f, poly_monomial(ws_.ring, std::move(e), std::move(coeff)));
            if (lex.at_symbol('+') || lex.at_symbol('-')) {
                negative = lex.take().text == "-";
            } else {
                break;
            }
        }
        if (f.is_zero()) lex.error_here("zero polynomial");
        ws_.polys.emplace(name.text, std::move(f));
    }

    void parse_family(LineLexer& lex) {
        Token name = lex.expect_ident("a family name");
        require_ring(lex, name);
        declare_name(lex, name);
        lex.expect_symbol('=');
        lex.expect_symbol('[');
        std::vector<MonomialIdeal> members;
        while (true) {
            Token ideal_name = lex.expect_ident("an ideal name");
            auto it = ws_.ideals.find(ideal_name.text);
            if (it == ws_.ideals.end())
                lex.error("unknown ideal '" + ideal_name.text + "'", ideal_name.col);
            members.push_back(it->second);
            if (lex.at_symbol(','))
                lex.take();
            else
                break;
        }
        lex.expect_symbol(']');
        Token sat = lex.expect_ident("'sat'");
        if (sat.text != "sat") lex.error("expected 'sat'", sat.col);
        std::vector<SparsePoly> j_gens;
        Token first = lex.expect_ident("'m' or polynomial names");
        if (first.text == "m" && !ws_.polys.count("m")) {
            j_gens = maximal_ideal_gens(ws_.ring);
            if (!lex.at_end()) lex.error_here("trailing input after 'sat m'");
        } else {
            Token cur = first;
            while (true) {
                auto it = ws_.polys.find(cur.text);
                if (it == ws_.polys.end())
                    lex.error("unknown polynomial '" + cur.text + "'", cur.col);
                j_gens.push_back(it->second);
                if (lex.at_end()) break;
                cur = lex.expect_ident("a polynomial name");
            }
        }
        ws_.families.emplace(name.text, make_family(std::move(members), std::move(j_gens)));
    }

    Workspace ws_;
    bool has_ring_ = false;
};

} // namespace

Workspace parse_workspace(std::istream& in) {
    Parser p;
    return p.run(in);
}

Workspace parse_workspace_text(const std::string& text) {
    std::istringstream in(text);
    return parse_workspace(in);
}

std::string print_workspace(const Workspace& ws) {
    std::ostringstream out;
    out << "ring";
    for (const std::string& v : ws.ring.vars) out << " " << v;
    out << "\n";
    for (const auto& [name, ideal] : ws.ideals) out << "ideal " << name << " = "
                                                    << to_string(ideal) << "\n";
    for (const auto& [name, f] : ws.polys) out << "poly " << name << " = " << to_string(f) << "\n";
    for (const auto& [name, family] : ws.families) {
        out << "family " << name << " = [";
        bool first = true;
        for (const MonomialIdeal& member : family.ideals) {
            // resolve the member back to its name (families only reference
            // declared ideals)
            for (const auto& [iname, ideal] : ws.ideals) {
                if (ideal == member) {
                    out << (first ? "" : ", ") << iname;
                    first = false;
                    break;
                }
            }
        }
        out << "] sat";
        if (j_is_maximal(family) && !ws.polys.count("m")) {
            out << " m";
        } else {
            for (const SparsePoly& f : family.j_gens) {
                for (const auto& [pname, poly] : ws.polys) {
                    if (poly == f) {
                        out << " " << pname;
                        break;
                    }
                }
            }
        }
        out << "\n";
    }
    return out.str();
}

} // namespace satrees
