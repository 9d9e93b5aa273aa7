#include "freecert/word_parser.hpp"

#include <cctype>
#include <sstream>

namespace freecert {

namespace {

struct Token {
    enum Kind { Name, Caret, Int, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;  // 1-based
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i + 1;
        if (c == '^') {
            tokens.push_back({Token::Caret, "^", pos});
            ++i;
        } else if (c == '(') {
            tokens.push_back({Token::LParen, "(", pos});
            ++i;
        } else if (c == ')') {
            tokens.push_back({Token::RParen, ")", pos});
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                ++i;
            tokens.push_back({Token::Name, text.substr(start, i - start), pos});
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            if (c == '-') ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("stray '-'", pos);
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back({Token::Int, text.substr(start, i - start), pos});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }
    tokens.push_back({Token::End, "", text.size() + 1});
    return tokens;
}

class Parser {
public:
    Parser(const std::vector<Token>& tokens, const WordEnv& env) : tokens_(tokens), env_(env) {}

    FreeProductWord parse() {
        if (peek().kind == Token::End) throw ParseError("empty word expression", 1);
        FreeProductWord word = parse_expr();
        if (peek().kind != Token::End)
            throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return word;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& take() { return tokens_[at_++]; }

    FreeProductWord parse_expr() {
        FreeProductWord word;
        bool any = false;
        while (peek().kind == Token::Name || peek().kind == Token::LParen) {
            word = word.concat(parse_factor());
            any = true;
        }
        if (!any) throw ParseError("expected a word here", peek().pos);
        return word;
    }

    FreeProductWord parse_factor() {
        FreeProductWord atom = parse_atom();
        if (peek().kind == Token::Caret) {
            const Token& caret = take();
            if (peek().kind != Token::Int)
                throw ParseError("expected an integer exponent after '^'", caret.pos + 1);
            long power = std::stol(take().text);
            return pow(atom, power);
        }
        return atom;
    }

    FreeProductWord parse_atom() {
        if (peek().kind == Token::LParen) {
            const Token& open = take();
            if (peek().kind == Token::End) throw ParseError("unclosed '('", open.pos);
            FreeProductWord inner = parse_expr();
            if (peek().kind != Token::RParen)
                throw ParseError("unclosed '('", open.pos);
            take();
            return inner;
        }
        const Token& name = take();
        if (name.kind != Token::Name)
            throw ParseError("expected a name or '(' but found '" + name.text + "'", name.pos);
        if (name.text.size() >= 2 && name.text[0] == 'x' &&
            std::isdigit(static_cast<unsigned char>(name.text[1]))) {
            for (std::size_t i = 1; i < name.text.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name.text[i])))
                    throw ParseError("bad variable name '" + name.text + "'", name.pos);
            int index = std::stoi(name.text.substr(1));
            if (index < 1) throw ParseError("variable index must be >= 1", name.pos);
            return FreeProductWord::reduce({Letter{index, 1}});
        }
        auto it = env_.constants.find(name.text);
        if (it == env_.constants.end())
            throw ParseError("unknown constant '" + name.text + "'", name.pos);
        return FreeProductWord::reduce({it->second});
    }

    static FreeProductWord pow(const FreeProductWord& base, long power) {
        FreeProductWord acc;
        FreeProductWord factor = power < 0 ? base.inverse() : base;
        long reps = power < 0 ? -power : power;
        for (long i = 0; i < reps; ++i) acc = acc.concat(factor);
        return acc;
    }

    const std::vector<Token>& tokens_;
    const WordEnv& env_;
    std::size_t at_ = 0;
};

}  // namespace

FreeProductWord parse_word(const std::string& text, const WordEnv& env) {
    return Parser(tokenize(text), env).parse();
}

std::string format_word(const FreeProductWord& word, const WordEnv& env) {
    if (word.is_empty()) return "1";
    std::ostringstream os;
    std::vector<MatQ> anonymous;
    bool first = true;
    for (const auto& part : word.parts()) {
        if (!first) os << " ";
        first = false;
        if (std::holds_alternative<Letter>(part)) {
            const Letter& l = std::get<Letter>(part);
            os << "x" << l.index;
            if (l.sign < 0) os << "^-1";
            continue;
        }
        const Element& g = std::get<Element>(part);
        bool named = false;
        for (const auto& [name, value] : env.constants) {
            if (value.matrix == g.matrix) {
                os << name;
                named = true;
                break;
            }
            Element inv = inverse_element(value);
            if (inv.matrix == g.matrix) {
                os << name << "^-1";
                named = true;
                break;
            }
        }
        if (!named) {
            std::size_t id = 0;
            for (; id < anonymous.size(); ++id)
                if (anonymous[id] == g.matrix) break;
            if (id == anonymous.size()) anonymous.push_back(g.matrix);
            os << "#" << id;
        }
    }
    return os.str();
}

}  // namespace freecert
