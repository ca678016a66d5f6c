#include "contour/reader.hpp"

#include "contour/errors.hpp"

#include <cctype>

namespace contour {

namespace {

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// A variable is a single letter optionally followed by digits: x, P, x2.
bool is_variable_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

class Reader {
public:
    Reader(const std::string& text, std::map<std::string, int>& scope)
        : text_(text), scope_(scope) {}

    TermPtr read_full_term() {
        TermPtr t = read_term();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after term");
        return t;
    }

    CatPtr read_full_category() {
        CatPtr c = read_category();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after category");
        return c;
    }

private:
    const std::string& text_;
    std::map<std::string, int>& scope_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw SyntaxError(msg + " at offset " + std::to_string(pos_) + " in \"" +
                          text_ + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        if (pos_ == start) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

    int var_id(const std::string& name) {
        auto it = scope_.find(name);
        if (it == scope_.end()) it = scope_.emplace(name, fresh_var()).first;
        return it->second;
    }

    // term := conj; conj := app ('&' app)*
    TermPtr read_term() {
        TermPtr t = read_app();
        while (peek() == '&') {
            expect('&');
            t = Term::conj(t, read_app());
        }
        return t;
    }

    TermPtr read_app() {
        TermPtr head = read_prim();
        if (peek() == '(') {
            expect('(');
            head = Term::app(head, read_term());
            while (eat(',')) head = Term::app(head, read_term());
            expect(')');
        }
        return head;
    }

    TermPtr read_prim() {
        char c = peek();
        if (c == '\\') {
            expect('\\');
            std::string binder = read_ident();
            if (!is_variable_name(binder)) fail("lambda binder must be a variable");
            expect('[');
            TermPtr body = read_term();
            expect(']');
            return Term::lam(var_id(binder), body);
        }
        if (c == '(') {
            expect('(');
            TermPtr t = read_term();
            expect(')');
            return t;
        }
        bool focused = eat('*');
        std::string name = read_ident();
        if (is_variable_name(name)) {
            if (focused) fail("focus star is only valid on constants");
            return Term::variable(var_id(name));
        }
        return Term::constant(name, focused);
    }

    // cat := part (('/'|'\') part)*  with explicit parens for nested functors
    CatPtr read_category() {
        CatPtr c = read_cat_part();
        for (;;) {
            char ch = peek();
            if (ch == '/' || ch == '\\') {
                // '\' starts a lambda only inside a term; here it is a slash
                ++pos_;
                SlashDir dir = ch == '/' ? SlashDir::Forward : SlashDir::Backward;
                c = Cat::slash(c, dir, read_cat_part());
            } else {
                break;
            }
        }
        return c;
    }

    CatPtr read_cat_part() {
        if (peek() == '(') {
            expect('(');
            CatPtr c = read_category();
            expect(')');
            return c;
        }
        std::string kind = read_ident();
        AtomKind k;
        if (kind == "s" || kind == "S") k = AtomKind::S;
        else if (kind == "np" || kind == "NP") k = AtomKind::NP;
        else if (kind == "n" || kind == "N") k = AtomKind::N;
        else fail("unknown atom kind '" + kind + "'");
        expect(':');
        return Cat::atom(k, read_term());
    }
};

}  // namespace

TermPtr parse_term(const std::string& text, std::map<std::string, int>& scope) {
    return Reader(text, scope).read_full_term();
}

CatPtr parse_category(const std::string& text, std::map<std::string, int>& scope) {
    return Reader(text, scope).read_full_category();
}

TermPtr parse_term(const std::string& text) {
    std::map<std::string, int> scope;
    return parse_term(text, scope);
}

CatPtr parse_category(const std::string& text) {
    std::map<std::string, int> scope;
    return parse_category(text, scope);
}

}  // namespace contour
