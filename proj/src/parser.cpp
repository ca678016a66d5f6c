#include "contour/parser.hpp"

#include "contour/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace contour {

std::vector<AnnotatedToken> read_annotated_line(const std::string& line) {
    std::vector<AnnotatedToken> tokens;
    std::istringstream in(line);
    std::string raw;
    while (in >> raw) {
        // strip sentence punctuation from the edges
        auto is_punct = [](char c) { return c == '?' || c == ',' || c == '.'; };
        while (!raw.empty() && is_punct(raw.back())) raw.pop_back();
        std::size_t start = 0;
        while (start < raw.size() && is_punct(raw[start])) ++start;
        raw = raw.substr(start);
        if (raw.empty()) continue;
        AnnotatedToken tok;
        auto at = raw.find('@');
        if (at == std::string::npos) {
            tok.word = raw;
        } else {
            tok.word = raw.substr(0, at);
            tok.tone = parse_marker(raw.substr(at + 1));
        }
        if (tok.word.empty()) throw SyntaxError("empty word in token: " + raw);
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

std::string format_annotated_line(const std::vector<AnnotatedToken>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t.word;
        std::string marker = t.tone.marker();
        if (!marker.empty()) out += "@" + marker;
    }
    return out;
}

std::string to_string(const InfoStructure& info) {
    std::ostringstream out;
    out << "Proposition: s:" << to_string(info.proposition) << '\n';
    out << "Theme: " << (info.theme ? to_string(*info.theme) : "(none)") << '\n';
    out << "Rheme: " << (info.rheme ? to_string(*info.rheme) : "(none)") << '\n';
    return out.str();
}

namespace {

// Builds an InfoStructure from a complete sign. Returns nullopt for
// analyses outside scope (multiple themes or rhemes).
std::optional<Analysis> build_analysis(const Sign& sign,
                                       const std::vector<AnnotatedToken>& tokens) {
    std::size_t themes = 0, rhemes = 0;
    const RecordEntry* theme = nullptr;
    const RecordEntry* rheme = nullptr;
    for (const auto& e : sign.record) {
        if (e.role == InfoRole::Theme) {
            ++themes;
            theme = &e;
        } else {
            ++rhemes;
            rheme = &e;
        }
    }
    if (themes > 1 || rhemes > 1) return std::nullopt;

    Analysis a;
    a.info.proposition = beta_normalize(sign.syn->sem);
    if (rheme) {
        a.info.rheme = rheme->cat;
        a.rheme_begin = rheme->begin;
        a.rheme_end = rheme->end;
    }
    if (theme) {
        a.theme_begin = theme->begin;
        a.theme_end = theme->end;
        if (a.info.proposition->kind == TermKind::Lam && rheme) {
            // A wh-question's theme is the function from the rheme to the
            // proposition; the recorded category is generic because the
            // promotion happened before the final reduction instantiated it.
            a.info.theme = Cat::forward(
                Cat::atom(AtomKind::S, a.info.proposition), rheme->cat);
        } else {
            a.info.theme = theme->cat;
        }
        for (std::size_t i = theme->begin; i < theme->end && i < tokens.size(); ++i) {
            if (tokens[i].tone.accent) a.marked_theme = true;
        }
    }
    a.deriv = sign.deriv;
    return a;
}

std::string analysis_key(const Analysis& a) {
    std::ostringstream out;
    out << to_string(a.info) << '|' << a.theme_begin << ':' << a.theme_end << '|'
        << a.rheme_begin << ':' << a.rheme_end;
    return out.str();
}

class ShiftReduceParser {
public:
    ShiftReduceParser(const std::vector<AnnotatedToken>& tokens, const Lexicon& lexicon)
        : tokens_(tokens), lexicon_(lexicon) {
        for (const auto& t : tokens) {
            if (t.tone.accent == PitchAccent::LplusHstar) theme_accent_present_ = true;
        }
        // resolve lexical signs for every token up front so unknown words
        // surface before search begins
        lexical_.resize(tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            lexical_[i] = lexical_sign(tokens_[i].word, tokens_[i].tone, lexicon_, i);
        }
    }

    std::vector<Analysis> run() {
        explore({}, 0);
        std::sort(found_.begin(), found_.end(),
                  [](const Analysis& a, const Analysis& b) {
                      return analysis_key(a) < analysis_key(b);
                  });
        if (found_.empty()) throw NoParse(longest_consumed_);
        return found_;
    }

private:
    const std::vector<AnnotatedToken>& tokens_;
    const Lexicon& lexicon_;
    std::vector<std::vector<Sign>> lexical_;
    bool theme_accent_present_ = false;
    std::vector<Analysis> found_;
    std::set<std::string> found_keys_;
    std::set<std::string> visited_;
    std::size_t longest_consumed_ = 0;

    std::string state_key(const std::vector<Sign>& stack, std::size_t pos) {
        std::ostringstream out;
        out << pos;
        for (const auto& s : stack) out << '#' << sign_key(s);
        return out.str();
    }

    void explore(std::vector<Sign> stack, std::size_t pos) {
        longest_consumed_ = std::max(longest_consumed_, pos);
        if (!visited_.insert(state_key(stack, pos)).second) return;

        // accept
        if (pos == tokens_.size() && stack.size() == 1) {
            const Sign& s = stack.front();
            if (is_utterance(s.pros) && s.syn->is_atom && s.syn->kind == AtomKind::S) {
                auto analysis = build_analysis(s, tokens_);
                if (analysis && found_keys_.insert(analysis_key(*analysis)).second) {
                    found_.push_back(*analysis);
                }
            }
        }

        // promote the topmost sign (unary rules, each kept optional)
        if (!stack.empty()) {
            const Sign& top = stack.back();
            if (auto promoted = try_promote_phrase(top)) {
                std::vector<Sign> next = stack;
                next.back() = *promoted;
                explore(std::move(next), pos);
            }
            if (!theme_accent_present_) {
                // unmarked themes only arise when no marked theme could
                if (auto null_theme = try_promote_null_theme(top)) {
                    std::vector<Sign> next = stack;
                    next.back() = *null_theme;
                    explore(std::move(next), pos);
                }
            }
        }

        // reduce the two topmost signs
        if (stack.size() >= 2) {
            const Sign& left = stack[stack.size() - 2];
            const Sign& right = stack.back();
            for (const auto& combined : combine_signs(left, right)) {
                std::vector<Sign> next(stack.begin(), stack.end() - 2);
                next.push_back(combined);
                explore(std::move(next), pos);
            }
        }

        // shift the next token
        if (pos < tokens_.size()) {
            for (const auto& lex : lexical_[pos]) {
                std::vector<Sign> next = stack;
                next.push_back(lex);
                explore(std::move(next), pos + 1);
            }
        }
    }
};

}  // namespace

std::vector<Analysis> parse_all(const std::vector<AnnotatedToken>& tokens,
                                const Lexicon& lexicon) {
    if (tokens.empty()) throw NoParse(0);
    ShiftReduceParser parser(tokens, lexicon);
    return parser.run();
}

const Analysis& select_analysis(const std::vector<Analysis>& analyses) {
    if (analyses.empty()) throw Error("select_analysis: empty analysis list");
    const Analysis* best = &analyses.front();
    auto better = [](const Analysis& a, const Analysis& b) {
        if (a.marked_theme != b.marked_theme) return a.marked_theme;
        std::size_t alen = a.theme_end - a.theme_begin;
        std::size_t blen = b.theme_end - b.theme_begin;
        if (alen != blen) return alen > blen;  // longest unmarked constituent
        if (a.theme_begin != b.theme_begin) return a.theme_begin < b.theme_begin;
        return analysis_key(a) < analysis_key(b);
    };
    for (const auto& a : analyses) {
        if (better(a, *best)) best = &a;
    }
    return *best;
}

OpenProposition question_form(const InfoStructure& info) {
    const TermPtr& p = info.proposition;
    if (!p || p->kind != TermKind::Lam) throw NotAWhQuestion();
    const TermPtr& body = p->left;
    if (body->kind != TermKind::Conj) throw NotAWhQuestion();
    OpenProposition open;
    open.var = p->var;
    open.restrictor = body->left;
    open.matrix = body->right;
    return open;
}

}  // namespace contour
