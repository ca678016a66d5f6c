#include "contour/lexicon.hpp"

#include "contour/errors.hpp"
#include "contour/reader.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace contour {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// s:s/(s:s\np:SEM) -- the type-raised subject built over a bare np entry
CatPtr raise_subject(const TermPtr& sem) {
    int s = fresh_var();
    TermPtr sv = Term::variable(s);
    CatPtr satom = Cat::atom(AtomKind::S, sv);
    CatPtr np = Cat::atom(AtomKind::NP, sem);
    return Cat::forward(satom, Cat::backward(satom, np));
}

}  // namespace

Lexicon Lexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open lexicon file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_string(buffer.str());
}

Lexicon Lexicon::from_string(const std::string& text) {
    Lexicon lex;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        try {
            if (first == "alias") {
                std::string token, word;
                if (!(ls >> token >> word)) throw SyntaxError("alias needs TOKEN WORD");
                lex.add_alias(token, word);
                continue;
            }
            if (first == "dettype") {
                std::string type, word;
                if (!(ls >> type >> word)) throw SyntaxError("dettype needs TYPE WORD");
                lex.add_dettype(type, word);
                continue;
            }
            std::string assign;
            if (!(ls >> assign) || assign != ":=") {
                throw SyntaxError("expected ':=' after word");
            }
            std::string rest;
            std::getline(ls, rest);
            // flags trail the category expression
            std::vector<std::string> flags;
            std::istringstream tail(rest);
            std::vector<std::string> toks;
            std::string tok;
            while (tail >> tok) toks.push_back(tok);
            while (!toks.empty() &&
                   (toks.back() == "gen" || toks.back() == "name" || toks.back() == "det")) {
                flags.push_back(toks.back());
                toks.pop_back();
            }
            std::string cat_text;
            for (const auto& t : toks) {
                if (!cat_text.empty()) cat_text += ' ';
                cat_text += t;
            }
            CatPtr cat = parse_category(cat_text);
            bool gen = std::find(flags.begin(), flags.end(), "gen") != flags.end();
            bool name = std::find(flags.begin(), flags.end(), "name") != flags.end();
            bool det = std::find(flags.begin(), flags.end(), "det") != flags.end();
            lex.add_entry(first, cat, gen);
            if (name) {
                if (!cat->is_atom || cat->kind != AtomKind::NP) {
                    throw SyntaxError("'name' flag requires a bare np category");
                }
                lex.add_entry(first, raise_subject(cat->sem), gen);
            }
            if (det) {
                // np:D/n:D entries also get the raised form (s:s/(s:s\np:D))/n:D
                if (cat->is_atom || !cat->arg->is_atom || cat->arg->kind != AtomKind::N) {
                    throw SyntaxError("'det' flag requires an np:D/n:D category");
                }
                CatPtr narg = cat->arg;
                lex.add_entry(first, Cat::forward(raise_subject(narg->sem), narg), gen);
            }
        } catch (const Error& e) {
            throw LoadError("lexicon line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return lex;
}

const std::vector<LexEntry>& Lexicon::entries(const std::string& word) const {
    static const std::vector<LexEntry> empty;
    auto it = entries_.find(word);
    return it == entries_.end() ? empty : it->second;
}

bool Lexicon::has_word(const std::string& word) const {
    return entries_.find(word) != entries_.end();
}

std::string Lexicon::resolve_token(const std::string& token) const {
    if (has_word(token)) return token;
    auto it = aliases_.find(token);
    if (it != aliases_.end()) return it->second;
    std::string lower = to_lower(token);
    if (has_word(lower)) return lower;
    auto it2 = aliases_.find(lower);
    if (it2 != aliases_.end()) return it2->second;
    return token;
}

std::string Lexicon::determiner_for(const std::string& type) const {
    auto it = dets_.find(type);
    return it == dets_.end() ? std::string() : it->second;
}

std::vector<std::string> Lexicon::words() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [word, _] : entries_) out.push_back(word);
    return out;
}

void Lexicon::add_entry(const std::string& word, CatPtr cat, bool gen) {
    entries_[word].push_back(LexEntry{std::move(cat), gen});
}

void Lexicon::add_alias(const std::string& token, const std::string& word) {
    aliases_[token] = word;
}

void Lexicon::add_dettype(const std::string& type, const std::string& word) {
    dets_[type] = word;
}

std::vector<Sign> lexical_sign(const std::string& word, const ToneAnnotation& tone,
                               const Lexicon& lexicon, std::size_t position) {
    std::string base = lexicon.resolve_token(word);
    if (!lexicon.has_word(base)) throw UnknownWord(word);

    // accent and boundary on the same word combine right at lookup
    std::optional<ProsPtr> pros;
    if (tone.accent && tone.boundary) {
        ProsPtr acc = tone_category(Tone{*tone.accent});
        ProsPtr bnd = tone_category(Tone{*tone.boundary});
        pros = pros_combine(acc, bnd, RuleKind::BackwardApply);
        if (!pros) return {};  // clashing tune, e.g. L+H* with LL$
    } else if (tone.accent) {
        pros = tone_category(Tone{*tone.accent});
    } else if (tone.boundary) {
        pros = tone_category(Tone{*tone.boundary});
    } else {
        pros = tone_category(Tone{NullTone{}});
    }

    std::vector<Sign> out;
    for (const auto& entry : lexicon.entries(base)) {
        Sign s;
        s.begin = position;
        s.end = position + 1;
        s.syn = instantiate_fresh(entry.cat);
        // focus marking happens at the level of the lexicon
        if (tone.accent) s.syn = focus_cat(s.syn);
        s.pros = tone.is_null() ? tone_category(Tone{NullTone{}}) : *pros;
        s.deriv = word;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace contour
