#pragma once

#include "contour/lexicon.hpp"
#include "contour/prosody.hpp"
#include "contour/sign.hpp"

#include <optional>
#include <string>
#include <vector>

namespace contour {

// One input token: a word plus its tonal annotation.
struct AnnotatedToken {
    std::string word;
    ToneAnnotation tone;
};

// Reads a whitespace-separated line of word[@marker] tokens, stripping the
// punctuation characters ? , . from word edges.
std::vector<AnnotatedToken> read_annotated_line(const std::string& line);
std::string format_annotated_line(const std::vector<AnnotatedToken>& tokens);

// The parsed information structure of an utterance. The theme may be
// absent (all-rheme utterances); for wh-questions the proposition is a
// lambda abstraction over the queried variable.
struct InfoStructure {
    TermPtr proposition;
    std::optional<CatPtr> theme;
    std::optional<CatPtr> rheme;
};

std::string to_string(const InfoStructure& info);

struct Analysis {
    InfoStructure info;
    std::size_t theme_begin = 0, theme_end = 0;  // empty span when no theme
    std::size_t rheme_begin = 0, rheme_end = 0;
    bool marked_theme = false;  // theme span contains a pitch accent
    std::string deriv;
};

// Exhaustive shift-reduce parse. Returns every analysis whose final stack
// is a single utterance-level s sign, in a deterministic order. Analyses
// with more than one theme or rheme are out of scope and dropped. Throws
// NoParse (with the longest consumed prefix) and UnknownWord.
std::vector<Analysis> parse_all(const std::vector<AnnotatedToken>& tokens,
                                const Lexicon& lexicon);

// Prefers marked themes, then the longest theme, then the leftmost, then a
// stable canonical order.
const Analysis& select_analysis(const std::vector<Analysis>& analyses);

// A wh-question split into its queried variable, restrictor and matrix.
struct OpenProposition {
    int var;
    TermPtr restrictor;
    TermPtr matrix;
};

// Splits a proposition of the form \x[restrictor & matrix]; throws
// NotAWhQuestion otherwise.
OpenProposition question_form(const InfoStructure& info);

}  // namespace contour
