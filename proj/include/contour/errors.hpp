#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contour {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NormalizationDepthExceeded : Error {
    NormalizationDepthExceeded() : Error("beta reduction exceeded depth limit") {}
};

struct OccursCheck : Error {
    OccursCheck() : Error("occurs check: variable would bind to a term containing itself") {}
};

struct RuleInapplicable : Error {
    explicit RuleInapplicable(const std::string& detail)
        : Error("rule inapplicable: " + detail) {}
};

struct NotAPhrase : Error {
    NotAPhrase() : Error("prosodic category is not a complete p- or u-phrase") {}
};

struct NotNullTone : Error {
    NotNullTone() : Error("prosodic category is not a pure null-tone functor") {}
};

struct UnknownWord : Error {
    explicit UnknownWord(const std::string& word) : Error("unknown word: " + word), word(word) {}
    std::string word;
};

struct NoParse : Error {
    explicit NoParse(std::size_t consumed)
        : Error("no parse (longest consumed prefix ends at token " +
                std::to_string(consumed) + ")"),
          consumed(consumed) {}
    std::size_t consumed;
};

struct NotAWhQuestion : Error {
    NotAWhQuestion() : Error("proposition is not a wh-question lambda form") {}
};

struct UnknownRelation : Error {
    explicit UnknownRelation(const std::string& rel)
        : Error("unknown relation: " + rel), relation(rel) {}
    std::string relation;
};

struct NoAnswer : Error {
    explicit NoAnswer(const std::string& detail) : Error("no answer: " + detail) {}
};

struct Unrealizable : Error {
    explicit Unrealizable(const std::string& detail) : Error("unrealizable plan: " + detail) {}
};

struct NoFocusInRheme : Error {
    NoFocusInRheme() : Error("a rheme must carry at least one pitch accent") {}
};

struct LoadError : Error {
    explicit LoadError(const std::string& detail) : Error("load error: " + detail) {}
};

struct SyntaxError : Error {
    explicit SyntaxError(const std::string& detail) : Error("syntax error: " + detail) {}
};

}  // namespace contour
