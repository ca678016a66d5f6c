#pragma once

#include "contour/category.hpp"
#include "contour/prosody.hpp"
#include "contour/sign.hpp"

#include <map>
#include <string>
#include <vector>

namespace contour {

// One lexical category for a word. `gen` marks entries the realizer may
// use; parse-only forms (bare verb stems, inverted auxiliaries, wh-words)
// leave it off.
struct LexEntry {
    CatPtr cat;
    bool gen = false;
};

class Lexicon {
public:
    // File format, one declaration per line ('#' starts a comment):
    //   word := CATEGORY [gen] [name] [det]
    //   alias TOKEN word
    //   dettype TYPE word
    // `name` additionally derives the type-raised subject entry for a bare
    // np; `det` derives the raised determiner category.
    static Lexicon load(const std::string& path);
    static Lexicon from_string(const std::string& text);

    const std::vector<LexEntry>& entries(const std::string& word) const;
    bool has_word(const std::string& word) const;

    // Resolves pronunciation-variant tokens (e.g. PNEUmothorax) and case
    // differences down to the lexicon's base word.
    std::string resolve_token(const std::string& token) const;

    // Determiner word used when realizing descriptions of entities of the
    // given type; empty when none applies.
    std::string determiner_for(const std::string& type) const;

    std::vector<std::string> words() const;

    void add_entry(const std::string& word, CatPtr cat, bool gen);
    void add_alias(const std::string& token, const std::string& word);
    void add_dettype(const std::string& type, const std::string& word);

private:
    std::map<std::string, std::vector<LexEntry>> entries_;
    std::map<std::string, std::string> aliases_;
    std::map<std::string, std::string> dets_;
};

// Builds the lexical signs for one annotated token: one sign per lexical
// category. A pitch accent focus-marks every constant the word contributes;
// the prosodic category comes from the tone (accent and boundary on the
// same word combine at lookup). Throws UnknownWord.
std::vector<Sign> lexical_sign(const std::string& word, const ToneAnnotation& tone,
                               const Lexicon& lexicon, std::size_t position = 0);

}  // namespace contour
