#pragma once

#include "contour/category.hpp"
#include "contour/prosody.hpp"

#include <optional>
#include <string>
#include <vector>

namespace contour {

// A recorded theme or rheme: the syntactic category frozen at the moment
// its phrase was promoted, plus the token span it covers.
struct RecordEntry {
    InfoRole role;
    CatPtr cat;
    std::size_t begin = 0;
    std::size_t end = 0;
};

// The unit the grammar combines: a token span paired with a syntactic and
// a prosodic category, carrying the theme/rheme record accumulated so far.
struct Sign {
    std::size_t begin = 0;
    std::size_t end = 0;
    CatPtr syn;
    ProsPtr pros;
    std::vector<RecordEntry> record;
    std::string deriv;  // bracketed derivation, for traces
};

// Prosodic Constituent Condition: a syntactic combination is licensed only
// if the prosodic categories combine by some prosodic rule as well. Each
// result pairs one syntactic rule's output with one prosodic rule's output
// (the two rules need not be the same one).
std::vector<Sign> combine_signs(const Sign& a, const Sign& b);

// Phrase promotion: p:X becomes utterance/utterance, u:X becomes utterance,
// and a copy of the syntactic category is recorded as theme or rheme.
Sign promote_phrase(const Sign& s);
std::optional<Sign> try_promote_phrase(const Sign& s);

// Null Theme Promotion: a pure null-tone sign may be read as an unmarked
// p:theme. The caller keeps the original sign; the rule is optional.
Sign promote_null_theme(const Sign& s);
std::optional<Sign> try_promote_null_theme(const Sign& s);

// Stable textual key used for chart deduplication and memoization.
std::string sign_key(const Sign& s);

}  // namespace contour
