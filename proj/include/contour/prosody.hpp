#pragma once

#include "contour/category.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace contour {

// Pierrehumbert-style tones. Intermediate (L) and intonational (LL%)
// rheme boundaries share one category; only the $ boundaries differ by
// projecting to the utterance level.

enum class PitchAccent { Hstar, LplusHstar };
enum class BoundaryTone { L, LLpct, LHpct, LLdollar, LHdollar };
struct NullTone {};

using Tone = std::variant<PitchAccent, BoundaryTone, NullTone>;

// word@marker spellings, fixed for input files and generated output
std::string marker_for(PitchAccent a);
std::string marker_for(BoundaryTone b);
std::string label_for(PitchAccent a);   // display form, e.g. "L+H*"
std::string label_for(BoundaryTone b);  // display form, e.g. "LH%"

// A word's tonal annotation: at most one accent and one boundary.
struct ToneAnnotation {
    std::optional<PitchAccent> accent;
    std::optional<BoundaryTone> boundary;

    bool is_null() const { return !accent && !boundary; }
    std::string marker() const;  // empty when null
};

// Parses a concatenated marker such as "hstar", "lh" or "hstarllb".
ToneAnnotation parse_marker(const std::string& marker);

// Prosodic categories. Atoms are level:info pairs (p:theme, b:lh, ...)
// whose slots may be variables, written X:Y; `utterance` stands alone and
// unifies only with itself.

enum class PLevel { P, U, B };
enum class PInfo { Theme, Rheme, Lh, Ll };

struct PSlot {
    bool is_var;
    int var = 0;
    int value = 0;  // PLevel or PInfo as int

    static PSlot level(PLevel l) { return {false, 0, static_cast<int>(l)}; }
    static PSlot info(PInfo i) { return {false, 0, static_cast<int>(i)}; }
    static PSlot variable(int id) { return {true, id, 0}; }
};

class Pros;
using ProsPtr = std::shared_ptr<const Pros>;

class Pros {
public:
    enum class Form { Utterance, Atom, Functor };
    Form form;
    PSlot level{false, 0, 0};  // atom only
    PSlot info{false, 0, 0};   // atom only
    ProsPtr result;            // functor only
    SlashDir dir = SlashDir::Forward;
    ProsPtr arg;               // functor only

    static ProsPtr utterance();
    static ProsPtr atom(PSlot level, PSlot info);
    static ProsPtr atom(PLevel level, PInfo info);
    static ProsPtr var_atom();  // X:Y with fresh variables
    static ProsPtr slash(ProsPtr result, SlashDir dir, ProsPtr arg);
};

std::string to_string(const ProsPtr& p);

// The functorial tone categories: accents are functions from boundaries to
// phrases, boundaries consume the accent functor, the null tone is the
// identity X:Y/X:Y.
ProsPtr tone_category(const Tone& t);

// Prosodic counterpart of the syntactic rules; failure is a value.
std::optional<ProsPtr> pros_combine(const ProsPtr& a, const ProsPtr& b, RuleKind rule);

bool is_utterance(const ProsPtr& p);
// p:theme / p:rheme / u:theme / u:rheme atoms, i.e. complete phrases
bool is_phrase(const ProsPtr& p);
// pure null-tone functor X:Y/X:Y (same variable pair on both sides)
bool is_null_tone(const ProsPtr& p);

enum class InfoRole { Theme, Rheme };
// For a complete phrase, the information-structure role it carries.
std::optional<InfoRole> phrase_role(const ProsPtr& p);
// True for p-level phrases (promote to utterance/utterance), false for
// u-level (promote to utterance).
bool is_p_level_phrase(const ProsPtr& p);

}  // namespace contour
