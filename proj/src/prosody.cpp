#include "contour/prosody.hpp"

#include "contour/errors.hpp"

#include <map>
#include <sstream>

namespace contour {

std::string marker_for(PitchAccent a) {
    switch (a) {
    case PitchAccent::Hstar: return "hstar";
    case PitchAccent::LplusHstar: return "lhstar";
    }
    return "?";
}

std::string marker_for(BoundaryTone b) {
    switch (b) {
    case BoundaryTone::L: return "l";
    case BoundaryTone::LLpct: return "ll";
    case BoundaryTone::LHpct: return "lh";
    case BoundaryTone::LLdollar: return "llb";
    case BoundaryTone::LHdollar: return "lhb";
    }
    return "?";
}

std::string label_for(PitchAccent a) {
    switch (a) {
    case PitchAccent::Hstar: return "H*";
    case PitchAccent::LplusHstar: return "L+H*";
    }
    return "?";
}

std::string label_for(BoundaryTone b) {
    switch (b) {
    case BoundaryTone::L: return "L";
    case BoundaryTone::LLpct: return "LL%";
    case BoundaryTone::LHpct: return "LH%";
    case BoundaryTone::LLdollar: return "LL$";
    case BoundaryTone::LHdollar: return "LH$";
    }
    return "?";
}

std::string ToneAnnotation::marker() const {
    std::string m;
    if (accent) m += marker_for(*accent);
    if (boundary) m += marker_for(*boundary);
    return m;
}

ToneAnnotation parse_marker(const std::string& marker) {
    static const std::map<std::string, BoundaryTone> boundaries = {
        {"l", BoundaryTone::L},
        {"ll", BoundaryTone::LLpct},
        {"lh", BoundaryTone::LHpct},
        {"llb", BoundaryTone::LLdollar},
        {"lhb", BoundaryTone::LHdollar},
    };
    ToneAnnotation ann;
    std::string rest = marker;
    // longest accent prefix first
    if (rest.rfind("lhstar", 0) == 0) {
        ann.accent = PitchAccent::LplusHstar;
        rest = rest.substr(6);
    } else if (rest.rfind("hstar", 0) == 0) {
        ann.accent = PitchAccent::Hstar;
        rest = rest.substr(5);
    }
    if (!rest.empty()) {
        auto it = boundaries.find(rest);
        if (it == boundaries.end()) throw SyntaxError("unknown tone marker: " + marker);
        ann.boundary = it->second;
    }
    if (!ann.accent && !ann.boundary) throw SyntaxError("empty tone marker");
    return ann;
}

ProsPtr Pros::utterance() {
    auto p = std::make_shared<Pros>();
    p->form = Form::Utterance;
    return p;
}

ProsPtr Pros::atom(PSlot level, PSlot info) {
    auto p = std::make_shared<Pros>();
    p->form = Form::Atom;
    p->level = level;
    p->info = info;
    return p;
}

ProsPtr Pros::atom(PLevel level, PInfo info) {
    return atom(PSlot::level(level), PSlot::info(info));
}

ProsPtr Pros::var_atom() {
    return atom(PSlot::variable(fresh_var()), PSlot::variable(fresh_var()));
}

ProsPtr Pros::slash(ProsPtr result, SlashDir dir, ProsPtr arg) {
    auto p = std::make_shared<Pros>();
    p->form = Form::Functor;
    p->result = std::move(result);
    p->dir = dir;
    p->arg = std::move(arg);
    return p;
}

namespace {

const char* level_name(int v) {
    switch (static_cast<PLevel>(v)) {
    case PLevel::P: return "p";
    case PLevel::U: return "u";
    case PLevel::B: return "b";
    }
    return "?";
}

const char* info_name(int v) {
    switch (static_cast<PInfo>(v)) {
    case PInfo::Theme: return "theme";
    case PInfo::Rheme: return "rheme";
    case PInfo::Lh: return "lh";
    case PInfo::Ll: return "ll";
    }
    return "?";
}

// Prosodic variable names: X, Y, Z, ... in occurrence order.
class PVarNamer {
public:
    std::string name_for(int var) {
        auto it = names_.find(var);
        if (it != names_.end()) return it->second;
        static const char* pool[] = {"X", "Y", "Z", "W", "V", "U"};
        constexpr std::size_t n = sizeof(pool) / sizeof(pool[0]);
        std::size_t k = names_.size();
        std::string name = k < n ? pool[k] : "X" + std::to_string(k - n + 1);
        names_[var] = name;
        return name;
    }

private:
    std::map<int, std::string> names_;
};

// Substitution over prosodic slots.
class PBinding {
public:
    PSlot walk(PSlot s) const {
        while (s.is_var) {
            auto it = map_.find(s.var);
            if (it == map_.end()) break;
            s = it->second;
        }
        return s;
    }

    void bind(int var, PSlot value) { map_[var] = walk(value); }

    ProsPtr apply(const ProsPtr& p) const {
        switch (p->form) {
        case Pros::Form::Utterance:
            return p;
        case Pros::Form::Atom:
            return Pros::atom(walk(p->level), walk(p->info));
        case Pros::Form::Functor:
            return Pros::slash(apply(p->result), p->dir, apply(p->arg));
        }
        return p;
    }

private:
    std::map<int, PSlot> map_;
};

bool unify_slot(const PSlot& a, const PSlot& b, PBinding& binding) {
    PSlot x = binding.walk(a);
    PSlot y = binding.walk(b);
    if (x.is_var) {
        if (y.is_var && y.var == x.var) return true;
        binding.bind(x.var, y);
        return true;
    }
    if (y.is_var) {
        binding.bind(y.var, x);
        return true;
    }
    return x.value == y.value;
}

bool unify_pros(const ProsPtr& a, const ProsPtr& b, PBinding& binding) {
    // `utterance` is an atom in its own right: it never unifies with an
    // X:Y form, only with another utterance.
    if (a->form == Pros::Form::Utterance || b->form == Pros::Form::Utterance) {
        return a->form == Pros::Form::Utterance && b->form == Pros::Form::Utterance;
    }
    if (a->form == Pros::Form::Atom && b->form == Pros::Form::Atom) {
        return unify_slot(a->level, b->level, binding) &&
               unify_slot(a->info, b->info, binding);
    }
    if (a->form == Pros::Form::Functor && b->form == Pros::Form::Functor) {
        if (a->dir != b->dir) return false;
        return unify_pros(a->result, b->result, binding) &&
               unify_pros(a->arg, b->arg, binding);
    }
    return false;  // atom vs functor
}

}  // namespace

std::string to_string(const ProsPtr& p) {
    // prosodic categories have their own variable namespace
    PVarNamer pnamer;
    std::ostringstream out;
    // local printer with prosodic names
    struct Printer {
        PVarNamer& namer;
        std::ostringstream& out;
        void print(const ProsPtr& p) {
            switch (p->form) {
            case Pros::Form::Utterance:
                out << "utterance";
                return;
            case Pros::Form::Atom:
                if (p->level.is_var) out << namer.name_for(p->level.var);
                else out << level_name(p->level.value);
                out << ':';
                if (p->info.is_var) out << namer.name_for(p->info.var);
                else out << info_name(p->info.value);
                return;
            case Pros::Form::Functor: {
                auto side = [&](const ProsPtr& s) {
                    if (s->form == Pros::Form::Functor) {
                        out << '(';
                        print(s);
                        out << ')';
                    } else {
                        print(s);
                    }
                };
                side(p->result);
                out << (p->dir == SlashDir::Forward ? '/' : '\\');
                side(p->arg);
                return;
            }
            }
        }
    } printer{pnamer, out};
    printer.print(p);
    return out.str();
}

ProsPtr tone_category(const Tone& t) {
    auto phrase = [](PLevel l, PInfo i) { return Pros::atom(l, i); };
    if (std::holds_alternative<PitchAccent>(t)) {
        switch (std::get<PitchAccent>(t)) {
        case PitchAccent::Hstar:
            return Pros::slash(phrase(PLevel::P, PInfo::Rheme), SlashDir::Forward,
                               phrase(PLevel::B, PInfo::Ll));
        case PitchAccent::LplusHstar:
            return Pros::slash(phrase(PLevel::P, PInfo::Theme), SlashDir::Forward,
                               phrase(PLevel::B, PInfo::Lh));
        }
    }
    if (std::holds_alternative<BoundaryTone>(t)) {
        auto raised = [&](PLevel result_level, PInfo info, PInfo btone) {
            ProsPtr accent = Pros::slash(phrase(PLevel::P, info), SlashDir::Forward,
                                         phrase(PLevel::B, btone));
            return Pros::slash(phrase(result_level, info), SlashDir::Backward, accent);
        };
        switch (std::get<BoundaryTone>(t)) {
        case BoundaryTone::L:
        case BoundaryTone::LLpct:
            return raised(PLevel::P, PInfo::Rheme, PInfo::Ll);
        case BoundaryTone::LLdollar:
            return raised(PLevel::U, PInfo::Rheme, PInfo::Ll);
        case BoundaryTone::LHpct:
            return raised(PLevel::P, PInfo::Theme, PInfo::Lh);
        case BoundaryTone::LHdollar:
            return raised(PLevel::U, PInfo::Theme, PInfo::Lh);
        }
    }
    // null tone: X:Y/X:Y with one shared fresh variable pair
    ProsPtr xy = Pros::var_atom();
    return Pros::slash(xy, SlashDir::Forward, xy);
}

std::optional<ProsPtr> pros_combine(const ProsPtr& a, const ProsPtr& b, RuleKind rule) {
    PBinding binding;
    switch (rule) {
    case RuleKind::ForwardApply: {
        if (a->form != Pros::Form::Functor || a->dir != SlashDir::Forward)
            return std::nullopt;
        if (!unify_pros(a->arg, b, binding)) return std::nullopt;
        return binding.apply(a->result);
    }
    case RuleKind::BackwardApply: {
        if (b->form != Pros::Form::Functor || b->dir != SlashDir::Backward)
            return std::nullopt;
        if (!unify_pros(b->arg, a, binding)) return std::nullopt;
        return binding.apply(b->result);
    }
    case RuleKind::ForwardCompose: {
        if (a->form != Pros::Form::Functor || a->dir != SlashDir::Forward)
            return std::nullopt;
        if (b->form != Pros::Form::Functor || b->dir != SlashDir::Forward)
            return std::nullopt;
        if (!unify_pros(a->arg, b->result, binding)) return std::nullopt;
        return Pros::slash(binding.apply(a->result), SlashDir::Forward,
                           binding.apply(b->arg));
    }
    }
    return std::nullopt;
}

bool is_utterance(const ProsPtr& p) { return p->form == Pros::Form::Utterance; }

bool is_phrase(const ProsPtr& p) {
    if (p->form != Pros::Form::Atom) return false;
    if (p->level.is_var || p->info.is_var) return false;
    PLevel l = static_cast<PLevel>(p->level.value);
    PInfo i = static_cast<PInfo>(p->info.value);
    return (l == PLevel::P || l == PLevel::U) &&
           (i == PInfo::Theme || i == PInfo::Rheme);
}

bool is_null_tone(const ProsPtr& p) {
    if (p->form != Pros::Form::Functor || p->dir != SlashDir::Forward) return false;
    const ProsPtr& r = p->result;
    const ProsPtr& a = p->arg;
    if (r->form != Pros::Form::Atom || a->form != Pros::Form::Atom) return false;
    return r->level.is_var && a->level.is_var && r->level.var == a->level.var &&
           r->info.is_var && a->info.is_var && r->info.var == a->info.var;
}

std::optional<InfoRole> phrase_role(const ProsPtr& p) {
    if (!is_phrase(p)) return std::nullopt;
    return static_cast<PInfo>(p->info.value) == PInfo::Theme ? InfoRole::Theme
                                                             : InfoRole::Rheme;
}

bool is_p_level_phrase(const ProsPtr& p) {
    return is_phrase(p) && static_cast<PLevel>(p->level.value) == PLevel::P;
}

}  // namespace contour
