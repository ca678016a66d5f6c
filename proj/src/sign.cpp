#include "contour/sign.hpp"

#include "contour/errors.hpp"

#include <sstream>

namespace contour {

std::vector<Sign> combine_signs(const Sign& a, const Sign& b) {
    static const RuleKind rules[] = {RuleKind::ForwardApply, RuleKind::BackwardApply,
                                     RuleKind::ForwardCompose};
    std::vector<Sign> out;
    for (RuleKind syn_rule : rules) {
        std::optional<CatPtr> syn;
        try {
            syn = try_combine(a.syn, b.syn, syn_rule);
        } catch (const OccursCheck&) {
            continue;
        }
        if (!syn) continue;
        for (RuleKind pros_rule : rules) {
            auto pros = pros_combine(a.pros, b.pros, pros_rule);
            if (!pros) continue;
            Sign s;
            s.begin = a.begin;
            s.end = b.end;
            s.syn = *syn;
            s.pros = *pros;
            s.record = a.record;
            s.record.insert(s.record.end(), b.record.begin(), b.record.end());
            s.deriv = "(" + rule_name(syn_rule) + "|" + rule_name(pros_rule) + " " +
                      a.deriv + " " + b.deriv + ")";
            out.push_back(std::move(s));
        }
    }
    // different rule pairs occasionally produce the same sign; keep one
    std::vector<Sign> unique;
    std::vector<std::string> keys;
    for (auto& s : out) {
        std::string key = sign_key(s);
        bool seen = false;
        for (const auto& k : keys) {
            if (k == key) { seen = true; break; }
        }
        if (!seen) {
            keys.push_back(std::move(key));
            unique.push_back(std::move(s));
        }
    }
    return unique;
}

std::optional<Sign> try_promote_phrase(const Sign& s) {
    auto role = phrase_role(s.pros);
    if (!role) return std::nullopt;
    Sign out = s;
    if (is_p_level_phrase(s.pros)) {
        out.pros = Pros::slash(Pros::utterance(), SlashDir::Forward, Pros::utterance());
        out.deriv = "(minor " + s.deriv + ")";
    } else {
        out.pros = Pros::utterance();
        out.deriv = "(major " + s.deriv + ")";
    }
    RecordEntry entry;
    entry.role = *role;
    entry.cat = s.syn;  // frozen copy: later unifications do not touch it
    entry.begin = s.begin;
    entry.end = s.end;
    out.record.push_back(std::move(entry));
    return out;
}

Sign promote_phrase(const Sign& s) {
    auto r = try_promote_phrase(s);
    if (!r) throw NotAPhrase();
    return *r;
}

std::optional<Sign> try_promote_null_theme(const Sign& s) {
    if (!is_null_tone(s.pros)) return std::nullopt;
    Sign out = s;
    out.pros = Pros::atom(PLevel::P, PInfo::Theme);
    out.deriv = "(nulltheme " + s.deriv + ")";
    return out;
}

Sign promote_null_theme(const Sign& s) {
    auto r = try_promote_null_theme(s);
    if (!r) throw NotNullTone();
    return *r;
}

std::string sign_key(const Sign& s) {
    std::ostringstream out;
    out << s.begin << ':' << s.end << '|' << to_string(s.syn) << '|'
        << to_string(s.pros);
    for (const auto& e : s.record) {
        out << '|' << (e.role == InfoRole::Theme ? 'T' : 'R') << e.begin << ':'
            << e.end << ':' << to_string(e.cat);
    }
    return out.str();
}

}  // namespace contour
