#pragma once

#include "contour/semantics.hpp"

#include <memory>
#include <optional>
#include <string>

namespace contour {

// Directional categorial types over the atoms s, np, n, each atom paired
// with an interpretation term via the colon operator.

enum class AtomKind { S, NP, N };
enum class SlashDir { Forward, Backward };

class Cat;
using CatPtr = std::shared_ptr<const Cat>;

class Cat {
public:
    bool is_atom;
    AtomKind kind = AtomKind::S;  // atom only
    TermPtr sem;                  // atom only
    CatPtr result;                // functor only
    SlashDir dir = SlashDir::Forward;
    CatPtr arg;                   // functor only

    static CatPtr atom(AtomKind kind, TermPtr sem);
    static CatPtr slash(CatPtr result, SlashDir dir, CatPtr arg);
    static CatPtr forward(CatPtr result, CatPtr arg);
    static CatPtr backward(CatPtr result, CatPtr arg);
};

std::string to_string(const AtomKind& k);
std::string to_string(const CatPtr& c);
std::string to_string(const CatPtr& c, VarNamer& namer);

// Most general binding making a and b equal, embedded terms included.
// Failure is a value; OccursCheck propagates as an error.
std::optional<Binding> unify_syn(const CatPtr& a, const CatPtr& b);
bool unify_cats(const CatPtr& a, const CatPtr& b, Binding& binding);

CatPtr apply_binding(const Binding& binding, const CatPtr& c);

// Clones a category with every variable replaced by a fresh one.
CatPtr instantiate_fresh(const CatPtr& c);

// Collects the sems of every atom in the category tree.
void collect_sems(const CatPtr& c, std::vector<TermPtr>& out);

// Same category with every constant in every sem focus-starred.
CatPtr focus_cat(const CatPtr& c);

// Structural equality up to a bijective variable renaming.
bool variant_equal(const CatPtr& a, const CatPtr& b);

// Combinatory rules. The try_ forms report inapplicability as nullopt;
// the plain forms throw RuleInapplicable.
std::optional<CatPtr> try_apply_forward(const CatPtr& fn, const CatPtr& arg);
std::optional<CatPtr> try_apply_backward(const CatPtr& arg, const CatPtr& fn);
std::optional<CatPtr> try_compose_forward(const CatPtr& f, const CatPtr& g);

CatPtr apply_forward(const CatPtr& fn, const CatPtr& arg);
CatPtr apply_backward(const CatPtr& arg, const CatPtr& fn);
CatPtr compose_forward(const CatPtr& f, const CatPtr& g);

enum class RuleKind { ForwardApply, BackwardApply, ForwardCompose };
std::string rule_name(RuleKind r);

std::optional<CatPtr> try_combine(const CatPtr& left, const CatPtr& right, RuleKind rule);

}  // namespace contour
