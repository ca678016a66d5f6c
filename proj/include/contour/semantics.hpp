#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace contour {

// Interpretation language: a small lambda calculus with focusable constants
// and a binary conjunction, shared by syntactic and prosodic categories.
//
// Terms are immutable; every combinator returns a fresh tree.

enum class TermKind { Const, Var, App, Lam, Conj };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    TermKind kind;
    std::string name;     // Const only
    bool focused = false; // Const only; printed with a leading '*'
    int var = 0;          // Var id, or Lam binder id
    TermPtr left;         // App fn / Lam body / Conj left
    TermPtr right;        // App arg / Conj right

    static TermPtr constant(std::string name, bool focused = false);
    static TermPtr variable(int id);
    static TermPtr app(TermPtr fn, TermPtr arg);
    static TermPtr lam(int binder, TermPtr body);
    static TermPtr conj(TermPtr l, TermPtr r);
};

// Fresh variable ids are process-global so that lexicon instantiations
// never collide across derivation branches.
int fresh_var();

// Substitution produced by unification: variable id -> term.
class Binding {
public:
    // Binds a variable, walking existing bindings first. Throws OccursCheck
    // if the (walked) value contains the variable itself.
    void bind(int var, TermPtr value);

    bool contains(int var) const { return map_.find(var) != map_.end(); }
    std::size_t size() const { return map_.size(); }
    bool empty() const { return map_.empty(); }

    // Resolves a term through the binding until fixpoint.
    TermPtr apply(const TermPtr& t) const;

    const std::map<int, TermPtr>& entries() const { return map_; }

private:
    friend bool unify_terms(const TermPtr&, const TermPtr&, Binding&);
    TermPtr walk(const TermPtr& t) const;
    std::map<int, TermPtr> map_;
};

// First-order unification over terms. Lambda binders unify by aliasing,
// which deliberately lets a binder capture its argument's variable: the
// wh-word categories rely on exactly that sharing.
bool unify_terms(const TermPtr& a, const TermPtr& b, Binding& binding);

// Capture-avoiding substitution of a single variable.
TermPtr substitute(const TermPtr& t, int var, const TermPtr& value);

// Reduces all App(Lam(v,b),a) redexes; guarded by a step limit.
TermPtr beta_normalize(const TermPtr& t);

// True iff the two terms differ at most in variable naming (a bijective
// renaming over free and bound variables).
bool alpha_equal(const TermPtr& a, const TermPtr& b);

void collect_free_vars(const TermPtr& t, std::set<int>& out);
void collect_constants(const TermPtr& t, std::vector<std::string>& out);
bool contains_var(const TermPtr& t, int var);

// Same term with every constant's focus bit set.
TermPtr focus_all(const TermPtr& t);
// Same term with all focus bits cleared.
TermPtr unfocus_all(const TermPtr& t);
// Names of focused constants anywhere in the term.
void collect_focused(const TermPtr& t, std::set<std::string>& out);

// Canonical variable names handed out in order of first occurrence.
class VarNamer {
public:
    std::string name_for(int var);

private:
    std::map<int, std::string> names_;
};

// Canonical printed form: constants verbatim ('*' prefix when focused),
// application as f(a, b), lambdas as \x[body], conjunction as a & b.
std::string to_string(const TermPtr& t);
std::string to_string(const TermPtr& t, VarNamer& namer);

}  // namespace contour
