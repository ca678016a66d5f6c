#include "contour/category.hpp"

#include "contour/errors.hpp"

#include <map>
#include <sstream>

namespace contour {

CatPtr Cat::atom(AtomKind kind, TermPtr sem) {
    auto c = std::make_shared<Cat>();
    c->is_atom = true;
    c->kind = kind;
    c->sem = std::move(sem);
    return c;
}

CatPtr Cat::slash(CatPtr result, SlashDir dir, CatPtr arg) {
    auto c = std::make_shared<Cat>();
    c->is_atom = false;
    c->result = std::move(result);
    c->dir = dir;
    c->arg = std::move(arg);
    return c;
}

CatPtr Cat::forward(CatPtr result, CatPtr arg) {
    return slash(std::move(result), SlashDir::Forward, std::move(arg));
}

CatPtr Cat::backward(CatPtr result, CatPtr arg) {
    return slash(std::move(result), SlashDir::Backward, std::move(arg));
}

std::string to_string(const AtomKind& k) {
    switch (k) {
    case AtomKind::S: return "s";
    case AtomKind::NP: return "np";
    case AtomKind::N: return "n";
    }
    return "?";
}

namespace {

void print_cat(const CatPtr& c, VarNamer& namer, std::ostringstream& out) {
    if (c->is_atom) {
        out << to_string(c->kind) << ':' << to_string(c->sem, namer);
        return;
    }
    auto print_side = [&](const CatPtr& side) {
        if (side->is_atom) {
            print_cat(side, namer, out);
        } else {
            out << '(';
            print_cat(side, namer, out);
            out << ')';
        }
    };
    print_side(c->result);
    out << (c->dir == SlashDir::Forward ? '/' : '\\');
    print_side(c->arg);
}

}  // namespace

std::string to_string(const CatPtr& c, VarNamer& namer) {
    std::ostringstream out;
    print_cat(c, namer, out);
    return out.str();
}

std::string to_string(const CatPtr& c) {
    VarNamer namer;
    return to_string(c, namer);
}

bool unify_cats(const CatPtr& a, const CatPtr& b, Binding& binding) {
    if (a->is_atom != b->is_atom) return false;
    if (a->is_atom) {
        if (a->kind != b->kind) return false;
        return unify_terms(a->sem, b->sem, binding);
    }
    if (a->dir != b->dir) return false;
    return unify_cats(a->result, b->result, binding) &&
           unify_cats(a->arg, b->arg, binding);
}

std::optional<Binding> unify_syn(const CatPtr& a, const CatPtr& b) {
    Binding binding;
    if (!unify_cats(a, b, binding)) return std::nullopt;
    return binding;
}

CatPtr apply_binding(const Binding& binding, const CatPtr& c) {
    if (c->is_atom) return Cat::atom(c->kind, binding.apply(c->sem));
    return Cat::slash(apply_binding(binding, c->result), c->dir,
                      apply_binding(binding, c->arg));
}

namespace {

TermPtr freshen_term(const TermPtr& t, std::map<int, int>& renaming) {
    switch (t->kind) {
    case TermKind::Const:
        return t;
    case TermKind::Var: {
        auto it = renaming.find(t->var);
        if (it == renaming.end()) it = renaming.emplace(t->var, fresh_var()).first;
        return Term::variable(it->second);
    }
    case TermKind::App:
        return Term::app(freshen_term(t->left, renaming),
                         freshen_term(t->right, renaming));
    case TermKind::Conj:
        return Term::conj(freshen_term(t->left, renaming),
                          freshen_term(t->right, renaming));
    case TermKind::Lam: {
        auto it = renaming.find(t->var);
        if (it == renaming.end()) it = renaming.emplace(t->var, fresh_var()).first;
        int binder = it->second;
        return Term::lam(binder, freshen_term(t->left, renaming));
    }
    }
    return t;
}

CatPtr freshen_cat(const CatPtr& c, std::map<int, int>& renaming) {
    if (c->is_atom) return Cat::atom(c->kind, freshen_term(c->sem, renaming));
    return Cat::slash(freshen_cat(c->result, renaming), c->dir,
                      freshen_cat(c->arg, renaming));
}

}  // namespace

CatPtr instantiate_fresh(const CatPtr& c) {
    std::map<int, int> renaming;
    return freshen_cat(c, renaming);
}

void collect_sems(const CatPtr& c, std::vector<TermPtr>& out) {
    if (c->is_atom) {
        out.push_back(c->sem);
        return;
    }
    collect_sems(c->result, out);
    collect_sems(c->arg, out);
}

CatPtr focus_cat(const CatPtr& c) {
    if (c->is_atom) return Cat::atom(c->kind, focus_all(c->sem));
    return Cat::slash(focus_cat(c->result), c->dir, focus_cat(c->arg));
}

bool variant_equal(const CatPtr& a, const CatPtr& b) {
    // Canonical printing renames variables in first-occurrence order, so
    // string equality here is exactly equality up to a variable bijection.
    return to_string(a) == to_string(b);
}

std::optional<CatPtr> try_apply_forward(const CatPtr& fn, const CatPtr& arg) {
    if (fn->is_atom || fn->dir != SlashDir::Forward) return std::nullopt;
    auto binding = unify_syn(fn->arg, arg);
    if (!binding) return std::nullopt;
    return apply_binding(*binding, fn->result);
}

std::optional<CatPtr> try_apply_backward(const CatPtr& arg, const CatPtr& fn) {
    if (fn->is_atom || fn->dir != SlashDir::Backward) return std::nullopt;
    auto binding = unify_syn(fn->arg, arg);
    if (!binding) return std::nullopt;
    return apply_binding(*binding, fn->result);
}

std::optional<CatPtr> try_compose_forward(const CatPtr& f, const CatPtr& g) {
    if (f->is_atom || f->dir != SlashDir::Forward) return std::nullopt;
    if (g->is_atom || g->dir != SlashDir::Forward) return std::nullopt;
    auto binding = unify_syn(f->arg, g->result);
    if (!binding) return std::nullopt;
    return Cat::forward(apply_binding(*binding, f->result),
                        apply_binding(*binding, g->arg));
}

CatPtr apply_forward(const CatPtr& fn, const CatPtr& arg) {
    auto r = try_apply_forward(fn, arg);
    if (!r) throw RuleInapplicable("forward application of " + to_string(fn) +
                                   " to " + to_string(arg));
    return *r;
}

CatPtr apply_backward(const CatPtr& arg, const CatPtr& fn) {
    auto r = try_apply_backward(arg, fn);
    if (!r) throw RuleInapplicable("backward application of " + to_string(fn) +
                                   " to " + to_string(arg));
    return *r;
}

CatPtr compose_forward(const CatPtr& f, const CatPtr& g) {
    auto r = try_compose_forward(f, g);
    if (!r) throw RuleInapplicable("forward composition of " + to_string(f) +
                                   " with " + to_string(g));
    return *r;
}

std::string rule_name(RuleKind r) {
    switch (r) {
    case RuleKind::ForwardApply: return ">";
    case RuleKind::BackwardApply: return "<";
    case RuleKind::ForwardCompose: return ">B";
    }
    return "?";
}

std::optional<CatPtr> try_combine(const CatPtr& left, const CatPtr& right, RuleKind rule) {
    switch (rule) {
    case RuleKind::ForwardApply: return try_apply_forward(left, right);
    case RuleKind::BackwardApply: return try_apply_backward(left, right);
    case RuleKind::ForwardCompose: return try_compose_forward(left, right);
    }
    return std::nullopt;
}

}  // namespace contour
