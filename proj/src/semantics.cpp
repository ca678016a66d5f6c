#include "contour/semantics.hpp"

#include "contour/errors.hpp"

#include <atomic>
#include <cassert>
#include <sstream>

namespace contour {

namespace {
std::atomic<int> g_var_counter{1};
}

TermPtr Term::constant(std::string name, bool focused) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Const;
    t->name = std::move(name);
    t->focused = focused;
    return t;
}

TermPtr Term::variable(int id) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Var;
    t->var = id;
    return t;
}

TermPtr Term::app(TermPtr fn, TermPtr arg) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::App;
    t->left = std::move(fn);
    t->right = std::move(arg);
    return t;
}

TermPtr Term::lam(int binder, TermPtr body) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Lam;
    t->var = binder;
    t->left = std::move(body);
    return t;
}

TermPtr Term::conj(TermPtr l, TermPtr r) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Conj;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

int fresh_var() { return g_var_counter.fetch_add(1); }

bool contains_var(const TermPtr& t, int var) {
    if (!t) return false;
    switch (t->kind) {
    case TermKind::Const: return false;
    case TermKind::Var: return t->var == var;
    case TermKind::Lam: return t->var == var || contains_var(t->left, var);
    case TermKind::App:
    case TermKind::Conj:
        return contains_var(t->left, var) || contains_var(t->right, var);
    }
    return false;
}

TermPtr Binding::walk(const TermPtr& t) const {
    TermPtr cur = t;
    while (cur && cur->kind == TermKind::Var) {
        auto it = map_.find(cur->var);
        if (it == map_.end()) break;
        cur = it->second;
    }
    return cur;
}

void Binding::bind(int var, TermPtr value) {
    TermPtr lhs = walk(Term::variable(var));
    TermPtr rhs = apply(value);
    if (lhs->kind != TermKind::Var) {
        // var already resolves to structure; the new value must agree
        if (!unify_terms(lhs, rhs, *this)) {
            throw Error("bind: conflicting binding for variable");
        }
        return;
    }
    if (rhs->kind == TermKind::Var && rhs->var == lhs->var) return;
    if (contains_var(rhs, lhs->var)) throw OccursCheck();
    map_[lhs->var] = rhs;
}

TermPtr Binding::apply(const TermPtr& t) const {
    if (!t) return t;
    TermPtr w = walk(t);
    switch (w->kind) {
    case TermKind::Const:
    case TermKind::Var:
        return w;
    case TermKind::App:
        return Term::app(apply(w->left), apply(w->right));
    case TermKind::Conj:
        return Term::conj(apply(w->left), apply(w->right));
    case TermKind::Lam: {
        // A bound lambda binder must stay a variable; unification only ever
        // aliases binders to other variables.
        TermPtr binder = walk(Term::variable(w->var));
        assert(binder->kind == TermKind::Var);
        return Term::lam(binder->var, apply(w->left));
    }
    }
    return w;
}

bool unify_terms(const TermPtr& a, const TermPtr& b, Binding& binding) {
    TermPtr x = binding.walk(a);
    TermPtr y = binding.walk(b);
    if (x->kind == TermKind::Var) {
        binding.bind(x->var, y);
        return true;
    }
    if (y->kind == TermKind::Var) {
        binding.bind(y->var, x);
        return true;
    }
    if (x->kind != y->kind) return false;
    switch (x->kind) {
    case TermKind::Const:
        return x->name == y->name && x->focused == y->focused;
    case TermKind::App:
    case TermKind::Conj:
        return unify_terms(x->left, y->left, binding) &&
               unify_terms(x->right, y->right, binding);
    case TermKind::Lam: {
        if (x->var != y->var &&
            !unify_terms(Term::variable(x->var), Term::variable(y->var), binding)) {
            return false;
        }
        return unify_terms(x->left, y->left, binding);
    }
    case TermKind::Var:
        break;  // unreachable
    }
    return false;
}

TermPtr substitute(const TermPtr& t, int var, const TermPtr& value) {
    if (!t) return t;
    switch (t->kind) {
    case TermKind::Const:
        return t;
    case TermKind::Var:
        return t->var == var ? value : t;
    case TermKind::App:
        return Term::app(substitute(t->left, var, value),
                         substitute(t->right, var, value));
    case TermKind::Conj:
        return Term::conj(substitute(t->left, var, value),
                          substitute(t->right, var, value));
    case TermKind::Lam: {
        if (t->var == var) return t;  // shadowed
        if (contains_var(value, t->var)) {
            // rename the binder to avoid capturing a free variable of value
            int nv = fresh_var();
            TermPtr body = substitute(t->left, t->var, Term::variable(nv));
            return Term::lam(nv, substitute(body, var, value));
        }
        return Term::lam(t->var, substitute(t->left, var, value));
    }
    }
    return t;
}

namespace {

TermPtr beta_step(const TermPtr& t, bool& reduced) {
    switch (t->kind) {
    case TermKind::Const:
    case TermKind::Var:
        return t;
    case TermKind::App: {
        if (t->left->kind == TermKind::Lam) {
            reduced = true;
            return substitute(t->left->left, t->left->var, t->right);
        }
        TermPtr fn = beta_step(t->left, reduced);
        if (reduced) return Term::app(fn, t->right);
        TermPtr arg = beta_step(t->right, reduced);
        return Term::app(fn, arg);
    }
    case TermKind::Conj: {
        TermPtr l = beta_step(t->left, reduced);
        if (reduced) return Term::conj(l, t->right);
        TermPtr r = beta_step(t->right, reduced);
        return Term::conj(l, r);
    }
    case TermKind::Lam: {
        TermPtr body = beta_step(t->left, reduced);
        return Term::lam(t->var, body);
    }
    }
    return t;
}

constexpr int kMaxBetaSteps = 10000;

bool alpha_equal_rec(const TermPtr& a, const TermPtr& b,
                     std::map<int, int>& fwd, std::map<int, int>& bwd) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case TermKind::Const:
        return a->name == b->name && a->focused == b->focused;
    case TermKind::Var: {
        auto fit = fwd.find(a->var);
        auto bit = bwd.find(b->var);
        if (fit == fwd.end() && bit == bwd.end()) {
            fwd[a->var] = b->var;
            bwd[b->var] = a->var;
            return true;
        }
        return fit != fwd.end() && bit != bwd.end() &&
               fit->second == b->var && bit->second == a->var;
    }
    case TermKind::App:
    case TermKind::Conj:
        return alpha_equal_rec(a->left, b->left, fwd, bwd) &&
               alpha_equal_rec(a->right, b->right, fwd, bwd);
    case TermKind::Lam: {
        // Binders extend the bijection like any variable pair; terms are
        // alpha-hygienic after normalization so shadowing is not an issue.
        auto fit = fwd.find(a->var);
        auto bit = bwd.find(b->var);
        if (fit != fwd.end() || bit != bwd.end()) {
            if (fit == fwd.end() || bit == bwd.end()) return false;
            if (fit->second != b->var || bit->second != a->var) return false;
        } else {
            fwd[a->var] = b->var;
            bwd[b->var] = a->var;
        }
        return alpha_equal_rec(a->left, b->left, fwd, bwd);
    }
    }
    return false;
}

}  // namespace

TermPtr beta_normalize(const TermPtr& t) {
    TermPtr cur = t;
    for (int i = 0; i < kMaxBetaSteps; ++i) {
        bool reduced = false;
        TermPtr next = beta_step(cur, reduced);
        if (!reduced) return next;
        cur = next;
    }
    throw NormalizationDepthExceeded();
}

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
    std::map<int, int> fwd, bwd;
    return alpha_equal_rec(a, b, fwd, bwd);
}

void collect_free_vars(const TermPtr& t, std::set<int>& out) {
    if (!t) return;
    switch (t->kind) {
    case TermKind::Const:
        return;
    case TermKind::Var:
        out.insert(t->var);
        return;
    case TermKind::App:
    case TermKind::Conj:
        collect_free_vars(t->left, out);
        collect_free_vars(t->right, out);
        return;
    case TermKind::Lam: {
        std::set<int> inner;
        collect_free_vars(t->left, inner);
        inner.erase(t->var);
        out.insert(inner.begin(), inner.end());
        return;
    }
    }
}

void collect_constants(const TermPtr& t, std::vector<std::string>& out) {
    if (!t) return;
    if (t->kind == TermKind::Const) {
        out.push_back(t->name);
        return;
    }
    collect_constants(t->left, out);
    collect_constants(t->right, out);
}

TermPtr focus_all(const TermPtr& t) {
    if (!t) return t;
    switch (t->kind) {
    case TermKind::Const:
        return Term::constant(t->name, true);
    case TermKind::Var:
        return t;
    case TermKind::App:
        return Term::app(focus_all(t->left), focus_all(t->right));
    case TermKind::Conj:
        return Term::conj(focus_all(t->left), focus_all(t->right));
    case TermKind::Lam:
        return Term::lam(t->var, focus_all(t->left));
    }
    return t;
}

TermPtr unfocus_all(const TermPtr& t) {
    if (!t) return t;
    switch (t->kind) {
    case TermKind::Const:
        return t->focused ? Term::constant(t->name, false) : t;
    case TermKind::Var:
        return t;
    case TermKind::App:
        return Term::app(unfocus_all(t->left), unfocus_all(t->right));
    case TermKind::Conj:
        return Term::conj(unfocus_all(t->left), unfocus_all(t->right));
    case TermKind::Lam:
        return Term::lam(t->var, unfocus_all(t->left));
    }
    return t;
}

void collect_focused(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind == TermKind::Const) {
        if (t->focused) out.insert(t->name);
        return;
    }
    collect_focused(t->left, out);
    collect_focused(t->right, out);
}

std::string VarNamer::name_for(int var) {
    auto it = names_.find(var);
    if (it != names_.end()) return it->second;
    static const char* pool[] = {"x", "y", "z", "w", "v", "u", "t", "r"};
    constexpr std::size_t pool_size = sizeof(pool) / sizeof(pool[0]);
    std::size_t n = names_.size();
    std::string name = n < pool_size
                           ? pool[n]
                           : "x" + std::to_string(n - pool_size + 1);
    names_[var] = name;
    return name;
}

namespace {

// Precedence levels: conj is loosest, application binds tightest.
void print_term(const TermPtr& t, VarNamer& namer, std::ostringstream& out,
                bool parenthesize_conj) {
    switch (t->kind) {
    case TermKind::Const:
        if (t->focused) out << '*';
        out << t->name;
        return;
    case TermKind::Var:
        out << namer.name_for(t->var);
        return;
    case TermKind::Lam: {
        out << '\\' << namer.name_for(t->var) << '[';
        print_term(t->left, namer, out, false);
        out << ']';
        return;
    }
    case TermKind::Conj: {
        if (parenthesize_conj) out << '(';
        print_term(t->left, namer, out, true);
        out << " & ";
        print_term(t->right, namer, out, true);
        if (parenthesize_conj) out << ')';
        return;
    }
    case TermKind::App: {
        // Flatten the application spine: App(App(f,a),b) prints f(a, b).
        std::vector<const TermPtr*> args;
        const Term* head = t.get();
        TermPtr cur = t;
        while (cur->kind == TermKind::App) {
            args.push_back(&cur->right);
            cur = cur->left;
        }
        head = cur.get();
        (void)head;
        if (cur->kind == TermKind::Const || cur->kind == TermKind::Var) {
            print_term(cur, namer, out, true);
        } else {
            out << '(';
            print_term(cur, namer, out, false);
            out << ')';
        }
        out << '(';
        for (std::size_t i = args.size(); i-- > 0;) {
            print_term(*args[i], namer, out, true);
            if (i > 0) out << ", ";
        }
        out << ')';
        return;
    }
    }
}

}  // namespace

std::string to_string(const TermPtr& t, VarNamer& namer) {
    std::ostringstream out;
    print_term(t, namer, out, false);
    return out.str();
}

std::string to_string(const TermPtr& t) {
    VarNamer namer;
    return to_string(t, namer);
}

}  // namespace contour
