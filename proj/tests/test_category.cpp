#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "contour/category.hpp"
#include "contour/errors.hpp"
#include "contour/reader.hpp"

#include <random>

using namespace contour;

namespace {

// Test-only brute-force unifier: straightforward structural recursion with
// substitution lists, kept independent of the production Binding machinery.
using Subst = std::vector<std::pair<int, TermPtr>>;

TermPtr subst_apply(const Subst& s, const TermPtr& t) {
    switch (t->kind) {
    case TermKind::Const:
        return t;
    case TermKind::Var: {
        for (const auto& [v, val] : s) {
            if (v == t->var) return subst_apply(s, val);
        }
        return t;
    }
    case TermKind::App:
        return Term::app(subst_apply(s, t->left), subst_apply(s, t->right));
    case TermKind::Conj:
        return Term::conj(subst_apply(s, t->left), subst_apply(s, t->right));
    case TermKind::Lam: {
        TermPtr binder = subst_apply(s, Term::variable(t->var));
        REQUIRE(binder->kind == TermKind::Var);
        return Term::lam(binder->var, subst_apply(s, t->left));
    }
    }
    return t;
}

bool naive_unify_terms(TermPtr a, TermPtr b, Subst& s) {
    a = subst_apply(s, a);
    b = subst_apply(s, b);
    if (a->kind == TermKind::Var) {
        if (b->kind == TermKind::Var && a->var == b->var) return true;
        if (contains_var(b, a->var)) return false;
        s.emplace_back(a->var, b);
        return true;
    }
    if (b->kind == TermKind::Var) return naive_unify_terms(b, a, s);
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case TermKind::Const:
        return a->name == b->name && a->focused == b->focused;
    case TermKind::App:
    case TermKind::Conj:
        return naive_unify_terms(a->left, b->left, s) &&
               naive_unify_terms(a->right, b->right, s);
    case TermKind::Lam:
        if (a->var != b->var) s.emplace_back(a->var, Term::variable(b->var));
        return naive_unify_terms(a->left, b->left, s);
    case TermKind::Var:
        break;
    }
    return false;
}

bool naive_unify_cats(const CatPtr& a, const CatPtr& b, Subst& s) {
    if (a->is_atom != b->is_atom) return false;
    if (a->is_atom) {
        return a->kind == b->kind && naive_unify_terms(a->sem, b->sem, s);
    }
    return a->dir == b->dir && naive_unify_cats(a->result, b->result, s) &&
           naive_unify_cats(a->arg, b->arg, s);
}

CatPtr subst_apply_cat(const Subst& s, const CatPtr& c) {
    if (c->is_atom) return Cat::atom(c->kind, subst_apply(s, c->sem));
    return Cat::slash(subst_apply_cat(s, c->result), c->dir,
                      subst_apply_cat(s, c->arg));
}

CatPtr random_cat(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> shape(0, depth <= 0 ? 1 : 3);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> sempick(0, 3);
    int sh = shape(rng);
    if (sh <= 1) {
        TermPtr sem;
        switch (sempick(rng)) {
        case 0: sem = Term::variable(rng() % 5 + 1000); break;
        case 1: sem = Term::constant("k1'"); break;
        case 2: sem = Term::constant("k2'"); break;
        default:
            sem = Term::app(Term::constant("k1'"), Term::variable(rng() % 5 + 1000));
        }
        return Cat::atom(static_cast<AtomKind>(kind(rng)), sem);
    }
    SlashDir dir = sh == 2 ? SlashDir::Forward : SlashDir::Backward;
    return Cat::slash(random_cat(rng, depth - 1), dir, random_cat(rng, depth - 1));
}

}  // namespace

TEST_CASE("atom unification") {
    std::map<std::string, int> scope;
    CatPtr a = parse_category("np:x", scope);
    CatPtr b = parse_category("np:lavage'");
    auto binding = unify_syn(a, b);
    REQUIRE(binding.has_value());
    CHECK(to_string(apply_binding(*binding, a)) == "np:lavage'");
}

TEST_CASE("atom kind clash fails as a value") {
    CHECK_FALSE(unify_syn(parse_category("s:p"), parse_category("np:q")).has_value());
}

TEST_CASE("backward application unification, checked against a brute-force unifier") {
    std::map<std::string, int> scope;
    CatPtr a = parse_category("s:s1\\np:traumaid'", scope);
    CatPtr b = parse_category("s:recommend'(x, y)\\np:y", scope);
    auto binding = unify_syn(a, b);
    REQUIRE(binding.has_value());
    CHECK(to_string(binding->apply(Term::variable(scope.at("y")))) == "traumaid'");
    CHECK(to_string(binding->apply(Term::variable(scope.at("s1")))) ==
          "recommend'(x, traumaid')");

    Subst s;
    REQUIRE(naive_unify_cats(a, b, s));
    CHECK(to_string(subst_apply_cat(s, a)) == to_string(apply_binding(*binding, a)));
    CHECK(to_string(subst_apply_cat(s, b)) == to_string(apply_binding(*binding, b)));
}

TEST_CASE("unifier agrees with the brute-force oracle on random categories") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        CatPtr a = random_cat(rng, 2);
        CatPtr b = random_cat(rng, 2);
        Subst s;
        bool naive_ok = naive_unify_cats(a, b, s);
        std::optional<Binding> binding;
        bool prod_ok;
        try {
            binding = unify_syn(a, b);
            prod_ok = binding.has_value();
        } catch (const OccursCheck&) {
            prod_ok = false;
        }
        CHECK(naive_ok == prod_ok);
        if (naive_ok && prod_ok) {
            CHECK(to_string(subst_apply_cat(s, a)) ==
                  to_string(apply_binding(*binding, a)));
        }
    }
}

TEST_CASE("unification is symmetric in success") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        CatPtr a = random_cat(rng, 2);
        CatPtr b = random_cat(rng, 2);
        bool ab, ba;
        try {
            ab = unify_syn(a, b).has_value();
        } catch (const OccursCheck&) {
            ab = false;
        }
        try {
            ba = unify_syn(b, a).has_value();
        } catch (const OccursCheck&) {
            ba = false;
        }
        CHECK(ab == ba);
    }
}

TEST_CASE("forward application: basic transitive sentence") {
    CatPtr verb = parse_category("(s:recommend'(x, y)\\np:y)/np:x");
    CatPtr obj = parse_category("np:lavage'");
    CatPtr vp = apply_forward(verb, obj);
    CHECK(to_string(vp) == "s:recommend'(lavage', x)\\np:x");
}

TEST_CASE("forward application failure raises RuleInapplicable") {
    CatPtr verb = parse_category("(s:recommend'(x, y)\\np:y)/np:x");
    CHECK_THROWS_AS(apply_forward(verb, parse_category("n:condition")), RuleInapplicable);
    CHECK_THROWS_AS(apply_forward(parse_category("np:lavage'"), verb), RuleInapplicable);
}

TEST_CASE("forward application carries focus marks through") {
    CatPtr fn = parse_category("s:recommend'(x, *traumaid')/np:x");
    CatPtr arg = parse_category("np:*lavage'");
    CHECK(to_string(apply_forward(fn, arg)) == "s:recommend'(*lavage', *traumaid')");
}

TEST_CASE("backward application: subject and raised-object forms") {
    CatPtr subj = parse_category("np:traumaid'");
    CatPtr vp = parse_category("s:recommend'(lavage', y)\\np:y");
    CHECK(to_string(apply_backward(subj, vp)) == "s:recommend'(lavage', traumaid')");

    // S/NP then S\(S/NP) -> S, the raised-object derivation
    std::map<std::string, int> scope;
    CatPtr fwd = parse_category("s:recommend'(x, traumaid')/np:x", scope);
    CatPtr raised_obj = parse_category("s:s1\\(s:s1/np:lavage')");
    CHECK(to_string(apply_backward(fwd, raised_obj)) ==
          "s:recommend'(lavage', traumaid')");

    CHECK_THROWS_AS(apply_backward(subj, parse_category("np:lavage'")),
                    RuleInapplicable);
}

TEST_CASE("forward composition: raised subject over transitive verb") {
    CatPtr raised = parse_category("s:s1/(s:s1\\np:traumaid')");
    CatPtr verb = parse_category("(s:recommend'(x, y)\\np:y)/np:x");
    CatPtr composed = compose_forward(raised, verb);
    CHECK(to_string(composed) == "s:recommend'(x, traumaid')/np:x");
}

TEST_CASE("identity functor composes without changing its argument functor") {
    std::map<std::string, int> scope;
    CatPtr ident = parse_category("np:F/np:F", scope);
    CatPtr g = parse_category("np:wrap(x)/np:x");
    CatPtr composed = compose_forward(ident, g);
    CHECK(variant_equal(composed, g));
}

TEST_CASE("composition inapplicable across directions") {
    CatPtr raised = parse_category("s:s1/(s:s1\\np:traumaid')");
    CHECK_THROWS_AS(compose_forward(raised, parse_category("np:lavage'")),
                    RuleInapplicable);
    CHECK_THROWS_AS(
        compose_forward(parse_category("s:a\\np:b'"), parse_category("np:c'/n:d'")),
        RuleInapplicable);
}

TEST_CASE("applicative and compositional derivations agree semantically") {
    // Traumaid recommends lavage, derived two ways
    CatPtr raised = parse_category("s:s1/(s:s1\\np:traumaid')");
    CatPtr verb = parse_category("(s:recommend'(x, y)\\np:y)/np:x");
    CatPtr obj = parse_category("np:lavage'");

    CatPtr route1 = apply_forward(raised, apply_forward(verb, obj));
    CatPtr route2 = apply_forward(compose_forward(raised, verb), obj);
    REQUIRE(route1->is_atom);
    REQUIRE(route2->is_atom);
    CHECK(alpha_equal(beta_normalize(route1->sem), beta_normalize(route2->sem)));
    CHECK(to_string(route1) == "s:recommend'(lavage', traumaid')");
}

TEST_CASE("category printer round-trips") {
    const char* samples[] = {
        "(s:recommend'(x, y)\\np:y)/np:x",
        "s:s1/(s:s1\\np:*traumaid')",
        "(s:\\x[P(x) & Q]/(s:Q/np:x))/n:P",
        "np:left(*thoracostomy)",
    };
    for (const char* s : samples) {
        CatPtr c = parse_category(s);
        CatPtr back = parse_category(to_string(c));
        CHECK(variant_equal(c, back));
    }
}

TEST_CASE("fresh instantiation preserves structure but renames variables") {
    CatPtr c = parse_category("(s:recommend'(x, y)\\np:y)/np:x");
    CatPtr fresh = instantiate_fresh(c);
    CHECK(variant_equal(c, fresh));
    CHECK(to_string(c) == to_string(fresh));
}
