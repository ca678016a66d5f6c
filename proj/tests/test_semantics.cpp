#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "contour/errors.hpp"
#include "contour/reader.hpp"
#include "contour/semantics.hpp"

#include <random>

using namespace contour;

TEST_CASE("single beta step") {
    // \x[address(u, x)] applied to hematuria -> address(u, hematuria)
    int x = fresh_var();
    int u = fresh_var();
    TermPtr body = Term::app(Term::app(Term::constant("address"), Term::variable(u)),
                             Term::variable(x));
    TermPtr redex = Term::app(Term::lam(x, body), Term::constant("hematuria"));
    TermPtr norm = beta_normalize(redex);
    VarNamer namer;
    CHECK(to_string(norm) == "address(x, hematuria)");
}

TEST_CASE("normal form is a fixed point") {
    TermPtr c = Term::constant("lavage'");
    TermPtr norm = beta_normalize(c);
    CHECK(alpha_equal(c, norm));
    CHECK(to_string(norm) == "lavage'");
}

TEST_CASE("theme term applied to raised argument matches the answer form") {
    // theme of the urinalysis question applied to the answer np
    TermPtr theme = parse_term("\\x[address(*urinalysis, x)]");
    TermPtr applied = Term::app(theme, parse_term("*hematuria"));
    CHECK(to_string(beta_normalize(applied)) == "address(*urinalysis, *hematuria)");
}

TEST_CASE("divergent term hits the depth guard") {
    // (\x[x(x)])(\x[x(x)]) has no normal form
    int x1 = fresh_var();
    TermPtr omega1 = Term::lam(x1, Term::app(Term::variable(x1), Term::variable(x1)));
    int x2 = fresh_var();
    TermPtr omega2 = Term::lam(x2, Term::app(Term::variable(x2), Term::variable(x2)));
    CHECK_THROWS_AS(beta_normalize(Term::app(omega1, omega2)),
                    NormalizationDepthExceeded);
}

TEST_CASE("alpha equality is renaming only") {
    CHECK(alpha_equal(parse_term("\\x[P(x)]"), parse_term("\\y[P(y)]")));
    CHECK_FALSE(alpha_equal(parse_term("\\x[pred(x)]"), parse_term("\\x[other(x)]")));
    // distinct predicate constants
    CHECK_FALSE(alpha_equal(parse_term("foo(x)"), parse_term("bar(x)")));
    // focus marks are part of the term
    CHECK_FALSE(alpha_equal(parse_term("*lavage'"), parse_term("lavage'")));
    // the renaming must be a bijection
    CHECK_FALSE(alpha_equal(parse_term("pred(x, y)"), parse_term("pred(x, x)")));
    CHECK(alpha_equal(parse_term("pred(x, y)"), parse_term("pred(y, z)")));
}

TEST_CASE("substitution avoids capture") {
    // substituting y := x into \x[pred(x, y)] must not capture x
    std::map<std::string, int> scope;
    TermPtr t = parse_term("\\x[pred(x, y)]", scope);
    TermPtr replaced = substitute(t, scope.at("y"), Term::variable(scope.at("x")));
    // result must be alpha-equal to \z[pred(z, x)], not \x[pred(x, x)]
    CHECK(alpha_equal(replaced, parse_term("\\z[pred(z, x)]")));
    CHECK_FALSE(alpha_equal(replaced, parse_term("\\z[pred(z, z)]")));
}

TEST_CASE("unification binds variables") {
    std::map<std::string, int> scope;
    TermPtr a = parse_term("recommend'(x, y)", scope);
    TermPtr b = parse_term("recommend'(lavage', traumaid')");
    Binding binding;
    REQUIRE(unify_terms(a, b, binding));
    CHECK(to_string(binding.apply(Term::variable(scope.at("x")))) == "lavage'");
    CHECK(to_string(binding.apply(Term::variable(scope.at("y")))) == "traumaid'");
}

TEST_CASE("occurs check") {
    std::map<std::string, int> scope;
    TermPtr a = parse_term("x", scope);
    TermPtr b = parse_term("pred(x)", scope);
    Binding binding;
    CHECK_THROWS_AS(unify_terms(a, b, binding), OccursCheck);
}

TEST_CASE("bindings are idempotent") {
    std::map<std::string, int> scope;
    TermPtr a = parse_term("pair(x, y)", scope);
    TermPtr b = parse_term("pair(f(y), c)", scope);
    Binding binding;
    REQUIRE(unify_terms(a, b, binding));
    TermPtr once = binding.apply(a);
    TermPtr twice = binding.apply(once);
    CHECK(alpha_equal(once, twice));
    CHECK(to_string(once) == to_string(twice));
}

TEST_CASE("normalize is a fixed point on its own output") {
    std::mt19937 rng(20250809);
    // random small applicative terms over a few constants and variables
    std::vector<TermPtr> pool;
    for (int i = 0; i < 4; ++i) pool.push_back(Term::variable(fresh_var()));
    pool.push_back(Term::constant("a'"));
    pool.push_back(Term::constant("b'"));
    auto pick = [&](auto& self, int depth) -> TermPtr {
        std::uniform_int_distribution<int> d(0, depth <= 0 ? 0 : 3);
        switch (d(rng)) {
        case 1:
            return Term::app(self(self, depth - 1), self(self, depth - 1));
        case 2: {
            int v = fresh_var();
            return Term::lam(v, Term::app(self(self, depth - 1), Term::variable(v)));
        }
        case 3:
            return Term::conj(self(self, depth - 1), self(self, depth - 1));
        default: {
            std::uniform_int_distribution<std::size_t> p(0, pool.size() - 1);
            return pool[p(rng)];
        }
        }
    };
    for (int trial = 0; trial < 200; ++trial) {
        TermPtr t = pick(pick, 4);
        TermPtr n1 = beta_normalize(t);
        TermPtr n2 = beta_normalize(n1);
        CHECK(alpha_equal(n1, n2));
    }
}

TEST_CASE("printer round-trips through the reader") {
    const char* samples[] = {
        "recommend'(*lavage', *traumaid')",
        "\\x[condition(x) & address(*urinalysis, x)]",
        "pred(a & b, c)",
        "\\x[\\y[rel(y, x)]]",
        "*recommend'(x, y)",
    };
    for (const char* s : samples) {
        TermPtr t = parse_term(s);
        TermPtr back = parse_term(to_string(t));
        CHECK(alpha_equal(t, back));
    }
}

TEST_CASE("focus helpers") {
    TermPtr t = parse_term("recommend'(lavage', x)");
    TermPtr focused = focus_all(t);
    CHECK(to_string(focused) == "*recommend'(*lavage', x)");
    std::set<std::string> marks;
    collect_focused(focused, marks);
    CHECK(marks == std::set<std::string>{"recommend'", "lavage'"});
    CHECK(to_string(unfocus_all(focused)) == "recommend'(lavage', x)");
}
