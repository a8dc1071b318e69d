#include <doctest.h>

#include <map>
#include <set>

#include <json.hpp>

#include "algpos/table.hpp"

using namespace algpos;

TEST_CASE("expression parser and evaluator") {
    const RealMatrix x = parse_matrix("2 3 0; -4 0 5; 6 0 0");
    CHECK(Expr::parse("a11*a21 + a23*a31").eval(x) == doctest::Approx(2 * -4 + 5 * 6));
    CHECK(Expr::parse("-a11 - a23*a31/a21").eval(x) == doctest::Approx(-2.0 + 30.0 / 4.0));
    CHECK(Expr::parse("a21*a32^2").eval(x) == doctest::Approx(0.0));
    CHECK(Expr::parse("a12^2").eval(x) == doctest::Approx(9.0));
    CHECK(Expr::parse("0.5*(a11 + a12)").eval(x) == doctest::Approx(2.5));
    CHECK(Expr::parse("0").eval(x) == 0.0);
    CHECK_THROWS_AS(Expr::parse("a11 +"), ParseError);
    CHECK_THROWS_AS(Expr::parse("a99"), ParseError);
    CHECK_THROWS_AS(Expr::parse("a11^3"), ParseError);
}

TEST_CASE("chain inequality semantics: every lhs below every rhs") {
    ChainInequality c;
    c.lhs = {Expr::parse("a11"), Expr::parse("a12")};
    c.rhs = {Expr::parse("a21"), Expr::parse("a22")};
    CHECK(c.holds(parse_matrix("1 2; 3 4")));
    CHECK_FALSE(c.holds(parse_matrix("1 5; 3 4")));
    CHECK(c.margin(parse_matrix("1 2; 3 4")) == doctest::Approx(1.0));
}

TEST_CASE("template matching with stars") {
    const PatternTemplate t = PatternTemplate::parse("0+*/00+/-00");
    CHECK(t.star_count() == 1);
    CHECK(t.matches(parse_pattern("0++/00+/-00")));
    CHECK(t.matches(parse_pattern("0+-/00+/-00")));
    CHECK_FALSE(t.matches(parse_pattern("0+0/00+/-00")));  // star is never zero
    CHECK_FALSE(t.matches(parse_pattern("0-+/00+/-00")));
    CHECK(t.completions().size() == 2);
    CHECK(t.digraph().edge_count() == 4);
    CHECK(t.to_string() == "0+*/00+/-00");
}

TEST_CASE("builtin table shape matches the printed appendix") {
    const Table& t = Table::builtin();
    CHECK(t.version() == 1);
    CHECK(t.entries().size() == 223);

    std::map<std::string, int> labels;
    int supplements = 0, recipes = 0, with_condition = 0, witness_rows = 0;
    for (const auto& e : t.entries()) {
        if (e.supplement) {
            ++supplements;
            continue;
        }
        labels[std::string(verdict_name(e.label))] += 1;
        recipes += e.has_recipe;
        with_condition += !e.condition.empty();
        witness_rows += !e.witnesses.empty();
    }
    CHECK(supplements == 5);
    CHECK(labels["RAP"] == 39);
    CHECK(labels["AAP"] == 75);
    CHECK(labels["DNA"] == 104);
    CHECK(recipes == 13);
    CHECK(with_condition == 75);   // every AAP row carries its printed condition
    CHECK(witness_rows == 75);

    // the 26 digraph groups are all present
    std::set<int> digraphs;
    for (const auto& e : t.entries()) digraphs.insert(e.digraph_id);
    CHECK(digraphs.size() == 26);

    // stars appear only on digraph edges (never forced zero cells)
    for (const auto& e : t.entries())
        for (const auto& s : e.tmpl.completions()) CHECK(e.tmpl.matches(s));
}

TEST_CASE("lookup finds rows in paper order with a witnessing transform") {
    const Table& t = Table::builtin();
    const SignPattern direct = parse_pattern("++0/-0+/+00");
    const auto m = t.find(direct);
    REQUIRE(m.has_value());
    CHECK(m->entry->id == "8.2");
    CHECK(m->entry->label == Verdict::AAP);
    CHECK(m->entry->tmpl.matches(m->transform.apply(direct)));

    // a transformed member of the class lands on the same row
    EquivTransform g = EquivTransform::identity(3);
    g.perm = {1, 2, 0};
    g.negated = true;
    const auto m2 = t.find(g.apply(direct));
    REQUIRE(m2.has_value());
    CHECK(m2->entry->id == "8.2");
    CHECK(m2->entry->tmpl.matches(m2->transform.apply(g.apply(direct))));
}

TEST_CASE("overlapping printed rows are reported and resolved by paper order") {
    const Table& t = Table::builtin();
    // SP 4.5 is the negation of SP 4.2's star completion
    const SignPattern s = parse_pattern("0-+/00-/+00");
    const auto all = t.find_all(s);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == "4.2");
    CHECK(all[1] == "4.5");
    CHECK(t.find(s)->entry->id == "4.2");
    // both rows carry the same printed label, so the overlap is harmless
    CHECK(t.by_id("4.2")->label == t.by_id("4.5")->label);
}

TEST_CASE("witness expansion covers plus-minus cells combinatorially") {
    const Table& t = Table::builtin();
    const TableEntry* e = t.by_id("19.2");
    REQUIRE(e != nullptr);
    REQUIRE(e->witnesses.size() == 2);
    // a22 is starred and listed with both signs
    CHECK(e->witnesses[0].instances(3).size() == 2);
    for (const RealMatrix& x : e->witnesses[1].instances(3)) CHECK(x(0, 0) == 2.0);
}

TEST_CASE("suspect flags cover the known transcription problems") {
    const Table& t = Table::builtin();
    for (const char* id : {"10.5", "16.7", "17.7", "18.4", "21.8", "21.9", "26.7"}) {
        const TableEntry* e = t.by_id(id);
        REQUIRE(e != nullptr);
        CHECK(e->suspect);
    }
    CHECK_FALSE(t.by_id("8.2")->suspect);
}

TEST_CASE("table parse rejects malformed input") {
    CHECK_THROWS_AS(Table::parse("{"), nlohmann::json::exception);
    CHECK_THROWS_AS(Table::load("/nonexistent/table.json"), ParseError);
}
