#include <doctest.h>

#include <map>

#include "algpos/digraph.hpp"
#include "helpers.hpp"

using namespace algpos;

TEST_CASE("digraph_of reads nonzero cells") {
    const Digraph cyc = digraph_of(parse_pattern("0+0/00+/+00"));
    CHECK(cyc.edge_count() == 3);
    CHECK(cyc.to_string() == "1->2,2->3,3->1");

    // the worked example keeps its loop at vertex 3
    const Digraph ex = digraph_of(parse_pattern("0+0/+0-/+0+"));
    CHECK(ex.edge_count() == 5);
    CHECK(ex.has_edge(2, 2));
    CHECK(ex.has_edge(1, 2));

    CHECK(digraph_of(SignPattern(3)).edge_count() == 0);
}

TEST_CASE("strong connectivity") {
    CHECK(strongly_connected(digraph_of(parse_pattern("0+0/00+/+00"))));
    CHECK(strongly_connected(digraph_of(parse_pattern("0+/+0"))));
    // B matrix of the worked example is reducible
    CHECK_FALSE(strongly_connected(digraph_of(parse_pattern("0+0/+00/+++"))));
    CHECK(strongly_connected(Digraph(1)));
    CHECK_FALSE(strongly_connected(Digraph(2)));
}

TEST_CASE("strong connectivity is reversal invariant and loop blind") {
    testutil::Rng rng(0xD16);
    for (int trial = 0; trial < 200; ++trial) {
        Digraph g(3, rng.next() & 0x1FF);
        CHECK(strongly_connected(g) == strongly_connected(reverse(g)));
        Digraph noloops(3, g.encoding() & ~0x111ull);  // clear cells (i,i)
        Digraph withloops(3, g.encoding() | 0x111ull);
        CHECK(strongly_connected(noloops) == strongly_connected(withloops));
    }
}

TEST_CASE("digraph canonical form and equivalence") {
    const Digraph cyc = digraph_of(parse_pattern("0+0/00+/+00"));
    CHECK(digraph_equivalent(cyc, reverse(cyc)));
    CHECK(digraph_canonical(digraph_canonical(cyc)) == digraph_canonical(cyc));

    // the worked example's digraph is equivalent to its transpose-pattern digraph
    const SignPattern example = parse_pattern("0+0/+0-/+0+");
    EquivTransform tp = EquivTransform::identity(3);
    tp.transposed = true;
    CHECK(digraph_equivalent(digraph_of(example), digraph_of(tp.apply(example))));
    CHECK_FALSE(digraph_equivalent(cyc, digraph_of(example)));
}

TEST_CASE("digraph_of commutes with the pattern equivalence group") {
    testutil::Rng rng(0xD1C3);
    for (int trial = 0; trial < 20; ++trial) {
        SignPattern s(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s(i, j) = static_cast<Sign>(static_cast<int>(rng.below(3)) - 1);
        for (const auto& t : equiv_group(3))
            CHECK(digraph_equivalent(digraph_of(t.apply(s)), digraph_of(s)));
    }
}

TEST_CASE("the 26 irreducible 3-vertex digraph classes") {
    const auto reps = enumerate_irreducible_3digraphs();
    CHECK(reps.size() == 26);
    std::map<int, int> census;
    for (const auto& g : reps) {
        CHECK(strongly_connected(g));
        CHECK(digraph_canonical(g) == g);
        census[g.edge_count()] += 1;
    }
    const std::map<int, int> expected{{3, 1}, {4, 3}, {5, 6}, {6, 8}, {7, 5}, {8, 2}, {9, 1}};
    CHECK(census == expected);
}
