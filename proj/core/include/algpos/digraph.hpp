#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "algpos/sign_pattern.hpp"

namespace algpos {

// Directed graph on vertices {0..n-1}, loops allowed, adjacency kept as an
// n*n bitstring in row-major order (n <= 8).
class Digraph {
  public:
    explicit Digraph(int n, std::uint64_t edges = 0);

    int n() const { return n_; }
    std::uint64_t encoding() const { return edges_; }
    bool has_edge(int i, int j) const { return edges_ >> (i * n_ + j) & 1u; }
    void add_edge(int i, int j) { edges_ |= std::uint64_t{1} << (i * n_ + j); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    // Edge list "1->2,2->3,3->3" with 1-based vertices, loops as i->i.
    std::string to_string() const;

    bool operator==(const Digraph& rhs) const = default;

  private:
    int n_;
    std::uint64_t edges_;
};

Digraph digraph_of(const SignPattern& s);
Digraph reverse(const Digraph& g);

// Tarjan over the adjacency bits; loops are irrelevant to the verdict.
bool strongly_connected(const Digraph& g);

// Minimum adjacency encoding over vertex permutations x {identity, full
// edge reversal} (2*n! elements).
Digraph digraph_canonical(const Digraph& g);
bool digraph_equivalent(const Digraph& g1, const Digraph& g2);

// All 512 edge subsets on 3 vertices, filtered to strongly connected,
// deduplicated by canonical form; representatives sorted by (edge count,
// encoding).
std::vector<Digraph> enumerate_irreducible_3digraphs();

}  // namespace algpos
