#include "algpos/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace algpos {

Digraph::Digraph(int n, std::uint64_t edges) : n_(n), edges_(edges) {
    if (n < 1 || n > 8) throw DimensionMismatch("digraph order must be in [1,8]");
}

int Digraph::edge_count() const {
    int c = 0;
    for (int i = 0; i < n_ * n_; ++i) c += edges_ >> i & 1u;
    return c;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

std::string Digraph::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (auto [i, j] : edges()) {
        if (!first) out << ',';
        first = false;
        out << i + 1 << "->" << j + 1;
    }
    return out.str();
}

Digraph digraph_of(const SignPattern& s) {
    Digraph g(s.n());
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j)
            if (s(i, j) != Sign::Zero) g.add_edge(i, j);
    return g;
}

Digraph reverse(const Digraph& g) {
    Digraph out(g.n());
    for (auto [i, j] : g.edges()) out.add_edge(j, i);
    return out;
}

namespace {

// Tarjan's strongly connected components
struct Tarjan {
    const Digraph& g;
    std::vector<int> index, low, stack;
    std::vector<char> on_stack;
    int next = 0, components = 0;

    explicit Tarjan(const Digraph& graph)
        : g(graph), index(graph.n(), -1), low(graph.n(), 0), on_stack(graph.n(), 0) {}

    void visit(int v) {
        index[v] = low[v] = next++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w = 0; w < g.n(); ++w) {
            if (!g.has_edge(v, w) || v == w) continue;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            ++components;
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                if (w == v) break;
            }
        }
    }
};

}  // namespace

bool strongly_connected(const Digraph& g) {
    if (g.n() == 1) return true;
    Tarjan t(g);
    t.visit(0);
    if (t.next != g.n()) return false;  // not even weakly reachable from 0
    return t.components == 1;
}

Digraph digraph_canonical(const Digraph& g) {
    const int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        for (int rev = 0; rev < 2; ++rev) {
            std::uint64_t enc = 0;
            for (auto [i, j] : g.edges()) {
                int a = perm[i], b = perm[j];
                if (rev) std::swap(a, b);
                enc |= std::uint64_t{1} << (a * n + b);
            }
            best = std::min(best, enc);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Digraph(n, best);
}

bool digraph_equivalent(const Digraph& g1, const Digraph& g2) {
    if (g1.n() != g2.n()) return false;
    return digraph_canonical(g1) == digraph_canonical(g2);
}

std::vector<Digraph> enumerate_irreducible_3digraphs() {
    std::vector<Digraph> reps;
    for (std::uint64_t mask = 0; mask < 512; ++mask) {
        Digraph g(3, mask);
        if (!strongly_connected(g)) continue;
        Digraph canon = digraph_canonical(g);
        bool fresh = std::none_of(reps.begin(), reps.end(),
                                  [&](const Digraph& r) { return r == canon; });
        if (fresh) reps.push_back(canon);
    }
    std::sort(reps.begin(), reps.end(), [](const Digraph& a, const Digraph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return a.encoding() < b.encoding();
    });
    return reps;
}

}  // namespace algpos
