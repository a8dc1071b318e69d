#include "algpos/sign_pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "algpos/digraph.hpp"

namespace algpos {

namespace {

// splitmix64: deterministic across platforms, unlike <random> distributions
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double u01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull * (salt + 1));
    splitmix64(s);
    return s;
}

}  // namespace

char sign_char(Sign s) {
    switch (s) {
        case Sign::Minus: return '-';
        case Sign::Plus: return '+';
        default: return '0';
    }
}

Sign sign_of(double x, double zero_tol) {
    if (std::fabs(x) <= zero_tol) return Sign::Zero;
    return x > 0 ? Sign::Plus : Sign::Minus;
}

SignPattern::SignPattern(int n) : n_(n), c_(static_cast<size_t>(n) * n, Sign::Zero) {
    if (n < 1) throw DimensionMismatch("pattern dimension must be >= 1");
}

SignPattern::SignPattern(int n, std::vector<Sign> cells) : n_(n), c_(std::move(cells)) {
    if (n < 1) throw DimensionMismatch("pattern dimension must be >= 1");
    if (c_.size() != static_cast<size_t>(n) * n)
        throw DimensionMismatch("cell count does not match dimension");
}

std::string SignPattern::to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (i) out += '/';
        for (int j = 0; j < n_; ++j) out += sign_char((*this)(i, j));
    }
    return out;
}

SignPattern parse_pattern(std::string_view text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == '/') {
            rows.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    rows.push_back(cur);
    const int n = static_cast<int>(rows.size());
    std::vector<Sign> cells;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw ParseError("pattern is not square");
        for (char c : r) {
            switch (c) {
                case '+': cells.push_back(Sign::Plus); break;
                case '-': cells.push_back(Sign::Minus); break;
                case '0': cells.push_back(Sign::Zero); break;
                default: throw ParseError(std::string("bad pattern cell '") + c + "'");
            }
        }
    }
    return SignPattern(n, std::move(cells));
}

EquivTransform EquivTransform::identity(int n) {
    EquivTransform t;
    t.perm.resize(n);
    std::iota(t.perm.begin(), t.perm.end(), 0);
    return t;
}

SignPattern EquivTransform::apply(const SignPattern& s) const {
    const int n = s.n();
    SignPattern out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = perm[i], b = perm[j];
            if (transposed) std::swap(a, b);
            Sign v = s(i, j);
            if (negated) v = static_cast<Sign>(-static_cast<int>(v));
            out(a, b) = v;
        }
    return out;
}

RealMatrix EquivTransform::apply(const RealMatrix& m) const {
    const int n = m.n();
    RealMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = perm[i], b = perm[j];
            if (transposed) std::swap(a, b);
            out(a, b) = negated ? -m(i, j) : m(i, j);
        }
    return out;
}

EquivTransform EquivTransform::then(const EquivTransform& next) const {
    // permutation similarity, transposition and negation pairwise commute
    EquivTransform out;
    out.perm.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) out.perm[i] = next.perm[perm[i]];
    out.transposed = transposed != next.transposed;
    out.negated = negated != next.negated;
    return out;
}

EquivTransform EquivTransform::inverse() const {
    EquivTransform out;
    out.perm.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) out.perm[perm[i]] = static_cast<int>(i);
    out.transposed = transposed;
    out.negated = negated;
    return out;
}

std::string EquivTransform::to_string() const {
    std::ostringstream out;
    out << "perm(";
    for (size_t i = 0; i < perm.size(); ++i) out << (i ? "," : "") << perm[i] + 1;
    out << ")";
    if (transposed) out << " transpose";
    if (negated) out << " negate";
    return out.str();
}

std::vector<EquivTransform> equiv_group(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<EquivTransform> out;
    do {
        for (int t = 0; t < 2; ++t)
            for (int g = 0; g < 2; ++g) {
                EquivTransform e;
                e.perm = p;
                e.transposed = t != 0;
                e.negated = g != 0;
                out.push_back(std::move(e));
            }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

SignPattern pattern_of(const RealMatrix& x, double zero_tol) {
    const int n = x.n();
    SignPattern s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = sign_of(x(i, j), zero_tol);
    return s;
}

RealMatrix sample(const SignPattern& s, std::uint64_t seed, MagnitudeProfile profile) {
    const int n = s.n();
    std::uint64_t state = mix_seed(seed, 0x5a5a5a5a);
    RealMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Sign g = s(i, j);
            if (g == Sign::Zero) continue;
            const double e = profile.log10_lo + u01(state) * (profile.log10_hi - profile.log10_lo);
            out(i, j) = static_cast<int>(g) * std::pow(10.0, e);
        }
    return out;
}

std::pair<SignPattern, SignPattern> decompose(const SignPattern& s) {
    const int n = s.n();
    SignPattern plus(n), minus(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (s(i, j) == Sign::Plus) plus(i, j) = Sign::Plus;
            if (s(i, j) == Sign::Minus) minus(i, j) = Sign::Minus;
        }
    return {plus, minus};
}

SignPattern b_matrix(const SignPattern& s) {
    const int n = s.n();
    SignPattern out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (s(i, j) == Sign::Plus || s(j, i) == Sign::Minus) out(i, j) = Sign::Plus;
    return out;
}

bool theorem4_excludes(const SignPattern& s) {
    return strongly_connected(digraph_of(s)) && !strongly_connected(digraph_of(b_matrix(s)));
}

bool row_col_necessary(const SignPattern& s) {
    const int n = s.n();
    for (Sign want : {Sign::Plus, Sign::Minus}) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            bool row = false, col = false;
            for (int j = 0; j < n; ++j) {
                row |= s(i, j) == want;
                col |= s(j, i) == want;
            }
            ok = row && col;
        }
        if (ok) return true;
    }
    return false;
}

std::vector<SignPattern> orbit(const SignPattern& s) {
    std::set<SignPattern> seen;
    for (const auto& t : equiv_group(s.n())) seen.insert(t.apply(s));
    return {seen.begin(), seen.end()};
}

std::pair<SignPattern, EquivTransform> canonical_form(const SignPattern& s) {
    std::optional<SignPattern> best;
    EquivTransform best_t = EquivTransform::identity(s.n());
    for (const auto& t : equiv_group(s.n())) {
        SignPattern img = t.apply(s);
        if (!best || img < *best) {
            best = std::move(img);
            best_t = t;
        }
    }
    return {*best, best_t};
}

std::optional<EquivTransform> equivalent(const SignPattern& s1, const SignPattern& s2) {
    if (s1.n() != s2.n()) return std::nullopt;
    for (const auto& t : equiv_group(s1.n()))
        if (t.apply(s1) == s2) return t;
    return std::nullopt;
}

// --- subclass relation -----------------------------------------------------

namespace {

enum class ShiftRule { Zero, PosSmall, PosLarge, NegSmall, NegLarge };

const char* rule_name(ShiftRule r) {
    switch (r) {
        case ShiftRule::Zero: return "zero shift";
        case ShiftRule::PosSmall: return "small positive shift";
        case ShiftRule::PosLarge: return "large positive shift";
        case ShiftRule::NegSmall: return "small negative shift";
        case ShiftRule::NegLarge: return "large negative shift";
    }
    return "?";
}

Sign shift_sign(Sign b, ShiftRule r) {
    switch (r) {
        case ShiftRule::Zero: return b;
        case ShiftRule::PosSmall: return b == Sign::Zero ? Sign::Plus : b;
        case ShiftRule::PosLarge: return Sign::Plus;
        case ShiftRule::NegSmall: return b == Sign::Zero ? Sign::Minus : b;
        case ShiftRule::NegLarge: return Sign::Minus;
    }
    return b;
}

bool offdiag_equal(const SignPattern& x, const SignPattern& y) {
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j)
            if (i != j && x(i, j) != y(i, j)) return false;
    return true;
}

}  // namespace

SubclassVerdict subclass_check(const SignPattern& b, const SignPattern& a,
                               std::uint64_t seed, int samples) {
    if (b.n() != a.n()) throw DimensionMismatch("subclass check needs equal dimensions");
    const int n = a.n();
    const auto group = equiv_group(n);

    // sound uniform-shift rules against every orbit member of A
    for (const auto& g : group) {
        const SignPattern target = g.apply(a);
        if (!offdiag_equal(target, b)) continue;
        for (ShiftRule r : {ShiftRule::Zero, ShiftRule::PosSmall, ShiftRule::PosLarge,
                            ShiftRule::NegSmall, ShiftRule::NegLarge}) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) ok = shift_sign(b(i, i), r) == target(i, i);
            if (ok) return SubclassHolds{rule_name(r), g.inverse()};
        }
    }

    // randomized falsification: for a sampled member, try every shift
    // interval delimited by the diagonal breakpoints
    const SignPattern a_canon = canonical_form(a).first;
    for (int s = 0; s < samples; ++s) {
        const RealMatrix x = sample(b, mix_seed(seed, static_cast<std::uint64_t>(s)));
        std::vector<double> breaks;
        for (int i = 0; i < n; ++i) breaks.push_back(-x(i, i));
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        std::vector<double> candidates{0.0, breaks.front() - 1.0, breaks.back() + 1.0};
        for (double c : breaks) candidates.push_back(c);
        for (size_t i = 0; i + 1 < breaks.size(); ++i)
            candidates.push_back(0.5 * (breaks[i] + breaks[i + 1]));
        bool reachable = false;
        const double ztol = 1e-9 * (1.0 + x.max_abs());
        for (double alpha : candidates) {
            const SignPattern p = pattern_of(x.shifted(alpha), ztol);
            if (canonical_form(p).first == a_canon) {
                reachable = true;
                break;
            }
        }
        if (!reachable) return SubclassFails{x};
    }
    return SubclassUnknown{};
}

std::string subclass_verdict_string(const SubclassVerdict& v) {
    if (const auto* h = std::get_if<SubclassHolds>(&v)) return "Holds (" + h->rule + ")";
    if (std::holds_alternative<SubclassFails>(v)) return "Fails";
    return "Unknown";
}

}  // namespace algpos
