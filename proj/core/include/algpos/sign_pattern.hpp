#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "algpos/matrix.hpp"

namespace algpos {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

char sign_char(Sign s);
Sign sign_of(double x, double zero_tol = 0.0);

// n x n grid over {-,0,+}. Text format: rows separated by '/', cells from
// "+-0", e.g. "0+0/+0-/+0+".
class SignPattern {
  public:
    explicit SignPattern(int n);
    SignPattern(int n, std::vector<Sign> cells);

    int n() const { return n_; }
    Sign operator()(int i, int j) const { return c_[static_cast<size_t>(i) * n_ + j]; }
    Sign& operator()(int i, int j) { return c_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<Sign>& cells() const { return c_; }

    std::string to_string() const;

    // Lexicographic over row-major cells with Minus < Zero < Plus.
    auto operator<=>(const SignPattern& rhs) const = default;

  private:
    int n_;
    std::vector<Sign> c_;
};

SignPattern parse_pattern(std::string_view text);

// Group element of the order 2*2*n! pattern equivalence group: permutation
// similarity, optional transposition, optional negation. The three
// components commute, so composition and inversion are componentwise.
struct EquivTransform {
    std::vector<int> perm;  // image of each index
    bool transposed = false;
    bool negated = false;

    static EquivTransform identity(int n);
    SignPattern apply(const SignPattern& s) const;
    RealMatrix apply(const RealMatrix& a) const;
    EquivTransform then(const EquivTransform& next) const;
    EquivTransform inverse() const;
    std::string to_string() const;
};

std::vector<EquivTransform> equiv_group(int n);

SignPattern pattern_of(const RealMatrix& x, double zero_tol = 0.0);

struct MagnitudeProfile {
    double log10_lo = -2.0;
    double log10_hi = 2.0;
};

// Member of Q(S) with log-uniform magnitudes; deterministic under seed.
RealMatrix sample(const SignPattern& s, std::uint64_t seed, MagnitudeProfile profile = {});

// S = plus part + minus part, cellwise.
std::pair<SignPattern, SignPattern> decompose(const SignPattern& s);

// The {0,+} pattern keeping plus cells and folding negated-transposed minus
// cells in: plus at (i,j) iff S(i,j)=+ or S(j,i)=-.
SignPattern b_matrix(const SignPattern& s);

// True iff S is irreducible and b_matrix(S) is reducible; true proves that
// S does not allow algebraic positivity.
bool theorem4_excludes(const SignPattern& s);

// Every row and column contains a +, or every row and column contains a -.
// False proves DNA.
bool row_col_necessary(const SignPattern& s);

std::vector<SignPattern> orbit(const SignPattern& s);

// Lexicographically least orbit member plus a transform t with
// t.apply(s) == canonical.
std::pair<SignPattern, EquivTransform> canonical_form(const SignPattern& s);

// A transform t with t.apply(s1) == s2, if the patterns are equivalent.
std::optional<EquivTransform> equivalent(const SignPattern& s1, const SignPattern& s2);

// --- scalar-shift subclass relation  B <= A ------------------------------

struct SubclassHolds {
    std::string rule;  // which uniform-shift rule applied
    EquivTransform align;
};
struct SubclassFails {
    RealMatrix witness;  // member of Q(B) that no shift maps into A's class
};
struct SubclassUnknown {};
using SubclassVerdict = std::variant<SubclassHolds, SubclassFails, SubclassUnknown>;

// Decides B <= A by sound uniform-shift rules; falls back to randomized
// falsification over the diagonal breakpoints, and reports Unknown when
// neither settles it. Throws DimensionMismatch.
SubclassVerdict subclass_check(const SignPattern& b, const SignPattern& a,
                               std::uint64_t seed = 1729, int samples = 32);

std::string subclass_verdict_string(const SubclassVerdict& v);

}  // namespace algpos
