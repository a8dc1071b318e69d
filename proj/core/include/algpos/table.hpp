#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algpos/digraph.hpp"
#include "algpos/matrix.hpp"
#include "algpos/sign_pattern.hpp"

namespace algpos {

// Arithmetic over the entry symbols a11..ann of a matrix: +, -, *, /, ^2,
// numeric literals, parentheses. Compiled to a small stack program.
class Expr {
  public:
    static Expr parse(std::string_view text, int n = 3);  // throws ParseError
    double eval(const RealMatrix& x) const;
    const std::string& text() const { return text_; }

  private:
    enum class OpCode : std::uint8_t { Push, Load, Add, Sub, Mul, Div, Neg, Square };
    struct Op {
        OpCode code;
        double value = 0.0;
        int i = 0, j = 0;
    };
    std::string text_;
    std::vector<Op> prog_;
};

// Strict chain inequality: every lhs expression < every rhs expression.
struct ChainInequality {
    std::vector<Expr> lhs;
    std::vector<Expr> rhs;

    bool holds(const RealMatrix& x) const;
    // min over rhs minus max over lhs; positive iff the chain holds.
    double margin(const RealMatrix& x) const;
};

enum class TemplateCell : std::int8_t { Minus = -1, Zero = 0, Plus = 1, Star = 2 };

// Table row template: a sign pattern whose nonzero cells may be starred
// (either sign). Text format like "0+*/00+/-00".
class PatternTemplate {
  public:
    static PatternTemplate parse(std::string_view text);

    int n() const { return n_; }
    TemplateCell operator()(int i, int j) const { return c_[static_cast<size_t>(i) * n_ + j]; }
    bool matches(const SignPattern& s) const;
    Digraph digraph() const;
    int star_count() const;
    std::vector<SignPattern> completions() const;
    std::string to_string() const;

  private:
    int n_ = 0;
    std::vector<TemplateCell> c_;
};

enum class Verdict { RAP, AAP, DNA };
std::string_view verdict_name(Verdict v);
Verdict verdict_from(std::string_view name);

// One printed witness sentence: expected AP status plus candidate values per
// entry; multi-valued cells expand combinatorially.
struct WitnessSpec {
    bool expect_ap = false;
    std::vector<std::pair<std::pair<int, int>, std::vector<double>>> cells;
    std::string note;

    std::vector<RealMatrix> instances(int n) const;
};

struct TableEntry {
    std::string id;
    int digraph_id = 0;
    PatternTemplate tmpl;
    Verdict label = Verdict::DNA;
    std::vector<ChainInequality> condition;  // empty when the row has none
    bool has_recipe = false;
    bool suspect = false;
    bool supplement = false;
    std::string suspect_note;
    std::string note;
    std::vector<WitnessSpec> witnesses;
};

// The classification table. The shipped file is the single source of truth
// for the appendix content; a copy is embedded in the library at build time.
class Table {
  public:
    static const Table& builtin();
    static Table parse(std::string_view json_text);
    static Table load(const std::string& path);

    int version() const { return version_; }
    const std::vector<TableEntry>& entries() const { return entries_; }
    const TableEntry* by_id(std::string_view id) const;

    struct Match {
        const TableEntry* entry;
        EquivTransform transform;  // maps the queried pattern onto the template
    };
    // First entry, in file (= paper) order, matched by any orbit member of s.
    std::optional<Match> find(const SignPattern& s) const;
    // Ids of every matching entry; more than one means the printed rows overlap.
    std::vector<std::string> find_all(const SignPattern& s) const;

  private:
    int version_ = 0;
    std::vector<TableEntry> entries_;
};

}  // namespace algpos
