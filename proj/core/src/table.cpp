#include "algpos/table.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace algpos {

namespace detail {
const char* appendix_table_json();  // generated at build time from the data file
}

// --- Expr -------------------------------------------------------------------

namespace {

struct ExprParser {
    std::string_view text;
    size_t pos = 0;
    int n;
    std::vector<Expr>* unused = nullptr;

    char peek() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

}  // namespace

Expr Expr::parse(std::string_view text, int n) {
    Expr out;
    out.text_ = std::string(text);
    ExprParser p{text, 0, n};
    // recursive descent straight into the stack program
    struct Builder {
        ExprParser& p;
        std::vector<Op>& prog;

        void expr() {
            term();
            while (true) {
                if (p.eat('+')) {
                    term();
                    prog.push_back({OpCode::Add});
                } else if (p.eat('-')) {
                    term();
                    prog.push_back({OpCode::Sub});
                } else {
                    break;
                }
            }
        }
        void term() {
            factor();
            while (true) {
                if (p.eat('*')) {
                    factor();
                    prog.push_back({OpCode::Mul});
                } else if (p.eat('/')) {
                    factor();
                    prog.push_back({OpCode::Div});
                } else {
                    break;
                }
            }
        }
        void factor() {
            if (p.eat('-')) {
                factor();
                prog.push_back({OpCode::Neg});
                return;
            }
            primary();
            if (p.eat('^')) {
                if (!p.eat('2')) throw ParseError("only ^2 is supported");
                prog.push_back({OpCode::Square});
            }
        }
        void primary() {
            const char c = p.peek();
            if (c == '(') {
                p.eat('(');
                expr();
                if (!p.eat(')')) throw ParseError("missing ')'");
                return;
            }
            if (c == 'a') {
                ++p.pos;
                if (p.pos + 1 >= p.text.size() + 1) throw ParseError("truncated symbol");
                const char ci = p.text[p.pos], cj = p.pos + 1 < p.text.size() ? p.text[p.pos + 1] : '\0';
                if (!std::isdigit(static_cast<unsigned char>(ci)) ||
                    !std::isdigit(static_cast<unsigned char>(cj)))
                    throw ParseError("bad entry symbol");
                const int i = ci - '1', j = cj - '1';
                if (i < 0 || i >= p.n || j < 0 || j >= p.n)
                    throw ParseError("entry symbol out of range");
                p.pos += 2;
                prog.push_back({OpCode::Load, 0.0, i, j});
                return;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                size_t start = p.pos;
                while (p.pos < p.text.size() &&
                       (std::isdigit(static_cast<unsigned char>(p.text[p.pos])) ||
                        p.text[p.pos] == '.'))
                    ++p.pos;
                const double v = std::stod(std::string(p.text.substr(start, p.pos - start)));
                prog.push_back({OpCode::Push, v});
                return;
            }
            throw ParseError("unexpected character in expression: '" + std::string(1, c) + "'");
        }
    };
    Builder b{p, out.prog_};
    b.expr();
    if (p.peek() != '\0') throw ParseError("trailing characters in expression");
    return out;
}

double Expr::eval(const RealMatrix& x) const {
    double stack[16];
    int top = 0;
    for (const Op& op : prog_) {
        switch (op.code) {
            case OpCode::Push: stack[top++] = op.value; break;
            case OpCode::Load: stack[top++] = x(op.i, op.j); break;
            case OpCode::Add: --top; stack[top - 1] += stack[top]; break;
            case OpCode::Sub: --top; stack[top - 1] -= stack[top]; break;
            case OpCode::Mul: --top; stack[top - 1] *= stack[top]; break;
            case OpCode::Div: --top; stack[top - 1] /= stack[top]; break;
            case OpCode::Neg: stack[top - 1] = -stack[top - 1]; break;
            case OpCode::Square: stack[top - 1] *= stack[top - 1]; break;
        }
    }
    return stack[0];
}

bool ChainInequality::holds(const RealMatrix& x) const { return margin(x) > 0.0; }

double ChainInequality::margin(const RealMatrix& x) const {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const Expr& e : lhs) lo = std::max(lo, e.eval(x));
    for (const Expr& e : rhs) hi = std::min(hi, e.eval(x));
    return hi - lo;
}

// --- PatternTemplate ---------------------------------------------------------

PatternTemplate PatternTemplate::parse(std::string_view text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == '/') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    rows.push_back(cur);
    PatternTemplate t;
    t.n_ = static_cast<int>(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != t.n_) throw ParseError("template is not square");
        for (char c : r) {
            switch (c) {
                case '+': t.c_.push_back(TemplateCell::Plus); break;
                case '-': t.c_.push_back(TemplateCell::Minus); break;
                case '0': t.c_.push_back(TemplateCell::Zero); break;
                case '*': t.c_.push_back(TemplateCell::Star); break;
                default: throw ParseError(std::string("bad template cell '") + c + "'");
            }
        }
    }
    return t;
}

bool PatternTemplate::matches(const SignPattern& s) const {
    if (s.n() != n_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const TemplateCell t = (*this)(i, j);
            const Sign g = s(i, j);
            if (t == TemplateCell::Star) {
                if (g == Sign::Zero) return false;
            } else if (static_cast<int>(t) != static_cast<int>(g)) {
                return false;
            }
        }
    return true;
}

Digraph PatternTemplate::digraph() const {
    Digraph g(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if ((*this)(i, j) != TemplateCell::Zero) g.add_edge(i, j);
    return g;
}

int PatternTemplate::star_count() const {
    int c = 0;
    for (auto cell : c_) c += cell == TemplateCell::Star;
    return c;
}

std::vector<SignPattern> PatternTemplate::completions() const {
    std::vector<int> stars;
    for (int k = 0; k < n_ * n_; ++k)
        if (c_[k] == TemplateCell::Star) stars.push_back(k);
    std::vector<SignPattern> out;
    for (int bits = 0; bits < (1 << stars.size()); ++bits) {
        std::vector<Sign> cells(c_.size());
        for (size_t k = 0; k < c_.size(); ++k)
            cells[k] = c_[k] == TemplateCell::Star ? Sign::Plus
                                                   : static_cast<Sign>(static_cast<int>(c_[k]));
        for (size_t s = 0; s < stars.size(); ++s)
            cells[stars[s]] = (bits >> s & 1) ? Sign::Minus : Sign::Plus;
        out.emplace_back(n_, std::move(cells));
    }
    return out;
}

std::string PatternTemplate::to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (i) out += '/';
        for (int j = 0; j < n_; ++j) {
            switch ((*this)(i, j)) {
                case TemplateCell::Plus: out += '+'; break;
                case TemplateCell::Minus: out += '-'; break;
                case TemplateCell::Zero: out += '0'; break;
                case TemplateCell::Star: out += '*'; break;
            }
        }
    }
    return out;
}

// --- verdicts / witnesses ----------------------------------------------------

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::RAP: return "RAP";
        case Verdict::AAP: return "AAP";
        case Verdict::DNA: return "DNA";
    }
    return "?";
}

Verdict verdict_from(std::string_view name) {
    if (name == "RAP") return Verdict::RAP;
    if (name == "AAP") return Verdict::AAP;
    if (name == "DNA") return Verdict::DNA;
    throw ParseError("bad verdict label '" + std::string(name) + "'");
}

std::vector<RealMatrix> WitnessSpec::instances(int n) const {
    std::vector<RealMatrix> out{RealMatrix(n)};
    for (const auto& [pos, values] : cells) {
        std::vector<RealMatrix> next;
        for (const RealMatrix& base : out)
            for (double v : values) {
                RealMatrix m = base;
                m(pos.first, pos.second) = v;
                next.push_back(std::move(m));
            }
        out = std::move(next);
    }
    return out;
}

// --- Table --------------------------------------------------------------------

namespace {

TableEntry entry_from_json(const nlohmann::json& j) {
    TableEntry e;
    e.id = j.at("id").get<std::string>();
    e.digraph_id = j.at("digraph").get<int>();
    e.tmpl = PatternTemplate::parse(j.at("template").get<std::string>());
    e.label = verdict_from(j.at("label").get<std::string>());
    e.has_recipe = j.value("recipe", false);
    e.supplement = j.value("supplement", false);
    if (j.contains("suspect")) {
        e.suspect = true;
        e.suspect_note = j["suspect"].get<std::string>();
    }
    e.note = j.value("note", std::string{});
    if (j.contains("condition")) {
        for (const auto& chain : j["condition"]) {
            ChainInequality ci;
            for (const auto& s : chain.at("lhs")) ci.lhs.push_back(Expr::parse(s.get<std::string>()));
            for (const auto& s : chain.at("rhs")) ci.rhs.push_back(Expr::parse(s.get<std::string>()));
            e.condition.push_back(std::move(ci));
        }
    }
    if (j.contains("witnesses")) {
        for (const auto& w : j["witnesses"]) {
            WitnessSpec spec;
            spec.expect_ap = w.at("ap").get<bool>();
            spec.note = w.value("note", std::string{});
            for (const auto& [key, vals] : w.at("set").items()) {
                if (key.size() != 3 || key[0] != 'a') throw ParseError("bad witness key " + key);
                const int i = key[1] - '1', jj = key[2] - '1';
                std::vector<double> values = vals.get<std::vector<double>>();
                spec.cells.push_back({{i, jj}, std::move(values)});
            }
            e.witnesses.push_back(std::move(spec));
        }
    }
    return e;
}

}  // namespace

Table Table::parse(std::string_view json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Table t;
    t.version_ = j.at("version").get<int>();
    for (const auto& je : j.at("entries")) t.entries_.push_back(entry_from_json(je));
    return t;
}

Table Table::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const Table& Table::builtin() {
    static const Table t = Table::parse(detail::appendix_table_json());
    return t;
}

const TableEntry* Table::by_id(std::string_view id) const {
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

std::optional<Table::Match> Table::find(const SignPattern& s) const {
    const auto group = equiv_group(s.n());
    for (const auto& e : entries_) {
        if (e.tmpl.n() != s.n()) continue;
        for (const auto& t : group)
            if (e.tmpl.matches(t.apply(s))) return Match{&e, t};
    }
    return std::nullopt;
}

std::vector<std::string> Table::find_all(const SignPattern& s) const {
    const auto group = equiv_group(s.n());
    std::vector<std::string> out;
    for (const auto& e : entries_) {
        if (e.tmpl.n() != s.n()) continue;
        for (const auto& t : group)
            if (e.tmpl.matches(t.apply(s))) {
                out.push_back(e.id);
                break;
            }
    }
    return out;
}

}  // namespace algpos
