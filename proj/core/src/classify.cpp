#include "algpos/classify.hpp"

#include <cmath>
#include <sstream>

#include "algpos/digraph.hpp"

namespace algpos {

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

bool uniform_offdiag(const SignPattern& s) {
    bool no_minus = true, no_plus = true;
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j) {
            if (i == j) continue;
            no_minus &= s(i, j) != Sign::Minus;
            no_plus &= s(i, j) != Sign::Plus;
        }
    return no_minus || no_plus;
}

}  // namespace

std::string_view evidence_kind_name(EvidenceKind k) {
    switch (k) {
        case EvidenceKind::Reducible: return "Reducible";
        case EvidenceKind::RowColFail: return "RowColFail";
        case EvidenceKind::Theorem4: return "Theorem4";
        case EvidenceKind::UniformOffdiag: return "UniformOffdiag";
        case EvidenceKind::Recipe: return "Recipe";
        case EvidenceKind::Table: return "Table";
        case EvidenceKind::SampledBoth: return "SampledBoth";
        case EvidenceKind::SampledAllAp: return "SampledAllAp";
        case EvidenceKind::SampledNoneAp: return "SampledNoneAp";
    }
    return "?";
}

std::string Evidence::to_string() const {
    std::ostringstream out;
    out << evidence_kind_name(kind);
    if (!table_id.empty()) out << "(" << table_id << ")";
    if (sample_count > 0) out << " over " << sample_count << " samples";
    if (!proof) out << " [candidate, not a proof]";
    return out.str();
}

Classification classify(const SignPattern& s, const ClassifyConfig& cfg, const Table& table) {
    if (s.n() < 2) throw DimensionMismatch("classification needs n >= 2");
    if (!strongly_connected(digraph_of(s)))
        return {Verdict::DNA, {EvidenceKind::Reducible}};
    if (!row_col_necessary(s))
        return {Verdict::DNA, {EvidenceKind::RowColFail}};
    if (theorem4_excludes(s))
        return {Verdict::DNA, {EvidenceKind::Theorem4}};
    if (uniform_offdiag(s))
        return {Verdict::RAP, {EvidenceKind::UniformOffdiag}};

    if (s.n() == 3) {
        const auto match = table.find(s);
        if (!match)
            throw TableMiss("no table row matches irreducible pattern " + s.to_string());
        Evidence ev{EvidenceKind::Table};
        ev.table_id = match->entry->id;
        return {match->entry->label, std::move(ev)};
    }

    // no table for this dimension: seeded sampling with the spectral oracle
    const std::uint64_t base = cfg.seed ^ fnv1a(s.to_string());
    std::optional<RealMatrix> ap_w, non_ap_w;
    int drawn = 0;
    for (; drawn < cfg.samples && !(ap_w && non_ap_w); ++drawn) {
        RealMatrix x = sample(s, base + static_cast<std::uint64_t>(drawn));
        auto& slot = eigen_ap_check(x, cfg.tol.eigen_tol) ? ap_w : non_ap_w;
        if (!slot) slot = std::move(x);
    }
    Evidence ev;
    ev.sample_count = drawn;
    if (ap_w && non_ap_w) {
        ev.kind = EvidenceKind::SampledBoth;
        ev.ap_witness = std::move(ap_w);
        ev.non_ap_witness = std::move(non_ap_w);
        return {Verdict::AAP, std::move(ev)};
    }
    ev.proof = false;
    if (ap_w) {
        ev.kind = EvidenceKind::SampledAllAp;
        ev.ap_witness = std::move(ap_w);
        return {Verdict::RAP, std::move(ev)};
    }
    ev.kind = EvidenceKind::SampledNoneAp;
    ev.non_ap_witness = std::move(non_ap_w);
    return {Verdict::DNA, std::move(ev)};
}

std::optional<bool> table_condition(const TableEntry& entry, const RealMatrix& x) {
    if (!entry.tmpl.matches(pattern_of(x)))
        throw TemplateMismatch("matrix pattern does not match template " +
                               entry.tmpl.to_string());
    if (entry.condition.empty()) return std::nullopt;
    for (const ChainInequality& c : entry.condition)
        if (!c.holds(x)) return false;
    return true;
}

// --- recipes ------------------------------------------------------------------

namespace {

// strict one-sided bound with visible slack
double above(double b) { return b > 0.0 ? 2.0 * b : b + 1.0; }
// two-sided constraint: deterministic interior point
double mid(double lo, double hi) { return 0.5 * (lo + hi); }

struct RecipeCoeffs {
    double k2, k1, k0;
};

double diag_bound(const RealMatrix& a, double k1, double k2) {
    // largest diagonal entry of -k1*A - k2*A^2
    const RealMatrix m = a.scaled(-k1) + (a * a).scaled(-k2);
    double best = m(0, 0);
    for (int i = 1; i < a.n(); ++i) best = std::max(best, m(i, i));
    return best;
}

RecipeCoeffs recipe_coeffs(const std::string& id, const RealMatrix& x) {
    const auto a = [&](int i, int j) { return x(i - 1, j - 1); };
    double k2, k1;
    if (id == "4.4") {
        k2 = 1.0;
        k1 = mid(0.0, a(1, 2) * a(2, 3) / -a(1, 3));
    } else if (id == "6.4") {
        k2 = -1.0;
        k1 = mid(0.0, a(1, 1));
    } else if (id == "8.4") {
        k2 = 1.0;
        k1 = mid(-a(1, 1), -a(1, 1) - a(2, 3) * a(3, 1) / a(2, 1));
    } else if (id == "9.2") {
        k2 = 1.0;
        k1 = mid(0.0, a(3, 1) * a(2, 3) / -a(2, 1));
    } else if (id == "10.4") {
        k2 = 1.0;
        k1 = mid(0.0, std::min(a(3, 1) * a(1, 2) / -a(3, 2), a(3, 1) * a(2, 3) / -a(2, 1)));
    } else if (id == "12.4") {
        k2 = -1.0;
        k1 = mid(a(2, 2), a(1, 1) + a(2, 2));
    } else if (id == "13.4") {
        k2 = -1.0;
        k1 = mid(a(3, 3), a(1, 1));
    } else if (id == "14.4") {
        k2 = 1.0;
        const double s = a(1, 1) + a(2, 2);
        k1 = mid(-s, -s - a(2, 3) * a(3, 1) / a(2, 1));
    } else if (id == "15.4") {
        k2 = 1.0;
        k1 = mid(-a(1, 1), -a(1, 1) - a(2, 3) * a(3, 1) / a(2, 1));
    } else if (id == "17.4") {
        k2 = 1.0;
        k1 = mid(-a(2, 2),
                 -a(2, 2) - std::max(a(2, 3) * a(3, 1) / a(2, 1), a(3, 1) * a(1, 2) / a(3, 2)));
    } else if (id == "18.4") {
        // the printed bound keeps its doubled first term; it dominates the
        // true diagonal deficit, so the certificate stays valid
        k2 = 1.0;
        k1 = 0.0;
        const double b1 = -a(1, 2) * a(2, 1) - a(1, 3) * a(3, 1) - a(1, 2) * a(2, 1) -
                          a(2, 3) * a(3, 2);
        const double b2 = -a(3, 2) * a(2, 3) - a(1, 3) * a(3, 1);
        return {k2, k1, above(std::max(b1, b2))};
    } else if (id == "19.4") {
        k2 = -1.0;
        k1 = mid(a(1, 1) + a(2, 2), a(2, 2) + a(3, 3));
    } else if (id == "20.4") {
        k2 = 1.0;
        const double s = a(1, 1) + a(3, 3);
        k1 = mid(-s, -s - a(1, 2) * a(2, 3) / a(1, 3));
    } else {
        throw RecipeViolation("no recipe registered for table row " + id);
    }
    return {k2, k1, above(diag_bound(x, k1, k2))};
}

}  // namespace

PolyCertificate recipe_certificate(const TableEntry& entry, const RealMatrix& x) {
    if (!entry.has_recipe)
        throw TemplateMismatch("table row " + entry.id + " carries no recipe");
    if (!entry.tmpl.matches(pattern_of(x)))
        throw TemplateMismatch("matrix pattern does not match template " +
                               entry.tmpl.to_string());
    const RecipeCoeffs rc = recipe_coeffs(entry.id, x);
    PolyCertificate cert;
    cert.offdiag_coeffs = {rc.k1, rc.k2};
    cert.k0 = rc.k0;
    const double norm = std::max(std::fabs(rc.k1), std::fabs(rc.k2));
    for (double& k : cert.offdiag_coeffs) k /= norm;
    cert.k0 /= norm;
    cert.margin = poly_eval_matrix(cert.poly(), x).min_entry();
    if (!(cert.margin > 0.0)) {
        std::ostringstream msg;
        msg << "recipe " << entry.id << " produced a non-positive entry (margin "
            << cert.margin << ", k2=" << rc.k2 << ", k1=" << rc.k1 << ", k0=" << rc.k0
            << ") on " << format_matrix(x);
        throw RecipeViolation(msg.str());
    }
    return cert;
}

// --- witness verification -------------------------------------------------------

int WitnessReport::matched() const {
    int c = 0;
    for (const auto& o : outcomes) c += o.matched;
    return c;
}

int WitnessReport::oracle_disagreements() const {
    int c = 0;
    for (const auto& o : outcomes)
        c += o.agreement != Agreement::Agree && o.agreement != Agreement::Borderline;
    return c;
}

double WitnessReport::match_rate() const {
    return outcomes.empty() ? 1.0 : static_cast<double>(matched()) / total();
}

WitnessReport verify_witnesses(const TableEntry& entry, const Tolerances& tol) {
    WitnessReport report;
    const int n = entry.tmpl.n();
    for (size_t w = 0; w < entry.witnesses.size(); ++w) {
        const auto instances = entry.witnesses[w].instances(n);
        for (size_t k = 0; k < instances.size(); ++k) {
            const RealMatrix& x = instances[k];
            const ApVerdict v = is_ap(x, tol);
            WitnessOutcome o;
            o.entry_id = entry.id;
            o.witness_index = static_cast<int>(w);
            o.instance_index = static_cast<int>(k);
            o.matrix = x;
            o.expected_ap = entry.witnesses[w].expect_ap;
            o.oracle_ap = v.is_ap;
            o.matched = o.expected_ap == o.oracle_ap;
            o.template_consistent = entry.tmpl.matches(pattern_of(x));
            o.agreement = v.agreement;
            o.borderline = v.agreement == Agreement::Borderline;
            o.eigen_margin = v.eigen_margin;
            o.poly_margin = v.poly_margin;
            report.outcomes.push_back(std::move(o));
        }
    }
    return report;
}

}  // namespace algpos
