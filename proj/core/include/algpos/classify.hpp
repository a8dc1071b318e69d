#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algpos/ap.hpp"
#include "algpos/table.hpp"

namespace algpos {

enum class EvidenceKind {
    Reducible,       // not strongly connected (Theorem 2.1)
    RowColFail,      // row/column sign condition fails (Theorem 2.3)
    Theorem4,        // irreducible with reducible B matrix
    UniformOffdiag,  // off-diagonal signs uniform (Theorem 2.2)
    Recipe,          // constructive polynomial certificate family
    Table,           // matched classification-table row
    SampledBoth,     // sampling found an AP and a non-AP member
    SampledAllAp,    // sampling found only AP members; candidate, not a proof
    SampledNoneAp,   // sampling found no AP member; candidate, not a proof
};
std::string_view evidence_kind_name(EvidenceKind k);

struct Evidence {
    EvidenceKind kind = EvidenceKind::Reducible;
    std::string table_id;  // Recipe / Table
    std::optional<RealMatrix> ap_witness;
    std::optional<RealMatrix> non_ap_witness;
    int sample_count = 0;
    bool proof = true;  // false for the Sampled{AllAp,NoneAp} candidates

    std::string to_string() const;
};

struct Classification {
    Verdict verdict = Verdict::DNA;
    Evidence evidence;
};

struct ClassifyConfig {
    std::uint64_t seed = 1729;
    int samples = 200;
    Tolerances tol{};
};

// Rule cascade: reducibility, row/column necessity, the B-matrix exclusion,
// uniform off-diagonal sufficiency, then (n = 3) table lookup, else seeded
// sampling. Throws TableMiss when an irreducible 3x3 pattern matches no row.
Classification classify(const SignPattern& s, const ClassifyConfig& cfg = {},
                        const Table& table = Table::builtin());

// Evaluates the entry's printed inequality system on x's magnitudes; absent
// when the row has no condition. Throws TemplateMismatch when x's pattern
// does not match the template.
std::optional<bool> table_condition(const TableEntry& entry, const RealMatrix& x);

// Instantiates the row's constructive polynomial on x. Throws
// TemplateMismatch, and RecipeViolation when p(x) fails its positivity
// re-check.
PolyCertificate recipe_certificate(const TableEntry& entry, const RealMatrix& x);

struct WitnessOutcome {
    std::string entry_id;
    int witness_index = 0;
    int instance_index = 0;
    RealMatrix matrix{1};
    bool expected_ap = false;
    bool oracle_ap = false;
    bool matched = false;
    bool template_consistent = true;
    bool borderline = false;
    Agreement agreement = Agreement::Agree;
    double eigen_margin = 0.0;
    double poly_margin = 0.0;
};

struct WitnessReport {
    std::vector<WitnessOutcome> outcomes;

    int total() const { return static_cast<int>(outcomes.size()); }
    int matched() const;
    // eigen/LP disagreements outside the borderline band
    int oracle_disagreements() const;
    double match_rate() const;
};

// Builds each printed witness matrix, runs both oracles, and compares with
// the printed claim. Mismatches are data, never errors.
WitnessReport verify_witnesses(const TableEntry& entry, const Tolerances& tol = {});

}  // namespace algpos
