#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algpos/classify.hpp"

namespace algpos {

struct AtlasConfig {
    std::uint64_t seed = 1729;
    int samples = 200;
    Tolerances tol{};
};

// One canonical irreducible pattern class and everything the engine
// established about it, next to the printed claim.
struct ClassRecord {
    SignPattern canonical{3};
    int class_size = 0;  // concrete patterns in the orbit (irreducible ones)
    std::string entry_id;
    Verdict printed = Verdict::DNA;
    bool entry_suspect = false;
    bool entry_supplement = false;
    std::vector<std::string> all_entry_ids;  // >1 means printed rows overlap
    Classification engine;
    int ap_samples = 0;
    int total_samples = 0;
    bool agree = false;
    // For rows with a printed condition: disagreements with the spectral
    // oracle outside the borderline band, over the checked samples.
    int condition_checked = 0;
    int condition_disagreements = 0;
};

struct AtlasGroup {
    int paper_index = 0;
    Digraph digraph{3};
    std::vector<ClassRecord> classes;
};

struct Discrepancy {
    std::string kind;
    std::string entry_id;
    std::string detail;
};

struct AtlasTotals {
    int classes = 0;
    int concrete_patterns = 0;
    int rap = 0, aap = 0, dna = 0;
    int agree = 0;
};

struct AtlasReport {
    std::vector<AtlasGroup> groups;
    AtlasTotals totals;
    WitnessReport witness_report;
    std::vector<Discrepancy> discrepancies;
    std::uint64_t seed = 0;
    int samples = 0;
    int table_version = 0;
    bool sound = false;           // theory-stage soundness checks all passed
    bool table_miss = false;      // any class without a table entry
    double elapsed_seconds = 0.0; // excluded from the JSON (kept deterministic)
};

// Enumerates all 3^9 sign patterns, keeps the strongly connected ones,
// deduplicates by canonical form, classifies every class independently of
// the printed labels, groups by digraph, verifies every witness, and
// assembles the report deterministically under cfg.seed. Throws
// std::runtime_error when the digraph census does not match 1/3/6/8/5/2/1.
AtlasReport build_atlas(const AtlasConfig& cfg = {}, const Table& table = Table::builtin());

std::string emit_report_json(const AtlasReport& r);
std::string emit_report_markdown(const AtlasReport& r);
std::string emit_discrepancies_json(const AtlasReport& r);

}  // namespace algpos
