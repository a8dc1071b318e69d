#include <doctest.h>

#include <json.hpp>

#include "algpos/atlas.hpp"

using namespace algpos;

namespace {

// one shared run; building the atlas enumerates 19683 patterns and samples
// every class, so the suite builds it once
const AtlasReport& shared_report() {
    static const AtlasReport r = [] {
        AtlasConfig cfg;
        cfg.samples = 60;  // the acceptance suite runs the full 200
        return build_atlas(cfg);
    }();
    return r;
}

}  // namespace

TEST_CASE("atlas census and partition") {
    const AtlasReport& r = shared_report();
    CHECK(r.groups.size() == 26);
    CHECK(r.totals.classes == 581);
    CHECK(r.totals.concrete_patterns == 11232);
    CHECK_FALSE(r.table_miss);
    CHECK(r.sound);

    int classes = 0, concrete = 0;
    for (const auto& g : r.groups)
        for (const auto& c : g.classes) {
            ++classes;
            concrete += c.class_size;
        }
    CHECK(classes == r.totals.classes);
    CHECK(concrete == r.totals.concrete_patterns);
}

TEST_CASE("the three-edge group holds exactly the two printed classes") {
    const AtlasReport& r = shared_report();
    const AtlasGroup& g = r.groups.front();
    CHECK(g.digraph.edge_count() == 3);
    REQUIRE(g.classes.size() == 2);
    bool saw_rap = false, saw_dna = false;
    for (const auto& c : g.classes) {
        saw_rap |= c.printed == Verdict::RAP;
        saw_dna |= c.printed == Verdict::DNA;
    }
    CHECK(saw_rap);
    CHECK(saw_dna);
}

TEST_CASE("engine verdicts agree with every printed label") {
    const AtlasReport& r = shared_report();
    CHECK(r.totals.agree == r.totals.classes);
    for (const auto& g : r.groups)
        for (const auto& c : g.classes) {
            CHECK(c.agree);
            // verdicts carry real evidence, and candidates never decide
            CHECK(c.engine.evidence.proof);
        }
}

TEST_CASE("expected discrepancy kinds are present") {
    const AtlasReport& r = shared_report();
    auto count = [&](const char* kind) {
        int c = 0;
        for (const auto& d : r.discrepancies) c += d.kind == kind;
        return c;
    };
    CHECK(count("paper_omission") == 5);
    CHECK(count("row_overlap") == 6);
    CHECK(count("witness_mismatch") == 2);
    CHECK(count("label_mismatch") == 0);
    CHECK(count("recipe_failure") == 0);
    CHECK(count("theory_soundness") == 0);
    CHECK(count("suspect_row") > 10);
    CHECK(count("condition_vs_oracle") > 0);
}

TEST_CASE("witness verification summary") {
    const AtlasReport& r = shared_report();
    CHECK(r.witness_report.total() == 408);
    CHECK(r.witness_report.match_rate() >= 0.95);
    CHECK(r.witness_report.matched() == 406);  // the two published-claim errors
}

TEST_CASE("reports are deterministic and round trip through json") {
    AtlasConfig cfg;
    cfg.samples = 25;
    cfg.seed = 99;
    const std::string a = emit_report_json(build_atlas(cfg));
    const std::string b = emit_report_json(build_atlas(cfg));
    CHECK(a == b);

    const auto parsed = nlohmann::ordered_json::parse(a);
    CHECK(parsed.dump(2) + "\n" == a);
    CHECK(parsed["census"]["groups"] == 26);
}

TEST_CASE("markdown mirrors the appendix layout") {
    const std::string md = emit_report_markdown(shared_report());
    size_t sections = 0, pos = 0;
    while ((pos = md.find("## Digraph", pos)) != std::string::npos) {
        ++sections;
        pos += 10;
    }
    CHECK(sections == 26);
    CHECK(md.find("CLEAN") == std::string::npos);  // known discrepancies exist

    AtlasReport empty;
    empty.sound = true;
    CHECK(emit_report_markdown(empty).find("CLEAN") != std::string::npos);
}

TEST_CASE("discrepancy file lists every record") {
    const AtlasReport& r = shared_report();
    const auto j = nlohmann::ordered_json::parse(emit_discrepancies_json(r));
    CHECK(j["count"].get<size_t>() == r.discrepancies.size());
    CHECK(j["discrepancies"].size() == r.discrepancies.size());
}
