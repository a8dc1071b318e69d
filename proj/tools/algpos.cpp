// Command line front end: single-matrix checks, certificate extraction,
// pattern classification, atlas generation and the published-table
// verification run.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "algpos/atlas.hpp"

using namespace algpos;

namespace {

constexpr int kExitAp = 0;
constexpr int kExitNotAp = 1;
constexpr int kExitBorderline = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;
constexpr int kExitInternal = 70;

std::string agreement_name(Agreement a) {
    switch (a) {
        case Agreement::Agree: return "Agree";
        case Agreement::EigenOnly: return "EigenOnly";
        case Agreement::PolyOnly: return "PolyOnly";
        case Agreement::Borderline: return "Borderline";
    }
    return "?";
}

struct CommonOpts {
    std::uint64_t seed = 1729;
    double tol = 1e-9;
    int samples = 200;
    int max_degree = 0;  // 0 means n-1
    std::string format = "text";
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
    cmd->add_option("--seed", o.seed, "RNG seed honored end to end");
    cmd->add_option("--tol", o.tol, "eigenvalue realness/positivity tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--samples", o.samples, "samples per pattern")->check(CLI::Range(2, 1000000));
    cmd->add_option("--max-degree", o.max_degree, "LP certificate degree cap (0 = n-1)");
    if (with_format) cmd->add_option("--format", o.format, "text, json or md")
        ->check(CLI::IsMember({"text", "json", "md"}));
    cmd->add_option("--out", o.out_dir, "output directory for report files");
}

Tolerances tolerances(const CommonOpts& o) {
    Tolerances t;
    t.eigen_tol = o.tol;
    t.max_degree = o.max_degree;
    return t;
}

int verdict_exit(const ApVerdict& v) {
    if (v.agreement == Agreement::Borderline) return kExitBorderline;
    return v.is_ap ? kExitAp : kExitNotAp;
}

void print_verdict(const ApVerdict& v, const CommonOpts& o) {
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["is_ap"] = v.is_ap;
        j["agreement"] = agreement_name(v.agreement);
        j["eigen_margin"] = std::isfinite(v.eigen_margin) ? v.eigen_margin : -1e308;
        j["poly_margin"] = v.poly_margin;
        j["eigen"] = v.eigen ? nlohmann::ordered_json::parse(certificate_json(*v.eigen))
                             : nlohmann::ordered_json(nullptr);
        j["poly"] = v.poly ? nlohmann::ordered_json::parse(certificate_json(*v.poly))
                           : nlohmann::ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << (v.is_ap ? "algebraically positive" : "not algebraically positive")
              << "  [" << agreement_name(v.agreement) << "]\n";
    if (v.eigen) {
        std::cout << "  spectral certificate: lambda = " << v.eigen->pair.value
                  << ", vector min entry = " << v.eigen->min_entry << ", gap = " << v.eigen->gap
                  << "\n  " << certificate_json(*v.eigen) << "\n";
    } else {
        std::cout << "  spectral near-miss margin: " << v.eigen_margin << "\n";
    }
    if (v.poly) {
        std::cout << "  polynomial certificate p = " << v.poly->poly().to_string()
                  << ", margin = " << v.poly->margin << "\n  " << certificate_json(*v.poly)
                  << "\n";
    } else {
        std::cout << "  LP margin: " << v.poly_margin << " (no certificate)\n";
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path.string());
    out << content;
    if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

int cmd_check(const std::string& text, const CommonOpts& o, bool certificates_only) {
    const RealMatrix a = parse_matrix(text);
    const ApVerdict v = is_ap(a, tolerances(o));
    if (certificates_only) {
        nlohmann::ordered_json j;
        j["eigen"] = v.eigen ? nlohmann::ordered_json::parse(certificate_json(*v.eigen))
                             : nlohmann::ordered_json(nullptr);
        j["poly"] = v.poly ? nlohmann::ordered_json::parse(certificate_json(*v.poly))
                           : nlohmann::ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        print_verdict(v, o);
    }
    return verdict_exit(v);
}

int cmd_classify(const std::string& text, const CommonOpts& o) {
    const SignPattern s = parse_pattern(text);
    ClassifyConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.tol = tolerances(o);
    const Classification c = classify(s, cfg);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["pattern"] = s.to_string();
        j["verdict"] = std::string(verdict_name(c.verdict));
        j["evidence"] = c.evidence.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << verdict_name(c.verdict) << "\n  evidence: " << c.evidence.to_string()
                  << "\n";
        if (c.evidence.ap_witness)
            std::cout << "  AP witness: " << format_matrix(*c.evidence.ap_witness) << "\n";
        if (c.evidence.non_ap_witness)
            std::cout << "  non-AP witness: " << format_matrix(*c.evidence.non_ap_witness)
                      << "\n";
    }
    return 0;
}

int cmd_atlas(const CommonOpts& o) {
    AtlasConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.tol = tolerances(o);
    const AtlasReport r = build_atlas(cfg);
    const std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "atlas.json", emit_report_json(r));
    write_file(dir / "atlas.md", emit_report_markdown(r));
    write_file(dir / "discrepancies.json", emit_discrepancies_json(r));
    std::cout << r.totals.classes << " classes in " << r.groups.size() << " digraph groups; "
              << "printed labels " << r.totals.rap << " RAP / " << r.totals.aap << " AAP / "
              << r.totals.dna << " DNA; engine agrees on " << r.totals.agree << "; "
              << r.discrepancies.size() << " discrepancy records; "
              << "witnesses " << r.witness_report.matched() << "/" << r.witness_report.total()
              << " (" << r.elapsed_seconds << " s)\n";
    std::cout << "wrote " << (dir / "atlas.json").string() << ", atlas.md, discrepancies.json\n";
    return (!r.table_miss && r.sound) ? 0 : 1;
}

int cmd_verify_paper(const CommonOpts& o) {
    const Table& table = Table::builtin();
    WitnessReport merged;
    for (const TableEntry& e : table.entries()) {
        if (e.witnesses.empty()) continue;
        WitnessReport wr = verify_witnesses(e, tolerances(o));
        for (auto& out : wr.outcomes) merged.outcomes.push_back(std::move(out));
    }
    std::cout << "witness match rate: " << merged.matched() << "/" << merged.total() << " = "
              << 100.0 * merged.match_rate() << "%\n";
    std::cout << "oracle disagreements outside the borderline band: "
              << merged.oracle_disagreements() << "\n";
    for (const auto& out : merged.outcomes) {
        if (out.matched) continue;
        std::cout << "  MISMATCH row " << out.entry_id << " witness " << out.witness_index << "#"
                  << out.instance_index << ": oracle says " << (out.oracle_ap ? "AP" : "not AP")
                  << ", printed claim says " << (out.expected_ap ? "AP" : "not AP") << "\n"
                  << "    matrix " << format_matrix(out.matrix)
                  << (out.template_consistent ? "" : "  (leaves the printed row's class)")
                  << "\n";
    }
    std::cout << "suspect rows:\n";
    for (const TableEntry& e : table.entries())
        if (e.suspect) std::cout << "  " << e.id << ": " << e.suspect_note << "\n";

    nlohmann::ordered_json j;
    j["total"] = merged.total();
    j["matched"] = merged.matched();
    j["match_rate"] = merged.match_rate();
    j["oracle_disagreements"] = merged.oracle_disagreements();
    nlohmann::ordered_json outs = nlohmann::ordered_json::array();
    for (const auto& out : merged.outcomes) {
        nlohmann::ordered_json jo;
        jo["entry"] = out.entry_id;
        jo["witness"] = out.witness_index;
        jo["instance"] = out.instance_index;
        jo["matrix"] = format_matrix(out.matrix);
        jo["expected_ap"] = out.expected_ap;
        jo["oracle_ap"] = out.oracle_ap;
        jo["matched"] = out.matched;
        jo["template_consistent"] = out.template_consistent;
        outs.push_back(std::move(jo));
    }
    j["outcomes"] = std::move(outs);
    const std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "verify_paper.json", j.dump(2) + "\n");
    std::cout << "wrote " << (dir / "verify_paper.json").string() << "\n";
    return 0;
}

int cmd_subclass(const std::string& b_text, const std::string& a_text, const CommonOpts& o) {
    const SignPattern b = parse_pattern(b_text);
    const SignPattern a = parse_pattern(a_text);
    const SubclassVerdict v = subclass_check(b, a, o.seed, o.samples);
    std::cout << subclass_verdict_string(v) << "\n";
    if (const auto* f = std::get_if<SubclassFails>(&v))
        std::cout << "  witness: " << format_matrix(f->witness) << "\n";
    if (std::holds_alternative<SubclassHolds>(v)) return 0;
    return std::holds_alternative<SubclassFails>(v) ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "algpos - algebraic positivity of real matrices and the classification\n"
        "of irreducible 3x3 sign patterns.\n\n"
        "Matrix text: rows separated by ';', entries by spaces or commas,\n"
        "e.g. \"0 -1 1; 1 0 -1; -1 1 0\". Pattern text: rows separated by '/',\n"
        "cells from {+,-,0}, e.g. \"0+0/+0-/+0+\"."};
    app.require_subcommand(1);

    CommonOpts check_o, cert_o, classify_o, atlas_o, verify_o, sub_o;
    std::string check_m, cert_m, classify_p, sub_b, sub_a;

    auto* check = app.add_subcommand("check", "decide algebraic positivity of one matrix\n"
                                              "(exit 0 AP, 1 not AP, 2 borderline)");
    check->add_option("matrix", check_m, "matrix text, e.g. \"1 1; 1 1\"")->required();
    add_common(check, check_o);

    auto* cert = app.add_subcommand("certificate", "print both certificates as JSON");
    cert->add_option("matrix", cert_m, "matrix text")->required();
    add_common(cert, cert_o);

    auto* cls = app.add_subcommand("classify", "classify a sign pattern as RAP/AAP/DNA");
    cls->add_option("pattern", classify_p, "pattern text, e.g. \"0+0/00+/+00\"")->required();
    add_common(cls, classify_o);

    auto* atl = app.add_subcommand("atlas", "regenerate the full 3x3 classification atlas");
    add_common(atl, atlas_o);

    auto* ver = app.add_subcommand("verify-paper",
                                   "re-test every published witness against both oracles");
    add_common(ver, verify_o);

    auto* sub = app.add_subcommand("subclass", "decide the scalar-shift subclass relation B <= A\n"
                                               "(exit 0 holds, 1 fails, 2 unknown)");
    sub->add_option("B", sub_b, "candidate subclass pattern")->required();
    sub->add_option("A", sub_a, "candidate superclass pattern")->required();
    add_common(sub, sub_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(check_m, check_o, false);
        if (cert->parsed()) return cmd_check(cert_m, cert_o, true);
        if (cls->parsed()) return cmd_classify(classify_p, classify_o);
        if (atl->parsed()) return cmd_atlas(atlas_o);
        if (ver->parsed()) return cmd_verify_paper(verify_o);
        if (sub->parsed()) return cmd_subclass(sub_b, sub_a, sub_o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
