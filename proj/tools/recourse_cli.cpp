// recourse: turns counterfactual explanation cases into recourse text and
// evaluates explanation texts.
//
// Exit status: 0 success, 2 input or schema error, 3 unassigned feature,
// 4 counterfactual identical to query.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recourse/baselines.hpp"
#include "recourse/case_model.hpp"
#include "recourse/discourse.hpp"
#include "recourse/error.hpp"
#include "recourse/fixtures.hpp"
#include "recourse/lexicon.hpp"
#include "recourse/metrics.hpp"
#include "recourse/taxonomy.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitUnassigned = 3;
constexpr int kExitNoChanges = 4;

struct RunConfig {
    std::string case_path;
    std::string taxonomy_path;
    std::string style = "t-xai";
    std::string variant = "mix";
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string lexicon_path;
    bool swap_immutable_order = false;
    bool force_overrides = false;
};

struct MetricsConfig {
    std::string format = "table";
    std::vector<std::string> files;
    std::string x;
    std::string y;
    std::string case_path;
    std::string text_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw recourse::Error(recourse::ErrorCode::MalformedInput, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code_for(recourse::ErrorCode code) {
    switch (code) {
        case recourse::ErrorCode::Unassigned: return kExitUnassigned;
        case recourse::ErrorCode::NoChanges: return kExitNoChanges;
        default: return kExitInput;
    }
}

int run_explain(const RunConfig& cfg, bool variant_given) {
    using namespace recourse;
    const Style style = parse_style(cfg.style);
    const OutputFormat format = parse_output_format(cfg.format);
    const VariantPolicy::Mode variant = parse_variant_mode(cfg.variant);
    if (style == Style::TXai && cfg.taxonomy_path.empty()) {
        throw Error(ErrorCode::SchemaViolation, "--style t-xai requires --taxonomy");
    }

    const ExplanationCase c = parse_case(read_file(cfg.case_path));
    std::optional<TaxonomyConfig> taxonomy;
    if (!cfg.taxonomy_path.empty()) taxonomy = load_taxonomy(read_file(cfg.taxonomy_path));
    Lexicon lexicon = Lexicon::defaults();
    if (!cfg.lexicon_path.empty()) lexicon = load_lexicon(read_file(cfg.lexicon_path));

    Explanation e;
    if (style == Style::TXai) {
        StyleOptions options;
        options.variant = variant;
        options.immutable_order = cfg.swap_immutable_order ? ImmutableOrder::NonSensitiveFirst
                                                            : ImmutableOrder::SensitiveFirst;
        options.force_overrides = cfg.force_overrides;
        e = assemble_explanation(c, *taxonomy, lexicon, options, cfg.seed);
    } else {
        BaselineOptions options;
        options.framing = taxonomy ? &*taxonomy : nullptr;
        options.variant = variant_given ? variant : VariantPolicy::Mode::AlwaysConcise;
        if (style == Style::BXai) e = generate_bxai(c, lexicon, cfg.seed, options);
        if (style == Style::GbXai) e = generate_gbxai(c, lexicon, cfg.seed, options);
        if (style == Style::BaseXai) e = generate_basexai(c, lexicon, cfg.seed, options);
    }
    for (const auto& w : e.metadata.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << render(e, format);
    return 0;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw recourse::Error(recourse::ErrorCode::MalformedInput, "not a number: '" + item + "'");
        }
    }
    return out;
}

void emit(const nlohmann::ordered_json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_array()) {
            for (const auto& row : value) {
                std::cout << key << ":";
                for (const auto& [k, v] : row.items()) {
                    std::cout << "  " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
                }
                std::cout << "\n";
            }
            continue;
        }
        std::cout << std::left << std::setw(18) << key
                  << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

int run_readability(const MetricsConfig& cfg) {
    nlohmann::ordered_json report;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& path : cfg.files) {
        const std::string text = read_file(path);
        const auto stats = recourse::metrics::text_stats(text);
        rows.push_back({{"file", path},
                        {"words", stats.words},
                        {"sentences", stats.sentences},
                        {"syllables", stats.syllables},
                        {"flesch", recourse::metrics::flesch_score(text)}});
    }
    report["readability"] = std::move(rows);
    emit(report, cfg.format);
    return 0;
}

int run_similarity(const MetricsConfig& cfg) {
    if (cfg.files.size() != 2) {
        throw recourse::Error(recourse::ErrorCode::SchemaViolation, "similarity takes exactly two files");
    }
    nlohmann::ordered_json report;
    report["a"] = cfg.files[0];
    report["b"] = cfg.files[1];
    report["token_similarity"] =
        recourse::metrics::token_similarity(read_file(cfg.files[0]), read_file(cfg.files[1]));
    emit(report, cfg.format);
    return 0;
}

int run_spearman(const MetricsConfig& cfg) {
    const auto r = recourse::metrics::spearman_rho(parse_list(cfg.x), parse_list(cfg.y));
    nlohmann::ordered_json report;
    report["n"] = r.n;
    report["rho"] = r.rho;
    emit(report, cfg.format);
    return 0;
}

int run_audit(const MetricsConfig& cfg) {
    using namespace recourse;
    const ExplanationCase c = parse_case(read_file(cfg.case_path));
    const std::string text = read_file(cfg.text_path);
    // Ordinal labels look like "1)" at the start of a line; the prologue count
    // is taken to be the largest ordinal present.
    std::size_t ordinals = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t digits = 0;
        while (digits < line.size() && std::isdigit(static_cast<unsigned char>(line[digits]))) ++digits;
        if (digits > 0 && digits < line.size() && line[digits] == ')') {
            ordinals = std::max<std::size_t>(ordinals, std::stoul(line.substr(0, digits)));
        }
    }
    const auto report = metrics::audit_text(
        text, c, ordinals > 0 ? std::optional<std::size_t>(ordinals) : std::nullopt, ordinals);
    nlohmann::ordered_json out;
    out["tokens_checked"] = report.tokens_checked;
    out["violation_count"] = report.violations.size();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) rows.push_back({{"token", v.token}, {"line", v.line}});
    out["violations"] = std::move(rows);
    emit(out, cfg.format);
    return report.ok() ? 0 : 1;
}

int run_fixtures(const std::string& name, const std::string& out_dir) {
    namespace fx = recourse::fixtures;
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& n : fx::names()) {
            std::ofstream out(std::filesystem::path(out_dir) / (n + ".json"), std::ios::binary);
            out << fx::get(n);
            if (!out) throw recourse::Error(recourse::ErrorCode::MalformedInput, "cannot write to " + out_dir);
        }
        return 0;
    }
    if (name.empty()) {
        for (const auto& n : fx::names()) std::cout << n << "\n";
        return 0;
    }
    try {
        std::cout << fx::get(name);
    } catch (const std::out_of_range& ex) {
        throw recourse::Error(recourse::ErrorCode::SchemaViolation, ex.what());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feasibility-aware natural-language recourse from counterfactual explanations"};
    app.require_subcommand(1);

    RunConfig run;
    auto* explain = app.add_subcommand("explain", "Generate an explanation for a case file");
    explain->add_option("--case", run.case_path, "Case file (JSON)")->required();
    explain->add_option("--taxonomy", run.taxonomy_path, "Taxonomy file (JSON); required for t-xai");
    explain->add_option("--style", run.style, "t-xai | b-xai | gb-xai | base-xai")
        ->check(CLI::IsMember({"t-xai", "b-xai", "gb-xai", "base-xai"}));
    auto* variant_opt = explain->add_option("--variant", run.variant, "Template variant: full | concise | mix")
                            ->check(CLI::IsMember({"full", "concise", "mix"}));
    explain->add_option("--seed", run.seed, "Seed for template variants and synonyms");
    explain->add_option("--format", run.format, "text | markdown | json")
        ->check(CLI::IsMember({"text", "markdown", "json"}));
    explain->add_option("--lexicon", run.lexicon_path, "Lexicon override file (JSON)");
    explain->add_flag("--swap-immutable-order", run.swap_immutable_order,
                      "Place non-sensitive factual sentences before sensitive ones");
    explain->add_flag("--force-overrides", run.force_overrides,
                      "Allow case overrides that cross the mutable/immutable boundary");

    MetricsConfig mcfg;
    auto* metrics = app.add_subcommand("metrics", "Text metrics and numeric-fidelity audit");
    metrics->require_subcommand(1);
    metrics->add_option("--format", mcfg.format, "table | json")->check(CLI::IsMember({"table", "json"}));
    auto* readability = metrics->add_subcommand("readability", "Flesch reading ease of text files");
    readability->add_option("files", mcfg.files, "Text files")->required();
    auto* similarity = metrics->add_subcommand("similarity", "Token-multiset Jaccard similarity of two files");
    similarity->add_option("files", mcfg.files, "Two text files")->required()->expected(2);
    auto* spearman = metrics->add_subcommand("spearman", "Spearman rank correlation of two lists");
    spearman->add_option("--x", mcfg.x, "Comma-separated values")->required();
    spearman->add_option("--y", mcfg.y, "Comma-separated values")->required();
    auto* audit = metrics->add_subcommand("audit", "Check that every number in a text comes from the case");
    audit->add_option("--case", mcfg.case_path, "Case file (JSON)")->required();
    audit->add_option("--text", mcfg.text_path, "Explanation text file")->required();

    std::string fixture_name;
    std::string fixture_dir;
    auto* fixtures = app.add_subcommand("fixtures", "Print or export the bundled fixtures");
    fixtures->add_option("name", fixture_name, "Fixture to print; lists names when omitted");
    fixtures->add_option("--out-dir", fixture_dir, "Write every fixture to this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? 0 : kExitInput;
    }

    try {
        if (*explain) return run_explain(run, variant_opt->count() > 0);
        if (*readability) return run_readability(mcfg);
        if (*similarity) return run_similarity(mcfg);
        if (*spearman) return run_spearman(mcfg);
        if (*audit) return run_audit(mcfg);
        if (*fixtures) return run_fixtures(fixture_name, fixture_dir);
    } catch (const recourse::Error& e) {
        std::cerr << "error: " << recourse::to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
