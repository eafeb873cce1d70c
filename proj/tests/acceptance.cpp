// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Expected values are written out here by hand; the engine
// is only ever the thing under test.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz.hpp"
#include "oracles.hpp"
#include "recourse/baselines.hpp"
#include "recourse/discourse.hpp"
#include "recourse/error.hpp"
#include "recourse/fixtures.hpp"
#include "recourse/metrics.hpp"

using namespace recourse;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(const std::string& why) {
        pass = false;
        if (failures.size() < 5) failures.push_back(why);
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

struct Fixture {
    std::string domain;
    ExplanationCase c;
    TaxonomyConfig taxonomy;
};

Fixture load(const std::string& domain) {
    return {domain, parse_case(fixtures::get(domain + "_case")), load_taxonomy(fixtures::get(domain + "_taxonomy"))};
}

const Lexicon& lexicon() {
    static const Lexicon lx = Lexicon::defaults();
    return lx;
}

std::string text_of(const Explanation& e) { return render_text(e); }

Explanation run_style(Style style, const ExplanationCase& c, const TaxonomyConfig& t, std::uint64_t seed,
                      VariantPolicy::Mode variant = VariantPolicy::Mode::SeededMix,
                      ImmutableOrder order = ImmutableOrder::SensitiveFirst) {
    BaselineOptions options;
    options.framing = &t;
    switch (style) {
        case Style::TXai: return assemble_explanation(c, t, lexicon(), {variant, order, false}, seed);
        case Style::BXai: return generate_bxai(c, lexicon(), seed, options);
        case Style::GbXai: return generate_gbxai(c, lexicon(), seed, options);
        case Style::BaseXai:
            options.variant = variant;
            return generate_basexai(c, lexicon(), seed, options);
    }
    throw std::logic_error("style");
}

constexpr Style kStyles[] = {Style::TXai, Style::BXai, Style::GbXai, Style::BaseXai};

// ---------------------------------------------------------------------------
// Golden example outputs, reduced to what must survive synonym
// substitution: the action polarity, the feature label and the values.

struct GoldenAction {
    const char* polarity;  // POS, NEG or MOD
    const char* rest;      // text after the action verb
};

struct Golden {
    const char* domain;
    std::size_t count;
    const char* prologue;
    std::vector<GoldenAction> actions;
    const char* epilogue;
};

const std::vector<Golden>& golden_examples() {
    static const std::vector<Golden> p{
        {"heart",
         5,
         "In order to prevent heart problems you would need to change 5 attributes.\nYou would not have heart disease if you,",
         {{"NEG", "resting blood pressure to 94.0"},
          {"NEG", "serum cholesterol from 471.0 to 248.0"},
          {"POS", "thalach from 122 to 132.0"},
          {"POS", "old peak from 1.0 to 2.0"},
          {"POS", "ca from 0 to 1.0"}},
         "Stay safe!"},
        {"credit",
         4,
         "To reduce your credit risk, you would need to change the following 4 attributes.",
         {{"POS", "Annual Income to 12000.0"},
          {"MOD", "Home ownership to RENT"},
          {"POS", "Loan amount to 1600.0"},
          {"NEG", "Interest rate to 10.59"}},
         "Wishing you a successful financial journey where your credit remains protected!"},
        {"student",
         3,
         "In order to get a total score that is above the average, you would need to change the following 3 attributes.",
         {{"POS", "math score to 68.0"}, {"POS", "reading score to 72.0"}, {"POS", "writing score to 64.0"}},
         "Good luck with your results!"},
    };
    return p;
}

// Factual sentences spelled out per domain. Only the comparative may vary.
const std::map<std::string, std::vector<std::string>>& golden_factual() {
    static const std::map<std::string, std::vector<std::string>> f{
        {"heart",
         {"Your age has contributed to having a heart problem",
          "Having a value of Male for sex would provide a (higher|better) chance of a healthy heart compared to a value of "
          "Female"}},
        {"credit",
         {"Having a value of 3\\.0 for Employment length would provide a (higher|better) chance of a risk free credit "
          "compared to a value of 5\\.0"}},
        {"student",
         {"Your parental level of education has contributed to obtaining an overall score of below the average"}},
    };
    return f;
}

const std::map<std::string, std::vector<std::string>>& factual_features() {
    static const std::map<std::string, std::vector<std::string>> f{
        {"heart", {"age", "sex"}}, {"credit", {"person_emp_length"}}, {"student", {"parental_level_of_education"}}};
    return f;
}

std::string alternation(const LexemeSet& s) {
    std::string out;
    for (const auto& w : s) out += (out.empty() ? "" : "|") + w;
    return out;
}

// "<verb> <object> to raise X from a to b" -> "POS X from a to b".
std::optional<std::string> action_core(const std::string& sentence) {
    const Lexicon& lx = lexicon();
    LexemeSet objects;
    for (const auto& o : lx.object) {
        if (!o.empty()) objects.push_back(o);
    }
    const std::regex shape("^(?:(?:" + alternation(lx.verb) + ")(?: (?:" + alternation(objects) + "))? to )?(" +
                           alternation(lx.action_pos) + "|" + alternation(lx.action_neg) + "|" +
                           alternation(lx.action_modify) + ") (.+)$");
    std::smatch m;
    if (!std::regex_match(sentence, m, shape)) return std::nullopt;
    const std::string action = m[1].str();
    auto in = [&](const LexemeSet& s) { return std::find(s.begin(), s.end(), action) != s.end(); };
    const char* polarity = in(lx.action_pos) ? "POS" : in(lx.action_neg) ? "NEG" : "MOD";
    return std::string(polarity) + " " + m[2].str();
}

std::string comparative_of(const std::string& sentence) {
    static const std::regex r("would provide a ([a-z]+) chance of");
    std::smatch m;
    return std::regex_search(sentence, m, r) ? m[1].str() : "";
}

// Structure that holds for every seed.
void check_structure(const Golden& p, const Fixture& fx, std::uint64_t seed, Outcome& out) {
    const std::string tag = std::string(p.domain) + " seed " + std::to_string(seed) + ": ";
    Explanation e = run_style(Style::TXai, fx.c, fx.taxonomy, seed);
    const auto& factual = golden_factual().at(p.domain);
    const auto& factual_names = factual_features().at(p.domain);

    out.expect(e.metadata.prologue_count == p.count, tag + "prologue count");
    out.expect(e.prologue == p.prologue, tag + "prologue text '" + e.prologue + "'");
    out.expect(e.epilogue == p.epilogue, tag + "epilogue");
    if (e.body.size() != p.count + factual.size()) {
        out.fail(tag + "body has " + std::to_string(e.body.size()) + " sentences");
        return;
    }
    const auto cats = testing::oracle_categories(fx.c, fx.taxonomy);
    for (std::size_t i = 0; i < p.count; ++i) {
        const auto& item = e.body[i];
        const FeatureRecord& f = fx.c.features[item.sentence.input_index];
        out.expect(item.ordinal == i + 1, tag + "ordinal " + std::to_string(i + 1));
        out.expect(is_mutable(cats[item.sentence.input_index]), tag + f.name + " is not mutable");
        out.expect(testing::matches_category_skeleton(item.sentence.text, cats[item.sentence.input_index], f,
                                                      fx.c.outcomes, lexicon(), direction_of(f)),
                   tag + "skeleton mismatch: " + item.sentence.text);
    }
    for (std::size_t k = 0; k < factual.size(); ++k) {
        const auto& item = e.body[p.count + k];
        out.expect(!item.ordinal, tag + "factual sentence numbered");
        out.expect(item.sentence.feature_name == factual_names[k], tag + "factual feature " + item.sentence.feature_name);
        out.expect(std::regex_match(item.sentence.text, std::regex(factual[k])), tag + "factual text: " + item.sentence.text);
        const Category cat = cats[item.sentence.input_index];
        if (cat == Category::ImmutableSensitive) {
            out.expect(testing::naive_numbers(item.sentence.text).empty(), tag + "numbers in " + item.sentence.text);
        }
        out.expect(!testing::contains_any_word(item.sentence.text, lexicon().action_pos) &&
                       !testing::contains_any_word(item.sentence.text, lexicon().action_neg) &&
                       !testing::contains_any_word(item.sentence.text, lexicon().action_modify),
                   tag + "action verb in factual sentence: " + item.sentence.text);
    }
    const std::string text = text_of(e);
    out.expect(text.size() >= std::string(p.epilogue).size() + 1 &&
                   text.substr(text.size() - std::string(p.epilogue).size() - 1) == std::string(p.epilogue) + "\n",
               tag + "text does not end with the epilogue");
}

// True when every action sentence reduces to the golden core and every
// comparative is the golden "higher".
bool matches_golden(const Golden& p, const Fixture& fx, std::uint64_t seed) {
    Explanation e = run_style(Style::TXai, fx.c, fx.taxonomy, seed);
    if (e.body.size() < p.count) return false;
    for (std::size_t i = 0; i < p.count; ++i) {
        auto core = action_core(e.body[i].sentence.text);
        if (!core || *core != std::string(p.actions[i].polarity) + " " + p.actions[i].rest) return false;
    }
    for (std::size_t i = p.count; i < e.body.size(); ++i) {
        const std::string comp = comparative_of(e.body[i].sentence.text);
        if (!comp.empty() && comp != "higher") return false;
    }
    return true;
}

Outcome golden_structure() {
    Outcome out;
    std::vector<Fixture> fx;
    for (const auto& p : golden_examples()) fx.push_back(load(p.domain));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (std::size_t i = 0; i < fx.size(); ++i) check_structure(golden_examples()[i], fx[i], seed, out);
    }

    // Each example is one draw of the seeded variant choice, so each gets its
    // own reproducing seed.
    std::vector<std::uint64_t> golden;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        std::optional<std::uint64_t> found;
        for (std::uint64_t seed = 0; seed < 100000 && !found; ++seed) {
            if (matches_golden(golden_examples()[i], fx[i], seed)) found = seed;
        }
        if (!found) {
            out.fail(std::string(golden_examples()[i].domain) + ": no seed reproduces the golden sentence skeletons");
            return out;
        }
        golden.push_back(*found);
    }

    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < fx.size(); ++i) {
        Explanation e = run_style(Style::TXai, fx[i].c, fx[i].taxonomy, golden[i]);
        out.expect(!text_of(e).empty(), "empty output");
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.expect(ms < 1000.0, "runtime " + std::to_string(ms) + " ms");

    std::ostringstream d;
    d << "counts 5/4/3, 100 seeds structurally exact, golden skeletons at seeds " << golden[0] << "/" << golden[1]
      << "/" << golden[2] << ", " << std::fixed;
    d.precision(2);
    d << ms << " ms for three cases";
    out.detail = d.str();
    return out;
}

Outcome basexai_contrast() {
    Outcome out;
    const std::map<std::string, std::size_t> expected{{"heart", 7}, {"credit", 5}, {"student", 4}};
    std::ostringstream d;
    for (const auto& [domain, count] : expected) {
        Fixture fx = load(domain);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Explanation base = run_style(Style::BaseXai, fx.c, fx.taxonomy, seed);
            Explanation t = run_style(Style::TXai, fx.c, fx.taxonomy, seed);
            out.expect(base.metadata.prologue_count == count, domain + ": Base-XAI count");
            out.expect(base.prologue.find(" " + std::to_string(count) + " attributes") != std::string::npos,
                       domain + ": Base-XAI prologue text");
            out.expect(base.metadata.prologue_count > t.metadata.prologue_count, domain + ": not greater than T-XAI");
            bool immutable_action = false;
            for (const auto& item : base.body) {
                const FeatureRecord* f = fx.c.find(item.sentence.feature_name);
                if (!f || is_mutable(fx.taxonomy.assignments.at(f->name))) continue;
                auto core = action_core(item.sentence.text);
                immutable_action = immutable_action || (core && item.ordinal);
            }
            out.expect(immutable_action, domain + ": no action on an immutable feature");
            if (seed == 0) {
                d << domain << " " << *base.metadata.prologue_count << ">" << *t.metadata.prologue_count << " ";
            }
        }
    }
    out.detail = d.str() + "(20 seeds each)";
    return out;
}

Outcome taxonomy_counts() {
    Outcome out;
    auto counts = [](const std::string& d) { return category_counts(load_taxonomy(fixtures::get(d + "_taxonomy"))); };
    auto show = [](const CategoryCounts& c) {
        return "(" + std::to_string(c.md) + "," + std::to_string(c.mi) + "," + std::to_string(c.is_) + "," +
               std::to_string(c.ins) + ")/" + std::to_string(c.total());
    };
    const std::map<std::string, CategoryCounts> eval{
        {"heart", {0, 8, 2, 3}}, {"student", {5, 0, 3, 0}}, {"credit", {2, 1, 7, 1}}};
    CategoryCounts eval_total;
    for (const auto& [d, want] : eval) {
        const CategoryCounts got = counts(d);
        out.expect(got == want, d + " " + show(got));
        eval_total += got;
    }
    out.expect(eval_total == CategoryCounts{7, 9, 12, 4} && eval_total.total() == 32, "evaluation total " + show(eval_total));

    CategoryCounts train_total;
    for (auto d : fixtures::kTrainingDomains) train_total += counts(std::string(d));
    out.expect(train_total == CategoryCounts{9, 72, 12, 38} && train_total.total() == 131,
               "training total " + show(train_total));
    out.detail = "evaluation " + show(eval_total) + ", training " + show(train_total);
    return out;
}

// ---------------------------------------------------------------------------
// Fuzz corpus shared by the fidelity and routing criteria.

struct CorpusEntry {
    testing::FuzzCase fc;
    std::uint64_t seed;
    VariantPolicy::Mode variant;
    ImmutableOrder order;
};

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        std::mt19937_64 rng(20240611);
        const VariantPolicy::Mode modes[] = {VariantPolicy::Mode::SeededMix, VariantPolicy::Mode::AlwaysFull,
                                             VariantPolicy::Mode::AlwaysConcise};
        for (int i = 0; i < 1200; ++i) {
            testing::FuzzOptions options;
            options.weight_ties = i % 3 == 0;
            CorpusEntry e{testing::random_case(rng, options), rng(), modes[rng() % 3],
                          rng() % 2 ? ImmutableOrder::SensitiveFirst : ImmutableOrder::NonSensitiveFirst};
            v.push_back(std::move(e));
        }
        return v;
    }();
    return entries;
}

Outcome numeric_fidelity() {
    Outcome out;
    std::size_t explanations = 0, tokens = 0, violations = 0;
    for (const auto& entry : corpus()) {
        const auto& c = entry.fc.c;
        std::set<std::string> values;
        for (const auto& f : c.features) {
            for (const auto* v : {&f.query_value, &f.cf_value}) {
                for (const auto& t : testing::naive_numbers(v->text)) values.insert(t);
            }
        }
        for (Style style : kStyles) {
            Explanation e = run_style(style, c, entry.fc.taxonomy, entry.seed, entry.variant, entry.order);
            ++explanations;
            auto report = metrics::numeric_fidelity_audit(e, c);
            tokens += report.tokens_checked;
            for (const auto& v : report.violations) {
                ++violations;
                out.fail(std::string(to_string(style)) + " emitted '" + v.token + "' in: " + v.line);
            }
            // Second opinion with a cruder tokeniser and an allowed set built
            // from the raw case text.
            std::set<std::string> allowed = values;
            if (e.metadata.prologue_count) allowed.insert(std::to_string(*e.metadata.prologue_count));
            for (const auto& item : e.body) {
                if (item.ordinal) allowed.insert(std::to_string(*item.ordinal));
            }
            for (const auto& t : testing::naive_numbers(text_of(e))) {
                if (!allowed.count(t)) {
                    ++violations;
                    out.fail(std::string(to_string(style)) + " naive check: '" + t + "'");
                }
            }
        }
    }
    out.expect(corpus().size() >= 1000, "corpus too small");
    out.detail = std::to_string(corpus().size()) + " cases, " + std::to_string(explanations) + " explanations, " +
                 std::to_string(tokens) + " tokens, " + std::to_string(violations) + " violations";
    return out;
}

Outcome routing_safety() {
    Outcome out;
    const Lexicon& lx = lexicon();
    std::size_t is = 0, ins = 0, mutable_count = 0;
    auto other_sets = [&](Direction d) {
        std::vector<const LexemeSet*> sets;
        if (d != Direction::Increase) sets.push_back(&lx.action_pos);
        if (d != Direction::Decrease) sets.push_back(&lx.action_neg);
        if (d != Direction::Modify) sets.push_back(&lx.action_modify);
        return sets;
    };
    auto own_set = [&](Direction d) -> const LexemeSet& {
        return d == Direction::Increase ? lx.action_pos : d == Direction::Decrease ? lx.action_neg : lx.action_modify;
    };
    for (const auto& entry : corpus()) {
        const auto& c = entry.fc.c;
        const auto cats = testing::oracle_categories(c, entry.fc.taxonomy);
        Explanation e = run_style(Style::TXai, c, entry.fc.taxonomy, entry.seed, entry.variant, entry.order);
        for (const auto& item : e.body) {
            const std::string& s = item.sentence.text;
            const FeatureRecord& f = c.features[item.sentence.input_index];
            const Category cat = cats[item.sentence.input_index];
            const Direction dir = direction_of(f);
            out.expect(item.sentence.category == cat, "category drift on " + f.name);
            if (cat == Category::ImmutableSensitive) {
                ++is;
                out.expect(testing::naive_numbers(s).empty(), "I.S. with number: " + s);
                const std::string stripped = testing::without(s, {f.label()});
                for (const auto* v : {&f.query_value, &f.cf_value}) {
                    out.expect(!testing::contains_word(stripped, v->text), "I.S. with value '" + v->text + "': " + s);
                }
                for (const auto* set : {&lx.action_pos, &lx.action_neg, &lx.action_modify}) {
                    out.expect(!testing::contains_any_word(s, *set), "I.S. with action: " + s);
                }
            } else if (cat == Category::ImmutableNonSensitive) {
                ++ins;
                out.expect(!testing::contains_any_word(s, lx.comparative_neg), "I.NS. with negative comparative: " + s);
                out.expect(s.find(c.outcomes.undesired_state_phrase) == std::string::npos, "I.NS. with undesired phrase: " + s);
            } else {
                ++mutable_count;
                const std::string body = testing::without(s, {f.label()});
                out.expect(testing::contains_any_word(body, own_set(dir)), "missing action for direction: " + s);
                for (const auto* set : other_sets(dir)) {
                    out.expect(!testing::contains_any_word(body, *set), "wrong action polarity: " + s);
                }
            }
        }
    }
    out.detail = std::to_string(is) + " I.S., " + std::to_string(ins) + " I.NS., " + std::to_string(mutable_count) +
                 " mutable sentences checked";
    return out;
}

Outcome ordering() {
    Outcome out;
    std::mt19937_64 rng(777);
    std::size_t compared = 0;
    for (int i = 0; i < 500; ++i) {
        testing::FuzzOptions options;
        options.weight_ties = true;
        options.max_features = 12;
        auto fc = testing::random_case(rng, options);
        const auto order = rng() % 2 ? ImmutableOrder::SensitiveFirst : ImmutableOrder::NonSensitiveFirst;
        Explanation e = run_style(Style::TXai, fc.c, fc.taxonomy, rng(), VariantPolicy::Mode::SeededMix, order);
        const auto cats = testing::oracle_categories(fc.c, fc.taxonomy);
        std::vector<testing::OrderKey> keys;
        std::vector<std::size_t> changed;
        for (std::size_t k = 0; k < fc.c.features.size(); ++k) {
            if (direction_of(fc.c.features[k]) == Direction::None) continue;
            int group = 0;
            if (cats[k] == Category::ImmutableSensitive) group = order == ImmutableOrder::SensitiveFirst ? 1 : 2;
            if (cats[k] == Category::ImmutableNonSensitive) group = order == ImmutableOrder::SensitiveFirst ? 2 : 1;
            keys.push_back({group, std::abs(fc.c.features[k].attribution), k});
            changed.push_back(k);
        }
        std::vector<std::size_t> expected, got;
        for (auto p : testing::selection_sort_order(keys)) expected.push_back(changed[p]);
        for (const auto& item : e.body) got.push_back(item.sentence.input_index);
        out.expect(got == expected, "T-XAI order differs from the oracle in case " + std::to_string(i));
        ++compared;
    }

    // B-XAI against |attribution| rank, weights distinct.
    double min_rho = 1.0;
    std::size_t rho_cases = 0;
    for (int i = 0; i < 500; ++i) {
        testing::FuzzOptions options;
        options.min_features = 2;
        auto fc = testing::random_case(rng, options);
        if (count_changed(extract_changes(fc.c)) < 2) continue;
        Explanation e = generate_bxai(fc.c, lexicon(), rng());
        std::vector<double> position, weight_rank;
        for (std::size_t k = 0; k < e.body.size(); ++k) {
            position.push_back(static_cast<double>(k + 1));
            weight_rank.push_back(-std::abs(fc.c.find(e.body[k].sentence.feature_name)->attribution));
        }
        const double rho = metrics::spearman_rho(position, weight_rank).rho;
        min_rho = std::min(min_rho, rho);
        out.expect(rho == 1.0, "B-XAI rho " + std::to_string(rho));
        ++rho_cases;
    }

    // GB-XAI: each direction forms one run, groups ordered by their strongest member.
    std::size_t gb_cases = 0;
    for (int i = 0; i < 500; ++i) {
        auto fc = testing::random_case(rng);
        Explanation e = generate_gbxai(fc.c, lexicon(), rng());
        std::vector<Direction> seq;
        for (const auto& item : e.body) {
            for (std::size_t k = 0; k < item.sentence.feature_names.size(); ++k) seq.push_back(item.sentence.direction);
        }
        std::set<Direction> closed;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            if (k > 0 && seq[k] != seq[k - 1]) closed.insert(seq[k - 1]);
            out.expect(!closed.count(seq[k]), "GB-XAI interleaves directions in case " + std::to_string(i));
        }
        std::map<Direction, double> strongest;
        std::map<Direction, std::size_t> strongest_index;
        std::size_t members = 0;
        for (std::size_t k = 0; k < fc.c.features.size(); ++k) {
            const Direction d = direction_of(fc.c.features[k]);
            if (d == Direction::None) continue;
            ++members;
            const double w = std::abs(fc.c.features[k].attribution);
            if (!strongest.count(d) || w > strongest[d]) {
                strongest[d] = w;
                strongest_index[d] = k;
            }
        }
        std::vector<testing::OrderKey> keys;
        std::vector<Direction> dirs;
        for (const auto& [d, w] : strongest) {
            keys.push_back({0, w, strongest_index[d]});
            dirs.push_back(d);
        }
        std::vector<Direction> expected_dirs;
        for (auto p : testing::selection_sort_order(keys)) expected_dirs.push_back(dirs[p]);
        std::vector<Direction> got_dirs;
        for (const auto& item : e.body) got_dirs.push_back(item.sentence.direction);
        out.expect(got_dirs == expected_dirs, "GB-XAI group order in case " + std::to_string(i));
        out.expect(seq.size() == members, "GB-XAI dropped features in case " + std::to_string(i));
        ++gb_cases;
    }
    std::ostringstream d;
    d << compared << " T-XAI cases vs oracle, " << rho_cases << " B-XAI cases min rho " << min_rho << ", " << gb_cases
      << " GB-XAI cases";
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------------

std::string run_cli(const std::string& args, int& status) {
    const std::string cmd = std::string(RECOURSE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

Outcome determinism() {
    Outcome out;
    const fs::path dir = fs::temp_directory_path() / ("recourse_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    for (const auto& name : fixtures::names()) std::ofstream(dir / (name + ".json")) << fixtures::get(name);

    std::size_t library_runs = 0, cli_runs = 0;
    for (auto domain : fixtures::kEvaluationDomains) {
        const std::string d(domain);
        Fixture fx = load(d);
        for (Style style : kStyles) {
            const std::string first = text_of(run_style(style, fx.c, fx.taxonomy, 42));
            const std::string first_json = render_json(run_style(style, fx.c, fx.taxonomy, 42));
            for (int i = 0; i < 100; ++i) {
                out.expect(text_of(run_style(style, fx.c, fx.taxonomy, 42)) == first, d + " library text differs");
                out.expect(render_json(run_style(style, fx.c, fx.taxonomy, 42)) == first_json, d + " library json differs");
                ++library_runs;
            }
            const std::string args = "explain --style " + std::string(to_string(style)) + " --seed 42 --case " +
                                     (dir / (d + "_case.json")).string() + " --taxonomy " +
                                     (dir / (d + "_taxonomy.json")).string();
            int status = 0;
            const std::string cli_first = run_cli(args, status);
            out.expect(status == 0, d + " cli exit " + std::to_string(status));
            for (int i = 0; i < 100; ++i) {
                out.expect(run_cli(args, status) == cli_first, d + " " + std::string(to_string(style)) + " cli output differs");
                ++cli_runs;
            }
        }
    }
    fs::remove_all(dir);
    out.detail = std::to_string(library_runs) + " library and " + std::to_string(cli_runs) +
                 " CLI runs, 3 fixtures x 4 styles, byte-identical";
    return out;
}

std::string random_text(std::mt19937_64& rng) {
    static const char* words[] = {"the", "cat", "Cat", "sat", "on", "mat.", "Increase", "income", "to", "94.0",
                                  "and,", "(a)", "b", "!", "reduce", "x"};
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    std::string out;
    for (int i = 0; i < n; ++i) out += std::string(i ? " " : "") + words[rng() % std::size(words)];
    return out;
}

Outcome metrics_correctness() {
    Outcome out;
    const double flesch = metrics::flesch_score("The cat sat.");
    out.expect(std::abs(flesch - 119.19) <= 0.01, "flesch " + std::to_string(flesch));

    const double r1 = metrics::spearman_rho({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}).rho;
    const double r2 = metrics::spearman_rho({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}).rho;
    const double r3 = metrics::spearman_rho({1, 2, 3, 4, 5}, {2, 1, 4, 3, 5}).rho;
    out.expect(std::abs(r1 - 1.0) <= 1e-12, "rho 1.0 case " + std::to_string(r1));
    out.expect(std::abs(r2 + 1.0) <= 1e-12, "rho -1.0 case " + std::to_string(r2));
    out.expect(std::abs(r3 - 0.8) <= 1e-12, "rho 0.8 case " + std::to_string(r3));

    std::mt19937_64 rng(99);
    std::size_t pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        std::string a = random_text(rng), b = random_text(rng);
        if (metrics::normalised_tokens(a).empty() || metrics::normalised_tokens(b).empty()) {
            --i;
            continue;
        }
        const double ab = metrics::token_similarity(a, b);
        const double ba = metrics::token_similarity(b, a);
        out.expect(ab == ba, "asymmetric: '" + a + "' / '" + b + "'");
        out.expect(metrics::token_similarity(a, a) == 1.0, "identity fails for '" + a + "'");
        out.expect(ab >= 0.0 && ab <= 1.0, "out of range");
        ++pairs;
    }
    std::ostringstream d;
    d.precision(4);
    d << std::fixed << "flesch " << flesch << ", rho " << r1 << "/" << r2 << "/" << r3 << ", " << pairs
      << " similarity pairs";
    out.detail = d.str();
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden-structure", golden_structure},   {"basexai-contrast", basexai_contrast},
        {"taxonomy-fixtures", taxonomy_counts},   {"numeric-fidelity", numeric_fidelity},
        {"routing-safety", routing_safety},       {"ordering", ordering},
        {"determinism", determinism},             {"metrics-correctness", metrics_correctness},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
        std::cout.flush();
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed ? 1 : 0;
}
