#include "sbvr2ocl/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sbvr2ocl/class_model.hpp"
#include "sbvr2ocl/evaluator.hpp"
#include "sbvr2ocl/feature_matrix.hpp"
#include "sbvr2ocl/mapper.hpp"
#include "sbvr2ocl/ocl_printer.hpp"
#include "sbvr2ocl/parser.hpp"
#include "sbvr2ocl/snapshot.hpp"
#include "sbvr2ocl/typecheck.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

namespace {

constexpr int kOk = 0;
constexpr int kContentError = 1; // malformed input file contents
constexpr int kUsageError = 2;   // bad flags or unreadable paths

struct RunConfig {
    std::string vocab_path;
    std::string rules_path;
    std::string out_path;      // transpile; empty = standard output
    std::string snapshot_path; // eval
    std::string semantics = "both";
    std::string format = "text";
    bool strict = false;
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_diagnostics(const std::string& path, const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds) std::cerr << path << ": " << format_diagnostic(d) << '\n';
}

struct Pipeline {
    Vocabulary vocab;
    ClassModel model;
    ParseResult parsed;
    std::vector<MapResult> outcomes;                      // aligned with parsed.rules
    std::vector<std::optional<OclConstraint>> checked;    // aligned; present iff fully clean
    int errors = 0;
    int warnings = 0;

    std::vector<OclConstraint> constraints() const {
        std::vector<OclConstraint> out;
        for (const auto& c : checked)
            if (c) out.push_back(*c);
        return out;
    }
};

// Loads vocabulary + rules and, unless parse_only, maps and type-checks every
// rule, printing diagnostics to standard error. Returns an exit code; kOk
// means the pipeline ran (possibly accumulating content errors in p.errors).
int load_pipeline(const RunConfig& cfg, bool parse_only, Pipeline& p) {
    auto vocab_text = read_file(cfg.vocab_path);
    if (!vocab_text) {
        std::cerr << "sbvr2ocl: cannot read '" << cfg.vocab_path << "'\n";
        return kUsageError;
    }
    auto vocab = load_vocabulary(*vocab_text);
    print_diagnostics(cfg.vocab_path, vocab.diagnostics);
    if (!vocab.ok()) return kContentError;
    p.vocab = std::move(*vocab.value);

    auto model = derive_class_model(p.vocab);
    print_diagnostics(cfg.vocab_path, model.diagnostics);
    if (!model.ok()) return kContentError;
    p.model = std::move(*model.value);

    auto rules_text = read_file(cfg.rules_path);
    if (!rules_text) {
        std::cerr << "sbvr2ocl: cannot read '" << cfg.rules_path << "'\n";
        return kUsageError;
    }
    p.parsed = parse_rules(*rules_text, p.vocab);
    print_diagnostics(cfg.rules_path, p.parsed.diagnostics);
    for (const auto& d : p.parsed.diagnostics)
        if (d.severity == Severity::Error)
            ++p.errors;
        else
            ++p.warnings;
    if (parse_only) return kOk;

    for (const auto& rule : p.parsed.rules) {
        MapResult outcome = map_rule(rule, p.vocab, p.model);
        for (const auto& [code, message] : outcome.errors) {
            std::cerr << cfg.rules_path << ": rule " << rule.index << ": error " << code << ": "
                      << message << '\n';
            ++p.errors;
        }
        for (const auto& [code, message] : outcome.warnings) {
            std::cerr << cfg.rules_path << ": rule " << rule.index << ": warning " << code << ": "
                      << message << '\n';
            ++p.warnings;
        }
        std::optional<OclConstraint> ok_constraint;
        if (outcome.constraint) {
            TypeResult tc = typecheck(*outcome.constraint, p.model);
            for (const auto& d : tc.diagnostics) {
                std::cerr << cfg.rules_path << ": rule " << rule.index << ": error " << d.code
                          << ": " << d.message << " (at " << d.location << ")\n";
                ++p.errors;
            }
            if (tc.ok()) ok_constraint = *outcome.constraint;
        }
        p.outcomes.push_back(std::move(outcome));
        p.checked.push_back(std::move(ok_constraint));
    }
    return kOk;
}

int pipeline_exit(const RunConfig& cfg, const Pipeline& p) {
    if (p.errors > 0) return kContentError;
    if (cfg.strict && p.warnings > 0) return kContentError;
    return kOk;
}

int cmd_transpile(const RunConfig& cfg) {
    Pipeline p;
    if (int rc = load_pipeline(cfg, false, p); rc != kOk) return rc;
    std::string text = print_ocl_file(p.constraints());
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "sbvr2ocl: cannot write '" << cfg.out_path << "'\n";
            return kUsageError;
        }
        out << text;
    }
    return pipeline_exit(cfg, p);
}

int cmd_check(const RunConfig& cfg) {
    Pipeline p;
    if (int rc = load_pipeline(cfg, false, p); rc != kOk) return rc;
    int mapped = 0;
    for (const auto& o : p.outcomes)
        if (o.constraint) ++mapped;
    std::cout << "parsed=" << p.parsed.rules.size() << " mapped=" << mapped
              << " warnings=" << p.warnings << " errors=" << p.errors << '\n';
    return pipeline_exit(cfg, p);
}

int cmd_eval(const RunConfig& cfg) {
    Pipeline p;
    if (int rc = load_pipeline(cfg, false, p); rc != kOk) return rc;
    if (pipeline_exit(cfg, p) != kOk) return kContentError;

    auto snap_text = read_file(cfg.snapshot_path);
    if (!snap_text) {
        std::cerr << "sbvr2ocl: cannot read '" << cfg.snapshot_path << "'\n";
        return kUsageError;
    }
    auto snap = load_snapshot(*snap_text, p.vocab);
    print_diagnostics(cfg.snapshot_path, snap.diagnostics);
    if (!snap.ok()) return kContentError;

    SnapshotIndex idx(*snap.value, p.vocab, p.model);
    for (size_t i = 0; i < p.parsed.rules.size(); ++i) {
        const auto& constraint = p.checked[i];
        // pre/post constraints need a call event, so only invariants evaluate
        if (!constraint || constraint->kind != ConstraintKind::Inv) continue;
        std::cout << constraint->label;
        if (cfg.semantics != "ocl")
            std::cout << " sbvr=" << (eval_sbvr(p.parsed.rules[i], idx) ? 't' : 'f');
        if (cfg.semantics != "sbvr") std::cout << " ocl=" << to_char(eval_ocl(*constraint, idx));
        std::cout << '\n';
    }
    return kOk;
}

int cmd_report(const RunConfig& cfg) {
    Pipeline p;
    if (int rc = load_pipeline(cfg, false, p); rc != kOk) return rc;
    FeatureMatrix fm = build_feature_matrix(p.parsed.rules, p.outcomes, p.vocab);
    std::cout << (cfg.format == "json" ? render_feature_matrix_json(fm)
                                       : render_feature_matrix_text(fm));
    // Usage counts need parsed rules; mapping-stage errors are informational.
    return any_errors(p.parsed.diagnostics) ? kContentError : kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"SBVR Structured English to OCL transpiler"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--vocab", cfg.vocab_path, "business vocabulary file")->required();
        cmd->add_option("--rules", cfg.rules_path, "rule file")->required();
    };

    CLI::App* transpile = app.add_subcommand("transpile", "translate rules to OCL constraints");
    add_common(transpile);
    transpile->add_option("-o,--out", cfg.out_path, "output file (default: standard output)");
    transpile->add_flag("--strict", cfg.strict, "treat warnings as errors");

    CLI::App* check = app.add_subcommand("check", "run the pipeline and print counts");
    add_common(check);
    check->add_flag("--strict", cfg.strict, "treat warnings as errors");

    CLI::App* eval = app.add_subcommand("eval", "evaluate invariants against a snapshot");
    add_common(eval);
    eval->add_option("--snapshot", cfg.snapshot_path, "snapshot file")->required();
    eval->add_option("--semantics", cfg.semantics, "semantics to print: sbvr, ocl, or both")
        ->check(CLI::IsMember({"sbvr", "ocl", "both"}));

    CLI::App* report = app.add_subcommand("report", "print the feature support matrix");
    add_common(report);
    report->add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints help or the error message
        return rc == 0 ? kOk : kUsageError;
    }

    if (transpile->parsed()) return cmd_transpile(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (eval->parsed()) return cmd_eval(cfg);
    if (report->parsed()) return cmd_report(cfg);
    return kUsageError;
}

} // namespace sbvr2ocl
