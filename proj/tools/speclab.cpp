// speclab command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 a checked claim failed,
// 3 a node budget or iteration limit ran out.

#include "speclab/constructors.hpp"
#include "speclab/error.hpp"
#include "speclab/graph6.hpp"
#include "speclab/minor.hpp"
#include "speclab/search.hpp"
#include "speclab/serialize.hpp"
#include "speclab/spectral.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace speclab;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kExhausted = 3;

struct CliConfig {
    double tolerance = kDefaultTolerance;
    std::size_t max_iter = kDefaultMaxIter;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    std::string format;
    bool timing = true;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    return s.substr(i);
}

std::vector<std::string> stdin_lines()
{
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        line = trim(line);
        if (!line.empty())
            out.push_back(line);
    }
    return out;
}

Graph read_host(const std::string& text)
{
    if (!text.empty() && text != "-")
        return g6_decode(trim(text));
    const auto lines = stdin_lines();
    if (lines.empty())
        throw UsageError("no host graph on stdin");
    return g6_decode(lines.front());
}

VertexSet parse_indices(const std::string& text, std::size_t n)
{
    VertexSet s(n);
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        }
        catch (const std::exception&) {
            throw UsageError("bad vertex index '" + item + "'");
        }
        if (used != item.size())
            throw UsageError("bad vertex index '" + item + "'");
        if (v >= n)
            throw Error(ErrorCode::IndexOutOfRange, "vertex " + item + " outside host of order " + std::to_string(n));
        s.insert(static_cast<Vertex>(v));
    }
    return s;
}

void print_text(const Json& j, const std::string& prefix = "")
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            print_text(*it, prefix + it.key() + ".");
            continue;
        }
        std::cout << prefix << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
}

void emit(const Json& j, const CliConfig& cfg)
{
    if (cfg.format == "text") {
        if (j.is_array()) {
            for (const auto& item : j) {
                print_text(item);
                std::cout << '\n';
            }
        }
        else {
            print_text(j);
        }
        return;
    }
    if (cfg.format == "csv" || cfg.format == "g6")
        throw UsageError("--format " + cfg.format + " is not available for this command");
    std::cout << j.dump(2) << '\n';
}

// ------------------------------------------------------------ pattern text

struct PatternArg {
    enum Kind { Fs, Qt, Graph6 } kind = Fs;
    int param = 1;
    Graph graph;
};

PatternArg parse_pattern(const std::string& text)
{
    auto param_after = [&](std::string_view prefix) {
        const std::string rest = text.substr(prefix.size());
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(rest, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != rest.size() || v < 1)
            throw Error(ErrorCode::InvalidSpec, "bad pattern parameter in '" + text + "'");
        return v;
    };
    PatternArg p;
    if (text.starts_with("fs:s=")) {
        p.kind = PatternArg::Fs;
        p.param = param_after("fs:s=");
        p.graph = construct(friendship_spec(p.param)).graph;
    }
    else if (text.starts_with("qt:t=")) {
        p.kind = PatternArg::Qt;
        p.param = param_after("qt:t=");
        p.graph = construct(intersecting_c4_spec(p.param)).graph;
    }
    else {
        p.kind = PatternArg::Graph6;
        p.graph = g6_decode(text);
    }
    return p;
}

int status_exit(MinorStatus st, const std::string& expect)
{
    if (st == MinorStatus::Exhausted)
        return kExhausted;
    if (expect.empty())
        return kOk;
    const bool found = st == MinorStatus::Found;
    if (expect == "found")
        return found ? kOk : kMismatch;
    return found ? kMismatch : kOk;
}

// ------------------------------------------------------------ subcommands

int cmd_construct(const CliConfig& cfg, const std::string& spec_text, bool layout)
{
    const auto spec = FamilySpec::parse(spec_text);
    const auto built = construct(spec);
    const std::string g6 = g6_encode(built.graph);
    if (!layout && (cfg.format.empty() || cfg.format == "g6")) {
        std::cout << g6 << '\n';
        return kOk;
    }
    if (cfg.format == "g6")
        throw UsageError("--layout needs JSON or text output");
    Json out{{"family", spec.to_string()},
             {"g6", g6},
             {"n", built.graph.order()},
             {"edges", built.graph.edge_count()}};
    if (layout)
        out["layout"] = to_json(built.layout);
    emit(out, cfg);
    return kOk;
}

struct RhoArgs {
    std::string g6;
    std::string family;
    bool from_stdin = false;
    bool closed_form = false;
    bool perron = false;
};

int cmd_rho(const CliConfig& cfg, const RhoArgs& a)
{
    const int sources = (a.g6.empty() ? 0 : 1) + (a.family.empty() ? 0 : 1) + (a.from_stdin ? 1 : 0);
    if (sources != 1)
        throw UsageError("give exactly one of --g6, --family, --stdin");
    if (a.closed_form && a.family.empty())
        throw UsageError("--closed-form needs --family");

    int code = kOk;
    auto one = [&](const Graph& g, const FamilySpec* spec) {
        Json out{{"n", g.order()}, {"edges", g.edge_count()}};
        if (spec)
            out["family"] = spec->to_string();
        const auto r = spectral_radius(g, cfg.tolerance, cfg.max_iter);
        out.update(to_json(r));
        if (a.closed_form) {
            const double exact = rho_closed_form(*spec);
            out["closed_form"] = exact;
            out["delta"] = r.rho - exact;
            if (std::abs(r.rho - exact) > 1e-9)
                code = kMismatch;
        }
        if (a.perron)
            out["perron"] = to_json(verify_perron_bound(g, r, cfg.tolerance));
        return out;
    };

    if (a.from_stdin) {
        const auto lines = stdin_lines();
        if (cfg.format.empty() || cfg.format == "json") {
            for (const auto& line : lines)
                std::cout << one(g6_decode(line), nullptr).dump() << '\n';
        }
        else {
            Json all = Json::array();
            for (const auto& line : lines)
                all.push_back(one(g6_decode(line), nullptr));
            emit(all, cfg);
        }
        return code;
    }
    if (!a.family.empty()) {
        const auto spec = FamilySpec::parse(a.family);
        emit(one(construct(spec).graph, &spec), cfg);
    }
    else {
        emit(one(g6_decode(a.g6), nullptr), cfg);
    }
    return code;
}

struct MinorArgs {
    std::string pattern;
    std::string host;
    std::string certificate_out;
    std::string verify_in;
    std::string expect;
};

int cmd_minor(const CliConfig& cfg, const MinorArgs& a)
{
    const Graph host = read_host(a.host);
    if (!a.verify_in.empty()) {
        std::ifstream in(a.verify_in);
        if (!in)
            throw UsageError("cannot read certificate " + a.verify_in);
        Json doc;
        try {
            doc = Json::parse(in);
        }
        catch (const Json::parse_error& e) {
            throw UsageError(std::string("certificate is not JSON: ") + e.what());
        }
        const MinorModel m = certificate_from_json(doc);
        const bool valid = verify_model(host, m);
        emit(Json{{"valid", valid}, {"pattern_g6", g6_encode(m.pattern)}, {"host_n", m.host_n}}, cfg);
        return valid ? kOk : kMismatch;
    }
    if (a.pattern.empty())
        throw UsageError("--pattern is required");
    const auto p = parse_pattern(a.pattern);
    MinorAnswer ans;
    switch (p.kind) {
    case PatternArg::Fs: ans = has_fs_minor(host, p.param, cfg.node_budget); break;
    case PatternArg::Qt: ans = has_qt_minor(host, p.param, cfg.node_budget); break;
    case PatternArg::Graph6: ans = find_minor_model(host, p.graph, cfg.node_budget); break;
    }
    Json out{{"pattern", a.pattern}, {"pattern_g6", g6_encode(p.graph)}, {"host_n", host.order()}};
    out.update(to_json(ans));
    if (!a.certificate_out.empty() && ans.model) {
        std::ofstream file(a.certificate_out);
        if (!file)
            throw UsageError("cannot write certificate " + a.certificate_out);
        file << certificate_json(*ans.model).dump(2) << '\n';
    }
    emit(out, cfg);
    return status_exit(ans.status, a.expect);
}

int cmd_subgraph(const CliConfig& cfg, const std::string& pattern, const std::string& host_text,
                 const std::string& expect)
{
    const Graph host = read_host(host_text);
    const auto p = parse_pattern(pattern);
    Json out{{"pattern", pattern}, {"host_n", host.order()}};
    MinorStatus st = MinorStatus::NotFound;
    if (p.kind == PatternArg::Fs) {
        const auto w = fs_subgraph_witness(host, p.param);
        st = w ? MinorStatus::Found : MinorStatus::NotFound;
        out["status"] = to_string(st);
        out["witness"] = w ? to_json(*w) : Json(nullptr);
    }
    else if (p.kind == PatternArg::Qt) {
        const auto ans = qt_subgraph_witness(host, p.param, cfg.node_budget);
        st = ans.status;
        out["status"] = to_string(st);
        out["nodes"] = ans.nodes;
        out["witness"] = ans.witness ? to_json(*ans.witness) : Json(nullptr);
    }
    else {
        throw UsageError("subgraph patterns are fs:s=<k> or qt:t=<k>");
    }
    emit(out, cfg);
    return status_exit(st, expect);
}

struct LemmaArgs {
    std::string check;
    std::string host;
    std::string a;
    std::string b;
    int param = 0;
};

int cmd_lemmas(const CliConfig& cfg, const LemmaArgs& args)
{
    static const std::map<std::string, std::string> aliases = {
        {"l33", "structure-fs"}, {"l53", "structure-qt"}, {"l34", "closure-fs"}, {"l54", "closure-qt"}};
    std::string check = args.check;
    if (auto it = aliases.find(check); it != aliases.end())
        check = it->second;

    const Graph host = read_host(args.host);
    const VertexSet a = parse_indices(args.a, host.order());
    if (check == "structure-fs" || check == "structure-qt") {
        const VertexSet b = args.b.empty() ? common_neighborhood(host, a) : parse_indices(args.b, host.order());
        const auto rep = check == "structure-fs" ? check_structure_fs(host, a, b) : check_structure_qt(host, a, b);
        emit(to_json(rep), cfg);
        return kOk;
    }
    if (check == "closure-fs" || check == "closure-qt") {
        ClosureMode mode{check == "closure-fs" ? StructureMode::Fs : StructureMode::Qt,
                         args.param > 0 ? args.param : static_cast<int>(a.size())};
        const auto rep = clique_closure_check(host, a, mode, cfg.node_budget);
        emit(to_json(rep), cfg);
        if (rep.before.status == MinorStatus::Exhausted || rep.after.status == MinorStatus::Exhausted)
            return kExhausted;
        return rep.consistent ? kOk : kMismatch;
    }
    throw UsageError("unknown check '" + args.check + "'");
}

SearchOptions search_options(const CliConfig& cfg)
{
    SearchOptions o;
    o.node_budget = cfg.node_budget;
    o.workers = cfg.workers;
    o.tolerance = cfg.tolerance;
    o.max_iter = cfg.max_iter;
    return o;
}

int cmd_search(const CliConfig& cfg, const std::string& constraint, std::size_t n, bool expect_match)
{
    const auto c = Constraint::parse(constraint);
    const auto rep = extremal_search(n, c, search_options(cfg));
    if (cfg.format == "csv")
        std::cout << search_csv({rep}, cfg.timing);
    else
        emit(to_json(rep, cfg.timing), cfg);
    if (rep.exhausted_count > 0)
        return kExhausted;
    return expect_match && !rep.match ? kMismatch : kOk;
}

int cmd_verify(const CliConfig& cfg, const std::string& mode_text, std::size_t n_from, std::size_t n_to,
               bool expect_match)
{
    TheoremMode mode;
    std::string prefix;
    if (mode_text.starts_with("fs:s=")) {
        mode = TheoremMode::Fs;
        prefix = "fs:s=";
    }
    else if (mode_text.starts_with("qt:t=")) {
        mode = TheoremMode::Qt;
        prefix = "qt:t=";
    }
    else if (mode_text.starts_with("qt-subgraph:t=")) {
        mode = TheoremMode::QtSubgraph;
        prefix = "qt-subgraph:t=";
    }
    else {
        throw UsageError("mode must be fs:s=<k>, qt:t=<k> or qt-subgraph:t=<k>");
    }
    int param = 0;
    try {
        std::size_t used = 0;
        param = std::stoi(mode_text.substr(prefix.size()), &used);
        if (used != mode_text.size() - prefix.size())
            param = 0;
    }
    catch (const std::exception&) {
        param = 0;
    }
    if (param < 1)
        throw UsageError("bad mode parameter in '" + mode_text + "'");

    const auto checks = verify_theorem_small_n(mode, param, n_from, n_to, search_options(cfg));
    if (cfg.format == "csv") {
        std::vector<SearchReport> reports;
        for (const auto& c : checks)
            reports.push_back(c.report);
        std::cout << search_csv(reports, cfg.timing);
    }
    else {
        Json all = Json::array();
        for (const auto& c : checks)
            all.push_back(to_json(c, cfg.timing));
        emit(all, cfg);
    }
    bool exhausted = false;
    bool failed = false;
    for (const auto& c : checks) {
        exhausted = exhausted || c.report.exhausted_count > 0 || c.predicted_status == MinorStatus::Exhausted;
        failed = failed || !c.predicted_free || !c.closed_form_agrees || (expect_match && !c.report.match);
    }
    if (exhausted)
        return kExhausted;
    return failed ? kMismatch : kOk;
}

int cmd_audit(const CliConfig& cfg, const std::vector<std::string>& families, int param, const std::string& mode,
              double c)
{
    std::vector<FamilySpec> specs;
    for (const auto& f : families)
        specs.push_back(FamilySpec::parse(f));
    if (param <= 0) {
        param = 1;
        for (const auto& s : specs) {
            if (s.params.contains("s")) {
                param = s.at("s");
                break;
            }
            if (s.params.contains("t")) {
                param = s.at("t");
                break;
            }
        }
    }
    const auto audit = edge_bound_audit(specs, param, mode == "qt" ? StructureMode::Qt : StructureMode::Fs, c);
    emit(to_json(audit), cfg);
    return audit.all_ok ? kOk : kMismatch;
}

int exit_for(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::ConvergenceFailure: return kExhausted;
    case ErrorCode::PreconditionFailed: return kMismatch;
    default: return kUsage;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral extremal graph toolkit: constructions, minors, spectral radii, searches"};
    app.require_subcommand(1);
    CliConfig cfg;

    app.add_option("--tol", cfg.tolerance, "Power-iteration residual tolerance")
        ->envname("SPECLAB_TOLERANCE")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-iter", cfg.max_iter, "Power-iteration limit")->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.node_budget, "Node budget per minor search")
        ->envname("SPECLAB_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--workers", cfg.workers, "Search worker threads")
        ->envname("SPECLAB_WORKERS")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "g6", "text"}));
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "Write elapsed as 0 for reproducible output");

    auto* construct_cmd = app.add_subcommand("construct", "Build a named family and print its graph6");
    std::string spec_text;
    bool layout = false;
    construct_cmd->add_option("spec", spec_text, "Family spec, e.g. friendship:s=3")->required();
    construct_cmd->add_flag("--layout", layout, "Print the region layout as JSON");

    auto* rho_cmd = app.add_subcommand("rho", "Spectral radius and Perron vector");
    RhoArgs rho;
    rho_cmd->add_option("--g6", rho.g6, "Graph in graph6");
    rho_cmd->add_option("--family", rho.family, "Family spec");
    rho_cmd->add_flag("--stdin", rho.from_stdin, "Read graph6 lines from stdin");
    rho_cmd->add_flag("--closed-form", rho.closed_form, "Compare with the analytic value");
    rho_cmd->add_flag("--perron", rho.perron, "Report min entry against 1/rho");

    auto* minor_cmd = app.add_subcommand("minor", "Minor containment with certificate");
    MinorArgs minor;
    minor_cmd->add_option("--pattern", minor.pattern, "fs:s=<k>, qt:t=<k> or a graph6 pattern");
    minor_cmd->add_option("--host", minor.host, "Host graph6, '-' for stdin");
    minor_cmd->add_option("--certificate", minor.certificate_out, "Write the certificate here on Found");
    minor_cmd->add_option("--verify", minor.verify_in, "Re-verify a certificate file against the host");
    minor_cmd->add_option("--expect", minor.expect, "Exit 2 unless the status matches")
        ->check(CLI::IsMember({"found", "not-found"}));

    auto* sub_cmd = app.add_subcommand("subgraph", "F_s / Q_t subgraph witness");
    std::string sub_pattern, sub_host, sub_expect;
    sub_cmd->add_option("--pattern", sub_pattern, "fs:s=<k> or qt:t=<k>")->required();
    sub_cmd->add_option("--host", sub_host, "Host graph6, '-' for stdin");
    sub_cmd->add_option("--expect", sub_expect, "Exit 2 unless the status matches")
        ->check(CLI::IsMember({"found", "not-found"}));

    auto* lemma_cmd = app.add_subcommand("lemmas", "Structure and clique-closure checks");
    LemmaArgs lemma;
    lemma_cmd->add_option("--check", lemma.check, "structure-fs|structure-qt|closure-fs|closure-qt (or l33|l53|l34|l54)")
        ->required();
    lemma_cmd->add_option("--host", lemma.host, "Host graph6, '-' for stdin");
    lemma_cmd->add_option("--A", lemma.a, "Comma-separated vertex indices")->required();
    lemma_cmd->add_option("--B", lemma.b, "Comma-separated vertex indices (default: common neighbourhood of A)");
    lemma_cmd->add_option("--param", lemma.param, "s or t for closure checks (default |A|)");

    auto* search_cmd = app.add_subcommand("search", "Exhaustive spectral extremal search");
    std::string constraint;
    std::size_t search_n = 0;
    bool search_expect = false;
    search_cmd->add_option("--constraint", constraint, "e.g. fs-minor:s=1")->required();
    search_cmd->add_option("--n", search_n, "Vertex count")->required();
    search_cmd->add_flag("--expect-match", search_expect, "Exit 2 unless the predicted graph is a maximizer");

    auto* verify_cmd = app.add_subcommand("verify", "Predicted-extremal checks over a range of n");
    std::string mode_text;
    std::size_t n_from = 0, n_to = 0;
    bool verify_expect = false;
    verify_cmd->add_option("--mode", mode_text, "fs:s=<k>, qt:t=<k> or qt-subgraph:t=<k>")->required();
    verify_cmd->add_option("--n-from", n_from)->required();
    verify_cmd->add_option("--n-to", n_to)->required();
    verify_cmd->add_flag("--expect-match", verify_expect, "Exit 2 unless every n matches");

    auto* audit_cmd = app.add_subcommand("audit", "Edge-count audit of constructions");
    std::vector<std::string> families;
    int audit_param = 0;
    std::string audit_mode = "fs";
    double audit_c = 0.0;
    audit_cmd->add_option("--family", families, "Family spec (repeatable)")->required();
    audit_cmd->add_option("--param", audit_param, "s or t for the bipartite bound");
    audit_cmd->add_option("--mode", audit_mode, "fs or qt")->check(CLI::IsMember({"fs", "qt"}));
    audit_cmd->add_option("--c", audit_c, "Constant C in C a + s n");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    cfg.timing = !no_timing;

    try {
        if (construct_cmd->parsed())
            return cmd_construct(cfg, spec_text, layout);
        if (rho_cmd->parsed())
            return cmd_rho(cfg, rho);
        if (minor_cmd->parsed())
            return cmd_minor(cfg, minor);
        if (sub_cmd->parsed())
            return cmd_subgraph(cfg, sub_pattern, sub_host, sub_expect);
        if (lemma_cmd->parsed())
            return cmd_lemmas(cfg, lemma);
        if (search_cmd->parsed())
            return cmd_search(cfg, constraint, search_n, search_expect);
        if (verify_cmd->parsed())
            return cmd_verify(cfg, mode_text, n_from, n_to, verify_expect);
        if (audit_cmd->parsed())
            return cmd_audit(cfg, families, audit_param, audit_mode, audit_c);
    }
    catch (const UsageError& e) {
        std::cerr << "speclab: " << e.what() << '\n';
        return kUsage;
    }
    catch (const Error& e) {
        std::cerr << "speclab: " << e.what() << '\n';
        return exit_for(e);
    }
    return kUsage;
}
