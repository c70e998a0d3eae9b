// tsibc: identifiability of total effects in summary causal graphs.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tsibc/accessibility.hpp"
#include "tsibc/agreement.hpp"
#include "tsibc/cone.hpp"
#include "tsibc/decider.hpp"
#include "tsibc/errors.hpp"
#include "tsibc/json_io.hpp"
#include "tsibc/random_corpus.hpp"

using namespace tsibc;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInternal = 2, kNotIdentifiable = 3 };

struct RunConfig {
    std::string input = "-";
    std::string format;
    std::vector<std::string> dos;
    std::vector<std::string> effects;
    std::string query_file;
    bool consistency = false;
    std::string output = "json";
    std::optional<std::int64_t> window_lo;
    std::optional<std::int64_t> window_hi;
    std::optional<int> max_lag;
    std::uint64_t budget = std::uint64_t{1} << 22;
    bool enumerate = false;
    bool show_nc = false;
    std::string show_access;
    // random
    std::uint64_t seed = 1;
    int count = 10;
    int min_series = 2;
    int max_series = 5;
    double edge_prob = 0.3;
    double self_loop_prob = 0.3;
    int max_interventions = 3;
    std::int64_t max_gamma = 2;
    std::string out_dir = ".";
};

bool json_mode(const RunConfig& c) { return c.output == "json"; }

std::string read_all(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string read_file(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_all(in);
}

GraphFormat input_format(const RunConfig& c) {
    if (!c.format.empty()) return format_from_name(c.format);
    auto ext = std::filesystem::path(c.input).extension().string();
    if (ext == ".json") return GraphFormat::Json;
    if (ext == ".dot" || ext == ".gv") return GraphFormat::Dot;
    return GraphFormat::Edgelist;
}

Scg load_graph(const RunConfig& c) { return parse_scg(read_file(c.input), input_format(c)); }

CausalQuery load_query(const Scg& g, const RunConfig& c) {
    CausalQuery q;
    if (!c.query_file.empty()) q = parse_query_file(g, read_file(c.query_file));
    // Flags add to the file; validation runs once on the merged query.
    for (const auto& d : c.dos) q.interventions.push_back(parse_temporal(g, d));
    for (const auto& e : c.effects) q.effects.push_back(parse_temporal(g, e));
    if (q.effects.empty()) throw InvalidQuery("at least one --effect is required");
    q.validate(g);
    return q;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_verdict_text(const Scg& g, const IbcVerdict& v) {
    std::cout << "identifiable: " << (v.identifiable ? "yes" : "no") << '\n';
    std::cout << "consistency: " << (v.consistency ? "assumed" : "not assumed") << '\n';
    if (!v.pruned.empty()) {
        std::cout << "pruned:";
        for (const auto& p : v.pruned) std::cout << ' ' << to_string(g, p);
        std::cout << '\n';
    }
    if (v.witness) {
        const auto& w = *v.witness;
        std::cout << "witness: " << w.rule << " from " << to_string(g, w.intervention) << " to "
                  << to_string(g, w.effect);
        if (w.fork) std::cout << " via " << to_string(g, *w.fork);
        std::cout << '\n';
        if (!w.sketch.empty()) std::cout << "path: " << path_to_string(g.names(), w.sketch) << '\n';
    }
    if (v.adjustment) std::cout << "adjustment: " << describe_adjustment(g, *v.adjustment) << '\n';
    if (v.formula) std::cout << "formula: " << *v.formula << '\n';
}

int cmd_decide(const RunConfig& c) {
    Scg g = load_graph(c);
    CausalQuery q = load_query(g, c);
    IbcVerdict v = decide(g, q, c.consistency);
    if (json_mode(c))
        print_json(verdict_to_json(g, v));
    else
        print_verdict_text(g, v);
    return v.identifiable ? kOk : kNotIdentifiable;
}

int cmd_adjust(const RunConfig& c) {
    Scg g = load_graph(c);
    CausalQuery q = load_query(g, c);
    IbcVerdict v = decide(g, q, c.consistency);
    if (json_mode(c)) {
        Json j;
        j["identifiable"] = v.identifiable;
        if (v.formula) {
            j["formula"] = *v.formula;
            j["adjustment"] = adjustment_to_json(g, *v.adjustment);
        } else {
            j["witness"] = witness_to_json(g, *v.witness);
        }
        print_json(j);
    } else if (v.formula) {
        std::cout << *v.formula << '\n';
    } else {
        print_verdict_text(g, v);
    }
    return v.identifiable ? kOk : kNotIdentifiable;
}

int cmd_oracle_check(const RunConfig& c) {
    Scg g = load_graph(c);
    CausalQuery q = load_query(g, c);
    OracleOverrides o;
    o.window_lo = c.window_lo;
    o.window_hi = c.window_hi;
    o.max_lag = c.max_lag;
    o.budget = c.budget;
    o.enumerate = c.enumerate;
    AgreementReport r = oracle_check(g, q, c.consistency, o);
    if (json_mode(c)) {
        Json j;
        j["result"] = r.agree ? "AGREE" : "DISAGREE";
        j["decide"] = verdict_to_json(g, r.verdict);
        Json effects = Json::array();
        for (const auto& e : r.effects) {
            Json ej;
            ej["effect"] = vertex_to_json(g, e.effect);
            ej["identifiable"] = e.decided_identifiable;
            ej["oracle_witness"] = e.oracle_witness;
            ej["witness_embeds"] = e.witness_embeds;
            if (e.path) ej["path"] = path_to_json(g, *e.path);
            ej[c.enumerate ? "candidates" : "states"] = e.explored;
            effects.push_back(std::move(ej));
        }
        j["effects"] = std::move(effects);
        print_json(j);
    } else {
        std::cout << r.summary(g) << '\n';
        for (const auto& e : r.effects)
            if (e.path) std::cout << "oracle path: " << path_to_string(g.names(), *e.path) << '\n';
    }
    return r.agree ? kOk : kInternal;
}

std::string numbered(const std::string& stem, int k, const std::string& ext) {
    std::ostringstream s;
    s << stem << '_' << std::setw(4) << std::setfill('0') << k << ext;
    return s.str();
}

int cmd_random(const RunConfig& c) {
    if (c.min_series < 1 || c.max_series < c.min_series) throw InvalidQuery("bad series range");
    if (c.max_interventions < 1 || c.max_gamma < 0) throw InvalidQuery("bad intervention bounds");
    RandomSpec spec;
    spec.seed = c.seed;
    spec.min_series = c.min_series;
    spec.max_series = c.max_series;
    spec.edge_prob = c.edge_prob;
    spec.self_loop_prob = c.self_loop_prob;
    spec.max_interventions = c.max_interventions;
    spec.max_gamma = c.max_gamma;
    GraphFormat fmt = c.format.empty() ? GraphFormat::Json : format_from_name(c.format);
    const char* ext = fmt == GraphFormat::Json ? ".json" : fmt == GraphFormat::Dot ? ".dot" : ".txt";
    std::filesystem::create_directories(c.out_dir);
    Json files = Json::array();
    auto corpus = random_corpus(spec, c.count);
    for (int k = 0; k < c.count; ++k) {
        const auto& inst = corpus[static_cast<std::size_t>(k)];
        auto gpath = std::filesystem::path(c.out_dir) / numbered("scg", k, ext);
        auto qpath = std::filesystem::path(c.out_dir) / numbered("query", k, ".json");
        std::ofstream(gpath) << serialize_scg(inst.scg, fmt);
        std::ofstream(qpath) << query_to_json(inst.scg, inst.query).dump(2) << '\n';
        files.push_back(Json{{"scg", gpath.string()}, {"query", qpath.string()}});
    }
    if (json_mode(c))
        print_json(files);
    else
        for (const auto& f : files) std::cout << f["scg"].get<std::string>() << ' ' << f["query"].get<std::string>() << '\n';
    return kOk;
}

int cmd_explain(const RunConfig& c) {
    Scg g = load_graph(c);
    CausalQuery q = load_query(g, c);
    IbcVerdict v = decide(g, q, c.consistency);
    // Profiles are shown for the first effect, shifted to time 0.
    Preprocessed pre = preprocess(g, CausalQuery{q.interventions, {q.effects.front()}});
    NcProfile p = compute_t_nc(g, pre.query);
    std::optional<AccessibilityProfile> acc;
    if (!c.show_access.empty()) acc = compute_accessibility(g, p, parse_temporal(g, c.show_access));
    if (json_mode(c)) {
        Json j;
        j["verdict"] = verdict_to_json(g, v);
        if (c.show_nc) j["t_nc"] = thresholds_to_json(g, p);
        if (acc) j["accessibility"] = accessibility_to_json(g, *acc);
        print_json(j);
    } else {
        print_verdict_text(g, v);
        if (c.show_nc)
            for (std::size_t s = 0; s < g.size(); ++s)
                std::cout << "t_nc(" << g.name(static_cast<SeriesIdx>(s))
                          << ") = " << p.threshold(static_cast<SeriesIdx>(s)).str() << '\n';
        if (acc)
            for (std::size_t s = 0; s < g.size(); ++s)
                std::cout << "ceiling(" << g.name(static_cast<SeriesIdx>(s)) << ") = " << acc->ceilings[s].str()
                          << '\n';
    }
    return v.identifiable ? kOk : kNotIdentifiable;
}

void report_error(const RunConfig& c, const std::string& kind, const std::string& msg) {
    std::cerr << "tsibc: " << msg << '\n';
    if (json_mode(c)) print_json(Json{{"error", kind}, {"message", msg}});
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig c;
    if (const char* env = std::getenv("TSIBC_BUDGET")) {
        try {
            c.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "tsibc: ignoring malformed TSIBC_BUDGET\n";
        }
    }

    CLI::App app{"Common-backdoor identifiability of total effects in summary causal graphs"};
    app.require_subcommand(1);

    auto add_query_opts = [&](CLI::App* sub) {
        sub->add_option("graph", c.input, "Graph file, or - for stdin");
        sub->add_option("--format", c.format, "json, edgelist or dot")->check(CLI::IsMember({"json", "edgelist", "dot"}));
        sub->add_option("--do", c.dos, "Intervention SERIES@TIME (repeatable)");
        sub->add_option("--effect", c.effects, "Effect SERIES@TIME (repeatable)");
        sub->add_option("--query", c.query_file, "Query JSON file");
        sub->add_flag("--consistency", c.consistency, "Assume consistency throughout time");
        sub->add_option("--output", c.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* decide_cmd = app.add_subcommand("decide", "Decide identifiability");
    add_query_opts(decide_cmd);
    auto* adjust_cmd = app.add_subcommand("adjust", "Print the do-free formula");
    add_query_opts(adjust_cmd);
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check decide against the brute-force oracle");
    add_query_opts(oracle_cmd);
    oracle_cmd->add_option("--window-lo", c.window_lo, "Oracle window start");
    oracle_cmd->add_option("--window-hi", c.window_hi, "Oracle window end");
    oracle_cmd->add_option("--max-lag", c.max_lag, "Largest lag of candidate arrows")->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--budget", c.budget, "Search state / candidate cap")->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--enumerate", c.enumerate, "Enumerate candidate graphs explicitly");
    auto* explain_cmd = app.add_subcommand("explain", "Show NC thresholds and accessibility profiles");
    add_query_opts(explain_cmd);
    explain_cmd->add_flag("--show-nc", c.show_nc, "Dump t_NC per series");
    explain_cmd->add_option("--show-access", c.show_access, "Dump ceilings towards SERIES@TIME");
    auto* random_cmd = app.add_subcommand("random", "Write a random SCG and query corpus");
    random_cmd->add_option("--seed", c.seed, "RNG seed");
    random_cmd->add_option("--count", c.count, "Number of instances")->check(CLI::NonNegativeNumber);
    random_cmd->add_option("--min-series", c.min_series, "Fewest series");
    random_cmd->add_option("--series", c.max_series, "Most series");
    random_cmd->add_option("--edge-prob", c.edge_prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
    random_cmd->add_option("--self-loop-prob", c.self_loop_prob, "Self-loop probability")->check(CLI::Range(0.0, 1.0));
    random_cmd->add_option("--max-interventions", c.max_interventions, "Most interventions per query");
    random_cmd->add_option("--max-gamma", c.max_gamma, "Largest intervention lag");
    random_cmd->add_option("--out", c.out_dir, "Output directory");
    random_cmd->add_option("--format", c.format, "Graph file format")->check(CLI::IsMember({"json", "edgelist", "dot"}));
    random_cmd->add_option("--output", c.output, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*decide_cmd) return cmd_decide(c);
        if (*adjust_cmd) return cmd_adjust(c);
        if (*oracle_cmd) return cmd_oracle_check(c);
        if (*explain_cmd) return cmd_explain(c);
        if (*random_cmd) return cmd_random(c);
    } catch (const BudgetExceeded& e) {
        report_error(c, "BudgetExceeded", e.what());
        return kUsage;
    } catch (const Error& e) {
        report_error(c, "InputError", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        report_error(c, "InternalError", e.what());
        return kInternal;
    }
    return kUsage;
}
