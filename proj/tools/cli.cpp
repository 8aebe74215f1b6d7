#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pisz/algorithms.hpp"
#include "pisz/enumerate.hpp"
#include "pisz/families.hpp"
#include "pisz/graph6.hpp"
#include "pisz/invariants.hpp"
#include "pisz/report.hpp"
#include "pisz/theorems.hpp"

namespace pisz::cli {

namespace {

enum class Format { kHuman, kJson, kCsv };

struct CliConfig {
    std::string command;
    std::string input = "-";
    Format format = Format::kHuman;
    int workers = 1;
    int order = 0;
    std::string shard = "0/1";
    bool allow_large = false;

    // generate
    bool connected = false;
    int min_degree = 0;
    bool bipartite = false;
    bool triangle_free = false;

    // families / formulas
    int yn = 0;
    std::vector<int> srg;
    int yn_count = 0;
    std::vector<int> multipartite;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kBatchLines = 4096;

std::string csv_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct LineResult {
    std::string text;
    int status = kOk;
};

// Reads graph6 lines in fixed-size batches, evaluates each batch on the
// worker pool and writes results back in input order. Returns the worst
// status seen: parse errors dominate disconnected inputs, which dominate
// failed checks.
template <class Fn>
int process_stream(std::istream& in, std::ostream& out, int workers, Fn evaluate) {
    Graph6LineReader reader(in);
    std::vector<std::pair<std::size_t, std::string>> batch;
    std::vector<LineResult> results;
    bool saw_parse = false;
    bool saw_disconnected = false;
    bool saw_failed = false;
    for (;;) {
        batch.clear();
        while (batch.size() < kBatchLines) {
            auto line = reader.next();
            if (!line) break;
            batch.emplace_back(reader.line_number(), std::move(*line));
        }
        if (batch.empty()) break;
        results.assign(batch.size(), {});
        detail::parallel_for(batch.size(), workers,
                             [&](std::size_t i) { results[i] = evaluate(batch[i].first, batch[i].second); });
        for (const auto& r : results) {
            out << r.text;
            saw_parse |= r.status == kParseError;
            saw_disconnected |= r.status == kDisconnected;
            saw_failed |= r.status == kCheckFailed;
        }
    }
    if (in.bad()) return kIoFailure;
    if (saw_parse) return kParseError;
    if (saw_disconnected) return kDisconnected;
    if (saw_failed) return kCheckFailed;
    return kOk;
}

LineResult error_line(Format format, std::size_t line, std::string_view input, std::string_view message,
                      int status, int csv_columns) {
    LineResult r;
    r.status = status;
    switch (format) {
        case Format::kJson:
            r.text = error_json(line, input, message).dump() + "\n";
            break;
        case Format::kCsv:
            r.text = std::to_string(line) + "," + csv_quote(input) + std::string(csv_columns + 1, ',') +
                     csv_quote(message) + "\n";
            break;
        case Format::kHuman:
            r.text = "line " + std::to_string(line) + ": error: " + std::string(message) + "\n";
            break;
    }
    return r;
}

// Parses one payload; on failure fills `failure` and returns nullopt.
std::optional<Graph> parse_line(Format format, std::size_t line, const std::string& payload, int csv_columns,
                                LineResult& failure) {
    try {
        Graph g = parse_graph6(payload);
        if (g.order() == 0 || !is_connected(g)) {
            failure = error_line(format, line, payload, "graph is disconnected", kDisconnected, csv_columns);
            return std::nullopt;
        }
        return g;
    } catch (const Graph6Error& e) {
        failure = error_line(format, line, payload, e.what(), kParseError, csv_columns);
    } catch (const GraphError& e) {
        failure = error_line(format, line, payload, e.what(), kParseError, csv_columns);
    }
    return std::nullopt;
}

int with_input(const CliConfig& cfg, std::istream& in, std::ostream& err,
               const std::function<int(std::istream&)>& body) {
    if (cfg.input == "-") return body(in);
    std::ifstream file(cfg.input);
    if (!file) {
        err << "cannot open " << cfg.input << "\n";
        return kIoFailure;
    }
    return body(file);
}

int cmd_compute(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    // Data columns after line,graph6 in the CSV layout.
    constexpr int kCsvColumns = 12;
    if (cfg.format == Format::kCsv) out << invariants_csv_header() << ",error\n";
    return with_input(cfg, in, err, [&](std::istream& src) {
        return process_stream(src, out, cfg.workers, [&](std::size_t line, const std::string& payload) {
            LineResult r;
            const auto g = parse_line(cfg.format, line, payload, kCsvColumns, r);
            if (!g) return r;
            const InvariantVector iv = compute_invariants(*g);
            const std::string g6 = write_graph6(*g);
            switch (cfg.format) {
                case Format::kJson:
                    r.text = invariants_json(line, g6, iv, g->order(), g->size()).dump() + "\n";
                    break;
                case Format::kCsv:
                    r.text = invariants_csv_row(line, g6, iv, g->order(), g->size()) + ",\n";
                    break;
                case Format::kHuman: {
                    std::ostringstream os;
                    os << "line " << line << ": " << g6 << " n=" << g->order() << " m=" << g->size()
                       << " W=" << iv.wiener << " PI=" << iv.pi << " PIv=" << iv.vertex_pi << " Sz=" << iv.szeged
                       << " SzE=" << iv.edge_szeged << " M1=" << iv.zagreb1 << " M2=" << iv.zagreb2
                       << " t=" << iv.triangles << " diam=" << iv.diameter << " delta=" << iv.min_degree << "\n";
                    r.text = os.str();
                    break;
                }
            }
            return r;
        });
    });
}

int cmd_verify(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    constexpr int kCsvColumns = 9;
    if (cfg.format == Format::kCsv) out << verdict_csv_header() << ",error\n";
    return with_input(cfg, in, err, [&](std::istream& src) {
        return process_stream(src, out, cfg.workers, [&](std::size_t line, const std::string& payload) {
            LineResult r;
            const auto g = parse_line(cfg.format, line, payload, kCsvColumns, r);
            if (!g) return r;
            const std::string g6 = write_graph6(*g);
            std::ostringstream os;
            if (cfg.format == Format::kHuman) os << "line " << line << ": " << g6 << "\n";
            for (const TheoremVerdict& v : run_all(*g)) {
                if (v.outcome && (!v.outcome->holds || !v.outcome->consistent)) r.status = kCheckFailed;
                switch (cfg.format) {
                    case Format::kJson:
                        os << verdict_json(line, g6, v).dump() << "\n";
                        break;
                    case Format::kCsv:
                        os << verdict_csv_row(line, g6, v) << ",\n";
                        break;
                    case Format::kHuman:
                        os << "  " << std::left << std::setw(28) << theorem_key(v.id);
                        if (!v.outcome) {
                            os << "not applicable\n";
                            break;
                        }
                        os << v.outcome->lhs << (v.outcome->relation == Relation::kLessEqual ? " <= " : " >= ")
                           << v.outcome->rhs << (v.outcome->holds ? "" : "  VIOLATED")
                           << (v.outcome->equality ? "  equality" : "")
                           << (v.outcome->consistent ? "" : "  INCONSISTENT") << "\n";
                        break;
                }
            }
            r.text = os.str();
            return r;
        });
    });
}

ParallelOptions parallel_options(const CliConfig& cfg) {
    ParallelOptions opts;
    opts.workers = cfg.workers;
    opts.allow_large = cfg.allow_large;
    try {
        opts.shard = Shard::parse(cfg.shard);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return opts;
}

int cmd_survey(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.order < 3 || cfg.order > kMaxEnumerationOrder) {
        throw UsageError("survey needs --n between 3 and " + std::to_string(kMaxEnumerationOrder));
    }
    if (cfg.order > kDefaultSurveyCap && !cfg.allow_large) {
        throw UsageError("survey above n = " + std::to_string(kDefaultSurveyCap) + " needs --allow-large");
    }
    const EnumerationSummary s = survey(cfg.order, parallel_options(cfg));
    switch (cfg.format) {
        case Format::kJson:
            out << summary_json(s).dump() << "\n";
            break;
        case Format::kCsv:
            out << "theorem,checked,held,equality,inconsistent\n";
            for (std::size_t i = 0; i < s.per_theorem.size(); ++i) {
                const auto& t = s.per_theorem[i];
                out << theorem_key(kAllTheorems[i]) << ',' << t.checked << ',' << t.held << ',' << t.equality
                    << ',' << t.inconsistent << "\n";
            }
            break;
        case Format::kHuman:
            out << "order " << s.order << ": " << s.total_graphs << " graphs, " << s.connected_graphs
                << " connected\n";
            for (std::size_t i = 0; i < s.per_theorem.size(); ++i) {
                const auto& t = s.per_theorem[i];
                out << "  " << std::left << std::setw(28) << theorem_key(kAllTheorems[i]) << " checked "
                    << t.checked << ", held " << t.held << ", equality " << t.equality << ", inconsistent "
                    << t.inconsistent << "\n";
            }
            for (const auto& c : s.counterexamples) out << "  counterexample " << c.graph6 << " " << c.theorem << "\n";
            break;
    }
    err << "elapsed " << std::fixed << std::setprecision(3) << s.elapsed_seconds << " s\n";
    return s.clean() ? kOk : kCheckFailed;
}

int cmd_table1(const CliConfig& cfg, std::ostream& out) {
    std::vector<int> orders;
    if (cfg.order == 0) {
        for (int n = 3; n <= kDefaultSurveyCap; ++n) orders.push_back(n);
    } else {
        if (cfg.order < 3 || cfg.order > kMaxEnumerationOrder) throw UsageError("table1 needs --n between 3 and 10");
        if (cfg.order > kDefaultSurveyCap && !cfg.allow_large) throw UsageError("table1 above n = 8 needs --allow-large");
        orders.push_back(cfg.order);
    }
    const ParallelOptions opts = parallel_options(cfg);
    Enumerator enumerator;
    bool ok = true;
    for (int n : orders) {
        const std::uint64_t count = table1(n, opts, &enumerator);
        const std::uint64_t expected = table1_expected(n);
        ok &= count == expected;
        switch (cfg.format) {
            case Format::kJson:
                out << Json{{"n", n}, {"count", count}, {"expected", expected}, {"ok", count == expected}}.dump()
                    << "\n";
                break;
            case Format::kCsv:
                if (n == orders.front()) out << "n,count,expected,ok\n";
                out << n << ',' << count << ',' << expected << ',' << (count == expected) << "\n";
                break;
            case Format::kHuman:
                out << "n=" << n << ": " << count << " (expected " << expected << ") "
                    << (count == expected ? "OK" : "MISMATCH") << "\n";
                break;
        }
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_families(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    if (cfg.yn > 0) {
        for (const YnMember& m : yn_members(cfg.yn)) {
            const std::string g6 = write_graph6(m.build());
            if (cfg.format == Format::kJson) {
                Json j{{"n", cfg.yn}, {"kind", m.kind == YnMember::Kind::kBouquet ? "bouquet" : "k2k"}};
                if (m.kind == YnMember::Kind::kBouquet) {
                    j["triangles"] = m.triangles;
                    j["squares"] = m.squares;
                } else {
                    j["paths"] = m.paths;
                }
                j["graph6"] = g6;
                out << j.dump() << "\n";
            } else {
                out << g6 << "\n";
            }
        }
        return kOk;
    }
    if (cfg.format == Format::kCsv) {
        out << "line,graph6,in_Xn,xn_characterization,universal_vertex,in_Yn,distance_balanced,"
               "complete_multipartite,error\n";
    }
    return with_input(cfg, in, err, [&](std::istream& src) {
        return process_stream(src, out, cfg.workers, [&](std::size_t line, const std::string& payload) {
            LineResult r;
            const auto g = parse_line(cfg.format, line, payload, 6, r);
            if (!g) return r;
            const std::string g6 = write_graph6(*g);
            const bool x = in_Xn(*g);
            const bool xc = xn_characterization(*g);
            const bool uv = xn_universal_vertex(*g);
            const bool y = in_Yn(*g);
            const bool db = is_distance_balanced(*g);
            const bool cm = is_complete_multipartite(*g);
            std::ostringstream os;
            switch (cfg.format) {
                case Format::kJson:
                    os << Json{{"line", line},          {"graph6", g6},         {"in_Xn", x},
                               {"xn_characterization", xc}, {"universal_vertex", uv}, {"in_Yn", y},
                               {"distance_balanced", db},   {"complete_multipartite", cm}}
                              .dump()
                       << "\n";
                    break;
                case Format::kCsv:
                    os << line << ',' << g6 << ',' << x << ',' << xc << ',' << uv << ',' << y << ',' << db << ','
                       << cm << ",\n";
                    break;
                case Format::kHuman:
                    os << "line " << line << ": " << g6 << " X_n=" << x << " structural=" << xc
                       << " universal=" << uv << " Y_n=" << y << " balanced=" << db << " multipartite=" << cm
                       << "\n";
                    break;
            }
            r.text = os.str();
            return r;
        });
    });
}

int cmd_formulas(const CliConfig& cfg, std::ostream& out) {
    bool any = false;
    if (!cfg.srg.empty()) {
        if (cfg.srg.size() != 4) throw UsageError("--srg takes v,k,lambda,mu");
        const SrgParams p(cfg.srg[0], cfg.srg[1], cfg.srg[2], cfg.srg[3]);
        const SrgIndices r = srg_closed_forms(p);
        if (cfg.format == Format::kJson) {
            out << Json{{"srg", cfg.srg}, {"PIv", r.vertex_pi}, {"Sz", r.szeged}}.dump() << "\n";
        } else {
            out << "PIv=" << r.vertex_pi << " Sz=" << r.szeged << "\n";
        }
        any = true;
    }
    if (cfg.yn_count > 0) {
        const auto count = yn_count_formula(cfg.yn_count);
        if (cfg.format == Format::kJson) {
            out << Json{{"n", cfg.yn_count}, {"yn_count", count}}.dump() << "\n";
        } else {
            out << "|Y_" << cfg.yn_count << "|=" << count << "\n";
        }
        any = true;
    }
    if (!cfg.multipartite.empty()) {
        const Graph g = complete_multipartite(cfg.multipartite);
        const InvariantVector iv = compute_invariants(g);
        const std::string g6 = write_graph6(g);
        if (cfg.format == Format::kJson) {
            out << invariants_json(0, g6, iv, g.order(), g.size()).dump() << "\n";
        } else {
            out << g6 << " PIv=" << iv.vertex_pi << " Sz=" << iv.szeged << " nm-3t="
                << g.order() * g.size() - 3 * iv.triangles << "\n";
        }
        any = true;
    }
    if (!any) throw UsageError("formulas needs --srg, --yn-count or --multipartite");
    return kOk;
}

int cmd_generate(const CliConfig& cfg, std::ostream& out) {
    if (cfg.order < 1 || cfg.order > kMaxEnumerationOrder) throw UsageError("generate needs --n between 1 and 10");
    GraphFilter filter;
    filter.connected = cfg.connected;
    filter.min_degree = cfg.min_degree;
    filter.bipartite = cfg.bipartite;
    filter.triangle_free = cfg.triangle_free;
    Enumerator enumerator;
    enumerator.for_each(cfg.order, filter, parallel_options(cfg),
                        [&out](const Graph& g) { out << write_graph6(g) << "\n"; });
    return out ? kOk : kIoFailure;
}

void add_common(CLI::App* sub, CliConfig& cfg, bool reads_input, bool enumerates) {
    static const std::map<std::string, Format> kFormats = {
        {"human", Format::kHuman}, {"json", Format::kJson}, {"csv", Format::kCsv}};
    sub->add_option("--format", cfg.format, "Output format: human, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    if (reads_input) sub->add_option("--input", cfg.input, "graph6 file, or - for standard input");
    if (enumerates) {
        sub->add_option("--n", cfg.order, "Graph order");
        sub->add_option("--shard", cfg.shard, "Parent slice I/K");
        sub->add_flag("--allow-large", cfg.allow_large, "Permit orders above 8");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Distance-based graph indices, inequality checks and small-graph enumeration", "pisz"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 ok, 1 I/O failure, 2 parse error, 3 disconnected input, 4 failed check, 64 usage.\n"
        "JSON records follow docs/json-schema.md (schema " + std::to_string(kJsonSchemaVersion) + ").");

    auto* compute = app.add_subcommand("compute", "Indices of each graph6 input line");
    add_common(compute, cfg, true, false);
    auto* verify = app.add_subcommand("verify", "Check every inequality on each graph6 input line");
    add_common(verify, cfg, true, false);
    auto* survey_cmd = app.add_subcommand("survey", "Check every inequality on all connected graphs of order n");
    add_common(survey_cmd, cfg, false, true);
    auto* table = app.add_subcommand("table1", "Count extremal non-bipartite graphs for PIv <= nm - 3t");
    add_common(table, cfg, false, true);
    auto* families = app.add_subcommand("families", "Y_n members, or family memberships of input graphs");
    add_common(families, cfg, true, false);
    families->add_option("--yn", cfg.yn, "Print the members of Y_n")->check(CLI::Range(1, kMaxOrder - 2));
    auto* formulas = app.add_subcommand("formulas", "Closed-form values");
    add_common(formulas, cfg, false, false);
    formulas->add_option("--srg", cfg.srg, "v,k,lambda,mu")->delimiter(',');
    formulas->add_option("--yn-count", cfg.yn_count, "|Y_n| from the counting formula")->check(CLI::PositiveNumber);
    formulas->add_option("--multipartite", cfg.multipartite, "Part sizes, e.g. 2,2,2")->delimiter(',');
    auto* generate = app.add_subcommand("generate", "Stream one graph6 line per isomorphism class");
    add_common(generate, cfg, false, true);
    generate->add_flag("--connected", cfg.connected, "Connected graphs only");
    generate->add_option("--min-degree", cfg.min_degree, "Minimum degree");
    generate->add_flag("--bipartite", cfg.bipartite, "Bipartite graphs only");
    generate->add_flag("--triangle-free", cfg.triangle_free, "Triangle-free graphs only");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (compute->parsed()) return cmd_compute(cfg, in, out, err);
        if (verify->parsed()) return cmd_verify(cfg, in, out, err);
        if (survey_cmd->parsed()) return cmd_survey(cfg, out, err);
        if (table->parsed()) return cmd_table1(cfg, out);
        if (families->parsed()) return cmd_families(cfg, in, out, err);
        if (formulas->parsed()) return cmd_formulas(cfg, out);
        if (generate->parsed()) return cmd_generate(cfg, out);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const EnumerationError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace pisz::cli
