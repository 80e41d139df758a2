#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "clutterlab/decompose.hpp"
#include "clutterlab/io.hpp"
#include "clutterlab/properties.hpp"
#include "clutterlab/serialize.hpp"
#include "verify_suite.hpp"

namespace clutterlab::cli {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit_report(const CommandReport& rep, const std::string& json_out_path) {
    if (!json_out_path.empty()) write_file(json_out_path, rep.to_json().dump(2) + "\n");
}

QpqMeta require_meta(const LoadedClutter& loaded) {
    if (!loaded.qpq)
        throw ParseError("file carries no @qpq metadata; decompose needs a generated family file");
    return *loaded.qpq;
}

}  // namespace

WeightVector parse_weights(const Clutter& c, const std::string& inline_csv,
                           const std::string& file_path) {
    if (!inline_csv.empty() && !file_path.empty())
        throw ParseError("give either --w or --w-file, not both");
    std::vector<long long> w(static_cast<std::size_t>(c.n()), 0);
    if (!inline_csv.empty()) {
        std::size_t pos = 0;
        int i = 0;
        while (pos <= inline_csv.size()) {
            std::size_t comma = inline_csv.find(',', pos);
            std::string tok =
                inline_csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (i >= c.n()) throw ParseError("too many weights for a universe of size " +
                                             std::to_string(c.n()));
            try {
                w[static_cast<std::size_t>(i)] = std::stoll(tok);
            } catch (...) {
                throw ParseError("bad weight entry '" + tok + "'");
            }
            ++i;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (i != c.n())
            throw ParseError("expected " + std::to_string(c.n()) + " weights, got " +
                             std::to_string(i));
    } else if (!file_path.empty()) {
        std::istringstream is(read_file(file_path));
        std::string line;
        while (std::getline(is, line)) {
            std::string stripped = line.substr(0, line.find('#'));
            auto eq = stripped.find('=');
            if (eq == std::string::npos) {
                bool blank = stripped.find_first_not_of(" \t\r") == std::string::npos;
                if (!blank) throw ParseError("bad weight line: " + line);
                continue;
            }
            auto trim = [](std::string s) {
                auto a = s.find_first_not_of(" \t\r");
                auto b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            std::string label = trim(stripped.substr(0, eq));
            std::string value = trim(stripped.substr(eq + 1));
            auto idx = c.universe().index_of(label);
            if (!idx) throw ParseError("unknown vertex label '" + label + "' in weight file");
            try {
                w[static_cast<std::size_t>(*idx)] = std::stoll(value);
            } catch (...) {
                throw ParseError("bad weight value '" + value + "'");
            }
        }
    } else {
        throw ParseError("decompose needs --w or --w-file");
    }
    for (long long x : w)
        if (x < 0) throw ParseError("weights must be nonnegative");
    return WeightVector(std::move(w));
}

namespace {

int run_guarded(const std::string& json_out, CommandReport& rep,
                const std::function<int()>& body) {
    try {
        int code = body();
        emit_report(rep, json_out);
        return code;
    } catch (const BoundTooLargeError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace

nlohmann::json CommandReport::to_json() const {
    return {{"command", command},
            {"inputs_digest", inputs_digest},
            {"verdicts", verdicts},
            {"timing_ms", timing_ms}};
}

CommandReport CommandReport::from_json(const nlohmann::json& j) {
    CommandReport rep;
    rep.command = j.at("command").get<std::string>();
    rep.inputs_digest = j.at("inputs_digest").get<std::string>();
    rep.verdicts = j.at("verdicts");
    rep.timing_ms = j.at("timing_ms").get<long long>();
    return rep;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int cmd_gen(const GenOptions& opts) {
    CommandReport rep;
    rep.command = "gen";
    return run_guarded(opts.report_json_path, rep, [&]() -> int {
        Timer timer;
        FSpec f;
        if (opts.fspec.rfind("custom:", 0) == 0) {
            // custom edges come from a clutter file over the generated universe
            QpqDescriptor base = generate_qpq(opts.p, opts.q);
            LoadedClutter aux = load_clutter_file(opts.fspec.substr(7));
            if (!(aux.clutter.universe() == base.universe))
                throw ParseError("custom F file must use the generated universe labels");
            f = FSpec::custom_edges(aux.clutter.edges());
        } else {
            f = FSpec::parse(opts.fspec);
        }
        QpqDescriptor d = generate_qpq_f(opts.p, opts.q, f);
        Clutter c = d.clutter();
        QpqMeta meta = meta_of(d);
        std::string text = clutter_to_text(c, meta);
        std::string json_text = clutter_to_json_text(c, meta);

        rep.inputs_digest = fnv1a_digest(text);
        rep.verdicts = {{"p", opts.p},
                        {"q", opts.q},
                        {"f", f.to_string()},
                        {"vertices", c.n()},
                        {"edges", c.edge_count()}};
        if (opts.out_path.empty()) {
            std::cout << text;
        } else {
            write_file(opts.out_path, text);
            std::string json_path = opts.json_out_path.empty() ? opts.out_path + ".json"
                                                               : opts.json_out_path;
            write_file(json_path, json_text);
            std::cout << "wrote " << opts.out_path << " (" << c.n() << " vertices, "
                      << c.edge_count() << " edges) and " << json_path << "\n";
        }
        rep.timing_ms = timer.ms();
        return kExitPass;
    });
}

namespace {

int check_body(const CheckOptions& opts, CommandReport& rep) {
    Timer timer;
    std::string raw = read_file(opts.path);
    rep.inputs_digest = fnv1a_digest(raw);
    LoadOptions load_opts{opts.hypergraph};
    LoadedClutter loaded = opts.path.size() >= 5 && opts.path.substr(opts.path.size() - 5) == ".json"
                               ? parse_clutter_json_text(raw, load_opts)
                               : parse_clutter_text(raw, load_opts);
    const Clutter& c = loaded.clutter;
    int exit_code = kExitPass;

    if (opts.which == "konig") {
        bool k = has_konig(c);
        nlohmann::json j = {{"konig", k}};
        if (!c.edgeless() && !c.has_empty_edge()) {
            OptReport t = tau(c), v = nu(c);
            j["tau"] = json_of(c, t);
            j["nu"] = json_of(c, v);
            std::cout << "tau = " << t.value << ", nu = " << v.value << "\n";
        }
        std::cout << "konig: " << (k ? "yes" : "no") << "\n";
        rep.verdicts = j;
        exit_code = k ? kExitPass : kExitFail;
    } else if (opts.which == "pack") {
        PackingReport r = has_packing_property(c);
        rep.verdicts = json_of(c, r);
        std::cout << "packing property: " << (r.packs ? "yes" : "no") << "\n";
        if (r.failing)
            std::cout << "first failing minor: delete " << to_string(r.failing->deletions, c.universe())
                      << " contract " << to_string(r.failing->contractions, c.universe()) << "\n";
        exit_code = r.packs ? kExitPass : kExitFail;
    } else if (opts.which == "ideal") {
        IdealReport r = is_ideal(c);
        rep.verdicts = json_of(c, r);
        std::cout << "ideal: " << (r.ideal ? "yes" : "no") << "\n";
        if (r.fractional_vertex) {
            std::cout << "fractional vertex:";
            for (const Rat& x : *r.fractional_vertex) std::cout << " " << rat_string(x);
            std::cout << "\n";
        }
        exit_code = r.ideal ? kExitPass : kExitFail;
    } else if (opts.which == "mengerian") {
        MengerianReport r = is_mengerian_bounded(c, opts.w_max);
        rep.verdicts = json_of(c, r);
        switch (r.verdict) {
            case MengerianVerdict::PassBounded:
                std::cout << "mengerian: pass-bounded up to w_max=" << opts.w_max << " ("
                          << r.checked << " weight vectors)\n";
                exit_code = kExitPass;
                break;
            case MengerianVerdict::Fail:
                std::cout << "mengerian: fail at w = [";
                for (std::size_t i = 0; i < r.failing_w->w.size(); ++i)
                    std::cout << (i ? "," : "") << r.failing_w->w[i];
                std::cout << "]\n";
                exit_code = kExitFail;
                break;
            case MengerianVerdict::NotIdeal:
                std::cout << "mengerian: not-ideal (hypothesis fails)\n";
                exit_code = kExitFail;
                break;
        }
    } else if (opts.which == "classify") {
        ClassifyReport r = classify(c, opts.balanced_limit);
        rep.verdicts = json_of(r);
        std::cout << "binary: " << (r.binary ? "yes" : "no") << "\n"
                  << "dyadic: " << (r.dyadic ? "yes" : "no") << "\n"
                  << "balanced: " << (r.balanced ? "yes" : "no") << " (bounded to odd orders <= "
                  << r.balanced_limit << ")\n";
        exit_code = kExitPass;
    } else if (opts.which == "2part") {
        auto part = find_2partition(c);
        if (part) {
            RankPropReport r = check_rank_prop(c, *part);
            nlohmann::json j = json_of(c, *part);
            j["rank"] = json_of(r);
            rep.verdicts = j;
            std::cout << "2-partitionable: yes, blocks";
            for (auto [a, b] : part->blocks)
                std::cout << " {" << c.universe().name(a) << "," << c.universe().name(b) << "}";
            std::cout << "\nrank(A) = " << r.rank_a << ", rank(B) = " << r.rank_b
                      << ", d+1 = " << r.d + 1 << "\n";
            exit_code = kExitPass;
        } else {
            rep.verdicts = {{"two_partitionable", false}};
            std::cout << "2-partitionable: no\n";
            exit_code = kExitFail;
        }
    } else if (opts.which == "delta-r") {
        IntegerMatrix b = b_matrix(c);
        Int dr = delta_r(b);
        bool free = group_is_free(b);
        rep.verdicts = {{"delta_r", dr.str()}, {"rank", rank_rational(b)}, {"free", free}};
        std::cout << "delta_r(B) = " << dr << ", rank(B) = " << rank_rational(b)
                  << ", quotient free: " << (free ? "yes" : "no") << "\n";
        exit_code = dr == 1 ? kExitPass : kExitFail;
    } else {
        throw ParseError("unknown check '" + opts.which +
                         "' (expected konig|pack|ideal|mengerian|classify|2part|delta-r)");
    }
    rep.timing_ms = timer.ms();
    return exit_code;
}

}  // namespace

int cmd_check(const CheckOptions& opts) {
    CommandReport rep;
    rep.command = "check " + opts.which;
    return run_guarded(opts.json_out_path, rep, [&] { return check_body(opts, rep); });
}

int cmd_decompose(const DecomposeOptions& opts) {
    CommandReport rep;
    rep.command = "decompose";
    return run_guarded(opts.json_out_path, rep, [&]() -> int {
        Timer timer;
        std::string raw = read_file(opts.path);
        rep.inputs_digest = fnv1a_digest(raw);
        LoadedClutter loaded = load_clutter_file(opts.path);
        QpqMeta meta = require_meta(loaded);
        QpqDescriptor desc = descriptor_from_meta(meta, loaded.clutter);
        if (!(desc.fspec.kind == FKind::CaseI && desc.fspec.mask == 0xFu))
            throw ParseError("decompose needs the caseI:all family, file has f=" + meta.fspec);
        WeightVector w = parse_weights(loaded.clutter, opts.weights, opts.weights_file);

        DecompositionTrace trace = decompose(desc, w);
        std::cout << "iter  rule       edge                      tau\n";
        for (const auto& s : trace.steps) {
            std::ostringstream edge;
            edge << to_string(s.edge, desc.universe);
            std::ostringstream line;
            line << s.iteration << "     " << to_string(s.rule);
            std::cout << s.iteration << "     " << to_string(s.rule) << "  " << edge.str();
            for (std::size_t pad = edge.str().size(); pad < 24; ++pad) std::cout << ' ';
            std::cout << "  " << s.tau_before << "\n";
        }
        bool verified = verify_decomposition(desc, w, trace.edges);
        std::cout << "edges: " << trace.edges.size() << ", verified: " << (verified ? "yes" : "NO")
                  << "\n";
        nlohmann::json j = json_of(desc, trace);
        j["verified"] = verified;
        rep.verdicts = j;
        rep.timing_ms = timer.ms();
        return verified ? kExitPass : kExitFail;
    });
}

int cmd_verify_suite(const VerifySuiteOptions& opts) {
    CommandReport rep;
    rep.command = "verify-suite";
    return run_guarded(opts.json_out_path, rep, [&]() -> int {
        Timer timer;
        verify::SuiteOptions suite;
        if (opts.scale == "small")
            suite.scale = verify::Scale::Small;
        else if (opts.scale == "full")
            suite.scale = verify::Scale::Full;
        else
            throw ParseError("scale must be small or full");
        suite.only = opts.only;
        suite.seed = opts.seed;
        rep.inputs_digest = fnv1a_digest(opts.scale + ":" + opts.only + ":" +
                                         std::to_string(opts.seed));
        auto results = verify::run_suite(suite);
        int code = verify::print_results(results, std::cout);
        auto verdicts = nlohmann::json::array();
        for (const auto& r : results)
            verdicts.push_back({{"number", r.number}, {"key", r.key}, {"pass", r.pass},
                                {"notes", r.notes}});
        rep.verdicts = verdicts;
        rep.timing_ms = timer.ms();
        return code;
    });
}

}  // namespace clutterlab::cli
