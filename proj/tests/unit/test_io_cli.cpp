#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "clutterlab/io.hpp"
#include "clutterlab/parallel.hpp"
#include "clutterlab/serialize.hpp"
#include "commands.hpp"
#include "corpus.hpp"
#include "verify_suite.hpp"

using namespace clutterlab;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("clutterlab_test_" + name);
}

}  // namespace

TEST_CASE("text format round trip") {
    std::string text =
        "# a comment\n"
        "vertices: a b c\n"
        "edge: a c\n"
        "edge: b\n";
    LoadedClutter loaded = parse_clutter_text(text);
    CHECK(loaded.clutter.n() == 3);
    CHECK(loaded.clutter.edge_count() == 2);
    CHECK_FALSE(loaded.qpq.has_value());
    LoadedClutter again = parse_clutter_text(clutter_to_text(loaded.clutter));
    CHECK(again.clutter == loaded.clutter);
}

TEST_CASE("random clutters survive both formats") {
    corpus::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Clutter c = corpus::random_clutter_sized(rng, 2, 9, 10);
        CHECK(parse_clutter_text(clutter_to_text(c)).clutter == c);
        CHECK(parse_clutter_json_text(clutter_to_json_text(c)).clutter == c);
    }
}

TEST_CASE("strict parsing rejects inclusion violations, hypergraph mode minimalizes") {
    std::string text =
        "vertices: a b\n"
        "edge: a\n"
        "edge: a b\n";
    CHECK_THROWS_AS(parse_clutter_text(text), ParseError);
    LoadedClutter loaded = parse_clutter_text(text, LoadOptions{.hypergraph_mode = true});
    CHECK(loaded.minimalized);
    CHECK(loaded.clutter.edge_count() == 1);
}

TEST_CASE("parser diagnostics") {
    CHECK_THROWS_AS(parse_clutter_text("edge: a\n"), ParseError);           // edge before vertices
    CHECK_THROWS_AS(parse_clutter_text("vertices: a a\n"), ParseError);     // duplicate label
    CHECK_THROWS_AS(parse_clutter_text("vertices: a\nedge: z\n"), ParseError);  // unknown label
    CHECK_THROWS_AS(parse_clutter_text("vertices: a\nfoo: a\n"), ParseError);   // bad keyword
    CHECK_THROWS_AS(parse_clutter_json_text("{"), ParseError);
    CHECK_THROWS_AS(parse_clutter_json_text("{\"vertices\": []}"), ParseError);
}

TEST_CASE("generator metadata rides along in both formats") {
    QpqDescriptor d = generate_qpq_f(1, 1, FSpec::case_i_all());
    QpqMeta meta = meta_of(d);
    CHECK(meta.fspec == "caseI:all");

    LoadedClutter from_text = parse_clutter_text(clutter_to_text(d.clutter(), meta));
    REQUIRE(from_text.qpq.has_value());
    CHECK(*from_text.qpq == meta);
    QpqDescriptor rebuilt = descriptor_from_meta(*from_text.qpq, from_text.clutter);
    CHECK(rebuilt.fspec == d.fspec);

    LoadedClutter from_json = parse_clutter_json_text(clutter_to_json_text(d.clutter(), meta));
    REQUIRE(from_json.qpq.has_value());
    CHECK(*from_json.qpq == meta);
}

TEST_CASE("metadata must match the file contents") {
    QpqDescriptor d = generate_qpq_f(1, 1, FSpec::case_i_all());
    QpqMeta wrong{1, 1, "none"};
    CHECK_THROWS_AS(descriptor_from_meta(wrong, d.clutter()), ParseError);
}

TEST_CASE("command reports round trip through JSON") {
    cli::CommandReport rep;
    rep.command = "check pack";
    rep.inputs_digest = cli::fnv1a_digest("hello");
    rep.verdicts = {{"packs", false}, {"values", {1, 2, 3}}};
    rep.timing_ms = 17;
    CHECK(cli::CommandReport::from_json(rep.to_json()) == rep);
}

TEST_CASE("digest is stable") {
    CHECK(cli::fnv1a_digest("") == "cbf29ce484222325");
    CHECK(cli::fnv1a_digest("a") != cli::fnv1a_digest("b"));
}

TEST_CASE("weight parsing from inline and file forms") {
    Clutter c = generate_qpq_f(1, 1, FSpec::case_i_all()).clutter();
    WeightVector inline_w = cli::parse_weights(c, "1,2,3,4,5,6", "");
    CHECK(inline_w.w == std::vector<long long>{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(cli::parse_weights(c, "1,2", ""), ParseError);
    CHECK_THROWS_AS(cli::parse_weights(c, "", ""), ParseError);
    CHECK_THROWS_AS(cli::parse_weights(c, "1,2,3,4,5,-6", ""), ParseError);

    auto wf = temp_path("weights.txt");
    write_file(wf.string(), "# weights\np1 = 2\nr* = 5\n");
    WeightVector from_file = cli::parse_weights(c, "", wf.string());
    CHECK(from_file.weight_of(VSet::of({0})) == 2);
    CHECK(from_file.weight_of(VSet::of({5})) == 5);
    CHECK(from_file.weight_of(VSet::of({1, 2, 3, 4})) == 0);  // missing labels default to 0
    std::filesystem::remove(wf);
}

TEST_CASE("gen, check and decompose commands end to end") {
    auto out = temp_path("q11_fstar.clt");
    cli::GenOptions gen;
    gen.p = 1;
    gen.q = 1;
    gen.fspec = "caseI:all";
    gen.out_path = out.string();
    CHECK(cli::cmd_gen(gen) == cli::kExitPass);
    CHECK(std::filesystem::exists(out));
    CHECK(std::filesystem::exists(out.string() + ".json"));

    cli::CheckOptions konig;
    konig.which = "konig";
    konig.path = out.string();
    CHECK(cli::cmd_check(konig) == cli::kExitPass);

    cli::CheckOptions mengerian;
    mengerian.which = "mengerian";
    mengerian.path = out.string();
    mengerian.w_max = 2;
    CHECK(cli::cmd_check(mengerian) == cli::kExitPass);

    auto report_path = temp_path("check_report.json");
    cli::CheckOptions delta;
    delta.which = "delta-r";
    delta.path = out.string();
    delta.json_out_path = report_path.string();
    CHECK(cli::cmd_check(delta) == cli::kExitPass);
    auto parsed = nlohmann::json::parse(read_file(report_path.string()));
    CHECK(parsed["verdicts"]["delta_r"] == "1");
    CHECK(cli::CommandReport::from_json(parsed).to_json() == parsed);

    cli::DecomposeOptions dec;
    dec.path = out.string();
    dec.weights = "1,1,1,1,1,1";
    CHECK(cli::cmd_decompose(dec) == cli::kExitPass);

    std::filesystem::remove(out);
    std::filesystem::remove(out.string() + ".json");
    std::filesystem::remove(report_path);
}

TEST_CASE("check exit codes distinguish pass, fail and errors") {
    auto out = temp_path("q11_plain.clt");
    cli::GenOptions gen;
    gen.p = 1;
    gen.q = 1;
    gen.fspec = "none";
    gen.out_path = out.string();
    REQUIRE(cli::cmd_gen(gen) == cli::kExitPass);

    cli::CheckOptions pack;
    pack.which = "pack";
    pack.path = out.string();
    CHECK(cli::cmd_check(pack) == cli::kExitFail);

    cli::CheckOptions bogus;
    bogus.which = "nonsense";
    bogus.path = out.string();
    CHECK(cli::cmd_check(bogus) == cli::kExitError);

    cli::CheckOptions missing;
    missing.which = "konig";
    missing.path = temp_path("does_not_exist.clt").string();
    CHECK(cli::cmd_check(missing) == cli::kExitError);

    cli::DecomposeOptions dec;
    dec.path = out.string();
    dec.weights = "1,1,1,1,1,1";
    CHECK(cli::cmd_decompose(dec) == cli::kExitError);  // plain family lacks caseI:all

    std::filesystem::remove(out);
    std::filesystem::remove(out.string() + ".json");
}

TEST_CASE("verify-suite command runs a filtered criterion deterministically") {
    cli::VerifySuiteOptions a;
    a.scale = "small";
    a.only = "q21";
    CHECK(cli::cmd_verify_suite(a) == cli::kExitPass);
    cli::VerifySuiteOptions none;
    none.scale = "small";
    none.only = "no-such-criterion";
    CHECK(cli::cmd_verify_suite(none) == cli::kExitError);
    cli::VerifySuiteOptions bad;
    bad.scale = "medium";
    CHECK(cli::cmd_verify_suite(bad) == cli::kExitError);
}

TEST_CASE("suite reruns with the same seed give the same verdicts and notes") {
    verify::SuiteOptions opts;
    opts.scale = verify::Scale::Small;
    opts.only = "duality";
    auto first = verify::run_suite(opts);
    auto second = verify::run_suite(opts);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].pass == second[i].pass);
        CHECK(first[i].notes == second[i].notes);
    }
}

TEST_CASE("the thread environment variable caps the worker pool") {
    setenv("CLUTTERLAB_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    unsetenv("CLUTTERLAB_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("an oversized weight box exits as inconclusive") {
    auto out = temp_path("q11_budget.clt");
    cli::GenOptions gen;
    gen.p = 1;
    gen.q = 1;
    gen.fspec = "caseI:all";
    gen.out_path = out.string();
    REQUIRE(cli::cmd_gen(gen) == cli::kExitPass);
    cli::CheckOptions mengerian;
    mengerian.which = "mengerian";
    mengerian.path = out.string();
    mengerian.w_max = 1000000;  // (w_max+1)^6 blows the enumeration budget
    CHECK(cli::cmd_check(mengerian) == cli::kExitInconclusive);
    std::filesystem::remove(out);
    std::filesystem::remove(out.string() + ".json");
}
