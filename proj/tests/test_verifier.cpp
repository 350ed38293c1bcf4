#include "horoct/expectations.hpp"
#include "horoct/report.hpp"
#include "horoct/sweep.hpp"

#include <catch2/catch.hpp>

#include <set>

using namespace horoct;

namespace {

SweepConfig fib_single(std::string id, unsigned lo, unsigned hi) {
    SweepConfig cfg;
    cfg.points = {preset_params("fibonacci")};
    cfg.n_min = lo;
    cfg.n_max = hi;
    cfg.ids = {std::move(id)};
    return cfg;
}

} // namespace

TEST_CASE("the catalog is sorted, tagged, and searchable", "[verifier]") {
    const Registry& reg = Registry::builtin();
    CHECK(reg.all().size() == 21);
    for (std::size_t i = 1; i < reg.all().size(); ++i)
        CHECK(reg.all()[i - 1].id < reg.all()[i].id);

    const std::set<std::string> corrections = {
        "dual-fib-cassini-reversed-order", "dual-fib-sum-corrected",
        "eq-2.5-cassini-scalar-corrected", "eq-2.6-sum-scalar-corrected",
        "eq-3.10-cassini-corrected",       "eq-3.12-norm-dog-L-corrected",
    };
    for (const Identity& ident : reg.all()) {
        const bool is_correction = corrections.count(ident.id) > 0;
        CHECK(ident.tag == (is_correction ? "candidate-correction" : "as-printed"));
        CHECK_FALSE(ident.claim.empty());
    }

    CHECK(reg.find("eq-2.5-cassini-scalar-as-printed") != nullptr);
    CHECK(reg.find("eq-3.6-genfunc-dog") != nullptr);
    CHECK(reg.find("eq-9.9-unknown") == nullptr);
}

TEST_CASE("a single-point sweep surfaces the catalogued defect", "[verifier]") {
    const std::vector<Verdict> verdicts =
        run_sweep(Registry::builtin(), fib_single("eq-2.5-cassini-scalar-as-printed", 2, 2));
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].status == Status::mismatch);
    REQUIRE(verdicts[0].witness.has_value());
    CHECK(verdicts[0].witness->lhs == "1");
    CHECK(verdicts[0].witness->rhs == "-1");
}

TEST_CASE("mismatch verdicts always carry a witness", "[verifier]") {
    SweepConfig cfg = fib_single("eq-2.6-sum-scalar-as-printed", 0, 8);
    cfg.ids.push_back("eq-3.12-norm-dog-as-printed");
    for (const Verdict& v : run_sweep(Registry::builtin(), cfg)) {
        CHECK((v.status == Status::mismatch) == v.witness.has_value());
    }
}

TEST_CASE("preconditions surface as inapplicable verdicts", "[verifier]") {
    SweepConfig cfg;
    cfg.points = {preset_params("lucas")};
    cfg.n_min = 1;
    cfg.n_max = 4;
    cfg.ids = {"dual-fib-binet"};
    for (const Verdict& v : run_sweep(Registry::builtin(), cfg)) {
        CHECK(v.status == Status::inapplicable);
        CHECK_FALSE(v.witness.has_value());
    }

    // n = 0 is outside the cassini quotient's domain
    const std::vector<Verdict> at_zero =
        run_sweep(Registry::builtin(), fib_single("eq-2.5-cassini-scalar-corrected", 0, 1));
    CHECK(at_zero[0].status == Status::inapplicable);
    CHECK(at_zero[1].status == Status::match);
}

TEST_CASE("the default grid is 240 ordered points", "[verifier]") {
    const SweepConfig cfg = default_sweep();
    CHECK(cfg.points.size() == 240);
    CHECK(cfg.n_min == 1);
    CHECK(cfg.n_max == 16);
    for (const HoradamParams& pt : cfg.points) CHECK(discriminant(pt) != 0);
    for (std::size_t i = 1; i < cfg.points.size(); ++i)
        CHECK(params_less(cfg.points[i - 1], cfg.points[i]));
}

TEST_CASE("sweeps reject unknown identities and empty ranges", "[verifier]") {
    SweepConfig cfg = fib_single("eq-0.0-missing", 1, 2);
    CHECK_THROWS_AS(run_sweep(Registry::builtin(), cfg), UsageError);
    SweepConfig bad = fib_single("eq-2.3-binet-scalar", 3, 2);
    CHECK_THROWS_AS(run_sweep(Registry::builtin(), bad), UsageError);
}

TEST_CASE("sweep output is independent of duplication and job count", "[verifier]") {
    SweepConfig cfg;
    cfg.points = {preset_params("fibonacci"), preset_params("lucas"),
                  preset_params("fibonacci")};
    cfg.n_min = 1;
    cfg.n_max = 6;
    cfg.ids = {"eq-2.5-cassini-scalar-as-printed", "eq-2.3-binet-scalar",
               "eq-2.3-binet-scalar"};
    const std::vector<Verdict> base = run_sweep(Registry::builtin(), cfg);
    cfg.jobs = 4;
    const std::vector<Verdict> parallel = run_sweep(Registry::builtin(), cfg);
    CHECK(render_report(base, ReportFormat::json) == render_report(parallel, ReportFormat::json));
    // identity-major, point-minor, n-innermost; duplicates collapsed
    CHECK(base.size() == 2 * 2 * 6);
    CHECK(base.front().identity_id == "eq-2.3-binet-scalar");
    CHECK(base.back().identity_id == "eq-2.5-cassini-scalar-as-printed");
}

TEST_CASE("report rendering", "[verifier]") {
    const std::vector<Verdict> verdicts =
        run_sweep(Registry::builtin(), fib_single("eq-2.5-cassini-scalar-as-printed", 1, 2));

    const std::string json = render_report(verdicts, ReportFormat::json);
    CHECK(json ==
          "[\n"
          "  {\n"
          "    \"identity_id\": \"eq-2.5-cassini-scalar-as-printed\",\n"
          "    \"params\": {\"a\": \"0\", \"b\": \"1\", \"p\": \"1\", \"q\": \"1\"},\n"
          "    \"n\": 1,\n"
          "    \"status\": \"match\"\n"
          "  },\n"
          "  {\n"
          "    \"identity_id\": \"eq-2.5-cassini-scalar-as-printed\",\n"
          "    \"params\": {\"a\": \"0\", \"b\": \"1\", \"p\": \"1\", \"q\": \"1\"},\n"
          "    \"n\": 2,\n"
          "    \"status\": \"mismatch\",\n"
          "    \"witness\": {\n"
          "      \"lhs\": \"1\",\n"
          "      \"rhs\": \"-1\"\n"
          "    }\n"
          "  }\n"
          "]\n");

    const std::string csv = render_report(verdicts, ReportFormat::csv);
    CHECK(csv ==
          "identity_id,a,b,p,q,n,status,witness_lhs,witness_rhs\n"
          "eq-2.5-cassini-scalar-as-printed,0,1,1,1,1,match,\"\",\"\"\n"
          "eq-2.5-cassini-scalar-as-printed,0,1,1,1,2,mismatch,\"1\",\"-1\"\n");

    const std::string md = render_report(verdicts, ReportFormat::markdown_summary);
    CHECK(md ==
          "# Verification summary\n"
          "\n"
          "| identity | match | mismatch | inapplicable | total |\n"
          "| --- | ---: | ---: | ---: | ---: |\n"
          "| eq-2.5-cassini-scalar-as-printed | 1 | 1 | 0 | 2 |\n"
          "\n"
          "Total: 2 verdicts, 1 match, 1 mismatch, 0 inapplicable.\n");

    CHECK(render_report({}, ReportFormat::json) == "[]\n");
    CHECK(parse_format("json") == ReportFormat::json);
    CHECK(parse_format("csv") == ReportFormat::csv);
    CHECK(parse_format("markdown-summary") == ReportFormat::markdown_summary);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("expectations round-trip and drift detection", "[verifier]") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);

    SweepConfig cfg = fib_single("eq-2.5-cassini-scalar-as-printed", 1, 8);
    cfg.ids.push_back("eq-2.5-cassini-scalar-corrected");
    const std::vector<Verdict> verdicts = run_sweep(Registry::builtin(), cfg);
    const Expectations fresh = summarize(cfg, verdicts);

    CHECK(fresh.n_range == "1..8");
    CHECK(fresh.point_count == 1);
    REQUIRE(fresh.profiles.count("eq-2.5-cassini-scalar-as-printed") == 1);
    const StatusProfile& printed = fresh.profiles.at("eq-2.5-cassini-scalar-as-printed");
    CHECK(printed.match == 4);      // odd n
    CHECK(printed.mismatch == 4);   // even n
    CHECK(fresh.profiles.at("eq-2.5-cassini-scalar-corrected").match == 8);

    const Expectations reread = expectations_from_json(expectations_to_json(fresh));
    CHECK(same_config(reread, fresh));
    CHECK(reread.profiles == fresh.profiles);
    CHECK(diff_profiles(reread, fresh).empty());

    Expectations skewed = fresh;
    skewed.profiles.at("eq-2.5-cassini-scalar-corrected").match = 7;
    const std::vector<std::string> drift = diff_profiles(skewed, fresh);
    REQUIRE(drift.size() == 1);
    CHECK(drift[0].find("eq-2.5-cassini-scalar-corrected") != std::string::npos);

    Expectations missing = fresh;
    missing.profiles.erase("eq-2.5-cassini-scalar-as-printed");
    CHECK(diff_profiles(missing, fresh).size() == 1);

    Expectations other = fresh;
    other.n_range = "1..9";
    CHECK_FALSE(same_config(other, fresh));

    CHECK_THROWS_AS(expectations_from_json("{"), UsageError);
    CHECK_THROWS_AS(expectations_from_json("{\"n_range\": 3}"), UsageError);
    CHECK_THROWS_AS(load_expectations("/nonexistent/exp.json"), UsageError);
}

TEST_CASE("fingerprints pin the verdict sequence, not only counts", "[verifier]") {
    const std::vector<Verdict> a =
        run_sweep(Registry::builtin(), fib_single("eq-2.5-cassini-scalar-as-printed", 1, 4));
    SweepConfig shifted = fib_single("eq-2.5-cassini-scalar-as-printed", 2, 5);
    const std::vector<Verdict> b = run_sweep(Registry::builtin(), shifted);

    SweepConfig base_cfg = fib_single("eq-2.5-cassini-scalar-as-printed", 1, 4);
    const StatusProfile pa =
        summarize(base_cfg, a).profiles.at("eq-2.5-cassini-scalar-as-printed");
    const StatusProfile pb =
        summarize(shifted, b).profiles.at("eq-2.5-cassini-scalar-as-printed");
    CHECK(pa.match == pb.match);
    CHECK(pa.mismatch == pb.mismatch);
    CHECK(pa.fingerprint != pb.fingerprint);  // m,x,m,x vs x,m,x,m
}
