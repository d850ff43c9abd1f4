#include "doctest.h"
#include "rcalab/cli.hpp"
#include "rcalab/error.hpp"

using namespace rcalab;

TEST_SUITE("cli") {
  TEST_CASE("configuration validation") {
    RunConfig ok;
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.control_word().to_string() == "000000001");

    RunConfig bad_k;
    bad_k.k = 3;  // 2k = 6 >= l - 4 = 5
    CHECK_THROWS_AS(bad_k.validate(), ConfigInvalid);

    RunConfig bordered;
    bordered.word = "010010010";
    CHECK_THROWS_AS(bordered.validate(), ConfigInvalid);

    RunConfig short_word;
    short_word.word = "0001";
    CHECK_THROWS_AS(short_word.validate(), ConfigInvalid);

    RunConfig unknown;
    unknown.checks = {"words", "everything"};
    CHECK_THROWS_AS(unknown.validate(), ConfigInvalid);

    RunConfig gates;
    gates.gates = "fredkin";
    CHECK_THROWS_AS(gates.validate(), ConfigInvalid);

    RunConfig not_involution;
    not_involution.involution = Perm::from_cycles(8, {{0, 1, 2}});
    CHECK_THROWS_AS(not_involution.validate(), ConfigInvalid);
  }

  TEST_CASE("subset run produces ordered records and a stable report") {
    RunConfig config;
    config.checks = {"two-involution", "words", "normal-closure", "commutator-generation"};
    const Report report = run(config);
    REQUIRE(report.records.size() == 4);
    // Execution follows the pipeline order, not the request order.
    CHECK(report.records[0].check == "words");
    CHECK(report.records[1].check == "commutator-generation");
    CHECK(report.records[2].check == "normal-closure");
    CHECK(report.records[3].check == "two-involution");
    CHECK(report.ok());
    const auto j = to_json(report, false);
    CHECK(j["ok"] == true);
    CHECK_FALSE(j["records"][0].contains("elapsed_ms"));
    CHECK(to_json(report)["records"][0].contains("elapsed_ms"));
    CHECK(j["limitations"][0].get<std::string>().find("f.g.-universality") != std::string::npos);
    CHECK(to_json(run(config), false).dump() == j.dump());  // deterministic apart from timing
    CHECK(summary(report).find("PASS words") != std::string::npos);
  }

  TEST_CASE("l = 9 family of size 4 falls back to a searched family") {
    RunConfig config;
    config.checks = {"commutator-generation"};
    const auto report = run(config);
    REQUIRE(report.records.size() == 1);
    const auto& r = report.records[0];
    CHECK(r.verdict);
    CHECK(r.details["size_4_rejected"] == true);
    CHECK(r.parameters["family_source"].get<std::string>().find("search") != std::string::npos);
  }

  TEST_CASE("involution choice") {
    CHECK(choose_involution(3, 1) == default_involution());
    CHECK_FALSE(choose_involution(2, 1).has_value());
  }

  TEST_CASE("non-universal gate set fails the gate check") {
    RunConfig config;
    config.checks = {"gates"};
    config.gates = "one-way";
    const auto report = run(config);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.records[0].witness.is_null());
  }
}
