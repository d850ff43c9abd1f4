#include <functional>
#include <string>

#include "doctest.h"
#include "rcalab/error.hpp"
#include "rcalab/io.hpp"

using namespace rcalab;
using io::Json;

namespace {

std::string parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("perm round trip and validation") {
    const Perm p = Perm::from_cycles(8, {{0, 1}, {3, 4}, {5, 7}});
    const Json j = io::to_json(p);
    CHECK(j["width"] == 3);
    CHECK(io::load_perm(Json::parse(j.dump())) == p);
    CHECK(parse_error_of([] { io::load_perm(Json::parse(R"({"width":1,"map":[0,0]})")); }).find("map[1]") !=
          std::string::npos);
    CHECK(parse_error_of([] { io::load_perm(Json::parse(R"({"width":2,"map":[0,1]})")); }).find("map") !=
          std::string::npos);
    CHECK(parse_error_of([] { io::load_perm(Json::parse(R"({"map":[0]})")); }).find("width") != std::string::npos);
  }

  TEST_CASE("block map round trip") {
    const BlockMap f = shift(Alphabet::binary_tracks(2), 0, 1);
    CHECK(io::load_block_map(Json::parse(io::to_json(f).dump())) == f);
    Json bad = io::to_json(f);
    bad["rule"].erase(0);
    CHECK_THROWS_AS(io::load_block_map(bad), ParseError);
  }

  TEST_CASE("descriptor round trip") {
    const auto d = make_descriptor(gates::toffoli(), Word::parse("0001"), -1);
    const Json j = io::to_json(d);
    CHECK(j["control"] == "0001");
    CHECK(j["convention"] == to_string(OffsetConvention::OccurrenceAtOffset));
    CHECK(io::load_descriptor(j) == d);
    Json overlapping = j;
    overlapping["control"] = "010";
    CHECK(parse_error_of([&] { io::load_descriptor(overlapping); }).find("control") != std::string::npos);
    Json convention = j;
    convention["convention"] = "sideways";
    CHECK_THROWS_AS(io::load_descriptor(convention), ParseError);
  }

  TEST_CASE("family and gate sequence round trips") {
    const auto family = formula_family(11, 3);
    CHECK(io::load_family(io::to_json(family)).words() == family.words());
    CHECK_THROWS_AS(io::load_family(Json::parse(R"(["0011","0110"])")), ParseError);
    const GateSequence seq{{"cnot", 1}, {"toffoli", 0}};
    CHECK(io::load_gate_sequence(io::to_json(seq)) == seq);
    CHECK_THROWS_AS(io::load_gate_sequence(Json::parse(R"([{"gate":"cnot"}])")), ParseError);
  }

  TEST_CASE("certificate round trip") {
    GenWordCert cert{parse_word("s-1 f s"), make_descriptor(default_involution(), Word::parse("000001"), -1), true,
                     "aligned-exact", {{"end-to-end", true, "ok"}}};
    const auto back = io::load_certificate(Json::parse(io::to_json(cert).dump()));
    CHECK(back.word == cert.word);
    CHECK(back.target == cert.target);
    CHECK(back.verified);
    CHECK(back.policy == "aligned-exact");
    REQUIRE(back.stages.size() == 1);
    CHECK(back.stages[0].name == "end-to-end");
    Json bad = io::to_json(cert);
    bad["word"][0] = "q";
    CHECK_THROWS_AS(io::load_certificate(bad), ParseError);
  }

  TEST_CASE("files") {
    CHECK_THROWS_AS(io::read_file("/nonexistent/report.json"), ParseError);
  }
}
