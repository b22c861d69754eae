#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ifr/dataset.hpp"
#include "ifr/trifn.hpp"

using ifr::DatasetRecord;
using ifr::ParseError;
using ifr::Trifn;

namespace {

std::string what_of(const std::string& text) {
    try {
        ifr::parse_dataset_text(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("line format parses records, comments, and blank lines") {
    std::string text =
        "# three numbers\n"
        "\n"
        "first; 0.5, 0.7, 0.9; 0.7; 0.2\n"
        "second;0.10,0.19,0.25,0.30;0.7;0.2\n"
        "  third ; -0.4, -0.3, -0.2, -0.1 ; 0.5 ; 0.2\n";
    std::vector<DatasetRecord> records = ifr::parse_dataset_text(text);
    REQUIRE(records.size() == 3);
    CHECK(records[0].id == "first");
    CHECK(records[0].number == Trifn(0.5, 0.7, 0.7, 0.9, 0.7, 0.2));
    CHECK(records[0].number.is_triangular());
    CHECK(records[1].number == Trifn(0.10, 0.19, 0.25, 0.30, 0.7, 0.2));
    CHECK(records[2].id == "third");
    CHECK(records[2].number.a1() == -0.4);
}

TEST_CASE("line format reports the failing line number") {
    std::string text =
        "ok; 0.1, 0.2, 0.3; 0.5; 0.2\n"
        "# comment\n"
        "broken; 0.1, 0.2; 0.5; 0.2\n";
    try {
        ifr::parse_dataset_text(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("line format rejects malformed content with clear messages") {
    CHECK(what_of("a; 0.1, 0.2, 0.3; 0.5\n").find("4 ';'-separated fields") != std::string::npos);
    CHECK(what_of("a; 0.1, x, 0.3; 0.5; 0.2\n").find("not a number") != std::string::npos);
    CHECK(what_of("a; 0.1, , 0.3; 0.5; 0.2\n").find("empty") != std::string::npos);
    CHECK(what_of("a; 0.1, 0.2, 0.3; inf; 0.2\n").find("finite") != std::string::npos);
    CHECK(what_of("; 0.1, 0.2, 0.3; 0.5; 0.2\n").find("id is empty") != std::string::npos);
    CHECK(what_of("a b#; 0.1, 0.2, 0.3; 0.5; 0.2\n").find("reserved") != std::string::npos);
}

TEST_CASE("line format surfaces validation failures with the line") {
    std::string msg = what_of("ok; 0.1, 0.2, 0.3; 0.5; 0.2\nbad; 0.3, 0.2, 0.4; 0.5; 0.2\n");
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("bad") != std::string::npos);
    CHECK(msg.find("a1") != std::string::npos);

    CHECK(what_of("a; 0.1, 0.2, 0.3; 0.9; 0.4\n").find("w+u") != std::string::npos);
}

TEST_CASE("duplicate ids are rejected in both formats") {
    CHECK(what_of("a; 0.1, 0.2, 0.3; 0.5; 0.2\na; 0.2, 0.3, 0.4; 0.5; 0.2\n")
              .find("duplicate") != std::string::npos);
    CHECK(what_of(R"([{"id":"a","a":[0.1,0.2,0.3],"w":0.5,"u":0.2},)"
                  R"({"id":"a","a":[0.1,0.2,0.3],"w":0.5,"u":0.2}])")
              .find("duplicate") != std::string::npos);
}

TEST_CASE("json format parses arrays of records") {
    std::string text = R"(
      [
        {"id": "tri", "a": [0.5, 0.7, 0.9], "w": 0.7, "u": 0.2},
        {"id": "trap", "a": [0.2, 0.4, 0.5, 0.9], "w": 0.5, "u": 0.3}
      ]
    )";
    std::vector<DatasetRecord> records = ifr::parse_dataset_text(text);
    REQUIRE(records.size() == 2);
    CHECK(records[0].number == Trifn(0.5, 0.7, 0.7, 0.9, 0.7, 0.2));
    CHECK(records[1].number == Trifn(0.2, 0.4, 0.5, 0.9, 0.5, 0.3));
}

TEST_CASE("json format identifies the failing record") {
    std::string msg = what_of(R"([{"id":"ok","a":[0.1,0.2,0.3],"w":0.5,"u":0.2},)"
                              R"({"id":"bad","a":[0.1,0.2],"w":0.5,"u":0.2}])");
    CHECK(msg.find("record 2") != std::string::npos);
    CHECK(msg.find("bad") != std::string::npos);

    CHECK(what_of(R"([{"a":[0.1,0.2,0.3],"w":0.5,"u":0.2}])").find("missing field 'id'") !=
          std::string::npos);
    CHECK(what_of(R"([{"id":"x","a":"nope","w":0.5,"u":0.2}])").find("'a' must be an array") !=
          std::string::npos);
    CHECK(what_of(R"([{"id":"x","a":[0.1,0.2,0.3],"w":"hi","u":0.2}])").find("must be numbers") !=
          std::string::npos);
    CHECK(what_of("[1, 2]").find("record 1 is not an object") != std::string::npos);
    CHECK(what_of("[{]").find("invalid json") != std::string::npos);
    // A top-level object is not detected as json; it falls to the line parser.
    CHECK(what_of(R"({"id":"x"})").find("';'-separated fields") != std::string::npos);
}

TEST_CASE("format detection skips leading whitespace") {
    std::string text = "\n  \t [{\"id\":\"x\",\"a\":[0,1,2],\"w\":0.5,\"u\":0.2}]";
    std::vector<DatasetRecord> records = ifr::parse_dataset_text(text);
    REQUIRE(records.size() == 1);
    CHECK(records[0].id == "x");
}

TEST_CASE("stream parsing matches text parsing") {
    std::istringstream in("a; 0.1, 0.2, 0.3, 0.4; 0.5; 0.2\n");
    std::vector<DatasetRecord> records = ifr::parse_dataset(in);
    REQUIRE(records.size() == 1);
    CHECK(records[0].number == Trifn(0.1, 0.2, 0.3, 0.4, 0.5, 0.2));
}

TEST_CASE("serialize then parse is the identity, line form") {
    std::vector<DatasetRecord> records = {
        {"plain", Trifn(0.1, 0.2, 0.3, 0.4, 0.5, 0.2)},
        {"thirds", Trifn(-1.0 / 3.0, 0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)},
        {"tri", Trifn::triangular(-0.25, 0.5, 1.75, 0.1, 0.9)},
        {"origin", Trifn::origin()},
    };
    std::string text = ifr::serialize_dataset(records);
    CHECK(ifr::parse_dataset_text(text) == records);
}

TEST_CASE("serialize then parse is the identity, json form") {
    std::vector<DatasetRecord> records = {
        {"plain", Trifn(0.1, 0.2, 0.3, 0.4, 0.5, 0.2)},
        {"sevenths", Trifn(1.0 / 7.0, 2.0 / 7.0, 3.0 / 7.0, 4.0 / 7.0, 1.0 / 7.0, 2.0 / 7.0)},
    };
    std::string text = ifr::serialize_dataset_json(records);
    CHECK(text.front() == '[');
    CHECK(ifr::parse_dataset_text(text) == records);
}

TEST_CASE("an empty dataset parses to no records") {
    CHECK(ifr::parse_dataset_text("").empty());
    CHECK(ifr::parse_dataset_text("# only a comment\n").empty());
    CHECK(ifr::parse_dataset_text("[]").empty());
}
