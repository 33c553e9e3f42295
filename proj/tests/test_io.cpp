#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "thetaquartic/io.hpp"
#include "thetaquartic/theta.hpp"

using namespace thetaquartic;
using io::Json;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("complex numbers are [re, im] pairs") {
    const Complex z(1.5, -0.25);
    CHECK(io::complex_to_json(z) == Json::array({1.5, -0.25}));
    CHECK(io::complex_from_json(io::complex_to_json(z)) == z);
    CHECK(code_of([] { io::complex_from_json(Json("1+2i")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::complex_from_json(Json::array({1.0})); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::complex_from_json(Json::array({1.0, "x"})); }) == ErrorCode::ParseError);
}

TEST_CASE("period matrix round trip") {
    const SiegelPoint tau = random_tau(3);
    const Json j = io::period_matrix_to_json(tau);
    CHECK(j.at("genus") == 3);
    CHECK(io::period_matrix_from_json(io::parse_json(j.dump())).tau() == tau.tau());
}

TEST_CASE("period matrix validation on load") {
    Json j = io::period_matrix_to_json(random_tau(4));
    Json asym = j;
    asym["tau"][0][1] = Json::array({0.3, 0.0});
    CHECK(code_of([&] { io::period_matrix_from_json(asym); }) == ErrorCode::NotSymmetric);
    Json short_rows = j;
    short_rows["tau"].erase(2);
    CHECK(code_of([&] { io::period_matrix_from_json(short_rows); }) == ErrorCode::ParseError);
    Json no_genus = j;
    no_genus.erase("genus");
    CHECK(code_of([&] { io::period_matrix_from_json(no_genus); }) == ErrorCode::ParseError);
}

TEST_CASE("bitangent round trip") {
    const BitangentSet lines = extract_bitangents(random_tau(5));
    const Json j = io::bitangents_to_json(lines);
    CHECK(j.at("bitangents").size() == 28);
    CHECK(j.at("bitangents")[0].at("char").is_string());
    const BitangentSet back = io::bitangents_from_json(io::parse_json(j.dump()));
    for (const auto& l : lines.lines()) CHECK(back.coords(l.ch) == l.coords);
    // Byte-identical re-serialization.
    CHECK(io::bitangents_to_json(back).dump() == j.dump());

    Json bad_char = j;
    bad_char["bitangents"][0]["char"] = "12|001";
    CHECK(code_of([&] { io::bitangents_from_json(bad_char); }) == ErrorCode::ParseError);
    Json two_coords = j;
    two_coords["bitangents"][0]["coords"].erase(2);
    CHECK(code_of([&] { io::bitangents_from_json(two_coords); }) == ErrorCode::ParseError);
    Json missing = j;
    missing["bitangents"].erase(0);
    CHECK(code_of([&] { io::bitangents_from_json(missing); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fingerprint round trip") {
    const Fingerprint fp = theta4_map(random_tau(6));
    const Json j = io::fingerprint_to_json(fp);
    const Fingerprint back = io::fingerprint_from_json(io::parse_json(j.dump()));
    CHECK(back.reference == fp.reference);
    CHECK(back.quotients == fp.quotients);

    Json duplicate = j;
    duplicate["quotients"].push_back(duplicate["quotients"][0]);
    CHECK(code_of([&] { io::fingerprint_from_json(duplicate); }) == ErrorCode::ParseError);
}

TEST_CASE("malformed input") {
    CHECK(code_of([] { io::parse_json("{\"genus\": 3,"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::read_json_file("/nonexistent/tau.json"); }) == ErrorCode::ParseError);
    const std::string path = "test_io_tmp.json";
    {
        std::ofstream out(path);
        out << "[1, 2";
    }
    CHECK(code_of([&] { io::read_json_file(path); }) == ErrorCode::ParseError);
    std::remove(path.c_str());
}
