#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "z4forms/cli.hpp"
#include "z4forms/io.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

std::string data(const std::string& name) { return std::string(Z4FORMS_TEST_DATA) + "/" + name; }

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "z4forms");
    std::ostringstream out;
    std::ostringstream err;
    const int code = z4::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("brown command") {
    auto r = run({"brown", data("rp2_1.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "beta=1 A=1 B=1 n=1\n");
    CHECK(run({"brown", data("torus_22.json")}).out == "beta=4 A=-2 B=0 n=2\n");
    CHECK(run({"brown", data("empty.json")}).out == "beta=0 A=1 B=0 n=0\n");
    CHECK(run({"brown", "--json", data("rp2_3.json")}).out == "{\"A\":1,\"B\":-1,\"beta\":7,\"n\":1}\n");

    r = run({"brown", data("degenerate.json")});
    CHECK(r.code == 3);
    CHECK(r.err == "Brown invariant undefined: degenerate form\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"enumerate"}).code == 2);
    CHECK(run({"enumerate", "--genus", "1", "--crosscaps", "1"}).code == 2);
    CHECK(run({"enumerate", "--genus", "x"}).code == 2);
    CHECK(run({"brown", data("malformed.json")}).code == 2);
    CHECK(run({"brown", data("does_not_exist.json")}).code == 2);
    CHECK(run({"vanishing", data("torus_00.json")}).code == 2);
    CHECK(run({"torsor", data("torus_00.json"), "--covector", "101"}).code == 2);
    CHECK(run({"gm", "--form", "E7", "--char", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate by surface name or form file") {
    const auto by_name = run({"enumerate", "--form", "T"});
    CHECK(by_name.code == 0);
    CHECK(by_name.out == run({"enumerate", "--genus", "1"}).out);
    CHECK(by_name.out == run({"enumerate", "--form", data("torus_form.json")}).out);
    CHECK(run({"enumerate", "--form", "RP2#RP2"}).out == run({"enumerate", "--crosscaps", "2"}).out);
    CHECK(run({"enumerate", "--genus", "6"}).code == 4);
}

TEST_CASE("guard violations exit with 4") {
    const auto r = run({"vanishing", data("crosscaps11.json"), "--max"});
    CHECK(r.code == 4);
}

TEST_CASE("surgery writes a reduced enhancement that other commands accept") {
    const auto out_path = std::filesystem::temp_directory_path() / "z4forms_surgery_out.json";
    auto r = run({"surgery", data("genus2_0000.json"), "--class", "1000", "--out", out_path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "beta 0 -> 0\n");
    CHECK(run({"brown", out_path.string()}).out == "beta=0 A=2 B=0 n=2\n");

    r = run({"surgery", "--json", data("torus_00.json"), "--class", "10"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("beta_before") == 0);
    CHECK(z4::io::enhancement_from_json(j).dim() == 0);

    CHECK(run({"surgery", data("torus_22.json"), "--class", "11"}).err == "surgery obstructed: q(c) != 0\n");
    CHECK(run({"surgery", data("degenerate.json"), "--class", "1"}).code == 3);
    std::filesystem::remove(out_path);
}

TEST_CASE("torsor output round trips") {
    const auto out_path = std::filesystem::temp_directory_path() / "z4forms_torsor_out.json";
    auto r = run({"torsor", data("rp2_1.json"), "--covector", "1", "--out", out_path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "predicted delta = 6, measured delta = 6: MATCH\n");
    CHECK(run({"brown", out_path.string()}).out == "beta=7 A=1 B=-1 n=1\n");
    r = run({"torsor", data("degenerate.json"), "--covector", "1"});
    CHECK(r.code == 3);
    CHECK(r.out == "{\"form\":{\"dim\":1,\"gram\":[[0]]},\"values\":[2]}\n");
    std::filesystem::remove(out_path);
}

TEST_CASE("gm accepts JSON form and characteristic files") {
    auto r = run({"gm", "--form", data("cp2_minus_cp2.json"), "--char", data("char_11.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "required beta = 0\n");
    r = run({"gm", "--form", "1", "--char", "1", "--enhancement", data("rp2_1.json")});
    CHECK(r.code == 1);
    CHECK(r.out == "required beta = 0\nFAIL: beta = 1\n");
    CHECK(run({"gm", "--form", "1", "--char", "1", "--beta", "0", "--enhancement", data("rp2_1.json")}).code == 2);
}
