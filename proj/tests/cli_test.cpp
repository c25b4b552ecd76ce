#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"
#include "toroidal/commands.hpp"

namespace toroidal {
namespace {

using nlohmann::json;
using testing::lvs;

struct Result {
    int code;
    std::string out, err;
    json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return cli::builtin_examples().at(name); }

std::string data(const std::string& file) { return std::string(TOROIDAL_DATA_DIR) + "/" + file; }

TEST(Cli, CheckSl2) {
    auto r = run({"check", "-"}, example("sl2"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.parsed()["proper"], true);
}

TEST(Cli, CheckProjectiveIsInconclusive) {
    auto r = run({"check", data("sl2_projective.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.parsed()["proper"], "inconclusive");
    EXPECT_FALSE(r.parsed()["reasons"].empty());
}

TEST(Cli, MalformedInput) {
    auto truncated = run({"check", "-"}, example("sl2").substr(0, 40));
    EXPECT_EQ(truncated.code, 1);
    EXPECT_NE(truncated.err.find("malformed JSON"), std::string::npos);
    EXPECT_EQ(run({"check", "/nonexistent.json"}).code, 1);
    EXPECT_EQ(run({"check", "-"}, R"({"rank": 2})").code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, Eval) {
    auto r = run({"eval", "-", "--u=-1,-1"}, example("sl2"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.parsed(), json({{"0", "-1"}, {"1", "-1"}}));
    EXPECT_EQ(run({"eval", "-", "--u", "0,0"}, example("sl2")).parsed(), json::object());
    EXPECT_EQ(run({"eval", "-", "--u", "1,0"}, example("sl2")).parsed(), json::object());
    EXPECT_EQ(run({"eval", "-", "--u", "-1,-1"}, example("sl2")).code, 0);
}

TEST(Cli, EvalFloorAndErrors) {
    auto half = run({"eval", "-", "--u=-1,0"}, example("half"));
    EXPECT_EQ(half.parsed(), json({{"0", "-1/2"}}));
    auto fl = run({"eval", "-", "--u=-1,0", "--floor"}, example("half"));
    EXPECT_EQ(fl.parsed(), json({{"0", "-1"}}));
    EXPECT_EQ(run({"eval", "-", "--u", "1,0,0"}, example("sl2")).code, 1);
    EXPECT_EQ(run({"eval", "-", "--u", "1/2,0"}, example("sl2")).code, 1);
    // Outside the weight cone of the orthant tail.
    EXPECT_EQ(run({"eval", data("product_point.json"), "--u=-1,0"}).code, 1);
}

TEST(Cli, FanSl2) {
    auto r = run({"fan", "-"}, example("sl2"));
    ASSERT_EQ(r.code, 0);
    auto fan = io::decode_fan(r.parsed());
    EXPECT_TRUE(fan.shared_face().is_zero());
    EXPECT_EQ(fan.charts().at("0").generators(), lvs({{1, 0, 0}, {1, 1, 0}}));
    EXPECT_EQ(fan.charts().at("1").generators(), lvs({{1, 0, 0}, {1, 0, 1}}));
}

TEST(Cli, FanTrivialAndHalf) {
    auto t = run({"fan", "-"}, example("trivial")).parsed();
    EXPECT_TRUE(t["charts"].empty());
    auto h = io::decode_fan(run({"fan", "-"}, example("half")).parsed());
    EXPECT_EQ(h.charts().at("0").generators(), lvs({{1, 0, 0}, {2, 1, 0}}));
}

TEST(Cli, FanKeepsUOutOfTheCharts) {
    auto r = run({"fan", data("product_point.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto fan = io::decode_fan(r.parsed());
    EXPECT_EQ(fan.charts().size(), 1u);
    EXPECT_EQ(fan.shared_face().generators(), lvs({{0, 0, 1}, {0, 1, 0}}));
}

TEST(Cli, Verify) {
    auto r = run({"verify", "-"}, example("sl2"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.parsed()["overall"], true);
    EXPECT_EQ(r.parsed()["points"]["0"]["status"], "equal");

    auto capped = run({"verify", "-", "--box-cap", "1"}, example("sl2"));
    EXPECT_EQ(capped.code, 3);
    EXPECT_TRUE(capped.parsed()["points"]["0"]["lhs"].is_null());
}

TEST(Cli, VerifyFuzz) {
    auto r = run({"verify", "--fuzz", "7", "--count", "5"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.parsed()["count"], 5);
    EXPECT_TRUE(r.parsed()["failures"].empty());
}

TEST(Cli, Hilbert) {
    auto r = run({"hilbert", "-", "--point", "0", "--box", "3"}, example("sl2"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.parsed()["complete"], true);
    EXPECT_EQ(r.parsed()["elements"], json::parse("[[0,0,-1],[0,0,1],[0,1,0],[1,-1,0]]"));

    auto small = run({"hilbert", "-", "--point", "0", "--box", "0"}, example("sl2"));
    EXPECT_EQ(small.code, 0);
    EXPECT_EQ(small.parsed()["complete"], false);
    EXPECT_TRUE(small.parsed().contains("witness"));

    EXPECT_EQ(run({"hilbert", "-", "--point", "Q"}, example("sl2")).code, 1);
}

TEST(Cli, Examples) {
    for (const auto& name : {"sl2", "trivial", "half"}) {
        auto r = run({"example", name});
        EXPECT_EQ(r.code, 0);
        EXPECT_NO_THROW(io::decode_divisor_file(r.parsed())) << name;
    }
    auto unknown = run({"example", "nope"});
    EXPECT_EQ(unknown.code, 1);
    EXPECT_NE(unknown.err.find("sl2"), std::string::npos);
}

TEST(Cli, OutputIsCanonicalAndDeterministic) {
    for (const auto& cmd : {std::vector<std::string>{"fan", "-"}, std::vector<std::string>{"verify", "-"},
                            std::vector<std::string>{"check", "-"}}) {
        auto a = run(cmd, example("sl2"));
        auto b = run(cmd, example("sl2"));
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.out, a.parsed().dump(2) + "\n");
    }
    // A divisor file survives decode/encode unchanged.
    auto j = json::parse(example("sl2"));
    EXPECT_EQ(io::encode(io::decode_divisor_file(j)), j);
}

}  // namespace
}  // namespace toroidal
