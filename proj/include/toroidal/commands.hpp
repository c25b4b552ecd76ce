#pragma once

// The `toroidal` command line: check, eval, fan, verify, hilbert, example.
//
// Exit codes: 0 success, 1 malformed input, 2 inconclusive properness,
// 3 undetermined verification (box cap reached), 4 verification found
// unequal cones.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toroidal/divisor.hpp"
#include "toroidal/fan.hpp"
#include "toroidal/fuzz.hpp"
#include "toroidal/json_io.hpp"
#include "toroidal/semigroup.hpp"

namespace toroidal::cli {

using nlohmann::json;

enum Exit : int { kOk = 0, kMalformed = 1, kInconclusive = 2, kUndetermined = 3, kDifferent = 4 };

inline const std::map<std::string, std::string>& builtin_examples() {
    static const std::map<std::string, std::string> examples = {
        {"sl2", R"({
  "U": [],
  "base": {
    "kind": "affine_line",
    "points": [
      {"coordinate": "0", "label": "0"},
      {"coordinate": "1", "label": "1"}
    ]
  },
  "coefficients": {
    "0": {"rank": 2, "rays": [], "vertices": [["0", "0"], ["1", "0"]]},
    "1": {"rank": 2, "rays": [], "vertices": [["0", "0"], ["0", "1"]]}
  },
  "description": "SL(2,C) with the (t1,t2)-action, quotient s = ad onto the affine line: segments conv{0,e1} at 0 and conv{0,e2} at 1",
  "rank": 2,
  "tail": {"generators": [], "rank": 2}
}
)"},
        {"trivial", R"({
  "U": [],
  "base": {"kind": "affine_line", "points": []},
  "coefficients": {},
  "description": "no non-trivial coefficients: the fan has no charts",
  "rank": 2,
  "tail": {"generators": [], "rank": 2}
}
)"},
        {"half", R"({
  "U": [],
  "base": {
    "kind": "affine_line",
    "points": [{"coordinate": "0", "label": "0"}]
  },
  "coefficients": {
    "0": {"rank": 2, "rays": [], "vertices": [["0", "0"], ["1/2", "0"]]}
  },
  "description": "a segment with a half-integral vertex",
  "rank": 2,
  "tail": {"generators": [], "rank": 2}
}
)"},
    };
    return examples;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json read_json(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path);
        if (!file) throw StructuralError("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return json::parse(text);
}

inline LatticeVector parse_weight(const std::string& text) {
    LatticeVector u;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rat q = parse_rat(item);
        if (!is_integral(q)) throw StructuralError("weight entries must be integers, got '" + item + "'");
        u.push_back(numerator(q));
    }
    if (u.empty()) throw StructuralError("empty weight");
    return u;
}

inline int verify_exit(const VerificationReport& r) {
    if (r.overall) return kOk;
    return r.any_undetermined() ? kUndetermined : kDifferent;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact polyhedral computations for complexity-one torus actions", "toroidal"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string weight;
    bool floor_flag = false;
    std::size_t box_cap = 32;
    std::optional<std::uint64_t> fuzz_seed;
    std::size_t count = 1;
    std::string point;
    std::size_t box = 3;
    std::string example_name;

    auto* check = app.add_subcommand("check", "properness report of a divisor file");
    check->add_option("file", file, "divisor JSON, or - for standard input");

    auto* eval = app.add_subcommand("eval", "evaluate D(u)");
    eval->add_option("file", file, "divisor JSON, or - for standard input");
    eval->add_option("--u", weight, "comma-separated integer weight")->required()->allow_extra_args(false);
    eval->add_flag("--floor", floor_flag, "round coefficients down");

    auto* fan = app.add_subcommand("fan", "glued fan of homogenized coefficients");
    fan->add_option("file", file, "divisor JSON, or - for standard input");

    auto* verify = app.add_subcommand("verify", "compare enumerated toric-model cones with homogenizations");
    verify->add_option("file", file, "divisor JSON, or - for standard input");
    verify->add_option("--box-cap", box_cap, "largest enumeration box")->check(CLI::NonNegativeNumber);
    verify->add_option("--fuzz", fuzz_seed, "verify random divisors from this seed instead of a file");
    verify->add_option("--count", count, "number of random divisors with --fuzz")->check(CLI::PositiveNumber);

    auto* hilbert = app.add_subcommand("hilbert", "box-limited Hilbert basis of one point's semigroup");
    hilbert->add_option("file", file, "divisor JSON, or - for standard input");
    hilbert->add_option("--point", point, "point label")->required();
    hilbert->add_option("--box", box, "enumeration box")->check(CLI::NonNegativeNumber);

    auto* example = app.add_subcommand("example", "print a built-in divisor file");
    example->add_option("name", example_name, "sl2, trivial or half")->required();

    std::vector<const char*> argv{"toroidal"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        if (example->parsed()) {
            const auto& all = builtin_examples();
            auto it = all.find(example_name);
            if (it == all.end()) {
                err << "unknown example '" << example_name << "'; available:";
                for (const auto& [name, text] : all) err << " " << name;
                err << "\n";
                return kMalformed;
            }
            out << it->second;
            return kOk;
        }

        if (verify->parsed() && fuzz_seed) {
            fuzz::Rng rng(*fuzz_seed);
            json cases = json::array();
            int worst = kOk;
            for (std::size_t i = 0; i < count; ++i) {
                auto d = fuzz::divisor(rng);
                auto report = verify_theorem1(d, box_cap);
                int code = verify_exit(report);
                worst = std::max(worst, code);
                if (code != kOk) cases.push_back({{"divisor", io::encode(d)}, {"report", io::encode(report)}});
            }
            out << dump({{"seed", *fuzz_seed}, {"count", count}, {"overall", worst == kOk}, {"failures", cases}});
            return worst;
        }

        io::DivisorFile df = io::decode_divisor_file(read_json(file, in));
        const auto& d = df.divisor;

        if (check->parsed()) {
            auto report = check_proper(d);
            out << dump(io::encode(report));
            return report.verdict == Properness::Proper ? kOk : kInconclusive;
        }
        if (eval->parsed()) {
            auto u = parse_weight(weight);
            out << dump(floor_flag ? io::encode(evaluate_floor(d, u)) : io::encode(evaluate(d, u)));
            return kOk;
        }
        if (fan->parsed()) {
            out << dump(io::encode(fan_from_divisor(d, df.kept_trivial)));
            return kOk;
        }
        if (verify->parsed()) {
            auto report = verify_theorem1(d, box_cap);
            out << dump(io::encode(report));
            return verify_exit(report);
        }
        if (hilbert->parsed()) {
            if (!d.base().has_point(point)) throw StructuralError("no point labelled '" + point + "'");
            out << dump(io::encode(hilbert_basis(MonomialSemigroup(d.coefficient(point)), box)));
            return kOk;
        }
    } catch (const json::parse_error& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return kMalformed;
    } catch (const json::exception& e) {
        err << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const StructuralError& e) {
        err << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}

}  // namespace toroidal::cli
