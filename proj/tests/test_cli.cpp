#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "toric/cli.hpp"
#include "toric/rng.hpp"

using namespace toric;
using cli::Config;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("toric_test_" + std::to_string(Rng(std::random_device{}()).next()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

const char* kQ5Config = R"({
  "field": {"p": 5, "m": 1},
  "polytope": {"simplex": 1},
  "helper_polytope": {"simplex": 2},
  "t": 3,
  "trials": 8,
  "seed": 7
})";

Config q5_config() { return cli::parse_config(io::json::parse(kQ5Config)); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_bin(const std::string& args) {
    const std::string cmd = std::string(TORIC_CLI_BIN) + " " + args + " >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("config parsing: happy path and field errors") {
    auto cfg = q5_config();
    CHECK(cfg.field->q() == 5);
    CHECK(cfg.t == 3);
    CHECK(cfg.trials == 8);
    CHECK(cfg.helper.has_value());

    CHECK_THROWS_AS(cli::parse_config(io::json::parse("{}")), ConfigError);
    CHECK_THROWS_AS(cli::parse_config(io::json::parse(R"({"field":{"p":4,"m":1},
        "polytope":{"simplex":1}})")),
                    ConfigError);
    CHECK_THROWS_AS(cli::parse_config(io::json::parse(R"({"field":{"p":5,"m":1},
        "polytope":{"vertices":[[0,0],[1,0.5]]}})")),
                    ConfigError);
    CHECK_THROWS_AS(cli::parse_config(io::json::parse(R"({"field":{"p":5,"m":1},
        "polytope":{"simplex":1},"t":"many"})")),
                    ConfigError);
}

TEST_CASE("build writes a descriptor that reconstructs the same code") {
    TempDir tmp;
    auto cfg = q5_config();
    std::ostringstream os;
    const auto desc_path = tmp.path / "pair.json";
    CHECK(cli::run_build(cfg, desc_path, os) == 0);
    CHECK(os.str().find("n=16 k=3") != std::string::npos);
    CHECK(os.str().find("max_t=3") != std::string::npos);

    auto j = io::load_json_file(desc_path);
    CHECK(j.at("code").at("n") == 16);
    CHECK(j.at("code").at("k") == 3);
    CHECK(j.at("helper").at("k") == 6);
    CHECK(j.at("distances").at("d_code").at("value") == 12);
    CHECK(j.at("conditions").at("max_t") == 3);

    auto C = io::code_from_descriptor(j.at("code"));
    CHECK(C.n() == 16);
    CHECK(C.k == 3);
}

TEST_CASE("build without a helper polygon writes a single-code descriptor") {
    TempDir tmp;
    auto cfg = cli::parse_config(io::json::parse(
        R"({"field":{"p":5,"m":1},"polytope":{"simplex":0}})"));
    std::ostringstream os;
    const auto desc = tmp.path / "code.json";
    CHECK(cli::run_build(cfg, desc, os) == 0);
    CHECK(os.str().find("n=16 k=1") != std::string::npos);  // repetition-style code

    // the bare descriptor feeds encode directly
    const auto msgs = tmp.path / "m.txt";
    io::write_text_file(msgs, "3\n");
    const auto cws = tmp.path / "c.txt";
    CHECK(cli::run_encode(desc, msgs, cws, os) == 0);
    auto words = io::read_word_file(cws, *cfg.field, 16);
    REQUIRE(words.size() == 1);
    for (auto v : words[0]) CHECK(v == 3);

    // the pair subcommands refuse a config without the helper polygon
    CHECK_THROWS_AS(cli::pair_from_config(cfg), ConfigError);
}

TEST_CASE("encode -> corrupt -> decode round-trip through files") {
    TempDir tmp;
    auto cfg = q5_config();
    std::ostringstream os;

    const auto desc = tmp.path / "pair.json";
    REQUIRE(cli::run_build(cfg, desc, os) == 0);

    const auto msgs = tmp.path / "msgs.txt";
    io::write_text_file(msgs, "1 2 3\n0 0 0\n4 4 1\n");

    const auto cws = tmp.path / "cw.txt";
    REQUIRE(cli::run_encode(desc, msgs, cws, os) == 0);
    auto words = io::read_word_file(cws, *cfg.field, 16);
    CHECK(words.size() == 3);

    const auto recv = tmp.path / "recv.txt";
    REQUIRE(cli::run_corrupt(desc, cws, 3, 11, recv, os) == 0);
    auto received = io::read_word_file(recv, *cfg.field, 16);
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t diff = 0;
        for (std::size_t j = 0; j < 16; ++j)
            if (words[i][j] != received[i][j]) ++diff;
        CHECK(diff == 3);  // exactly t errors planted
    }

    const auto outcome = tmp.path / "out.json";
    CHECK(cli::run_decode(cfg, recv, outcome, os) == 0);
    auto oj = io::load_json_file(outcome);
    REQUIRE(oj.is_array());
    REQUIRE(oj.size() == 3);
    for (const auto& o : oj) {
        CHECK(o.at("status") == "success");
        CHECK(o.at("residual_weight") == 3);
        CHECK(o.at("error_support").size() == 3);
    }
    CHECK(oj[0].at("message") == io::json::parse("[1,2,3]"));
    CHECK(oj[1].at("message") == io::json::parse("[0,0,0]"));
    CHECK(oj[2].at("message") == io::json::parse("[4,4,1]"));
}

TEST_CASE("corrupt t=0 leaves words untouched; decode is the identity") {
    TempDir tmp;
    auto cfg = q5_config();
    std::ostringstream os;
    const auto desc = tmp.path / "pair.json";
    REQUIRE(cli::run_build(cfg, desc, os) == 0);
    const auto msgs = tmp.path / "m.txt";
    io::write_text_file(msgs, "2 0 1\n");
    const auto cws = tmp.path / "c.txt";
    REQUIRE(cli::run_encode(desc, msgs, cws, os) == 0);
    const auto recv = tmp.path / "r.txt";
    REQUIRE(cli::run_corrupt(desc, cws, 0, 1, recv, os) == 0);
    CHECK(slurp(cws) == slurp(recv));

    const auto outp = tmp.path / "o.json";
    CHECK(cli::run_decode(cfg, recv, outp, os) == 0);
    auto oj = io::load_json_file(outp);
    CHECK(oj[0].at("residual_weight") == 0);
    CHECK(oj[0].at("message") == io::json::parse("[2,0,1]"));
}

TEST_CASE("simulate: determinism, CSV shape, statuses match re-decoding") {
    TempDir tmp;
    auto cfg = q5_config();
    std::ostringstream os;

    const auto csv1 = tmp.path / "a.csv";
    const auto csv2 = tmp.path / "b.csv";
    const auto recv = tmp.path / "recv.txt";
    REQUIRE(cli::run_simulate(cfg, csv1, recv, false, os) == 0);
    REQUIRE(cli::run_simulate(cfg, csv2, std::nullopt, false, os) == 0);
    CHECK(slurp(csv1) == slurp(csv2));  // byte-identical

    const std::string csv = slurp(csv1);
    CHECK(csv.rfind("trial,seed,t,status,residual_weight,ms\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 8);

    // every persisted received word decodes to the status recorded in the CSV
    const auto outp = tmp.path / "redecode.json";
    cli::run_decode(cfg, recv, outp, os);
    auto oj = io::load_json_file(outp);
    std::istringstream rows(csv);
    std::string line;
    std::getline(rows, line);  // header
    std::size_t idx = 0;
    while (std::getline(rows, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        const auto c4 = line.find(',', c3 + 1);
        const std::string status = line.substr(c3 + 1, c4 - c3 - 1);
        CHECK(status == oj[idx].at("status").get<std::string>());
        ++idx;
    }
    CHECK(idx == 8);

    // a different seed changes the transcript
    cfg.seed = 8;
    const auto csv3 = tmp.path / "c.csv";
    REQUIRE(cli::run_simulate(cfg, csv3, std::nullopt, false, os) == 0);
    CHECK(slurp(csv3) != slurp(csv1));
}

TEST_CASE("simulate with zero trials writes only the header") {
    TempDir tmp;
    auto cfg = q5_config();
    cfg.trials = 0;
    std::ostringstream os;
    const auto csv = tmp.path / "empty.csv";
    REQUIRE(cli::run_simulate(cfg, csv, std::nullopt, false, os) == 0);
    CHECK(slurp(csv) == "trial,seed,t,status,residual_weight,ms\n");
}

TEST_CASE("verify reports conditions, dual and pair checks") {
    TempDir tmp;
    auto cfg = q5_config();
    std::ostringstream os;
    const auto rep = tmp.path / "verify.json";
    CHECK(cli::run_verify(cfg, rep, os) == 0);
    auto j = io::load_json_file(rep);
    CHECK(j.at("conditions").at("i") == true);
    CHECK(j.at("conditions").at("ii") == true);
    CHECK(j.at("conditions").at("iii") == true);
    CHECK(j.at("dual").at("orthogonal") == true);
    CHECK(j.at("ecp").at("orth") == true);
    CHECK(j.at("ecp").at("dim_a") == true);
    CHECK(j.at("ecp").at("d_b_perp") == true);
    CHECK(j.at("ecp").at("d_a_plus_d_c") == true);
    CHECK(os.str().find("conditions=pass") != std::string::npos);
    CHECK(os.str().find("ecp=pass") != std::string::npos);

    // t = 4 violates condition ii (d_sum = 4 is not > 4)
    cfg.t = 4;
    std::ostringstream os2;
    CHECK(cli::run_verify(cfg, std::nullopt, os2) == 0);
    CHECK(os2.str().find("ii=false") != std::string::npos);
}

TEST_CASE("binary: exit codes 0/1/2 across the subcommand surface") {
    TempDir tmp;
    const auto cfg_path = tmp.path / "cfg.json";
    io::write_text_file(cfg_path, kQ5Config);
    const auto desc = tmp.path / "d.json";
    const auto msgs = tmp.path / "m.txt";
    const auto cws = tmp.path / "c.txt";
    const auto recv = tmp.path / "r.txt";

    CHECK(run_bin("build --config " + cfg_path.string() + " --out " + desc.string()) == 0);
    io::write_text_file(msgs, "1 2 3\n");
    CHECK(run_bin("encode --code " + desc.string() + " --in " + msgs.string() + " --out " +
                  cws.string()) == 0);
    CHECK(run_bin("corrupt --code " + desc.string() + " --in " + cws.string() +
                  " --t 3 --seed 5 --out " + recv.string()) == 0);
    CHECK(run_bin("decode --config " + cfg_path.string() + " --in " + recv.string()) == 0);
    CHECK(run_bin("simulate --config " + cfg_path.string() + " --trials 2 --out " +
                  (tmp.path / "s.csv").string()) == 0);
    CHECK(run_bin("verify --config " + cfg_path.string()) == 0);

    // classified decode failure: corrupt way beyond design weight
    CHECK(run_bin("corrupt --code " + desc.string() + " --in " + cws.string() +
                  " --t 12 --seed 5 --out " + recv.string()) == 0);
    CHECK(run_bin("decode --config " + cfg_path.string() + " --in " + recv.string()) == 1);

    // usage and config errors
    CHECK(run_bin("unknown-subcommand") == 2);
    CHECK(run_bin("build") == 2);  // missing --config
    const auto bad_cfg = tmp.path / "bad.json";
    io::write_text_file(bad_cfg, R"({"field":{"p":4,"m":1},"polytope":{"simplex":1}})");
    CHECK(run_bin("build --config " + bad_cfg.string()) == 2);
    CHECK(run_bin("decode --config " + cfg_path.string() + " --in /nonexistent.txt") == 2);
}

TEST_CASE("outcome JSON carries the classified failure") {
    auto cfg = q5_config();
    auto pair = cli::pair_from_config(cfg);
    DecodeOutcome o;
    o.status = DecodeStatus::ResidualTooHeavy;
    o.residual_weight = 9;
    auto j = cli::outcome_to_json(o);
    CHECK(j.at("status") == "residual_too_heavy");
    CHECK(j.at("residual_weight") == 9);
    CHECK(j.at("message").is_array());
    CHECK(j.at("message").empty());

    DecodeOutcome o2;
    o2.status = DecodeStatus::NoNonzeroLocator;
    CHECK(cli::outcome_to_json(o2).at("residual_weight").is_null());
}
