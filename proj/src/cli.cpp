#include "toric/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toric/rng.hpp"

namespace toric::cli {

using io::json;

Config parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    if (!j.contains("field")) throw ConfigError("config: missing field");
    if (!j.contains("polytope")) throw ConfigError("config: missing polytope");

    Config cfg{io::field_from_json(j.at("field")),
               io::polytope_from_json(j.at("polytope")),
               std::nullopt, 0, 0, 0, 10'000'000,
               std::nullopt, std::nullopt, std::nullopt};

    if (j.contains("helper_polytope"))
        cfg.helper = io::polytope_from_json(j.at("helper_polytope"));

    auto get_int = [&](const char* key, std::int64_t lo, std::int64_t def) {
        if (!j.contains(key)) return def;
        if (!j.at(key).is_number_integer())
            throw ConfigError(std::string("config.") + key + ": expected an integer");
        const std::int64_t v = j.at(key).get<std::int64_t>();
        if (v < lo) throw ConfigError(std::string("config.") + key + ": below minimum");
        return v;
    };
    cfg.t = get_int("t", 0, 0);
    cfg.trials = static_cast<std::uint64_t>(get_int("trials", 0, 0));
    cfg.seed = static_cast<std::uint64_t>(get_int("seed", 0, 0));
    cfg.budget = static_cast<std::uint64_t>(get_int("distance_budget", 1, 10'000'000));

    if (j.contains("distances")) {
        const json& d = j.at("distances");
        if (!d.is_object()) throw ConfigError("config.distances: expected an object");
        auto decl = [&](const char* key) -> std::optional<std::int64_t> {
            if (!d.contains(key)) return std::nullopt;
            if (!d.at(key).is_number_integer() || d.at(key).get<std::int64_t>() < 1)
                throw ConfigError(std::string("config.distances.") + key +
                                  ": expected a positive integer");
            return d.at(key).get<std::int64_t>();
        };
        cfg.d_code = decl("d_code");
        cfg.d_helper = decl("d_helper");
        cfg.d_sum = decl("d_sum");
    }
    return cfg;
}

Config load_config(const fs::path& path) { return parse_config(io::load_json_file(path)); }

DecoderPair pair_from_config(const Config& cfg) {
    if (!cfg.helper) throw ConfigError("config: helper_polytope required for this command");
    DistanceOptions opts{cfg.budget, cfg.d_code, cfg.d_helper, cfg.d_sum};
    return make_decoder_pair(cfg.field, cfg.box, *cfg.helper, cfg.t, opts);
}

json outcome_to_json(const DecodeOutcome& out) {
    json j{{"status", to_string(out.status)},
           {"message", out.message},
           {"error_support", out.error_support}};
    if (out.residual_weight)
        j["residual_weight"] = *out.residual_weight;
    else
        j["residual_weight"] = nullptr;
    return j;
}

namespace {

json distance_json(const Distance& d) {
    return json{{"value", d.value}, {"provenance", to_string(d.prov)}};
}

json conditions_json(const ConditionReport& rep) {
    return json{{"i", rep.i},
                {"ii", rep.ii},
                {"iii", rep.iii},
                {"max_t", rep.max_t},
                {"n", rep.n},
                {"helper_dim", rep.helper_dim},
                {"d_code", rep.d_code},
                {"d_helper", rep.d_helper},
                {"d_sum", rep.d_sum},
                {"n_minus_d_code", static_cast<std::int64_t>(rep.n) - rep.d_code}};
}

const json& descriptor_part(const json& j) {
    // accept both a bare descriptor and a build output with a "code" entry
    return j.contains("code") ? j.at("code") : j;
}

void corrupt_word(std::vector<std::uint32_t>& w, const Field& f, std::int64_t t, Rng& rng) {
    const auto positions = rng.distinct_positions(w.size(), static_cast<std::size_t>(t));
    for (auto pos : positions) {
        const auto e = static_cast<std::uint32_t>(1 + rng.below(f.q() - 1));
        w[pos] = f.add(w[pos], e);
    }
}

}  // namespace

int run_build(const Config& cfg, const std::optional<fs::path>& out, std::ostream& os) {
    json result;
    if (cfg.helper) {
        const DecoderPair pair = pair_from_config(cfg);
        const ConditionReport rep = check_conditions(pair);
        result = json{{"field", io::field_to_json(*pair.code.field)},
                      {"code", io::descriptor(pair.code)},
                      {"helper", io::descriptor(pair.helper)},
                      {"sum", io::descriptor(pair.sum_code)},
                      {"t", pair.t},
                      {"distances",
                       {{"d_code", distance_json(pair.d_code)},
                        {"d_helper", distance_json(pair.d_helper)},
                        {"d_sum", distance_json(pair.d_sum)}}},
                      {"conditions", conditions_json(rep)}};
        os << "n=" << rep.n << " k=" << pair.code.k << " helper_dim=" << rep.helper_dim
           << " sum_dim=" << pair.sum_code.k << '\n'
           << "d_code=" << rep.d_code << " [" << to_string(pair.d_code.prov) << "]"
           << " d_helper=" << rep.d_helper << " [" << to_string(pair.d_helper.prov) << "]"
           << " d_sum=" << rep.d_sum << " [" << to_string(pair.d_sum.prov) << "]" << '\n'
           << "conditions: i=" << (rep.i ? "true" : "false")
           << " ii=" << (rep.ii ? "true" : "false") << " iii=" << (rep.iii ? "true" : "false")
           << " max_t=" << rep.max_t << '\n';
    } else {
        const ToricCode C = build_code(cfg.field, cfg.box);
        result = io::descriptor(C);
        os << "n=" << C.n() << " k=" << C.k;
        try {
            const Distance d = code_distance(C, cfg.budget, cfg.d_code);
            result["distance"] = distance_json(d);
            os << " d=" << d.value << " [" << to_string(d.prov) << "]";
        } catch (const DistanceUnavailable&) {
            os << " d=unavailable";
        }
        os << '\n';
    }
    if (out) io::write_text_file(*out, result.dump(2) + "\n");
    return 0;
}

int run_encode(const fs::path& code_file, const fs::path& msg_file, const fs::path& out,
               std::ostream& os) {
    const ToricCode C = io::code_from_descriptor(descriptor_part(io::load_json_file(code_file)));
    const auto msgs = io::read_word_file(msg_file, *C.field, C.G.rows());
    std::vector<std::vector<std::uint32_t>> words;
    words.reserve(msgs.size());
    for (const auto& m : msgs) words.push_back(encode(C, m).values);
    io::write_word_file(out, words);
    os << "encoded " << words.size() << " message(s) into length-" << C.n() << " codewords\n";
    return 0;
}

int run_corrupt(const fs::path& code_file, const fs::path& word_file, std::int64_t t,
                std::uint64_t seed, const fs::path& out, std::ostream& os) {
    const ToricCode C = io::code_from_descriptor(descriptor_part(io::load_json_file(code_file)));
    if (t < 0 || t > static_cast<std::int64_t>(C.n()))
        throw ConfigError("corrupt: t out of range [0, n]");
    auto words = io::read_word_file(word_file, *C.field, C.n());
    for (std::size_t i = 0; i < words.size(); ++i) {
        Rng rng(derive_seed(seed, i));
        corrupt_word(words[i], *C.field, t, rng);
    }
    io::write_word_file(out, words);
    os << "planted " << t << " error(s) per word in " << words.size() << " word(s)\n";
    return 0;
}

int run_decode(const Config& cfg, const fs::path& received_file,
               const std::optional<fs::path>& out, std::ostream& os) {
    const DecoderPair pair = pair_from_config(cfg);
    const auto words = io::read_word_file(received_file, *pair.code.field, pair.code.n());

    json outcomes = json::array();
    std::size_t failures = 0;
    for (const auto& y : words) {
        const DecodeOutcome o = decode(pair, y);
        if (!o.success()) ++failures;
        outcomes.push_back(outcome_to_json(o));
    }
    const std::string text = outcomes.dump(2) + "\n";
    if (out)
        io::write_text_file(*out, text);
    else
        os << text;
    os << "decoded " << words.size() << " word(s), " << failures << " failure(s)\n";
    return failures == 0 ? 0 : 1;
}

int run_simulate(const Config& cfg, const fs::path& out_csv,
                 const std::optional<fs::path>& received_out, bool timing, std::ostream& os) {
    const DecoderPair pair = pair_from_config(cfg);
    const Field& f = *pair.code.field;
    const std::size_t k = pair.code.G.rows();

    std::ostringstream csv;
    csv << "trial,seed,t,status,residual_weight,ms\n";
    std::vector<std::vector<std::uint32_t>> received;
    std::size_t successes = 0;

    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t tseed = derive_seed(cfg.seed, trial);
        Rng rng(tseed);

        std::vector<std::uint32_t> msg(k);
        for (auto& v : msg) v = static_cast<std::uint32_t>(rng.below(f.q()));
        std::vector<std::uint32_t> y = encode(pair.code, msg).values;
        corrupt_word(y, f, cfg.t, rng);
        if (received_out) received.push_back(y);

        const auto t0 = std::chrono::steady_clock::now();
        const DecodeOutcome o = decode(pair, y);
        const auto t1 = std::chrono::steady_clock::now();
        const long ms =
            timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;

        if (o.success()) ++successes;
        csv << trial << ',' << tseed << ',' << cfg.t << ',' << to_string(o.status) << ',';
        if (o.residual_weight) csv << *o.residual_weight;
        csv << ',' << ms << '\n';
    }

    io::write_text_file(out_csv, csv.str());
    if (received_out) io::write_word_file(*received_out, received);
    os << "trials=" << cfg.trials << " successes=" << successes;
    if (cfg.trials > 0)
        os << " success_rate=" << static_cast<double>(successes) / static_cast<double>(cfg.trials);
    os << '\n';
    return 0;
}

int run_verify(const Config& cfg, const std::optional<fs::path>& out, std::ostream& os) {
    const DecoderPair pair = pair_from_config(cfg);
    const ConditionReport rep = check_conditions(pair);

    const ToricCode dual = dual_code(pair.code);
    const bool dual_orth = matmul(pair.code.G, transpose(dual.G)).is_zero();
    const bool dual_dims = pair.code.k + dual.k == pair.code.n();

    const ToricPair tp = toric_pair(pair.code, pair.helper);
    EcpOptions eopts;
    eopts.budget = cfg.budget;
    eopts.dA = cfg.d_helper;
    eopts.dC = cfg.d_code;
    eopts.dBperp = cfg.d_sum;  // B^perp is the sum code again
    const EcpReport ecp = is_ecp(tp.A, tp.B, pair.code, cfg.t, eopts);

    os << "decoding conditions at t=" << pair.t << ": i=" << (rep.i ? "true" : "false")
       << " (helper_dim=" << rep.helper_dim << ")"
       << " ii=" << (rep.ii ? "true" : "false") << " (d_sum=" << rep.d_sum << ")"
       << " iii=" << (rep.iii ? "true" : "false") << " (d_helper=" << rep.d_helper
       << " > n-d_code=" << static_cast<std::int64_t>(rep.n) - rep.d_code << ")"
       << " max_t=" << rep.max_t << '\n';
    os << "dual code: orthogonal=" << (dual_orth ? "true" : "false")
       << " dim_sum=" << (dual_dims ? "true" : "false") << " (k=" << pair.code.k
       << ", k_dual=" << dual.k << ", n=" << pair.code.n() << ")\n";
    os << "ecp at t=" << ecp.t << ": orth=" << (ecp.orth ? "true" : "false")
       << " dim_a=" << (ecp.dim_a ? "true" : "false") << " (dim_A=" << ecp.dim_A << ")"
       << " d_b_perp=" << (ecp.d_b_perp ? "true" : "false") << " (" << ecp.dBperp.value << ")"
       << " d_a_plus_d_c=" << (ecp.d_sum_gt_n ? "true" : "false") << " (" << ecp.dA.value << "+"
       << ecp.dC.value << " > " << ecp.n << ")\n";
    os << "overall: conditions=" << (rep.all() ? "pass" : "fail")
       << " ecp=" << (ecp.all() ? "pass" : "fail") << '\n';

    if (out) {
        const json report{
            {"conditions", conditions_json(rep)},
            {"dual", {{"orthogonal", dual_orth}, {"dim_sum_matches", dual_dims}}},
            {"ecp",
             {{"t", ecp.t},
              {"orth", ecp.orth},
              {"dim_a", ecp.dim_a},
              {"dim_A", ecp.dim_A},
              {"d_b_perp", ecp.d_b_perp},
              {"d_b_perp_value", distance_json(ecp.dBperp)},
              {"d_a_plus_d_c", ecp.d_sum_gt_n},
              {"d_a", distance_json(ecp.dA)},
              {"d_c", distance_json(ecp.dC)},
              {"n", ecp.n}}}};
        io::write_text_file(*out, report.dump(2) + "\n");
    }
    return 0;
}

int main_entry(int argc, const char* const* argv) {
    CLI::App app{"toric code construction, channel simulation and kernel decoding"};
    app.require_subcommand(1);

    std::string config_path, code_path, in_path, out_path, received_path, msg_path;
    std::int64_t t_flag = -1;
    std::int64_t trials_flag = -1;
    std::int64_t seed_flag = -1;
    bool timing = false;

    auto* build = app.add_subcommand("build", "build codes and write a descriptor");
    build->add_option("--config", config_path, "experiment config JSON")->required();
    build->add_option("--out", out_path, "descriptor output path");

    auto* enc = app.add_subcommand("encode", "encode a message file");
    enc->add_option("--code", code_path, "code descriptor JSON")->required();
    enc->add_option("--in", msg_path, "message file")->required();
    enc->add_option("--out", out_path, "codeword file")->required();

    auto* cor = app.add_subcommand("corrupt", "plant errors into codewords");
    cor->add_option("--code", code_path, "code descriptor JSON")->required();
    cor->add_option("--in", in_path, "codeword file")->required();
    cor->add_option("--t", t_flag, "errors per word")->required();
    cor->add_option("--seed", seed_flag, "rng seed");
    cor->add_option("--out", out_path, "received file")->required();

    auto* dec = app.add_subcommand("decode", "decode received words");
    dec->add_option("--config", config_path, "experiment config JSON")->required();
    dec->add_option("--in", in_path, "received file")->required();
    dec->add_option("--out", out_path, "outcome JSON path");

    auto* sim = app.add_subcommand("simulate", "seeded decode trials, CSV output");
    sim->add_option("--config", config_path, "experiment config JSON")->required();
    sim->add_option("--out", out_path, "CSV output path")->required();
    sim->add_option("--received", received_path, "persist received words here");
    sim->add_option("--trials", trials_flag, "override config trial count");
    sim->add_option("--seed", seed_flag, "override config seed");
    sim->add_option("--t", t_flag, "override config t");
    sim->add_flag("--timing", timing, "record wall-clock ms per trial (breaks byte determinism)");

    auto* ver = app.add_subcommand("verify", "conditions, dual and pair report");
    ver->add_option("--config", config_path, "experiment config JSON")->required();
    ver->add_option("--t", t_flag, "override config t");
    ver->add_option("--out", out_path, "report JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    auto opt_out = [&]() -> std::optional<fs::path> {
        return out_path.empty() ? std::nullopt : std::optional<fs::path>(out_path);
    };

    try {
        if (build->parsed()) return run_build(load_config(config_path), opt_out(), std::cout);
        if (enc->parsed()) return run_encode(code_path, msg_path, out_path, std::cout);
        if (cor->parsed())
            return run_corrupt(code_path, in_path, t_flag,
                               seed_flag < 0 ? 0 : static_cast<std::uint64_t>(seed_flag), out_path,
                               std::cout);
        if (dec->parsed()) return run_decode(load_config(config_path), in_path, opt_out(), std::cout);
        if (sim->parsed()) {
            Config cfg = load_config(config_path);
            if (trials_flag >= 0) cfg.trials = static_cast<std::uint64_t>(trials_flag);
            if (seed_flag >= 0) cfg.seed = static_cast<std::uint64_t>(seed_flag);
            if (t_flag >= 0) cfg.t = t_flag;
            return run_simulate(cfg, out_path,
                                received_path.empty() ? std::nullopt
                                                      : std::optional<fs::path>(received_path),
                                timing, std::cout);
        }
        if (ver->parsed()) {
            Config cfg = load_config(config_path);
            if (t_flag >= 0) cfg.t = t_flag;
            return run_verify(cfg, opt_out(), std::cout);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace toric::cli
