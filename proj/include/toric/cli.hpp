#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "toric/decode.hpp"
#include "toric/ecp.hpp"
#include "toric/io.hpp"

namespace toric::cli {

namespace fs = std::filesystem;

/// Parsed experiment configuration; validated before any computation.
struct Config {
    FieldPtr field;
    LatticePolytope box;                   // the code polygon
    std::optional<LatticePolytope> helper; // the helper polygon
    std::int64_t t = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000;
    std::optional<std::int64_t> d_code, d_helper, d_sum;  // declared distances
};

Config parse_config(const io::json& j);
Config load_config(const fs::path& path);

/// Builds the decoder pair described by the config (helper required).
DecoderPair pair_from_config(const Config& cfg);

io::json outcome_to_json(const DecodeOutcome& out);

int run_build(const Config& cfg, const std::optional<fs::path>& out, std::ostream& os);
int run_encode(const fs::path& code_file, const fs::path& msg_file, const fs::path& out,
               std::ostream& os);
int run_corrupt(const fs::path& code_file, const fs::path& word_file, std::int64_t t,
                std::uint64_t seed, const fs::path& out, std::ostream& os);
int run_decode(const Config& cfg, const fs::path& received_file,
               const std::optional<fs::path>& out, std::ostream& os);
int run_simulate(const Config& cfg, const fs::path& out_csv,
                 const std::optional<fs::path>& received_out, bool timing, std::ostream& os);
int run_verify(const Config& cfg, const std::optional<fs::path>& out, std::ostream& os);

/// Full argv surface; returns the process exit code
/// (0 ok, 1 classified decode failure, 2 usage/config error).
int main_entry(int argc, const char* const* argv);

}  // namespace toric::cli
