#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/code.hpp"

namespace toric {

/// The code being decoded, the helper code, and the code on the Minkowski
/// sum, with the distances needed by the decoding conditions.
struct DecoderPair {
    ToricCode code;      // C on the polygon being decoded
    ToricCode helper;    // C~ on the helper polygon
    ToricCode sum_code;  // code on the Minkowski sum polygon
    std::int64_t t = 0;  // target error count
    Distance d_code, d_helper, d_sum;
};

struct DistanceOptions {
    std::uint64_t budget = 10'000'000;
    std::optional<std::int64_t> d_code, d_helper, d_sum;  // declared overrides
};

/// Builds the three full-torus codes for a polygon pair and resolves their
/// distances (formula for axis simplices, brute force within budget,
/// declared values as a last resort).
DecoderPair make_decoder_pair(FieldPtr field, const LatticePolytope& box,
                              const LatticePolytope& helper_box, std::int64_t t,
                              const DistanceOptions& opts = {});

/// Assembles a pair from prebuilt codes.  Validates shared field and length,
/// full torus, and that the sum code's exponents contain the reduced sumset
/// of the other two (the locator identity needs it).
DecoderPair make_decoder_pair(ToricCode code, ToricCode helper, ToricCode sum_code,
                              std::int64_t t, const DistanceOptions& opts = {});

struct ConditionReport {
    bool i = false;    // |U~| > t
    bool ii = false;   // d(sum code) > t
    bool iii = false;  // d(helper) > n - d(code)
    std::int64_t max_t = 0;  // min(|U~|, d_sum) - 1
    std::size_t n = 0;
    std::size_t helper_dim = 0;
    std::int64_t d_code = 0, d_helper = 0, d_sum = 0;

    bool all() const { return i && ii && iii; }
};

ConditionReport check_conditions(const DecoderPair& pair);

/// A kernel element: locator coefficients g over the helper exponents and
/// h over the sum-code exponents.
struct KernelElement {
    std::vector<std::uint32_t> g, h;
};

/// The n x (|U~| + |U+U~|) matrix of the map (g, h) -> (g(P) y(P) - h(P))_P.
/// Row per torus point in frozen order; first column block carries the helper
/// monomials scaled by y, second block the negated sum-code monomials.
FqMatrix build_kernel_matrix(const DecoderPair& pair, std::span<const std::uint32_t> y);

/// First kernel basis element with nonzero g-block under the deterministic
/// rref ordering.  Throws NoNonzeroLocator when none exists.
KernelElement find_locator(const DecoderPair& pair, std::span<const std::uint32_t> y);

/// Positions where the locator vanishes.
std::vector<std::size_t> zero_set(const DecoderPair& pair, std::span<const std::uint32_t> g);

/// Solves for the message on the positions outside Z; the solution must be
/// unique.  Throws RecoveryInconsistent / RecoveryAmbiguous.
std::vector<std::uint32_t> recover_message(const DecoderPair& pair,
                                           std::span<const std::uint32_t> y,
                                           const std::vector<std::size_t>& Z);

enum class DecodeStatus {
    Success,
    ConditionsViolated,
    NoNonzeroLocator,
    RecoveryInconsistent,
    RecoveryAmbiguous,
    ResidualTooHeavy,
};

const char* to_string(DecodeStatus s);

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::ConditionsViolated;
    std::vector<std::uint32_t> message;        // on success
    std::vector<std::uint32_t> codeword;       // on success
    std::vector<std::uint32_t> error_vector;   // on success
    std::vector<std::size_t> error_support;    // on success
    std::optional<std::size_t> residual_weight;

    bool success() const { return status == DecodeStatus::Success; }
};

/// Full pipeline: kernel, locator, zero set, recovery, re-encode, residual
/// check.  Never reports Success with residual weight above pair.t.
DecodeOutcome decode(const DecoderPair& pair, std::span<const std::uint32_t> y);

}  // namespace toric
