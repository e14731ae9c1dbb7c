#pragma once

#include <cstdint>
#include <optional>

#include "toric/code.hpp"

namespace toric {

/// The four conditions making (A, B) a t-error-correcting pair for C, with
/// the numbers behind each verdict and the provenance of every distance.
struct EcpReport {
    std::int64_t t = 0;
    std::size_t n = 0;
    bool orth = false;        // (A * B) orthogonal to C
    bool dim_a = false;       // dim A > t
    bool d_b_perp = false;    // d(B^perp) > t
    bool d_sum_gt_n = false;  // d(A) + d(C) > n
    std::size_t dim_A = 0;
    Distance dA, dC, dBperp;

    bool all() const { return orth && dim_a && d_b_perp && d_sum_gt_n; }
};

struct EcpOptions {
    std::uint64_t budget = 10'000'000;
    std::optional<std::int64_t> dA, dC, dBperp;  // declared overrides
};

/// Evaluates the four pair conditions exactly.  Orthogonality is checked by
/// multiplying a basis of the star-product span against C's generators;
/// d(B^perp) comes from the dual toric code's exponent complement.
EcpReport is_ecp(const ToricCode& A, const ToricCode& B, const ToricCode& C, std::int64_t t,
                 const EcpOptions& opts = {});

struct ToricPair {
    ToricCode A;         // the helper code
    ToricCode B;         // dual of the sum code
    ToricCode sum_code;  // code on the Minkowski sum, B = sum_code^perp
};

/// The pair A = helper, B = (C * A)^perp realized through the exponent
/// complement of the Minkowski-sum code.
ToricPair toric_pair(const ToricCode& C_box, const ToricCode& C_helper);

/// <pi(X^u), pi(X^v)> over the full torus by direct summation; zero exactly
/// when u + v is not componentwise divisible by q-1.
Fe inner_product_check(const FieldPtr& field, const Exponent& u, const Exponent& v);

}  // namespace toric
