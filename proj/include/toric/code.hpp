#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toric/ffla.hpp"
#include "toric/gf.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// A codeword in coordinate order matching the owning code's point order.
struct Codeword {
    FieldPtr field;
    std::vector<std::uint32_t> values;
};

/// Evaluation code of the monomials X^u, u in U, at a set of torus points.
///
/// Exponents are stored reduced into H = {0,..,q-2}^r (they act on the torus
/// through X^{q-1} = 1); the generator matrix has one row per exponent in
/// sorted order and one column per point in the frozen torus order.
struct ToricCode {
    FieldPtr field;
    std::size_t r = 0;
    ExponentSet exponents;               // reduced into H
    std::vector<TorusPoint> points;
    bool full_torus = false;
    FqMatrix G;                          // |exponents| x |points|
    std::size_t k = 0;                   // rank(G); equals |U| on the full torus
    std::optional<LatticePolytope> polytope;  // set when built from a polytope

    std::size_t n() const { return points.size(); }
};

/// X^u(P) with negative exponents through inverses; P must avoid zero coordinates.
std::uint32_t evaluate_monomial(const Field& f, const Exponent& u, const TorusPoint& P);

/// Code on an explicit exponent set; S defaults to the full torus.
ToricCode build_code(FieldPtr field, const ExponentSet& U,
                     std::optional<std::vector<TorusPoint>> S = std::nullopt);

/// Code on the lattice points of a polygon.
ToricCode build_code(FieldPtr field, const LatticePolytope& P,
                     std::optional<std::vector<TorusPoint>> S = std::nullopt);

/// msg * G; msg has one coefficient per exponent.
Codeword encode(const ToricCode& C, std::span<const std::uint32_t> msg);

/// Coordinatewise (Schur) product.
Codeword schur(const Codeword& c, const Codeword& d);

/// Basis (rref rows) of the span of all pairwise Schur products of generator
/// rows of A and B.
FqMatrix star_product_code(const ToricCode& A, const ToricCode& B);

/// Dual code via the exponent complement -H \ -U; full-torus codes only.
ToricCode dual_code(const ToricCode& C);

/// Minimum Hamming weight over all nonzero codewords, by exhaustive message
/// enumeration.  Throws BudgetExceeded when q^k exceeds the budget.
std::int64_t min_distance_bruteforce(const ToricCode& C, std::uint64_t budget = 10'000'000);

std::size_t hamming_weight(const Codeword& c);
std::size_t hamming_weight(std::span<const std::uint32_t> values);

Fe inner_product(const Codeword& c, const Codeword& d);

enum class DistProv { Formula, BruteForce, Declared };

struct Distance {
    std::int64_t value = 0;
    DistProv prov = DistProv::Formula;
};

const char* to_string(DistProv p);

/// Resolves a code's minimum distance: declared value if given, the axis
/// simplex formula when it applies, otherwise brute force within budget.
/// A zero code reports n+1, which acts as +infinity in strict comparisons.
Distance code_distance(const ToricCode& C, std::uint64_t budget = 10'000'000,
                       std::optional<std::int64_t> declared = std::nullopt);

}  // namespace toric
