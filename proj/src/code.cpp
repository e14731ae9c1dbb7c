#include "toric/code.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace toric {

std::uint32_t evaluate_monomial(const Field& f, const Exponent& u, const TorusPoint& P) {
    if (u.size() != P.size()) throw LengthMismatch("exponent arity differs from point arity");
    std::uint32_t acc = 1;
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.mul(acc, f.pow(P[i], u[i]));
    return acc;
}

ToricCode build_code(FieldPtr field, const ExponentSet& U, std::optional<std::vector<TorusPoint>> S) {
    const std::size_t r = U.r();
    const bool full = !S.has_value();
    std::vector<TorusPoint> pts = full ? torus_points(field, r) : std::move(*S);
    for (const auto& P : pts) {
        if (P.size() != r) throw LengthMismatch("point arity differs from r");
        for (auto c : P)
            if (c == 0 || c >= field->q()) throw OutOfRange("torus point with coordinate outside F_q*");
    }

    ExponentSet reduced = reduce_into_H(U, field->q());
    FqMatrix G(field, reduced.size(), pts.size());
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            G(i, j) = evaluate_monomial(*field, reduced[i], pts[j]);

    ToricCode C{field, r, std::move(reduced), std::move(pts), full, std::move(G), 0, std::nullopt};
    C.k = rank(C.G);
    return C;
}

ToricCode build_code(FieldPtr field, const LatticePolytope& P, std::optional<std::vector<TorusPoint>> S) {
    ToricCode C = build_code(std::move(field), lattice_points(P), std::move(S));
    C.polytope = P;
    return C;
}

Codeword encode(const ToricCode& C, std::span<const std::uint32_t> msg) {
    if (msg.size() != C.G.rows()) throw LengthMismatch("message length differs from exponent count");
    return Codeword{C.field, vec_mat(msg, C.G)};
}

Codeword schur(const Codeword& c, const Codeword& d) {
    if (c.field.get() != d.field.get()) throw FieldMismatch("schur product across fields");
    if (c.values.size() != d.values.size()) throw LengthMismatch("schur product length mismatch");
    const Field& f = *c.field;
    Codeword out{c.field, std::vector<std::uint32_t>(c.values.size())};
    for (std::size_t i = 0; i < c.values.size(); ++i) out.values[i] = f.mul(c.values[i], d.values[i]);
    return out;
}

FqMatrix star_product_code(const ToricCode& A, const ToricCode& B) {
    if (A.field.get() != B.field.get()) throw FieldMismatch("star product across fields");
    if (A.n() != B.n()) throw LengthMismatch("star product length mismatch");
    const Field& f = *A.field;

    FqMatrix prods(A.field, A.G.rows() * B.G.rows(), A.n());
    std::size_t out = 0;
    for (std::size_t i = 0; i < A.G.rows(); ++i)
        for (std::size_t j = 0; j < B.G.rows(); ++j, ++out)
            for (std::size_t col = 0; col < A.n(); ++col)
                prods(out, col) = f.mul(A.G(i, col), B.G(j, col));

    auto [R, pivots] = rref(prods);
    FqMatrix basis(A.field, pivots.size(), A.n());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        std::copy(R.row(i).begin(), R.row(i).end(), basis.row(i).begin());
    return basis;
}

ToricCode dual_code(const ToricCode& C) {
    if (!C.full_torus) throw NotFullTorus("dual code is defined on the full torus only");
    return build_code(C.field, complement_in_H(C.exponents, C.field->q()));
}

std::size_t hamming_weight(std::span<const std::uint32_t> values) {
    std::size_t w = 0;
    for (auto v : values)
        if (v != 0) ++w;
    return w;
}

std::size_t hamming_weight(const Codeword& c) { return hamming_weight(c.values); }

Fe inner_product(const Codeword& c, const Codeword& d) {
    if (c.field.get() != d.field.get()) throw FieldMismatch("inner product across fields");
    if (c.values.size() != d.values.size()) throw LengthMismatch("inner product length mismatch");
    const Field& f = *c.field;
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        acc = f.add(acc, f.mul(c.values[i], d.values[i]));
    return Fe(c.field, acc);
}

std::int64_t min_distance_bruteforce(const ToricCode& C, std::uint64_t budget) {
    const std::size_t k = C.G.rows();
    const std::size_t n = C.n();
    if (k == 0) throw OutOfRange("zero code has no nonzero codewords");

    const std::uint64_t q = C.field->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / q + 1) throw BudgetExceeded("q^k exceeds brute-force budget");
        total *= q;
        if (total > budget)
            throw BudgetExceeded("q^k = " + std::to_string(total) + " exceeds budget " +
                                 std::to_string(budget));
    }

    const Field& f = *C.field;
    // scaled[i][v] = v * (row i), so the enumeration only ever adds rows
    std::vector<std::vector<std::uint32_t>> scaled(k * q);
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint32_t v = 0; v < q; ++v) {
            auto& dst = scaled[i * q + v];
            dst.resize(n);
            for (std::size_t j = 0; j < n; ++j) dst[j] = f.mul(v, C.G(i, j));
        }

    std::int64_t best = -1;
    std::vector<std::vector<std::uint32_t>> acc(k + 1, std::vector<std::uint32_t>(n, 0));

    // depth-first odometer over message digits
    std::vector<std::uint32_t> digit(k, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == k) {
            const std::size_t w = hamming_weight(acc[k]);
            if (w > 0 && (best < 0 || static_cast<std::int64_t>(w) < best))
                best = static_cast<std::int64_t>(w);
            while (depth > 0 && digit[depth - 1] == q - 1) {
                digit[depth - 1] = 0;
                --depth;
            }
            if (depth == 0) break;
            ++digit[depth - 1];
            --depth;
            continue;
        }
        const auto& add_row = scaled[depth * q + digit[depth]];
        auto& dst = acc[depth + 1];
        const auto& src = acc[depth];
        for (std::size_t j = 0; j < n; ++j) dst[j] = f.add(src[j], add_row[j]);
        ++depth;
    }

    if (best < 0) throw OutOfRange("code has no nonzero codeword");
    return best;
}

const char* to_string(DistProv p) {
    switch (p) {
        case DistProv::Formula: return "formula";
        case DistProv::BruteForce: return "brute_force";
        case DistProv::Declared: return "declared";
    }
    return "?";
}

Distance code_distance(const ToricCode& C, std::uint64_t budget, std::optional<std::int64_t> declared) {
    if (declared) return {*declared, DistProv::Declared};

    const std::int64_t n = static_cast<std::int64_t>(C.n());
    if (C.k == 0) return {n + 1, DistProv::Formula};  // no nonzero words
    if (C.k == C.n()) return {1, DistProv::Formula};  // full space

    if (C.full_torus) {
        if (auto a = detect_axis_simplex(C.exponents);
            a && *a <= static_cast<std::int64_t>(C.field->q()) - 2)
            return {simplex_distance(C.field->q(), *a), DistProv::Formula};
    }

    try {
        return {min_distance_bruteforce(C, budget), DistProv::BruteForce};
    } catch (const BudgetExceeded&) {
        throw DistanceUnavailable("no distance formula applies and q^k exceeds the brute-force budget");
    }
}

}  // namespace toric
