#include "toric/decode.hpp"

#include <algorithm>

namespace toric {

namespace {

void validate_pair(const DecoderPair& p) {
    if (p.code.field.get() != p.helper.field.get() ||
        p.code.field.get() != p.sum_code.field.get())
        throw MismatchedCodes("pair codes built on different field specs");
    if (p.code.n() != p.helper.n() || p.code.n() != p.sum_code.n())
        throw MismatchedCodes("pair codes have different lengths");
    if (!p.code.full_torus || !p.helper.full_torus || !p.sum_code.full_torus)
        throw NotFullTorus("decoder requires full-torus codes");
    if (p.t < 0) throw OutOfRange("negative error target");

    // h = g*f lives on the sumset of the two exponent sets; the sum code
    // must span it or the kernel argument breaks down.
    const ExponentSet prod =
        reduce_into_H(sumset(p.code.exponents, p.helper.exponents), p.code.field->q());
    for (const auto& e : prod.points())
        if (!p.sum_code.exponents.contains(e))
            throw MismatchedCodes("sum code does not contain the product exponent set");
}

}  // namespace

DecoderPair make_decoder_pair(FieldPtr field, const LatticePolytope& box,
                              const LatticePolytope& helper_box, std::int64_t t,
                              const DistanceOptions& opts) {
    ToricCode code = build_code(field, box);
    ToricCode helper = build_code(field, helper_box);
    ToricCode sum_code = build_code(field, minkowski_sum(box, helper_box));
    return make_decoder_pair(std::move(code), std::move(helper), std::move(sum_code), t, opts);
}

DecoderPair make_decoder_pair(ToricCode code, ToricCode helper, ToricCode sum_code,
                              std::int64_t t, const DistanceOptions& opts) {
    DecoderPair pair{std::move(code), std::move(helper), std::move(sum_code), t,
                     Distance{}, Distance{}, Distance{}};
    validate_pair(pair);
    pair.d_code = code_distance(pair.code, opts.budget, opts.d_code);
    pair.d_helper = code_distance(pair.helper, opts.budget, opts.d_helper);
    pair.d_sum = code_distance(pair.sum_code, opts.budget, opts.d_sum);
    return pair;
}

ConditionReport check_conditions(const DecoderPair& pair) {
    ConditionReport rep;
    rep.n = pair.code.n();
    rep.helper_dim = pair.helper.exponents.size();
    rep.d_code = pair.d_code.value;
    rep.d_helper = pair.d_helper.value;
    rep.d_sum = pair.d_sum.value;
    rep.i = static_cast<std::int64_t>(rep.helper_dim) > pair.t;
    rep.ii = rep.d_sum > pair.t;
    rep.iii = rep.d_helper > static_cast<std::int64_t>(rep.n) - rep.d_code;
    rep.max_t = std::min<std::int64_t>(static_cast<std::int64_t>(rep.helper_dim), rep.d_sum) - 1;
    return rep;
}

FqMatrix build_kernel_matrix(const DecoderPair& pair, std::span<const std::uint32_t> y) {
    const std::size_t n = pair.code.n();
    if (y.size() != n) throw LengthMismatch("received word length differs from n");
    const Field& f = *pair.code.field;
    const FqMatrix& Gh = pair.helper.G;
    const FqMatrix& Gs = pair.sum_code.G;
    const std::size_t kt = Gh.rows();
    const std::size_t ks = Gs.rows();

    FqMatrix M(pair.code.field, n, kt + ks);
    for (std::size_t P = 0; P < n; ++P) {
        for (std::size_t j = 0; j < kt; ++j) M(P, j) = f.mul(Gh(j, P), y[P]);
        for (std::size_t j = 0; j < ks; ++j) M(P, kt + j) = f.neg(Gs(j, P));
    }
    return M;
}

KernelElement find_locator(const DecoderPair& pair, std::span<const std::uint32_t> y) {
    const FqMatrix M = build_kernel_matrix(pair, y);
    const std::size_t kt = pair.helper.G.rows();
    const auto basis = kernel_basis(M);
    for (const auto& v : basis) {
        const bool g_nonzero =
            std::any_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(kt),
                        [](std::uint32_t x) { return x != 0; });
        if (g_nonzero)
            return KernelElement{{v.begin(), v.begin() + static_cast<std::ptrdiff_t>(kt)},
                                 {v.begin() + static_cast<std::ptrdiff_t>(kt), v.end()}};
    }
    throw NoNonzeroLocator("kernel has no element with nonzero locator block");
}

std::vector<std::size_t> zero_set(const DecoderPair& pair, std::span<const std::uint32_t> g) {
    const std::vector<std::uint32_t> values = vec_mat(g, pair.helper.G);
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == 0) zeros.push_back(i);
    return zeros;
}

std::vector<std::uint32_t> recover_message(const DecoderPair& pair,
                                           std::span<const std::uint32_t> y,
                                           const std::vector<std::size_t>& Z) {
    const std::size_t n = pair.code.n();
    if (y.size() != n) throw LengthMismatch("received word length differs from n");
    const std::size_t k = pair.code.G.rows();

    std::vector<bool> excluded(n, false);
    for (auto z : Z) {
        if (z >= n) throw OutOfRange("zero-set position out of range");
        excluded[z] = true;
    }

    std::size_t kept = 0;
    for (std::size_t P = 0; P < n; ++P)
        if (!excluded[P]) ++kept;

    // (G restricted to kept columns)^T  f = y restricted
    FqMatrix A(pair.code.field, kept, k);
    std::vector<std::uint32_t> b(kept);
    std::size_t row = 0;
    for (std::size_t P = 0; P < n; ++P) {
        if (excluded[P]) continue;
        for (std::size_t i = 0; i < k; ++i) A(row, i) = pair.code.G(i, P);
        b[row] = y[P];
        ++row;
    }

    const auto sol = solve(A, b);
    if (!sol) throw RecoveryInconsistent("no message matches the received word off the zero set");
    if (sol->nullity > 0)
        throw RecoveryAmbiguous("message underdetermined off the zero set (nullity " +
                                std::to_string(sol->nullity) + ")");
    return sol->x;
}

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Success: return "success";
        case DecodeStatus::ConditionsViolated: return "conditions_violated";
        case DecodeStatus::NoNonzeroLocator: return "no_nonzero_locator";
        case DecodeStatus::RecoveryInconsistent: return "recovery_inconsistent";
        case DecodeStatus::RecoveryAmbiguous: return "recovery_ambiguous";
        case DecodeStatus::ResidualTooHeavy: return "residual_too_heavy";
    }
    return "?";
}

DecodeOutcome decode(const DecoderPair& pair, std::span<const std::uint32_t> y) {
    const std::size_t n = pair.code.n();
    if (y.size() != n) throw LengthMismatch("received word length differs from n");

    DecodeOutcome out;
    if (!check_conditions(pair).all()) {
        out.status = DecodeStatus::ConditionsViolated;
        return out;
    }

    KernelElement ker{{}, {}};
    try {
        ker = find_locator(pair, y);
    } catch (const NoNonzeroLocator&) {
        out.status = DecodeStatus::NoNonzeroLocator;
        return out;
    }

    const std::vector<std::size_t> Z = zero_set(pair, ker.g);

    std::vector<std::uint32_t> msg;
    try {
        msg = recover_message(pair, y, Z);
    } catch (const RecoveryInconsistent&) {
        out.status = DecodeStatus::RecoveryInconsistent;
        return out;
    } catch (const RecoveryAmbiguous&) {
        out.status = DecodeStatus::RecoveryAmbiguous;
        return out;
    }

    const Codeword cw = encode(pair.code, msg);
    const Field& f = *pair.code.field;
    std::vector<std::uint32_t> err(n);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
        err[i] = f.sub(y[i], cw.values[i]);
        if (err[i] != 0) support.push_back(i);
    }
    out.residual_weight = support.size();

    if (static_cast<std::int64_t>(support.size()) > pair.t) {
        out.status = DecodeStatus::ResidualTooHeavy;
        return out;
    }

    out.status = DecodeStatus::Success;
    out.message = std::move(msg);
    out.codeword = cw.values;
    out.error_vector = std::move(err);
    out.error_support = std::move(support);
    return out;
}

}  // namespace toric
