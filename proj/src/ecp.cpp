#include "toric/ecp.hpp"

namespace toric {

EcpReport is_ecp(const ToricCode& A, const ToricCode& B, const ToricCode& C, std::int64_t t,
                 const EcpOptions& opts) {
    if (A.field.get() != B.field.get() || A.field.get() != C.field.get())
        throw MismatchedCodes("pair codes built on different field specs");
    if (A.n() != B.n() || A.n() != C.n()) throw LengthMismatch("pair codes have different lengths");

    EcpReport rep;
    rep.t = t;
    rep.n = A.n();
    rep.dim_A = A.k;

    const FqMatrix star = star_product_code(A, B);
    rep.orth = matmul(star, transpose(C.G)).is_zero();

    rep.dim_a = static_cast<std::int64_t>(rep.dim_A) > t;

    rep.dBperp = code_distance(dual_code(B), opts.budget, opts.dBperp);
    rep.d_b_perp = rep.dBperp.value > t;

    rep.dA = code_distance(A, opts.budget, opts.dA);
    rep.dC = code_distance(C, opts.budget, opts.dC);
    rep.d_sum_gt_n = rep.dA.value + rep.dC.value > static_cast<std::int64_t>(rep.n);
    return rep;
}

ToricPair toric_pair(const ToricCode& C_box, const ToricCode& C_helper) {
    if (C_box.field.get() != C_helper.field.get())
        throw MismatchedCodes("pair codes built on different field specs");
    if (!C_box.full_torus || !C_helper.full_torus)
        throw NotFullTorus("toric pair requires full-torus codes");

    ToricCode sum_code = [&] {
        if (C_box.polytope && C_helper.polytope)
            return build_code(C_box.field, minkowski_sum(*C_box.polytope, *C_helper.polytope));
        // no polygons recorded: span the reduced product exponents directly
        return build_code(C_box.field,
                          reduce_into_H(sumset(C_box.exponents, C_helper.exponents),
                                        C_box.field->q()));
    }();

    ToricCode B = dual_code(sum_code);
    return ToricPair{C_helper, std::move(B), std::move(sum_code)};
}

Fe inner_product_check(const FieldPtr& field, const Exponent& u, const Exponent& v) {
    if (u.size() != v.size()) throw LengthMismatch("exponent arities differ");
    const Field& f = *field;
    std::uint32_t acc = 0;
    for (const auto& P : torus_points(field, u.size())) {
        const std::uint32_t a = evaluate_monomial(f, u, P);
        const std::uint32_t b = evaluate_monomial(f, v, P);
        acc = f.add(acc, f.mul(a, b));
    }
    return Fe(field, acc);
}

}  // namespace toric
