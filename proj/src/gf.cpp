#include "toric/gf.hpp"

#include <string>

namespace toric {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Multiplies an element (canonical value) by X modulo a monic prim_poly,
// working digitwise in base p so no borrows leak between coefficients.
std::uint32_t mul_by_x(std::uint32_t a, std::uint32_t p, std::uint32_t m,
                       const std::vector<std::uint32_t>& poly) {
    std::uint32_t digits[18] = {0};
    for (std::uint32_t i = 0; i < m; ++i) {
        digits[i + 1] = a % p;
        a /= p;
    }
    const std::uint32_t carry = digits[m];
    std::uint32_t out = 0;
    std::uint32_t shift = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t d = (digits[i] + (p - carry * poly[i] % p)) % p;
        out += d * shift;
        shift *= p;
    }
    return out;
}

// Walks the powers of X mod poly.  Returns false unless X has multiplicative
// order exactly q-1 (which also certifies the quotient is a field).
bool walk_exp_table(std::uint32_t p, std::uint32_t m, std::uint32_t q,
                    const std::vector<std::uint32_t>& poly, std::vector<std::uint32_t>& exp) {
    exp.assign(q - 1, 0);
    std::uint32_t b = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        if (b == 0) return false;
        if (b == 1 && i > 0) return false;  // order divides i < q-1
        exp[i] = b;
        b = mul_by_x(b, p, m, poly);
    }
    return b == 1;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> prim_poly)
    : p_(p), m_(m), poly_(std::move(prim_poly)) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw OutOfRange("extension degree m must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw OutOfRange("field size p^m exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (poly_.size() != m + 1)
        throw DegreeMismatch("prim_poly must have m+1 coefficients c0..cm");
    if (poly_[m] != 1) throw DegreeMismatch("prim_poly must be monic");
    for (auto c : poly_)
        if (c >= p) throw OutOfRange("prim_poly coefficient not reduced mod p");

    if (!walk_exp_table(p_, m_, q_, poly_, exp_))
        throw NotPrimitive("prim_poly is not primitive: X does not generate F_q*");

    log_.assign(q_, 0);
    for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t out = 0, shift = 1;
    while (a != 0 || b != 0) {
        std::uint32_t d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        out += d * shift;
        shift *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t out = 0, shift = 1;
    while (a != 0) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * shift;
        shift *= p_;
        a /= p_;
    }
    return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw DivisionByZero("negative power of zero");
    }
    const std::int64_t order = q_ - 1;
    std::int64_t er = e % order;
    if (er < 0) er += order;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(er)) % (q_ - 1)];
}

std::uint32_t Field::log(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("log of zero");
    return log_[a];
}

FieldPtr build_field(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> prim_poly) {
    if (prim_poly) return std::make_shared<const Field>(p, m, std::move(*prim_poly));

    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw OutOfRange("extension degree m must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw OutOfRange("field size p^m exceeds 2^16");
    }

    // Deterministic default: scan monic candidates by ascending low-part
    // value and take the first primitive one.
    std::vector<std::uint32_t> exp;
    for (std::uint64_t low = 0; low < q; ++low) {
        std::vector<std::uint32_t> poly(m + 1, 0);
        std::uint64_t v = low;
        for (std::uint32_t i = 0; i < m; ++i) {
            poly[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        poly[m] = 1;
        if (walk_exp_table(p, m, static_cast<std::uint32_t>(q), poly, exp))
            return std::make_shared<const Field>(p, m, std::move(poly));
    }
    throw NotPrimitive("no primitive polynomial found");  // unreachable for prime p
}

Fe::Fe(FieldPtr field, std::uint32_t value) : f_(std::move(field)), v_(value) {
    if (!f_) throw FieldMismatch("element without a field");
    if (v_ >= f_->q()) throw OutOfRange("element value out of range");
}

namespace {
const Field& same_field(const Fe& a, const Fe& b) {
    if (a.field().get() != b.field().get())
        throw FieldMismatch("operands belong to different field specs");
    return *a.field();
}
}  // namespace

Fe operator+(const Fe& a, const Fe& b) {
    const Field& f = same_field(a, b);
    return Fe(a.field(), f.add(a.value(), b.value()));
}
Fe operator-(const Fe& a, const Fe& b) {
    const Field& f = same_field(a, b);
    return Fe(a.field(), f.sub(a.value(), b.value()));
}
Fe operator*(const Fe& a, const Fe& b) {
    const Field& f = same_field(a, b);
    return Fe(a.field(), f.mul(a.value(), b.value()));
}
Fe operator/(const Fe& a, const Fe& b) {
    const Field& f = same_field(a, b);
    return Fe(a.field(), f.div(a.value(), b.value()));
}
bool operator==(const Fe& a, const Fe& b) {
    same_field(a, b);
    return a.value() == b.value();
}

std::vector<TorusPoint> torus_points(const FieldPtr& field, std::size_t r) {
    if (r < 1) throw OutOfRange("torus dimension r must be >= 1");
    const std::uint64_t side = field->q() - 1;
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < r; ++i) {
        n *= side;
        if (n > 100'000'000ull) throw OutOfRange("torus too large to materialize");
    }

    std::vector<TorusPoint> pts;
    pts.reserve(n);
    TorusPoint cur(r, 1);
    for (std::uint64_t c = 0; c < n; ++c) {
        pts.push_back(cur);
        // odometer over nonzero values 1..q-1, last coordinate fastest
        for (std::size_t i = r; i-- > 0;) {
            if (cur[i] < field->q() - 1) {
                ++cur[i];
                break;
            }
            cur[i] = 1;
        }
    }
    return pts;
}

}  // namespace toric
