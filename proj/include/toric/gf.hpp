#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m) via exponential/logarithm tables.
///
/// Elements are canonical integers in [0, q): the value encodes the
/// polynomial representation in base p (value = sum c_i * p^i for the
/// residue sum c_i * X^i mod prim_poly).  The exp table lists the powers
/// of the fixed generator (the residue of X), so exp_table[i] runs through
/// all q-1 nonzero elements exactly once.
class Field {
  public:
    /// prim_poly holds coefficients c0..cm, monic of degree m over GF(p).
    /// Throws NotPrime / DegreeMismatch / NotPrimitive.
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> prim_poly);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& prim_poly() const { return poly_; }

    /// Residue of X: the fixed generator of the multiplicative group.
    std::uint32_t generator() const { return exp_[1 % (q_ - 1)]; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;    // throws DivisionByZero on 0
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;

    /// a^e with negative exponents routed through the inverse.
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

    std::uint32_t exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
    std::uint32_t log(std::uint32_t a) const;    // throws DivisionByZero on 0

  private:
    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> poly_;
    std::vector<std::uint32_t> exp_;  // length q-1
    std::vector<std::uint32_t> log_;  // length q; log_[0] unused
};

/// Builds GF(p^m).  Without prim_poly the default is the first primitive
/// monic polynomial in the deterministic low-coefficient order (GF(16)
/// resolves to x^4 + x + 1, GF(5) to x + 2).
FieldPtr build_field(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> prim_poly = std::nullopt);

/// A field element bound to its FieldSpec; mixing fields throws FieldMismatch.
class Fe {
  public:
    Fe(FieldPtr field, std::uint32_t value);

    std::uint32_t value() const { return v_; }
    const FieldPtr& field() const { return f_; }

    Fe inv() const { return Fe(f_, f_->inv(v_)); }
    Fe pow(std::int64_t e) const { return Fe(f_, f_->pow(v_, e)); }
    bool is_zero() const { return v_ == 0; }

    friend Fe operator+(const Fe& a, const Fe& b);
    friend Fe operator-(const Fe& a, const Fe& b);
    friend Fe operator*(const Fe& a, const Fe& b);
    friend Fe operator/(const Fe& a, const Fe& b);
    Fe operator-() const { return Fe(f_, f_->neg(v_)); }
    friend bool operator==(const Fe& a, const Fe& b);
    friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  private:
    FieldPtr f_;
    std::uint32_t v_;
};

using TorusPoint = std::vector<std::uint32_t>;

/// All (q-1)^r points of the torus (F_q*)^r in lexicographic order by
/// canonical element value, first coordinate most significant.  This order
/// is frozen: it defines codeword coordinate order.
std::vector<TorusPoint> torus_points(const FieldPtr& field, std::size_t r);

}  // namespace toric
