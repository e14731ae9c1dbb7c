#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Vertex = std::array<std::int64_t, 2>;
using Exponent = std::vector<std::int64_t>;

/// Integral convex polygon in Z^2.  Construction takes any point list and
/// normalizes to counterclockwise hull vertices with no three consecutive
/// collinear points; a single point and a segment are valid degenerate cases.
class LatticePolytope {
  public:
    explicit LatticePolytope(std::vector<Vertex> points);

    /// Right triangle with legs a on the axes: (0,0), (a,0), (0,a).
    static LatticePolytope simplex(std::int64_t a);

    const std::vector<Vertex>& vertices() const { return v_; }
    bool contains(const Vertex& pt) const;

    /// xmin, ymin, xmax, ymax
    std::array<std::int64_t, 4> bounding_box() const;

    bool operator==(const LatticePolytope& o) const { return v_ == o.v_; }

  private:
    std::vector<Vertex> v_;
};

/// Sorted duplicate-free set of integer exponent r-tuples.
class ExponentSet {
  public:
    ExponentSet(std::size_t r, std::vector<Exponent> points);

    std::size_t r() const { return r_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<Exponent>& points() const { return pts_; }
    const Exponent& operator[](std::size_t i) const { return pts_[i]; }
    bool contains(const Exponent& e) const;

    bool operator==(const ExponentSet& o) const { return r_ == o.r_ && pts_ == o.pts_; }

  private:
    std::size_t r_;
    std::vector<Exponent> pts_;  // lexicographically sorted, unique
};

/// All integer points in the closed polygon, by bounding-box scan and exact
/// integer half-plane tests.
ExponentSet lattice_points(const LatticePolytope& P);

/// Convex hull of pairwise vertex sums; equals the Minkowski sum for convex inputs.
LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

/// Pointwise negation, re-sorted.
ExponentSet opposite(const ExponentSet& U);

/// Reduces every coordinate mod q-1 into {0,..,q-2}.  Two distinct points
/// colliding after reduction denote the same function on the torus; that
/// would silently drop code dimension, so it is a hard ExponentCollision.
ExponentSet reduce_into_H(const ExponentSet& U, std::uint32_t q);

/// The exponent set H = {0,..,q-2}^r.
ExponentSet box_h(std::uint32_t q, std::size_t r);

/// H minus the reduction of -U: the exponent set of the dual code.
ExponentSet complement_in_H(const ExponentSet& U, std::uint32_t q);

/// {u + v : u in U, v in V}, deduplicated.
ExponentSet sumset(const ExponentSet& U, const ExponentSet& V);

/// Minimum distance (q-1)(q-1-a) of the full-torus code on the axis simplex
/// with leg a.  Requires 0 <= a <= q-2.
std::int64_t simplex_distance(std::uint32_t q, std::int64_t a);

/// If U is exactly the lattice-point set of simplex(a), returns a.
std::optional<std::int64_t> detect_axis_simplex(const ExponentSet& U);

}  // namespace toric
