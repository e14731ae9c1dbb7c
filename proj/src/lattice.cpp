#include "toric/lattice.hpp"

#include <algorithm>
#include <string>

namespace toric {

namespace {

std::int64_t cross(const Vertex& o, const Vertex& a, const Vertex& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; strict turns only, so collinear interior points
// drop out and degenerate inputs collapse to 1 or 2 vertices.
std::vector<Vertex> convex_hull(std::vector<Vertex> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<Vertex> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper
        while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
    return hull;
}

bool on_segment(const Vertex& a, const Vertex& b, const Vertex& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<Vertex> points) {
    if (points.empty()) throw OutOfRange("polytope needs at least one vertex");
    v_ = convex_hull(std::move(points));
}

LatticePolytope LatticePolytope::simplex(std::int64_t a) {
    if (a < 0) throw OutOfRange("simplex leg must be nonnegative");
    if (a == 0) return LatticePolytope({{0, 0}});
    return LatticePolytope({{0, 0}, {a, 0}, {0, a}});
}

bool LatticePolytope::contains(const Vertex& pt) const {
    if (v_.size() == 1) return v_[0] == pt;
    if (v_.size() == 2) return on_segment(v_[0], v_[1], pt);
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Vertex& a = v_[i];
        const Vertex& b = v_[(i + 1) % v_.size()];
        if (cross(a, b, pt) < 0) return false;  // CCW hull: inside is left of every edge
    }
    return true;
}

std::array<std::int64_t, 4> LatticePolytope::bounding_box() const {
    std::array<std::int64_t, 4> bb = {v_[0][0], v_[0][1], v_[0][0], v_[0][1]};
    for (const auto& v : v_) {
        bb[0] = std::min(bb[0], v[0]);
        bb[1] = std::min(bb[1], v[1]);
        bb[2] = std::max(bb[2], v[0]);
        bb[3] = std::max(bb[3], v[1]);
    }
    return bb;
}

ExponentSet::ExponentSet(std::size_t r, std::vector<Exponent> points) : r_(r), pts_(std::move(points)) {
    for (const auto& e : pts_)
        if (e.size() != r_) throw LengthMismatch("exponent tuple arity differs from r");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool ExponentSet::contains(const Exponent& e) const {
    return std::binary_search(pts_.begin(), pts_.end(), e);
}

ExponentSet lattice_points(const LatticePolytope& P) {
    const auto bb = P.bounding_box();
    std::vector<Exponent> out;
    for (std::int64_t x = bb[0]; x <= bb[2]; ++x)
        for (std::int64_t y = bb[1]; y <= bb[3]; ++y)
            if (P.contains({x, y})) out.push_back({x, y});
    return ExponentSet(2, std::move(out));
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
    std::vector<Vertex> sums;
    sums.reserve(P.vertices().size() * Q.vertices().size());
    for (const auto& a : P.vertices())
        for (const auto& b : Q.vertices()) sums.push_back({a[0] + b[0], a[1] + b[1]});
    return LatticePolytope(std::move(sums));
}

ExponentSet opposite(const ExponentSet& U) {
    std::vector<Exponent> out;
    out.reserve(U.size());
    for (const auto& u : U.points()) {
        Exponent e(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) e[i] = -u[i];
        out.push_back(std::move(e));
    }
    return ExponentSet(U.r(), std::move(out));
}

ExponentSet reduce_into_H(const ExponentSet& U, std::uint32_t q) {
    if (q < 2) throw OutOfRange("q must be >= 2");
    const std::int64_t mod = q - 1;
    std::vector<Exponent> out;
    out.reserve(U.size());
    for (const auto& u : U.points()) {
        Exponent e(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) e[i] = ((u[i] % mod) + mod) % mod;
        out.push_back(std::move(e));
    }
    ExponentSet reduced(U.r(), std::move(out));
    if (reduced.size() != U.size())
        throw ExponentCollision("distinct exponents coincide mod q-1: identical torus functions");
    return reduced;
}

ExponentSet box_h(std::uint32_t q, std::size_t r) {
    if (q < 2) throw OutOfRange("q must be >= 2");
    if (r < 1) throw OutOfRange("r must be >= 1");
    const std::int64_t side = q - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < r; ++i) {
        count *= side;
        if (count > 100'000'000ull) throw OutOfRange("H too large to materialize");
    }
    std::vector<Exponent> out;
    out.reserve(count);
    Exponent cur(r, 0);
    for (std::uint64_t c = 0; c < count; ++c) {
        out.push_back(cur);
        for (std::size_t i = r; i-- > 0;) {
            if (cur[i] < side - 1) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
        }
    }
    return ExponentSet(r, std::move(out));
}

ExponentSet complement_in_H(const ExponentSet& U, std::uint32_t q) {
    const ExponentSet neg = reduce_into_H(opposite(U), q);
    const ExponentSet H = box_h(q, U.r());
    std::vector<Exponent> out;
    out.reserve(H.size() - neg.size());
    for (const auto& h : H.points())
        if (!neg.contains(h)) out.push_back(h);
    return ExponentSet(U.r(), std::move(out));
}

ExponentSet sumset(const ExponentSet& U, const ExponentSet& V) {
    if (U.r() != V.r()) throw LengthMismatch("sumset of sets with different r");
    std::vector<Exponent> out;
    out.reserve(U.size() * V.size());
    for (const auto& u : U.points())
        for (const auto& v : V.points()) {
            Exponent e(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i] + v[i];
            out.push_back(std::move(e));
        }
    return ExponentSet(U.r(), std::move(out));
}

std::int64_t simplex_distance(std::uint32_t q, std::int64_t a) {
    if (a < 0 || a > static_cast<std::int64_t>(q) - 2)
        throw OutOfRange("simplex distance formula needs 0 <= a <= q-2, got a = " + std::to_string(a));
    return static_cast<std::int64_t>(q - 1) * (static_cast<std::int64_t>(q) - 1 - a);
}

std::optional<std::int64_t> detect_axis_simplex(const ExponentSet& U) {
    if (U.r() != 2 || U.empty()) return std::nullopt;
    std::int64_t a = 0;
    for (const auto& u : U.points()) {
        if (u[0] < 0 || u[1] < 0) return std::nullopt;
        a = std::max(a, u[0] + u[1]);
    }
    if (static_cast<std::int64_t>(U.size()) != (a + 1) * (a + 2) / 2) return std::nullopt;
    return a;  // count matches and all points lie inside, so U is the full simplex
}

}  // namespace toric
