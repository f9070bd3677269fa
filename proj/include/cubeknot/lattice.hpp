// Lattice-geometry primitives: dominance pair counting and the bilinear J
// function that all Maslov/Alexander grading formulas are built from.
//
// Convention used throughout the library: geometric coordinates are stored
// doubled, so a lattice point p becomes 2p and a cell center c+1/2 becomes
// 2c+1.  That keeps every comparison integral while still distinguishing
// marking centers from state points.
#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubeknot {

using Point3 = std::array<int, 3>;
using Point2 = std::array<int, 2>;

// Cell of the n x n x n grid, min corner (x,y,z), all in [0,n).
struct Cell3 {
    int x = 0, y = 0, z = 0;
    friend auto operator<=>(const Cell3&, const Cell3&) = default;
};

// Ordered axis pair naming a coordinate projection.
enum class Plane { xy, yz, zx };

inline const char* to_string(Plane p) {
    switch (p) {
        case Plane::xy: return "xy";
        case Plane::yz: return "yz";
        case Plane::zx: return "zx";
    }
    return "?";
}

// The two coordinate slots a plane compares.  Per the definitions in use,
// zx compares coordinates 0 and 2 (x first, then z) despite the name order.
inline std::pair<int, int> plane_coords(Plane p) {
    switch (p) {
        case Plane::xy: return {0, 1};
        case Plane::yz: return {1, 2};
        case Plane::zx: return {0, 2};
    }
    return {0, 1};
}

// Grading stored as 2x its value so half-integers stay exact.
struct HalfGrading {
    int twice = 0;
    constexpr HalfGrading() = default;
    constexpr explicit HalfGrading(int t) : twice(t) {}
    static constexpr HalfGrading whole(int v) { return HalfGrading(2 * v); }
    bool integral() const { return twice % 2 == 0; }
    friend auto operator<=>(const HalfGrading&, const HalfGrading&) = default;
    friend HalfGrading operator+(HalfGrading a, HalfGrading b) { return HalfGrading(a.twice + b.twice); }
    friend HalfGrading operator-(HalfGrading a, HalfGrading b) { return HalfGrading(a.twice - b.twice); }
};

std::string to_string(HalfGrading g);  // "3", "-2", "1/2", "-3/2"

// Exact rational, only small denominators show up here (1, 2, 4, 8).
struct Rat {
    long long num = 0;
    long long den = 1;
    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    bool is_integer() const { return den == 1; }
    HalfGrading as_half() const {
        if (den > 2) throw std::logic_error("grading with denominator > 2");
        return HalfGrading(den == 1 ? int(2 * num) : int(num));
    }
};

// GF(2)-style formal sum of points with rational coefficients; houses
// expressions like s - (Z + X)/2 that feed the bilinear J.
struct FormalPointSum {
    std::vector<std::pair<Point3, Rat>> terms;

    FormalPointSum() = default;
    explicit FormalPointSum(const std::vector<Point3>& pts, Rat coeff = Rat(1)) {
        for (const auto& p : pts) terms.push_back({p, coeff});
    }
    FormalPointSum& add(const std::vector<Point3>& pts, Rat coeff) {
        for (const auto& p : pts) terms.push_back({p, coeff});
        return *this;
    }
    friend FormalPointSum operator-(FormalPointSum a, const FormalPointSum& b) {
        for (auto [p, c] : b.terms) a.terms.push_back({p, Rat(-c.num, c.den)});
        return a;
    }
};

// Count of ordered pairs (a in A, b in B) with a strictly smaller than b in
// both of the plane's coordinate slots.
long long i_pair(const std::vector<Point3>& a, const std::vector<Point3>& b, Plane p);
long long i_pair2(const std::vector<Point2>& a, const std::vector<Point2>& b);

// J(A,B) = (I(A,B)+I(B,A))/2, extended bilinearly over formal sums.
Rat j_pair(const FormalPointSum& a, const FormalPointSum& b, Plane p);
Rat j_pair2(const std::vector<std::pair<Point2, Rat>>& a,
            const std::vector<std::pair<Point2, Rat>>& b);

// Drop the coordinate the plane does not use; keeps multiplicity.
std::vector<Point2> project_points(const std::vector<Point3>& pts, Plane p);
Point2 project_point(const Point3& pt, Plane p);

}  // namespace cubeknot
