// Triangle strips in the Eisenstein lattice.  A straight strip from 0 to
// m + n*omega, Farey-labeled from the seed triangle, ends in the tree label
// mu(n/m); bending the strip around k-1 interior lattice points ends in the
// companion gamma_k of that label.
#pragma once

#include <array>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "markov/companions.hpp"

namespace markov {

struct EisensteinPoint {
    long m = 0, n = 0;  // the point m + n*omega with omega = (1 + i sqrt 3)/2

    friend auto operator<=>(const EisensteinPoint&, const EisensteinPoint&) = default;
};

enum class Orientation { Up, Down };

struct LatticeTriangle {
    EisensteinPoint anchor;
    Orientation orientation;

    // Up at z has vertices {z, z+1, z+omega}; Down has {z+1, z+omega, z+1+omega}.
    std::array<EisensteinPoint, 3> vertices() const;

    friend bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;
};

// The unique lattice triangle with these three vertices, in any order.
LatticeTriangle triangle_through(EisensteinPoint a, EisensteinPoint b, EisensteinPoint c);

struct TrianglePath {
    std::vector<LatticeTriangle> triangles;
};

class LabeledStrip {
public:
    // labels in the order their vertices were reached
    const std::vector<std::pair<EisensteinPoint, Rational>>& entries() const {
        return entries_;
    }
    const Rational* find(EisensteinPoint p) const;
    Rational label_at(EisensteinPoint p) const;  // throws when p is unlabeled

    void add(EisensteinPoint p, Rational label);

private:
    std::vector<std::pair<EisensteinPoint, Rational>> entries_;
    std::map<EisensteinPoint, Rational> by_point_;
};

// All triangles crossed by the open segment from 0 to m + n*omega, in crossing
// order.  Needs m, n >= 0 coprime; (1,0) and (0,1) give the seed triangle
// alone.
TrianglePath segment_path(long m, long n);

// The straight strip repeated k times, with the fan of triangles around each
// interior multiple of m + n*omega inserted on the chosen side; this is the
// exact limit of bending the segment slightly left or right.
TrianglePath bent_path(long m, long n, long k, Side side);

// Farey labels along a path: the seed triangle gets 1/0, 0/1, 1/1, and each
// new vertex gets the label completing a Farey triple with the shared edge.
LabeledStrip label_path(const TrianglePath& path);

// Straight: terminal label equals mu(n/m).  Bent: equals gamma(mu(n/m), side, k).
bool verify_snake(long m, long n);
bool verify_snake(long m, long n, long k, Side side);

}  // namespace markov
