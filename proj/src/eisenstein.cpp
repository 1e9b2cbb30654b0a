// Eisenstein-lattice triangle strips and their Farey labels.
#include "markov/eisenstein.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace markov {

std::array<EisensteinPoint, 3> LatticeTriangle::vertices() const {
    long a = anchor.m, b = anchor.n;
    if (orientation == Orientation::Up) {
        return {EisensteinPoint{a, b}, EisensteinPoint{a + 1, b}, EisensteinPoint{a, b + 1}};
    }
    return {EisensteinPoint{a + 1, b}, EisensteinPoint{a, b + 1},
            EisensteinPoint{a + 1, b + 1}};
}

LatticeTriangle triangle_through(EisensteinPoint a, EisensteinPoint b, EisensteinPoint c) {
    EisensteinPoint anchor{std::min({a.m, b.m, c.m}), std::min({a.n, b.n, c.n})};
    bool at_anchor = a == anchor || b == anchor || c == anchor;
    LatticeTriangle t{anchor, at_anchor ? Orientation::Up : Orientation::Down};
    std::array<EisensteinPoint, 3> want = t.vertices();
    std::array<EisensteinPoint, 3> got{a, b, c};
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) throw std::logic_error("points do not span a lattice triangle");
    return t;
}

const Rational* LabeledStrip::find(EisensteinPoint p) const {
    auto it = by_point_.find(p);
    return it == by_point_.end() ? nullptr : &it->second;
}

Rational LabeledStrip::label_at(EisensteinPoint p) const {
    const Rational* r = find(p);
    if (!r) {
        throw std::invalid_argument("no label at lattice point (" + std::to_string(p.m) +
                                    ", " + std::to_string(p.n) + ")");
    }
    return *r;
}

void LabeledStrip::add(EisensteinPoint p, Rational label) {
    by_point_.emplace(p, label);
    entries_.emplace_back(p, std::move(label));
}

TrianglePath segment_path(long m, long n) {
    if (m < 0 || n < 0) throw std::invalid_argument("segment endpoint needs m, n >= 0");
    if (std::gcd(m, n) != 1) {
        throw std::invalid_argument("segment needs coprime (m, n); through-points make the "
                                    "straight strip ill-defined");
    }
    TrianglePath path;
    path.triangles.push_back({EisensteinPoint{0, 0}, Orientation::Up});
    if ((m == 1 && n == 0) || (m == 0 && n == 1)) return path;
    EisensteinPoint w{0, 0}, l{0, 1}, r{1, 0};
    for (;;) {
        EisensteinPoint v{l.m + r.m - w.m, l.n + r.n - w.n};
        path.triangles.push_back(triangle_through(l, r, v));
        if (v.m == m && v.n == n) return path;
        long s = m * v.n - n * v.m;  // which side of the segment v falls on
        if (s == 0) {
            throw std::logic_error("segment passed through a lattice point");
        }
        if (s > 0) {
            w = l;
            l = v;
        } else {
            w = r;
            r = v;
        }
    }
}

namespace {

LatticeTriangle translated(const LatticeTriangle& t, long dm, long dn) {
    return {EisensteinPoint{t.anchor.m + dm, t.anchor.n + dn}, t.orientation};
}

// Rotate around p, starting after the triangle `from`, until reaching `to`;
// clockwise for the right side, counterclockwise for the left.  The triangles
// strictly between are appended.
void append_fan(std::vector<LatticeTriangle>& out, EisensteinPoint p,
                const LatticeTriangle& from, const LatticeTriangle& to, Side side) {
    LatticeTriangle cur = from;
    for (int steps = 0; steps <= 6; ++steps) {
        std::array<EisensteinPoint, 2> other;
        std::size_t count = 0;
        for (EisensteinPoint v : cur.vertices()) {
            if (v == p) continue;
            if (count == 2) throw std::logic_error("fan pivot is not a triangle vertex");
            other[count++] = v;
        }
        if (count != 2) throw std::logic_error("fan pivot is not a triangle vertex");
        EisensteinPoint x = other[0], y = other[1];
        long cross = (x.m - p.m) * (y.n - p.n) - (x.n - p.n) * (y.m - p.m);
        if (cross < 0) std::swap(x, y);  // x before y counterclockwise
        if (side == Side::Right) {
            cur = triangle_through(p, x, EisensteinPoint{p.m + x.m - y.m, p.n + x.n - y.n});
        } else {
            cur = triangle_through(p, y, EisensteinPoint{p.m + y.m - x.m, p.n + y.n - x.n});
        }
        if (cur == to) return;
        out.push_back(cur);
    }
    throw std::logic_error("fan around a lattice point failed to close");
}

}  // namespace

TrianglePath bent_path(long m, long n, long k, Side side) {
    if (k < 2) {
        throw std::invalid_argument("bent path needs k >= 2, got " + std::to_string(k));
    }
    TrianglePath straight = segment_path(m, n);
    TrianglePath path;
    for (long j = 0; j < k; ++j) {
        if (j > 0) {
            EisensteinPoint pivot{j * m, j * n};
            append_fan(path.triangles, pivot, path.triangles.back(),
                       translated(straight.triangles.front(), j * m, j * n), side);
        }
        for (const LatticeTriangle& t : straight.triangles) {
            path.triangles.push_back(translated(t, j * m, j * n));
        }
    }
    return path;
}

LabeledStrip label_path(const TrianglePath& path) {
    if (path.triangles.empty() ||
        path.triangles.front() != LatticeTriangle{EisensteinPoint{0, 0}, Orientation::Up}) {
        throw std::invalid_argument("path must start at the seed triangle");
    }
    LabeledStrip strip;
    strip.add(EisensteinPoint{0, 0}, Rational::infinity());
    strip.add(EisensteinPoint{1, 0}, Rational(0));
    strip.add(EisensteinPoint{0, 1}, Rational(1));
    for (std::size_t i = 1; i < path.triangles.size(); ++i) {
        std::array<EisensteinPoint, 3> prev = path.triangles[i - 1].vertices();
        std::array<EisensteinPoint, 3> cur = path.triangles[i].vertices();
        auto in_prev = [&](EisensteinPoint v) {
            return std::find(prev.begin(), prev.end(), v) != prev.end();
        };
        std::vector<EisensteinPoint> shared;
        EisensteinPoint fresh{};
        bool have_fresh = false;
        for (EisensteinPoint v : cur) {
            if (in_prev(v)) {
                shared.push_back(v);
            } else {
                fresh = v;
                have_fresh = true;
            }
        }
        if (shared.size() != 2 || !have_fresh) {
            throw std::invalid_argument("consecutive triangles do not share an edge");
        }
        EisensteinPoint dropped{};
        for (EisensteinPoint v : prev) {
            if (!(v == shared[0]) && !(v == shared[1])) dropped = v;
        }
        Rational va = strip.label_at(shared[0]);
        Rational vb = strip.label_at(shared[1]);
        Rational off = strip.label_at(dropped);
        // The two Farey triangles over the edge {va, vb} have third labels
        // va + vb and va - vb (as lax vectors); the new vertex takes the one
        // the previous triangle did not use.
        Rational sum(va.num() + vb.num(), va.den() + vb.den());
        Rational diff(va.num() - vb.num(), va.den() - vb.den());
        if (sum != off && diff != off) {
            throw std::logic_error("labels lost Farey adjacency along the path");
        }
        Rational label = sum == off ? diff : sum;
        if (const Rational* existing = strip.find(fresh)) {
            // bent paths may revisit a triangle; the rule must reproduce the label
            if (*existing != label) {
                throw std::logic_error("revisited vertex would change its label");
            }
        } else {
            strip.add(fresh, label);
        }
    }
    return strip;
}

bool verify_snake(long m, long n) {
    LabeledStrip strip = label_path(segment_path(m, n));
    return strip.label_at(EisensteinPoint{m, n}) == mu(Rational(n, m));
}

bool verify_snake(long m, long n, long k, Side side) {
    LabeledStrip strip = label_path(bent_path(m, n, k, side));
    return strip.label_at(EisensteinPoint{k * m, k * n}) == gamma(mu(Rational(n, m)), side, k);
}

}  // namespace markov
