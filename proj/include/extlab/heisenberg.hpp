#pragma once

#include <compare>
#include <string>
#include <vector>

#include "extlab/integer.hpp"
#include "extlab/quasihom.hpp"

namespace extlab {

struct Vec2 {
    Integer x = 0, y = 0;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
        if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool is_zero() const { return x == 0 && y == 0; }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Vec2 to_vec2(const Lat2& a) { return {Integer(a[0]), Integer(a[1])}; }

// det of the matrix with columns a, b
inline Integer omega(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// [c, z] with [c1,z1][c2,z2] = [c1 + c2 + omega(z1,z2), z1 + z2].
struct HeisElement {
    Integer c = 0;
    Vec2 z;

    friend bool operator==(const HeisElement&, const HeisElement&) = default;
    friend std::strong_ordering operator<=>(const HeisElement& a, const HeisElement& b) {
        if (a.c != b.c) return a.c < b.c ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.z <=> b.z;
    }
    std::string str() const { return "[" + c.str() + "," + z.str() + "]"; }
};

inline HeisElement heis_mul(const HeisElement& a, const HeisElement& b) {
    return {a.c + b.c + omega(a.z, b.z), a.z + b.z};
}
inline HeisElement heis_inv(const HeisElement& a) { return {-a.c, -a.z}; }
// a b a^-1
inline HeisElement heis_conj(const HeisElement& a, const HeisElement& b) { return heis_mul(heis_mul(a, b), heis_inv(a)); }

// The automorphism of Heis attached to n in Z^2: [c, z] -> [c + 2 omega(n, z), z].
inline HeisElement heis_twist(const Vec2& n, const HeisElement& h) { return {h.c + 2 * omega(n, h.z), h.z}; }

struct HeisOps {
    using value_type = HeisElement;
    HeisElement mul(const HeisElement& a, const HeisElement& b) const { return heis_mul(a, b); }
    HeisElement inv(const HeisElement& a) const { return heis_inv(a); }
    HeisElement identity() const { return {}; }
};

// (h, n) in Heis x Z^2 under either the direct or the twisted law
// (h1, n1)(h2, n2) = (h1 . twist(n1, h2), n1 + n2).
struct HeisPair {
    HeisElement h;
    Vec2 n;

    friend bool operator==(const HeisPair&, const HeisPair&) = default;
    friend std::strong_ordering operator<=>(const HeisPair& a, const HeisPair& b) {
        auto o = a.h <=> b.h;
        return o != 0 ? o : a.n <=> b.n;
    }
    std::string str() const { return "(" + h.str() + "," + n.str() + ")"; }
};

struct SemidirectOps {
    using value_type = HeisPair;
    HeisPair mul(const HeisPair& a, const HeisPair& b) const { return {heis_mul(a.h, heis_twist(a.n, b.h)), a.n + b.n}; }
    HeisPair inv(const HeisPair& a) const { return {heis_twist(-a.n, heis_inv(a.h)), -a.n}; }
    HeisPair identity() const { return {}; }
};

struct DirectOps {
    using value_type = HeisPair;
    HeisPair mul(const HeisPair& a, const HeisPair& b) const { return {heis_mul(a.h, b.h), a.n + b.n}; }
    HeisPair inv(const HeisPair& a) const { return {heis_inv(a.h), -a.n}; }
    HeisPair identity() const { return {}; }
};

// sigma_1(g) = (1, g)
inline SectionMap<Lattice2Ops, SemidirectOps> heis_sigma1() {
    return {"heis_sigma1", {}, {}, [](const Lat2& g) { return HeisPair{{}, to_vec2(g)}; }};
}

// sigma_2(g) = ([c0, -g], g). It conjugates Heis trivially for every c0;
// c0 = 0 gives a section with sigma_2(0) = 1.
inline SectionMap<Lattice2Ops, SemidirectOps> heis_sigma2(Integer c0 = 0) {
    return {"heis_sigma2", {}, {}, [c0](const Lat2& g) {
                auto v = to_vec2(g);
                return HeisPair{{c0, -v}, v};
            }};
}

// sigma(g) = (1, g) into the direct product.
inline SectionMap<Lattice2Ops, DirectOps> direct_section() {
    return {"direct_product", {}, {}, [](const Lat2& g) { return HeisPair{{}, to_vec2(g)}; }};
}

// sigma(g) = [0, g] into Heis, the section of 1 -> Z -> Heis -> Z^2 -> 1.
inline SectionMap<Lattice2Ops, HeisOps> heis_central_section() {
    return {"heis_central", {}, {}, [](const Lat2& g) { return HeisElement{0, to_vec2(g)}; }};
}

} // namespace extlab
