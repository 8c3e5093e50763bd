#pragma once

#include "spingeo/spinforms.hpp"

#include <string>
#include <vector>

namespace spingeo {

// What the twist word is claimed to equal in the mapping class group:
// the identity (closed fibration over S^2) or a product of boundary twists
// t_{d_1} ... t_{d_k} (fibration over the disk with k boundary twists).
struct ClaimedTarget {
    enum Kind { IdentityClosed, BoundaryMultitwist };
    Kind kind = IdentityClosed;
    int boundary_twists = 0;  // k, for BoundaryMultitwist

    static ClaimedTarget identity_closed() { return {IdentityClosed, 0}; }
    static ClaimedTarget boundary_multitwist(int k) { return {BoundaryMultitwist, k}; }
};

// Ordered positive factorization: the twist about twists[0] is applied first.
struct Factorization {
    SurfaceModel surface{0};
    std::vector<CurveClass> twists;
    ClaimedTarget target = ClaimedTarget::identity_closed();
};

struct FibrationBase {
    enum Kind { Disk, Sphere, Closed };
    Kind kind = Sphere;
    int genus = 0;  // for Closed

    static FibrationBase disk() { return {Disk, 0}; }
    static FibrationBase sphere() { return {Sphere, 0}; }
    static FibrationBase closed(int genus) { return {Closed, genus}; }
};

struct LefschetzFibration {
    std::string name;
    int fiber_genus = 0;
    FibrationBase base;
    Factorization monodromy;
    std::vector<int> sections;  // self-intersection numbers of known sections
};

// Ordered product of the twist transvections (first twist applied first).
BitMatrix total_h1_action(const Factorization& f);

struct RelationReport {
    bool passes = false;
    std::string caveat;  // the check is necessary, not sufficient
};

// Checks the claimed relation on mod-2 homology. Boundary twists and twists
// about separating curves act trivially there, so a multitwist target also
// reduces to the identity test. Passing is a necessary condition only.
RelationReport verify_relation_mod2(const Factorization& f);

enum class HurwitzDirection { Right, Left };

// Elementary Hurwitz move at 1-based position i (1 <= i < length), replacing
// the adjacent pair (a, b) by (b, a + <a,b> b) for a rightward move and by
// (b + <a,b> a, a) for a leftward move. Preserves the total action.
Factorization hurwitz_move(const Factorization& f, std::size_t position, HurwitzDirection dir);

// Euler characteristic of the total space: (2-2g)(2-2h) + n over a closed
// base of genus h (the sphere is h = 0); (2-2g) + n for the compact total
// space over the disk.
long long euler_char(const LefschetzFibration& lf);

// Signature of a hyperelliptic fibration over S^2 with n0 nonseparating and
// no separating vanishing cycles: sigma = -n0 (g+1) / (2g+1). The
// hyperelliptic hypothesis is a caller assertion and must be passed
// explicitly; separating cycles and non-integral values are rejected.
long long endo_signature(const LefschetzFibration& lf, bool hyperelliptic_asserted);

// Spin status of the closed total space over S^2:
//   - NonSpin when some section has odd self-intersection (Wu formula);
//   - Spin when a quadratic form evaluating to 1 on all vanishing cycles
//     exists and some section has even self-intersection (the section is an
//     even geometric dual of the fiber);
//   - Unknown otherwise.
SpinTriState spin_status_closed(const LefschetzFibration& lf);

// Fiber-wise double: the twist word is concatenated with its image under the
// gluing reflection, which acts trivially on mod-2 homology, and every
// section of square s doubles to a sphere-section of square 2s.
LefschetzFibration double_along_fiber(const LefschetzFibration& lf);

// Built-in fibrations: "ChainG2", "ChainG3", "ChainG4", "Xg(g)" for g >= 2,
// "E(n)" for n >= 1. Parameters may also be given as "Xg 3" / "E 4".
LefschetzFibration catalog_fibration(const std::string& name);

std::vector<std::string> catalog_fibration_names();

}  // namespace spingeo
