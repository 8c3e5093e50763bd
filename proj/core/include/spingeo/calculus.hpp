#pragma once

#include "spingeo/fibrations.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spingeo {

// Raised when an operation produces or receives data that contradicts a
// theorem-level gate (Rokhlin constraint, parity of invariants, incompatible
// spin assertions). Distinct from std::invalid_argument, which flags
// malformed input.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Pi1Kind { Trivial, Z2, Other, Unknown };
const char* to_string(Pi1Kind k);

struct Pi1 {
    Pi1Kind kind = Pi1Kind::Unknown;
    std::string tag;  // free-form description for Other

    static Pi1 trivial() { return {Pi1Kind::Trivial, {}}; }
    static Pi1 z2() { return {Pi1Kind::Z2, {}}; }
    static Pi1 other(std::string t) { return {Pi1Kind::Other, std::move(t)}; }
    static Pi1 unknown() { return {Pi1Kind::Unknown, {}}; }
};

struct Irreducibility {
    bool known = false;    // true means irreducible, with a reason
    std::string reason;

    static Irreducibility yes(std::string r) { return {true, std::move(r)}; }
    static Irreducibility unknown() { return {false, {}}; }
};

// Bookkeeping record for a closed oriented 4-manifold. Flags such as pi1,
// symplectic, and irreducibility are caller assertions carried with
// provenance; only e and sigma are combined arithmetically.
struct ManifoldDescriptor {
    std::string name;
    long long e = 0;
    long long sigma = 0;
    int b1 = 0;
    Pi1 pi1;
    SpinTriState spin;
    bool symplectic = false;
    Irreducibility irreducible;
    std::vector<std::string> notes;
};

// Validates and returns the descriptor. Rejects (ConsistencyError):
//   - spin manifolds with pi1 in {Trivial, Z2} and sigma != 0 (mod 16)
//     (Rokhlin constraint for the manifold or its double cover);
//   - b1 = 0 with e != sigma (mod 2) (second Betti number parity).
ManifoldDescriptor make_descriptor(ManifoldDescriptor d);

// Assertion flags accepted by the cut-and-paste operations. Every flag is a
// caller assertion, recorded in the result's provenance notes.
struct OpFlags {
    bool complement_simply_connected = false;  // surface complement is simply connected
    bool spin_gluing_chosen = false;           // gluing map preserves the spin structure
    bool dual_torus_present = false;           // surgered torus has a suitable dual torus
    bool minimal_cover = false;                // universal cover is minimal symplectic
    bool complement_spin = false;              // surface complement is spin
    bool odd_square_nonorientable = false;     // result contains a nonorientable surface of
                                               // odd square
    bool luttinger = false;                    // surgery is 1/1 on a Lagrangian torus
    std::optional<Pi1> assert_pi1;             // caller-asserted fundamental group
};

// Fiber sum along genus-g surfaces of square zero:
// e = e1 + e2 + 4g - 4, sigma = sigma1 + sigma2. Spin only when both inputs
// are spin and the spin-gluing flag is set.
ManifoldDescriptor fiber_sum(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2,
                             int genus, const OpFlags& flags = {});

// Double along an embedded genus-g surface of square zero:
// e -> 2e + 4g - 4, sigma -> 2 sigma. Spin when the input is spin or the
// complement-spin flag is asserted.
ManifoldDescriptor z2_double(const ManifoldDescriptor& d, int genus, const OpFlags& flags = {});

// Free quotient of a double: e -> e/2, sigma -> sigma/2. Rejects odd e or
// sigma (ConsistencyError).
ManifoldDescriptor z2_quotient(const ManifoldDescriptor& d, int genus);

struct Z2Construction {
    ManifoldDescriptor result;
    SpinTriState cover_spin;  // spin status of the double
    W2Type w2;
};

// Z2-construction along an embedded genus-g surface of square zero:
// e -> e + 2g - 2, sigma unchanged. pi1 = Z2 when the complement is
// simply connected; spin per the construction theorem, the Rokhlin gate,
// and any recorded odd-square nonorientable surface. The w2-type compares
// the quotient with its double cover.
Z2Construction z2_construct_full(const ManifoldDescriptor& d, int genus,
                                 const OpFlags& flags = {});
ManifoldDescriptor z2_construct(const ManifoldDescriptor& d, int genus,
                                const OpFlags& flags = {});

// Torus surgery (Luttinger or knot-surgery bookkeeping): e and sigma are
// unchanged; symplectic survives only with the Luttinger flag; spin survives
// only with the dual-torus flag; pi1 changes only by caller assertion.
ManifoldDescriptor torus_surgery(const ManifoldDescriptor& d, const OpFlags& flags = {});

// Even intersection form a(-E8) + b H, stored with the orientation for which
// the signature is non-positive.
struct EvenForm {
    long long e8_count = 0;        // a
    long long h_count = 0;         // b
    bool orientation_flipped = false;

    friend bool operator==(const EvenForm&, const EvenForm&) = default;
};

// Normalized even form of a manifold with b1 = 0, pi1 in {Trivial, Z2}, and
// even intersection form: a = |sigma| / 8, b = (e - 2 + sigma_canonical) / 2.
// Rejects signatures not divisible by 8 and negative or odd H-counts.
EvenForm form_from_invariants(long long e, long long sigma, const Pi1& pi1);

struct Rational {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

struct FormInvariants {
    long long e = 0;
    long long sigma = 0;
    long long b2_plus = 0;
    long long b2_minus = 0;
    long long c1_squared = 0;
    Rational chi_h;  // exact; half-integral for even ell
};

// Invariants of a simply connected (or pi1 = Z2 double-covered) manifold
// with form n(-E8) + ell H:
// e = 2 + 2 ell + 8n, sigma = -8n, b2+ = ell, b2- = ell + 8n,
// c1^2 = 4 + 4 ell - 8n, chi_h = (1 + ell) / 2.
FormInvariants invariants_from_form(long long e8_count, long long h_count);

// Form of the double cover of a pi1 = Z2 manifold with form a(-E8) + b H:
// (a, b) -> (2a, 2b + 1).
EvenForm double_cover_form(long long a, long long b);

// Named building blocks with parameters (invariants taken as established):
//   "E" {n>=1}        elliptic surface E(n)
//   "E2K" {}          knot-surgered E(2), K the fibered genus-one knot
//   "Mns" {n>=0,s>=0} spin symplectic block, e = 24s+4n+24, sigma = -16s-16
//   "W" {}            spin fiber-sum block with e = 0, sigma = 0
//   "Zn" {n>=5}       irreducible copy of #(2n+1) S2xS2
//   "Zpm" {m>=5}      the same block one Lagrangian surgery earlier
//   "Zmn" {m>=1,n>=5} e = 24m+4n+4, sigma = -16m
//   "Uns" {n>=0,s>=0} e = 24s+4n+36, sigma = -16s-24 (odd-H block)
//   "L2" {}           spin rational homology sphere with pi1 = Z2
//   "L2prime" {}      its non-spin sibling
//   "ChainG2"/"ChainG3"/"ChainG4"/"Xg" {g>=2}  total spaces of the catalog
//   fibrations, with invariants derived from the fibration data
ManifoldDescriptor catalog_block(const std::string& name,
                                 const std::map<std::string, long long>& params = {});

// Descriptor of the closed total space of a fibration over S^2. Euler
// characteristic, signature, and spin status are computed from the fibration
// (hyperelliptic assertion required for the signature); pi1 and the
// symplectic flag are caller assertions.
ManifoldDescriptor descriptor_from_fibration(const LefschetzFibration& lf, Pi1 asserted_pi1,
                                             bool symplectic);

// Mod-2 intersection forms of the two rational homology spheres L2, L2'.
BitMatrix l2_mod2_form();
BitMatrix l2_prime_mod2_form();

}  // namespace spingeo
