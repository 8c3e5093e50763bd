#pragma once

#include "spingeo/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spingeo {

// Quadratic refinement of the mod-2 intersection pairing on a surface:
// q(u+v) = q(u) + q(v) + <u,v>. A form is determined by its values on the
// standard basis, stored as a bit vector of length 2g.
class QuadraticForm {
public:
    QuadraticForm() = default;
    QuadraticForm(SurfaceModel surface, BitVector basis_values);

    const SurfaceModel& surface() const { return surface_; }
    const BitVector& basis_values() const { return values_; }

    // q(v) = sum_i v_i q(e_i) + sum_{i<j} v_i v_j <e_i, e_j>
    int evaluate(const BitVector& v) const;
    int evaluate(const CurveClass& c) const;

    std::string describe() const;  // "q(x1)=1, q(y1)=1, ..."

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
    SurfaceModel surface_{0};
    BitVector values_;
};

enum class SpinState { Spin, NonSpin, Unknown };
const char* to_string(SpinState s);

// Spin verdict together with the reason it was reached.
struct SpinTriState {
    SpinState state = SpinState::Unknown;
    std::string provenance;
};

enum class W2Type { TypeI, TypeII, TypeIII, Unknown };
const char* to_string(W2Type t);

// All quadratic refinements evaluating to 1 on a set of cycles, encoded as a
// particular form plus a nullspace basis on the basis-value vectors.
struct SpinFormSolutions {
    QuadraticForm particular;
    std::vector<BitVector> nullspace_basis;

    std::size_t dimension() const { return nullspace_basis.size(); }
    std::uint64_t count() const { return std::uint64_t{1} << dimension(); }
    bool contains(const QuadraticForm& q) const;
};

// Solves q(c) = 1 for every cycle c. Linear in the unknown basis values:
// for a cycle c the constraint reads
//   sum_i c_i q(e_i) = 1 + sum_t c_{x_t} c_{y_t}   (mod 2).
// Returns std::nullopt when no such form exists; the fibration over the disk
// with these vanishing cycles is then not spin.
std::optional<SpinFormSolutions> find_spin_form(const std::vector<CurveClass>& cycles);
std::optional<SpinFormSolutions> find_spin_form(const SurfaceModel& surface,
                                                const std::vector<CurveClass>& cycles);

// True when a symmetric mod-2 matrix has even type (zero diagonal), i.e.
// every characteristic element pairs trivially with itself. Throws on a
// non-symmetric input.
bool mod2_even_type(const BitMatrix& m);

// Rokhlin constraint for closed spin 4-manifolds: sigma = 0 (mod 16).
bool rokhlin_gate(long long sigma);

// w2-type of a quotient/cover pair:
//   (Spin, Spin)       -> TypeII
//   (NonSpin, Spin)    -> TypeIII
//   (NonSpin, NonSpin) -> TypeI
//   any Unknown        -> Unknown
//   (Spin, NonSpin)    -> rejected (a cover of a spin manifold is spin)
W2Type classify_w2(const SpinTriState& quotient, const SpinTriState& cover);

}  // namespace spingeo
