#pragma once

#include "spingeo/gf2.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spingeo {

// Reference surface of genus g, optionally with marked boundary circles.
// Mod-2 first homology of the closed surface carries the ordered basis
// x_1, y_1, ..., x_g, y_g; index 2(i-1) is x_i and index 2(i-1)+1 is y_i.
class SurfaceModel {
public:
    explicit SurfaceModel(int genus, int boundary_count = 0);

    int genus() const { return genus_; }
    int boundary_count() const { return boundary_count_; }
    std::size_t h1_dim() const { return 2 * static_cast<std::size_t>(genus_); }

    BitVector zero_class() const { return BitVector(h1_dim()); }
    BitVector x(int i) const;  // 1-based
    BitVector y(int i) const;  // 1-based

    std::string basis_label(std::size_t index) const;  // "x1", "y1", ...

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

private:
    int genus_ = 0;
    int boundary_count_ = 0;
};

// A mod-2 homology class of a simple closed curve on a surface. The zero
// class records a separating curve.
struct CurveClass {
    SurfaceModel surface{0};
    BitVector vec;
    std::string name;

    bool separating() const { return vec.is_zero(); }
};

CurveClass make_curve(const SurfaceModel& s, BitVector vec, std::string name = "");

// Mod-2 intersection pairing in the standard symplectic basis:
// <x_i, y_i> = 1 and all other basis pairings vanish.
int pairing(const BitVector& u, const BitVector& v);
int pairing(const CurveClass& u, const CurveClass& v);

// Gram matrix of the pairing (2g x 2g, block-diagonal [[0,1],[1,0]]).
BitMatrix intersection_gram(const SurfaceModel& s);

// Classes of the standard chain of 2g+1 curves:
//   c_1 = x_1, c_{2i} = y_i, c_{2i+1} = x_i + x_{i+1}, c_{2g+1} = x_g.
std::vector<CurveClass> chain_classes(int genus);

// Mod-2 action of the Dehn twist about c: v -> v + <v,c> c. The formula is
// involutive and independent of the twist direction.
BitVector transvect(const CurveClass& c, const BitVector& v);

// Matrix of the transvection on the standard basis.
BitMatrix twist_matrix(const CurveClass& c);

// Parses expressions such as "x1", "y2", "x1+x2", or "0" (the zero class).
CurveClass parse_curve(const SurfaceModel& s, std::string_view expr);

// Renders a class as a sum of basis labels, e.g. "x1+x2"; "0" for zero.
std::string describe(const CurveClass& c);

}  // namespace spingeo
