#pragma once

#include "spingeo/calculus.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace spingeo {

// The two w2-type planes realized by the construction families. Every family
// lands in one plane and one parity class of the H-count b.
enum class W2Plane { TypeII, TypeIII };
enum class PlaneParity { Even, Odd, Both };
const char* to_string(W2Plane p);
const char* to_string(PlaneParity p);

struct FamilyParam {
    std::string symbol;
    long long lower = 0;
    long long step = 1;  // 2 for parameters restricted to one parity
};

// A one- or two-parameter family of normalized even forms a(-E8) + b H with
// a and b affine in the parameters.
struct GeographyFamily {
    std::string name;   // stable key, e.g. "chain2-mns-z2"
    std::string group;  // construction group (two X-block variants share one)
    W2Plane plane = W2Plane::TypeII;
    PlaneParity b_parity = PlaneParity::Even;
    std::vector<FamilyParam> params;
    long long a_const = 0;
    std::vector<long long> a_coeffs;
    long long b_const = 0;
    std::vector<long long> b_coeffs;
    std::string derivation;           // how the family is constructed
    std::vector<std::string> flags;   // recorded source discrepancies, if any

    long long a_at(const std::vector<long long>& p) const;
    long long b_at(const std::vector<long long>& p) const;
};

// All construction families (16 groups; the odd X-block group contributes
// two formula entries).
const std::vector<GeographyFamily>& family_catalog();

struct LatticePoint {
    long long a = 0;
    long long b = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct Bounds {
    long long a_max = 60;
    long long b_max = 130;
};

// Points of one family inside the bounds.
std::vector<LatticePoint> family_points(const GeographyFamily& family, Bounds bounds);

// Union of family coverage for a plane/parity, mapped to the (sorted) names
// of the families realizing each point.
std::map<LatticePoint, std::vector<std::string>> coverage(W2Plane plane, PlaneParity parity,
                                                          Bounds bounds);

struct Region {
    std::string description;
    std::function<bool(long long a, long long b)> contains;
};

// Realization region of the corresponding theorem:
//   TypeII : a even, b >= 2a - 1;
//   TypeIII: b odd: a != 0 and b >= 2a - 1;
//            b even: a not in {0,1,2,4,6,8} and b > 2a + 6.
Region theorem_region(W2Plane plane);

struct ConstraintLine {
    std::string name;         // "taubes", "furuta", "eleven-eighths"
    std::string description;  // inequality in (a, b)
    std::function<bool(long long a, long long b)> satisfied;
};

// Necessary constraints on quotient coordinates, derived from the double
// cover (x, y) = (2a, 2b+1): c1^2 >= 0 gives b >= 2a-1; the finite-group
// Betti bound gives b >= a; the 11/8 bound gives 2b >= 3a - 1.
std::vector<ConstraintLine> constraint_lines();

struct CoverageReport {
    W2Plane plane = W2Plane::TypeII;
    PlaneParity parity = PlaneParity::Both;
    Bounds bounds;
    long long stabilization_margin = 20;
    std::map<LatticePoint, std::vector<std::string>> covered;
    std::vector<LatticePoint> missing;  // in-region, uncovered, stabilized
    std::vector<LatticePoint> flagged;  // realized elsewhere in the source
    std::vector<std::string> notes;

    std::size_t missing_count_raw() const { return missing.size(); }
    std::size_t missing_count_adjusted() const { return missing.size() - flagged.size(); }
};

// Missing in-region points, certified stable: the set must not change when
// the bounds grow by the margin (ConsistencyError otherwise). Bounds below
// (60, 130) are rejected.
CoverageReport missing_points(W2Plane plane, Bounds bounds = {},
                              PlaneParity parity = PlaneParity::Both);

// One audit of a family: re-derives the (a, b) formula by running the
// family's construction recipe over a parameter grid (six values per
// parameter) and comparing normalized forms, w2-type, and parity.
struct FamilyAudit {
    std::string family;
    bool passes = false;
    std::vector<std::string> mismatches;
    std::vector<std::string> flags;  // copied source-discrepancy records
};

using FamilyRecipe = std::function<Z2Construction(const std::vector<long long>& params)>;

// Built-in recipe for a catalog family (throws for unknown names).
FamilyRecipe family_recipe(const std::string& family_name);

FamilyAudit audit_family(const GeographyFamily& family, const FamilyRecipe& recipe);
std::vector<FamilyAudit> audit_all_families();

// Deterministic exports of a coverage report (implemented in export.cpp).
std::string to_csv(const CoverageReport& report);
std::string to_svg(const CoverageReport& report);

}  // namespace spingeo
