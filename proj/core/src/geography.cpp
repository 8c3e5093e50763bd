#include "spingeo/geography.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spingeo {

const char* to_string(W2Plane p)
{
    return p == W2Plane::TypeII ? "(ii)" : "(iii)";
}

const char* to_string(PlaneParity p)
{
    switch (p) {
    case PlaneParity::Even:
        return "even";
    case PlaneParity::Odd:
        return "odd";
    case PlaneParity::Both:
        return "both";
    }
    return "both";
}

namespace {

long long affine_at(long long c, const std::vector<long long>& coeffs,
                    const std::vector<long long>& p)
{
    if (coeffs.size() != p.size())
        throw std::invalid_argument("geography family: parameter count mismatch");
    long long v = c;
    for (std::size_t i = 0; i < p.size(); ++i)
        v += coeffs[i] * p[i];
    return v;
}

}  // namespace

long long GeographyFamily::a_at(const std::vector<long long>& p) const
{
    return affine_at(a_const, a_coeffs, p);
}

long long GeographyFamily::b_at(const std::vector<long long>& p) const
{
    return affine_at(b_const, b_coeffs, p);
}

const std::vector<GeographyFamily>& family_catalog()
{
    static const std::vector<GeographyFamily> catalog = [] {
        std::vector<GeographyFamily> fams;
        auto add = [&fams](GeographyFamily f) { fams.push_back(std::move(f)); };

        // ---- w2-type (ii), even H-count ----
        add({"mns-genus2-z2", "mns-genus2-z2", W2Plane::TypeII, PlaneParity::Even,
             {{"n", 0, 1}, {"s", 0, 1}}, 4, {0, 2}, 8, {2, 4},
             "M_n(s) summed with E(2)_K along a torus, then the Z2-construction along a "
             "genus-2 surface with simply connected spin complement",
             {}});
        add({"zn-genus2-z2", "zn-genus2-z2", W2Plane::TypeII, PlaneParity::Even,
             {{"n", 5, 1}}, 0, {0}, 2, {2},
             "Z2-construction on the signature-zero block Z_n along a genus-2 surface with "
             "simply connected complement",
             {}});
        add({"zmn-genus2-z2", "zmn-genus2-z2", W2Plane::TypeII, PlaneParity::Even,
             {{"m", 1, 1}, {"n", 5, 1}}, 0, {2, 0}, 2, {4, 2},
             "Z2-construction on the block Z_{m,n} along a genus-2 surface with simply "
             "connected complement",
             {}});

        // ---- w2-type (ii), odd H-count ----
        add({"mns-torus-z2", "mns-torus-z2", W2Plane::TypeII, PlaneParity::Odd,
             {{"n", 0, 1}, {"s", 0, 1}}, 2, {0, 2}, 3, {2, 4},
             "Z2-construction on M_n(s) along a torus with simply connected complement",
             {}});
        add({"zmn-torus-z2", "zmn-torus-z2", W2Plane::TypeII, PlaneParity::Odd,
             {{"m", 1, 1}, {"n", 5, 1}}, 0, {2, 0}, 1, {4, 2},
             "Z2-construction on Z_{m,n} along a torus with simply connected complement",
             {}});
        add({"zn-torus-z2", "zn-torus-z2", W2Plane::TypeII, PlaneParity::Odd,
             {{"m", 6, 1}}, 0, {0}, 1, {2},
             "Z2-construction on Z_m along a torus with simply connected complement",
             {}});

        // ---- w2-type (iii), even H-count ----
        add({"chain2-mns-z2", "chain2-mns-z2", W2Plane::TypeIII, PlaneParity::Even,
             {{"n", 0, 1}, {"s", 0, 1}}, 5, {0, 2}, 10, {2, 4},
             "M_n(s) summed with the genus-2 chain total space along a torus, then the "
             "Z2-construction along a genus-2 surface with spin complement",
             {}});
        add({"chain2-zm-z2", "chain2-zm-z2", W2Plane::TypeIII, PlaneParity::Even,
             {{"m", 5, 1}}, 3, {0}, 8, {2},
             "Z'_m summed with the genus-2 chain total space along a torus, then the "
             "Z2-construction along a genus-2 surface with spin complement",
             {}});
        add({"chain4-mns-z2", "chain4-mns-z2", W2Plane::TypeIII, PlaneParity::Even,
             {{"n", 0, 1}, {"s", 0, 1}}, 12, {0, 2}, 32, {2, 4},
             "M_n(s) summed with the genus-4 chain total space along a torus, then the "
             "Z2-construction along a genus-4 surface with spin complement",
             {}});
        add({"chain4-zm-z2", "chain4-zm-z2", W2Plane::TypeIII, PlaneParity::Even,
             {{"m", 5, 1}}, 10, {0}, 28, {2},
             "Z'_m summed with the genus-4 chain total space along a torus, then the "
             "Z2-construction along a genus-2 surface with spin complement",
             {"source states both b = 2m+28 (family statement and figure) and b = 2m+30 (a "
              "genus-4 reading of the construction); the genus-2 reading matching the "
              "statement and the enumerated missing set is used"}});

        // ---- w2-type (iii), odd H-count ----
        add({"mns-e1-z2", "mns-e1-z2", W2Plane::TypeIII, PlaneParity::Odd,
             {{"n", 0, 1}, {"s", 0, 1}}, 3, {0, 2}, 5, {2, 4},
             "M_n(s) summed with E(1) along a torus, then the Z2-construction along a torus "
             "with spin complement",
             {}});
        add({"en-zm-z2", "en-zm-z2", W2Plane::TypeIII, PlaneParity::Odd,
             {{"n", 3, 2}, {"m", 5, 1}}, 0, {1, 0}, 1, {2, 2},
             "E(n) (n odd) summed with Z'_m along a torus, then the Z2-construction along a "
             "torus with spin complement",
             {}});
        add({"zm-e1-z2", "zm-e1-z2", W2Plane::TypeIII, PlaneParity::Odd,
             {{"m", 6, 1}}, 1, {0}, 3, {2},
             "Z_m summed with E(1) along a torus, then the Z2-construction along a torus "
             "with spin complement",
             {}});
        add({"chain3-mns-z2", "chain3-mns-z2", W2Plane::TypeIII, PlaneParity::Odd,
             {{"n", 0, 1}, {"s", 0, 1}}, 6, {0, 2}, 13, {2, 4},
             "M_n(s) summed with the genus-3 chain total space along a torus, then the "
             "Z2-construction along a genus-3 surface with spin complement",
             {}});
        add({"xg-quotient", "xg-quotient", W2Plane::TypeIII, PlaneParity::Odd,
             {{"k", 1, 1}}, 1, {1}, 1, {2},
             "Z2-construction on the odd-genus block X_g, g = 2k+1, along the fiber; the "
             "whole family lies on the line b = 2a - 1",
             {}});
        add({"x3-zm-z2", "xodd-zm-z2", W2Plane::TypeIII, PlaneParity::Odd,
             {{"m", 5, 1}}, 2, {0}, 5, {2},
             "X_3 summed with Z'_m along a torus, then the Z2-construction along a genus-3 "
             "surface with spin complement",
             {}});
        add({"x7-zm-z2", "xodd-zm-z2", W2Plane::TypeIII, PlaneParity::Odd,
             {{"m", 5, 1}}, 4, {0}, 9, {2},
             "X_7 summed with Z'_m along a torus, then the Z2-construction along a genus-7 "
             "surface with spin complement",
             {}});
        return fams;
    }();
    return catalog;
}

std::vector<LatticePoint> family_points(const GeographyFamily& family, Bounds bounds)
{
    for (std::size_t i = 0; i < family.params.size(); ++i)
        if (family.b_coeffs.at(i) <= 0)
            throw std::invalid_argument("family_points: b must increase in every parameter");

    // A family may realize sporadic points below its theorem region's edge;
    // those carry no weight for coverage, so enumeration stays inside the region.
    const Region region = theorem_region(family.plane);
    std::vector<LatticePoint> out;
    std::vector<long long> p(family.params.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == p.size()) {
            const long long a = family.a_at(p);
            const long long b = family.b_at(p);
            if (a >= 0 && b >= 0 && a <= bounds.a_max && b <= bounds.b_max &&
                region.contains(a, b))
                out.push_back({a, b});
            return;
        }
        for (long long v = family.params[i].lower;; v += family.params[i].step) {
            p[i] = v;
            // smallest reachable point with this prefix
            std::vector<long long> floor = p;
            for (std::size_t j = i + 1; j < floor.size(); ++j)
                floor[j] = family.params[j].lower;
            if (family.b_at(floor) > bounds.b_max || family.a_at(floor) > bounds.a_max)
                break;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::map<LatticePoint, std::vector<std::string>> coverage(W2Plane plane, PlaneParity parity,
                                                          Bounds bounds)
{
    std::map<LatticePoint, std::vector<std::string>> covered;
    for (const auto& fam : family_catalog()) {
        if (fam.plane != plane)
            continue;
        if (parity != PlaneParity::Both && fam.b_parity != parity)
            continue;
        for (const auto& pt : family_points(fam, bounds))
            covered[pt].push_back(fam.name);
    }
    for (auto& [pt, names] : covered) {
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
    }
    return covered;
}

Region theorem_region(W2Plane plane)
{
    if (plane == W2Plane::TypeII) {
        return {"a even, b >= 0, b >= 2a - 1",
                [](long long a, long long b) {
                    return a >= 0 && b >= 0 && a % 2 == 0 && b >= 2 * a - 1;
                }};
    }
    return {"b odd: a >= 1 and b >= 2a - 1; b even: a not in {0,1,2,4,6,8} and b >= 2a + 8",
            [](long long a, long long b) {
                if (a < 0 || b < 0)
                    return false;
                if (b % 2 != 0)
                    return a != 0 && b >= 2 * a - 1;
                static const std::set<long long> excluded{0, 1, 2, 4, 6, 8};
                return !excluded.contains(a) && b > 2 * a + 6;
            }};
}

std::vector<ConstraintLine> constraint_lines()
{
    return {
        {"taubes", "b >= 2a - 1",
         [](long long a, long long b) { return b >= 2 * a - 1; }},
        {"furuta", "b >= a", [](long long a, long long b) { return b >= a; }},
        {"eleven-eighths", "2b >= 3a - 1",
         [](long long a, long long b) { return 2 * b >= 3 * a - 1; }},
    };
}

namespace {

std::vector<LatticePoint> region_gaps(W2Plane plane, PlaneParity parity, Bounds bounds)
{
    const Region region = theorem_region(plane);
    const auto covered = coverage(plane, parity, bounds);
    std::vector<LatticePoint> missing;
    for (long long a = 0; a <= bounds.a_max; ++a) {
        for (long long b = 0; b <= bounds.b_max; ++b) {
            if (parity == PlaneParity::Even && b % 2 != 0)
                continue;
            if (parity == PlaneParity::Odd && b % 2 == 0)
                continue;
            if (!region.contains(a, b))
                continue;
            if (!covered.contains({a, b}))
                missing.push_back({a, b});
        }
    }
    return missing;  // sorted by construction
}

}  // namespace

CoverageReport missing_points(W2Plane plane, Bounds bounds, PlaneParity parity)
{
    if (bounds.a_max < 60 || bounds.b_max < 130)
        throw std::invalid_argument("missing_points: bounds must be at least (60, 130)");

    CoverageReport report;
    report.plane = plane;
    report.parity = parity;
    report.bounds = bounds;
    report.covered = coverage(plane, parity, bounds);
    report.missing = region_gaps(plane, parity, bounds);

    const Bounds grown{bounds.a_max + report.stabilization_margin,
                       bounds.b_max + report.stabilization_margin};
    if (region_gaps(plane, parity, grown) != report.missing)
        throw ConsistencyError(
            "missing_points: the missing set changes when the bounds grow; the list is not a "
            "stable description of the uncovered region");
    report.notes.push_back("missing set unchanged when both bounds grow by " +
                           std::to_string(report.stabilization_margin));

    if (plane == W2Plane::TypeII) {
        const LatticePoint origin{0, 0};
        if (std::find(report.missing.begin(), report.missing.end(), origin) !=
            report.missing.end()) {
            report.flagged.push_back(origin);
            report.notes.push_back(
                "(0, 0) is realized by the rational homology sphere L2 and is excluded from "
                "the adjusted count");
        }
    }
    return report;
}

namespace {

OpFlags construct_flags(bool complement_spin, bool odd_square)
{
    OpFlags f;
    f.complement_simply_connected = true;
    f.minimal_cover = true;
    f.complement_spin = complement_spin;
    f.odd_square_nonorientable = odd_square;
    return f;
}

OpFlags spin_sum_flags()
{
    OpFlags f;
    f.spin_gluing_chosen = true;
    f.assert_pi1 = Pi1::trivial();
    return f;
}

}  // namespace

FamilyRecipe family_recipe(const std::string& family_name)
{
    // Even-H, w2-type (ii): the input of the final Z2-construction is spin with
    // simply connected surface complement.
    if (family_name == "mns-genus2-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Mns", {{"n", p[0]}, {"s", p[1]}}),
                                 catalog_block("E2K"), 1, spin_sum_flags());
            return z2_construct_full(sum, 2, construct_flags(false, false));
        };
    if (family_name == "zn-genus2-z2")
        return [](const std::vector<long long>& p) {
            return z2_construct_full(catalog_block("Zn", {{"n", p[0]}}), 2,
                                     construct_flags(false, false));
        };
    if (family_name == "zmn-genus2-z2")
        return [](const std::vector<long long>& p) {
            return z2_construct_full(catalog_block("Zmn", {{"m", p[0]}, {"n", p[1]}}), 2,
                                     construct_flags(false, false));
        };
    if (family_name == "mns-torus-z2")
        return [](const std::vector<long long>& p) {
            return z2_construct_full(catalog_block("Mns", {{"n", p[0]}, {"s", p[1]}}), 1,
                                     construct_flags(false, false));
        };
    if (family_name == "zmn-torus-z2")
        return [](const std::vector<long long>& p) {
            return z2_construct_full(catalog_block("Zmn", {{"m", p[0]}, {"n", p[1]}}), 1,
                                     construct_flags(false, false));
        };
    if (family_name == "zn-torus-z2")
        return [](const std::vector<long long>& p) {
            return z2_construct_full(catalog_block("Zn", {{"n", p[0]}}), 1,
                                     construct_flags(false, false));
        };

    // w2-type (iii): the quotient is non-spin (by the Rokhlin constraint when
    // sigma != 0 mod 16, by a recorded odd-square nonorientable surface
    // otherwise) while the double cover is spin via a spin complement.
    if (family_name == "chain2-mns-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Mns", {{"n", p[0]}, {"s", p[1]}}),
                                 catalog_block("ChainG2"), 1);
            return z2_construct_full(sum, 2, construct_flags(true, false));
        };
    if (family_name == "chain2-zm-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Zpm", {{"m", p[0]}}),
                                 catalog_block("ChainG2"), 1);
            return z2_construct_full(sum, 2, construct_flags(true, false));
        };
    if (family_name == "chain4-mns-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Mns", {{"n", p[0]}, {"s", p[1]}}),
                                 catalog_block("ChainG4"), 1);
            return z2_construct_full(sum, 4, construct_flags(true, true));
        };
    if (family_name == "chain4-zm-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Zpm", {{"m", p[0]}}),
                                 catalog_block("ChainG4"), 1);
            // genus-2 construction surface: matches the stated b = 2m + 28
            return z2_construct_full(sum, 2, construct_flags(true, true));
        };
    if (family_name == "mns-e1-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Mns", {{"n", p[0]}, {"s", p[1]}}),
                                 catalog_block("E", {{"n", 1}}), 1);
            return z2_construct_full(sum, 1, construct_flags(true, false));
        };
    if (family_name == "en-zm-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("E", {{"n", p[0]}}),
                                 catalog_block("Zpm", {{"m", p[1]}}), 1);
            return z2_construct_full(sum, 1, construct_flags(true, false));
        };
    if (family_name == "zm-e1-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Zn", {{"n", p[0]}}),
                                 catalog_block("E", {{"n", 1}}), 1);
            return z2_construct_full(sum, 1, construct_flags(true, false));
        };
    if (family_name == "chain3-mns-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Mns", {{"n", p[0]}, {"s", p[1]}}),
                                 catalog_block("ChainG3"), 1);
            return z2_construct_full(sum, 3, construct_flags(true, true));
        };
    if (family_name == "xg-quotient")
        return [](const std::vector<long long>& p) {
            const long long g = 2 * p[0] + 1;
            return z2_construct_full(catalog_block("Xg", {{"g", g}}),
                                     static_cast<int>(g), construct_flags(true, true));
        };
    if (family_name == "x3-zm-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Xg", {{"g", 3}}),
                                 catalog_block("Zpm", {{"m", p[0]}}), 1);
            return z2_construct_full(sum, 3, construct_flags(true, true));
        };
    if (family_name == "x7-zm-z2")
        return [](const std::vector<long long>& p) {
            auto sum = fiber_sum(catalog_block("Xg", {{"g", 7}}),
                                 catalog_block("Zpm", {{"m", p[0]}}), 1);
            return z2_construct_full(sum, 7, construct_flags(true, true));
        };
    throw std::invalid_argument("family_recipe: unknown family '" + family_name + "'");
}

FamilyAudit audit_family(const GeographyFamily& family, const FamilyRecipe& recipe)
{
    FamilyAudit audit;
    audit.family = family.name;
    audit.flags = family.flags;

    constexpr int kGridSize = 6;

    std::vector<long long> p(family.params.size(), 0);
    auto run_point = [&](const std::vector<long long>& params) {
        std::string where = family.name + " at (";
        for (std::size_t i = 0; i < params.size(); ++i)
            where += (i ? ", " : "") + family.params[i].symbol + " = " +
                     std::to_string(params[i]);
        where += ")";
        try {
            const Z2Construction z = recipe(params);
            const long long a = family.a_at(params);
            const long long b = family.b_at(params);
            if (z.result.pi1.kind != Pi1Kind::Z2)
                audit.mismatches.push_back(where + ": quotient pi1 is not Z2");
            const EvenForm form =
                form_from_invariants(z.result.e, z.result.sigma, z.result.pi1);
            if (form.e8_count != a || form.h_count != b)
                audit.mismatches.push_back(
                    where + ": form (" + std::to_string(form.e8_count) + ", " +
                    std::to_string(form.h_count) + ") != stated (" + std::to_string(a) +
                    ", " + std::to_string(b) + ")");
            const W2Type expected =
                family.plane == W2Plane::TypeII ? W2Type::TypeII : W2Type::TypeIII;
            if (z.w2 != expected)
                audit.mismatches.push_back(where + ": w2-type " + to_string(z.w2) +
                                           " != " + to_string(expected));
            const bool b_even = b % 2 == 0;
            if (b_even != (family.b_parity == PlaneParity::Even))
                audit.mismatches.push_back(where + ": H-count parity disagrees with the family");
        } catch (const std::exception& err) {
            audit.mismatches.push_back(where + ": " + err.what());
        }
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == p.size()) {
            run_point(p);
            return;
        }
        for (int j = 0; j < kGridSize; ++j) {
            p[i] = family.params[i].lower + j * family.params[i].step;
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    audit.passes = audit.mismatches.empty();
    return audit;
}

std::vector<FamilyAudit> audit_all_families()
{
    std::vector<FamilyAudit> audits;
    for (const auto& fam : family_catalog())
        audits.push_back(audit_family(fam, family_recipe(fam.name)));
    return audits;
}

}  // namespace spingeo
