#include "spingeo/geography.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace spingeo;

namespace {

const GeographyFamily& family_by_name(const std::string& name)
{
    for (const GeographyFamily& f : family_catalog())
        if (f.name == name)
            return f;
    throw std::runtime_error("no family named " + name);
}

bool csv_has_row(const std::string& csv, const std::string& prefix)
{
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0)
            return true;
    return false;
}

}  // namespace

TEST_CASE("family catalog shape")
{
    const auto& catalog = family_catalog();
    CHECK(catalog.size() == 17);

    std::set<std::string> names;
    std::set<std::string> groups;
    for (const GeographyFamily& f : catalog) {
        CHECK(names.insert(f.name).second);  // unique keys
        groups.insert(f.group);
        CHECK_FALSE(f.derivation.empty());
        CHECK(f.a_coeffs.size() == f.params.size());
        CHECK(f.b_coeffs.size() == f.params.size());
    }
    CHECK(groups.size() == 16);  // the odd X-block group has two entries

    // exactly one recorded source discrepancy in the whole catalog
    std::size_t flagged = 0;
    for (const GeographyFamily& f : catalog)
        flagged += f.flags.empty() ? 0 : 1;
    CHECK(flagged == 1);
    CHECK_FALSE(family_by_name("chain4-zm-z2").flags.empty());
}

TEST_CASE("formula evaluation and parity")
{
    const GeographyFamily& mns = family_by_name("mns-genus2-z2");
    CHECK(mns.a_at({0, 0}) == 4);
    CHECK(mns.b_at({0, 0}) == 8);
    CHECK(mns.a_at({3, 2}) == 8);
    CHECK(mns.b_at({3, 2}) == 22);

    // every family produces b of its declared parity on a parameter grid
    for (const GeographyFamily& f : family_catalog()) {
        REQUIRE(f.b_parity != PlaneParity::Both);
        const long long want = f.b_parity == PlaneParity::Even ? 0 : 1;
        std::vector<long long> p(f.params.size());
        for (long long i = 0; i < 4; ++i) {
            for (std::size_t k = 0; k < f.params.size(); ++k)
                p[k] = f.params[k].lower + i * f.params[k].step;
            CHECK(((f.b_at(p) % 2 + 2) % 2) == want);
        }
    }
}

TEST_CASE("theorem regions")
{
    const Region ii = theorem_region(W2Plane::TypeII);
    CHECK(ii.contains(0, 0));
    CHECK(ii.contains(2, 3));
    CHECK(ii.contains(2, 4));
    CHECK_FALSE(ii.contains(1, 5));   // a must be even
    CHECK_FALSE(ii.contains(2, 2));   // below b = 2a - 1
    CHECK_FALSE(ii.contains(-1, 0));

    const Region iii = theorem_region(W2Plane::TypeIII);
    CHECK(iii.contains(1, 1));
    CHECK(iii.contains(3, 14));       // even b: a = 3 allowed, 14 > 12
    CHECK(iii.contains(10, 28));      // even b: 28 > 26
    CHECK_FALSE(iii.contains(0, 13)); // odd b needs a != 0
    CHECK_FALSE(iii.contains(2, 14)); // even b excludes a = 2
    CHECK_FALSE(iii.contains(10, 26));// even b needs b > 2a + 6
    CHECK_FALSE(iii.contains(1, 0));  // even b excludes a = 1
}

TEST_CASE("family points satisfy region and constraint lines")
{
    const Bounds bounds{};
    const auto& lines = constraint_lines();
    REQUIRE(lines.size() == 3);

    for (const GeographyFamily& f : family_catalog()) {
        const Region region = theorem_region(f.plane);
        const auto points = family_points(f, bounds);
        CHECK_FALSE(points.empty());
        for (const LatticePoint& pt : points) {
            CHECK(region.contains(pt.a, pt.b));
            for (const ConstraintLine& line : lines)
                CHECK(line.satisfied(pt.a, pt.b));
        }
    }
}

TEST_CASE("one family walks the lowest constraint line")
{
    // the quotients of the odd X-blocks sit exactly on b = 2a - 1
    const auto on_line = [](const LatticePoint& pt) { return pt.b == 2 * pt.a - 1; };

    const auto xg = family_points(family_by_name("xg-quotient"), Bounds{});
    CHECK(std::all_of(xg.begin(), xg.end(), on_line));

    for (const GeographyFamily& f : family_catalog()) {
        if (f.name == "xg-quotient")
            continue;
        const auto points = family_points(f, Bounds{});
        CHECK(std::any_of(points.begin(), points.end(),
                          [&](const LatticePoint& pt) { return !on_line(pt); }));
    }
}

TEST_CASE("missing sets match the enumerated gaps")
{
    const CoverageReport iii = missing_points(W2Plane::TypeIII);
    std::vector<LatticePoint> expected_iii;
    for (long long b = 1; b <= 13; b += 2)
        expected_iii.push_back({1, b});
    for (long long b = 5; b <= 13; b += 2)
        expected_iii.push_back({2, b});
    for (long long b = 9; b <= 17; b += 2)
        expected_iii.push_back({4, b});
    expected_iii.push_back({3, 14});
    expected_iii.push_back({3, 16});
    for (long long b = 28; b <= 36; b += 2)
        expected_iii.push_back({10, b});
    std::sort(expected_iii.begin(), expected_iii.end());
    CHECK(iii.missing == expected_iii);
    CHECK(iii.missing_count_raw() == 24);
    CHECK(iii.missing_count_adjusted() == 24);
    CHECK(iii.flagged.empty());

    const CoverageReport iii_even = missing_points(W2Plane::TypeIII, Bounds{}, PlaneParity::Even);
    const CoverageReport iii_odd = missing_points(W2Plane::TypeIII, Bounds{}, PlaneParity::Odd);
    CHECK(iii_even.missing_count_raw() == 7);
    CHECK(iii_odd.missing_count_raw() == 17);

    const CoverageReport ii = missing_points(W2Plane::TypeII);
    std::vector<LatticePoint> expected_ii;
    for (long long b = 0; b <= 11; ++b)
        expected_ii.push_back({0, b});
    for (long long b = 4; b <= 14; b += 2)
        expected_ii.push_back({2, b});
    std::sort(expected_ii.begin(), expected_ii.end());
    CHECK(ii.missing == expected_ii);
    CHECK(ii.missing_count_raw() == 18);
    CHECK(ii.missing_count_adjusted() == 17);
    CHECK(ii.flagged == std::vector<LatticePoint>{{0, 0}});

    const CoverageReport ii_even = missing_points(W2Plane::TypeII, Bounds{}, PlaneParity::Even);
    const CoverageReport ii_odd = missing_points(W2Plane::TypeII, Bounds{}, PlaneParity::Odd);
    CHECK(ii_even.missing_count_raw() == 12);
    CHECK(ii_odd.missing_count_raw() == 6);

    // reports carry the stabilization note
    const auto has_stability_note = [](const CoverageReport& r) {
        for (const std::string& note : r.notes)
            if (note.find("unchanged") != std::string::npos)
                return true;
        return false;
    };
    CHECK(has_stability_note(ii));
    CHECK(has_stability_note(iii));

    CHECK_THROWS_AS(missing_points(W2Plane::TypeII, Bounds{10, 10}), std::invalid_argument);
}

TEST_CASE("family audits")
{
    const auto audits = audit_all_families();
    CHECK(audits.size() == family_catalog().size());
    std::size_t flagged = 0;
    for (const FamilyAudit& audit : audits) {
        INFO(audit.family);
        for (const std::string& m : audit.mismatches)
            INFO(m);
        CHECK(audit.passes);
        flagged += audit.flags.empty() ? 0 : 1;
    }
    CHECK(flagged == 1);

    CHECK_THROWS_AS(family_recipe("no-such-family"), std::invalid_argument);

    // spot check: the X-block quotient recipe lands on (k + 1, 2k + 1)
    const FamilyRecipe xg = family_recipe("xg-quotient");
    for (long long k = 1; k <= 5; ++k) {
        const Z2Construction z = xg({k});
        const EvenForm form =
            form_from_invariants(z.result.e, z.result.sigma, z.result.pi1);
        CHECK(form.e8_count == k + 1);
        CHECK(form.h_count == 2 * k + 1);
        CHECK(z.w2 == W2Type::TypeIII);
    }
}

TEST_CASE("csv export")
{
    const CoverageReport ii = missing_points(W2Plane::TypeII, Bounds{}, PlaneParity::Even);
    const std::string csv = to_csv(ii);
    CHECK(csv.rfind("a,b,status,families\n", 0) == 0);
    CHECK(csv_has_row(csv, "0,12,covered,"));
    CHECK(csv_has_row(csv, "0,0,missing,"));
    CHECK(csv == to_csv(missing_points(W2Plane::TypeII, Bounds{}, PlaneParity::Even)));

    const CoverageReport iii = missing_points(W2Plane::TypeIII, Bounds{}, PlaneParity::Odd);
    const std::string csv3 = to_csv(iii);
    CHECK(csv_has_row(csv3, "2,3,covered,"));

    // covered rows carry at least one family name
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(",covered,") == std::string::npos)
            continue;
        CHECK(line.back() != ',');
    }
}

TEST_CASE("svg export")
{
    const CoverageReport iii = missing_points(W2Plane::TypeIII);
    const std::string svg = to_svg(iii);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("covered") != std::string::npos);
    CHECK(svg.find("missing") != std::string::npos);
    CHECK(svg == to_svg(missing_points(W2Plane::TypeIII)));
}
