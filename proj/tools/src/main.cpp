#include "spingeo/geography.hpp"
#include "spingeo/recipe_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace spingeo;

// exit codes: 0 verified, 1 verification failed, 2 invalid input

int run_spin_check(const std::string& name, int genus, const std::string& cycle_text)
{
    std::vector<CurveClass> cycles;
    SurfaceModel surface{0};
    std::optional<LefschetzFibration> lf;

    if (!name.empty()) {
        lf = catalog_fibration(name);
        surface = lf->monodromy.surface;
        cycles = lf->monodromy.twists;
    } else {
        if (genus <= 0 || cycle_text.empty())
            throw std::invalid_argument(
                "spin-check: give a catalog fibration name, or both --genus and --cycles");
        surface = SurfaceModel(genus);
        std::size_t start = 0;
        while (start <= cycle_text.size()) {
            const std::size_t split = cycle_text.find(';', start);
            const std::string token =
                cycle_text.substr(start, split == std::string::npos ? split : split - start);
            if (!token.empty())
                cycles.push_back(parse_curve(surface, token));
            if (split == std::string::npos)
                break;
            start = split + 1;
        }
        if (cycles.empty())
            throw std::invalid_argument("spin-check: --cycles lists no classes");
    }

    const auto solutions = find_spin_form(surface, cycles);
    if (!solutions) {
        std::cout << "spin over disk: no (no quadratic form evaluates to 1 on every cycle)\n";
        return 1;
    }
    std::cout << "spin over disk: yes\n";
    if (solutions->dimension() == 0)
        std::cout << "solutions: unique\n";
    else
        std::cout << "solutions: 2^" << solutions->dimension() << " (dimension "
                  << solutions->dimension() << ")\n";
    std::cout << "witness: " << solutions->particular.describe() << '\n';
    if (lf) {
        const SpinTriState closed = spin_status_closed(*lf);
        std::cout << "closed verdict: " << to_string(closed.state) << " (" << closed.provenance
                  << ")\n";
    }
    return 0;
}

int run_verify(const std::string& name)
{
    const LefschetzFibration lf = catalog_fibration(name);
    const RelationReport relation = verify_relation_mod2(lf.monodromy);
    std::cout << "fibration: " << lf.name << " (fiber genus " << lf.fiber_genus << ", "
              << lf.monodromy.twists.size() << " twists)\n";
    std::cout << "relation (mod 2): " << (relation.passes ? "pass" : "FAIL") << '\n';
    std::cout << "note: " << relation.caveat << '\n';
    std::cout << "e = " << euler_char(lf) << '\n';
    std::cout << "sigma = " << endo_signature(lf, /*hyperelliptic_asserted=*/true)
              << " (hyperelliptic)\n";
    const SpinTriState closed = spin_status_closed(lf);
    std::cout << "closed spin status: " << to_string(closed.state) << " (" << closed.provenance
              << ")\n";
    return relation.passes ? 0 : 1;
}

int run_recipe(const std::string& path)
{
    const RecipeOutcome outcome = evaluate_recipe_file(path);
    const ManifoldDescriptor& d = outcome.result;
    std::cout << "result: " << d.name << '\n';
    std::cout << "e = " << d.e << ", sigma = " << d.sigma << ", b1 = " << d.b1 << '\n';
    std::cout << "pi1: " << to_string(d.pi1.kind)
              << (d.pi1.tag.empty() ? "" : " (" + d.pi1.tag + ")") << '\n';
    std::cout << "spin: " << to_string(d.spin.state)
              << (d.spin.provenance.empty() ? "" : " (" + d.spin.provenance + ")") << '\n';
    std::cout << "symplectic: " << (d.symplectic ? "yes" : "not known") << '\n';
    std::cout << "irreducible: " << (d.irreducible.known ? d.irreducible.reason : "not known")
              << '\n';
    if (outcome.form) {
        std::cout << "normalized even form: " << outcome.form->e8_count << "(-E8) + "
                  << outcome.form->h_count << " H"
                  << (outcome.form->orientation_flipped ? " (orientation reversed)" : "")
                  << '\n';
    }
    if (outcome.w2)
        std::cout << "w2-type: " << to_string(*outcome.w2) << '\n';
    for (const auto& note : d.notes)
        std::cout << "note: " << note << '\n';
    if (outcome.has_expect) {
        if (outcome.verified()) {
            std::cout << "expect: verified\n";
        } else {
            for (const auto& failure : outcome.expect_failures)
                std::cout << "expect: MISMATCH: " << failure << '\n';
            return 1;
        }
    }
    return 0;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("geography: cannot write '" + path + "'");
    out << content;
}

int run_geography(const std::string& w2_type, const std::string& parity_text,
                  const std::vector<long long>& bounds_list, const std::string& format,
                  std::string out_prefix, bool audit)
{
    if (audit) {
        bool all_pass = true;
        for (const auto& report : audit_all_families()) {
            std::cout << "audit " << report.family << ": "
                      << (report.passes ? "pass" : "FAIL") << '\n';
            for (const auto& flag : report.flags)
                std::cout << "  flagged: " << flag << '\n';
            for (const auto& mismatch : report.mismatches)
                std::cout << "  mismatch: " << mismatch << '\n';
            all_pass = all_pass && report.passes;
        }
        return all_pass ? 0 : 1;
    }

    const W2Plane plane = (w2_type == "ii") ? W2Plane::TypeII : W2Plane::TypeIII;
    PlaneParity parity = PlaneParity::Both;
    if (parity_text == "even")
        parity = PlaneParity::Even;
    else if (parity_text == "odd")
        parity = PlaneParity::Odd;

    if (bounds_list.size() != 2)
        throw std::invalid_argument("geography: --bounds needs two values, e.g. 60,130");
    const Bounds bounds{bounds_list[0], bounds_list[1]};
    const CoverageReport report = missing_points(plane, bounds, parity);

    std::cout << "w2-type " << to_string(plane) << ", parity " << to_string(parity)
              << ", bounds (" << bounds.a_max << ", " << bounds.b_max << ")\n";
    std::cout << "covered: " << report.covered.size() << '\n';
    if (!report.flagged.empty()) {
        std::cout << "missing: " << report.missing_count_raw() << " ("
                  << report.missing_count_adjusted() << " excluding flagged (0,0))\n";
    } else {
        std::cout << "missing: " << report.missing_count_raw() << '\n';
    }
    for (const auto& note : report.notes)
        std::cout << "note: " << note << '\n';

    if (out_prefix.empty())
        out_prefix = "geography-" + w2_type + "-" + parity_text;
    if (format == "csv" || format == "both") {
        write_file(out_prefix + ".csv", to_csv(report));
        std::cout << "wrote " << out_prefix << ".csv\n";
    }
    if (format == "svg" || format == "both") {
        write_file(out_prefix + ".svg", to_svg(report));
        std::cout << "wrote " << out_prefix << ".svg\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"spingeo: spin structures, fibration invariants, and form geography"};
    app.require_subcommand(1);

    std::string spin_name;
    int spin_genus = 0;
    std::string spin_cycles;
    auto* spin = app.add_subcommand(
        "spin-check", "solve for a quadratic form evaluating to 1 on every vanishing cycle");
    spin->add_option("fibration", spin_name, "catalog fibration (ChainG2, Xg(3), E(2), ...)");
    spin->add_option("--genus", spin_genus, "inline mode: fiber genus");
    spin->add_option("--cycles", spin_cycles,
                     "inline mode: semicolon-separated classes, e.g. \"x1;y1+x2\"");

    std::vector<std::string> verify_name;
    auto* verify = app.add_subcommand("verify", "check a catalog fibration's relation and "
                                                "invariants");
    verify->add_option("name", verify_name, "catalog fibration, e.g. ChainG4 or Xg 3")
        ->required()
        ->expected(1, 2);

    std::string recipe_path;
    auto* recipe = app.add_subcommand("recipe", "evaluate a JSON construction recipe");
    recipe->add_option("path", recipe_path, "recipe document")->required();

    std::string geo_type;
    std::string geo_parity = "both";
    std::vector<long long> geo_bounds{60, 130};
    std::string geo_format = "csv";
    std::string geo_out;
    bool geo_audit = false;
    auto* geography = app.add_subcommand("geography", "coverage maps and family audits");
    geography->add_option("--w2-type", geo_type, "plane: ii or iii")
        ->check(CLI::IsMember({"ii", "iii"}));
    geography->add_option("--parity", geo_parity, "H-count parity filter")
        ->check(CLI::IsMember({"even", "odd", "both"}));
    geography->add_option("--bounds", geo_bounds, "a,b enumeration bounds (>= 60,130)")
        ->delimiter(',')
        ->expected(1, 2);
    geography->add_option("--format", geo_format, "csv, svg, or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    geography->add_option("--out", geo_out, "output path prefix");
    geography->add_flag("--audit", geo_audit, "re-derive every family formula and report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& parse_error) {
        app.exit(parse_error);
        return 2;
    }

    try {
        if (spin->parsed())
            return run_spin_check(spin_name, spin_genus, spin_cycles);
        if (verify->parsed()) {
            std::string joined;
            for (const auto& part : verify_name)
                joined += (joined.empty() ? "" : " ") + part;
            return run_verify(joined);
        }
        if (recipe->parsed())
            return run_recipe(recipe_path);
        if (geography->parsed()) {
            if (geo_type.empty() && !geo_audit)
                throw std::invalid_argument("geography: --w2-type is required");
            return run_geography(geo_type, geo_parity, geo_bounds, geo_format, geo_out,
                                 geo_audit);
        }
    } catch (const ConsistencyError& err) {
        std::cerr << "consistency error: " << err.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
