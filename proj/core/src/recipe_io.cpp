#include "spingeo/recipe_io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace spingeo {

namespace {

using nlohmann::json;

OpFlags parse_flags(const json& step)
{
    OpFlags flags;
    if (!step.contains("flags"))
        return flags;
    const json& arr = step.at("flags");
    if (!arr.is_array())
        throw std::invalid_argument("recipe: \"flags\" must be an array of strings");
    for (const auto& item : arr) {
        if (!item.is_string())
            throw std::invalid_argument("recipe: \"flags\" must be an array of strings");
        const std::string name = item.get<std::string>();
        if (name == "complement-simply-connected")
            flags.complement_simply_connected = true;
        else if (name == "spin-gluing-chosen")
            flags.spin_gluing_chosen = true;
        else if (name == "dual-torus-present")
            flags.dual_torus_present = true;
        else if (name == "minimal-cover")
            flags.minimal_cover = true;
        else if (name == "complement-spin")
            flags.complement_spin = true;
        else if (name == "odd-square-nonorientable")
            flags.odd_square_nonorientable = true;
        else if (name == "luttinger")
            flags.luttinger = true;
        else
            throw std::invalid_argument("recipe: unknown flag '" + name + "'");
    }
    return flags;
}

Pi1 parse_pi1(const std::string& text)
{
    if (text == "trivial")
        return Pi1::trivial();
    if (text == "Z2")
        return Pi1::z2();
    if (text == "unknown")
        return Pi1::unknown();
    throw std::invalid_argument("recipe: unknown pi1 value '" + text + "' (use trivial, Z2, "
                                "or unknown)");
}

SpinState parse_spin(const std::string& text)
{
    if (text == "spin")
        return SpinState::Spin;
    if (text == "non-spin")
        return SpinState::NonSpin;
    if (text == "unknown")
        return SpinState::Unknown;
    throw std::invalid_argument("recipe: unknown spin value '" + text + "' (use spin, "
                                "non-spin, or unknown)");
}

long long require_int(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.contains(key))
        throw std::invalid_argument("recipe: " + where + " needs \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw std::invalid_argument("recipe: " + where + " field \"" + key +
                                    "\" must be an integer");
    return v.get<long long>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.contains(key))
        throw std::invalid_argument("recipe: " + where + " needs \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_string())
        throw std::invalid_argument("recipe: " + where + " field \"" + key +
                                    "\" must be a string");
    return v.get<std::string>();
}

struct Environment {
    std::map<std::string, ManifoldDescriptor> values;
    std::optional<W2Type> last_w2;

    const ManifoldDescriptor& lookup(const std::string& name) const
    {
        const auto it = values.find(name);
        if (it == values.end())
            throw std::invalid_argument("recipe: unknown operand '" + name + "'");
        return it->second;
    }
};

ManifoldDescriptor parse_block(const std::string& name, const json& spec)
{
    if (!spec.is_object())
        throw std::invalid_argument("recipe: block '" + name + "' must be an object");
    const std::string type = require_string(spec, "type", "block '" + name + "'");
    std::map<std::string, long long> params;
    for (const auto& [key, value] : spec.items()) {
        if (key == "type")
            continue;
        if (!value.is_number_integer())
            throw std::invalid_argument("recipe: block '" + name + "' parameter '" + key +
                                        "' must be an integer");
        params[key] = value.get<long long>();
    }
    ManifoldDescriptor d = catalog_block(type, params);
    d.notes.push_back("recipe block '" + name + "'");
    return d;
}

ManifoldDescriptor apply_assert(const ManifoldDescriptor& input, const json& step)
{
    ManifoldDescriptor d = input;
    if (step.contains("pi1"))
        d.pi1 = parse_pi1(require_string(step, "pi1", "assert step"));
    if (step.contains("spin"))
        d.spin = {parse_spin(require_string(step, "spin", "assert step")),
                  "asserted by the recipe"};
    if (step.contains("symplectic")) {
        if (!step.at("symplectic").is_boolean())
            throw std::invalid_argument("recipe: assert \"symplectic\" must be a boolean");
        d.symplectic = step.at("symplectic").get<bool>();
    }
    if (step.contains("irreducible"))
        d.irreducible =
            Irreducibility::yes(require_string(step, "irreducible", "assert step"));
    if (step.contains("note"))
        d.notes.push_back(require_string(step, "note", "assert step"));
    d.notes.push_back("recipe assertion applied");
    return make_descriptor(std::move(d));  // re-runs the consistency gates
}

void run_step(Environment& env, const json& step, std::size_t index)
{
    const std::string where = "step " + std::to_string(index + 1);
    if (!step.is_object())
        throw std::invalid_argument("recipe: " + where + " must be an object");
    const std::string op = require_string(step, "op", where);
    const OpFlags flags = parse_flags(step);

    ManifoldDescriptor result;
    if (op == "fiber_sum") {
        const auto& left = env.lookup(require_string(step, "left", where));
        const auto& right = env.lookup(require_string(step, "right", where));
        result = fiber_sum(left, right, static_cast<int>(require_int(step, "genus", where)),
                           flags);
    } else if (op == "z2_construct") {
        const auto& operand = env.lookup(require_string(step, "operand", where));
        Z2Construction z = z2_construct_full(
            operand, static_cast<int>(require_int(step, "genus", where)), flags);
        env.last_w2 = z.w2;
        result = std::move(z.result);
    } else if (op == "double") {
        const auto& operand = env.lookup(require_string(step, "operand", where));
        result = z2_double(operand, static_cast<int>(require_int(step, "genus", where)),
                           flags);
    } else if (op == "quotient") {
        const auto& operand = env.lookup(require_string(step, "operand", where));
        result = z2_quotient(operand, static_cast<int>(require_int(step, "genus", where)));
    } else if (op == "torus_surgery") {
        const auto& operand = env.lookup(require_string(step, "operand", where));
        result = torus_surgery(operand, flags);
    } else if (op == "assert") {
        const auto& operand = env.lookup(require_string(step, "operand", where));
        result = apply_assert(operand, step);
    } else {
        throw std::invalid_argument("recipe: " + where + ": unknown op '" + op + "'");
    }

    const std::string as = step.contains("as") ? require_string(step, "as", where)
                                               : "step" + std::to_string(index + 1);
    env.values[as] = std::move(result);
    env.values["@last"] = env.values[as];
}

void check_expect(const json& expect, RecipeOutcome& outcome)
{
    if (!expect.is_object())
        throw std::invalid_argument("recipe: \"expect\" must be an object");
    outcome.has_expect = true;
    auto fail = [&outcome](const std::string& message) {
        outcome.expect_failures.push_back(message);
    };
    const ManifoldDescriptor& d = outcome.result;

    if (expect.contains("e")) {
        const long long want = require_int(expect, "e", "expect");
        if (d.e != want)
            fail("e = " + std::to_string(d.e) + ", expected " + std::to_string(want));
    }
    if (expect.contains("sigma")) {
        const long long want = require_int(expect, "sigma", "expect");
        if (d.sigma != want)
            fail("sigma = " + std::to_string(d.sigma) + ", expected " + std::to_string(want));
    }
    if (expect.contains("a") || expect.contains("b")) {
        if (!outcome.form) {
            fail("no normalized even form available to compare against a/b");
        } else {
            if (expect.contains("a")) {
                const long long want = require_int(expect, "a", "expect");
                if (outcome.form->e8_count != want)
                    fail("a = " + std::to_string(outcome.form->e8_count) + ", expected " +
                         std::to_string(want));
            }
            if (expect.contains("b")) {
                const long long want = require_int(expect, "b", "expect");
                if (outcome.form->h_count != want)
                    fail("b = " + std::to_string(outcome.form->h_count) + ", expected " +
                         std::to_string(want));
            }
        }
    }
    if (expect.contains("spin")) {
        const SpinState want = parse_spin(require_string(expect, "spin", "expect"));
        if (d.spin.state != want)
            fail(std::string("spin = ") + to_string(d.spin.state) + ", expected " +
                 to_string(want));
    }
    if (expect.contains("pi1")) {
        const Pi1 want = parse_pi1(require_string(expect, "pi1", "expect"));
        if (d.pi1.kind != want.kind)
            fail(std::string("pi1 = ") + to_string(d.pi1.kind) + ", expected " +
                 to_string(want.kind));
    }
}

}  // namespace

std::vector<std::string> recipe_flag_names()
{
    return {"complement-simply-connected",
            "spin-gluing-chosen",
            "dual-torus-present",
            "minimal-cover",
            "complement-spin",
            "odd-square-nonorientable",
            "luttinger"};
}

RecipeOutcome evaluate_recipe(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("recipe: invalid JSON: ") + err.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("recipe: the document must be a JSON object");

    Environment env;
    if (doc.contains("blocks")) {
        if (!doc.at("blocks").is_object())
            throw std::invalid_argument("recipe: \"blocks\" must be an object");
        for (const auto& [name, spec] : doc.at("blocks").items())
            env.values[name] = parse_block(name, spec);
    }

    std::size_t step_count = 0;
    if (doc.contains("steps")) {
        if (!doc.at("steps").is_array())
            throw std::invalid_argument("recipe: \"steps\" must be an array");
        for (const auto& step : doc.at("steps").items()) {
            run_step(env, step.value(), step_count);
            ++step_count;
        }
    }

    RecipeOutcome outcome;
    if (step_count > 0) {
        outcome.result = env.lookup("@last");
    } else {
        if (env.values.size() != 1)
            throw std::invalid_argument(
                "recipe: without steps the document must define exactly one block");
        outcome.result = env.values.begin()->second;
    }
    outcome.w2 = env.last_w2;
    if (outcome.result.b1 == 0 &&
        (outcome.result.pi1.kind == Pi1Kind::Trivial ||
         outcome.result.pi1.kind == Pi1Kind::Z2)) {
        try {
            outcome.form = form_from_invariants(outcome.result.e, outcome.result.sigma,
                                                outcome.result.pi1);
        } catch (const ConsistencyError&) {
            // odd intersection form; no normalized even form to attach
        }
    }

    if (doc.contains("expect"))
        check_expect(doc.at("expect"), outcome);
    return outcome;
}

RecipeOutcome evaluate_recipe_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("recipe: cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return evaluate_recipe(buffer.str());
}

}  // namespace spingeo
