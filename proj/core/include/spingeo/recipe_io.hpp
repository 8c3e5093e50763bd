#pragma once

#include "spingeo/calculus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spingeo {

// Outcome of evaluating a JSON construction recipe. The result is the value
// of the last step (or the single block when there are no steps). The
// normalized form is attached when the final manifold admits one; the
// w2-type comes from the last Z2-construction step, if any.
struct RecipeOutcome {
    ManifoldDescriptor result;
    std::optional<EvenForm> form;
    std::optional<W2Type> w2;
    bool has_expect = false;
    std::vector<std::string> expect_failures;  // empty = all expectations met

    bool verified() const { return expect_failures.empty(); }
};

// Evaluates a recipe document:
//   {
//     "blocks": { "<name>": { "type": "Mns", "n": 1, "s": 0 }, ... },
//     "steps":  [ { "op": "fiber_sum", "left": "...", "right": "...",
//                   "genus": 1, "flags": ["spin-gluing-chosen"], "as": "sum" },
//                 { "op": "z2_construct" | "double" | "quotient",
//                   "operand": "...", "genus": 2, "flags": [...], "as": "..." },
//                 { "op": "torus_surgery", "operand": "...", "flags": [...] },
//                 { "op": "assert", "operand": "...", "pi1": "trivial",
//                   "spin": "spin", "symplectic": true, "note": "..." } ],
//     "expect": { "e": 24, "sigma": -16, "a": 2, "b": 5,
//                 "spin": "spin", "pi1": "Z2" }
//   }
// Malformed documents raise std::invalid_argument; theorem-gate violations
// during evaluation raise ConsistencyError.
RecipeOutcome evaluate_recipe(const std::string& json_text);
RecipeOutcome evaluate_recipe_file(const std::string& path);

// The flag strings accepted in "flags" arrays, mapped onto OpFlags.
std::vector<std::string> recipe_flag_names();

}  // namespace spingeo
