#include "spingeo/spinforms.hpp"

#include <stdexcept>

namespace spingeo {

QuadraticForm::QuadraticForm(SurfaceModel surface, BitVector basis_values)
    : surface_(surface), values_(std::move(basis_values))
{
    if (values_.size() != surface_.h1_dim())
        throw std::invalid_argument("QuadraticForm: need one value per basis class");
}

int QuadraticForm::evaluate(const BitVector& v) const
{
    if (v.size() != values_.size())
        throw std::invalid_argument("QuadraticForm::evaluate: dimension mismatch");
    int acc = values_.dot(v);
    // cross terms: <e_i, e_j> = 1 only for symplectic pairs (x_t, y_t)
    for (std::size_t t = 0; t < v.size() / 2; ++t)
        acc ^= v.get(2 * t) & v.get(2 * t + 1);
    return acc;
}

int QuadraticForm::evaluate(const CurveClass& c) const
{
    if (!(c.surface == surface_))
        throw std::invalid_argument("QuadraticForm::evaluate: cycle lives on a different surface");
    return evaluate(c.vec);
}

std::string QuadraticForm::describe() const
{
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!out.empty())
            out += ", ";
        out += "q(" + surface_.basis_label(i) + ")=" + (values_.get(i) ? "1" : "0");
    }
    return out;
}

const char* to_string(SpinState s)
{
    switch (s) {
    case SpinState::Spin:
        return "spin";
    case SpinState::NonSpin:
        return "non-spin";
    case SpinState::Unknown:
        return "unknown";
    }
    return "unknown";
}

const char* to_string(W2Type t)
{
    switch (t) {
    case W2Type::TypeI:
        return "(i)";
    case W2Type::TypeII:
        return "(ii)";
    case W2Type::TypeIII:
        return "(iii)";
    case W2Type::Unknown:
        return "unknown";
    }
    return "unknown";
}

bool SpinFormSolutions::contains(const QuadraticForm& q) const
{
    if (!(q.surface() == particular.surface()))
        return false;
    AffineSolution sol{particular.basis_values(), nullspace_basis};
    return sol.contains(q.basis_values());
}

std::optional<SpinFormSolutions> find_spin_form(const SurfaceModel& surface,
                                                const std::vector<CurveClass>& cycles)
{
    for (const CurveClass& c : cycles)
        if (!(c.surface == surface))
            throw std::invalid_argument("find_spin_form: cycles on mismatched surfaces");

    const std::size_t n = surface.h1_dim();
    BitMatrix a(cycles.size(), n);
    BitVector rhs(cycles.size());
    for (std::size_t r = 0; r < cycles.size(); ++r) {
        const BitVector& c = cycles[r].vec;
        for (std::size_t i = 0; i < n; ++i)
            if (c.get(i))
                a.set(r, i, true);
        int constant = 0;
        for (std::size_t t = 0; t < n / 2; ++t)
            constant ^= c.get(2 * t) & c.get(2 * t + 1);
        rhs.set(r, (1 ^ constant) == 1);
    }

    std::optional<AffineSolution> sol = solve_affine(a, rhs);
    if (!sol)
        return std::nullopt;
    SpinFormSolutions out;
    out.particular = QuadraticForm(surface, std::move(sol->particular));
    out.nullspace_basis = std::move(sol->nullspace_basis);
    return out;
}

std::optional<SpinFormSolutions> find_spin_form(const std::vector<CurveClass>& cycles)
{
    if (cycles.empty())
        throw std::invalid_argument("find_spin_form: no cycles; pass the surface explicitly");
    return find_spin_form(cycles.front().surface, cycles);
}

bool mod2_even_type(const BitMatrix& m)
{
    if (!m.is_symmetric())
        throw std::invalid_argument("mod2_even_type: matrix must be symmetric");
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.get(i, i))
            return false;
    return true;
}

bool rokhlin_gate(long long sigma)
{
    return sigma % 16 == 0;
}

W2Type classify_w2(const SpinTriState& quotient, const SpinTriState& cover)
{
    if (quotient.state == SpinState::Spin && cover.state == SpinState::NonSpin)
        throw std::invalid_argument(
            "classify_w2: a cover of a spin manifold is spin; (Spin, NonSpin) is impossible");
    if (quotient.state == SpinState::Unknown || cover.state == SpinState::Unknown)
        return W2Type::Unknown;
    if (quotient.state == SpinState::Spin)
        return W2Type::TypeII;
    return cover.state == SpinState::Spin ? W2Type::TypeIII : W2Type::TypeI;
}

}  // namespace spingeo
