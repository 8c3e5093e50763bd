#include "spingeo/calculus.hpp"

#include <numeric>

namespace spingeo {

const char* to_string(Pi1Kind k)
{
    switch (k) {
    case Pi1Kind::Trivial:
        return "trivial";
    case Pi1Kind::Z2:
        return "Z2";
    case Pi1Kind::Other:
        return "other";
    case Pi1Kind::Unknown:
        return "unknown";
    }
    return "unknown";
}

ManifoldDescriptor make_descriptor(ManifoldDescriptor d)
{
    if (d.b1 < 0)
        throw std::invalid_argument("make_descriptor: b1 must be non-negative");
    const bool small_pi1 = d.pi1.kind == Pi1Kind::Trivial || d.pi1.kind == Pi1Kind::Z2;
    if (d.spin.state == SpinState::Spin && small_pi1 && !rokhlin_gate(d.sigma))
        throw ConsistencyError("descriptor '" + d.name + "': spin with pi1 " +
                               to_string(d.pi1.kind) + " requires sigma = 0 (mod 16); got " +
                               std::to_string(d.sigma));
    if (d.b1 == 0 && ((d.e - d.sigma) % 2) != 0)
        throw ConsistencyError("descriptor '" + d.name +
                               "': with b1 = 0, e and sigma must have equal parity (e = " +
                               std::to_string(d.e) + ", sigma = " + std::to_string(d.sigma) +
                               ")");
    return d;
}

namespace {

void note_flags(ManifoldDescriptor& d, const OpFlags& flags)
{
    if (flags.complement_simply_connected)
        d.notes.push_back("asserted: surface complement simply connected");
    if (flags.spin_gluing_chosen)
        d.notes.push_back("asserted: gluing chosen to preserve the spin structure");
    if (flags.dual_torus_present)
        d.notes.push_back("asserted: surgered torus has a dual torus");
    if (flags.minimal_cover)
        d.notes.push_back("asserted: universal cover is minimal symplectic");
    if (flags.complement_spin)
        d.notes.push_back("asserted: surface complement is spin");
    if (flags.odd_square_nonorientable)
        d.notes.push_back("recorded: contains a nonorientable surface of odd square");
    if (flags.luttinger)
        d.notes.push_back("asserted: 1/1 surgery on a Lagrangian torus");
    if (flags.assert_pi1)
        d.notes.push_back(std::string("asserted: pi1 ") + to_string(flags.assert_pi1->kind));
}

}  // namespace

ManifoldDescriptor fiber_sum(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2,
                             int genus, const OpFlags& flags)
{
    if (genus < 0)
        throw std::invalid_argument("fiber_sum: genus must be non-negative");

    ManifoldDescriptor out;
    out.name = d1.name + " #_" + std::to_string(genus) + " " + d2.name;
    out.e = d1.e + d2.e + 4 * static_cast<long long>(genus) - 4;
    out.sigma = d1.sigma + d2.sigma;
    out.b1 = 0;
    out.pi1 = flags.assert_pi1.value_or(Pi1::unknown());
    if (d1.spin.state == SpinState::Spin && d2.spin.state == SpinState::Spin &&
        flags.spin_gluing_chosen) {
        out.spin = {SpinState::Spin, "fiber sum of spin pieces with a spin-preserving gluing"};
    } else {
        out.spin = {SpinState::Unknown, "fiber sum does not determine the spin status"};
    }
    out.symplectic = d1.symplectic && d2.symplectic;
    out.irreducible = Irreducibility::unknown();
    note_flags(out, flags);
    return make_descriptor(std::move(out));
}

ManifoldDescriptor z2_double(const ManifoldDescriptor& d, int genus, const OpFlags& flags)
{
    if (genus < 0)
        throw std::invalid_argument("z2_double: genus must be non-negative");
    ManifoldDescriptor out;
    out.name = "double(" + d.name + ")";
    out.e = 2 * d.e + 4 * static_cast<long long>(genus) - 4;
    out.sigma = 2 * d.sigma;
    out.b1 = 0;
    out.pi1 = flags.complement_simply_connected ? Pi1::trivial()
                                                : flags.assert_pi1.value_or(Pi1::unknown());
    if (d.spin.state == SpinState::Spin)
        out.spin = {SpinState::Spin, "double of a spin manifold along a spin-compatible gluing"};
    else if (flags.complement_spin)
        out.spin = {SpinState::Spin, "double of a manifold with spin surface complement"};
    else
        out.spin = {SpinState::Unknown, "double: spin status of the pieces unknown"};
    out.symplectic = d.symplectic;
    out.irreducible = Irreducibility::unknown();
    note_flags(out, flags);
    return make_descriptor(std::move(out));
}

ManifoldDescriptor z2_quotient(const ManifoldDescriptor& d, int genus)
{
    if (genus < 0)
        throw std::invalid_argument("z2_quotient: genus must be non-negative");
    if (d.e % 2 != 0 || d.sigma % 2 != 0)
        throw ConsistencyError("z2_quotient: e and sigma must both be even (e = " +
                               std::to_string(d.e) + ", sigma = " + std::to_string(d.sigma) +
                               ")");
    ManifoldDescriptor out;
    out.name = "quotient(" + d.name + ")";
    out.e = d.e / 2;
    out.sigma = d.sigma / 2;
    out.b1 = 0;
    out.pi1 = d.pi1.kind == Pi1Kind::Trivial ? Pi1::z2() : Pi1::unknown();
    out.spin = {SpinState::Unknown, "free quotients do not inherit spin structures in general"};
    out.symplectic = false;
    out.irreducible = Irreducibility::unknown();
    return make_descriptor(std::move(out));
}

Z2Construction z2_construct_full(const ManifoldDescriptor& d, int genus, const OpFlags& flags)
{
    if (genus < 0)
        throw std::invalid_argument("z2_construct: genus must be non-negative");

    Z2Construction out;
    ManifoldDescriptor& q = out.result;
    q.name = "z2(" + d.name + ")";
    q.e = d.e + 2 * static_cast<long long>(genus) - 2;
    q.sigma = d.sigma;
    q.b1 = 0;
    q.pi1 = flags.complement_simply_connected ? Pi1::z2() : flags.assert_pi1.value_or(Pi1::unknown());

    // spin status of the double cover (the double along the surface)
    if (d.spin.state == SpinState::Spin)
        out.cover_spin = {SpinState::Spin, "cover is a double of a spin manifold"};
    else if (flags.complement_spin)
        out.cover_spin = {SpinState::Spin, "cover doubles a spin surface complement"};
    else
        out.cover_spin = {SpinState::Unknown, "cover spin status not determined"};

    const bool spin_branch = d.spin.state == SpinState::Spin && flags.complement_simply_connected;
    const bool nonspin_rokhlin = !rokhlin_gate(q.sigma);
    const bool nonspin_surface = flags.odd_square_nonorientable;
    if (spin_branch && (nonspin_rokhlin || nonspin_surface))
        throw ConsistencyError(
            "z2_construct: spin input with simply connected complement contradicts "
            "a non-spin certificate for the quotient");
    if (spin_branch)
        q.spin = {SpinState::Spin,
                  "Z2-construction of a spin manifold along a surface with simply connected "
                  "complement, with a spin-preserving gluing"};
    else if (nonspin_rokhlin)
        q.spin = {SpinState::NonSpin, "sigma = " + std::to_string(q.sigma) +
                                          " != 0 (mod 16) rules out spin (Rokhlin)"};
    else if (nonspin_surface)
        q.spin = {SpinState::NonSpin,
                  "contains a nonorientable surface of odd square (Wu formula)"};
    else
        q.spin = {SpinState::Unknown, "Z2-construction: spin status not determined"};

    q.symplectic = false;
    q.irreducible = flags.minimal_cover
                        ? Irreducibility::yes("finite pi1 with a minimal symplectic cover")
                        : Irreducibility::unknown();
    note_flags(q, flags);

    out.w2 = classify_w2(q.spin, out.cover_spin);
    q.notes.push_back(std::string("w2-type: ") + to_string(out.w2));
    q = make_descriptor(std::move(q));
    return out;
}

ManifoldDescriptor z2_construct(const ManifoldDescriptor& d, int genus, const OpFlags& flags)
{
    return z2_construct_full(d, genus, flags).result;
}

ManifoldDescriptor torus_surgery(const ManifoldDescriptor& d, const OpFlags& flags)
{
    ManifoldDescriptor out = d;
    out.name = "surgery(" + d.name + ")";
    out.notes.clear();
    out.pi1 = flags.assert_pi1.value_or(Pi1::unknown());
    if (d.spin.state == SpinState::Spin && flags.dual_torus_present)
        out.spin = {SpinState::Spin, "torus surgery with a dual torus preserves spin"};
    else
        out.spin = {SpinState::Unknown, "torus surgery: spin status not preserved in general"};
    out.symplectic = d.symplectic && flags.luttinger;
    out.irreducible = Irreducibility::unknown();
    note_flags(out, flags);
    return make_descriptor(std::move(out));
}

EvenForm form_from_invariants(long long e, long long sigma, const Pi1& pi1)
{
    if (pi1.kind != Pi1Kind::Trivial && pi1.kind != Pi1Kind::Z2)
        throw std::invalid_argument(
            "form_from_invariants: needs pi1 trivial or Z2 (with b1 = 0)");
    EvenForm form;
    long long canonical = sigma;
    if (canonical > 0) {
        canonical = -canonical;
        form.orientation_flipped = true;
    }
    if (canonical % 8 != 0)
        throw ConsistencyError("form_from_invariants: even forms need sigma = 0 (mod 8); got " +
                               std::to_string(sigma));
    form.e8_count = -canonical / 8;
    const long long twice_b = e - 2 + canonical;
    if (twice_b < 0 || twice_b % 2 != 0)
        throw ConsistencyError(
            "form_from_invariants: H-count (e - 2 + sigma)/2 must be a non-negative integer; "
            "e = " +
            std::to_string(e) + ", sigma = " + std::to_string(canonical));
    form.h_count = twice_b / 2;
    return form;
}

FormInvariants invariants_from_form(long long e8_count, long long h_count)
{
    if (e8_count < 0 || h_count < 0)
        throw std::invalid_argument("invariants_from_form: counts must be non-negative");
    FormInvariants inv;
    inv.e = 2 + 2 * h_count + 8 * e8_count;
    inv.sigma = -8 * e8_count;
    inv.b2_plus = h_count;
    inv.b2_minus = h_count + 8 * e8_count;
    inv.c1_squared = 4 + 4 * h_count - 8 * e8_count;
    const long long num = 1 + h_count;
    inv.chi_h = (num % 2 == 0) ? Rational{num / 2, 1} : Rational{num, 2};
    return inv;
}

EvenForm double_cover_form(long long a, long long b)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("double_cover_form: counts must be non-negative");
    return EvenForm{2 * a, 2 * b + 1, false};
}

ManifoldDescriptor descriptor_from_fibration(const LefschetzFibration& lf, Pi1 asserted_pi1,
                                             bool symplectic)
{
    ManifoldDescriptor d;
    d.name = lf.name;
    d.e = euler_char(lf);
    d.sigma = endo_signature(lf, /*hyperelliptic_asserted=*/true);
    d.b1 = 0;
    d.pi1 = std::move(asserted_pi1);
    d.spin = spin_status_closed(lf);
    d.symplectic = symplectic;
    d.irreducible = Irreducibility::unknown();
    d.notes.push_back("derived from the fibration " + lf.name +
                      " (hyperelliptic signature, Wu/quadratic-form spin status)");
    return make_descriptor(std::move(d));
}

namespace {

long long need_param(const std::map<std::string, long long>& params, const std::string& key,
                     const std::string& block)
{
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("catalog_block: " + block + " needs parameter '" + key + "'");
    return it->second;
}

void check_range(long long value, long long lower, const std::string& block,
                 const std::string& key)
{
    if (value < lower)
        throw std::invalid_argument("catalog_block: " + block + " needs " + key +
                                    " >= " + std::to_string(lower));
}

}  // namespace

ManifoldDescriptor catalog_block(const std::string& name,
                                 const std::map<std::string, long long>& params)
{
    if (name == "E") {
        const long long n = need_param(params, "n", name);
        check_range(n, 1, name, "n");
        ManifoldDescriptor d;
        d.name = "E(" + std::to_string(n) + ")";
        d.e = 12 * n;
        d.sigma = -8 * n;
        d.pi1 = Pi1::trivial();
        d.spin = (n % 2 == 0)
                     ? SpinTriState{SpinState::Spin, "E(n) is even exactly when n is even"}
                     : SpinTriState{SpinState::NonSpin, "E(n) is odd for odd n"};
        d.symplectic = true;
        d.irreducible = (n >= 2) ? Irreducibility::yes("minimal elliptic surface")
                                 : Irreducibility::unknown();
        return make_descriptor(std::move(d));
    }
    if (name == "E2K") {
        ManifoldDescriptor d;
        d.name = "E(2)_K";
        d.e = 24;
        d.sigma = -16;
        d.pi1 = Pi1::trivial();
        d.spin = {SpinState::Spin, "knot surgery preserves the even intersection form of E(2)"};
        d.symplectic = true;
        d.irreducible = Irreducibility::yes("minimal symplectic with b2+ > 1");
        d.notes.push_back("knot surgery on E(2) along a fibered genus-one knot");
        return make_descriptor(std::move(d));
    }
    if (name == "Mns") {
        const long long n = need_param(params, "n", name);
        const long long s = need_param(params, "s", name);
        check_range(n, 0, name, "n");
        check_range(s, 0, name, "s");
        ManifoldDescriptor d;
        d.name = "M_" + std::to_string(n) + "(" + std::to_string(s) + ")";
        d.e = 24 * s + 4 * n + 24;
        d.sigma = -16 * s - 16;
        d.pi1 = Pi1::trivial();
        d.spin = {SpinState::Spin, "spin building block (asserted by the construction)"};
        d.symplectic = true;
        d.irreducible = Irreducibility::unknown();
        return make_descriptor(std::move(d));
    }
    if (name == "W") {
        ManifoldDescriptor d;
        d.name = "W";
        d.e = 0;
        d.sigma = 0;
        d.pi1 = Pi1::other("not recorded by the construction");
        d.spin = {SpinState::Unknown, "not recorded"};
        d.symplectic = true;
        d.irreducible = Irreducibility::unknown();
        d.notes.push_back(
            "e = sigma = 0 inferred: W is a torus fiber sum of two copies of a product "
            "S1 x (fibered 3-manifold), each with e = 0 and sigma = 0");
        d.notes.push_back("only e and sigma of this block enter any recipe");
        return make_descriptor(std::move(d));
    }
    if (name == "Zn") {
        const long long n = need_param(params, "n", name);
        check_range(n, 5, name, "n");
        ManifoldDescriptor d;
        d.name = "Z_" + std::to_string(n);
        d.e = 4 * n + 4;
        d.sigma = 0;
        d.pi1 = Pi1::trivial();
        d.spin = {SpinState::Spin, "irreducible copy of #(2n+1) S2xS2 (even form)"};
        d.symplectic = true;
        d.irreducible = Irreducibility::yes("minimal symplectic, simply connected");
        return make_descriptor(std::move(d));
    }
    if (name == "Zpm") {
        const long long m = need_param(params, "m", name);
        check_range(m, 5, name, "m");
        ManifoldDescriptor d;
        d.name = "Z'_" + std::to_string(m);
        d.e = 4 * m + 4;
        d.sigma = 0;
        d.pi1 = Pi1::other("one Lagrangian surgery before becoming simply connected");
        d.spin = {SpinState::Spin, "same even block before the last Luttinger surgery"};
        d.symplectic = true;
        d.irreducible = Irreducibility::unknown();
        d.notes.push_back("torus surgeries preserve e and sigma, so e = 4m+4, sigma = 0");
        return make_descriptor(std::move(d));
    }
    if (name == "Zmn") {
        const long long m = need_param(params, "m", name);
        const long long n = need_param(params, "n", name);
        check_range(m, 1, name, "m");
        check_range(n, 5, name, "n");
        ManifoldDescriptor d;
        d.name = "Z_{" + std::to_string(m) + "," + std::to_string(n) + "}";
        d.e = 24 * m + 4 * n + 4;
        d.sigma = -16 * m;
        d.pi1 = Pi1::trivial();
        d.spin = {SpinState::Spin, "spin building block (asserted by the construction)"};
        d.symplectic = true;
        d.irreducible = Irreducibility::unknown();
        return make_descriptor(std::move(d));
    }
    if (name == "Uns") {
        const long long n = need_param(params, "n", name);
        const long long s = need_param(params, "s", name);
        check_range(n, 0, name, "n");
        check_range(s, 0, name, "s");
        ManifoldDescriptor d;
        d.name = "U_{" + std::to_string(n) + "," + std::to_string(s) + "}";
        d.e = 24 * s + 4 * n + 36;
        d.sigma = -16 * s - 24;
        d.pi1 = Pi1::trivial();
        d.spin = {SpinState::NonSpin, "sigma = 8 (mod 16) with small pi1 (Rokhlin)"};
        d.symplectic = true;
        d.irreducible = Irreducibility::unknown();
        return make_descriptor(std::move(d));
    }
    if (name == "L2" || name == "L2prime") {
        ManifoldDescriptor d;
        d.name = (name == "L2") ? "L2" : "L2'";
        d.e = 2;
        d.sigma = 0;
        d.pi1 = Pi1::z2();
        d.spin = (name == "L2")
                     ? SpinTriState{SpinState::Spin, "even mod-2 intersection form, pi1 = Z2"}
                     : SpinTriState{SpinState::NonSpin, "odd mod-2 intersection form"};
        d.symplectic = false;
        d.irreducible = Irreducibility::unknown();
        d.notes.push_back("rational homology sphere with pi1 = Z2 (so e = 2, sigma = 0)");
        return make_descriptor(std::move(d));
    }
    if (name == "ChainG2" || name == "ChainG3" || name == "ChainG4") {
        return descriptor_from_fibration(catalog_fibration(name), Pi1::trivial(), true);
    }
    if (name == "Xg") {
        const long long g = need_param(params, "g", name);
        check_range(g, 2, name, "g");
        return descriptor_from_fibration(catalog_fibration("Xg(" + std::to_string(g) + ")"),
                                         Pi1::trivial(), true);
    }
    throw std::invalid_argument("catalog_block: unknown block '" + name + "'");
}

BitMatrix l2_mod2_form()
{
    BitMatrix m(2, 2);
    m.set(0, 1, true);
    m.set(1, 0, true);
    return m;
}

BitMatrix l2_prime_mod2_form()
{
    BitMatrix m = l2_mod2_form();
    m.set(1, 1, true);
    return m;
}

}  // namespace spingeo
