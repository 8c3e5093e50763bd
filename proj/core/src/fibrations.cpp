#include "spingeo/fibrations.hpp"

#include <stdexcept>

namespace spingeo {

BitMatrix total_h1_action(const Factorization& f)
{
    for (const CurveClass& c : f.twists)
        if (!(c.surface == f.surface))
            throw std::invalid_argument("total_h1_action: twist on a different surface");
    BitMatrix total = BitMatrix::identity(f.surface.h1_dim());
    for (const CurveClass& c : f.twists)
        total = twist_matrix(c) * total;  // first twist applied first
    return total;
}

RelationReport verify_relation_mod2(const Factorization& f)
{
    RelationReport report;
    report.passes = total_h1_action(f).is_identity();
    report.caveat =
        "mod-2 homology check only: passing is necessary for the claimed relation, "
        "not sufficient";
    return report;
}

Factorization hurwitz_move(const Factorization& f, std::size_t position, HurwitzDirection dir)
{
    if (position < 1 || position >= f.twists.size())
        throw std::out_of_range("hurwitz_move: position must satisfy 1 <= i < length");
    Factorization out = f;
    CurveClass& a = out.twists[position - 1];
    CurveClass& b = out.twists[position];
    const int p = pairing(a, b);
    if (dir == HurwitzDirection::Right) {
        // (a, b) -> (b, a + <a,b> b)
        CurveClass moved = a;
        if (p)
            moved.vec += b.vec;
        moved.name = a.name.empty() ? "" : a.name + "'";
        a = b;
        b = std::move(moved);
    } else {
        // (a, b) -> (b + <a,b> a, a)
        CurveClass moved = b;
        if (p)
            moved.vec += a.vec;
        moved.name = b.name.empty() ? "" : b.name + "'";
        b = a;
        a = std::move(moved);
    }
    return out;
}

long long euler_char(const LefschetzFibration& lf)
{
    const long long g = lf.fiber_genus;
    const long long n = static_cast<long long>(lf.monodromy.twists.size());
    switch (lf.base.kind) {
    case FibrationBase::Disk:
        return (2 - 2 * g) + n;
    case FibrationBase::Sphere:
        return (2 - 2 * g) * 2 + n;
    case FibrationBase::Closed:
        return (2 - 2 * g) * (2 - 2 * static_cast<long long>(lf.base.genus)) + n;
    }
    throw std::logic_error("euler_char: bad base kind");
}

long long endo_signature(const LefschetzFibration& lf, bool hyperelliptic_asserted)
{
    if (!hyperelliptic_asserted)
        throw std::invalid_argument(
            "endo_signature: requires the hyperelliptic assertion for the fibration");
    if (lf.base.kind != FibrationBase::Sphere)
        throw std::invalid_argument("endo_signature: base must be the sphere");
    for (const CurveClass& c : lf.monodromy.twists)
        if (c.separating())
            throw std::invalid_argument(
                "endo_signature: separating vanishing cycles are not supported");
    const long long n0 = static_cast<long long>(lf.monodromy.twists.size());
    const long long g = lf.fiber_genus;
    const long long numerator = n0 * (g + 1);
    if (numerator % (2 * g + 1) != 0)
        throw std::invalid_argument(
            "endo_signature: n0 (g+1) not divisible by 2g+1; no such hyperelliptic fibration");
    return -numerator / (2 * g + 1);
}

SpinTriState spin_status_closed(const LefschetzFibration& lf)
{
    if (lf.base.kind != FibrationBase::Sphere)
        throw std::invalid_argument("spin_status_closed: base must be the sphere");

    for (int s : lf.sections)
        if (s % 2 != 0)
            return {SpinState::NonSpin,
                    "section of odd self-intersection " + std::to_string(s) +
                        " (Wu formula: w2 evaluates to its square)"};

    bool has_even_section = !lf.sections.empty();
    if (has_even_section) {
        auto forms = find_spin_form(lf.monodromy.surface, lf.monodromy.twists);
        if (forms) {
            return {SpinState::Spin,
                    "quadratic form evaluating to 1 on every vanishing cycle exists and a "
                    "section of even square is an even geometric dual of the fiber"};
        }
        return {SpinState::Unknown,
                "no quadratic form evaluates to 1 on every vanishing cycle; the fiber "
                "complement is not spin"};
    }
    return {SpinState::Unknown, "no section recorded; no geometric dual available"};
}

LefschetzFibration double_along_fiber(const LefschetzFibration& lf)
{
    if (lf.base.kind != FibrationBase::Sphere)
        throw std::invalid_argument("double_along_fiber: base must be the sphere");
    if (lf.sections.empty())
        throw std::invalid_argument("double_along_fiber: needs at least one section");

    LefschetzFibration out;
    out.name = lf.name + "-double";
    out.fiber_genus = lf.fiber_genus;
    out.base = FibrationBase::sphere();
    out.monodromy.surface = lf.monodromy.surface;
    out.monodromy.target = ClaimedTarget::identity_closed();
    // the gluing reflection acts trivially on mod-2 homology, so the
    // reflected half of the word has the same classes
    out.monodromy.twists = lf.monodromy.twists;
    out.monodromy.twists.insert(out.monodromy.twists.end(), lf.monodromy.twists.begin(),
                                lf.monodromy.twists.end());
    out.sections.reserve(lf.sections.size());
    for (int s : lf.sections)
        out.sections.push_back(2 * s);
    return out;
}

namespace {

// word (c_1 ... c_k)^power over the given chain prefix
std::vector<CurveClass> chain_word(int genus, std::size_t chain_length, int power)
{
    std::vector<CurveClass> chain = chain_classes(genus);
    if (chain_length > chain.size())
        throw std::logic_error("chain_word: prefix longer than the chain");
    std::vector<CurveClass> word;
    word.reserve(chain_length * static_cast<std::size_t>(power));
    for (int rep = 0; rep < power; ++rep)
        for (std::size_t i = 0; i < chain_length; ++i)
            word.push_back(chain[i]);
    return word;
}

LefschetzFibration make_chain_fibration(const std::string& name, int genus,
                                        std::size_t chain_length, int power,
                                        std::vector<int> sections)
{
    LefschetzFibration lf;
    lf.name = name;
    lf.fiber_genus = genus;
    lf.base = FibrationBase::sphere();
    lf.monodromy.surface = SurfaceModel(genus);
    lf.monodromy.twists = chain_word(genus, chain_length, power);
    lf.monodromy.target = ClaimedTarget::identity_closed();
    lf.sections = std::move(sections);
    return lf;
}

LefschetzFibration make_xg(int g)
{
    if (g < 2)
        throw std::invalid_argument("catalog_fibration: Xg needs g >= 2");
    std::vector<CurveClass> chain = chain_classes(g);
    // h = t_{c_1} ... t_{c_{2g+1}} t_{c_{2g+1}} ... t_{c_1}; word is h^2
    std::vector<CurveClass> half;
    half.reserve(2 * chain.size());
    for (const CurveClass& c : chain)
        half.push_back(c);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        half.push_back(*it);

    LefschetzFibration lf;
    lf.name = "Xg(" + std::to_string(g) + ")";
    lf.fiber_genus = g;
    lf.base = FibrationBase::sphere();
    lf.monodromy.surface = SurfaceModel(g);
    lf.monodromy.twists = half;
    lf.monodromy.twists.insert(lf.monodromy.twists.end(), half.begin(), half.end());
    lf.monodromy.target = ClaimedTarget::identity_closed();
    lf.sections.assign(4 * static_cast<std::size_t>(g) + 4, -1);
    return lf;
}

LefschetzFibration make_elliptic(int n)
{
    if (n < 1)
        throw std::invalid_argument("catalog_fibration: E(n) needs n >= 1");
    SurfaceModel torus(1);
    CurveClass a = make_curve(torus, torus.x(1), "x1");
    CurveClass b = make_curve(torus, torus.y(1), "y1");

    LefschetzFibration lf;
    lf.name = "E(" + std::to_string(n) + ")";
    lf.fiber_genus = 1;
    lf.base = FibrationBase::sphere();
    lf.monodromy.surface = torus;
    lf.monodromy.twists.reserve(12 * static_cast<std::size_t>(n));
    for (int i = 0; i < 6 * n; ++i) {
        lf.monodromy.twists.push_back(a);
        lf.monodromy.twists.push_back(b);
    }
    lf.monodromy.target = ClaimedTarget::identity_closed();
    lf.sections = {-n};
    return lf;
}

// accepts "Name", "Name(k)", "Name k"
bool split_param(const std::string& text, std::string& head, long long& param, bool& has_param)
{
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '\t')
            t += ch;
        else if (!t.empty() && t.back() != '(')
            t += '(';  // "Xg 3" -> "Xg(3"
    if (t.empty())
        return false;
    auto open = t.find('(');
    if (open == std::string::npos) {
        head = t;
        has_param = false;
        return true;
    }
    head = t.substr(0, open);
    std::string num = t.substr(open + 1);
    if (!num.empty() && num.back() == ')')
        num.pop_back();
    if (num.empty()) {
        has_param = false;
        return true;
    }
    param = 0;
    for (char ch : num) {
        if (ch < '0' || ch > '9')
            return false;
        param = param * 10 + (ch - '0');
    }
    has_param = true;
    return true;
}

}  // namespace

LefschetzFibration catalog_fibration(const std::string& name)
{
    std::string head;
    long long param = 0;
    bool has_param = false;
    if (!split_param(name, head, param, has_param))
        throw std::invalid_argument("catalog_fibration: cannot parse name '" + name + "'");

    if (head == "ChainG2") {
        if (has_param)
            throw std::invalid_argument("catalog_fibration: ChainG2 takes no parameter");
        return make_chain_fibration("ChainG2", 2, 4, 10, {-1});
    }
    if (head == "ChainG3") {
        if (has_param)
            throw std::invalid_argument("catalog_fibration: ChainG3 takes no parameter");
        return make_chain_fibration("ChainG3", 3, 7, 8, {-1, -1});
    }
    if (head == "ChainG4") {
        if (has_param)
            throw std::invalid_argument("catalog_fibration: ChainG4 takes no parameter");
        return make_chain_fibration("ChainG4", 4, 8, 18, {-1});
    }
    if (head == "Xg") {
        if (!has_param)
            throw std::invalid_argument("catalog_fibration: Xg needs a genus, e.g. Xg(3)");
        return make_xg(static_cast<int>(param));
    }
    if (head == "E") {
        if (!has_param)
            throw std::invalid_argument("catalog_fibration: E needs a parameter, e.g. E(2)");
        return make_elliptic(static_cast<int>(param));
    }
    throw std::invalid_argument("catalog_fibration: unknown fibration '" + name + "'");
}

std::vector<std::string> catalog_fibration_names()
{
    return {"ChainG2", "ChainG3", "ChainG4", "Xg(g>=2)", "E(n>=1)"};
}

}  // namespace spingeo
