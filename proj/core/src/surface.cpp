#include "spingeo/surface.hpp"

#include <stdexcept>

namespace spingeo {

SurfaceModel::SurfaceModel(int genus, int boundary_count)
    : genus_(genus), boundary_count_(boundary_count)
{
    if (genus < 0)
        throw std::invalid_argument("SurfaceModel: genus must be non-negative");
    if (boundary_count < 0)
        throw std::invalid_argument("SurfaceModel: boundary count must be non-negative");
}

BitVector SurfaceModel::x(int i) const
{
    if (i < 1 || i > genus_)
        throw std::out_of_range("SurfaceModel::x: index out of range");
    return BitVector::unit(h1_dim(), 2 * static_cast<std::size_t>(i - 1));
}

BitVector SurfaceModel::y(int i) const
{
    if (i < 1 || i > genus_)
        throw std::out_of_range("SurfaceModel::y: index out of range");
    return BitVector::unit(h1_dim(), 2 * static_cast<std::size_t>(i - 1) + 1);
}

std::string SurfaceModel::basis_label(std::size_t index) const
{
    if (index >= h1_dim())
        throw std::out_of_range("SurfaceModel::basis_label: index out of range");
    const std::size_t pair = index / 2 + 1;
    return (index % 2 == 0 ? "x" : "y") + std::to_string(pair);
}

CurveClass make_curve(const SurfaceModel& s, BitVector vec, std::string name)
{
    if (vec.size() != s.h1_dim())
        throw std::invalid_argument("make_curve: class length must be 2*genus");
    return CurveClass{s, std::move(vec), std::move(name)};
}

int pairing(const BitVector& u, const BitVector& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("pairing: length mismatch");
    if (u.size() % 2 != 0)
        throw std::invalid_argument("pairing: classes must have even length");
    int acc = 0;
    for (std::size_t t = 0; t < u.size() / 2; ++t) {
        const std::size_t xi = 2 * t, yi = 2 * t + 1;
        acc ^= (u.get(xi) & v.get(yi)) ^ (u.get(yi) & v.get(xi));
    }
    return acc;
}

int pairing(const CurveClass& u, const CurveClass& v)
{
    if (!(u.surface == v.surface))
        throw std::invalid_argument("pairing: classes live on different surfaces");
    return pairing(u.vec, v.vec);
}

BitMatrix intersection_gram(const SurfaceModel& s)
{
    const std::size_t n = s.h1_dim();
    BitMatrix m(n, n);
    for (std::size_t t = 0; t < n / 2; ++t) {
        m.set(2 * t, 2 * t + 1, true);
        m.set(2 * t + 1, 2 * t, true);
    }
    return m;
}

std::vector<CurveClass> chain_classes(int genus)
{
    if (genus < 1)
        throw std::invalid_argument("chain_classes: genus must be at least 1");
    SurfaceModel s(genus);
    std::vector<CurveClass> chain;
    chain.reserve(2 * static_cast<std::size_t>(genus) + 1);
    chain.push_back(make_curve(s, s.x(1), "c1"));
    for (int i = 1; i <= genus; ++i) {
        chain.push_back(make_curve(s, s.y(i), "c" + std::to_string(2 * i)));
        if (i < genus)
            chain.push_back(make_curve(s, s.x(i) + s.x(i + 1), "c" + std::to_string(2 * i + 1)));
    }
    chain.push_back(make_curve(s, s.x(genus), "c" + std::to_string(2 * genus + 1)));
    return chain;
}

BitVector transvect(const CurveClass& c, const BitVector& v)
{
    if (v.size() != c.surface.h1_dim())
        throw std::invalid_argument("transvect: dimension mismatch");
    BitVector out = v;
    if (pairing(v, c.vec))
        out += c.vec;
    return out;
}

BitMatrix twist_matrix(const CurveClass& c)
{
    const std::size_t n = c.surface.h1_dim();
    BitMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        BitVector col = transvect(c, BitVector::unit(n, j));
        for (std::size_t i = 0; i < n; ++i)
            if (col.get(i))
                m.set(i, j, true);
    }
    return m;
}

namespace {

void strip_spaces(std::string& s)
{
    std::string out;
    for (char ch : s)
        if (ch != ' ' && ch != '\t')
            out += ch;
    s = std::move(out);
}

}  // namespace

CurveClass parse_curve(const SurfaceModel& s, std::string_view expr)
{
    std::string text(expr);
    strip_spaces(text);
    if (text.empty())
        throw std::invalid_argument("parse_curve: empty expression");
    if (text == "0")
        return make_curve(s, s.zero_class(), "0");

    BitVector vec = s.zero_class();
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.size() < 2 || (term[0] != 'x' && term[0] != 'y'))
            throw std::invalid_argument("parse_curve: bad term '" + term + "'");
        int idx = 0;
        for (std::size_t k = 1; k < term.size(); ++k) {
            if (term[k] < '0' || term[k] > '9')
                throw std::invalid_argument("parse_curve: bad term '" + term + "'");
            idx = idx * 10 + (term[k] - '0');
        }
        if (idx < 1 || idx > s.genus())
            throw std::invalid_argument("parse_curve: index out of range in '" + term + "'");
        vec += (term[0] == 'x') ? s.x(idx) : s.y(idx);
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return make_curve(s, std::move(vec), std::string(expr));
}

std::string describe(const CurveClass& c)
{
    if (c.vec.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < c.vec.size(); ++i) {
        if (!c.vec.get(i))
            continue;
        if (!out.empty())
            out += '+';
        out += c.surface.basis_label(i);
    }
    return out;
}

}  // namespace spingeo
