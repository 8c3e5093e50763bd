#include "spingeo/geography.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace spingeo {

std::string to_csv(const CoverageReport& report)
{
    std::ostringstream out;
    out << "a,b,status,families\n";
    const Region region = theorem_region(report.plane);
    for (long long a = 0; a <= report.bounds.a_max; ++a) {
        for (long long b = 0; b <= report.bounds.b_max; ++b) {
            if (report.parity == PlaneParity::Even && b % 2 != 0)
                continue;
            if (report.parity == PlaneParity::Odd && b % 2 == 0)
                continue;
            out << a << ',' << b << ',';
            const auto it = report.covered.find({a, b});
            if (it != report.covered.end()) {
                out << "covered,";
                for (std::size_t i = 0; i < it->second.size(); ++i)
                    out << (i ? ";" : "") << it->second[i];
            } else if (region.contains(a, b)) {
                out << "missing,";
            } else {
                out << "outside-region,";
            }
            out << '\n';
        }
    }
    return out.str();
}

namespace {

struct PlotFrame {
    double cell = 9.0;
    double left = 46.0;
    double top = 48.0;
    long long a_max = 0;
    long long b_max = 0;

    double x(double a) const { return left + a * cell; }
    double y(double b) const { return top + (static_cast<double>(b_max) - b) * cell; }
    double width() const { return left + a_max * cell + 150.0; }
    double height() const { return top + b_max * cell + 40.0; }
};

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << v;
    std::string text = s.str();
    while (text.ends_with('0'))
        text.pop_back();
    if (text.ends_with('.'))
        text.pop_back();
    return text;
}

// Clipped segment of the line b = slope * a + icept inside the plot box.
void draw_line(std::ostringstream& out, const PlotFrame& f, double slope, double icept,
               const std::string& dash, const std::string& label)
{
    double a0 = 0.0;
    double a1 = static_cast<double>(f.a_max);
    if (slope * a0 + icept < 0.0)
        a0 = -icept / slope;
    if (slope * a1 + icept > static_cast<double>(f.b_max))
        a1 = (static_cast<double>(f.b_max) - icept) / slope;
    if (a0 > a1)
        return;
    const double b0 = slope * a0 + icept;
    const double b1 = slope * a1 + icept;
    out << "<line x1='" << fmt(f.x(a0)) << "' y1='" << fmt(f.y(b0)) << "' x2='" << fmt(f.x(a1))
        << "' y2='" << fmt(f.y(b1)) << "' stroke='#777' stroke-width='1' stroke-dasharray='"
        << dash << "'/>\n";
    out << "<text x='" << fmt(f.x(a1) + 4) << "' y='" << fmt(f.y(b1))
        << "' font-size='10' fill='#555'>" << label << "</text>\n";
}

}  // namespace

std::string to_svg(const CoverageReport& report)
{
    PlotFrame f;
    f.a_max = report.bounds.a_max;
    f.b_max = report.bounds.b_max;
    const Region region = theorem_region(report.plane);

    auto parity_ok = [&](long long b) {
        if (report.parity == PlaneParity::Even)
            return b % 2 == 0;
        if (report.parity == PlaneParity::Odd)
            return b % 2 != 0;
        return true;
    };

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << fmt(f.width()) << "' height='"
        << fmt(f.height()) << "' viewBox='0 0 " << fmt(f.width()) << ' ' << fmt(f.height())
        << "' font-family='sans-serif'>\n";
    out << "<rect x='0' y='0' width='" << fmt(f.width()) << "' height='" << fmt(f.height())
        << "' fill='#ffffff'/>\n";
    out << "<text x='" << fmt(f.left) << "' y='20' font-size='14' fill='#222'>w2-type "
        << to_string(report.plane) << ", H-count parity " << to_string(report.parity)
        << ": covered " << report.covered.size() << ", missing " << report.missing_count_raw();
    if (!report.flagged.empty())
        out << " (adjusted " << report.missing_count_adjusted() << ")";
    out << "</text>\n";

    // axes
    out << "<line x1='" << fmt(f.x(0)) << "' y1='" << fmt(f.y(0)) << "' x2='"
        << fmt(f.x(static_cast<double>(f.a_max))) << "' y2='" << fmt(f.y(0))
        << "' stroke='#222' stroke-width='1'/>\n";
    out << "<line x1='" << fmt(f.x(0)) << "' y1='" << fmt(f.y(0)) << "' x2='" << fmt(f.x(0))
        << "' y2='" << fmt(f.y(static_cast<double>(f.b_max)))
        << "' stroke='#222' stroke-width='1'/>\n";
    for (long long a = 0; a <= f.a_max; a += 10) {
        out << "<text x='" << fmt(f.x(static_cast<double>(a))) << "' y='" << fmt(f.y(0) + 14)
            << "' font-size='9' fill='#222' text-anchor='middle'>" << a << "</text>\n";
    }
    for (long long b = 0; b <= f.b_max; b += 10) {
        out << "<text x='" << fmt(f.x(0) - 6) << "' y='" << fmt(f.y(static_cast<double>(b)) + 3)
            << "' font-size='9' fill='#222' text-anchor='end'>" << b << "</text>\n";
    }
    out << "<text x='" << fmt(f.x(static_cast<double>(f.a_max)) + 8) << "' y='"
        << fmt(f.y(0) + 14) << "' font-size='10' fill='#222'>a</text>\n";
    out << "<text x='" << fmt(f.x(0)) << "' y='" << fmt(f.y(static_cast<double>(f.b_max)) - 8)
        << "' font-size='10' fill='#222'>b</text>\n";

    draw_line(out, f, 2.0, -1.0, "4 3", "b = 2a - 1");
    draw_line(out, f, 1.5, -0.5, "2 4", "2b = 3a - 1");
    draw_line(out, f, 1.0, 0.0, "1 3", "b = a");

    // region background
    for (long long a = 0; a <= f.a_max; ++a)
        for (long long b = 0; b <= f.b_max; ++b)
            if (parity_ok(b) && region.contains(a, b))
                out << "<circle cx='" << fmt(f.x(static_cast<double>(a))) << "' cy='"
                    << fmt(f.y(static_cast<double>(b))) << "' r='0.8' fill='#d8d8d8'/>\n";

    for (const auto& [pt, names] : report.covered) {
        out << "<circle cx='" << fmt(f.x(static_cast<double>(pt.a))) << "' cy='"
            << fmt(f.y(static_cast<double>(pt.b))) << "' r='2.4' fill='#2f8f4e'><title>(" << pt.a
            << ", " << pt.b << "): ";
        for (std::size_t i = 0; i < names.size(); ++i)
            out << (i ? "; " : "") << names[i];
        out << "</title></circle>\n";
    }
    for (const auto& pt : report.missing) {
        const double cx = f.x(static_cast<double>(pt.a));
        const double cy = f.y(static_cast<double>(pt.b));
        out << "<path d='M " << fmt(cx - 2.6) << ' ' << fmt(cy - 2.6) << " L " << fmt(cx + 2.6)
            << ' ' << fmt(cy + 2.6) << " M " << fmt(cx - 2.6) << ' ' << fmt(cy + 2.6) << " L "
            << fmt(cx + 2.6) << ' ' << fmt(cy - 2.6)
            << "' stroke='#c0392b' stroke-width='1.4' fill='none'><title>(" << pt.a << ", "
            << pt.b << "): missing</title></path>\n";
    }
    for (const auto& pt : report.flagged) {
        out << "<circle cx='" << fmt(f.x(static_cast<double>(pt.a))) << "' cy='"
            << fmt(f.y(static_cast<double>(pt.b)))
            << "' r='5' fill='none' stroke='#e67e22' stroke-width='1.5'><title>(" << pt.a
            << ", " << pt.b << "): realized elsewhere</title></circle>\n";
    }

    // legend
    const double lx = f.x(static_cast<double>(f.a_max)) + 24.0;
    double ly = f.top + 30.0;
    out << "<circle cx='" << fmt(lx) << "' cy='" << fmt(ly) << "' r='2.4' fill='#2f8f4e'/>"
        << "<text x='" << fmt(lx + 8) << "' y='" << fmt(ly + 3)
        << "' font-size='10' fill='#222'>covered</text>\n";
    ly += 16.0;
    out << "<path d='M " << fmt(lx - 2.6) << ' ' << fmt(ly - 2.6) << " L " << fmt(lx + 2.6)
        << ' ' << fmt(ly + 2.6) << " M " << fmt(lx - 2.6) << ' ' << fmt(ly + 2.6) << " L "
        << fmt(lx + 2.6) << ' ' << fmt(ly - 2.6)
        << "' stroke='#c0392b' stroke-width='1.4' fill='none'/><text x='" << fmt(lx + 8)
        << "' y='" << fmt(ly + 3) << "' font-size='10' fill='#222'>missing</text>\n";
    if (!report.flagged.empty()) {
        ly += 16.0;
        out << "<circle cx='" << fmt(lx) << "' cy='" << fmt(ly)
            << "' r='5' fill='none' stroke='#e67e22' stroke-width='1.5'/><text x='"
            << fmt(lx + 8) << "' y='" << fmt(ly + 3)
            << "' font-size='10' fill='#222'>realized elsewhere</text>\n";
    }
    ly += 16.0;
    out << "<circle cx='" << fmt(lx) << "' cy='" << fmt(ly) << "' r='0.8' fill='#d8d8d8'/>"
        << "<text x='" << fmt(lx + 8) << "' y='" << fmt(ly + 3)
        << "' font-size='10' fill='#222'>theorem region</text>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace spingeo
