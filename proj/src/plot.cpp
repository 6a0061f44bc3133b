#include "asb/plot.hpp"

#include "asb/analytics.hpp"
#include "asb/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace asb {

std::string profile_csv(const std::vector<LogRecord>& records)
{
    if (records.empty())
        throw DomainError("plot: nothing to plot");
    std::string out;
    for (const auto& test : split_by_test(records)) {
        for (const auto& [setpoint, depth] : depth_profile(test)) {
            out += std::to_string(setpoint);
            out += ',';
            out += std::to_string(depth);
            out += '\n';
        }
    }
    return out;
}

namespace {

constexpr double kWidth = 640.0, kHeight = 400.0;
constexpr double kLeft = 64.0, kRight = 24.0, kTop = 24.0, kBottom = 48.0;

constexpr std::array<const char*, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v)
{
    std::array<char, 32> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, 1);
    return std::string(buf.data(), ptr);
}

// A tick spacing of 1, 2 or 5 times a power of ten giving <= 8 ticks.
int tick_step(int range)
{
    int step = 1;
    while (range / step > 8) {
        if (step % 10 == 1 || step % 10 == 5) // 1 -> 2, 5 -> 10
            step *= 2;
        else // 2 -> 5
            step = step / 2 * 5;
    }
    return step;
}

} // namespace

std::string profile_svg(const std::vector<LogRecord>& records)
{
    if (records.empty())
        throw DomainError("plot: nothing to plot");
    const auto tests = split_by_test(records);

    int sp_max = 1;
    int depth_max = 0;
    for (const LogRecord& r : records) {
        sp_max = std::max(sp_max, r.setpoint);
        depth_max = std::max(depth_max, r.depth_cm);
    }
    const int y_step = tick_step(std::max(depth_max, 1));
    const int y_max = std::max(((depth_max + y_step - 1) / y_step) * y_step, y_step);
    const int x_step = tick_step(std::max(sp_max - 1, 1));

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto x_of = [&](double sp) {
        return sp_max > 1 ? kLeft + (sp - 1.0) / (sp_max - 1.0) * plot_w
                          : kLeft + plot_w / 2.0;
    };
    const auto y_of = [&](double depth) { return kTop + (1.0 - depth / y_max) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kTop + plot_h) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
           num(kLeft + plot_w) + "\" y2=\"" + num(kTop + plot_h) + "\" stroke=\"black\"/>\n";

    for (int sp = 1; sp <= sp_max; sp += x_step) {
        const double x = x_of(sp);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h + 20) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(sp) + "</text>\n";
    }
    for (int d = 0; d <= y_max; d += y_step) {
        const double y = y_of(d);
        svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft) +
               "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(y + 4) +
               "\" font-size=\"12\" text-anchor=\"end\">" + std::to_string(d) + "</text>\n";
    }
    svg += "<text x=\"" + num(kLeft + plot_w / 2.0) + "\" y=\"" + num(kHeight - 8) +
           "\" font-size=\"13\" text-anchor=\"middle\">setpoint</text>\n";
    svg += "<text x=\"14\" y=\"" + num(kTop + plot_h / 2.0) +
           "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
           num(kTop + plot_h / 2.0) + ")\">depth (cm)</text>\n";

    for (std::size_t t = 0; t < tests.size(); ++t) {
        const auto series = depth_profile(tests[t]);
        std::string points;
        for (const auto& [sp, depth] : series) {
            points += num(x_of(sp)) + "," + num(y_of(depth)) + " ";
        }
        if (!points.empty())
            points.pop_back();
        const char* color = kPalette[t % kPalette.size()];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        svg += "<text x=\"" + num(kLeft + plot_w - 4) + "\" y=\"" +
               num(kTop + 14.0 * (t + 1)) + "\" font-size=\"12\" text-anchor=\"end\" fill=\"";
        svg += color;
        svg += "\">test " + std::to_string(tests[t].front().test_id) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace asb
