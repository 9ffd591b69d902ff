#include "beacon/report/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace beacon::report {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 180.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double nice = 10.0;
    if (norm <= 1.0) {
        nice = 1.0;
    } else if (norm <= 2.0) {
        nice = 2.0;
    } else if (norm <= 5.0) {
        nice = 5.0;
    }
    return nice * mag;
}

std::string tick_label(double v) {
    if (v == 0.0) return "0";
    const double a = std::abs(v);
    if (a >= 1e5 || a < 1e-3) return fmt::format("{:.0e}", v);
    return fmt::format("{:g}", v);
}

struct Range {
    double lo;
    double hi;
};

}  // namespace

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string render_svg(const ChartSpec& chart) {
    if (chart.series.empty()) throw std::invalid_argument("chart has no series");

    // Clip and validate.
    std::vector<std::vector<double>> ys;
    Range xr{INFINITY, -INFINITY};
    Range yr{INFINITY, -INFINITY};
    for (const ChartSeries& s : chart.series) {
        if (s.x.size() != s.y.size()) {
            throw std::invalid_argument("series \"" + s.label + "\" has mismatched x/y lengths");
        }
        if (s.x.empty()) throw std::invalid_argument("series \"" + s.label + "\" is empty");
        std::vector<double> y = s.y;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (chart.y_clip && !(y[i] <= *chart.y_clip)) y[i] = *chart.y_clip;
            if (!std::isfinite(y[i]) || !std::isfinite(s.x[i])) {
                throw std::invalid_argument("series \"" + s.label + "\" has non-finite values");
            }
            if (chart.log_y && y[i] <= 0.0) {
                throw std::invalid_argument("log axis needs positive values in \"" + s.label +
                                            "\"");
            }
            xr = {std::min(xr.lo, s.x[i]), std::max(xr.hi, s.x[i])};
            yr = {std::min(yr.lo, y[i]), std::max(yr.hi, y[i])};
        }
        ys.push_back(std::move(y));
    }

    if (xr.hi == xr.lo) xr.hi = xr.lo + 1.0;
    if (chart.log_y) {
        yr = {std::pow(10.0, std::floor(std::log10(yr.lo))),
              std::pow(10.0, std::ceil(std::log10(yr.hi)))};
        if (yr.hi == yr.lo) yr.hi = yr.lo * 10.0;
    } else {
        yr.lo = std::min(0.0, yr.lo);
        if (yr.hi <= yr.lo) yr.hi = yr.lo + 1.0;
        if (!chart.y_clip || yr.hi < *chart.y_clip) {
            const double step = nice_step(yr.hi - yr.lo, 5);
            yr.hi = std::ceil(yr.hi / step) * step;
        }
    }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    const auto py = [&](double y) {
        const double t = chart.log_y
                             ? (std::log10(y) - std::log10(yr.lo)) /
                                   (std::log10(yr.hi) - std::log10(yr.lo))
                             : (y - yr.lo) / (yr.hi - yr.lo);
        return kTop + (1.0 - t) * plot_h;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
        "viewBox=\"0 0 {0:.0f} {1:.0f}\" font-family=\"sans-serif\" font-size=\"12\">\n",
        kWidth, kHeight);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n",
                       kWidth, kHeight);
    out += fmt::format("<text x=\"{:.1f}\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                       kLeft + plot_w / 2, xml_escape(chart.title));

    // Axes box.
    out += fmt::format(
        "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" "
        "stroke=\"black\"/>\n",
        kLeft, kTop, plot_w, plot_h);

    // X ticks.
    const double xstep = nice_step(xr.hi - xr.lo, 6);
    for (double x = std::ceil(xr.lo / xstep) * xstep; x <= xr.hi + 1e-9 * xstep; x += xstep) {
        const double X = px(x);
        out += fmt::format(
            "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#ccc\"/>\n",
            X, kTop, kTop + plot_h);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", X,
                           kTop + plot_h + 18, tick_label(x));
    }

    // Y ticks.
    if (chart.log_y) {
        for (double y = yr.lo; y <= yr.hi * (1 + 1e-9); y *= 10.0) {
            const double Y = py(y);
            out += fmt::format(
                "<line x1=\"{1:.2f}\" y1=\"{0:.2f}\" x2=\"{2:.2f}\" y2=\"{0:.2f}\" "
                "stroke=\"#ccc\"/>\n",
                Y, kLeft, kLeft + plot_w);
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n",
                               kLeft - 6, Y + 4, tick_label(y));
        }
    } else {
        const double ystep = nice_step(yr.hi - yr.lo, 6);
        for (double y = std::ceil(yr.lo / ystep) * ystep; y <= yr.hi + 1e-9 * ystep;
             y += ystep) {
            const double Y = py(y);
            out += fmt::format(
                "<line x1=\"{1:.2f}\" y1=\"{0:.2f}\" x2=\"{2:.2f}\" y2=\"{0:.2f}\" "
                "stroke=\"#ccc\"/>\n",
                Y, kLeft, kLeft + plot_w);
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n",
                               kLeft - 6, Y + 4, tick_label(y));
        }
    }

    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
                       kLeft + plot_w / 2, kHeight - 15, xml_escape(chart.x_label));
    out += fmt::format(
        "<text x=\"20\" y=\"{0:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0:.1f})\">"
        "{1}</text>\n",
        kTop + plot_h / 2, xml_escape(chart.y_label));

    for (std::size_t k = 0; k < chart.series.size(); ++k) {
        const ChartSeries& s = chart.series[k];
        std::string pts;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i > 0) pts += ' ';
            pts += fmt::format("{:.2f},{:.2f}", px(s.x[i]), py(ys[k][i]));
        }
        const char* dash = s.dashed ? " stroke-dasharray=\"6,4\"" : "";
        out += fmt::format(
            "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"{} points=\"{}\"/>\n",
            dash, pts);

        const double ly = kTop + 14 + 20.0 * static_cast<double>(k);
        const double lx = kLeft + plot_w + 12;
        out += fmt::format(
            "<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\" "
            "stroke-width=\"1.5\"{}/>\n",
            lx, ly, lx + 30, ly, dash);
        out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", lx + 36, ly + 4,
                           xml_escape(s.label));
    }
    out += "</svg>\n";
    return out;
}

}  // namespace beacon::report
