#include "fae/bench.hpp"

#include "fae/errors.hpp"
#include "fae/json.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fae::bench {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view field) {
    const std::string s(field);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw DomainError("malformed number in CSV: " + s);
    return v;
}

std::uint64_t parse_u64(std::string_view field) {
    const std::string s(field);
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE) throw DomainError("malformed integer in CSV: " + s);
    return v;
}

} // namespace

std::string to_csv(const TrialSet& tset) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const Cell& c : tset.cells) {
        const CellStats& s = c.stats;
        os << fmt_double(s.amplitude) << ',' << s.ell << ',' << s.j0_mode << ',' << s.trials << ','
           << fmt_double(s.delta_c) << ',' << fmt_double(s.err_q) << ',' << s.n_orac_exact_median << ','
           << s.n_orac_exact_min << ',' << s.n_orac_exact_max << ',' << s.n_orac_paper_median << ','
           << fmt_double(s.coverage_rate) << ',' << s.seed << '\n';
    }
    return os.str();
}

std::vector<CellStats> parse_csv(std::string_view text) {
    std::vector<CellStats> rows;
    bool header = true;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (header) {
            if (line != kCsvHeader) throw DomainError("unexpected CSV header");
            header = false;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 12) throw DomainError("CSV row must have 12 fields");
        CellStats s;
        s.amplitude = parse_double(f[0]);
        s.ell = static_cast<int>(parse_u64(f[1]));
        s.j0_mode = static_cast<int>(parse_u64(f[2]));
        s.trials = parse_u64(f[3]);
        s.delta_c = parse_double(f[4]);
        s.err_q = parse_double(f[5]);
        s.n_orac_exact_median = parse_u64(f[6]);
        s.n_orac_exact_min = parse_u64(f[7]);
        s.n_orac_exact_max = parse_u64(f[8]);
        s.n_orac_paper_median = parse_u64(f[9]);
        s.coverage_rate = parse_double(f[10]);
        s.seed = parse_u64(f[11]);
        rows.push_back(s);
    }
    if (header) throw DomainError("CSV is missing its header");
    return rows;
}

std::string to_json_text(const TrialSet& tset, std::span<const AmplitudeFit> fits, bool include_trials) {
    nlohmann::json doc;
    doc["config"] = tset.config;
    doc["cells"] = nlohmann::json::array();
    for (const Cell& c : tset.cells) {
        nlohmann::json cell = c.stats;
        cell["failures"] = c.failures;
        doc["cells"].push_back(std::move(cell));
    }
    doc["fits"] = nlohmann::json::array();
    for (const AmplitudeFit& f : fits) {
        nlohmann::json fj = f.fit;
        fj["amplitude"] = f.amplitude;
        doc["fits"].push_back(std::move(fj));
    }
    if (include_trials) {
        doc["trials"] = nlohmann::json::array();
        for (const Cell& c : tset.cells) {
            doc["trials"].push_back({{"amplitude", c.stats.amplitude}, {"ell", c.stats.ell}, {"records", c.trials}});
        }
    }
    return doc.dump(2) + "\n";
}

// ----------------------------------------------------------------------------
// SVG: one log-log panel per amplitude, error against median N_orac.

namespace {

struct Panel {
    double x0, y0, w, h;
    double lx_min, lx_max, ly_min, ly_max;

    double px(double log_n) const { return x0 + (log_n - lx_min) / (lx_max - lx_min) * w; }
    double py(double log_e) const { return y0 + h - (log_e - ly_min) / (ly_max - ly_min) * h; }
};

std::string escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string to_svg(const TrialSet& tset, std::span<const AmplitudeFit> fits) {
    constexpr double kPanelW = 360.0;
    constexpr double kPanelH = 270.0;
    constexpr double kMarginL = 70.0;
    constexpr double kMarginT = 40.0;
    constexpr double kGapX = 110.0;
    constexpr double kGapY = 90.0;

    const auto& amps = tset.config.amplitudes;
    const std::size_t n_panels = std::max<std::size_t>(amps.size(), 1);
    const std::size_t cols = std::min<std::size_t>(2, n_panels);
    const std::size_t rows = (n_panels + cols - 1) / cols;
    const double width = kMarginL + static_cast<double>(cols) * (kPanelW + kGapX);
    const double height = kMarginT + static_cast<double>(rows) * (kPanelH + kGapY);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_short(width, 6) << "\" height=\""
       << fmt_short(height, 6) << "\" viewBox=\"0 0 " << fmt_short(width, 6) << ' ' << fmt_short(height, 6)
       << "\" font-family=\"sans-serif\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < amps.size(); ++p) {
        const double a = amps[p];
        std::vector<const CellStats*> cells;
        for (const Cell& c : tset.cells) {
            if (c.stats.amplitude == a && c.stats.err_q > 0.0 && std::isfinite(c.stats.err_q) &&
                c.stats.n_orac_exact_median > 0) {
                cells.push_back(&c.stats);
            }
        }

        Panel pn{kMarginL + static_cast<double>(p % cols) * (kPanelW + kGapX),
                 kMarginT + static_cast<double>(p / cols) * (kPanelH + kGapY), kPanelW, kPanelH, 3, 9, -6, 0};
        if (!cells.empty()) {
            double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
            for (const CellStats* s : cells) {
                const double lx = std::log10(static_cast<double>(s->n_orac_exact_median));
                const double ly = std::log10(s->err_q);
                xmin = std::min(xmin, lx);
                xmax = std::max(xmax, lx);
                ymin = std::min(ymin, ly);
                ymax = std::max(ymax, ly);
            }
            pn.lx_min = std::floor(xmin);
            pn.lx_max = std::max(std::ceil(xmax), pn.lx_min + 1);
            pn.ly_min = std::floor(ymin);
            pn.ly_max = std::max(std::ceil(ymax), pn.ly_min + 1);
        }

        os << "<g class=\"panel\" data-amplitude=\"" << fmt_double(a) << "\">\n";
        os << "<text x=\"" << fmt_short(pn.x0 + pn.w / 2, 6) << "\" y=\"" << fmt_short(pn.y0 - 12, 6)
           << "\" text-anchor=\"middle\" font-size=\"14\">a = " << fmt_short(a, 6) << "</text>\n";
        os << "<rect x=\"" << fmt_short(pn.x0, 6) << "\" y=\"" << fmt_short(pn.y0, 6) << "\" width=\""
           << fmt_short(pn.w, 6) << "\" height=\"" << fmt_short(pn.h, 6)
           << "\" fill=\"none\" stroke=\"black\"/>\n";

        for (double t = pn.lx_min; t <= pn.lx_max + 1e-9; t += 1.0) {
            const double x = pn.px(t);
            os << "<line x1=\"" << fmt_short(x, 6) << "\" y1=\"" << fmt_short(pn.y0 + pn.h, 6) << "\" x2=\""
               << fmt_short(x, 6) << "\" y2=\"" << fmt_short(pn.y0 + pn.h + 5, 6) << "\" stroke=\"black\"/>\n";
            os << "<text x=\"" << fmt_short(x, 6) << "\" y=\"" << fmt_short(pn.y0 + pn.h + 18, 6)
               << "\" text-anchor=\"middle\" font-size=\"10\">1e" << static_cast<int>(t) << "</text>\n";
        }
        for (double t = pn.ly_min; t <= pn.ly_max + 1e-9; t += 1.0) {
            const double y = pn.py(t);
            os << "<line x1=\"" << fmt_short(pn.x0 - 5, 6) << "\" y1=\"" << fmt_short(y, 6) << "\" x2=\""
               << fmt_short(pn.x0, 6) << "\" y2=\"" << fmt_short(y, 6) << "\" stroke=\"black\"/>\n";
            os << "<text x=\"" << fmt_short(pn.x0 - 8, 6) << "\" y=\"" << fmt_short(y + 3, 6)
               << "\" text-anchor=\"end\" font-size=\"10\">1e" << static_cast<int>(t) << "</text>\n";
        }
        os << "<text x=\"" << fmt_short(pn.x0 + pn.w / 2, 6) << "\" y=\"" << fmt_short(pn.y0 + pn.h + 36, 6)
           << "\" text-anchor=\"middle\" font-size=\"12\">N_orac</text>\n";
        os << "<text x=\"" << fmt_short(pn.x0 - 48, 6) << "\" y=\"" << fmt_short(pn.y0 + pn.h / 2, 6)
           << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 " << fmt_short(pn.x0 - 48, 6)
           << ' ' << fmt_short(pn.y0 + pn.h / 2, 6) << ")\">error (q" << fmt_short(tset.config.percentile * 100, 4)
           << ")</text>\n";

        const auto fit = std::find_if(fits.begin(), fits.end(), [a](const AmplitudeFit& f) { return f.amplitude == a; });
        if (fit != fits.end()) {
            // log10 eps = b - log10 N, clipped to the panel's x range.
            const double b = fit->fit.intercept_b;
            double xa = pn.lx_min;
            double xb = pn.lx_max;
            xa = std::max(xa, b - pn.ly_max);
            xb = std::min(xb, b - pn.ly_min);
            if (xa < xb) {
                os << "<line class=\"fit\" x1=\"" << fmt_short(pn.px(xa), 6) << "\" y1=\"" << fmt_short(pn.py(b - xa), 6)
                   << "\" x2=\"" << fmt_short(pn.px(xb), 6) << "\" y2=\"" << fmt_short(pn.py(b - xb), 6)
                   << "\" stroke=\"blue\" stroke-width=\"1.5\"/>\n";
            }
            os << "<text x=\"" << fmt_short(pn.x0 + pn.w - 6, 6) << "\" y=\"" << fmt_short(pn.y0 + 16, 6)
               << "\" text-anchor=\"end\" font-size=\"10\" fill=\"blue\">b = " << fmt_short(b, 4)
               << ", free slope = " << fmt_short(fit->fit.free_slope, 4) << "</text>\n";
        }

        for (const CellStats* s : cells) {
            const double x = pn.px(std::log10(static_cast<double>(s->n_orac_exact_median)));
            const double y = pn.py(std::log10(s->err_q));
            os << "<circle class=\"point\" cx=\"" << fmt_short(x, 6) << "\" cy=\"" << fmt_short(y, 6)
               << "\" r=\"3.5\" fill=\"green\"/>\n";
            const std::string label =
                s->first_stage_only() ? std::string("First Stage Only") : "j0=" + std::to_string(s->j0_mode);
            os << "<text x=\"" << fmt_short(x + 5, 6) << "\" y=\"" << fmt_short(y - 5, 6)
               << "\" font-size=\"8\">" << escape(label) << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void export_trials(const TrialSet& tset, std::span<const AmplitudeFit> fits, ExportFormat format,
                   const std::filesystem::path& path, bool include_trials) {
    std::string text;
    switch (format) {
    case ExportFormat::Csv: text = to_csv(tset); break;
    case ExportFormat::Json: text = to_json_text(tset, fits, include_trials); break;
    case ExportFormat::Svg: text = to_svg(tset, fits); break;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

} // namespace fae::bench
