#include "rydsim/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace rydsim {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
    return std::string(buf, ptr);
}

CsvWriter::CsvWriter(std::filesystem::path path, const std::vector<std::string>& header)
    : path_(std::move(path)), columns_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += header[i];
    }
    buffer_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_)
        throw std::invalid_argument("CsvWriter: column count mismatch");
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += format_number(values[i]);
    }
    buffer_ += '\n';
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::invalid_argument("CsvWriter: column count mismatch");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += cells[i];
    }
    buffer_ += '\n';
}

void CsvWriter::close() {
    if (closed_) return;
    write_text_file(path_, buffer_);
    closed_ = true;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

double axis_value(double v, bool log_scale) {
    return log_scale ? std::log10(std::max(v, 1e-300)) : v;
}

std::string xml_escape(const std::string& s) {
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

void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::vector<SvgSeries>& series, bool log_x, bool log_y) {
    constexpr double width = 720, height = 480, margin = 60;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (size_t i = 0; i < s.x.size(); ++i) {
            const double x = axis_value(s.x[i], log_x);
            const double y = axis_value(s.y[i], log_y);
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;

    auto px = [&](double x) {
        return margin + (axis_value(x, log_x) - xmin) / (xmax - xmin) * (width - 2 * margin);
    };
    auto py = [&](double y) {
        return height - margin -
               (axis_value(y, log_y) - ymin) / (ymax - ymin) * (height - 2 * margin);
    };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(width) +
           "\" height=\"" + format_number(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + format_number(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + xml_escape(title) + "</text>\n";
    // axes
    svg += "<line x1=\"" + format_number(margin) + "\" y1=\"" + format_number(height - margin) +
           "\" x2=\"" + format_number(width - margin) + "\" y2=\"" +
           format_number(height - margin) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_number(margin) + "\" y1=\"" + format_number(margin) +
           "\" x2=\"" + format_number(margin) + "\" y2=\"" + format_number(height - margin) +
           "\" stroke=\"black\"/>\n";

    int color = 0;
    double legend_y = margin;
    for (const auto& s : series) {
        const char* stroke = palette[color % 8];
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
               "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (i) svg += ' ';
            svg += format_number(px(s.x[i])) + "," + format_number(py(s.y[i]));
        }
        svg += "\"/>\n";
        svg += "<text x=\"" + format_number(width - margin + 4) + "\" y=\"" +
               format_number(legend_y) + "\" font-family=\"sans-serif\" font-size=\"11\" "
               "fill=\"" + std::string(stroke) + "\">" + xml_escape(s.label) + "</text>\n";
        legend_y += 14;
        ++color;
    }
    svg += "</svg>\n";
    write_text_file(path, svg);
}

} // namespace rydsim
