#ifndef RYDSIM_OUTPUT_HPP
#define RYDSIM_OUTPUT_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace rydsim {

// Locale-independent shortest round-trip formatting; the CSV files must be
// byte-identical across runs.
std::string format_number(double value);

class CsvWriter {
public:
    CsvWriter(std::filesystem::path path, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);
    void close();
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::string buffer_;
    size_t columns_;
    bool closed_ = false;
};

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Minimal line plot: one polyline per series, optional log axes.
void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::vector<SvgSeries>& series, bool log_x = false,
                    bool log_y = false);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace rydsim

#endif
