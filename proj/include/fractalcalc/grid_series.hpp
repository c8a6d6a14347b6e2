#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace fcalc {

// A labelled column table sampled over a grid, the common currency of
// every series-producing operation and of the CSV/JSON emitters.  Cells
// are doubles; NaN marks a declared-singular/empty cell and serializes
// to an empty CSV field.
//
// CSV dialect (fixed so golden files are portable): `# key=value` meta
// lines with keys sorted, a header row, comma separators, 17-significant-
// digit decimals, LF line endings.
class GridSeries {
public:
    GridSeries() = default;
    explicit GridSeries(std::vector<std::string> labels);

    void add_column(const std::string& label, std::vector<double> values);
    void append_row(const std::vector<double>& row);
    void set_meta(const std::string& key, const std::string& value);
    void set_meta(const std::string& key, double value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& column(std::size_t j) const { return cols_.at(j); }
    const std::vector<double>* find_column(const std::string& label) const;
    double cell(std::size_t i, std::size_t j) const { return cols_.at(j).at(i); }
    const std::map<std::string, std::string>& meta() const { return meta_; }

    void to_csv(std::ostream& out) const;
    std::string to_csv() const;

    // %.17g with NaN -> empty field; shared by CSV and the CLI.
    static std::string format_cell(double v);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> cols_;
    std::map<std::string, std::string> meta_;
    std::size_t rows_ = 0;
};

} // namespace fcalc
