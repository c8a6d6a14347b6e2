#include "fractalcalc/grid_series.hpp"
#include "fractalcalc/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fcalc {

GridSeries::GridSeries(std::vector<std::string> labels)
    : labels_(std::move(labels)), cols_(labels_.size()) {}

void GridSeries::add_column(const std::string& label, std::vector<double> values) {
    if (!cols_.empty() && !cols_.front().empty() && values.size() != rows_)
        throw ShapeError("GridSeries: column length mismatch for '" + label + "'");
    rows_ = values.size();
    labels_.push_back(label);
    cols_.push_back(std::move(values));
}

void GridSeries::append_row(const std::vector<double>& row) {
    if (row.size() != labels_.size())
        throw ShapeError("GridSeries: row width mismatch");
    for (std::size_t j = 0; j < row.size(); ++j) cols_[j].push_back(row[j]);
    ++rows_;
}

void GridSeries::set_meta(const std::string& key, const std::string& value) {
    meta_[key] = value;
}

void GridSeries::set_meta(const std::string& key, double value) {
    meta_[key] = format_cell(value);
}

const std::vector<double>* GridSeries::find_column(const std::string& label) const {
    for (std::size_t j = 0; j < labels_.size(); ++j)
        if (labels_[j] == label) return &cols_[j];
    return nullptr;
}

std::string GridSeries::format_cell(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void GridSeries::to_csv(std::ostream& out) const {
    for (const auto& [key, value] : meta_)
        out << "# " << key << "=" << value << "\n";
    for (std::size_t j = 0; j < labels_.size(); ++j)
        out << (j ? "," : "") << labels_[j];
    out << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_.size(); ++j)
            out << (j ? "," : "") << format_cell(cols_[j][i]);
        out << "\n";
    }
}

std::string GridSeries::to_csv() const {
    std::ostringstream ss;
    to_csv(ss);
    return ss.str();
}

} // namespace fcalc
