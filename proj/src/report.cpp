#include "otprh/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace otprh {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::invalid_argument("CsvTable: row width mismatch");
  rows_.push_back(std::move(cells));
}

void CsvTable::write(std::ostream& os) const {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

void CsvTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write(out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void append_residuals(CsvTable& table, const ResidualReport& report, const std::string& prefix) {
  for (const auto& s : report.jump_samples) {
    table.add_row({prefix + report.stage, format_number(s.point.real()),
                   format_number(s.point.imag()), format_number(s.residual)});
  }
  for (const auto& s : report.growth_samples) {
    table.add_row({prefix + report.stage + ":growth", format_number(s.point.real()),
                   format_number(s.point.imag()), format_number(s.residual)});
  }
}

CsvTable residual_table(const std::vector<ResidualReport>& reports, const std::string& prefix) {
  CsvTable t({"stage", "grid_point_re", "grid_point_im", "residual"});
  for (const auto& r : reports) append_residuals(t, r, prefix);
  return t;
}

CsvTable coefficient_table(const std::vector<std::pair<int, TrigPoly>>& polys) {
  CsvTable t({"poly_index", "k", "re_ck", "im_ck"});
  for (const auto& [index, p] : polys) {
    for (int k = -p.degree(); k <= p.degree(); ++k) {
      t.add_row({std::to_string(index), std::to_string(k), format_number(p.coeff(k).real()),
                 format_number(p.coeff(k).imag())});
    }
  }
  return t;
}

}  // namespace otprh
