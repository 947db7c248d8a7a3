#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "otprh/trigpoly.hpp"
#include "otprh/verify.hpp"

namespace otprh {

/// Decimal text with 17 significant digits (round-trips any double).
std::string format_number(double v);

/// Plain CSV table with a fixed column order.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }

  void write(std::ostream& os) const;
  /// Throws std::runtime_error on I/O failure.
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// `stage,grid_point_re,grid_point_im,residual`; growth samples are tagged
/// `<stage>:growth`.
CsvTable residual_table(const std::vector<ResidualReport>& reports, const std::string& prefix = "");
void append_residuals(CsvTable& table, const ResidualReport& report, const std::string& prefix = "");

/// `poly_index,k,re_ck,im_ck`.
CsvTable coefficient_table(const std::vector<std::pair<int, TrigPoly>>& polys);

}  // namespace otprh
