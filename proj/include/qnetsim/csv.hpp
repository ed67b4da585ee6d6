// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic CSV emission: fixed %.12g numeric formatting, a provenance
// comment line carrying the configuration fingerprint, and binary-mode
// output so reruns of the same configuration are byte-identical.
#ifndef QNETSIM_CSV_HPP
#define QNETSIM_CSV_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qns {

inline std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

inline std::string format_fingerprint(std::uint64_t fingerprint) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fingerprint));
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns,
            std::uint64_t fingerprint)
      : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    out_ << "# config_fingerprint=" << format_fingerprint(fingerprint)
         << "\n";
    write_cells(columns);
  }

  void row(const std::vector<std::string>& cells) { write_cells(cells); }

  static std::string cell(double value) { return format_double(value); }
  static std::string cell(std::int64_t value) { return std::to_string(value); }
  static std::string cell(int value) { return std::to_string(value); }
  static std::string cell(const std::string& value) { return value; }

 private:
  void write_cells(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ofstream out_;
};

}  // namespace qns

#endif  // QNETSIM_CSV_HPP
