#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chvatal/rational.hpp"

namespace chvatal {

// One check outcome. The second index slot holds m, r, or a grid v,
// depending on the check; rationals are rendered in lowest terms.
struct VerdictRecord {
    std::string check;
    long n = 0;  // n or s
    std::optional<Rational> m;
    Rational lhs, rhs;
    bool pass = false;
    Rational margin;  // lhs - rhs
    std::string mode = "exact";
    long long elapsed_ns = 0;
};

VerdictRecord make_record(std::string check, long n, std::optional<Rational> m,
                          Rational lhs, Rational rhs, bool pass,
                          std::string mode = "exact");

// Stable report order: (check, n, m); records without m sort first.
void sort_records(std::vector<VerdictRecord>& records);

std::string to_json_line(const VerdictRecord& r);
std::string csv_header();
std::string to_csv_line(const VerdictRecord& r);

enum class ReportFormat { Json, Csv };

// Sorts and streams the full report; one record per line.
void write_report(std::ostream& os, std::vector<VerdictRecord> records,
                  ReportFormat format);

}  // namespace chvatal
