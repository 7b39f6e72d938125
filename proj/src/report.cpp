#include "chvatal/report.hpp"

#include <algorithm>
#include <tuple>

namespace chvatal {

VerdictRecord make_record(std::string check, long n, std::optional<Rational> m,
                          Rational lhs, Rational rhs, bool pass, std::string mode) {
    VerdictRecord r;
    r.check = std::move(check);
    r.n = n;
    r.m = std::move(m);
    r.margin = lhs - rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.pass = pass;
    r.mode = std::move(mode);
    return r;
}

void sort_records(std::vector<VerdictRecord>& records) {
    std::sort(records.begin(), records.end(),
              [](const VerdictRecord& a, const VerdictRecord& b) {
                  if (auto c = a.check.compare(b.check); c != 0) return c < 0;
                  if (a.n != b.n) return a.n < b.n;
                  if (a.m.has_value() != b.m.has_value()) return !a.m.has_value();
                  if (a.m && *a.m != *b.m) return *a.m < *b.m;
                  return a.mode < b.mode;
              });
}

namespace {

// integers render as bare JSON numbers, other rationals as "p/q" strings
std::string json_index(const Rational& m) {
    if (m.get_den() == 1) return m.get_num().get_str();
    return "\"" + to_string(m) + "\"";
}

}  // namespace

std::string to_json_line(const VerdictRecord& r) {
    std::string out = "{\"check\":\"" + r.check + "\",\"n\":" + std::to_string(r.n);
    if (r.m) out += ",\"m\":" + json_index(*r.m);
    out += ",\"lhs\":\"" + to_string(r.lhs) + "\",\"rhs\":\"" + to_string(r.rhs) +
           "\",\"pass\":" + (r.pass ? "true" : "false") + ",\"margin\":\"" +
           to_string(r.margin) + "\",\"mode\":\"" + r.mode +
           "\",\"elapsed_ns\":" + std::to_string(r.elapsed_ns) + "}";
    return out;
}

std::string csv_header() { return "check,n,m,lhs,rhs,pass,margin,mode,elapsed_ns"; }

std::string to_csv_line(const VerdictRecord& r) {
    // no field here ever needs RFC 4180 quoting: checks are identifiers and
    // rationals contain only [-0-9/]
    std::string m = r.m ? to_string(*r.m) : "";
    return r.check + "," + std::to_string(r.n) + "," + m + "," + to_string(r.lhs) +
           "," + to_string(r.rhs) + "," + (r.pass ? "true" : "false") + "," +
           to_string(r.margin) + "," + r.mode + "," + std::to_string(r.elapsed_ns);
}

void write_report(std::ostream& os, std::vector<VerdictRecord> records,
                  ReportFormat format) {
    sort_records(records);
    if (format == ReportFormat::Csv) os << csv_header() << "\n";
    for (const auto& r : records)
        os << (format == ReportFormat::Json ? to_json_line(r) : to_csv_line(r)) << "\n";
}

}  // namespace chvatal
