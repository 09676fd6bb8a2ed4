#include "dicke/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dicke {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing junk in number: " + s);
    return v;
}

std::optional<double> parse_optional(const std::string& s) {
    if (s == kNaToken) return std::nullopt;
    return parse_double(s);
}

}  // namespace

std::string format_value(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string format_optional(const std::optional<double>& x) {
    return x ? format_value(*x) : std::string(kNaToken);
}

std::string format_record_row(const RecordRow& row) {
    const ObservableRecord& r = row.record;
    std::string out = format_value(row.lambda);
    out += ',' + format_value(r.e0);
    out += ',' + format_value(r.gap);
    out += ',' + format_value(r.n_photon);
    out += ',' + format_value(r.var_n);
    out += ',' + format_optional(r.q);
    out += ',' + format_value(r.var_x1);
    out += ',' + format_value(r.var_x2);
    out += ',' + std::string(r.converged ? "1" : "0");
    out += ',' + std::to_string(r.cutoff);
    out += ',' + row.status;
    return out;
}

RecordRow parse_record_row(const std::string& line) {
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 11)
        throw std::invalid_argument("record row must have 11 fields, got " +
                                    std::to_string(f.size()));
    RecordRow row;
    row.lambda = parse_double(f[0]);
    row.record.e0 = parse_double(f[1]);
    row.record.gap = parse_double(f[2]);
    row.record.n_photon = parse_double(f[3]);
    row.record.var_n = parse_double(f[4]);
    row.record.q = parse_optional(f[5]);
    row.record.var_x1 = parse_double(f[6]);
    row.record.var_x2 = parse_double(f[7]);
    if (f[8] != "0" && f[8] != "1")
        throw std::invalid_argument("converged flag must be 0 or 1, got " + f[8]);
    row.record.converged = f[8] == "1";
    std::size_t used = 0;
    row.record.cutoff = std::stoi(f[9], &used);
    if (used != f[9].size()) throw std::invalid_argument("trailing junk in cutoff: " + f[9]);
    if (f[10].empty()) throw std::invalid_argument("empty status field");
    row.status = f[10];
    return row;
}

}  // namespace dicke
