#include "boxlab/result_table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "boxlab/errors.hpp"

namespace boxlab::harness {

ResultTable::ResultTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

void ResultTable::addRow(std::vector<std::string> row) {
    if (row.size() != columns_.size())
        throw ConfigError("ResultTable row width does not match column count");
    rows_.push_back(std::move(row));
}

void ResultTable::setProvenance(std::uint64_t configHash, std::uint64_t seed) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "# config_hash=%016llx",
                  static_cast<unsigned long long>(configHash));
    footer_.clear();
    footer_.emplace_back(buf);
    footer_.push_back("# seed=" + std::to_string(seed));
    footer_.push_back(std::string("# version=") + kVersion);
}

namespace {
// RFC-4180: quote when a cell holds a comma, quote, or newline.
std::string csvEscape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}
} // namespace

std::string ResultTable::csvBody() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) os << ',';
        os << csvEscape(columns_[i]);
    }
    os << "\r\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csvEscape(row[i]);
        }
        os << "\r\n";
    }
    return os.str();
}

void ResultTable::writeCsv(std::ostream& os) const {
    os << csvBody();
    for (const auto& line : footer_) os << line << "\r\n";
}

std::string ResultTable::toJson() const {
    std::ostringstream os;
    os << "{\"columns\":[";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) os << ',';
        os << '"' << columns_[i] << '"';
    }
    os << "],\"rows\":[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t i = 0; i < rows_[r].size(); ++i) {
            if (i) os << ',';
            os << '"' << rows_[r][i] << '"';
        }
        os << ']';
    }
    os << "],\"footer\":[";
    for (std::size_t i = 0; i < footer_.size(); ++i) {
        if (i) os << ',';
        os << '"' << footer_[i] << '"';
    }
    os << "]}";
    return os.str();
}

std::string formatDouble(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string formatInt(std::int64_t v) { return std::to_string(v); }

std::uint64_t hashConfig(const std::string& canonical) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace boxlab::harness
