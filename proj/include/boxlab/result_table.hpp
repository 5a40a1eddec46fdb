#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace boxlab::harness {

inline constexpr const char* kVersion = "boxlab 0.1.0";

// Rectangular table of string-formatted scalars with a provenance
// footer (config hash, seed, code version). CSV bodies are byte-stable
// for a fixed config + seed.
class ResultTable {
public:
    explicit ResultTable(std::vector<std::string> columns);

    void addRow(std::vector<std::string> row);
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    void setProvenance(std::uint64_t configHash, std::uint64_t seed);

    // RFC-4180 quoting; footer lines are '#'-prefixed.
    void writeCsv(std::ostream& os) const;
    std::string csvBody() const; // header + rows, no footer
    std::string toJson() const;  // same content as the CSV

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::string> footer_;
};

// Deterministic number formatting used in table cells.
std::string formatDouble(double v);
std::string formatInt(std::int64_t v);

// FNV-1a over a canonical config string.
std::uint64_t hashConfig(const std::string& canonical);

} // namespace boxlab::harness
