#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

// Minimal reader for the unquoted numeric CSV files this project writes.
namespace archtrunc::csv {

class Reader {
public:
    /// Reads the header line immediately; an empty stream is an error.
    explicit Reader(std::istream& in);

    [[nodiscard]] std::vector<std::string> const& header() const noexcept { return header_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_no_; }
    /// Index of a header column, or throws naming the missing column.
    [[nodiscard]] std::size_t column(std::string_view name) const;

    /// Views stay valid until the next call. Blank lines are skipped.
    bool next(std::vector<std::string_view>& fields);

private:
    std::istream& in_;
    std::string line_;
    std::size_t line_no_{};
    std::vector<std::string> header_;
};

[[nodiscard]] std::vector<std::string_view> split(std::string_view line, char sep = ',');
[[nodiscard]] double parse_double(std::string_view field);
[[nodiscard]] std::uint64_t parse_unsigned(std::string_view field);

} // namespace archtrunc::csv
