#include "archtrunc/csv.hpp"

#include <charconv>
#include <cmath>

#include "archtrunc/core.hpp"

namespace archtrunc::csv {

namespace {

void strip_cr(std::string& s)
{
    if (!s.empty() && s.back() == '\r') {
        s.pop_back();
    }
}

} // namespace

Reader::Reader(std::istream& in)
    : in_(in)
{
    if (!std::getline(in_, line_)) {
        throw ContractViolation("CSV input is empty (no header)");
    }
    ++line_no_;
    strip_cr(line_);
    for (auto field : split(line_)) {
        header_.emplace_back(field);
    }
}

std::size_t Reader::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (header_[i] == name) {
            return i;
        }
    }
    throw ContractViolation("CSV header has no column '" + std::string(name) + "'");
}

bool Reader::next(std::vector<std::string_view>& fields)
{
    while (std::getline(in_, line_)) {
        ++line_no_;
        strip_cr(line_);
        if (line_.empty()) {
            continue;
        }
        fields = split(line_);
        return true;
    }
    return false;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto const pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view field)
{
    double value{};
    auto const* first = field.data();
    auto const* last = field.data() + field.size();
    if (!field.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ContractViolation("not a number: '" + std::string(field) + "'");
    }
    return value;
}

std::uint64_t parse_unsigned(std::string_view field)
{
    std::uint64_t value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ContractViolation("not a non-negative integer: '" + std::string(field) + "'");
    }
    return value;
}

} // namespace archtrunc::csv
