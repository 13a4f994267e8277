#include "modring/format.hpp"

#include <cctype>
#include <sstream>

namespace modring {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Integer parse_integer(std::string_view text) {
    const std::string_view t = strip(text);
    std::string_view digits = t;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw parse_error("not an integer: \"" + std::string(text) + "\"");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw parse_error("not an integer: \"" + std::string(text) + "\"");
        }
    }
    Integer value{std::string(digits)};
    if (t.front() == '-') value = -value;
    return value;
}

std::vector<Integer> parse_integer_list(std::string_view text) {
    if (strip(text).empty()) return {};
    std::vector<Integer> out;
    for (std::string_view part : split(text, ',')) out.push_back(parse_integer(part));
    return out;
}

std::vector<Point> parse_points(std::string_view text) {
    if (strip(text).empty()) return {};
    std::vector<Point> out;
    for (std::string_view part : split(text, ',')) {
        const std::size_t colon = part.find(':');
        if (colon == std::string_view::npos) {
            throw parse_error("point must be \"x:y\", got \"" + std::string(part) + "\"");
        }
        out.push_back({parse_integer(part.substr(0, colon)), parse_integer(part.substr(colon + 1))});
    }
    return out;
}

std::string join(const std::vector<Integer>& values, std::string_view separator) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += separator;
        out += values[i].str();
    }
    return out;
}

std::string coefficient_list(const Polynomial& f) { return coefficient_list(f.coefficients()); }

std::string coefficient_list(const std::vector<Integer>& coefficients) {
    if (coefficients.empty()) return "0";
    return join(coefficients, ",");
}

std::string pretty(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& cs = f.coefficients();
    for (std::size_t k = cs.size(); k-- > 0;) {
        if (cs[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << cs[k];
            continue;
        }
        if (cs[k] != 1) out << cs[k];
        out << "t";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

}  // namespace modring
