#include "idemca/rule_io.hpp"

#include <charconv>
#include <sstream>

namespace idemca {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back({number, line});
    }
    return lines;
}

int parse_int_field(const Line& line, const std::string& key) {
    const std::string prefix = key + "=";
    if (line.text.rfind(prefix, 0) != 0)
        throw ParseError(line.number, 1, "expected '" + prefix + "...'");
    const char* begin = line.text.data() + prefix.size();
    const char* end = line.text.data() + line.text.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(line.number, static_cast<int>(prefix.size()) + 1,
                         "expected an integer after '" + prefix + "'");
    return value;
}

}  // namespace

CellularAutomaton parse_rule_text(const std::string& text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.size() != 3) throw ParseError(1, 1, "expected exactly the lines k=, r=, table=");

    const int k = parse_int_field(lines[0], "k");
    if (k < 2 || k > 10)
        throw ParseError(lines[0].number, 3, "k must be in 2..10 for the digit table format");
    const int r = parse_int_field(lines[1], "r");
    if (r < 0) throw ParseError(lines[1].number, 3, "r must be non-negative");

    const std::string prefix = "table=";
    if (lines[2].text.rfind(prefix, 0) != 0)
        throw ParseError(lines[2].number, 1, "expected 'table=...'");
    const std::string digits = lines[2].text.substr(prefix.size());

    std::vector<Symbol> table;
    table.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        const int col = static_cast<int>(prefix.size() + i) + 1;
        if (c < '0' || c > '9')
            throw ParseError(lines[2].number, col, "expected a digit");
        if (c - '0' >= k)
            throw ParseError(lines[2].number, col,
                             "symbol " + std::string(1, c) + " out of range for k=" + std::to_string(k));
        table.push_back(static_cast<Symbol>(c - '0'));
    }

    const std::uint64_t want = pow_u64(static_cast<std::uint64_t>(k), 2 * static_cast<unsigned>(r) + 1);
    if (table.size() != want)
        throw ParseError(lines[2].number, static_cast<int>(prefix.size()) + 1,
                         "table has " + std::to_string(table.size()) + " symbols, expected " +
                             std::to_string(want));
    return CellularAutomaton::from_table(Alphabet(k), r, std::move(table));
}

std::string format_rule_text(const CellularAutomaton& ca) {
    std::ostringstream out;
    out << "k=" << ca.alphabet_size() << "\n";
    out << "r=" << ca.radius() << "\n";
    out << "table=" << format_digits(ca.table()) << "\n";
    return out.str();
}

CellularAutomaton parse_rule_spec(const std::string& spec_or_text) {
    if (spec_or_text.rfind("eca:", 0) == 0) {
        const std::string num = spec_or_text.substr(4);
        int rule = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), rule);
        if (ec != std::errc() || ptr != num.data() + num.size() || rule < 0 || rule > 255)
            throw ParseError(1, 5, "eca:<N> needs N in 0..255");
        return CellularAutomaton::elementary(rule);
    }
    return parse_rule_text(spec_or_text);
}

}  // namespace idemca
