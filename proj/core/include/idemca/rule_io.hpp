#pragma once

#include <string>

#include "idemca/ca.hpp"

namespace idemca {

/// Parses the plain-text rule format:
///   k=<int>
///   r=<int>
///   table=<k^(2r+1) base-k digits, big-endian window order>
/// Blank lines are ignored. Throws ParseError with a 1-based location.
CellularAutomaton parse_rule_text(const std::string& text);

/// Serializes a table-backed rule in the same format.
std::string format_rule_text(const CellularAutomaton& ca);

/// Expands "eca:N" or parses rule-file text. `source_is_text` callers pass
/// file contents; the CLI resolves paths before calling this.
CellularAutomaton parse_rule_spec(const std::string& spec_or_text);

}  // namespace idemca
