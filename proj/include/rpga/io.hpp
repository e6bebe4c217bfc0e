#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rpga/circuit.hpp"
#include "rpga/fabric.hpp"
#include "rpga/truth_table.hpp"

namespace rpga {

// All parsers throw FormatError (MalformedTable for incomplete tables)
// carrying a 1-based line and column.

/// Native circuit text:
///
///   circuit <name>              optional
///   lines <n>                   required, before anything below
///   label <line> <name>         line name
///   output <line> <name>        primary-output name
///   constant <line> <0|1>
///   garbage <line>
///   slot <s> <gate> <pin>...
///
/// `#` starts a comment; tokens are whitespace separated.
Circuit parse_rcir(std::string_view text, std::size_t line_cap = kDefaultLineCap);
std::string emit_rcir(const Circuit& circuit);

/// Benchmark subset: .version .numvars .variables .inputs .outputs
/// .constants .garbage .begin .end with t<k> / f<k> gates. Each gate gets
/// its own slot in file order.
Circuit parse_real(std::string_view text, std::size_t line_cap = kDefaultLineCap);

/// Truth-table text:
///
///   inputs <n> outputs <m>
///   names <in>... -> <out>...   optional
///   <bits> -> <bits>            2^n rows, ascending
IrreversibleTruthTable parse_rtab(std::string_view text);
std::string emit_rtab(const IrreversibleTruthTable& table);

/// JSON document with fields n, realization, nodes, taps, bindings. A bare
/// fabric is emitted with an empty bindings list.
std::string emit_fabric_doc(const Configuration& config);
std::string emit_fabric_doc(const Fabric& fabric);
Configuration parse_fabric_doc(std::string_view text);

}  // namespace rpga
