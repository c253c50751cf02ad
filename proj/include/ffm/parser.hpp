#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffm/pomdp.hpp"

namespace ffm {

enum class Severity { error, warning };

struct Diagnostic {
    int line = 0; // 1-based; 0 when no single line applies
    Severity severity = Severity::error;
    std::string message;
};

struct ParseResult {
    std::optional<Pomdp> pomdp; // present iff no error diagnostics
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return pomdp.has_value(); }
    bool has_errors() const;
};

/// Parses the Cassandra-style .pomdp text format, restricted to models
/// whose observation is a deterministic function of the state alone.
///
/// Supported declarations: discount:, values: reward, states:/actions:/
/// observations: (count or name list), start: (probability list or
/// "uniform"; uniform when omitted), T: a : s : s' p, T: a : s + row,
/// T: a + matrix or identity/uniform, O: a : s' : o p, O: a : s' + row,
/// O: a + matrix, R: a : s : s' : o v. '*' acts as a wildcard field.
/// Lines whose first non-blank character is '#' are comments.
///
/// General rewards are folded to r(s, a) by expectation over s' using the
/// observation actually emitted at s'. Probability rows must sum to 1
/// within 1e-6 and are renormalized when they miss exact by more than 1e-9.
ParseResult parse_pomdp(std::string_view text);

/// Reads a file and parses it. I/O failures become error diagnostics.
ParseResult load_pomdp_file(const std::string& path);

} // namespace ffm
