#include "ffm/policy.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace ffm {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view token, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw PolicyFormatError(std::string("policy file: bad ") + what + " '" + std::string(token) + "'");
    return value;
}

} // namespace

std::string serialize_policy(const FiniteMemoryPolicy& policy) {
    std::string out;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "fmp 1 %d %d\n", policy.observation_count, policy.memory_count);
    out += buf;
    for (int o = 0; o < policy.observation_count; ++o) {
        for (int m = 0; m < policy.memory_count; ++m) {
            const PolicyDecision& d = policy.cell(o, m);
            std::snprintf(buf, sizeof(buf), "%d %d %d %d\n", o, m, d.action, d.memory);
            out += buf;
        }
    }
    return out;
}

FiniteMemoryPolicy parse_policy(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;

    if (!std::getline(stream, line)) throw PolicyFormatError("policy file: empty input");
    auto header = split_ws(line);
    if (header.size() != 4 || header[0] != "fmp")
        throw PolicyFormatError("policy file: bad header, expected 'fmp 1 <observations> <memory>'");
    if (header[1] != "1")
        throw PolicyFormatError("policy file: unsupported format version '" + std::string(header[1]) + "'");
    const int observations = parse_int(header[2], "observation count");
    const int memory = parse_int(header[3], "memory count");
    if (observations < 1 || memory < 1)
        throw PolicyFormatError("policy file: dimensions must be at least 1");

    FiniteMemoryPolicy policy(observations, memory);
    int expected = 0;
    const int cells = policy.cell_count();
    while (std::getline(stream, line)) {
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (expected >= cells) throw PolicyFormatError("policy file: more cell lines than declared");
        if (tokens.size() != 4) throw PolicyFormatError("policy file: cell line needs 4 fields 'o m a m\''");
        const int o = parse_int(tokens[0], "observation index");
        const int m = parse_int(tokens[1], "memory index");
        const int a = parse_int(tokens[2], "action index");
        const int next = parse_int(tokens[3], "next memory index");
        if (o != expected / memory || m != expected % memory)
            throw PolicyFormatError("policy file: cells out of order (expected o-major, m-minor)");
        if (a < 0) throw PolicyFormatError("policy file: negative action index");
        if (next < 0 || next >= memory) throw PolicyFormatError("policy file: next memory index out of range");
        policy.table[expected] = PolicyDecision{a, next};
        ++expected;
    }
    if (expected != cells)
        throw PolicyFormatError("policy file: expected " + std::to_string(cells) + " cell lines, got " +
                                std::to_string(expected));
    return policy;
}

} // namespace ffm
