#include "ffm/parser.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace ffm {

namespace {

constexpr double kRowTolerance = 1e-6;  // accepted slack in hand-written files
constexpr double kExactTolerance = 1e-9; // rows closer than this are kept verbatim

struct Line {
    int number = 0;
    std::vector<std::string> tokens; // ':' always appears as its own token
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;

        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || raw[first] == '#') {
            if (pos > text.size()) break;
            continue;
        }

        Line line;
        line.number = number;
        std::string token;
        for (char c : raw) {
            if (c == ' ' || c == '\t' || c == '\r') {
                if (!token.empty()) { line.tokens.push_back(token); token.clear(); }
            } else if (c == ':') {
                if (!token.empty()) { line.tokens.push_back(token); token.clear(); }
                line.tokens.push_back(":");
            } else {
                token += c;
            }
        }
        if (!token.empty()) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (pos > text.size()) break;
    }
    return lines;
}

// Splits a tokenized line on ':' tokens: "T: a : s : s' p" becomes
// ["T"], ["a"], ["s"], ["s'", "p"].
std::vector<std::vector<std::string>> colon_fields(const Line& line) {
    std::vector<std::vector<std::string>> fields(1);
    for (const auto& token : line.tokens) {
        if (token == ":")
            fields.emplace_back();
        else
            fields.back().push_back(token);
    }
    return fields;
}

bool is_integer_token(const std::string& token) {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); });
}

struct TransEntry { int line; std::string action, from, to; double p; };
struct ObsEntry { int line; std::string action, state, obs; double p; };
struct RewEntry { int line; std::string action, from, to, obs; double v; };

class Parser {
  public:
    explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

    ParseResult run() {
        scan();
        if (!has_errors()) build();
        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        if (!pomdp_ || std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                                   [](const Diagnostic& d) { return d.severity == Severity::error; }))
            return result;
        result.pomdp = std::move(pomdp_);
        return result;
    }

  private:
    std::vector<Line> lines_;
    std::size_t cursor_ = 0;
    std::vector<Diagnostic> diagnostics_;

    std::vector<std::string> states_, actions_, observations_;
    bool has_states_ = false, has_actions_ = false, has_observations_ = false;
    std::optional<double> discount_;
    int discount_line_ = 0;
    std::vector<std::string> start_tokens_;
    int start_line_ = 0;
    std::vector<TransEntry> trans_entries_;
    std::vector<ObsEntry> obs_entries_;
    std::vector<RewEntry> rew_entries_;
    std::optional<Pomdp> pomdp_;

    void error(int line, std::string message) {
        diagnostics_.push_back({line, Severity::error, std::move(message)});
    }
    void warning(int line, std::string message) {
        diagnostics_.push_back({line, Severity::warning, std::move(message)});
    }
    bool has_errors() const {
        return std::any_of(diagnostics_.begin(), diagnostics_.end(),
                           [](const Diagnostic& d) { return d.severity == Severity::error; });
    }

    std::optional<double> parse_number(const std::string& token, int line, const char* what) {
        const std::string owned = token;
        char* end = nullptr;
        const double value = std::strtod(owned.c_str(), &end);
        if (end != owned.c_str() + owned.size() || owned.empty()) {
            error(line, std::string("expected a ") + what + ", got '" + token + "'");
            return std::nullopt;
        }
        return value;
    }

    const Line* take_data_line() {
        if (cursor_ >= lines_.size()) return nullptr;
        return &lines_[cursor_++];
    }

    // ---- pass 1: collect declarations and raw table entries ----

    void scan() {
        while (cursor_ < lines_.size()) {
            const Line& line = lines_[cursor_++];
            const std::string& keyword = line.tokens[0];
            if (keyword == "discount") scan_discount(line);
            else if (keyword == "values") scan_values(line);
            else if (keyword == "states") scan_names(line, states_, has_states_, "state", 's');
            else if (keyword == "actions") scan_names(line, actions_, has_actions_, "action", 'a');
            else if (keyword == "observations") scan_names(line, observations_, has_observations_, "observation", 'o');
            else if (keyword == "start") scan_start(line);
            else if (keyword == "T") scan_transition(line);
            else if (keyword == "O") scan_observation(line);
            else if (keyword == "R") scan_reward(line);
            else error(line.number, "unknown keyword '" + keyword + "'");
        }
        if (!has_states_) error(0, "missing 'states' declaration");
        if (!has_actions_) error(0, "missing 'actions' declaration");
        if (!has_observations_) error(0, "missing 'observations' declaration");
    }

    bool expect_colon(const Line& line, std::size_t index) {
        if (index < line.tokens.size() && line.tokens[index] == ":") return true;
        error(line.number, "expected ':' after '" + line.tokens[0] + "'");
        return false;
    }

    void scan_discount(const Line& line) {
        if (!expect_colon(line, 1)) return;
        if (line.tokens.size() != 3) { error(line.number, "malformed discount declaration"); return; }
        auto value = parse_number(line.tokens[2], line.number, "discount value");
        if (!value) return;
        if (discount_) { error(line.number, "duplicate discount declaration"); return; }
        discount_ = *value;
        discount_line_ = line.number;
    }

    void scan_values(const Line& line) {
        if (!expect_colon(line, 1)) return;
        if (line.tokens.size() != 3 || line.tokens[2] != "reward")
            error(line.number, "only 'values: reward' is supported");
    }

    void scan_names(const Line& line, std::vector<std::string>& out, bool& seen, const char* what,
                    char prefix) {
        if (!expect_colon(line, 1)) return;
        if (seen) { error(line.number, std::string("duplicate '") + what + "s' declaration"); return; }
        if (line.tokens.size() < 3) { error(line.number, std::string("empty '") + what + "s' declaration"); return; }
        seen = true;
        if (line.tokens.size() == 3 && is_integer_token(line.tokens[2])) {
            const long count = std::strtol(line.tokens[2].c_str(), nullptr, 10);
            if (count < 1) { error(line.number, std::string(what) + " count must be at least 1"); seen = false; return; }
            for (long i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
            return;
        }
        for (std::size_t i = 2; i < line.tokens.size(); ++i) {
            const std::string& name = line.tokens[i];
            if (name == "*") { error(line.number, "'*' is reserved and cannot name a " + std::string(what)); continue; }
            if (std::find(out.begin(), out.end(), name) != out.end())
                error(line.number, std::string("duplicate ") + what + " name '" + name + "'");
            else
                out.push_back(name);
        }
    }

    void scan_start(const Line& line) {
        if (line.tokens.size() >= 2 && line.tokens[1] != ":") {
            error(line.number, "unsupported start form '" + line.tokens[1] + "' (use a probability list or 'uniform')");
            return;
        }
        if (!expect_colon(line, 1)) return;
        if (start_line_ != 0) { error(line.number, "duplicate start declaration"); return; }
        start_line_ = line.number;
        start_tokens_.assign(line.tokens.begin() + 2, line.tokens.end());
        if (start_tokens_.empty()) {
            const Line* row = take_data_line();
            if (!row) { error(line.number, "start declaration has no distribution"); return; }
            start_tokens_ = row->tokens;
            start_line_ = row->number;
        }
    }

    std::vector<std::string> row_tokens_or_next_line(const Line& line, std::vector<std::string> same_line,
                                                     int& row_line) {
        row_line = line.number;
        if (!same_line.empty()) return same_line;
        const Line* row = take_data_line();
        if (!row) { error(line.number, "expected a probability row after this declaration"); return {}; }
        row_line = row->number;
        return row->tokens;
    }

    void scan_transition(const Line& line) {
        auto fields = colon_fields(line);
        if (fields.size() == 4 && fields[1].size() == 1 && fields[2].size() == 1 &&
            (fields[3].size() == 1 || fields[3].size() == 2)) {
            // T: a : s : s' p   (probability optionally on the next line)
            double p = 0.0;
            int pline = line.number;
            if (fields[3].size() == 2) {
                auto v = parse_number(fields[3][1], line.number, "probability");
                if (!v) return;
                p = *v;
            } else {
                const Line* next = take_data_line();
                if (!next || next->tokens.size() != 1) { error(line.number, "expected a probability after 'T: a : s : s''"); return; }
                auto v = parse_number(next->tokens[0], next->number, "probability");
                if (!v) return;
                p = *v;
                pline = next->number;
            }
            trans_entries_.push_back({pline, fields[1][0], fields[2][0], fields[3][0], p});
            return;
        }
        if (fields.size() == 3 && fields[1].size() == 1 && !fields[2].empty()) {
            // T: a : s  + row over destination states
            std::vector<std::string> row(fields[2].begin() + 1, fields[2].end());
            int row_line = 0;
            row = row_tokens_or_next_line(line, std::move(row), row_line);
            if (row.empty()) return;
            if (!has_states_) { error(line.number, "transition row requires a prior 'states' declaration"); return; }
            if (row.size() != states_.size()) {
                error(row_line, "transition row needs one probability per state");
                return;
            }
            for (std::size_t next = 0; next < row.size(); ++next) {
                auto v = parse_number(row[next], row_line, "probability");
                if (!v) return;
                trans_entries_.push_back({row_line, fields[1][0], fields[2][0], states_[next], *v});
            }
            return;
        }
        if (fields.size() == 2 && (fields[1].size() == 1 || fields[1].size() == 2)) {
            // T: a  + identity/uniform (same or next line) or a full matrix
            scan_transition_matrix(line, fields[1]);
            return;
        }
        error(line.number, "malformed T declaration");
    }

    void scan_transition_matrix(const Line& line, const std::vector<std::string>& field) {
        if (!has_states_) { error(line.number, "transition matrix requires a prior 'states' declaration"); return; }
        const std::string& action = field[0];
        std::string keyword;
        if (field.size() == 2) {
            keyword = field[1];
        } else if (cursor_ < lines_.size() && lines_[cursor_].tokens.size() == 1 &&
                   (lines_[cursor_].tokens[0] == "identity" || lines_[cursor_].tokens[0] == "uniform")) {
            keyword = lines_[cursor_].tokens[0];
            ++cursor_;
        }
        const int S = static_cast<int>(states_.size());
        if (keyword == "identity") {
            for (int s = 0; s < S; ++s) trans_entries_.push_back({line.number, action, states_[s], states_[s], 1.0});
            return;
        }
        if (keyword == "uniform") {
            const double p = 1.0 / S;
            for (int s = 0; s < S; ++s)
                for (int next = 0; next < S; ++next)
                    trans_entries_.push_back({line.number, action, states_[s], states_[next], p});
            return;
        }
        if (!keyword.empty()) { error(line.number, "unknown transition matrix keyword '" + keyword + "'"); return; }
        for (int s = 0; s < S; ++s) {
            const Line* row = take_data_line();
            if (!row || row->tokens.size() != static_cast<std::size_t>(S)) {
                error(line.number, "transition matrix needs " + std::to_string(S) + " rows of " +
                                       std::to_string(S) + " probabilities");
                return;
            }
            for (int next = 0; next < S; ++next) {
                auto v = parse_number(row->tokens[next], row->number, "probability");
                if (!v) return;
                trans_entries_.push_back({row->number, action, states_[s], states_[next], *v});
            }
        }
    }

    void scan_observation(const Line& line) {
        auto fields = colon_fields(line);
        if (fields.size() == 4 && fields[1].size() == 1 && fields[2].size() == 1 &&
            (fields[3].size() == 1 || fields[3].size() == 2)) {
            double p = 0.0;
            int pline = line.number;
            if (fields[3].size() == 2) {
                auto v = parse_number(fields[3][1], line.number, "probability");
                if (!v) return;
                p = *v;
            } else {
                const Line* next = take_data_line();
                if (!next || next->tokens.size() != 1) { error(line.number, "expected a probability after 'O: a : s : o'"); return; }
                auto v = parse_number(next->tokens[0], next->number, "probability");
                if (!v) return;
                p = *v;
                pline = next->number;
            }
            obs_entries_.push_back({pline, fields[1][0], fields[2][0], fields[3][0], p});
            return;
        }
        if (fields.size() == 3 && fields[1].size() == 1 && !fields[2].empty()) {
            // O: a : s'  + row over observations
            std::vector<std::string> row(fields[2].begin() + 1, fields[2].end());
            int row_line = 0;
            row = row_tokens_or_next_line(line, std::move(row), row_line);
            if (row.empty()) return;
            if (!has_observations_) { error(line.number, "observation row requires a prior 'observations' declaration"); return; }
            if (row.size() != observations_.size()) { error(row_line, "observation row needs one probability per observation"); return; }
            for (std::size_t o = 0; o < row.size(); ++o) {
                auto v = parse_number(row[o], row_line, "probability");
                if (!v) return;
                obs_entries_.push_back({row_line, fields[1][0], fields[2][0], observations_[o], *v});
            }
            return;
        }
        if (fields.size() == 2 && fields[1].size() == 1) {
            // O: a  + matrix of |S| rows over observations
            if (!has_states_ || !has_observations_) {
                error(line.number, "observation matrix requires prior 'states' and 'observations' declarations");
                return;
            }
            if (cursor_ < lines_.size() && lines_[cursor_].tokens.size() == 1 && lines_[cursor_].tokens[0] == "uniform") {
                const Line* kw = take_data_line();
                const double p = 1.0 / observations_.size();
                for (const auto& s : states_)
                    for (const auto& o : observations_) obs_entries_.push_back({kw->number, fields[1][0], s, o, p});
                return;
            }
            const int S = static_cast<int>(states_.size());
            for (int s = 0; s < S; ++s) {
                const Line* row = take_data_line();
                if (!row || row->tokens.size() != observations_.size()) {
                    error(line.number, "observation matrix needs " + std::to_string(S) + " rows of " +
                                           std::to_string(observations_.size()) + " probabilities");
                    return;
                }
                for (std::size_t o = 0; o < observations_.size(); ++o) {
                    auto v = parse_number(row->tokens[o], row->number, "probability");
                    if (!v) return;
                    obs_entries_.push_back({row->number, fields[1][0], states_[s], observations_[o], *v});
                }
            }
            return;
        }
        error(line.number, "malformed O declaration");
    }

    void scan_reward(const Line& line) {
        auto fields = colon_fields(line);
        if (fields.size() == 5 && fields[1].size() == 1 && fields[2].size() == 1 && fields[3].size() == 1 &&
            (fields[4].size() == 1 || fields[4].size() == 2)) {
            double v = 0.0;
            int vline = line.number;
            if (fields[4].size() == 2) {
                auto value = parse_number(fields[4][1], line.number, "reward value");
                if (!value) return;
                v = *value;
            } else {
                const Line* next = take_data_line();
                if (!next || next->tokens.size() != 1) { error(line.number, "expected a value after 'R: a : s : s' : o'"); return; }
                auto value = parse_number(next->tokens[0], next->number, "reward value");
                if (!value) return;
                v = *value;
                vline = next->number;
            }
            rew_entries_.push_back({vline, fields[1][0], fields[2][0], fields[3][0], fields[4][0], v});
            return;
        }
        error(line.number, "unsupported R declaration (use 'R: a : s : s' : o v')");
    }

    // ---- pass 2: resolve names, validate distributions, fold rewards ----

    std::vector<int> resolve(const std::string& token, const std::vector<std::string>& names, int line,
                             const char* what) {
        if (token == "*") {
            std::vector<int> all(names.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            return all;
        }
        auto it = std::find(names.begin(), names.end(), token);
        if (it != names.end()) return {static_cast<int>(it - names.begin())};
        if (is_integer_token(token)) {
            const long index = std::strtol(token.c_str(), nullptr, 10);
            if (index >= 0 && index < static_cast<long>(names.size())) return {static_cast<int>(index)};
        }
        error(line, std::string("undeclared ") + what + " '" + token + "'");
        return {};
    }

    void build() {
        const int S = static_cast<int>(states_.size());
        const int A = static_cast<int>(actions_.size());
        const int O = static_cast<int>(observations_.size());

        Pomdp p = Pomdp::with_dimensions(states_, actions_, observations_);

        if (discount_) {
            if (!(*discount_ > 0.0 && *discount_ <= 1.0)) {
                error(discount_line_, "discount must lie in (0, 1]");
            } else {
                p.discount = *discount_;
                if (*discount_ < 1.0)
                    warning(discount_line_, "discount is retained but evaluation uses undiscounted total reward");
            }
        }

        build_transitions(p, S, A);
        build_observations(p, S, A, O);
        build_start(p, S);
        build_rewards(p, S, A);
        if (has_errors()) return;

        for (const auto& violation : validate_pomdp(p)) error(0, "model invariant violated: " + violation);
        if (!has_errors()) pomdp_ = std::move(p);
    }

    void build_transitions(Pomdp& p, int S, int A) {
        std::vector<int> row_line(static_cast<std::size_t>(S) * A, 0);
        for (const auto& entry : trans_entries_) {
            auto as = resolve(entry.action, actions_, entry.line, "action");
            auto fs = resolve(entry.from, states_, entry.line, "state");
            auto ts = resolve(entry.to, states_, entry.line, "state");
            if (entry.p < 0.0 || entry.p > 1.0 + kRowTolerance) {
                error(entry.line, "transition probability outside [0, 1]");
                continue;
            }
            const double prob = std::min(entry.p, 1.0);
            for (int a : as)
                for (int s : fs) {
                    row_line[static_cast<std::size_t>(s) * A + a] = entry.line;
                    for (int t : ts) p.trans(s, a, t) = prob;
                }
        }
        for (int s = 0; s < S; ++s) {
            for (int a = 0; a < A; ++a) {
                double sum = 0.0;
                for (int t = 0; t < S; ++t) sum += p.trans(s, a, t);
                if (std::abs(sum - 1.0) > kRowTolerance) {
                    error(row_line[static_cast<std::size_t>(s) * A + a],
                          "transition row (action '" + actions_[a] + "', state '" + states_[s] + "') sums to " +
                              std::to_string(sum) + ", not 1");
                    continue;
                }
                if (std::abs(sum - 1.0) > kExactTolerance)
                    for (int t = 0; t < S; ++t) p.trans(s, a, t) /= sum;
            }
        }
    }

    void build_observations(Pomdp& p, int S, int A, int O) {
        // Dense per-(action, state) rows; only declared rows participate.
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(A) * S);
        std::vector<int> row_line(static_cast<std::size_t>(A) * S, 0);
        for (const auto& entry : obs_entries_) {
            auto as = resolve(entry.action, actions_, entry.line, "action");
            auto ss = resolve(entry.state, states_, entry.line, "state");
            auto os = resolve(entry.obs, observations_, entry.line, "observation");
            if (entry.p < 0.0 || entry.p > 1.0 + kRowTolerance) {
                error(entry.line, "observation probability outside [0, 1]");
                continue;
            }
            for (int a : as)
                for (int s : ss) {
                    auto& row = rows[static_cast<std::size_t>(a) * S + s];
                    if (row.empty()) row.assign(O, 0.0);
                    row_line[static_cast<std::size_t>(a) * S + s] = entry.line;
                    for (int o : os) row[o] = std::min(entry.p, 1.0);
                }
        }

        std::vector<int> chosen(S, -1);
        for (int s = 0; s < S; ++s) {
            for (int a = 0; a < A; ++a) {
                const auto& row = rows[static_cast<std::size_t>(a) * S + s];
                if (row.empty()) continue;
                const int line = row_line[static_cast<std::size_t>(a) * S + s];
                int point_mass = -1;
                bool stochastic = false;
                double sum = 0.0;
                for (int o = 0; o < O; ++o) {
                    sum += row[o];
                    if (row[o] > kRowTolerance && row[o] < 1.0 - kRowTolerance) stochastic = true;
                    if (row[o] >= 1.0 - kRowTolerance) {
                        if (point_mass >= 0) stochastic = true;
                        point_mass = o;
                    }
                }
                if (stochastic) {
                    error(line, "observation must be a deterministic function of state");
                    return;
                }
                if (std::abs(sum - 1.0) > kRowTolerance || point_mass < 0) {
                    error(line, "observation row (action '" + actions_[a] + "', state '" + states_[s] +
                                    "') sums to " + std::to_string(sum) + ", not 1");
                    return;
                }
                if (chosen[s] >= 0 && chosen[s] != point_mass) {
                    error(line, "observation must be a deterministic function of state");
                    return;
                }
                chosen[s] = point_mass;
            }
        }
        for (int s = 0; s < S; ++s) {
            if (chosen[s] < 0) {
                error(0, "no observation declared for state '" + states_[s] + "'");
                return;
            }
            p.observation_of[s] = chosen[s];
        }
    }

    void build_start(Pomdp& p, int S) {
        if (start_tokens_.empty() || (start_tokens_.size() == 1 && start_tokens_[0] == "uniform")) {
            const double b = 1.0 / S;
            for (int s = 0; s < S; ++s) p.start_belief[s] = b;
            return;
        }
        if (start_tokens_.size() != static_cast<std::size_t>(S)) {
            error(start_line_, "start distribution needs one probability per state");
            return;
        }
        double sum = 0.0;
        for (int s = 0; s < S; ++s) {
            auto v = parse_number(start_tokens_[s], start_line_, "probability");
            if (!v) return;
            if (*v < 0.0 || *v > 1.0 + kRowTolerance) { error(start_line_, "start probability outside [0, 1]"); return; }
            p.start_belief[s] = std::min(*v, 1.0);
            sum += p.start_belief[s];
        }
        if (std::abs(sum - 1.0) > kRowTolerance) {
            error(start_line_, "start distribution sums to " + std::to_string(sum) + ", not 1");
            return;
        }
        if (std::abs(sum - 1.0) > kExactTolerance)
            for (int s = 0; s < S; ++s) p.start_belief[s] /= sum;
    }

    void build_rewards(Pomdp& p, int S, int A) {
        if (has_errors()) return; // folding needs valid transitions and observations
        // R(a, s, s') at the observation actually emitted in s'; entries
        // addressed to an impossible observation carry zero weight.
        std::vector<double> table(static_cast<std::size_t>(A) * S * S, 0.0);
        for (const auto& entry : rew_entries_) {
            auto as = resolve(entry.action, actions_, entry.line, "action");
            auto fs = resolve(entry.from, states_, entry.line, "state");
            auto ts = resolve(entry.to, states_, entry.line, "state");
            std::vector<int> os;
            if (entry.obs != "*") os = resolve(entry.obs, observations_, entry.line, "observation");
            for (int a : as)
                for (int s : fs)
                    for (int t : ts) {
                        const bool applies = entry.obs == "*" ||
                                             std::find(os.begin(), os.end(), p.observation_of[t]) != os.end();
                        if (applies) table[(static_cast<std::size_t>(a) * S + s) * S + t] = entry.v;
                    }
        }
        for (int s = 0; s < S; ++s) {
            for (int a = 0; a < A; ++a) {
                // Expectation over successors; a constant row folds exactly.
                bool constant = true;
                double first = 0.0;
                bool seen = false;
                for (int t = 0; t < S; ++t) {
                    if (p.trans(s, a, t) <= 0.0) continue;
                    const double v = table[(static_cast<std::size_t>(a) * S + s) * S + t];
                    if (!seen) { first = v; seen = true; }
                    else if (v != first) constant = false;
                }
                if (constant) {
                    p.rew(s, a) = seen ? first : 0.0;
                } else {
                    double sum = 0.0;
                    for (int t = 0; t < S; ++t)
                        sum += p.trans(s, a, t) * table[(static_cast<std::size_t>(a) * S + s) * S + t];
                    p.rew(s, a) = sum;
                }
            }
        }
    }
};

} // namespace

bool ParseResult::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
}

ParseResult parse_pomdp(std::string_view text) { return Parser(text).run(); }

ParseResult load_pomdp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseResult result;
        result.diagnostics.push_back({0, Severity::error, "cannot open file '" + path + "'"});
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_pomdp(buffer.str());
}

} // namespace ffm
