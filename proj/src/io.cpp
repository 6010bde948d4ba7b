#include "bhc/io.hpp"

#include <fstream>
#include <sstream>

namespace bhc {

namespace {

struct Line {
    int number;       // 1-based
    std::string text;
};

// Significant lines only: comments ('#' first char) are dropped, blank lines
// too. CR characters are rejected (grammar is LF-only).
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    int number = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string line = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        if (line.find('\r') != std::string::npos)
            throw ParseError(number, static_cast<int>(line.find('\r')) + 1, "CR line ending; the grammar is LF-only");
        if (!line.empty() && line[0] != '#') out.push_back({number, line});
        if (end == std::string::npos) break;
        pos = end + 1;
        ++number;
    }
    return out;
}

std::vector<std::string> split_tokens(const Line& ln) {
    const std::string& s = ln.text;
    if (!s.empty() && s.back() == ' ') throw ParseError(ln.number, static_cast<int>(s.size()), "trailing whitespace");
    std::vector<std::string> toks;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t sp = s.find(' ', pos);
        std::string tok = s.substr(pos, sp == std::string::npos ? std::string::npos : sp - pos);
        if (tok.empty()) throw ParseError(ln.number, static_cast<int>(pos) + 1, "multiple spaces between tokens");
        toks.push_back(tok);
        if (sp == std::string::npos) break;
        pos = sp + 1;
    }
    return toks;
}

int token_column(const Line& ln, std::size_t index) {
    // Recompute the 1-based column of token #index.
    std::size_t pos = 0;
    for (std::size_t i = 0; i < index; ++i) pos = ln.text.find(' ', pos) + 1;
    return static_cast<int>(pos) + 1;
}

std::int64_t parse_int(const Line& ln, const std::vector<std::string>& toks, std::size_t idx, const char* what) {
    const std::string& t = toks[idx];
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw ParseError(ln.number, token_column(ln, idx), std::string("expected ") + what + ", got '" + t + "'");
    }
    if (used != t.size())
        throw ParseError(ln.number, token_column(ln, idx), std::string("expected ") + what + ", got '" + t + "'");
    return v;
}

std::int32_t parse_entry(const Line& ln, const std::vector<std::string>& toks, std::size_t idx, std::int64_t k) {
    std::int64_t v = parse_int(ln, toks, idx, "a base-10 integer");
    if (v < 0 || v >= k)
        throw ParseError(ln.number, token_column(ln, idx),
                         "entry " + std::to_string(v) + " out of range [0," + std::to_string(k) + ")");
    return static_cast<std::int32_t>(v);
}

struct Header {
    std::vector<std::int64_t> fields;
    std::size_t body_start;
};

Header parse_header(const std::vector<Line>& lines, std::size_t nfields, const char* shape) {
    if (lines.empty()) throw ParseError(1, 1, std::string("empty input; expected header '") + shape + "'");
    auto toks = split_tokens(lines[0]);
    if (toks.size() != nfields)
        throw ParseError(lines[0].number, 1, std::string("header must be '") + shape + "'");
    Header h;
    for (std::size_t i = 0; i < nfields; ++i) h.fields.push_back(parse_int(lines[0], toks, i, "a base-10 integer"));
    h.body_start = 1;
    return h;
}

} // namespace

LogMatrix parse_matrix(const std::string& text) {
    auto lines = significant_lines(text);
    Header h = parse_header(lines, 2, "n k");
    std::int64_t n = h.fields[0], k = h.fields[1];
    if (n < 1) throw ParseError(lines[0].number, 1, "matrix order must be >= 1");
    if (k < 1) throw ParseError(lines[0].number, 1, "matrix phase must be >= 1");
    if (static_cast<std::int64_t>(lines.size()) - 1 < n)
        throw ParseError(lines.back().number, 1,
                         "expected " + std::to_string(n) + " data rows, got " + std::to_string(lines.size() - 1));
    if (static_cast<std::int64_t>(lines.size()) - 1 > n)
        throw ParseError(lines[static_cast<std::size_t>(n) + 1].number, 1, "unexpected content after the last row");
    LogMatrix m(static_cast<int>(n), k);
    for (std::int64_t i = 0; i < n; ++i) {
        const Line& ln = lines[static_cast<std::size_t>(i) + 1];
        auto toks = split_tokens(ln);
        if (static_cast<std::int64_t>(toks.size()) != n)
            throw ParseError(ln.number, 1,
                             "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
        for (std::int64_t j = 0; j < n; ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = parse_entry(ln, toks, static_cast<std::size_t>(j), k);
    }
    return m;
}

std::string emit_matrix(const LogMatrix& m) {
    std::ostringstream os;
    os << m.n << " " << m.k << "\n";
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
    return os.str();
}

namespace {

Code parse_code_impl(const std::string& text, bool allow_cycles, std::vector<Perm>* perms_out) {
    auto lines = significant_lines(text);
    Header h = parse_header(lines, 3, "n k M");
    std::int64_t n = h.fields[0], k = h.fields[1], m = h.fields[2];
    if (n < 1) throw ParseError(lines[0].number, 1, "code length must be >= 1");
    if (k < 1) throw ParseError(lines[0].number, 1, "code modulus must be >= 1");
    if (m < 1) throw ParseError(lines[0].number, 1, "codeword count must be >= 1");
    if (static_cast<std::int64_t>(lines.size()) - 1 != m)
        throw ParseError(lines.back().number, 1,
                         "expected " + std::to_string(m) + " codeword lines, got " + std::to_string(lines.size() - 1));
    Code c(static_cast<int>(n), k, CodeTag::custom);
    for (std::int64_t i = 0; i < m; ++i) {
        const Line& ln = lines[static_cast<std::size_t>(i) + 1];
        auto toks = split_tokens(ln);
        bool has_cycles = toks.size() == static_cast<std::size_t>(n) + 1;
        if (toks.size() != static_cast<std::size_t>(n) && !(allow_cycles && has_cycles))
            throw ParseError(ln.number, 1,
                             "codeword line has " + std::to_string(toks.size()) + " tokens, expected " + std::to_string(n) +
                                 (allow_cycles ? " entries plus one cycle token" : " entries"));
        if (perms_out && !has_cycles)
            throw ParseError(ln.number, 1, "assignment line is missing the permutation cycles");
        std::vector<std::int32_t> v(static_cast<std::size_t>(n));
        for (std::int64_t j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = parse_entry(ln, toks, static_cast<std::size_t>(j), k);
        if (!c.insert(Word(std::move(v), k)))
            throw ParseError(ln.number, 1, "duplicate codeword");
        if (perms_out) {
            try {
                perms_out->push_back(Perm::from_cycles(toks.back(), static_cast<int>(n)));
            } catch (const Error& e) {
                throw ParseError(ln.number, token_column(ln, toks.size() - 1), e.what());
            }
        }
    }
    return c;
}

} // namespace

Code parse_code(const std::string& text) {
    return parse_code_impl(text, false, nullptr);
}

Code parse_code_flexible(const std::string& text) {
    return parse_code_impl(text, true, nullptr);
}

std::string emit_code(const Code& c) {
    std::ostringstream os;
    os << c.n << " " << c.k << " " << c.size() << "\n";
    for (const auto& w : c.words) {
        for (int j = 0; j < c.n; ++j) os << (j ? " " : "") << w.v[static_cast<std::size_t>(j)];
        os << "\n";
    }
    return os.str();
}

PropelinearStructure parse_assignment(const std::string& text) {
    PropelinearStructure ps;
    std::vector<Perm> perms;
    ps.code = parse_code_impl(text, true, &perms);
    ps.assign.perms = std::move(perms);
    return ps;
}

std::string emit_assignment(const PropelinearStructure& ps) {
    std::ostringstream os;
    os << ps.code.n << " " << ps.code.k << " " << ps.code.size() << "\n";
    for (std::size_t i = 0; i < ps.code.size(); ++i) {
        const auto& w = ps.code.words[i];
        for (int j = 0; j < ps.code.n; ++j) os << (j ? " " : "") << w.v[static_cast<std::size_t>(j)];
        os << " " << ps.assign.perms[i].cycles() << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace bhc
