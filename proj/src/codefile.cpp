#include "z2z4/codefile.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

// Strip a '#' comment (anywhere in the line) and report emptiness.
std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::size_t parse_size(const std::string& tok, std::size_t lineno, const char* what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(lineno, std::string("bad ") + what + " '" + tok + "'");
    return static_cast<std::size_t>(std::stoull(tok));
}

std::uint8_t parse_entry(const std::string& tok, unsigned modulus, std::size_t lineno) {
    if (tok.size() != 1 || tok[0] < '0' || tok[0] >= static_cast<char>('0' + modulus))
        throw ParseError(lineno, "entry '" + tok + "' out of range mod " +
                                     std::to_string(modulus));
    return static_cast<std::uint8_t>(tok[0] - '0');
}

}  // namespace

AdditiveCode parse_code_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    MixedMatrix m;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        auto toks = tokens_of(line);
        if (!have_header) {
            if (toks.size() != 2)
                throw ParseError(lineno, "header must be 'alpha beta', got " +
                                             std::to_string(toks.size()) + " tokens");
            m.alpha = parse_size(toks[0], lineno, "alpha");
            m.beta = parse_size(toks[1], lineno, "beta");
            have_header = true;
            continue;
        }
        auto sep = std::find(toks.begin(), toks.end(), "|");
        if (sep == toks.end()) throw ParseError(lineno, "missing '|' separator");
        std::size_t nx = static_cast<std::size_t>(sep - toks.begin());
        std::size_t ny = toks.size() - nx - 1;
        if (nx != m.alpha)
            throw ParseError(lineno, "expected " + std::to_string(m.alpha) +
                                         " binary entries, got " + std::to_string(nx));
        if (ny != m.beta)
            throw ParseError(lineno, "expected " + std::to_string(m.beta) +
                                         " quaternary entries, got " + std::to_string(ny));
        MixedWord w = zero_word(m.alpha, m.beta);
        for (std::size_t i = 0; i < nx; ++i) w.x[i] = parse_entry(toks[i], 2, lineno);
        for (std::size_t i = 0; i < ny; ++i) w.y[i] = parse_entry(*(sep + 1 + i), 4, lineno);
        m.rows.push_back(std::move(w));
    }
    if (!have_header) throw ParseError(lineno, "missing 'alpha beta' header");
    return AdditiveCode{std::move(m)};
}

std::string print_code_file(const MixedMatrix& m) {
    std::string out = std::to_string(m.alpha) + " " + std::to_string(m.beta) + "\n";
    for (const auto& r : m.rows) {
        std::string line;
        for (auto v : r.x) {
            line += static_cast<char>('0' + v);
            line += ' ';
        }
        line += '|';
        for (auto v : r.y) {
            line += ' ';
            line += static_cast<char>('0' + v);
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace z2z4
