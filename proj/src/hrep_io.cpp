#include "latcount/hrep_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace latcount {

namespace {

struct Token {
    std::string text;
    int line, col;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            toks.push_back(Token{raw.substr(start, i - start), lineno, int(start) + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

std::string where(const Token& t) {
    return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col);
}

Rat parse_rational(const Token& t) {
    const std::string& s = t.text;
    std::size_t slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        if (part.empty()) return false;
        std::size_t k = (part[0] == '-') ? 1 : 0;
        if (k == part.size()) return false;
        for (; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(s)) throw ParseError("non-numeric token '" + s + "' at " + where(t));
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den) || Int(den) == 0)
        throw ParseError("non-numeric token '" + s + "' at " + where(t));
    return make_rat(Int(num), Int(den));
}

long parse_count(const Token& t) {
    Rat r = parse_rational(t);
    if (!is_integer(r) || r <= 0)
        throw ParseError("expected positive integer at " + where(t));
    return long(r.get_num().get_si());
}

}  // namespace

HRep parse_hrep(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty input");
    if (lines[0].size() != 2)
        throw ParseError("malformed header at line " + std::to_string(lines[0][0].line) +
                         ": expected `m n`");
    const long m = parse_count(lines[0][0]);
    const long n = parse_count(lines[0][1]);
    if (n < 2) throw ParseError("header: need n >= 2 (n = d+1)");
    const int d = int(n - 1);
    if (long(lines.size()) != m + 1)
        throw ParseError("expected " + std::to_string(m) + " rows, found " +
                         std::to_string(long(lines.size()) - 1));

    HRep p;
    p.a = IntMat(int(m), d);
    p.b.resize(m);
    for (long i = 0; i < m; ++i) {
        const auto& row = lines[i + 1];
        if (long(row.size()) != n)
            throw ParseError("row length mismatch at line " + std::to_string(row[0].line) +
                             ": expected " + std::to_string(n) + " entries, found " +
                             std::to_string(row.size()));
        RatVec vals(n);
        Int mult(1);
        for (long j = 0; j < n; ++j) {
            vals[j] = parse_rational(row[j]);
            mult = lcm(mult, vals[j].get_den());
        }
        // b_i - <a_i, x> >= 0, cleared to integers.
        p.b[i] = Rat(vals[0] * Rat(mult)).get_num();
        bool all_zero = true;
        for (int j = 0; j < d; ++j) {
            p.a(int(i), j) = Rat(-vals[j + 1] * Rat(mult)).get_num();
            if (p.a(int(i), j) != 0) all_zero = false;
        }
        if (all_zero)
            throw ParseError("row with all-zero coefficient part at line " +
                             std::to_string(row[0].line));
    }
    return p;
}

std::string render_hrep(const HRep& p) {
    std::string out = std::to_string(p.rows()) + " " + std::to_string(p.dim() + 1) + "\n";
    for (int i = 0; i < p.rows(); ++i) {
        out += p.b[i].get_str();
        for (int j = 0; j < p.dim(); ++j) {
            out += " ";
            out += Int(-p.a(i, j)).get_str();
        }
        out += "\n";
    }
    return out;
}

HRep read_hrep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hrep(buf.str());
}

}  // namespace latcount
