#pragma once

#include "partition.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace schur {

/// Malformed input, located by 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                             ": " + what),
          line_(line), col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::size_t line_, col_;
};

namespace detail {

struct Token {
    std::string text;
    std::size_t col; // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline bool skippable(const std::vector<Token>& toks) {
    return toks.empty() || toks.front().text.front() == '#';
}

inline Rat parse_exponent(const GroupContext& ctx, const Token& t, std::size_t line_no) {
    auto q = parse_rational(t.text);
    if (!q) throw ParseError(line_no, t.col, "malformed exponent '" + t.text + "'");
    if (!ctx.admits(*q))
        throw ParseError(line_no, t.col, "non-integral exponent '" + t.text + "' in " + ctx.name());
    return *q;
}

inline GroupContext parse_group_header(const std::vector<Token>& toks, std::size_t line_no) {
    if (toks.size() != 2 || toks[0].text != "group")
        throw ParseError(line_no, toks.empty() ? 1 : toks[0].col, "expected 'group Z', 'group Z/<n>', or 'group Q'");
    const Token& g = toks[1];
    if (g.text == "Z") return GroupContext::infinite();
    if (g.text == "Q") return GroupContext::rational();
    if (g.text.rfind("Z/", 0) == 0) {
        auto n = parse_rational(g.text.substr(2));
        if (n && is_integral(*n) && *n >= 1) return GroupContext::finite(rat_num(*n));
    }
    throw ParseError(line_no, g.col, "unknown group '" + g.text + "'");
}

} // namespace detail

/// Reads the partition text format:
///   group Z | group Z/<n> | group Q
///   window <lo> <hi>          (optional; group Z only; lo = -hi)
///   class e1 e2 ...           (one line per class)
/// Blank lines and lines starting with '#' are ignored.
inline Partition parse_partition(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<GroupContext> ctx;
    bool have_window = false;
    Int lo = 0, hi = 0;
    std::vector<std::vector<Rat>> classes;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (detail::skippable(toks)) continue;
        const std::string& head = toks[0].text;
        if (!ctx) {
            ctx = detail::parse_group_header(toks, line_no);
            continue;
        }
        if (head == "group") throw ParseError(line_no, toks[0].col, "duplicate group line");
        if (head == "window") {
            if (ctx->kind() != GroupKind::InfiniteCyclic)
                throw ParseError(line_no, toks[0].col, "window only applies to group Z");
            if (have_window) throw ParseError(line_no, toks[0].col, "duplicate window line");
            if (!classes.empty())
                throw ParseError(line_no, toks[0].col, "window must precede class lines");
            if (toks.size() != 3) throw ParseError(line_no, toks[0].col, "expected 'window <lo> <hi>'");
            Rat qlo = detail::parse_exponent(*ctx, toks[1], line_no);
            Rat qhi = detail::parse_exponent(*ctx, toks[2], line_no);
            lo = rat_num(qlo);
            hi = rat_num(qhi);
            if (lo != -hi || hi < 0)
                throw ParseError(line_no, toks[1].col, "window must be a symmetric range [-N, N]");
            have_window = true;
            continue;
        }
        if (head == "class") {
            if (toks.size() < 2) throw ParseError(line_no, toks[0].col, "empty class line");
            std::vector<Rat> cls;
            for (std::size_t i = 1; i < toks.size(); ++i)
                cls.push_back(detail::parse_exponent(*ctx, toks[i], line_no));
            classes.push_back(std::move(cls));
            continue;
        }
        throw ParseError(line_no, toks[0].col, "unknown directive '" + head + "'");
    }

    if (!ctx) throw ParseError(line_no + 1, 1, "missing group line");
    if (ctx->is_finite()) return Partition::whole_group(*ctx, classes);
    if (have_window) return Partition::windowed(*ctx, lo, hi, classes);
    return Partition::class_list(*ctx, classes);
}

/// Reads an elements file: a group line, then one element per line as
/// whitespace-separated coeff@exp tokens.
inline std::pair<GroupContext, std::vector<RingElement>> parse_elements(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<GroupContext> ctx;
    std::vector<RingElement> elems;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (detail::skippable(toks)) continue;
        if (!ctx) {
            ctx = detail::parse_group_header(toks, line_no);
            continue;
        }
        if (toks[0].text == "group") throw ParseError(line_no, toks[0].col, "duplicate group line");
        std::vector<std::pair<Rat, Rat>> terms;
        for (const auto& t : toks) {
            std::size_t at = t.text.find('@');
            if (at == std::string::npos || at == 0 || at + 1 >= t.text.size())
                throw ParseError(line_no, t.col, "expected coeff@exp, got '" + t.text + "'");
            auto c = parse_rational(t.text.substr(0, at));
            if (!c) throw ParseError(line_no, t.col, "malformed coefficient in '" + t.text + "'");
            auto e = parse_rational(t.text.substr(at + 1));
            if (!e) throw ParseError(line_no, t.col + at + 1, "malformed exponent in '" + t.text + "'");
            if (!ctx->admits(*e))
                throw ParseError(line_no, t.col + at + 1,
                                 "non-integral exponent '" + t.text.substr(at + 1) + "' in " + ctx->name());
            terms.emplace_back(*e, *c);
        }
        elems.emplace_back(*ctx, terms);
    }

    if (!ctx) throw ParseError(line_no + 1, 1, "missing group line");
    return {*ctx, std::move(elems)};
}

inline std::string serialize_partition(const Partition& P) {
    std::ostringstream out;
    out << "group " << P.ctx().name() << "\n";
    if (P.universe_kind() == UniverseKind::ExplicitWindow)
        out << "window " << P.window_lo().str() << " " << P.window_hi().str() << "\n";
    for (const ExpClass& C : P.classes()) {
        out << "class";
        for (const Rat& e : C) out << " " << rat_to_string(e);
        out << "\n";
    }
    return out.str();
}

inline std::string serialize_element(const RingElement& alpha) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : alpha.terms()) {
        if (!first) out << " ";
        first = false;
        out << rat_to_string(c) << "@" << rat_to_string(e);
    }
    return out.str();
}

} // namespace schur
