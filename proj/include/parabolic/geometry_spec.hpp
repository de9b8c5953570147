#ifndef PARABOLIC_GEOMETRY_SPEC_HPP
#define PARABOLIC_GEOMETRY_SPEC_HPP

#include <string>
#include <vector>

#include "parabolic/kostant.hpp"

namespace parabolic {

/// An algebra label with an optional crossing set, e.g. "D6/P1,4" or "G2".
struct GeometrySpec {
    Family family = Family::A;
    int rank = 0;
    std::vector<Node> crosses;

    std::string type() const { return type_label(family, rank); }

    std::string str() const {
        if (crosses.empty())
            return type();
        std::string s = type() + "/P";
        for (std::size_t i = 0; i < crosses.size(); ++i)
            s += (i ? "," : "") + std::to_string(crosses[i]);
        return s;
    }

    bool operator==(const GeometrySpec&) const = default;
};

namespace detail {

inline int parse_number(const std::string& s, std::size_t& i, std::size_t offset, const char* what) {
    const std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9')
        ++i;
    if (i == start)
        throw ParseError(std::string("expected ") + what, offset + start);
    if (i - start > 4)
        throw ParseError(std::string(what) + " is too large", offset + start);
    return std::stoi(s.substr(start, i - start));
}

} // namespace detail

/// Comma-separated node list, e.g. "1,4". Positions in errors are offset by `offset`.
inline std::vector<Node> parse_crosses(const std::string& s, std::size_t offset = 0) {
    std::vector<Node> out;
    std::size_t i = 0;
    if (s.empty())
        throw ParseError("empty crossing set", offset);
    while (true) {
        const int n = detail::parse_number(s, i, offset, "a node number");
        if (n == 0)
            throw ParseError("nodes are numbered from 1", offset + i - 1);
        if (std::find(out.begin(), out.end(), n) != out.end())
            throw ParseError("node " + std::to_string(n) + " listed twice", offset + i - 1);
        out.push_back(n);
        if (i == s.size())
            break;
        if (s[i] != ',')
            throw ParseError("expected ',' between nodes", offset + i);
        ++i;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Parses "G2", "D6/P1,4" or "D6/1,4"; an explicit `crosses` string, when nonempty, is appended.
inline GeometrySpec parse_geometry(const std::string& label, const std::string& crosses = {}) {
    GeometrySpec g;
    if (label.empty())
        throw ParseError("expected an algebra label like 'G2'", 0);
    const auto fam = family_from_letter(label[0]);
    if (!fam)
        throw ParseError("unknown family letter '" + label.substr(0, 1) + "'", 0);
    g.family = *fam;
    std::size_t i = 1;
    g.rank = detail::parse_number(label, i, 0, "a rank");
    if (i < label.size()) {
        if (label[i] != '/')
            throw ParseError("expected '/' after the algebra label", i);
        ++i;
        if (i < label.size() && label[i] == 'P')
            ++i;
        g.crosses = parse_crosses(label.substr(i), i);
        if (!crosses.empty())
            throw ParseError("crossing set given twice", 0);
    } else if (!crosses.empty()) {
        g.crosses = parse_crosses(crosses);
    }
    if (!is_supported_type(g.family, g.rank))
        throw UnsupportedType("unsupported simple type " + g.type());
    for (Node n : g.crosses)
        if (n > g.rank)
            throw NodeOutOfRange("node " + std::to_string(n) + " outside 1.." + std::to_string(g.rank));
    return g;
}

/// Word "(21)", "21", "2,1" or "(10,9)".
inline Word parse_word(const std::string& text) {
    std::string s = text;
    std::size_t offset = 0;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')')
            throw ParseError("unbalanced parenthesis in word", s.size());
        s = s.substr(1, s.size() - 2);
        offset = 1;
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        if (s.size() != 2 || !std::isdigit(static_cast<unsigned char>(s[0])) ||
            !std::isdigit(static_cast<unsigned char>(s[1])))
            throw ParseError("a word is two nodes, e.g. 21 or 10,9", offset);
        return {s[0] - '0', s[1] - '0'};
    }
    std::size_t i = 0;
    const int j = detail::parse_number(s, i, offset, "a node number");
    if (i != comma)
        throw ParseError("expected ',' in word", offset + i);
    ++i;
    const int k = detail::parse_number(s, i, offset, "a node number");
    if (i != s.size())
        throw ParseError("trailing characters in word", offset + i);
    return {j, k};
}

/// Comma- or space-separated list of words, e.g. "21,23" or "(10,9) (9,8)".
inline std::vector<Word> parse_words(const std::string& text) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == ',') {
            ++i;
            continue;
        }
        std::size_t j = i;
        if (text[i] == '(') {
            j = text.find(')', i);
            if (j == std::string::npos)
                throw ParseError("unbalanced parenthesis in word list", i);
            ++j;
        } else {
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j == i)
                throw ParseError("unexpected character in word list", i);
        }
        out.push_back(parse_word(text.substr(i, j - i)));
        i = j;
    }
    return out;
}

/// ASCII Dynkin diagram in Bourbaki numbering; crossed nodes are drawn as 'x'.
inline std::string render_diagram(const RootSystem& rs, const std::vector<Node>& crosses = {}) {
    const int l = rs.rank();
    const Family f = rs.family();
    std::vector<Node> chain;
    Node hang = 0;
    int attach = -1;
    if (f == Family::E) {
        chain.push_back(1);
        for (Node n = 3; n <= l; ++n)
            chain.push_back(n);
        hang = 2;
        attach = 2;
    } else if (f == Family::D) {
        for (Node n = 1; n < l; ++n)
            chain.push_back(n);
        hang = l;
        attach = l - 3;
    } else {
        for (Node n = 1; n <= l; ++n)
            chain.push_back(n);
    }
    auto mark = [&](Node n) {
        return std::find(crosses.begin(), crosses.end(), n) != crosses.end() ? "x" : "o";
    };
    auto bond = [&](Node a, Node b) -> std::string {
        const int cab = rs.cartan(a, b), cba = rs.cartan(b, a);
        if (cab == 0)
            return "   ";
        if (cab == -1 && cba == -1)
            return "---";
        const bool triple = cab == -3 || cba == -3;
        // The arrow points to the short root.
        const bool to_b = rs.simple_length2(a) > rs.simple_length2(b);
        const std::string edge = triple ? "≡" : "=";
        return edge + (to_b ? ">" : "<") + edge;
    };
    std::string top, nums;
    for (std::size_t p = 0; p < chain.size(); ++p) {
        top += mark(chain[p]);
        std::string num = std::to_string(chain[p]);
        nums += num;
        if (p + 1 < chain.size()) {
            top += bond(chain[p], chain[p + 1]);
            nums += std::string(4 - std::min<std::size_t>(num.size(), 3), ' ');
        }
    }
    std::string out = top + "\n" + nums + "\n";
    if (hang) {
        const std::string pad(4 * attach, ' ');
        out += pad + "|\n" + pad + mark(hang) + " " + std::to_string(hang) + "\n";
    }
    return out;
}

} // namespace parabolic

#endif // PARABOLIC_GEOMETRY_SPEC_HPP
