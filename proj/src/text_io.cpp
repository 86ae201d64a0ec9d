#include "cpokit/text_io.hpp"

#include <fstream>
#include <sstream>

#include "cpokit/errors.hpp"

namespace cpokit {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) {
            if (tok.front() == '#') break;
            tokens.push_back(tok);
        }
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

void expect(bool cond, int line, const std::string& msg) {
    if (!cond) throw ParseError(line, msg);
}

}  // namespace

FinPoset parse_poset(std::istream& in) {
    auto lines = tokenize(in);
    expect(lines.size() == 4, lines.empty() ? 1 : lines.back().number,
           "poset file needs exactly 4 content lines (poset/elements/bottom/covers)");

    const auto& l0 = lines[0];
    expect(l0.tokens.size() == 2 && l0.tokens[0] == "poset", l0.number, "expected 'poset <name>'");
    const std::string name = l0.tokens[1];

    const auto& l1 = lines[1];
    expect(l1.tokens.size() >= 2 && l1.tokens[0] == "elements:", l1.number,
           "expected 'elements: <label> ...'");
    std::vector<std::string> labels(l1.tokens.begin() + 1, l1.tokens.end());

    const auto& l2 = lines[2];
    expect(l2.tokens.size() == 2 && l2.tokens[0] == "bottom:", l2.number,
           "expected 'bottom: <label>'");
    const std::string bottom = l2.tokens[1];

    const auto& l3 = lines[3];
    expect(!l3.tokens.empty() && l3.tokens[0] == "covers:", l3.number,
           "expected 'covers: <a><b ...' (possibly empty)");
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t k = 1; k < l3.tokens.size(); ++k) {
        const std::string& tok = l3.tokens[k];
        auto pos = tok.find('<');
        expect(pos != std::string::npos && pos > 0 && pos + 1 < tok.size(), l3.number,
               "cover token must look like x<y: " + tok);
        covers.emplace_back(tok.substr(0, pos), tok.substr(pos + 1));
    }
    return FinPoset::from_covers(name, std::move(labels), bottom, covers);
}

FinPoset parse_poset_string(const std::string& text) {
    std::istringstream in(text);
    return parse_poset(in);
}

FinPoset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open poset file: " + path);
    return parse_poset(in);
}

std::string format_poset(const FinPoset& p) {
    std::ostringstream out;
    out << "poset " << p.name() << "\n";
    out << "elements:";
    for (int i = 0; i < p.size(); ++i) out << ' ' << p.label(i);
    out << "\n";
    out << "bottom: " << p.label(p.bottom()) << "\n";
    out << "covers:";
    const Relation cov = p.covers();
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (cov.at(i, j)) out << ' ' << p.label(i) << '<' << p.label(j);
    out << "\n";
    return out.str();
}

FinCpoMap parse_map(std::istream& in, std::span<const FinPoset> posets) {
    auto lines = tokenize(in);
    expect(!lines.empty(), 1, "empty map file");
    const auto& l0 = lines[0];
    expect(l0.tokens.size() == 6 && l0.tokens[0] == "map" && l0.tokens[2] == ":" &&
               l0.tokens[4] == "->",
           l0.number, "expected 'map <name> : <src> -> <dst>'");
    const std::string name = l0.tokens[1];

    auto find_poset = [&](const std::string& pname) -> const FinPoset& {
        for (const auto& p : posets)
            if (p.name() == pname) return p;
        throw ParseError(l0.number, "map references unknown poset: " + pname);
    };
    const FinPoset& src = find_poset(l0.tokens[3]);
    const FinPoset& dst = find_poset(l0.tokens[5]);

    std::vector<int> table(static_cast<std::size_t>(src.size()), -1);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& l = lines[k];
        expect(l.tokens.size() == 3 && l.tokens[1] == "->", l.number,
               "expected '<src-label> -> <dst-label>'");
        auto si = src.index_of(l.tokens[0]);
        expect(si.has_value(), l.number, "unknown source element: " + l.tokens[0]);
        auto di = dst.index_of(l.tokens[2]);
        expect(di.has_value(), l.number, "unknown target element: " + l.tokens[2]);
        expect(table[*si] == -1, l.number, "source element mapped twice: " + l.tokens[0]);
        table[*si] = *di;
    }
    for (int i = 0; i < src.size(); ++i)
        if (table[i] == -1)
            throw ParseError(lines.back().number, "source element not mapped: " + src.label(i));
    return FinCpoMap::make(name, src, dst, std::move(table));
}

FinCpoMap parse_map_string(const std::string& text, std::span<const FinPoset> posets) {
    std::istringstream in(text);
    return parse_map(in, posets);
}

FinCpoMap load_map_file(const std::string& path, std::span<const FinPoset> posets) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open map file: " + path);
    return parse_map(in, posets);
}

std::string format_map(const FinCpoMap& f) {
    std::ostringstream out;
    out << "map " << f.name() << " : " << f.src().name() << " -> " << f.dst().name() << "\n";
    for (int i = 0; i < f.src().size(); ++i)
        out << f.src().label(i) << " -> " << f.dst().label(f.apply(i)) << "\n";
    return out.str();
}

std::string emit_dot(const FinPoset& p) {
    std::ostringstream out;
    out << "digraph \"" << p.name() << "\" {\n";
    out << "  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i) out << "  \"" << p.label(i) << "\";\n";
    const Relation cov = p.covers();
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (cov.at(i, j))
                out << "  \"" << p.label(i) << "\" -> \"" << p.label(j) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace cpokit
