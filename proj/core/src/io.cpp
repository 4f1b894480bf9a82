#include "relalg/io.hpp"

#include "relalg/error.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace relalg {

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

struct Line {
    int number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        auto end = text.find('\n');
        auto raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                ++i;
            auto start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r')
                ++i;
            if (i > start)
                line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        if (end == std::string_view::npos)
            break;
    }
    return lines;
}

[[noreturn]] void fail(const Line &line, const Token &token, const std::string &message)
{
    throw ParseError(message, line.number, token.column);
}

[[noreturn]] void fail_end(const Line &line, const std::string &message)
{
    const auto &last = line.tokens.back();
    throw ParseError(message, line.number, last.column + static_cast<int>(last.text.size()));
}

bool valid_name(std::string_view s)
{
    if (s.empty() || s == "0" || s == "1")
        return false;
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '\'' || c == '-' || c == '.';
        if (!ok)
            return false;
    }
    return true;
}

int parse_int(const Line &line, const Token &tok, const char *what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        fail(line, tok, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    return value;
}

/// Atom names (or a lone 0 / 1) from tokens[first..).
Element parse_label(const Line &line, std::size_t first, const std::map<std::string, int, std::less<>> &atoms,
                    Element universe)
{
    if (first >= line.tokens.size())
        fail_end(line, "expected at least one atom name");
    if (line.tokens.size() == first + 1) {
        if (line.tokens[first].text == "0")
            return {};
        if (line.tokens[first].text == "1")
            return universe;
    }
    Element label;
    for (auto i = first; i < line.tokens.size(); ++i) {
        const auto &tok = line.tokens[i];
        auto it = atoms.find(tok.text);
        if (it == atoms.end())
            fail(line, tok, "unknown atom '" + std::string(tok.text) + "'");
        label |= Element::atom(AtomId(it->second));
    }
    return label;
}

std::string label_text(const RelationAlgebra &ra, Element label)
{
    if (label.empty())
        return "0";
    std::string out;
    for (auto a : label.atoms()) {
        if (!out.empty())
            out += ' ';
        out += ra.atom_name(a);
    }
    return out;
}

}  // namespace

RelationAlgebra parse_algebra_unchecked(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError("empty algebra file", 1, 1);

    std::optional<std::string> name;
    std::vector<std::string> atom_names;
    std::map<std::string, int, std::less<>> atoms;
    std::optional<Element> identity;
    std::vector<std::optional<AtomId>> converse;
    std::map<std::pair<int, int>, Element> comp;
    Element universe;

    auto need_atoms = [&](const Line &line) {
        if (atom_names.empty())
            fail(line, line.tokens[0], "'atoms' must come before '" + std::string(line.tokens[0].text) + "'");
    };
    auto lookup = [&](const Line &line, const Token &tok) {
        auto it = atoms.find(tok.text);
        if (it == atoms.end())
            fail(line, tok, "unknown atom '" + std::string(tok.text) + "'");
        return it->second;
    };

    for (const auto &line : lines) {
        const auto &head = line.tokens[0];
        if (!name && head.text != "algebra")
            fail(line, head, "file must start with 'algebra <name>'");
        if (head.text == "algebra") {
            if (name)
                fail(line, head, "duplicate 'algebra' header");
            if (line.tokens.size() != 2)
                fail(line, head, "expected 'algebra <name>'");
            name = std::string(line.tokens[1].text);
        } else if (head.text == "atoms") {
            if (!atom_names.empty())
                fail(line, head, "duplicate 'atoms' line");
            if (line.tokens.size() < 2)
                fail_end(line, "expected at least one atom");
            if (line.tokens.size() - 1 > max_atoms)
                fail(line, line.tokens[max_atoms + 1], "more than 64 atoms");
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const auto &tok = line.tokens[i];
                if (!valid_name(tok.text))
                    fail(line, tok, "invalid atom name '" + std::string(tok.text) + "'");
                if (!atoms.emplace(std::string(tok.text), static_cast<int>(atom_names.size())).second)
                    fail(line, tok, "duplicate atom '" + std::string(tok.text) + "'");
                atom_names.emplace_back(tok.text);
            }
            converse.assign(atom_names.size(), std::nullopt);
            universe = Element::from_bits(atom_names.size() == 64 ? ~std::uint64_t{0}
                                                                  : (std::uint64_t{1} << atom_names.size()) - 1);
        } else if (head.text == "identity") {
            need_atoms(line);
            if (identity)
                fail(line, head, "duplicate 'identity' line");
            Element id;
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                id |= Element::atom(AtomId(lookup(line, line.tokens[i])));
            if (id.empty())
                fail_end(line, "identity needs at least one atom");
            identity = id;
        } else if (head.text == "converse") {
            need_atoms(line);
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const auto &tok = line.tokens[i];
                auto eq = tok.text.find('=');
                if (eq == std::string_view::npos)
                    fail(line, tok, "expected '<atom>=<atom>'");
                Token lhs{tok.text.substr(0, eq), tok.column};
                Token rhs{tok.text.substr(eq + 1), tok.column + static_cast<int>(eq) + 1};
                int a = lookup(line, lhs), b = lookup(line, rhs);
                if (converse[a] && *converse[a] != AtomId(b))
                    fail(line, tok, "conflicting converse for '" + std::string(lhs.text) + "'");
                converse[a] = AtomId(b);
            }
        } else if (head.text == "comp") {
            need_atoms(line);
            if (line.tokens.size() < 5 || line.tokens[3].text != "=")
                fail(line, head, "expected 'comp <atom> <atom> = <atom>+'");
            int a = lookup(line, line.tokens[1]), b = lookup(line, line.tokens[2]);
            auto value = parse_label(line, 4, atoms, universe);
            if (!comp.emplace(std::pair{a, b}, value).second)
                fail(line, head, "duplicate comp entry for " + std::string(line.tokens[1].text) + " " +
                                     std::string(line.tokens[2].text));
        } else {
            fail(line, head, "unknown directive '" + std::string(head.text) + "'");
        }
    }

    const auto &last = lines.back();
    if (atom_names.empty())
        throw ParseError("missing 'atoms' line", last.number, 1);
    if (!identity)
        throw ParseError("missing 'identity' line", last.number, 1);

    const int n = static_cast<int>(atom_names.size());
    std::vector<AtomId> converse_map(n);
    for (int i = 0; i < n; ++i)
        converse_map[i] = converse[i].value_or(AtomId(i));

    std::vector<Element> table(static_cast<std::size_t>(n) * n);
    const bool single_identity = identity->size() == 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = comp.find({a, b});
            if (it != comp.end()) {
                table[a * n + b] = it->second;
            } else if (single_identity && identity->contains(AtomId(a))) {
                table[a * n + b] = Element::atom(AtomId(b));
            } else if (single_identity && identity->contains(AtomId(b))) {
                table[a * n + b] = Element::atom(AtomId(a));
            } else {
                throw ParseError("missing comp entry for " + atom_names[a] + " " + atom_names[b], last.number, 1);
            }
        }

    try {
        return RelationAlgebra::make(*name, std::move(atom_names), *identity, std::move(converse_map),
                                     std::move(table));
    } catch (const MalformedAlgebra &e) {
        throw ParseError(e.what(), last.number, 1);
    }
}

RelationAlgebra parse_algebra(std::string_view text)
{
    auto ra = parse_algebra_unchecked(text);
    require_valid(ra);
    return ra;
}

std::string print_algebra(const RelationAlgebra &ra)
{
    std::ostringstream os;
    os << "algebra " << ra.name() << '\n';
    os << "atoms";
    for (const auto &n : ra.atom_names())
        os << ' ' << n;
    os << "\nidentity " << label_text(ra, ra.identity()) << '\n';
    std::string conv;
    for (int i = 0; i < ra.size(); ++i)
        if (ra.converse(AtomId(i)) != AtomId(i))
            conv += ' ' + ra.atom_name(AtomId(i)) + '=' + ra.atom_name(ra.converse(AtomId(i)));
    if (!conv.empty())
        os << "converse" << conv << '\n';
    for (int a = 0; a < ra.size(); ++a)
        for (int b = 0; b < ra.size(); ++b)
            os << "comp " << ra.atom_name(AtomId(a)) << ' ' << ra.atom_name(AtomId(b)) << " = "
               << label_text(ra, ra.compose(AtomId(a), AtomId(b))) << '\n';
    return os.str();
}

NamedNetwork parse_network(std::string_view text, const RelationAlgebra &ra)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError("empty network file", 1, 1);

    std::map<std::string, int, std::less<>> atoms;
    for (int i = 0; i < ra.size(); ++i)
        atoms.emplace(ra.atom_name(AtomId(i)), i);

    const auto &header = lines.front();
    if (header.tokens[0].text != "network" || header.tokens.size() != 4 || header.tokens[2].text != "nodes")
        fail(header, header.tokens[0], "expected 'network <name> nodes <n>'");
    NamedNetwork result;
    result.name = std::string(header.tokens[1].text);
    const int n = parse_int(header, header.tokens[3], "node count");
    if (n < 1)
        fail(header, header.tokens[3], "node count must be positive");

    std::vector<std::optional<Element>> given(static_cast<std::size_t>(n) * n);
    std::optional<Element> fallback;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto &line = lines[l];
        const auto &head = line.tokens[0];
        if (head.text == "default") {
            if (fallback)
                fail(line, head, "duplicate 'default' line");
            fallback = parse_label(line, 1, atoms, ra.one());
            continue;
        }
        if (line.tokens.size() < 3)
            fail(line, head, "expected '<i> <j> <atom>+'");
        const int i = parse_int(line, line.tokens[0], "node index");
        const int j = parse_int(line, line.tokens[1], "node index");
        if (i < 1 || i > n)
            fail(line, line.tokens[0], "node " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        if (j < 1 || j > n)
            fail(line, line.tokens[1], "node " + std::to_string(j) + " out of range 1.." + std::to_string(n));
        auto &slot = given[static_cast<std::size_t>(i - 1) * n + (j - 1)];
        if (slot)
            fail(line, head, "duplicate constraint for pair " + std::to_string(i) + " " + std::to_string(j));
        slot = parse_label(line, 2, atoms, ra.one());
    }

    result.network = Network(n, Element{});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            result.network.set(x, y, given[static_cast<std::size_t>(x) * n + y].value_or(
                                         x == y ? ra.one() : fallback.value_or(ra.one())));
    return result;
}

std::string print_network(const RelationAlgebra &ra, const Network &net, std::string_view name)
{
    std::ostringstream os;
    os << "network " << name << " nodes " << net.node_count() << '\n';
    for (int x = 0; x < net.node_count(); ++x)
        for (int y = 0; y < net.node_count(); ++y)
            os << x + 1 << ' ' << y + 1 << ' ' << label_text(ra, net.at(x, y)) << '\n';
    return os.str();
}

}  // namespace relalg
