#include "pcg/text_format.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace pcg::text {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;

    [[noreturn]] void fail(std::size_t token, const std::string& message) const {
        const std::size_t col = token < tokens.size() ? tokens[token].column : 1;
        throw ParseError(number, col, message);
    }
    void expect_arity(std::size_t n) const {
        if (tokens.size() != n) {
            fail(std::min(tokens.size(), n), "'" + std::string(tokens[0].text) + "' expects " +
                                                 std::to_string(n - 1) + " argument(s), got " +
                                                 std::to_string(tokens.size() - 1));
        }
    }
    std::string word(std::size_t i) const { return std::string(tokens[i].text); }
    Rational number_at(std::size_t i) const {
        try {
            return parse_rational(tokens[i].text);
        } catch (const std::invalid_argument& e) {
            fail(i, e.what());
        }
    }
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
            }
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
            }
            if (i > start) {
                line.tokens.push_back({raw.substr(start, i - start), start + 1});
            }
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return lines;
}

const Line& header(const std::vector<Line>& lines, std::string_view what) {
    if (lines.empty()) {
        throw ParseError(1, 1, "empty input, expected '" + std::string(what) + "' header");
    }
    return lines.front();
}

// `key=value` argument.
Rational keyed(const Line& line, std::size_t i, std::string_view key) {
    const auto tok = line.tokens[i].text;
    if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=') {
        line.fail(i, "expected " + std::string(key) + "=<value>");
    }
    try {
        return parse_rational(tok.substr(key.size() + 1));
    } catch (const std::invalid_argument& e) {
        line.fail(i, e.what());
    }
}

}  // namespace

Graph parse_graph(std::string_view text) {
    const auto lines = tokenize(text);
    const Line& head = header(lines, "graph");
    if (head.tokens[0].text != "graph") {
        head.fail(0, "expected 'graph' header");
    }
    head.expect_arity(2);
    std::size_t declared = 0;
    try {
        declared = std::stoul(head.word(1));
    } catch (const std::exception&) {
        head.fail(1, "node count must be a nonnegative integer");
    }
    std::vector<NodeName> names;
    std::unordered_set<std::string> known;
    std::vector<NamePair> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const auto kw = line.tokens[0].text;
        if (kw == "node") {
            line.expect_arity(2);
            if (!known.insert(line.word(1)).second) {
                line.fail(1, "duplicate node '" + line.word(1) + "'");
            }
            names.push_back(line.word(1));
        } else if (kw == "edge") {
            line.expect_arity(3);
            for (std::size_t i : {1, 2}) {
                if (!known.count(line.word(i))) {
                    line.fail(i, "unknown node '" + line.word(i) + "'");
                }
            }
            if (line.word(1) == line.word(2)) {
                line.fail(2, "self-loop at '" + line.word(1) + "'");
            }
            edges.emplace_back(line.word(1), line.word(2));
        } else {
            line.fail(0, "unexpected keyword '" + std::string(kw) + "'");
        }
    }
    if (names.size() != declared) {
        head.fail(1, "header declares " + std::to_string(declared) + " nodes but " + std::to_string(names.size()) +
                         " are listed");
    }
    return graph_from_edges(std::move(names), edges);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.size() << '\n';
    for (const auto& name : g.nodes()) {
        out << "node " << name << '\n';
    }
    for (const auto& [u, v] : g.edges()) {
        out << "edge " << u << ' ' << v << '\n';
    }
    return out.str();
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& name : g.nodes()) {
        out << "  \"" << name << "\";\n";
    }
    for (const auto& [u, v] : g.edges()) {
        out << "  \"" << u << "\" -- \"" << v << "\";\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

struct ParsedTree {
    WeightedTree tree;
    std::optional<Rational> dmin;
    std::optional<Rational> dmax;
};

ParsedTree parse_tree_file(std::string_view text) {
    const auto lines = tokenize(text);
    const Line& head = header(lines, "tree");
    if (head.tokens[0].text != "tree") {
        head.fail(0, "expected 'tree' header");
    }
    head.expect_arity(1);
    std::vector<std::string> nodes;
    std::unordered_set<std::string> known;
    std::vector<WeightedTree::EdgeSpec> edges;
    std::vector<WeightedTree::LeafSpec> leaves;
    ParsedTree out;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const auto kw = line.tokens[0].text;
        if (kw == "tnode") {
            line.expect_arity(2);
            if (!known.insert(line.word(1)).second) {
                line.fail(1, "duplicate tree node '" + line.word(1) + "'");
            }
            nodes.push_back(line.word(1));
        } else if (kw == "leaf") {
            line.expect_arity(3);
            if (!known.count(line.word(1))) {
                line.fail(1, "unknown tree node '" + line.word(1) + "'");
            }
            leaves.push_back({line.word(1), line.word(2)});
        } else if (kw == "tedge") {
            line.expect_arity(4);
            for (std::size_t i : {1, 2}) {
                if (!known.count(line.word(i))) {
                    line.fail(i, "unknown tree node '" + line.word(i) + "'");
                }
            }
            Rational w = line.number_at(3);
            if (sgn(w) < 0) {
                line.fail(3, "edge weight must be nonnegative");
            }
            edges.push_back({line.word(1), line.word(2), std::move(w)});
        } else if (kw == "dmin" || kw == "dmax") {
            line.expect_arity(2);
            auto& slot = kw == "dmin" ? out.dmin : out.dmax;
            if (slot) {
                line.fail(0, "repeated '" + std::string(kw) + "'");
            }
            slot = line.number_at(1);
            if (sgn(*slot) < 0) {
                line.fail(1, std::string(kw) + " must be nonnegative");
            }
        } else {
            line.fail(0, "unexpected keyword '" + std::string(kw) + "'");
        }
    }
    try {
        out.tree = WeightedTree::build(std::move(nodes), edges, leaves);
    } catch (const std::invalid_argument& e) {
        head.fail(0, e.what());
    }
    return out;
}

}  // namespace

WeightedTree parse_tree(std::string_view text) { return parse_tree_file(text).tree; }

PCGWitness parse_witness(std::string_view text) {
    ParsedTree p = parse_tree_file(text);
    if (!p.dmin || !p.dmax) {
        const auto lines = tokenize(text);
        throw ParseError(lines.back().number + 1, 1, "witness needs both 'dmin' and 'dmax' lines");
    }
    return {std::move(p.tree), *p.dmin, *p.dmax};
}

std::string write_tree(const WeightedTree& t) {
    std::ostringstream out;
    out << "tree\n";
    for (const auto& name : t.node_names()) {
        out << "tnode " << name << '\n';
    }
    for (std::size_t i = 0; i < t.leaves().size(); ++i) {
        out << "leaf " << t.node_name(t.leaves()[i]) << ' ' << t.leaf_names()[i] << '\n';
    }
    for (const auto& e : t.edges()) {
        out << "tedge " << t.node_name(e.u) << ' ' << t.node_name(e.v) << ' ' << format_rational(e.weight) << '\n';
    }
    return out.str();
}

std::string write_witness(const PCGWitness& w) {
    return write_tree(w.tree) + "dmin " + format_rational(w.dmin) + "\ndmax " + format_rational(w.dmax) + '\n';
}

TTFile parse_tt(std::string_view text) {
    const auto lines = tokenize(text);
    const Line& head = header(lines, "ttgraph");
    const auto kind = head.tokens[0].text;
    if (kind != "ttgraph" && kind != "threshold") {
        head.fail(0, "expected 'ttgraph' or 'threshold' header");
    }
    const bool threshold = kind == "threshold";
    head.expect_arity(threshold ? 2 : 1);
    std::vector<TTNode> nodes;
    ThresholdFile tf;
    if (threshold) {
        tf.threshold = head.number_at(1);
    }
    std::unordered_set<std::string> known;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0].text != "node") {
            line.fail(0, "unexpected keyword '" + std::string(line.tokens[0].text) + "'");
        }
        line.expect_arity(threshold ? 3 : 4);
        if (!known.insert(line.word(1)).second) {
            line.fail(1, "duplicate node '" + line.word(1) + "'");
        }
        if (threshold) {
            tf.nodes.push_back({line.word(1), keyed(line, 2, "a")});
            continue;
        }
        Rational g = keyed(line, 2, "g");
        Rational t = keyed(line, 3, "t");
        if (sgn(g) <= 0) {
            line.fail(2, "g must be positive");
        }
        if (sgn(t) <= 0) {
            line.fail(3, "t must be positive");
        }
        nodes.push_back({line.word(1), std::move(g), std::move(t)});
    }
    if (threshold) {
        TTInstance inst = threshold_to_tt(tf.nodes, tf.threshold);
        return {std::move(inst), std::move(tf)};
    }
    return {TTInstance(std::move(nodes)), std::nullopt};
}

std::string write_tt(const TTInstance& inst) {
    std::ostringstream out;
    out << "ttgraph\n";
    for (const auto& v : inst.nodes()) {
        out << "node " << v.name << " g=" << format_rational(v.g) << " t=" << format_rational(v.t) << '\n';
    }
    return out.str();
}

std::string write_threshold(const ThresholdFile& t) {
    std::ostringstream out;
    out << "threshold " << format_rational(t.threshold) << '\n';
    for (const auto& v : t.nodes) {
        out << "node " << v.name << " a=" << format_rational(v.a) << '\n';
    }
    return out.str();
}

geometry::GeometricModel parse_model(std::string_view text) {
    using namespace geometry;
    const auto lines = tokenize(text);
    const Line& head = header(lines, "model");
    if (head.tokens[0].text != "model") {
        head.fail(0, "expected 'model' header");
    }
    head.expect_arity(2);
    Dimension dim;
    if (head.tokens[1].text == "2d") {
        dim = Dimension::Two;
    } else if (head.tokens[1].text == "3d") {
        dim = Dimension::Three;
    } else {
        head.fail(1, "dimension must be 2d or 3d");
    }
    std::vector<std::pair<NodeName, Shape>> shapes;
    std::optional<Family> family;
    std::unordered_set<std::string> labels;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const auto kw = line.tokens[0].text;
        auto num = [&](std::size_t i) { return line.number_at(i); };
        Shape shape;
        if (kw == "disk") {
            line.expect_arity(5);
            shape = Disk{num(2), num(3), num(4)};
        } else if (kw == "hseg") {
            line.expect_arity(5);
            shape = HSeg{num(2), num(3), num(4)};
        } else if (kw == "vseg") {
            line.expect_arity(5);
            shape = VSeg{num(2), num(3), num(4)};
        } else if (kw == "arc") {
            line.expect_arity(4);
            shape = Arc{num(2), num(3)};
        } else if (kw == "rect") {
            line.expect_arity(6);
            shape = Rect{num(2), num(3), num(4), num(5)};
        } else if (kw == "box") {
            line.expect_arity(8);
            shape = Box{num(2), num(3), num(4), num(5), num(6), num(7)};
        } else if (kw == "spp") {
            line.expect_arity(7);
            shape = Parallelepiped{num(2), num(3), num(4), num(5), num(6)};
        } else if (kw == "sppseg") {
            line.expect_arity(5);
            shape = ParallelepipedSegment{num(2), num(3), num(4)};
        } else {
            line.fail(0, "unknown shape '" + std::string(kw) + "'");
        }
        if (!labels.insert(line.word(1)).second) {
            line.fail(1, "duplicate label '" + line.word(1) + "'");
        }
        try {
            validate(shape);
        } catch (const std::invalid_argument& e) {
            line.fail(0, e.what());
        }
        const Family f = family_of(shape);
        if ((dim == Dimension::Three) != (f == Family::Spatial)) {
            line.fail(0, std::string(kw) + " does not belong in a " + (dim == Dimension::Three ? "3d" : "2d") +
                             " model");
        }
        if (family && *family != f) {
            line.fail(0, "model mixes incompatible shape kinds");
        }
        family = f;
        shapes.emplace_back(line.word(1), std::move(shape));
    }
    return GeometricModel(dim, std::move(shapes));
}

std::string write_model(const geometry::GeometricModel& m) {
    using namespace geometry;
    std::ostringstream out;
    auto r = [](const Rational& x) { return format_rational(x); };
    out << "model " << (m.dimension() == Dimension::Three ? "3d" : "2d") << '\n';
    for (const auto& [label, shape] : m.shapes()) {
        out << kind_name(shape) << ' ' << label;
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Disk>) {
                    out << ' ' << r(s.x) << ' ' << r(s.y) << ' ' << r(s.r);
                } else if constexpr (std::is_same_v<T, HSeg>) {
                    out << ' ' << r(s.y) << ' ' << r(s.x1) << ' ' << r(s.x2);
                } else if constexpr (std::is_same_v<T, VSeg>) {
                    out << ' ' << r(s.x) << ' ' << r(s.y1) << ' ' << r(s.y2);
                } else if constexpr (std::is_same_v<T, Arc>) {
                    out << ' ' << r(s.start) << ' ' << r(s.end);
                } else if constexpr (std::is_same_v<T, Rect>) {
                    out << ' ' << r(s.x1) << ' ' << r(s.y1) << ' ' << r(s.x2) << ' ' << r(s.y2);
                } else if constexpr (std::is_same_v<T, Box>) {
                    out << ' ' << r(s.x1) << ' ' << r(s.y1) << ' ' << r(s.z1) << ' ' << r(s.x2) << ' ' << r(s.y2)
                        << ' ' << r(s.z2);
                } else if constexpr (std::is_same_v<T, Parallelepiped>) {
                    out << ' ' << r(s.a) << ' ' << r(s.b) << ' ' << r(s.c) << ' ' << r(s.d) << ' ' << r(s.height);
                } else {
                    out << ' ' << r(s.a) << ' ' << r(s.b) << ' ' << r(s.z);
                }
            },
            shape);
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading '" + path.string() + "'");
    }
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace pcg::text
