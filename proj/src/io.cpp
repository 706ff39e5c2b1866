#include "ied/io.hpp"

#include <fstream>
#include <sstream>

namespace ied {

namespace {

// Line reader that skips blanks and comments and tracks line numbers.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return line;
        }
        return std::nullopt;
    }

    std::string expect(const std::string& what) {
        auto line = next();
        if (!line) throw ParseError(line_, "expected " + what + ", found end of file");
        return *line;
    }

    // Reads the next line and parses it as `<tag> <numbers...>`.
    std::vector<long long> expect_tagged(const std::string& tag) {
        const std::string line = expect("'" + tag + "' line");
        return parse_tagged(line, tag);
    }

    std::vector<long long> parse_tagged(const std::string& line, const std::string& tag) const {
        std::istringstream ss(line);
        std::string head;
        ss >> head;
        if (head != tag)
            throw ParseError(line_, "expected '" + tag + "' line, found '" + head + "'");
        std::vector<long long> out;
        long long x;
        while (ss >> x) out.push_back(x);
        std::string rest;
        if (ss.clear(), ss >> rest) throw ParseError(line_, "trailing token '" + rest + "'");
        return out;
    }

    int line() const { return line_; }

  private:
    std::istream& in_;
    int line_ = 0;
};

template <typename F>
auto with_file(const std::string& path, F f) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open " + path);
    return f(in);
}

}  // namespace

HypergraphInput parse_hypergraph(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.expect_tagged("H");
    if (header.size() != 2) throw ParseError(reader.line(), "H line needs <n> <m>");
    const int n = static_cast<int>(header[0]);
    const int m = static_cast<int>(header[1]);
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);
    for (int e = 0; e < m; ++e) {
        const auto verts = reader.expect_tagged("E");
        if (verts.empty()) throw ParseError(reader.line(), "empty edge");
        edges.emplace_back(verts.begin(), verts.end());
    }
    std::vector<std::vector<Color>> lists(n);
    bool has_lists = false;
    while (auto line = reader.next()) {
        const auto values = reader.parse_tagged(*line, "L");
        if (values.size() < 2) throw ParseError(reader.line(), "L line needs <v> and colors");
        const int v = static_cast<int>(values[0]);
        if (v < 1 || v > n) throw ParseError(reader.line(), "list vertex outside 1..n");
        if (!lists[v - 1].empty()) throw ParseError(reader.line(), "duplicate list for vertex");
        lists[v - 1].assign(values.begin() + 1, values.end());
        has_lists = true;
    }
    HypergraphInput out{Hypergraph(n, std::move(edges)), std::nullopt};
    if (has_lists) {
        for (int v = 0; v < n; ++v)
            if (lists[v].empty())
                throw InvalidInputError("vertex " + std::to_string(v + 1) + " has no list");
        out.lists = ListAssignment(std::move(lists));
    }
    return out;
}

HypergraphInput parse_hypergraph_file(const std::string& path) {
    return with_file(path, [](std::istream& in) { return parse_hypergraph(in); });
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "H " << h.vertex_count() << " " << h.edge_count() << "\n";
    for (EdgeId e = 1; e <= h.edge_count(); ++e) {
        out << "E";
        for (Vertex v : h.edge(e)) out << " " << v;
        out << "\n";
    }
    return out.str();
}

Graph parse_graph(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.expect_tagged("G");
    if (header.size() != 2) throw ParseError(reader.line(), "G line needs <n> <m>");
    const int n = static_cast<int>(header[0]);
    const int m = static_cast<int>(header[1]);
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (int e = 0; e < m; ++e) {
        const auto verts = reader.expect_tagged("E");
        if (verts.size() != 2) throw ParseError(reader.line(), "graph edge needs two endpoints");
        edges.emplace_back(static_cast<Vertex>(verts[0]), static_cast<Vertex>(verts[1]));
    }
    return Graph(n, std::move(edges));
}

Graph parse_graph_file(const std::string& path) {
    return with_file(path, [](std::istream& in) { return parse_graph(in); });
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "G " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        out << "E " << u << " " << v << "\n";
    }
    return out.str();
}

PermutationFamily parse_permutations(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.expect_tagged("P");
    if (header.size() != 2) throw ParseError(reader.line(), "P line needs <k> <count>");
    const int k = static_cast<int>(header[0]);
    const int count = static_cast<int>(header[1]);
    std::vector<std::vector<int>> perms;
    for (int p = 0; p < count; ++p) {
        const std::string line = reader.expect("permutation line");
        std::istringstream ss(line);
        std::vector<int> perm;
        int x;
        while (ss >> x) perm.push_back(x);
        if (static_cast<int>(perm.size()) != k)
            throw ParseError(reader.line(), "permutation needs exactly k images");
        perms.push_back(std::move(perm));
    }
    return PermutationFamily(k, std::move(perms));
}

PermutationFamily parse_permutations_file(const std::string& path) {
    return with_file(path, [](std::istream& in) { return parse_permutations(in); });
}

NaeFormula parse_formula(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.expect_tagged("F");
    if (header.size() != 2) throw ParseError(reader.line(), "F line needs <nvars> <nclauses>");
    NaeFormula formula;
    formula.num_vars = static_cast<int>(header[0]);
    const int clauses = static_cast<int>(header[1]);
    for (int c = 0; c < clauses; ++c) {
        const auto vars = reader.expect_tagged("C");
        if (vars.empty()) throw ParseError(reader.line(), "empty clause");
        formula.clauses.emplace_back(vars.begin(), vars.end());
    }
    return validate_formula(std::move(formula));
}

NaeFormula parse_formula_file(const std::string& path) {
    return with_file(path, [](std::istream& in) { return parse_formula(in); });
}

std::string format_formula(const NaeFormula& formula) {
    std::ostringstream out;
    out << "F " << formula.num_vars << " " << formula.clauses.size() << "\n";
    for (const auto& clause : formula.clauses) {
        out << "C";
        for (int v : clause) out << " " << v;
        out << "\n";
    }
    return out.str();
}

std::string format_coloring(const PartialColoring& phi, std::uint64_t iterations,
                            std::uint64_t seed) {
    std::ostringstream out;
    for (Vertex v = 1; v <= phi.vertex_count(); ++v)
        if (phi.is_colored(v)) out << v << " " << phi.color(v) << "\n";
    out << "# iterations " << iterations << " seed " << seed << "\n";
    return out.str();
}

std::vector<Color> parse_coloring(std::istream& in, int n) {
    LineReader reader(in);
    std::vector<Color> colors(n, -1);
    while (auto line = reader.next()) {
        std::istringstream ss(*line);
        int v;
        Color c;
        if (!(ss >> v >> c)) throw ParseError(reader.line(), "expected '<vertex> <color>'");
        if (v < 1 || v > n) throw ParseError(reader.line(), "vertex outside 1..n");
        colors[v - 1] = c;
    }
    for (int v = 0; v < n; ++v)
        if (colors[v] < 0) throw IncompleteColoringError(v + 1);
    return colors;
}

std::vector<Color> parse_coloring_file(const std::string& path, int n) {
    return with_file(path, [n](std::istream& in) { return parse_coloring(in, n); });
}

namespace {

void format_gamma(std::ostream& out, const GammaMap& gamma) {
    for (const auto& [u, w] : gamma) out << " " << u << ":" << w;
}

GammaMap parse_gamma(std::istringstream& ss, int line_no) {
    GammaMap gamma;
    std::string token;
    while (ss >> token) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, "gamma entry must be <u>:<w>");
        gamma.emplace_back(std::stoi(token.substr(0, colon)),
                           std::stoi(token.substr(colon + 1)));
    }
    return gamma;
}

}  // namespace

std::string format_log(const ConflictLog& log) {
    std::ostringstream out;
    for (const auto& record : log.records) {
        if (std::holds_alternative<PlusRecord>(record)) {
            out << "+";
        } else if (const auto* rec = std::get_if<SetCase1Record>(&record)) {
            out << "S1 " << rec->x_p << " " << rec->x_q;
            format_gamma(out, rec->gamma);
        } else if (const auto* rec = std::get_if<SetCase2Record>(&record)) {
            out << "S2 " << rec->x_p << " " << rec->x_q;
            format_gamma(out, rec->gamma);
        } else if (const auto* rec = std::get_if<MultisetRecord>(&record)) {
            out << "M " << rec->x_p << " " << rec->x_q;
            format_gamma(out, rec->gamma);
        } else if (const auto* rec = std::get_if<SeqDisjointRecord>(&record)) {
            out << "QD " << (rec->encoding == SeqEncoding::via_difference ? "x" : "s") << " "
                << rec->x_p << " " << rec->x_q << " " << rec->aux << " " << rec->sigma;
        } else if (const auto* rec = std::get_if<SeqSharedRecord>(&record)) {
            out << "QS " << rec->x_p << " " << rec->x_q << " " << rec->sigma;
        }
        out << "\n";
    }
    return out.str();
}

ConflictLog parse_log(std::istream& in) {
    LineReader reader(in);
    ConflictLog log;
    while (auto line = reader.next()) {
        std::istringstream ss(*line);
        std::string tag;
        ss >> tag;
        if (tag == "+") {
            log.records.emplace_back(PlusRecord{});
            continue;
        }
        if (tag == "S1" || tag == "S2" || tag == "M") {
            int x_p, x_q;
            if (!(ss >> x_p >> x_q)) throw ParseError(reader.line(), "expected x_P x_Q");
            GammaMap gamma = parse_gamma(ss, reader.line());
            if (tag == "S1")
                log.records.emplace_back(SetCase1Record{x_p, x_q, std::move(gamma)});
            else if (tag == "S2")
                log.records.emplace_back(SetCase2Record{x_p, x_q, std::move(gamma)});
            else
                log.records.emplace_back(MultisetRecord{x_p, x_q, std::move(gamma)});
            continue;
        }
        if (tag == "QD") {
            std::string enc;
            SeqDisjointRecord rec;
            if (!(ss >> enc >> rec.x_p >> rec.x_q >> rec.aux >> rec.sigma) ||
                (enc != "x" && enc != "s"))
                throw ParseError(reader.line(), "expected QD x|s x_P x_Q aux sigma");
            rec.encoding = enc == "x" ? SeqEncoding::via_difference : SeqEncoding::via_shared;
            log.records.emplace_back(rec);
            continue;
        }
        if (tag == "QS") {
            SeqSharedRecord rec;
            if (!(ss >> rec.x_p >> rec.x_q >> rec.sigma))
                throw ParseError(reader.line(), "expected QS x_P x_Q sigma");
            log.records.emplace_back(rec);
            continue;
        }
        throw ParseError(reader.line(), "unknown record tag '" + tag + "'");
    }
    return log;
}

}  // namespace ied
