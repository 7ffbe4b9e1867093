#include <ramgirth/errors.hpp>
#include <ramgirth/io.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace ramgirth {

namespace {

// Reads non-empty lines and splits them into unsigned integers.
class LineReader
{
public:
    explicit LineReader(std::istream & in) : in_(in) {}

    /// Next line with content; false at end of input.
    bool next(std::vector<std::uint64_t> & fields)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos)
                continue;
            fields.clear();
            const char * p = line.data();
            const char * end = p + line.size();
            while (p < end) {
                while (p < end && (*p == ' ' || *p == '\t'))
                    ++p;
                if (p == end)
                    break;
                std::uint64_t v = 0;
                auto [q, ec] = std::from_chars(p, end, v);
                if (ec != std::errc() || (q < end && *q != ' ' && *q != '\t'))
                    throw FormatError(line_no_, "expected non-negative integers, got '" + line + "'");
                fields.push_back(v);
                p = q;
            }
            return true;
        }
        return false;
    }

    std::vector<std::uint64_t> expect(std::size_t count, const char * what)
    {
        std::vector<std::uint64_t> fields;
        if (! next(fields))
            throw FormatError(line_no_ + 1, std::string("missing ") + what);
        if (fields.size() != count)
            throw FormatError(line_no_, std::string(what) + ": expected " + std::to_string(count) + " fields, got " +
                                            std::to_string(fields.size()));
        return fields;
    }

    void expect_end()
    {
        std::vector<std::uint64_t> fields;
        if (next(fields))
            throw FormatError(line_no_, "more lines than the header announces");
    }

    std::size_t line() const { return line_no_; }

private:
    std::istream & in_;
    std::size_t line_no_ = 0;
};

std::ifstream open_in(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_out(const std::string & path)
{
    std::ofstream out(path);
    if (! out)
        throw InputError("cannot write '" + path + "'");
    return out;
}

} // namespace

Graph read_graph(std::istream & in)
{
    LineReader reader(in);
    auto header = reader.expect(2, "header 'n m'");
    const auto n = header[0];
    const auto m = header[1];
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::uint64_t i = 0; i < m; ++i) {
        auto f = reader.expect(2, "edge 'u v'");
        if (f[0] >= n || f[1] >= n)
            throw FormatError(reader.line(), "endpoint out of range");
        if (f[0] == f[1])
            throw FormatError(reader.line(), "self-loop");
        pairs.emplace_back(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
    }
    reader.expect_end();
    Graph g = graph_from_edges(n, pairs);
    if (g.size() != m)
        throw FormatError(reader.line(), "duplicate edges");
    return g;
}

void write_graph(std::ostream & out, const Graph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto & e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

UniformHypergraph read_hypergraph(std::istream & in)
{
    LineReader reader(in);
    auto header = reader.expect(3, "header 'h N m'");
    const auto h = header[0];
    const auto n = header[1];
    const auto m = header[2];
    if (h < 1)
        throw FormatError(reader.line(), "uniformity must be positive");
    std::vector<std::vector<Vertex>> edges;
    for (std::uint64_t i = 0; i < m; ++i) {
        auto f = reader.expect(h, "hyperedge");
        std::vector<Vertex> e;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (f[j] >= n)
                throw FormatError(reader.line(), "vertex out of range");
            if (j > 0 && f[j] <= f[j - 1])
                throw FormatError(reader.line(), "vertices must be strictly ascending");
            e.push_back(static_cast<Vertex>(f[j]));
        }
        edges.push_back(std::move(e));
    }
    reader.expect_end();
    try {
        return UniformHypergraph(h, n, std::move(edges));
    }
    catch (const FormatError &) {
        throw;
    }
    catch (const InputError & e) {
        throw FormatError(reader.line(), e.what());
    }
}

void write_hypergraph(std::ostream & out, const UniformHypergraph & h)
{
    out << h.uniformity() << ' ' << h.universe_size() << ' ' << h.edge_count() << '\n';
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j)
            out << (j ? " " : "") << e[j];
        out << '\n';
    }
}

Colouring read_colouring(std::istream & in)
{
    LineReader reader(in);
    auto header = reader.expect(2, "header 'N c'");
    Colouring c;
    c.colours = header[1];
    for (std::uint64_t i = 0; i < header[0]; ++i) {
        auto f = reader.expect(1, "colour");
        if (f[0] < 1 || f[0] > c.colours)
            throw FormatError(reader.line(), "colour outside 1.." + std::to_string(c.colours));
        c.of.push_back(static_cast<std::uint32_t>(f[0]));
    }
    reader.expect_end();
    return c;
}

void write_colouring(std::ostream & out, const Colouring & c)
{
    out << c.of.size() << ' ' << c.colours << '\n';
    for (auto x : c.of)
        out << x << '\n';
}

Graph read_graph_file(const std::string & path)
{
    auto in = open_in(path);
    return read_graph(in);
}

void write_graph_file(const std::string & path, const Graph & g)
{
    auto out = open_out(path);
    write_graph(out, g);
}

UniformHypergraph read_hypergraph_file(const std::string & path)
{
    auto in = open_in(path);
    return read_hypergraph(in);
}

void write_hypergraph_file(const std::string & path, const UniformHypergraph & h)
{
    auto out = open_out(path);
    write_hypergraph(out, h);
}

Colouring read_colouring_file(const std::string & path)
{
    auto in = open_in(path);
    return read_colouring(in);
}

void write_colouring_file(const std::string & path, const Colouring & c)
{
    auto out = open_out(path);
    write_colouring(out, c);
}

} // namespace ramgirth
