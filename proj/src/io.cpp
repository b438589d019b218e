#include "graphpow/io.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace graphpow {

namespace {

[[noreturn]] void parse_fail(long line, const std::string& what) {
    throw std::runtime_error("edge list: line " + std::to_string(line) + ": " + what);
}

// Strict "<decimal> <decimal>" with one separating space and nothing else.
bool split_two_naturals(const std::string& s, long long& a, long long& b) {
    size_t i = 0;
    auto digits = [&](long long& out) {
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) return false;
        out = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            out = out * 10 + (s[i] - '0');
            if (out > INT32_MAX) return false;
            ++i;
        }
        return true;
    };
    if (!digits(a)) return false;
    if (i >= s.size() || s[i] != ' ') return false;
    ++i;
    if (!digits(b)) return false;
    return i == s.size();
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    long line_no = 0;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (!split_two_naturals(line, n, m))
            parse_fail(line_no, "expected header 'n m', got '" + line + "'");
        break;
    }
    if (n < 0) throw std::runtime_error("edge list: missing 'n m' header");

    Graph g(static_cast<int>(n));
    std::set<std::pair<long long, long long>> seen;
    long long got = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        long long u, v;
        if (!split_two_naturals(line, u, v))
            parse_fail(line_no, "expected edge 'u v', got '" + line + "'");
        if (got == m) parse_fail(line_no, "more than the declared m = " + std::to_string(m) +
                                          " edges");
        if (u >= v)
            parse_fail(line_no, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") violates u < v");
        if (v >= n)
            parse_fail(line_no, "vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n) + ")");
        if (!seen.insert({u, v}).second)
            parse_fail(line_no, "duplicate edge (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++got;
    }
    if (got != m)
        throw std::runtime_error("edge list: declared m = " + std::to_string(m) + " but found " +
                                 std::to_string(got) + " edges");
    return g;
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return parse_edge_list(in);
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        g.for_each_neighbor(u, [&](int v) {
            if (u < v) out << u << " " << v << "\n";
        });
    return out.str();
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << edge_list_string(g);
}

namespace {

[[noreturn]] void g6_fail(const std::string& what) {
    throw std::runtime_error("graph6: " + what);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view line) {
    for (char c : line)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            g6_fail("byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                    " outside [63, 126]");
    size_t pos = 0;
    auto need = [&](size_t count) {
        if (line.size() - pos < count) g6_fail("truncated size header");
    };
    long long n;
    need(1);
    if (line[pos] != 126) {
        n = line[pos++] - 63;
    } else {
        ++pos;
        need(1);
        int bytes = 3;
        if (line[pos] == 126) {
            ++pos;
            bytes = 6;
        }
        need(bytes);
        n = 0;
        for (int i = 0; i < bytes; ++i) n = (n << 6) | (line[pos++] - 63);
    }
    if (n > 1'000'000) g6_fail("vertex count " + std::to_string(n) + " unreasonably large");
    const long long bits_needed = n * (n - 1) / 2;
    const long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(line.size() - pos) < bytes_needed) g6_fail("truncated bit vector");
    if (static_cast<long long>(line.size() - pos) > bytes_needed) g6_fail("trailing bytes");
    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = line[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::vector<Graph> read_graph6(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::vector<Graph> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string(e.what()) + " (line " + std::to_string(line_no) +
                                     " of '" + path + "')");
        }
    }
    return out;
}

void write_graph6(const Graph& g, const std::string& path) {
    write_graph6(std::vector<Graph>{g}, path);
}

void write_graph6(const std::vector<Graph>& gs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (const Graph& g : gs) out << graph6_encode(g) << "\n";
}

}  // namespace graphpow
