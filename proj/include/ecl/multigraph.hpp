#ifndef ECL_MULTIGRAPH_HPP
#define ECL_MULTIGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ecl {

// Vertex subsets are bitmasks; bit v set means vertex v is in the set.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return __builtin_popcountll(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet set_of(int v) { return VertexSet{1} << v; }

// Thrown when an exponential routine is asked to run past its size guard.
struct ScaleGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loop-free undirected multigraph. Edge ids are positions in `edges`
// and are stable after construction; parallel edges are repeated pairs.
class Multigraph {
public:
    Multigraph(int n, std::vector<std::pair<int, int>> edge_list,
               std::string name = {})
        : n_(n), edges_(std::move(edge_list)), name_(std::move(name))
    {
        if (n_ < 1)
            throw std::invalid_argument("multigraph: vertex count must be >= 1");
        if (n_ > 64)
            throw std::invalid_argument(
                "multigraph: at most 64 vertices supported");
        if (!edges_.empty() && n_ < 2)
            throw std::invalid_argument(
                "multigraph: edges require at least 2 vertices");
        incident_.assign(n_, {});
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            auto [u, v] = edges_[id];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("multigraph: endpoint out of range");
            if (u == v)
                throw std::invalid_argument("multigraph: self-loop rejected");
            incident_[u].push_back(static_cast<int>(id));
            incident_[v].push_back(static_cast<int>(id));
        }
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::string& name() const { return name_; }

    std::pair<int, int> endpoints(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }

    VertexSet all_vertices() const
    {
        return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
    }

    bool structurally_equal(const Multigraph& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::string name_;
    std::vector<std::vector<int>> incident_;
};

inline Multigraph build(int n, std::vector<std::pair<int, int>> edge_list,
                        std::string name = {})
{
    return Multigraph(n, std::move(edge_list), std::move(name));
}

struct GraphStats {
    int max_degree = 0;       // Delta
    int max_multiplicity = 0; // p
    std::vector<int> degree_sequence;
};

inline GraphStats stats(const Multigraph& g)
{
    GraphStats st;
    st.degree_sequence.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        st.degree_sequence[v] = g.degree(v);
        st.max_degree = std::max(st.max_degree, g.degree(v));
    }
    std::map<std::pair<int, int>, int> mult;
    for (auto [u, v] : g.edges()) {
        auto key = std::minmax(u, v);
        st.max_multiplicity =
            std::max(st.max_multiplicity, ++mult[{key.first, key.second}]);
    }
    return st;
}

// Edges with both endpoints in s.
inline int induced_edge_count(const Multigraph& g, VertexSet s)
{
    int count = 0;
    for (auto [u, v] : g.edges())
        if (set_contains(s, u) && set_contains(s, v))
            ++count;
    return count;
}

inline std::vector<std::vector<int>> connected_components(const Multigraph& g)
{
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < g.n(); ++start) {
        if (comp[start] != -1)
            continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[start] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[c].push_back(v);
            for (int e : g.incident_edges(v)) {
                auto [a, b] = g.endpoints(e);
                int w = a == v ? b : a;
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    for (auto& vs : out)
        std::sort(vs.begin(), vs.end());
    return out;
}

inline bool is_connected(const Multigraph& g)
{
    return connected_components(g).size() == 1;
}

// Induced subgraph on `vertices` with dense relabeled ids; edge_map and
// vertex_map translate subgraph ids back to the original graph.
struct Subgraph {
    Multigraph graph;
    std::vector<int> vertex_map; // sub vertex id -> original vertex id
    std::vector<int> edge_map;   // sub edge id -> original edge id
};

inline Subgraph induced_subgraph(const Multigraph& g,
                                 const std::vector<int>& vertices,
                                 std::string name = {})
{
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_map;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (local[u] != -1 && local[v] != -1) {
            edges.emplace_back(local[u], local[v]);
            edge_map.push_back(e);
        }
    }
    return Subgraph{Multigraph(static_cast<int>(vertices.size()),
                               std::move(edges), std::move(name)),
                    vertices, std::move(edge_map)};
}

// Instance format:
//   c <comment>            (optional, any number)
//   p multigraph <n> <m>
//   e <u> <v>              (exactly m lines, 0-based ids; repeats = parallel)
inline Multigraph parse(std::istream& in)
{
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (n != -1)
                throw std::invalid_argument("parse: duplicate header");
            std::string fmt;
            ls >> fmt >> n >> m;
            if (!ls || fmt != "multigraph" || n < 1 || m < 0)
                throw std::invalid_argument("parse: malformed header at line "
                                            + std::to_string(lineno));
        } else if (tag == "e") {
            if (n == -1)
                throw std::invalid_argument("parse: edge before header");
            int u, v;
            ls >> u >> v;
            if (!ls)
                throw std::invalid_argument("parse: malformed edge at line "
                                            + std::to_string(lineno));
            edges.emplace_back(u, v);
        } else {
            throw std::invalid_argument("parse: unknown line type at line "
                                        + std::to_string(lineno));
        }
    }
    if (n == -1)
        throw std::invalid_argument("parse: missing header");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("parse: edge count mismatch (header says "
                                    + std::to_string(m) + ", got "
                                    + std::to_string(edges.size()) + ")");
    return Multigraph(n, std::move(edges));
}

inline Multigraph parse(const std::string& text)
{
    std::istringstream in(text);
    return parse(in);
}

inline void serialize(std::ostream& out, const Multigraph& g)
{
    out << "p multigraph " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
}

inline std::string serialize(const Multigraph& g)
{
    std::ostringstream out;
    serialize(out, g);
    return out.str();
}

} // namespace ecl

#endif
