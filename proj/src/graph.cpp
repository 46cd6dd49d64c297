#include "gbc/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gbc {

SimplicialGraph::SimplicialGraph(int n) : n_(n) {
    if (n < 0) throw MalformedInput("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n) * n, false);
}

SimplicialGraph::SimplicialGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : SimplicialGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void SimplicialGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw MalformedInput("vertex index " + std::to_string(v) + " out of range");
}

void SimplicialGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw MalformedInput("loop edge rejected");
    if (u > v) std::swap(u, v);
    if (adj_[static_cast<std::size_t>(u) * n_ + v]) return;
    adj_[static_cast<std::size_t>(u) * n_ + v] = true;
    adj_[static_cast<std::size_t>(v) * n_ + u] = true;
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v)),
                  {u, v});
}

bool SimplicialGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return adj_[static_cast<std::size_t>(u) * n_ + v];
}

int SimplicialGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> SimplicialGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (has_edge(u, v)) out.push_back(u);
    return out;
}

SimplicialGraph SimplicialGraph::complete(int n) {
    SimplicialGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimplicialGraph SimplicialGraph::path(int n) {
    SimplicialGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimplicialGraph SimplicialGraph::cycle(int n) {
    SimplicialGraph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

bool GraphMap::valid_homomorphism() const {
    if (static_cast<int>(image.size()) != source.vertex_count()) return false;
    for (int v : image)
        if (v < 0 || v >= target.vertex_count()) return false;
    for (auto [u, v] : source.edges()) {
        if (image[u] == image[v]) return false;
        if (!target.has_edge(image[u], image[v])) return false;
    }
    return true;
}

bool GraphMap::injective() const {
    std::vector<bool> seen(target.vertex_count(), false);
    for (int v : image) {
        if (v < 0 || v >= target.vertex_count() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool GraphMap::valid_induced_embedding() const {
    if (!valid_homomorphism() || !injective()) return false;
    int n = source.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (source.has_edge(u, v) != target.has_edge(image[u], image[v]))
                return false;
    return true;
}

SimplicialGraph complement(const SimplicialGraph& g) {
    int n = g.vertex_count();
    SimplicialGraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

std::vector<int> connected_components(const SimplicialGraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u)
                if (g.has_edge(v, u) && comp[u] == -1) {
                    comp[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return comp;
}

JoinDecomposition join_decompose(const SimplicialGraph& g) {
    if (g.vertex_count() < 1) throw MalformedInput("join_decompose needs n >= 1");
    std::vector<int> comp = connected_components(complement(g));
    int k = *std::max_element(comp.begin(), comp.end()) + 1;
    JoinDecomposition out;
    out.factors.assign(k, {});
    for (int v = 0; v < g.vertex_count(); ++v) out.factors[comp[v]].push_back(v);
    return out;
}

SimplicialGraph join(const SimplicialGraph& a, const SimplicialGraph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    SimplicialGraph out(na + nb);
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) out.add_edge(u, na + v);
    return out;
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g,
                                 const std::vector<int>& vertices) {
    SimplicialGraph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

namespace {

// Assign src vertices in ascending order; `allowed` filters candidate images.
bool extend_map(const SimplicialGraph& src, const SimplicialGraph& dst,
                std::vector<int>& image, int next, bool injective, bool induced) {
    int ns = src.vertex_count(), nd = dst.vertex_count();
    if (next == ns) return true;
    for (int cand = 0; cand < nd; ++cand) {
        bool ok = true;
        if (injective) {
            for (int u = 0; u < next && ok; ++u)
                if (image[u] == cand) ok = false;
        }
        for (int u = 0; u < next && ok; ++u) {
            bool se = src.has_edge(u, next);
            bool de = dst.has_edge(image[u], cand);
            if (se && (!de || image[u] == cand)) ok = false;
            if (induced && !se && de) ok = false;
        }
        if (!ok) continue;
        image[next] = cand;
        if (extend_map(src, dst, image, next + 1, injective, induced)) return true;
    }
    return false;
}

}  // namespace

std::optional<GraphMap> find_graph_homomorphism(const SimplicialGraph& src,
                                                const SimplicialGraph& dst,
                                                const SearchLimits& limits) {
    if (src.vertex_count() > limits.homomorphism_bound)
        throw SizeLimitError("homomorphism search bound exceeded");
    if (src.vertex_count() > 0 && dst.vertex_count() == 0) return std::nullopt;
    std::vector<int> image(src.vertex_count(), -1);
    if (!extend_map(src, dst, image, 0, false, false)) return std::nullopt;
    return GraphMap{src, dst, image};
}

std::optional<GraphMap> find_induced_embedding(const SimplicialGraph& sub,
                                               const SimplicialGraph& host,
                                               const SearchLimits& limits) {
    if (sub.vertex_count() > limits.homomorphism_bound)
        throw SizeLimitError("embedding search bound exceeded");
    if (sub.vertex_count() > host.vertex_count()) return std::nullopt;
    std::vector<int> image(sub.vertex_count(), -1);
    if (!extend_map(sub, host, image, 0, true, true)) return std::nullopt;
    return GraphMap{sub, host, image};
}

std::optional<std::vector<int>> hamiltonian_cycle(const SimplicialGraph& g,
                                                  const SearchLimits& limits) {
    int n = g.vertex_count();
    if (n > limits.hamiltonian_bound)
        throw SizeLimitError("hamiltonian scan bound exceeded");
    if (n < 3) return std::nullopt;

    // Start at 0; extend in ascending candidate order, so the first cycle
    // found is lexicographically least.
    std::vector<int> seq{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(seq.size()) == n)
            return g.has_edge(seq.back(), seq.front());
        for (int cand = 1; cand < n; ++cand) {
            if (used[cand] || !g.has_edge(seq.back(), cand)) continue;
            used[cand] = true;
            seq.push_back(cand);
            if (extend()) return true;
            seq.pop_back();
            used[cand] = false;
        }
        return false;
    };
    if (!extend()) return std::nullopt;
    return seq;
}

bool graphs_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b,
                       const SearchLimits& limits) {
    if (a.vertex_count() > limits.homomorphism_bound ||
        b.vertex_count() > limits.homomorphism_bound)
        throw SizeLimitError("isomorphism search bound exceeded");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;

    int n = a.vertex_count();
    if (n == 0) return true;
    std::vector<int> degs_a(n, 0), degs_b(n, 0);
    for (auto [u, v] : a.edges()) ++degs_a[u], ++degs_a[v];
    for (auto [u, v] : b.edges()) ++degs_b[u], ++degs_b[v];
    {
        auto sa = degs_a, sb = degs_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> extend = [&](int next) -> bool {
        if (next == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || degs_a[next] != degs_b[cand]) continue;
            bool ok = true;
            for (int u = 0; u < next && ok; ++u)
                if (a.has_edge(u, next) != b.has_edge(image[u], cand)) ok = false;
            if (!ok) continue;
            used[cand] = true;
            image[next] = cand;
            if (extend(next + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    return extend(0);
}

SimplicialGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                if (n < 0) throw MalformedInput("negative vertex count");
                int extra;
                if (ls >> extra) throw MalformedInput("trailing data on header line");
            }
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw MalformedInput("graph line " + std::to_string(lineno) +
                                 ": expected `u v`");
        int extra;
        if (ls >> extra)
            throw MalformedInput("graph line " + std::to_string(lineno) +
                                 ": trailing data");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw MalformedInput("graph file missing vertex count");
    return SimplicialGraph(n, edges);
}

std::string format_graph(const SimplicialGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace gbc
