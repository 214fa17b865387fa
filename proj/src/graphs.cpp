#include "nlsnf/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace nlsnf {

int eta(const UniversalVertex& a) {
    int s = 0;
    for (int c : a) s += c;
    return s;
}

int vertex_sign(const UniversalVertex& a) { return eta(a) == 0 ? 1 : -1; }

int l1_norm(const UniversalVertex& a) {
    int s = 0;
    for (int c : a) s += c < 0 ? -c : c;
    return s;
}

std::optional<std::pair<EdgeColor, Marking>> edge_between(const UniversalVertex& a, const UniversalVertex& b) {
    int ea = eta(a), eb = eta(b);
    if ((ea != 0 && ea != -2) || (eb != 0 && eb != -2)) return std::nullopt;
    int m = static_cast<int>(a.size());
    if (ea == eb) {
        // black: b - a = e_i - e_j
        int i = -1, j = -1;
        bool ok = true;
        for (int k = 0; k < m && ok; ++k) {
            int d = b[static_cast<size_t>(k)] - a[static_cast<size_t>(k)];
            if (d == 0) continue;
            if (d == 1 && i < 0)
                i = k + 1;
            else if (d == -1 && j < 0)
                j = k + 1;
            else
                ok = false;
        }
        if (ok && i > 0 && j > 0) return std::make_pair(EdgeColor::Black, Marking{i, j, true});
        return std::nullopt;
    }
    // red: a + b + e_i + e_j = 0, opposite signs
    int i = -1, j = -1;
    bool ok = true;
    for (int k = 0; k < m && ok; ++k) {
        int s = a[static_cast<size_t>(k)] + b[static_cast<size_t>(k)];
        if (s == 0) continue;
        if (s == -1) {
            if (i < 0)
                i = k + 1;
            else if (j < 0)
                j = k + 1;
            else
                ok = false;
        } else if (s == -2 && i < 0 && j < 0) {
            ok = false;  // would need i == j
        } else {
            ok = false;
        }
    }
    if (ok && i > 0 && j > 0) return std::make_pair(EdgeColor::Red, Marking{i, j, false});
    return std::nullopt;
}

std::vector<std::vector<std::pair<int, int>>> ColoredMarkedGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(num_vertices));
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<size_t>(edges[e].u)].push_back({edges[e].v, static_cast<int>(e)});
        adj[static_cast<size_t>(edges[e].v)].push_back({edges[e].u, static_cast<int>(e)});
    }
    return adj;
}

namespace {

// step contribution of traversing edge e starting at vertex `from`:
// sign factor and L(e)
std::pair<int, std::vector<int>> edge_step(const GraphEdge& e, int from, int m) {
    std::vector<int> L(static_cast<size_t>(m), 0);
    if (e.color == EdgeColor::Black) {
        int i = e.i, j = e.j;
        if (from != e.u) std::swap(i, j);  // reversed orientation swaps the marking
        // L = e_j - e_i for a black edge marked (i,j)
        L[static_cast<size_t>(j - 1)] += 1;
        L[static_cast<size_t>(i - 1)] -= 1;
        return {1, L};
    }
    L[static_cast<size_t>(e.i - 1)] += 1;
    L[static_cast<size_t>(e.j - 1)] += 1;
    return {-1, L};
}

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b, int bsign) {
    std::vector<int> r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + bsign * b[k];
    return r;
}

}  // namespace

PathData path_data(const ColoredMarkedGraph& g, const std::vector<int>& path, int m) {
    if (path.empty()) throw NotAPath("empty path");
    PathData pd;
    pd.L.assign(static_cast<size_t>(m), 0);
    auto adj = g.adjacency();
    for (size_t k = 0; k + 1 < path.size(); ++k) {
        int a = path[k], b = path[k + 1];
        int eidx = -1;
        for (auto& [nb, ei] : adj[static_cast<size_t>(a)])
            if (nb == b) {
                eidx = ei;
                break;
            }
        if (eidx < 0) throw NotAPath("consecutive vertices not joined by an edge");
        auto [se, Le] = edge_step(g.edges[static_cast<size_t>(eidx)], a, m);
        // L(p) = L(e) + sigma(e) L(p')
        pd.L = vec_add(Le, pd.L, se);
        pd.sign *= se;
    }
    return pd;
}

CompatibilityResult check_compatible(const ColoredMarkedGraph& g, int m) {
    CompatibilityResult res;
    int n = g.num_vertices;
    if (n == 0) throw Disconnected("empty graph");
    int root = g.root.value_or(0);
    res.sigma.assign(static_cast<size_t>(n), 0);
    res.L.assign(static_cast<size_t>(n), {});
    std::vector<int> parent(static_cast<size_t>(n), -1);
    auto adj = g.adjacency();

    std::deque<int> queue{root};
    res.sigma[static_cast<size_t>(root)] = 1;
    res.L[static_cast<size_t>(root)].assign(static_cast<size_t>(m), 0);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[static_cast<size_t>(root)] = true;
    std::vector<int> tree_edge_used;
    std::vector<bool> in_tree(g.edges.size(), false);
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (auto& [b, ei] : adj[static_cast<size_t>(a)]) {
            if (seen[static_cast<size_t>(b)]) continue;
            seen[static_cast<size_t>(b)] = true;
            auto [se, Le] = edge_step(g.edges[static_cast<size_t>(ei)], a, m);
            res.sigma[static_cast<size_t>(b)] = se * res.sigma[static_cast<size_t>(a)];
            res.L[static_cast<size_t>(b)] = vec_add(Le, res.L[static_cast<size_t>(a)], se);
            parent[static_cast<size_t>(b)] = a;
            in_tree[static_cast<size_t>(ei)] = true;
            queue.push_back(b);
        }
    }
    for (bool s : seen)
        if (!s) throw Disconnected("graph is not connected");

    auto path_to_root = [&](int v) {
        std::vector<int> p{v};
        while (parent[static_cast<size_t>(v)] >= 0) {
            v = parent[static_cast<size_t>(v)];
            p.push_back(v);
        }
        return p;
    };

    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        if (in_tree[ei]) continue;
        const GraphEdge& e = g.edges[ei];
        auto [se, Le] = edge_step(e, e.u, m);
        // closure along the edge must reproduce the tree values at e.v
        bool sign_ok = res.sigma[static_cast<size_t>(e.v)] == se * res.sigma[static_cast<size_t>(e.u)];
        std::vector<int> expect = vec_add(Le, res.L[static_cast<size_t>(e.u)], se);
        bool L_ok = expect == res.L[static_cast<size_t>(e.v)];
        if (!sign_ok || !L_ok) {
            // fundamental circuit: root->u, edge, v->root
            std::vector<int> up = path_to_root(e.u);
            std::reverse(up.begin(), up.end());
            std::vector<int> down = path_to_root(e.v);
            res.witness_circuit = up;
            for (int w : down) res.witness_circuit.push_back(w);
            res.compatible = false;
            return res;
        }
    }
    res.compatible = true;
    return res;
}

std::vector<UniversalVertex> embed_universal(const ColoredMarkedGraph& g, int root, int m) {
    ColoredMarkedGraph rooted = g;
    rooted.root = root;
    auto comp = check_compatible(rooted, m);
    if (!comp.compatible) throw IncompatibleGraph("cannot embed an incompatible graph");
    std::vector<UniversalVertex> em(static_cast<size_t>(g.num_vertices));
    for (int v = 0; v < g.num_vertices; ++v) {
        UniversalVertex u(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) u[static_cast<size_t>(k)] = -comp.L[static_cast<size_t>(v)][static_cast<size_t>(k)];
        em[static_cast<size_t>(v)] = u;
    }
    std::set<UniversalVertex> dedup(em.begin(), em.end());
    if (dedup.size() != em.size()) throw DuplicateL("vertices map to coincident L-values");
    // sanity: edges must be reproduced by the universal rules
    for (auto& e : g.edges) {
        auto eb = edge_between(em[static_cast<size_t>(e.u)], em[static_cast<size_t>(e.v)]);
        if (!eb) throw IncompatibleGraph("embedded edge not present in the universal graph");
        if ((eb->first == EdgeColor::Black) != (e.color == EdgeColor::Black))
            throw IncompatibleGraph("embedded edge color mismatch");
    }
    return em;
}

UniversalSet make_universal_set(std::vector<UniversalVertex> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (auto& v : verts) {
        int e = eta(v);
        if (e != 0 && e != -2) throw std::invalid_argument("vertex augmentation must be 0 or -2");
        if (v.size() != verts[0].size()) throw std::invalid_argument("mixed vertex dimensions");
    }
    return UniversalSet{std::move(verts)};
}

std::vector<GraphEdge> UniversalSet::edges() const {
    std::vector<GraphEdge> es;
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b) {
            auto e = edge_between(verts[a], verts[b]);
            if (!e) continue;
            GraphEdge ge;
            ge.u = static_cast<int>(a);
            ge.v = static_cast<int>(b);
            ge.color = e->first;
            ge.i = e->second.i;
            ge.j = e->second.j;
            if (ge.color == EdgeColor::Red && ge.i > ge.j) std::swap(ge.i, ge.j);
            es.push_back(ge);
        }
    return es;
}

ColoredMarkedGraph UniversalSet::to_graph() const {
    ColoredMarkedGraph g;
    g.num_vertices = static_cast<int>(verts.size());
    g.declared_sign.resize(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) g.declared_sign[i] = vertex_sign(verts[i]);
    g.edges = edges();
    UniversalVertex zero(static_cast<size_t>(m()), 0);
    auto it = std::find(verts.begin(), verts.end(), zero);
    if (it != verts.end()) g.root = static_cast<int>(it - verts.begin());
    return g;
}

bool UniversalSet::connected() const {
    if (verts.empty()) return false;
    auto es = edges();
    std::vector<std::vector<int>> adj(verts.size());
    for (auto& e : es) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<bool> seen(verts.size(), false);
    std::deque<int> q{0};
    seen[0] = true;
    size_t count = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int b : adj[static_cast<size_t>(a)])
            if (!seen[static_cast<size_t>(b)]) {
                seen[static_cast<size_t>(b)] = true;
                ++count;
                q.push_back(b);
            }
    }
    return count == verts.size();
}

int UniversalSet::rank() const {
    // fraction-free elimination over the integers
    std::vector<std::vector<BigInt>> rows;
    for (auto& v : verts) {
        std::vector<BigInt> r(v.size());
        for (size_t k = 0; k < v.size(); ++k) r[k] = v[k];
        rows.push_back(std::move(r));
    }
    size_t rank = 0;
    size_t cols = verts.empty() ? 0 : verts[0].size();
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            BigInt a = rows[rank][c], b = rows[i][c];
            for (size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

bool UniversalSet::has_adjacent_black_red_same_marking() const {
    auto es = edges();
    for (size_t a = 0; a < verts.size(); ++a) {
        std::set<std::pair<int, int>> black_pairs, red_pairs;
        for (auto& e : es) {
            if (e.u != static_cast<int>(a) && e.v != static_cast<int>(a)) continue;
            int i = e.i, j = e.j;
            if (i > j) std::swap(i, j);
            (e.color == EdgeColor::Black ? black_pairs : red_pairs).insert({i, j});
        }
        for (auto& p : black_pairs)
            if (red_pairs.count(p)) return true;
    }
    return false;
}

namespace {

// re-rooting transform: a -> a - sigma(a) sigma(s) s; maps s to 0 and keeps
// the universal-graph structure
UniversalSet reroot(const UniversalSet& s, size_t root_idx) {
    const UniversalVertex& r = s.verts[root_idx];
    int sr = vertex_sign(r);
    std::vector<UniversalVertex> out;
    out.reserve(s.verts.size());
    for (auto& v : s.verts) {
        int sv = vertex_sign(v);
        UniversalVertex w(v.size());
        for (size_t k = 0; k < v.size(); ++k)
            w[k] = v[k] - sv * sr * r[k];
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return UniversalSet{std::move(out)};
}

std::string serialize_compressed(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    for (auto& r : rows) {
        for (int c : r) os << c << ",";
        os << ";";
    }
    return os.str();
}

// invariant signature of a support index inside a set (permutation-equivariant)
std::string index_signature(const UniversalSet& s, int idx0) {
    std::vector<std::string> parts;
    for (auto& v : s.verts) {
        std::vector<int> abssorted(v.size());
        for (size_t k = 0; k < v.size(); ++k) abssorted[k] = v[k];
        std::sort(abssorted.begin(), abssorted.end());
        std::ostringstream os;
        os << v[static_cast<size_t>(idx0)] << "|" << eta(v) << "|";
        for (int c : abssorted) os << c << ".";
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string sig;
    for (auto& p : parts) sig += p + "#";
    return sig;
}

// minimal serialization over support relabelings (signature classes respected;
// this keeps the key a complete invariant while pruning the search)
std::string min_over_permutations(const UniversalSet& s) {
    int m = s.m();
    std::vector<int> support;
    for (int k = 0; k < m; ++k)
        for (auto& v : s.verts)
            if (v[static_cast<size_t>(k)] != 0) {
                support.push_back(k);
                break;
            }
    // group support indices by signature
    std::vector<std::pair<std::string, int>> sigs;
    for (int k : support) sigs.push_back({index_signature(s, k), k});
    std::sort(sigs.begin(), sigs.end());
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < sigs.size();) {
        size_t j = i;
        std::vector<int> cls;
        while (j < sigs.size() && sigs[j].first == sigs[i].first) cls.push_back(sigs[j++].second);
        classes.push_back(cls);
        i = j;
    }
    // target positions: consecutive ranges per class, classes in signature order
    std::string best;
    std::vector<std::vector<int>> perm_class = classes;
    // iterate over all products of within-class permutations
    std::vector<size_t> counters(classes.size(), 0);
    auto build_key = [&]() {
        // order: concatenation of perm_class gives source index for target 0,1,...
        std::vector<int> src;
        for (auto& cls : perm_class)
            for (int k : cls) src.push_back(k);
        std::vector<std::vector<int>> rows;
        rows.reserve(s.verts.size());
        for (auto& v : s.verts) {
            std::vector<int> r(src.size());
            for (size_t t = 0; t < src.size(); ++t) r[t] = v[static_cast<size_t>(src[t])];
            rows.push_back(std::move(r));
        }
        std::sort(rows.begin(), rows.end());
        return serialize_compressed(rows);
    };
    // recursive enumeration of per-class permutations
    std::string result;
    bool first = true;
    struct Walker {
        std::vector<std::vector<int>>& pc;
        std::string& result;
        bool& first;
        std::function<std::string()>& bk;
        void walk(size_t cls) {
            if (cls == pc.size()) {
                std::string key = bk();
                if (first || key < result) {
                    result = key;
                    first = false;
                }
                return;
            }
            std::sort(pc[cls].begin(), pc[cls].end());
            do {
                walk(cls + 1);
            } while (std::next_permutation(pc[cls].begin(), pc[cls].end()));
        }
    };
    std::function<std::string()> bk = build_key;
    Walker w{perm_class, result, first, bk};
    w.walk(0);
    return result;
}

}  // namespace

std::string canonical_form(const UniversalSet& s) {
    std::string best;
    bool first = true;
    for (size_t r = 0; r < s.verts.size(); ++r) {
        UniversalSet t = reroot(s, r);
        std::string key = min_over_permutations(t);
        if (first || key < best) {
            best = key;
            first = false;
        }
    }
    return best;
}

std::vector<UniversalSet> enumerate_universal(int m, int max_vertices) {
    if (m < 2 || max_vertices < 1) throw std::invalid_argument("enumerate_universal needs m >= 2, max_vertices >= 1");
    // candidate growth stays inside |v|_1 <= 2*max_vertices-2: any vertex of
    // any rooting of a connected graph with <= max_vertices vertices lies
    // within l1 distance 2*(max_vertices-1) of the root
    const int l1_bound = 2 * (max_vertices - 1);
    UniversalVertex zero(static_cast<size_t>(m), 0);
    UniversalSet seed = make_universal_set({zero});

    auto neighbors = [m, l1_bound](const UniversalVertex& v) {
        std::vector<UniversalVertex> out;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                UniversalVertex w = v;
                w[static_cast<size_t>(i)] += 1;
                w[static_cast<size_t>(j)] -= 1;
                if (l1_norm(w) <= l1_bound) out.push_back(std::move(w));
            }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                UniversalVertex w(v.size());
                for (size_t k = 0; k < v.size(); ++k) w[k] = -v[k];
                w[static_cast<size_t>(i)] -= 1;
                w[static_cast<size_t>(j)] -= 1;
                if (l1_norm(w) <= l1_bound) out.push_back(std::move(w));
            }
        return out;
    };

    std::map<std::string, UniversalSet> classes;
    classes.emplace(canonical_form(seed), seed);
    std::vector<UniversalSet> frontier{seed};
    for (int level = 1; level < max_vertices; ++level) {
        std::map<std::string, UniversalSet> next;
        for (const auto& s : frontier) {
            std::set<UniversalVertex> members(s.verts.begin(), s.verts.end());
            std::set<UniversalVertex> candidates;
            for (auto& v : s.verts)
                for (auto& u : neighbors(v))
                    if (!members.count(u)) candidates.insert(u);
            for (auto& u : candidates) {
                std::vector<UniversalVertex> vs = s.verts;
                vs.push_back(u);
                UniversalSet grown = make_universal_set(std::move(vs));
                std::string key = canonical_form(grown);
                if (!classes.count(key) && !next.count(key)) next.emplace(key, std::move(grown));
            }
        }
        frontier.clear();
        for (auto& [k, v] : next) {
            frontier.push_back(v);
            classes.emplace(k, std::move(v));
        }
    }
    std::vector<UniversalSet> out;
    out.reserve(classes.size());
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

std::vector<UniversalSet> enumerate_blocks(int n, int m) {
    if (n < 2) throw std::invalid_argument("enumerate_blocks needs n >= 2");
    if (m < n + 1) throw std::invalid_argument("enumerate_blocks needs m >= n+1");
    auto all = enumerate_universal(m, n + 1);
    std::vector<UniversalSet> blocks;
    for (auto& s : all) {
        int verts = static_cast<int>(s.verts.size());
        if (verts < 2) continue;
        if (s.rank() != verts - 1) continue;  // degenerate graphs produce avoidable resonances
        if (s.has_adjacent_black_red_same_marking()) continue;
        blocks.push_back(s);
    }
    return blocks;
}

std::string encoding_type_name(EncodingType t) {
    switch (t) {
        case EncodingType::Type0: return "Type0";
        case EncodingType::Type1: return "Type1";
        case EncodingType::Type2: return "Type2";
        case EncodingType::Type3: return "Type3";
        case EncodingType::TypeA: return "TypeA";
        case EncodingType::TypeBI: return "TypeBI";
        case EncodingType::TypeBII: return "TypeBII";
        case EncodingType::Circuit4: return "Circuit4";
        case EncodingType::Small: return "Small";
        case EncodingType::Other: return "Other";
    }
    return "?";
}

EncodingType encoding_graph(const UniversalSet& s) {
    auto es = s.edges();
    // distinct (pair, color) markings
    std::set<std::pair<std::pair<int, int>, EdgeColor>> marks;
    std::set<std::pair<int, int>> pairs;
    for (auto& e : es) {
        int i = e.i, j = e.j;
        if (i > j) std::swap(i, j);
        marks.insert({{i, j}, e.color});
        pairs.insert({i, j});
    }
    // parallel black+red on the same pair
    for (auto& p : pairs) {
        bool hasB = marks.count({p, EdgeColor::Black});
        bool hasR = marks.count({p, EdgeColor::Red});
        if (hasB && hasR) return EncodingType::TypeA;
    }
    std::set<int> idxs;
    for (auto& p : pairs) {
        idxs.insert(p.first);
        idxs.insert(p.second);
    }
    std::map<int, int> degree;
    for (auto& p : pairs) {
        degree[p.first]++;
        degree[p.second]++;
    }
    size_t np = pairs.size(), ni = idxs.size();
    if (np == 3 && ni == 3) {
        // triangle; distinguish by red-edge parity
        int reds = 0;
        for (auto& mk : marks)
            if (mk.second == EdgeColor::Red) ++reds;
        return (reds % 2 == 1) ? EncodingType::TypeBI : EncodingType::TypeBII;
    }
    if (np == 3 && ni == 6) return EncodingType::Type0;
    if (np == 3 && ni == 5) return EncodingType::Type1;
    if (np == 3 && ni == 4) {
        int maxdeg = 0;
        for (auto& [k, d] : degree) maxdeg = std::max(maxdeg, d);
        return maxdeg == 3 ? EncodingType::Type2 : EncodingType::Type3;
    }
    if (np == 4 && ni == 4) {
        bool all2 = std::all_of(degree.begin(), degree.end(), [](auto& kv) { return kv.second == 2; });
        if (all2) return EncodingType::Circuit4;
    }
    if (np <= 2) return EncodingType::Small;
    return EncodingType::Other;
}

}  // namespace nlsnf
