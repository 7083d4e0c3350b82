#pragma once

// Combinatorial maps on the torus. An edge k owns darts 2k (tail at u) and
// 2k+1 (tail at v); twin(d) = d^1. rot_next is the counter-clockwise successor
// around the tail vertex, and faces are traced with next = rot_next(twin(d)).
// Each dart carries a Z^2 shift: the translate of the head copy relative to
// the tail copy in the biperiodic cover; shift(twin(d)) = -shift(d).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace treevol {

struct Shift {
    int a = 0, b = 0;
    friend Shift operator+(Shift l, Shift r) { return {l.a + r.a, l.b + r.b}; }
    friend Shift operator-(Shift l, Shift r) { return {l.a - r.a, l.b - r.b}; }
    friend Shift operator-(Shift s) { return {-s.a, -s.b}; }
    friend bool operator==(Shift l, Shift r) { return l.a == r.a && l.b == r.b; }
    friend bool operator!=(Shift l, Shift r) { return !(l == r); }
    friend bool operator<(Shift l, Shift r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
    bool zero() const { return a == 0 && b == 0; }
};

struct Vec2 {
    double x = 0.0, y = 0.0;
};

class ToroidalMap {
public:
    std::string name;

    int vertex_count() const { return n_vertices_; }
    int edge_count() const { return static_cast<int>(edge_u_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    static int twin(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }
    int tail(int d) const { return (d & 1) ? edge_v_[d >> 1] : edge_u_[d >> 1]; }
    int head(int d) const { return tail(twin(d)); }
    Shift shift(int d) const {
        return (d & 1) ? -edge_shift_[d >> 1] : edge_shift_[d >> 1];
    }
    int rot_next(int d) const { return rot_next_[d]; }
    int rot_prev(int d) const { return rot_prev_[d]; }

    int degree(int v) const { return degree_[v]; }

    /// All darts with tail v, in rotation order starting from an arbitrary one.
    std::vector<int> darts_at(int v) const {
        std::vector<int> out;
        if (first_dart_[v] < 0) return out;
        int d = first_dart_[v];
        do {
            out.push_back(d);
            d = rot_next_[d];
        } while (d != first_dart_[v]);
        return out;
    }

    bool has_positions() const { return !positions_.empty(); }
    Vec2 position(int v) const { return positions_.at(v); }
    const std::vector<Vec2>& positions() const { return positions_; }

    // raw edge records, used by serialization and by the cover constructions
    int edge_tail(int k) const { return edge_u_[k]; }
    int edge_head(int k) const { return edge_v_[k]; }
    Shift edge_shift(int k) const { return edge_shift_[k]; }

    friend class MapBuilder;

private:
    int n_vertices_ = 0;
    std::vector<int> edge_u_, edge_v_;
    std::vector<Shift> edge_shift_;
    std::vector<int> rot_next_, rot_prev_, first_dart_, degree_;
    std::vector<Vec2> positions_;
};

/// Assembles a ToroidalMap from vertices, edges with shifts and either an
/// explicit rotation system or straight-line positions (rotation derived by
/// angle-sorting dart directions; equal directions are a hard error).
/// Raw positions may lie outside [0,1)^2; they are reduced and the edge
/// shifts adjusted accordingly.
class MapBuilder {
public:
    explicit MapBuilder(std::string name = "") { map_.name = std::move(name); }

    int add_vertex() {
        has_position_.push_back(false);
        raw_pos_.push_back({0, 0});
        return map_.n_vertices_++;
    }
    int add_vertex(double x, double y) {
        has_position_.push_back(true);
        raw_pos_.push_back({x, y});
        return map_.n_vertices_++;
    }

    /// Edge from u to v; the head copy sits at raw position of v plus s.
    int add_edge(int u, int v, Shift s) {
        check_vertex(u);
        check_vertex(v);
        map_.edge_u_.push_back(u);
        map_.edge_v_.push_back(v);
        map_.edge_shift_.push_back(s);
        return map_.edge_count() - 1;
    }

    /// Explicit counter-clockwise dart order at v; darts given as dart ids.
    void set_rotation(int v, std::vector<int> darts) {
        check_vertex(v);
        explicit_rot_[v] = std::move(darts);
    }

    ToroidalMap build() {
        const int D = map_.dart_count();
        normalize_positions();
        // group darts by tail
        std::vector<std::vector<int>> at(map_.n_vertices_);
        for (int d = 0; d < D; ++d) at[map_.tail(d)].push_back(d);

        map_.rot_next_.assign(D, -1);
        map_.rot_prev_.assign(D, -1);
        map_.first_dart_.assign(map_.n_vertices_, -1);
        map_.degree_.assign(map_.n_vertices_, 0);

        for (int v = 0; v < map_.n_vertices_; ++v) {
            std::vector<int> order;
            if (auto it = explicit_rot_.find(v); it != explicit_rot_.end()) {
                order = it->second;
                std::vector<int> want = at[v], got = order;
                std::sort(want.begin(), want.end());
                std::sort(got.begin(), got.end());
                if (want != got)
                    throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                                " does not list exactly its darts");
            } else {
                order = angle_sorted(v, at[v]);
            }
            map_.degree_[v] = static_cast<int>(order.size());
            if (order.empty()) continue;
            map_.first_dart_[v] = order.front();
            for (size_t i = 0; i < order.size(); ++i) {
                int d = order[i], e = order[(i + 1) % order.size()];
                map_.rot_next_[d] = e;
                map_.rot_prev_[e] = d;
            }
        }
        return map_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= map_.n_vertices_)
            throw std::invalid_argument("vertex id out of range");
    }

    void normalize_positions() {
        const bool all = !has_position_.empty() &&
                         std::all_of(has_position_.begin(), has_position_.end(),
                                     [](bool b) { return b; });
        if (!all) {
            if (std::any_of(has_position_.begin(), has_position_.end(),
                            [](bool b) { return b; }) &&
                explicit_rot_.empty())
                throw std::invalid_argument("positions must be given for all vertices or none");
            return;
        }
        std::vector<Shift> cell(map_.n_vertices_);
        map_.positions_.resize(map_.n_vertices_);
        for (int v = 0; v < map_.n_vertices_; ++v) {
            const double fx = std::floor(raw_pos_[v].x), fy = std::floor(raw_pos_[v].y);
            cell[v] = {static_cast<int>(fx), static_cast<int>(fy)};
            map_.positions_[v] = {raw_pos_[v].x - fx, raw_pos_[v].y - fy};
        }
        for (int k = 0; k < map_.edge_count(); ++k)
            map_.edge_shift_[k] =
                map_.edge_shift_[k] + cell[map_.edge_v_[k]] - cell[map_.edge_u_[k]];
    }

    std::vector<int> angle_sorted(int v, const std::vector<int>& darts) const {
        if (darts.empty()) return {};
        if (map_.positions_.empty())
            throw std::invalid_argument("no rotation and no positions at vertex " +
                                        std::to_string(v));
        std::vector<std::pair<double, int>> ang;
        for (int d : darts) {
            const Vec2 p = map_.positions_[map_.tail(d)];
            const Vec2 q = map_.positions_[map_.head(d)];
            const Shift s = map_.shift(d);
            const double dx = q.x + s.a - p.x, dy = q.y + s.b - p.y;
            if (dx == 0.0 && dy == 0.0)
                throw std::runtime_error("zero-length dart at vertex " + std::to_string(v));
            ang.push_back({std::atan2(dy, dx), d});
        }
        std::sort(ang.begin(), ang.end());
        for (size_t i = 1; i < ang.size(); ++i)
            if (std::abs(ang[i].first - ang[i - 1].first) < 1e-12)
                throw std::runtime_error("degenerate dart directions at vertex " +
                                         std::to_string(v));
        std::vector<int> order;
        for (auto& [a, d] : ang) order.push_back(d);
        return order;
    }

    ToroidalMap map_;
    std::vector<Vec2> raw_pos_;
    std::vector<bool> has_position_;
    std::map<int, std::vector<int>> explicit_rot_;
};

struct FaceWalk {
    std::vector<int> darts;
    Shift total_shift;
    int degree() const { return static_cast<int>(darts.size()); }
};

/// Face tracing with next = rot_next(twin(d)); the walks partition the darts.
inline std::vector<FaceWalk> faces(const ToroidalMap& m) {
    std::vector<FaceWalk> out;
    std::vector<char> seen(m.dart_count(), 0);
    for (int d0 = 0; d0 < m.dart_count(); ++d0) {
        if (seen[d0]) continue;
        FaceWalk f;
        int d = d0;
        do {
            seen[d] = 1;
            f.darts.push_back(d);
            f.total_shift = f.total_shift + m.shift(d);
            d = m.rot_next(ToroidalMap::twin(d));
        } while (d != d0);
        out.push_back(std::move(f));
    }
    return out;
}

/// face index per dart, aligned with faces(m) ordering
inline std::vector<int> face_of_dart(const ToroidalMap& m,
                                     const std::vector<FaceWalk>& fs) {
    std::vector<int> fo(m.dart_count(), -1);
    for (size_t i = 0; i < fs.size(); ++i)
        for (int d : fs[i].darts) fo[d] = static_cast<int>(i);
    return fo;
}

struct FiniteMultigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // loops permitted
};

/// The m x n cover: vertex set V x Z_m x Z_n, one edge per dart-class copy.
inline FiniteMultigraph cover(const ToroidalMap& g, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("cover: need m, n >= 1");
    FiniteMultigraph out;
    const int V = g.vertex_count();
    out.n = V * m * n;
    auto id = [&](int v, int i, int j) { return v + V * (i + m * j); };
    for (int k = 0; k < g.edge_count(); ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                const Shift s = g.edge_shift(k);
                const int i2 = ((i + s.a) % m + m) % m, j2 = ((j + s.b) % n + n) % n;
                out.edges.push_back({id(g.edge_tail(k), i, j), id(g.edge_head(k), i2, j2)});
            }
    return out;
}

/// a x b cover as a ToroidalMap (rotations inherited per copy).
inline ToroidalMap refine(const ToroidalMap& g, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("refine: need a, b >= 1");
    const int V = g.vertex_count();
    MapBuilder mb(g.name.empty() ? "" : g.name + "-cover");
    auto id = [&](int v, int i, int j) { return v + V * (i + a * j); };
    for (int n = 0; n < V * a * b; ++n) {
        if (g.has_positions()) {
            const int v = n % V, i = (n / V) % a, j = n / (V * a);
            const Vec2 p = g.position(v);
            mb.add_vertex((p.x + i) / a, (p.y + j) / b);
        } else {
            mb.add_vertex();
        }
    }
    // edge copy (k, i, j) gets index k + E*(i + a*j); keep the loop order in sync
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < a; ++i)
            for (int k = 0; k < g.edge_count(); ++k) {
                const Shift s = g.edge_shift(k);
                const int ii = i + s.a, jj = j + s.b;
                const int i2 = ((ii % a) + a) % a, j2 = ((jj % b) + b) % b;
                const Shift carry{static_cast<int>(std::floor(double(ii) / a)),
                                  static_cast<int>(std::floor(double(jj) / b))};
                mb.add_edge(id(g.edge_tail(k), i, j), id(g.edge_head(k), i2, j2), carry);
            }
    // rotation: copy (i,j) of dart d is dart of edge-copy (k,i,j) with same parity,
    // where (i,j) is the cell of the dart's tail
    const int E = g.edge_count();
    auto dart_copy = [&](int d, int i, int j) {
        const int k = d >> 1;
        if (d & 1) {  // tail at edge_head; its copy cell comes from tail cell (i,j)
            return 2 * (k + E * (i + a * j)) + 1;
        }
        return 2 * (k + E * (i + a * j));
    };
    // careful: for dart 2k+1 the copy with TAIL in cell (i,j) is the edge copy
    // whose head lands in (i,j); that copy is indexed by the tail cell of dart 2k
    auto dart_copy_at = [&](int d, int i, int j) {
        if (!(d & 1)) return dart_copy(d, i, j);
        const Shift s = g.shift(ToroidalMap::twin(d));  // shift of forward dart
        const int i0 = ((i - s.a) % a + a) % a, j0 = ((j - s.b) % b + b) % b;
        return dart_copy(d, i0, j0);
    };
    std::vector<std::vector<int>> rot(V * a * b);
    for (int v = 0; v < V; ++v) {
        const auto order = g.darts_at(v);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) {
                std::vector<int> r;
                for (int d : order) r.push_back(dart_copy_at(d, i, j));
                rot[id(v, i, j)] = std::move(r);
            }
    }
    for (int n = 0; n < V * a * b; ++n) mb.set_rotation(n, rot[n]);
    return mb.build();
}

struct Diagnostics {
    bool rotation_ok = false;      // rot_next permutes darts within vertex classes
    bool shift_antisymmetric = false;
    bool connected = false;
    bool euler_zero = false;       // V - E + F = 0
    bool faces_are_disks = false;  // every face walk has zero total shift
    bool loop_free = false;        // no edge with equal endpoints and zero shift
    bool two_connected = false;    // checked on a finite cover
    bool simple = false;           // no multi-edges in a finite cover
    bool three_connected = false;  // checked on a finite cover
    std::vector<std::string> notes;

    /// the properties the paper assumes for conjecture inputs
    bool valid() const {
        return rotation_ok && shift_antisymmetric && connected && euler_zero &&
               faces_are_disks && loop_free && two_connected;
    }
    /// structural well-formedness only (enough for the constructions)
    bool well_formed() const {
        return rotation_ok && shift_antisymmetric && connected && euler_zero &&
               faces_are_disks;
    }
};

namespace detail {

inline std::vector<std::vector<std::pair<int, int>>> adjacency(
    const FiniteMultigraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [u, v] = g.edges[e];
        if (u == v) continue;
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    return adj;
}

inline bool connected_skipping(const FiniteMultigraph& g,
                               const std::vector<std::vector<std::pair<int, int>>>& adj,
                               const std::vector<char>& removed) {
    int start = -1, alive = 0;
    for (int v = 0; v < g.n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int found = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v])
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++found;
                stack.push_back(w);
            }
    }
    return found == alive;
}

inline bool k_connected(const FiniteMultigraph& g, int k) {
    // brute-force vertex-cut search; fine at cover sizes
    const auto adj = adjacency(g);
    std::vector<char> removed(g.n, 0);
    if (g.n <= k) return false;
    if (!connected_skipping(g, adj, removed)) return false;
    if (k >= 2) {
        for (int v = 0; v < g.n; ++v) {
            removed[v] = 1;
            if (!connected_skipping(g, adj, removed)) return false;
            removed[v] = 0;
        }
    }
    if (k >= 3) {
        for (int v = 0; v < g.n; ++v)
            for (int w = v + 1; w < g.n; ++w) {
                removed[v] = removed[w] = 1;
                if (!connected_skipping(g, adj, removed)) return false;
                removed[v] = removed[w] = 0;
            }
    }
    return true;
}

}  // namespace detail

/// Structural and paper-assumption checks. Malformed rotation data throws;
/// property failures are reported in the returned Diagnostics.
inline Diagnostics validate(const ToroidalMap& m) {
    Diagnostics d;
    const int D = m.dart_count();

    d.rotation_ok = true;
    std::vector<char> hit(D, 0);
    for (int x = 0; x < D; ++x) {
        const int y = m.rot_next(x);
        if (y < 0 || y >= D) throw std::invalid_argument("dangling dart id in rotation");
        if (hit[y]) d.rotation_ok = false;
        hit[y] = 1;
        if (m.tail(y) != m.tail(x)) d.rotation_ok = false;
    }

    d.shift_antisymmetric = true;
    for (int x = 0; x < D; ++x)
        if (m.shift(x) != -m.shift(ToroidalMap::twin(x))) d.shift_antisymmetric = false;

    // connectivity over the quotient graph
    {
        std::vector<int> parent(m.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int k = 0; k < m.edge_count(); ++k)
            parent[find(m.edge_tail(k))] = find(m.edge_head(k));
        int roots = 0;
        for (int v = 0; v < m.vertex_count(); ++v)
            if (find(v) == v) ++roots;
        d.connected = (m.vertex_count() == 0) || roots == 1;
    }

    const auto fs = faces(m);
    d.euler_zero =
        m.vertex_count() - m.edge_count() + static_cast<int>(fs.size()) == 0;
    d.faces_are_disks = std::all_of(fs.begin(), fs.end(), [](const FaceWalk& f) {
        return f.total_shift.zero();
    });

    d.loop_free = true;
    for (int k = 0; k < m.edge_count(); ++k)
        if (m.edge_tail(k) == m.edge_head(k) && m.edge_shift(k).zero())
            d.loop_free = false;

    if (d.connected && m.edge_count() > 0) {
        int span = 3;
        for (int k = 0; k < m.edge_count(); ++k)
            span = std::max({span, 2 * std::abs(m.edge_shift(k).a) + 1,
                             2 * std::abs(m.edge_shift(k).b) + 1});
        const FiniteMultigraph c = cover(m, span, span);
        d.two_connected = detail::k_connected(c, 2);
        d.three_connected = detail::k_connected(c, 3);
        std::set<std::pair<int, int>> seen_pairs;
        d.simple = true;
        for (auto [u, v] : c.edges) {
            if (u == v) {
                d.simple = false;
                continue;
            }
            auto p = std::minmax(u, v);
            if (!seen_pairs.insert({p.first, p.second}).second) d.simple = false;
        }
    }

    if (!d.rotation_ok) d.notes.push_back("rotation is not a valid permutation");
    if (!d.shift_antisymmetric) d.notes.push_back("shift(twin) != -shift");
    if (!d.connected) d.notes.push_back("graph is disconnected");
    if (!d.euler_zero) d.notes.push_back("V - E + F != 0");
    if (!d.faces_are_disks) d.notes.push_back("a face walk has nonzero homology shift");
    if (!d.loop_free) d.notes.push_back("contractible loop present");
    return d;
}

/// Orientation-preserving isomorphism of labeled maps, with shifts allowed to
/// differ by a vertex potential (a coboundary). Connectedness makes the map
/// determined by the image of a single dart.
inline bool isomorphic(const ToroidalMap& m1, const ToroidalMap& m2) {
    if (m1.vertex_count() != m2.vertex_count() || m1.edge_count() != m2.edge_count())
        return false;
    const int D = m1.dart_count();
    if (D == 0) return true;

    for (int cand = 0; cand < D; ++cand) {
        std::vector<int> h(D, -1), hinv(D, -1);
        std::vector<int> stack;
        auto assign = [&](int a, int b) {
            if (h[a] == -1 && hinv[b] == -1) {
                h[a] = b;
                hinv[b] = a;
                stack.push_back(a);
                return true;
            }
            return h[a] == b;
        };
        bool ok = assign(0, cand);
        while (ok && !stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            ok = assign(ToroidalMap::twin(a), ToroidalMap::twin(h[a])) &&
                 assign(m1.rot_next(a), m2.rot_next(h[a]));
        }
        if (!ok || std::count(h.begin(), h.end(), -1) > 0) continue;

        // vertex potential making the shifts agree
        std::vector<std::optional<Shift>> p(m1.vertex_count());
        p[m1.tail(0)] = Shift{0, 0};
        bool consistent = true;
        for (int pass = 0; pass < m1.vertex_count() && consistent; ++pass) {
            bool changed = false;
            for (int a = 0; a < D && consistent; ++a) {
                const int u = m1.tail(a), v = m1.head(a);
                if (!p[u]) continue;
                const Shift want = *p[u] + m2.shift(h[a]) - m1.shift(a);
                if (!p[v]) {
                    p[v] = want;
                    changed = true;
                } else if (!(*p[v] == want)) {
                    consistent = false;
                }
            }
            if (!changed) break;
        }
        for (int a = 0; a < D && consistent; ++a) {
            const int u = m1.tail(a), v = m1.head(a);
            if (!p[u] || !p[v] || !(*p[v] == *p[u] + m2.shift(h[a]) - m1.shift(a)))
                consistent = false;
        }
        if (consistent) return true;
    }
    return false;
}

}  // namespace treevol
