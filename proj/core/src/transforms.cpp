#include "frank/transforms.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <json.hpp>

#include "frank/bits.hpp"
#include "frank/connectivity.hpp"
#include "frank/graph6.hpp"
#include "frank/isomorphism.hpp"

namespace frank {

std::string TransformTrace::to_json(int indent) const {
    nlohmann::json j;
    j["kind"] = kind;
    j["source_graph6"] = source_graph6;
    j["result_graph6"] = result_graph6;
    j["vertex_map"] = vertex_map;
    j["new_vertices"] = new_vertices;
    nlohmann::json imgs = nlohmann::json::array();
    for (auto [a, b] : edge_images) imgs.push_back(nlohmann::json::array({a, b}));
    j["edge_images"] = imgs;
    j["edge_map"] = edge_map;
    j["cycle_edges"] = cycle_edges;
    return j.dump(indent);
}

std::pair<Graph, TransformTrace> local_cubic_modification(const Graph& g, int v,
                                                          const Matching& m) {
    int n = g.vertex_count();
    int d = g.degree(v);
    if (d < 3) raise(errc::degree_too_small, "local cubic modification needs deg(v) >= 3");
    if (m.vertex != v || static_cast<int>(m.cycle_order.size()) != d)
        raise(errc::invalid_parameter, "matching does not cover the neighbors of v");
    {
        auto sorted = m.cycle_order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            raise(errc::invalid_parameter, "matching is not a bijection onto N(v)");
    }

    // old u keeps its index shifted past v; cycle vertex j becomes (n-1)+j
    auto fwd = [&](int u) { return u < v ? u : u - 1; };
    std::vector<int> cycle_of_neighbor(static_cast<size_t>(n), -1);
    for (int j = 0; j < d; ++j)
        cycle_of_neighbor[static_cast<size_t>(m.cycle_order[static_cast<size_t>(j)])] = (n - 1) + j;

    std::vector<std::pair<int, int>> pairs;
    TransformTrace tr;
    tr.kind = d == 3 ? "truncate" : "lcm";
    tr.source_graph6 = write_graph6(g);
    for (int u = 0; u < n; ++u) tr.vertex_map.push_back(u == v ? -1 : fwd(u));
    for (int j = 0; j < d; ++j) tr.new_vertices.push_back((n - 1) + j);

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        int ia, ib;
        if (a == v) { ia = cycle_of_neighbor[static_cast<size_t>(b)]; ib = fwd(b); }
        else if (b == v) { ia = fwd(a); ib = cycle_of_neighbor[static_cast<size_t>(a)]; }
        else { ia = fwd(a); ib = fwd(b); }
        tr.edge_images.push_back({ia, ib});
        pairs.emplace_back(ia, ib);
    }
    for (int j = 0; j < d; ++j)
        pairs.emplace_back((n - 1) + j, (n - 1) + (j + 1) % d);

    Graph out = Graph::build(n - 1 + d, pairs);
    tr.result_graph6 = write_graph6(out);
    for (auto [ia, ib] : tr.edge_images) tr.edge_map.push_back(out.edge_index(ia, ib));
    for (int j = 0; j < d; ++j)
        tr.cycle_edges.push_back(out.edge_index((n - 1) + j, (n - 1) + (j + 1) % d));
    return {std::move(out), std::move(tr)};
}

std::pair<Graph, TransformTrace> truncate(const Graph& g, int v) {
    if (g.degree(v) != 3) raise(errc::wrong_degree, "truncation needs deg(v) = 3");
    Matching m{v, g.neighbors(v)};
    auto r = local_cubic_modification(g, v, m);
    r.second.kind = "truncate";
    return r;
}

Matching good_matching(const Graph& g, int v, std::uint64_t seed) {
    if (edge_connectivity(g) < 3)
        raise(errc::not_three_edge_connected, "good_matching needs a 3-edge-connected graph");
    int d = g.degree(v);

    // group the neighbors by connected component of g - v
    std::vector<std::pair<int, int>> masked_pairs;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) masked_pairs.emplace_back(a, b);
    Graph gv = Graph::build(g.vertex_count(), masked_pairs);
    auto comps = connected_components(gv);
    std::vector<std::vector<int>> groups;
    for (const auto& comp : comps) {
        std::vector<int> nb;
        for (int u : g.neighbors(v))
            if (std::binary_search(comp.begin(), comp.end(), u) && u != v) nb.push_back(u);
        if (!nb.empty()) groups.push_back(std::move(nb));
    }

    auto try_matching = [&](const std::vector<int>& order) -> bool {
        Matching m{v, order};
        auto [h, tr] = local_cubic_modification(g, v, m);
        (void)tr;
        return edge_connectivity(h) >= 3;
    };

    // round-robin interleave across the component groups; when v is not a cut
    // vertex there is one group and this is just its natural order
    std::vector<int> order;
    {
        size_t column = 0;
        while (static_cast<int>(order.size()) < d) {
            for (const auto& grp : groups)
                if (column < grp.size()) order.push_back(grp[column]);
            ++column;
        }
    }
    if (try_matching(order)) return {v, order};

    // rotations of the interleave, then seeded shuffles
    for (int r = 1; r < d; ++r) {
        std::rotate(order.begin(), order.begin() + 1, order.end());
        if (try_matching(order)) return {v, order};
    }
    rng64 rng(seed ^ 0x51ed270b1f2c4d5eull);
    for (int attempt = 0; attempt < 500; ++attempt) {
        for (size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<size_t>(rng.next_below(i))]);
        if (try_matching(order)) return {v, order};
    }
    raise(errc::invalid_parameter, "no 3-edge-connectivity-preserving matching found at vertex " +
                                       std::to_string(v));
}

std::pair<Graph, TransformTrace> contract_triangle(const Graph& g, std::array<int, 3> t) {
    if (!g.is_cubic()) raise(errc::invalid_parameter, "triangle contraction needs a cubic graph");
    std::sort(t.begin(), t.end());
    auto [a, b, c] = t;
    if (a == b || b == c || !g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c))
        raise(errc::not_a_triangle, "vertices do not induce a triangle");

    int n = g.vertex_count();
    auto in_t = [&](int u) { return u == a || u == b || u == c; };
    // outside endpoints of the three leaving edges must be distinct
    std::vector<int> outside;
    for (int u : {a, b, c})
        for (int w : g.neighbors(u))
            if (!in_t(w)) outside.push_back(w);
    std::sort(outside.begin(), outside.end());
    if (outside.size() != 3 || std::adjacent_find(outside.begin(), outside.end()) != outside.end())
        raise(errc::would_create_multiedge, "two triangle edges leave to the same vertex");

    int vt = n - 3; // merged vertex, appended after the surviving block
    auto fwd = [&](int u) {
        int shift = (u > a) + (u > b) + (u > c);
        return u - shift;
    };

    TransformTrace tr;
    tr.kind = "contract";
    tr.source_graph6 = write_graph6(g);
    for (int u = 0; u < n; ++u) tr.vertex_map.push_back(in_t(u) ? vt : fwd(u));
    tr.new_vertices.push_back(vt);

    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edge(e);
        if (in_t(x) && in_t(y)) {
            tr.edge_images.push_back({-1, -1});
            continue;
        }
        int ix = in_t(x) ? vt : fwd(x);
        int iy = in_t(y) ? vt : fwd(y);
        tr.edge_images.push_back({ix, iy});
        pairs.emplace_back(ix, iy);
    }
    Graph out = Graph::build(n - 2, pairs);
    tr.result_graph6 = write_graph6(out);
    for (auto [ix, iy] : tr.edge_images)
        tr.edge_map.push_back(ix < 0 ? -1 : out.edge_index(ix, iy));
    return {std::move(out), std::move(tr)};
}

Orientation project_orientation(const Graph& source, const Orientation& o_result,
                                const TransformTrace& trace) {
    if (write_graph6(source) != trace.source_graph6)
        raise(errc::invalid_parameter, "trace does not belong to this source graph");
    if (trace.kind == "contract")
        raise(errc::invalid_parameter, "projection is defined for lcm/truncate traces");
    if (!is_strongly_connected(o_result))
        raise(errc::not_strongly_connected, "projection needs a strongly connected orientation");

    std::uint64_t bits = 0;
    for (int e = 0; e < source.edge_count(); ++e) {
        auto [p, q] = trace.edge_images[static_cast<size_t>(e)];
        int j = trace.edge_map[static_cast<size_t>(e)];
        bool from_low_result = o_result.from_lower(j);
        // source edge (u,v) with u < v maps to (p,q); the arc p->q exists in
        // the result iff the result bit matches the (p,q) endpoint order
        bool arc_p_to_q = p < q ? from_low_result : !from_low_result;
        if (arc_p_to_q) bits |= bit(e);
    }
    Orientation o(source, bits);
    if (!is_strongly_connected(o))
        raise(errc::not_strongly_connected, "projection unexpectedly not strongly connected");
    return o;
}

namespace {

/// The four direction patterns of the new triangle that keep the lifted
/// orientation strongly connected when the triangle is entered at ca (the
/// cycle vertex matched to the tail of the unique arc into v) and left at cb,
/// cc: two directed cycles and two out-stars of ca.
struct TrianglePattern {
    std::array<std::pair<int, int>, 3> arcs; // indices into {ca, cb, cc}
};
constexpr std::array<TrianglePattern, 4> kPatterns{{
    {{{{0, 1}, {1, 2}, {2, 0}}}}, // ca->cb->cc->ca
    {{{{0, 2}, {2, 1}, {1, 0}}}}, // ca->cc->cb->ca
    {{{{0, 1}, {0, 2}, {1, 2}}}}, // ca->both, cb->cc
    {{{{0, 1}, {0, 2}, {2, 1}}}}, // ca->both, cc->cb
}};

} // namespace

Certificate lift_certificate(const Graph& g, int v, const Certificate& c,
                             const TransformTrace& trace, std::vector<int>* patterns) {
    if (g.degree(v) != 3) raise(errc::wrong_degree, "lifting needs deg(v) = 3");
    auto vr = verify_certificate(g, c);
    if (!vr.ok) raise(errc::certificate_invalid, "input certificate fails: " + vr.failure);
    if (write_graph6(g) != trace.source_graph6 || trace.cycle_edges.size() != 3)
        raise(errc::invalid_parameter, "trace is not a truncation trace of this graph");

    Graph gv = parse_graph6(trace.result_graph6);
    int k = c.claimed_k;

    // normalize so exactly two arcs leave v, then read off the roles:
    // a = tail of the unique arc into v, b < c the two heads
    std::vector<Orientation> normalized;
    std::vector<std::uint64_t> delsets;
    std::vector<int> role_a(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        Orientation o = orientation_from_arcs(g, c.orientations[static_cast<size_t>(i)]);
        if (o.out_degree(v) != 2) o = o.reversed();
        if (o.out_degree(v) != 2)
            raise(errc::certificate_invalid, "orientation has a source or sink at v");
        normalized.push_back(o);
        delsets.push_back(deletable_set(o).edges);
        role_a[static_cast<size_t>(i)] = ctz64(o.in_mask(v));
    }

    // minimal subset of orientations covering the three edges at v,
    // lexicographically first among those of minimal size
    std::uint64_t at_v = 0;
    for (int x : g.neighbors(v)) at_v |= bit(g.edge_index(v, x));
    std::vector<int> cover;
    for (int size = 1; size <= k && cover.empty(); ++size) {
        std::vector<int> pick(static_cast<size_t>(size));
        std::function<bool(int, int)> choose = [&](int from, int depth) {
            if (depth == size) {
                std::uint64_t u = 0;
                for (int idx : pick) u |= delsets[static_cast<size_t>(idx)] & at_v;
                return u == at_v;
            }
            for (int i = from; i < k; ++i) {
                pick[static_cast<size_t>(depth)] = i;
                if (choose(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (choose(0, 0)) cover = pick;
    }
    if (cover.empty())
        raise(errc::certificate_invalid, "certificate does not cover the edges at v");

    // lifted base bits per orientation (triangle arcs still unset)
    auto cycle_vertex_of = [&](int neighbor) {
        int e = g.edge_index(v, neighbor);
        auto [p, q] = trace.edge_images[static_cast<size_t>(e)];
        return g.edge(e).u == v ? p : q; // the endpoint that replaced v
    };
    std::vector<std::uint64_t> base(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [p, q] = trace.edge_images[static_cast<size_t>(e)];
            int j = trace.edge_map[static_cast<size_t>(e)];
            bool arc_from_p = normalized[static_cast<size_t>(i)].from_lower(e);
            // arc u->w of the source maps to arc image(u)->image(w)
            bool from_low = p < q ? arc_from_p : !arc_from_p;
            if (from_low) base[static_cast<size_t>(i)] |= bit(j);
        }
    }

    auto triangle_bits = [&](int i, int pattern) {
        int a = role_a[static_cast<size_t>(i)];
        std::vector<int> heads;
        for (int x : g.neighbors(v))
            if (x != a) heads.push_back(x);
        std::array<int, 3> cyc{cycle_vertex_of(a), cycle_vertex_of(heads[0]),
                               cycle_vertex_of(heads[1])};
        std::uint64_t bits = 0;
        for (auto [s, t] : kPatterns[static_cast<size_t>(pattern)].arcs) {
            int cs = cyc[static_cast<size_t>(s)], ct = cyc[static_cast<size_t>(t)];
            int j = gv.edge_index(cs, ct);
            if (cs < ct) bits |= bit(j);
        }
        return bits;
    };

    // pick triangle patterns: default pattern 0 everywhere, search over the
    // covering orientations (then over all, as a fallback) for a combination
    // whose lift verifies
    auto assemble = [&](const std::vector<int>& pat) {
        std::vector<Orientation> os;
        for (int i = 0; i < k; ++i)
            os.emplace_back(gv, base[static_cast<size_t>(i)] |
                                    triangle_bits(i, pat[static_cast<size_t>(i)]));
        return os;
    };
    auto try_patterns = [&](const std::vector<int>& members) -> std::optional<std::vector<int>> {
        std::vector<int> pat(static_cast<size_t>(k), 0);
        size_t combos = 1;
        for (size_t i = 0; i < members.size(); ++i) combos *= kPatterns.size();
        for (size_t code = 0; code < combos; ++code) {
            size_t rest = code;
            for (int idx : members) {
                pat[static_cast<size_t>(idx)] = static_cast<int>(rest % kPatterns.size());
                rest /= kPatterns.size();
            }
            try {
                Certificate lifted = make_certificate(gv, assemble(pat));
                if (verify_certificate(gv, lifted).ok) return pat;
            } catch (const error&) {
                // cover incomplete under this pattern combination; keep going
            }
        }
        return std::nullopt;
    };

    auto chosen = try_patterns(cover);
    if (!chosen) {
        std::vector<int> all(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) all[static_cast<size_t>(i)] = i;
        chosen = try_patterns(all);
    }
    if (!chosen)
        raise(errc::certificate_invalid, "no triangle pattern combination lifts the certificate");
    if (patterns) *patterns = *chosen;
    return make_certificate(gv, assemble(*chosen));
}

std::pair<Graph, std::vector<TransformTrace>> reduce_to_triangle_free(const Graph& g) {
    Graph cur = g;
    std::vector<TransformTrace> traces;
    while (true) {
        if (cur.vertex_count() == 4) break; // K_4: contractions would not stay simple
        bool contracted = false;
        int n = cur.vertex_count();
        for (int a = 0; a < n && !contracted; ++a)
            for (int b = a + 1; b < n && !contracted; ++b) {
                if (!cur.has_edge(a, b)) continue;
                for (int c = b + 1; c < n && !contracted; ++c) {
                    if (!cur.has_edge(a, c) || !cur.has_edge(b, c)) continue;
                    try {
                        auto [h, tr] = contract_triangle(cur, {a, b, c});
                        traces.push_back(std::move(tr));
                        cur = std::move(h);
                        contracted = true;
                    } catch (const error&) {
                        // blocked triangle; try the next one
                    }
                }
            }
        if (!contracted) break;
    }
    return {std::move(cur), std::move(traces)};
}

} // namespace frank
