#include "frank/solver.hpp"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>

#include "frank/bits.hpp"
#include "frank/connectivity.hpp"
#include "frank/graph6.hpp"
#include "frank/isomorphism.hpp"
#include "scan_internal.hpp"

namespace frank {

using internal::ScanControl;
using internal::Scanner;
using internal::orientation_space;
using internal::run_chunks;
using internal::scan_range;
using internal::seconds_since;

namespace {

void check_space(const Graph& g, const EnumOptions& opts) {
    if (g.edge_count() > 62 || g.vertex_count() > 64)
        raise(errc::space_too_large, "orientation scans need n <= 64 and m <= 62");
    if (orientation_space(g, opts.fix_first_edge && g.edge_count() >= 1) > opts.max_space)
        raise(errc::space_too_large,
              "orientation space exceeds the configured bound of " + std::to_string(opts.max_space));
}

} // namespace

void for_each_sc_orientation(const Graph& g, const EnumOptions& opts,
                             const std::function<void(const ScOrientation&)>& fn,
                             EnumStats* stats) {
    check_space(g, opts);
    bool fix = opts.fix_first_edge && g.edge_count() >= 1;
    EnumStats local;
    local.scanned =
        scan_range(g, fix, 0, orientation_space(g, fix), nullptr, [&](const Scanner& s) {
            ++local.sc_count;
            fn(ScOrientation{s.bits, s.deletable_edges()});
        });
    if (stats) *stats = local;
}

std::vector<ScOrientation> enumerate_sc_orientations(const Graph& g, const EnumOptions& opts,
                                                     EnumStats* stats) {
    check_space(g, opts);
    bool fix = opts.fix_first_edge && g.edge_count() >= 1;
    std::uint64_t space = orientation_space(g, fix);
    int w = std::max(1, opts.workers);
    std::vector<std::vector<ScOrientation>> parts(static_cast<size_t>(w));
    std::vector<std::uint64_t> visited(static_cast<size_t>(w), 0);
    run_chunks(space, w, [&](int i, std::uint64_t b, std::uint64_t e) {
        visited[static_cast<size_t>(i)] = scan_range(g, fix, b, e, nullptr, [&](const Scanner& s) {
            parts[static_cast<size_t>(i)].push_back({s.bits, s.deletable_edges()});
        });
    });
    // chunks are contiguous counter ranges, so concatenation stays ascending
    std::vector<ScOrientation> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    if (stats) {
        stats->scanned = 0;
        for (auto v : visited) stats->scanned += v;
        stats->sc_count = all.size();
    }
    return all;
}

namespace {

struct SetTable {
    std::vector<DeletableSet> sets; // maximal, sorted by (size desc, edges asc)
    EnumStats stats;
    bool aborted = false;
};

SetTable collect_maximal_sets(const Graph& g, const EnumOptions& opts, double budget_seconds) {
    check_space(g, opts);
    bool fix = opts.fix_first_edge && g.edge_count() >= 1;
    std::uint64_t space = orientation_space(g, fix);
    int w = std::max(1, opts.workers);

    ScanControl ctl;
    ctl.set_budget(budget_seconds);

    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> maps(static_cast<size_t>(w));
    std::vector<std::uint64_t> visited(static_cast<size_t>(w), 0);
    std::vector<std::uint64_t> sc(static_cast<size_t>(w), 0);
    run_chunks(space, w, [&](int i, std::uint64_t b, std::uint64_t e) {
        auto& map = maps[static_cast<size_t>(i)];
        visited[static_cast<size_t>(i)] = scan_range(g, fix, b, e, &ctl, [&](const Scanner& s) {
            ++sc[static_cast<size_t>(i)];
            std::uint64_t ds = s.deletable_edges();
            auto [it, fresh] = map.try_emplace(ds, s.bits);
            if (!fresh && s.bits < it->second) it->second = s.bits;
        });
    });

    // merge keeping the smallest witness bits per set (order independent)
    std::unordered_map<std::uint64_t, std::uint64_t> merged;
    for (auto& m : maps)
        for (auto [set, bits] : m) {
            auto [it, fresh] = merged.try_emplace(set, bits);
            if (!fresh && bits < it->second) it->second = bits;
        }

    std::vector<DeletableSet> all;
    all.reserve(merged.size());
    for (auto [set, bits] : merged) all.push_back({set, bits});
    std::sort(all.begin(), all.end(), [](const DeletableSet& a, const DeletableSet& b) {
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa > sb;
        return a.edges < b.edges;
    });

    SetTable out;
    for (const auto& s : all) {
        bool covered = false;
        for (const auto& kept : out.sets)
            if ((s.edges | kept.edges) == kept.edges) {
                covered = true;
                break;
            }
        if (!covered) out.sets.push_back(s);
    }
    for (size_t i = 0; i < maps.size(); ++i) {
        out.stats.scanned += visited[i];
        out.stats.sc_count += sc[i];
    }
    out.aborted = ctl.stop.load();
    return out;
}

} // namespace

MaximalSets maximal_deletable_sets(const Graph& g, const EnumOptions& opts) {
    auto table = collect_maximal_sets(g, opts, 0);
    return {std::move(table.sets), table.stats};
}

OrientationClasses orientation_classes(const Graph& g, bool include_reversal) {
    AutGroup aut = automorphism_group(g); // TooLarge beyond n = 12
    int m = g.edge_count();
    std::uint64_t mask = low_bits(m);

    // per group element: edge permutation plus per-edge direction flips
    struct EdgePerm {
        int target[64];
        std::uint64_t flip = 0;
    };
    std::vector<EdgePerm> perms;
    perms.reserve(aut.elements.size());
    for (const auto& p : aut.elements) {
        EdgePerm ep;
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edge(e);
            int pu = p[static_cast<size_t>(u)], pv = p[static_cast<size_t>(v)];
            ep.target[e] = g.edge_index(pu, pv);
            if (pu > pv) ep.flip |= bit(e);
        }
        perms.push_back(ep);
    }
    auto apply = [&](const EdgePerm& ep, std::uint64_t bits) {
        std::uint64_t img = 0;
        std::uint64_t eff = bits ^ ep.flip;
        for (int e = 0; e < m; ++e)
            if (has_bit(eff, e)) img |= bit(ep.target[e]);
        return img;
    };

    EnumOptions full;
    full.fix_first_edge = false; // classes quotient the full SC set
    std::vector<std::uint64_t> sc_bits;
    EnumStats stats;
    for_each_sc_orientation(
        g, full, [&](const ScOrientation& o) { sc_bits.push_back(o.bits); }, &stats);

    OrientationClasses out;
    out.includes_reversal = include_reversal;
    out.sc_total = stats.sc_count;
    for (std::uint64_t b : sc_bits) {
        std::uint64_t rep = ~std::uint64_t{0};
        for (const auto& ep : perms) {
            rep = std::min(rep, apply(ep, b));
            if (include_reversal) rep = std::min(rep, apply(ep, ~b & mask));
        }
        if (rep == b) out.representatives.push_back(b); // each orbit keeps its minimum
    }
    std::sort(out.representatives.begin(), out.representatives.end());
    out.count = static_cast<int>(out.representatives.size());
    return out;
}

namespace {

/// Recursive minimum set-cover over maximal deletable sets, pre-sorted by
/// descending size. Prunes when even the largest remaining sets cannot finish
/// the cover.
bool cover_rec(const std::vector<DeletableSet>& sets, std::uint64_t full, std::uint64_t acc,
               size_t from, int remaining, std::vector<int>& chosen) {
    if (acc == full) return true;
    if (remaining == 0) return false;
    int missing = popcount64(full & ~acc);
    for (size_t i = from; i < sets.size(); ++i) {
        if (sets[i].size() * remaining < missing) return false; // sorted: later sets are smaller
        std::uint64_t next = acc | sets[i].edges;
        if (next == acc) continue;
        chosen.push_back(static_cast<int>(i));
        if (cover_rec(sets, full, next, i + 1, remaining - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

SolveReport frank_number_exact(const Graph& g, int max_k, const SolveBudget& budget,
                               const EnumOptions& opts) {
    auto t0 = internal::scan_clock::now();
    SolveReport r;
    r.graph6 = write_graph6(g);
    r.status = "inconclusive";
    r.method = "exact";

    int lambda = edge_connectivity(g);
    if (lambda < 3)
        raise(errc::not_three_edge_connected,
              "Frank number is defined for 3-edge-connected graphs (lambda = " +
                  std::to_string(lambda) + ")");
    if (lambda == 3) {
        r.lower = 2;
        r.lower_bound_evidence =
            "edge connectivity 3: a fully-deletable orientation would be 2-arc-connected, "
            "which needs edge connectivity 4";
    }

    bool feasible = g.edge_count() <= 62;
    if (feasible)
        feasible = orientation_space(g, opts.fix_first_edge && g.edge_count() >= 1) <= opts.max_space;
    if (!feasible) {
        if (lambda >= 4 && max_k >= 1) {
            // Frank number 1 is exactly the existence of a 2-arc-connected
            // orientation, which edge connectivity >= 4 settles by itself.
            r.frank_number = 1;
            r.lower = r.upper = 1;
            r.status = "exact";
            r.method = "nash-williams";
            r.lower_bound_evidence = "edge connectivity >= 4 guarantees a 2-arc-connected "
                                     "orientation; no certificate materialized";
        } else {
            r.lower_bound_evidence += "; orientation space too large for exhaustion";
        }
        r.stats.seconds = seconds_since(t0);
        return r;
    }

    auto table = collect_maximal_sets(g, opts, budget.seconds);
    r.stats.scanned = table.stats.scanned;
    r.stats.sc_count = table.stats.sc_count;
    r.stats.maximal_sets = table.sets.size();
    if (table.aborted) {
        r.lower_bound_evidence += "; budget exhausted during orientation scan";
        r.stats.seconds = seconds_since(t0);
        return r;
    }

    std::uint64_t full = low_bits(g.edge_count());
    int start_k = lambda >= 4 ? 1 : 2;
    for (int k = start_k; k <= std::min(max_k, 3); ++k) {
        std::vector<int> chosen;
        if (cover_rec(table.sets, full, 0, 0, k, chosen)) {
            std::vector<Orientation> os;
            for (int idx : chosen)
                os.emplace_back(g, table.sets[static_cast<size_t>(idx)].orientation_bits);
            r.certificate = make_certificate(g, os);
            r.frank_number = k;
            r.lower = r.upper = k;
            r.status = "exact";
            if (k > 1)
                r.lower_bound_evidence +=
                    "; exhaustive: no " + std::to_string(k - 1) + " of " +
                    std::to_string(table.sets.size()) + " maximal deletable sets cover all edges";
            break;
        }
    }
    if (!r.frank_number) {
        r.lower = std::min(max_k, 3) + 1;
        r.lower_bound_evidence += "; exhaustive: no cover with up to " +
                                  std::to_string(std::min(max_k, 3)) + " deletable sets";
    }
    r.stats.seconds = seconds_since(t0);
    return r;
}

std::string SolveReport::to_json(int indent) const {
    nlohmann::json j;
    j["graph6"] = graph6;
    j["status"] = status;
    if (frank_number) j["frank_number"] = *frank_number;
    j["bounds"] = {{"lower", lower}, {"upper", upper}};
    j["method"] = method;
    if (certificate) j["certificate"] = nlohmann::json::parse(certificate->to_json());
    j["lower_bound_evidence"] = lower_bound_evidence;
    j["stats"] = {{"orientations_scanned", stats.scanned},
                  {"sc_count", stats.sc_count},
                  {"maximal_deletable_sets", stats.maximal_sets},
                  {"seconds", stats.seconds}};
    j["seed"] = seed;
    return j.dump(indent);
}

namespace {

struct CandidateOrientation {
    std::uint64_t bits = 0;
    std::uint64_t delset = 0;
    std::vector<std::uint64_t> incident_deletable; // per vertex, as edge mask
};

std::string bits_to_string(std::uint64_t bits, int m) {
    std::string s(static_cast<size_t>(m), '0');
    for (int e = 0; e < m; ++e)
        if (has_bit(bits, e)) s[static_cast<size_t>(e)] = '1';
    return s;
}

} // namespace

std::vector<ConjectureReport> check_conjectures(const std::vector<Graph>& gs,
                                                const std::set<int>& which,
                                                const EnumOptions& opts) {
    std::vector<ConjectureReport> reports;
    for (const Graph& g : gs) {
        if (!g.is_cubic() || edge_connectivity(g) != 3)
            raise(errc::invalid_parameter, "conjecture checks need cubic 3-edge-connected input");
        int n = g.vertex_count(), m = g.edge_count();

        std::vector<std::uint64_t> incident(static_cast<size_t>(n), 0);
        for (int e = 0; e < m; ++e) {
            incident[static_cast<size_t>(g.edge(e).u)] |= bit(e);
            incident[static_cast<size_t>(g.edge(e).v)] |= bit(e);
        }

        ConjectureReport rep;
        rep.graph6 = write_graph6(g);

        bool need_scan = which.count(1) || which.count(2) || which.count(3);
        std::vector<CandidateOrientation> touching; // deletable arc at every vertex
        std::uint64_t best_bits = 0;
        int best_count = -1;
        if (need_scan) {
            for_each_sc_orientation(g, opts, [&](const ScOrientation& o) {
                int sz = popcount64(o.deletable);
                if (sz > best_count) {
                    best_count = sz;
                    best_bits = o.bits;
                }
                bool all = true;
                for (int v = 0; v < n && all; ++v)
                    all = (o.deletable & incident[static_cast<size_t>(v)]) != 0;
                if (all) {
                    CandidateOrientation c;
                    c.bits = o.bits;
                    c.delset = o.deletable;
                    c.incident_deletable.resize(static_cast<size_t>(n));
                    for (int v = 0; v < n; ++v)
                        c.incident_deletable[static_cast<size_t>(v)] =
                            o.deletable & incident[static_cast<size_t>(v)];
                    touching.push_back(std::move(c));
                }
            });
        }

        if (which.count(1)) {
            ConjectureFinding f{1, touching.empty() ? "fails" : "holds", ""};
            f.detail = touching.empty()
                           ? "no strongly connected orientation has a deletable arc at every vertex"
                           : "orientation " + bits_to_string(touching.front().bits, m);
            rep.findings.push_back(f);
        }
        if (which.count(2)) {
            // The scan fixes edge 0's direction, so each member of a pair may
            // additionally be reversed; reversal keeps deletable edges and
            // flips arc directions.
            ConjectureFinding f{2, "fails", "no orientation pair found"};
            for (size_t i = 0; i < touching.size() && f.status == "fails"; ++i)
                for (size_t j = i; j < touching.size() && f.status == "fails"; ++j)
                    for (int sign = 0; sign < 4 && f.status == "fails"; ++sign) {
                        bool s1 = sign & 1, s2 = sign & 2;
                        const auto& A = touching[i];
                        const auto& B = touching[j];
                        bool ok = true;
                        for (int v = 0; v < n && ok; ++v) {
                            std::uint64_t ma = A.incident_deletable[static_cast<size_t>(v)];
                            std::uint64_t mb = B.incident_deletable[static_cast<size_t>(v)];
                            // only a single shared arc with equal direction fails
                            if (ma == mb && popcount64(ma) == 1) {
                                int e = ctz64(ma);
                                bool da = has_bit(A.bits, e) ^ s1;
                                bool db = has_bit(B.bits, e) ^ s2;
                                if (da == db) ok = false;
                            }
                        }
                        if (ok)
                            f = {2, "holds",
                                 "orientations " + bits_to_string(A.bits, m) +
                                     (s1 ? " reversed" : "") + " and " + bits_to_string(B.bits, m) +
                                     (s2 ? " reversed" : "")};
                    }
            rep.findings.push_back(f);
        }
        if (which.count(3)) {
            ConjectureFinding f{3, 2 * best_count >= m ? "holds" : "fails", ""};
            f.detail = "max deletable arcs " + std::to_string(best_count) + " of " +
                       std::to_string(m) + " in orientation " + bits_to_string(best_bits, m);
            rep.findings.push_back(f);
        }
        if (which.count(4)) {
            ConjectureFinding f{4, "skipped", "not Hamiltonian"};
            if (is_hamiltonian(g)) {
                auto sr = frank_number_exact(g, 3, SolveBudget{}, opts);
                bool two = sr.frank_number && *sr.frank_number == 2;
                f.status = two ? "holds" : "fails";
                f.detail = "Hamiltonian; Frank number " +
                           (sr.frank_number ? std::to_string(*sr.frank_number)
                                            : std::string("unknown"));
            }
            rep.findings.push_back(f);
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace frank
