#include "frank/certificate.hpp"

#include <json.hpp>

#include "frank/graph6.hpp"

namespace frank {

using nlohmann::json;

std::string Certificate::to_json(int indent) const {
    json j;
    j["graph6"] = graph6;
    j["claimed_frank_number"] = claimed_k;
    json os = json::array();
    for (const auto& o : orientations) {
        json arcs = json::array();
        for (auto [t, h] : o) arcs.push_back(json::array({t, h}));
        os.push_back(arcs);
    }
    j["orientations"] = os;
    j["witness"] = witness;
    return j.dump(indent);
}

Certificate Certificate::from_json_text(const std::string& text) {
    json j = json::parse(text);
    Certificate c;
    c.graph6 = j.at("graph6").get<std::string>();
    c.claimed_k = j.at("claimed_frank_number").get<int>();
    for (const auto& o : j.at("orientations")) {
        std::vector<std::pair<int, int>> arcs;
        for (const auto& a : o) arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        c.orientations.push_back(std::move(arcs));
    }
    c.witness = j.at("witness").get<std::vector<int>>();
    return c;
}

Certificate make_certificate(const Graph& g, const std::vector<Orientation>& orientations) {
    Certificate c;
    c.graph6 = write_graph6(g);
    c.claimed_k = static_cast<int>(orientations.size());
    std::vector<DeletableSet> sets;
    for (const auto& o : orientations) {
        c.orientations.push_back(o.arcs());
        sets.push_back(deletable_set(o));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int w = -1;
        for (size_t i = 0; i < sets.size() && w < 0; ++i)
            if (sets[i].contains(e)) w = static_cast<int>(i);
        if (w < 0)
            raise(errc::certificate_invalid,
                  "edge " + std::to_string(e) + " deletable in no orientation");
        c.witness.push_back(w);
    }
    return c;
}

VerifyReport verify_certificate(const Graph& g, const Certificate& c) {
    VerifyReport r;
    Graph declared;
    try {
        declared = parse_graph6(c.graph6);
    } catch (const error&) {
        r.failure = "GraphMismatch: unparsable graph6 in certificate";
        return r;
    }
    if (!(declared == g)) {
        r.failure = "GraphMismatch";
        return r;
    }
    if (static_cast<int>(c.orientations.size()) != c.claimed_k) {
        r.failure = "OrientationCountMismatch";
        return r;
    }
    if (static_cast<int>(c.witness.size()) != g.edge_count()) {
        r.failure = "WitnessLengthMismatch";
        return r;
    }

    std::vector<Orientation> os;
    for (size_t i = 0; i < c.orientations.size(); ++i) {
        try {
            os.push_back(orientation_from_arcs(g, c.orientations[i]));
        } catch (const error&) {
            r.failure = "InvalidOrientation(" + std::to_string(i) + ")";
            r.failed_orientation = static_cast<int>(i);
            return r;
        }
        if (!is_strongly_connected(os.back())) {
            r.failure = "NotStronglyConnected(" + std::to_string(i) + ")";
            r.failed_orientation = static_cast<int>(i);
            return r;
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int w = c.witness[static_cast<size_t>(e)];
        if (w < 0 || w >= c.claimed_k) {
            r.failure = "WitnessOutOfRange(" + std::to_string(e) + ")";
            r.failed_edge = e;
            return r;
        }
        if (!is_deletable(os[static_cast<size_t>(w)], e)) {
            r.failure = "WitnessNotDeletable(" + std::to_string(e) + ")";
            r.failed_edge = e;
            return r;
        }
    }
    r.ok = true;
    for (int e = 0; e < g.edge_count(); ++e) r.witnesses.push_back(c.witness[static_cast<size_t>(e)]);
    return r;
}

} // namespace frank
