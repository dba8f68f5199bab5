#include "ribbon/search.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "ribbon/goeritz.hpp"

namespace ribbon {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::NonSlice: return "NonSlice";
        case VerdictKind::AlgorithmicallyRibbon: return "AlgorithmicallyRibbon";
        case VerdictKind::AlgorithmicallyNonRibbon: return "AlgorithmicallyNonRibbon";
        case VerdictKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

namespace {

struct Node {
    PlanarDiagram diagram;
    int depth = 0;                  // bands applied so far
    std::vector<MoveRecord> path;   // full move list from the input diagram
};

// flype-equivalent forms of a diagram, each with the flype path that reaches
// it; the diagram itself comes first
struct Form {
    PlanarDiagram diagram;
    std::vector<MoveRecord> flypes;
};

std::vector<Form> flype_orbit(const PlanarDiagram& d, int cap) {
    std::vector<Form> orbit;
    std::set<CanonicalCode> seen{canonical_code(d)};
    orbit.push_back(Form{d, {}});
    for (std::size_t i = 0; i < orbit.size() && (int)orbit.size() < cap; ++i) {
        for (const auto& m : enumerate_flypes(orbit[i].diagram)) {
            AppliedMove am;
            try {
                am = apply_move(orbit[i].diagram, m);
            } catch (const std::exception&) {
                continue;
            }
            if (!seen.insert(canonical_code(am.diagram)).second) continue;
            auto fl = orbit[i].flypes;
            fl.push_back(am.record);
            orbit.push_back(Form{std::move(am.diagram), std::move(fl)});
            if ((int)orbit.size() >= cap) break;
        }
    }
    return orbit;
}

Certificate make_certificate(const PlanarDiagram& input, const std::vector<MoveRecord>& path,
                             int final_components) {
    Certificate c;
    c.initial = input.data();
    c.moves = path;
    c.final_components = final_components;
    return c;
}

}  // namespace

Verdict classify(const PlanarDiagram& d, const SearchConfig& cfg) {
    if (!is_minimally_nonalternating(d))
        throw std::invalid_argument("classify: input is not minimally nonalternating");
    Verdict v;
    if (d.crossings() == 0) {
        if (d.circles() == 1) {
            v.kind = VerdictKind::AlgorithmicallyRibbon;
            v.certificate = make_certificate(d, {}, 1);
        }
        return v;
    }
    auto root_bf = bifactorise(d, cfg.lattice_budget);
    if (root_bf.items.empty()) {
        v.kind = root_bf.budget_exceeded ? VerdictKind::BudgetExceeded : VerdictKind::NonSlice;
        return v;
    }

    std::deque<Node> queue;
    std::set<CanonicalCode> explored;
    bool truncated = false;

    // simplify the input once (kinks etc.); the root counts as depth 0
    {
        auto sr = aa_simplify(d, root_bf.items.front(), cfg.lattice_budget);
        std::vector<MoveRecord> path = sr.trace;
        if (sr.diagram.crossings() == 0) {
            if (sr.diagram.circles() == 1) {
                v.kind = VerdictKind::AlgorithmicallyRibbon;
                v.certificate = make_certificate(d, path, 1);
            }
            return v;
        }
        explored.insert(canonical_code(sr.diagram));
        queue.push_back(Node{std::move(sr.diagram), 0, std::move(path)});
    }

    while (!queue.empty()) {
        if (v.stats.nodes_explored >= cfg.max_nodes) {
            truncated = true;
            break;
        }
        Node node = std::move(queue.front());
        queue.pop_front();
        ++v.stats.nodes_explored;
        if (cfg.progress) cfg.progress(v.stats.nodes_explored, queue.size());
        if (node.depth >= cfg.max_bands) {
            truncated = true;
            continue;
        }
        bool expanded = false;
        for (const auto& form : flype_orbit(node.diagram, cfg.max_flype_orbit)) {
            auto bfres = bifactorise(form.diagram, cfg.lattice_budget);
            if (bfres.budget_exceeded) truncated = true;
            for (const auto& bf : bfres.items) {
                for (const auto& cand : enumerate_candidate_bands(form.diagram)) {
                    auto t = is_algorithmic_band(form.diagram, bf, cand, cfg.lattice_budget);
                    if (t.budget_exceeded) truncated = true;
                    if (!t.ok) continue;
                    auto sr = aa_simplify(t.result, t.extended, cfg.lattice_budget);
                    if (!explored.insert(canonical_code(sr.diagram)).second) {
                        ++v.stats.dedup_hits;
                        continue;
                    }
                    std::vector<MoveRecord> path = node.path;
                    path.insert(path.end(), form.flypes.begin(), form.flypes.end());
                    path.push_back(t.record);
                    path.insert(path.end(), sr.trace.begin(), sr.trace.end());
                    int depth = node.depth + 1;
                    if (sr.diagram.crossings() == 0 && sr.diagram.circles() == depth + 1) {
                        v.kind = VerdictKind::AlgorithmicallyRibbon;
                        v.band_count = depth;
                        v.certificate = make_certificate(d, path, depth + 1);
                        v.stats.children++;
                        v.stats.max_depth = std::max(v.stats.max_depth, depth);
                        return v;
                    }
                    ++v.stats.children;
                    v.stats.max_depth = std::max(v.stats.max_depth, depth);
                    expanded = true;
                    if (sr.diagram.crossings() == 0) {
                        ++v.stats.dead_ends;  // unlink of the wrong size
                        continue;
                    }
                    queue.push_back(Node{std::move(sr.diagram), depth, std::move(path)});
                }
            }
        }
        if (!expanded) ++v.stats.dead_ends;
    }
    v.kind = truncated ? VerdictKind::BudgetExceeded : VerdictKind::AlgorithmicallyNonRibbon;
    return v;
}

}  // namespace ribbon
