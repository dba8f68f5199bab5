#include "ribbon/moves.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <map>
#include <set>
#include <stdexcept>

#include "ribbon/goeritz.hpp"

namespace ribbon {
namespace {

int host_region(const PlanarDiagram& d, int host) {
    if (host == kHostAmbient) return d.ambient_region();
    if (host_is_circle(host)) return d.region_of_circle(host_circle_index(host));
    return d.region(host);
}

// ---------------------------------------------------------------- surgery

// Rewires a copy of the diagram: edges and circles are cut into stubs, stubs
// are welded to new crossing ports, and leftover strand segments ("arcs")
// are chased through to produce the final twin pairs.
struct Surgeon {
    const PlanarDiagram& d;
    DiagramData nd;
    std::map<int, int> weld_of;   // endpoint -> endpoint (both directions)
    std::vector<char> circle_cut;
    int arc_count = 0;

    explicit Surgeon(const PlanarDiagram& dia)
        : d(dia), nd(dia.data()), circle_cut(dia.circles(), 0) {
        if (!nd.glue.empty()) throw std::invalid_argument("surgery: glued diagram");
    }

    int arc_end(int arc, int end) { return -(2 * arc + end + 1); }

    int new_crossing() { return nd.add_crossing(0, 0); }

    void weld(int x, int y) {
        if (weld_of.count(x) || weld_of.count(y))
            throw std::invalid_argument("surgery: endpoint welded twice");
        weld_of[x] = y;
        weld_of[y] = x;
    }

    // Cut an edge or circle, possibly several times.  Returns one stub pair
    // (left, right) per cut, in order along the strand.
    std::vector<std::pair<int, int>> cut(const BandSite& site_rep, int times) {
        std::vector<std::pair<int, int>> out;
        if (site_rep.is_circle()) {
            int j = site_rep.circle;
            if (circle_cut[j]) throw std::invalid_argument("surgery: circle cut twice");
            circle_cut[j] = 1;
            // cyclic chain of `times` arcs
            int first = arc_count;
            arc_count += times;
            for (int i = 0; i < times; ++i) {
                int prev = first + (i + times - 1) % times;
                out.push_back({arc_end(prev, 1), arc_end(first + i, 0)});
            }
        } else {
            Half h = std::min(site_rep.edge, d.twin(site_rep.edge));
            Half t = d.twin(h);
            int first = arc_count;
            arc_count += times - 1;
            for (int i = 0; i < times; ++i) {
                int left = i == 0 ? h : arc_end(first + i - 1, 1);
                int right = i == times - 1 ? (int)t : arc_end(first + i, 0);
                out.push_back({left, right});
            }
        }
        return out;
    }

    // resolve welds + arcs into twin entries
    void finish() {
        for (const auto& [x, y] : weld_of) {
            if (x < 0) continue;  // ports only
            int z = y;
            while (z < 0) z = weld_of.at(-(((-z - 1) ^ 1) + 1));  // hop across the arc
            nd.twin[x] = z;
        }
    }

    // colour propagation for new crossings; seeds may pre-set entries
    void set_colours(int old_crossings, const std::map<int, int>& seeds) {
        int n = nd.crossings();
        std::vector<char> known(n, 0);
        for (int c = 0; c < old_crossings; ++c) known[c] = 1;
        for (const auto& [c, v] : seeds) {
            nd.col0[c] = (std::uint8_t)v;
            known[c] = 1;
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (int c = old_crossings; c < n; ++c) {
                if (known[c]) continue;
                for (int s = 0; s < 4 && !known[c]; ++s) {
                    Half x = half_of(c, s);
                    Half y = nd.twin[x];
                    if (!known[cross_of(y)]) continue;
                    // col(corner x) = col(corner rot(y))
                    nd.col0[c] = (nd.col0[cross_of(y)] ^ (rot(y) & 1) ^ (x & 1)) & 1;
                    known[c] = 1;
                    progress = true;
                }
            }
        }
        for (int c = old_crossings; c < n; ++c)
            if (!known[c]) throw std::invalid_argument("surgery: colour not determined");
    }

    // drop cut circles; re-host survivors whose host disappeared or is
    // ambiguous after the surgery
    void fix_circles(int region_of_band, int fallback_corner_colour_region = -1) {
        (void)fallback_corner_colour_region;
        std::vector<int> nh;
        std::vector<int> remap(d.circles(), -1);
        for (int j = 0; j < d.circles(); ++j)
            if (!circle_cut[j]) {
                remap[j] = (int)nh.size();
                nh.push_back(nd.circle_host[j]);
            }
        int old_crossings = d.crossings();
        for (auto& h : nh) {
            int old_region;
            if (h == kHostAmbient)
                old_region = d.ambient_region();
            else if (host_is_circle(h))
                old_region = d.region_of_circle(host_circle_index(h));
            else
                old_region = d.region(h);
            bool stale = false;
            if (h == kHostAmbient && nd.crossings() > 0 && d.crossings() == 0) stale = true;
            if (host_is_circle(h) && circle_cut[host_circle_index(h)]) stale = true;
            if (old_region == region_of_band) stale = true;  // region was split
            if (!stale) {
                if (host_is_circle(h)) h = host_circle(remap[host_circle_index(h)]);
                continue;
            }
            // deterministic re-host: min surviving old corner of the region,
            // else a new-crossing corner of the right colour
            const auto& corners = d.region_corners(old_region);
            if (!corners.empty()) {
                h = corners[0];
                continue;
            }
            int want = d.region_is_white(old_region) ? 1 : 0;
            int pick = -1;
            for (Half x = 4 * old_crossings; x < 4 * nd.crossings() && pick < 0; ++x)
                if (((nd.col0[cross_of(x)] ^ (x & 1)) & 1) == want) pick = x;
            if (pick < 0) throw std::invalid_argument("surgery: cannot re-host circle");
            h = pick;
        }
        nd.circle_host = std::move(nh);
    }
};

// ------------------------------------------------------- strand-through

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

struct Removal {
    DiagramData nd;
    std::vector<int> crossing_map;  // old crossing -> new (-1 dead)
};

// Deletes the crossings in `dead`, letting every strand run straight
// through them.  merge_corners lists pairs of corners whose faces become
// one region; this drives circle re-hosting and glue for disconnections.
Removal remove_strand_through(const PlanarDiagram& d, const std::vector<int>& dead,
                              const std::vector<std::pair<Half, Half>>& merge_corners) {
    const int n = d.crossings();
    const Half H = 4 * n;
    std::vector<char> is_dead(n, 0);
    for (int c : dead) is_dead[c] = 1;

    UF cls(d.region_count());
    for (auto& [a, b] : merge_corners) cls.unite(d.region(a), d.region(b));

    DiagramData nd = d.data();
    std::vector<char> seen(H, 0);
    for (Half x = 0; x < H; ++x) {
        if (is_dead[cross_of(x)]) continue;
        Half y = d.twin(x);
        while (is_dead[cross_of(y)]) {
            seen[y] = 1;
            y = half_of(cross_of(y), slot_of(y) ^ 2);
            seen[y] = 1;
            y = d.twin(y);
        }
        nd.twin[x] = y;
    }
    // strands that ran entirely through dead crossings close into circles
    struct Loop {
        std::vector<Half> edges;  // one side per traversed edge
        int inside = -1, outside = -1;  // region classes
    };
    std::vector<Loop> loops;
    for (Half p = 0; p < H; ++p) {
        if (!is_dead[cross_of(p)] || seen[p]) continue;
        Loop lp;
        Half cur = p;
        do {
            seen[cur] = 1;
            Half q = d.twin(cur);
            seen[q] = 1;
            lp.edges.push_back(cur);
            cur = half_of(cross_of(q), slot_of(q) ^ 2);
        } while (cur != p);
        loops.push_back(std::move(lp));
    }
    // surviving corner per class
    std::vector<Half> rep(d.region_count(), -1);
    for (Half h = 0; h < H; ++h) {
        if (is_dead[cross_of(h)]) continue;
        int c = cls.find(d.region(h));
        if (rep[c] < 0 || h < rep[c]) rep[c] = h;
    }
    // sides of each loop
    for (auto& lp : loops) {
        std::set<int> sides;
        for (Half e : lp.edges) {
            sides.insert(cls.find(d.region(e)));
            sides.insert(cls.find(d.region(d.twin(e))));
        }
        if (sides.size() != 2)
            throw std::invalid_argument("strand-through: loop does not separate two regions");
        auto it = sides.begin();
        int a = *it++, b = *it;
        bool ca = rep[a] >= 0, cb = rep[b] >= 0;
        if (ca && cb)
            throw std::invalid_argument("strand-through: loop between two crossing pieces");
        if (ca) {
            lp.outside = a;
            lp.inside = b;
        } else if (cb) {
            lp.outside = b;
            lp.inside = a;
        } else {
            lp.outside = -a - 2;  // resolved below once nesting is known
            lp.inside = -b - 2;
        }
    }
    // pure collapses: orient loops away from a deterministic root class
    if (!loops.empty()) {
        bool pending = false;
        for (auto& lp : loops) pending = pending || lp.inside < 0;
        if (pending) {
            std::map<int, std::vector<int>> adj;  // class -> loop indices
            int root = -1;
            for (int i = 0; i < (int)loops.size(); ++i)
                if (loops[i].inside < 0) {
                    int a = -loops[i].outside - 2, b = -loops[i].inside - 2;
                    adj[a].push_back(i);
                    adj[b].push_back(i);
                    if (root < 0 || std::min(a, b) < root) root = std::min(a, b);
                }
            std::vector<int> queue{root};
            std::set<int> done{root};
            while (!queue.empty()) {
                int c = queue.back();
                queue.pop_back();
                for (int i : adj[c]) {
                    int a = -loops[i].outside - 2, b = -loops[i].inside - 2;
                    int far = a == c ? b : a;
                    loops[i].outside = c;
                    loops[i].inside = far;
                    if (done.insert(far).second) queue.push_back(far);
                }
            }
            for (auto& lp : loops)
                if (lp.inside < 0)
                    throw std::invalid_argument("strand-through: disconnected collapse nest");
        }
    }
    // placement: new circles get ids after the survivors
    std::map<int, int> inside_of;  // class -> new circle id whose interior it is
    int base = (int)nd.circle_host.size();
    for (int i = 0; i < (int)loops.size(); ++i) {
        if (inside_of.count(loops[i].inside))
            throw std::invalid_argument("strand-through: ambiguous circle interior");
        inside_of[loops[i].inside] = base + i;
    }
    auto host_for_class = [&](int c, int self) -> int {
        auto it = inside_of.find(c);
        if (it != inside_of.end() && it->second != self) return host_circle(it->second);
        if (rep[c] >= 0) return (int)rep[c];  // remapped later by remove_crossings
        return kHostAmbient;
    };
    for (int j = 0; j < base; ++j) {
        int h = nd.circle_host[j];
        if (h < 0) continue;  // circle- or ambient-hosted: still valid
        if (!is_dead[cross_of(h)]) continue;
        nd.circle_host[j] = host_for_class(cls.find(d.region(h)), -1);
    }
    for (int i = 0; i < (int)loops.size(); ++i)
        nd.circle_host.push_back(host_for_class(loops[i].outside, base + i));
    // rebuild glue: pieces of the surviving crossing graph, joined inside
    // each merged region
    nd.glue.clear();
    int survivors = 0;
    std::vector<int> cix(n, -1);
    for (int c = 0; c < n; ++c)
        if (!is_dead[c]) cix[c] = survivors++;
    if (survivors > 0) {
        UF piece(survivors);
        for (Half x = 0; x < H; ++x)
            if (!is_dead[cross_of(x)]) piece.unite(cix[cross_of(x)], cix[cross_of(nd.twin[x])]);
        std::map<int, std::map<int, Half>> by_class;  // class -> piece -> min corner
        for (Half h = 0; h < H; ++h) {
            if (is_dead[cross_of(h)]) continue;
            auto& m = by_class[cls.find(d.region(h))];
            int p = piece.find(cix[cross_of(h)]);
            if (!m.count(p) || h < m[p]) m[p] = h;
        }
        // reuse `piece` to track what the new glue has already joined
        for (auto& [c, m] : by_class) {
            Half prev = -1;
            for (auto& [p, h] : m) {
                if (prev >= 0 &&
                    piece.find(cix[cross_of(prev)]) != piece.find(cix[cross_of(h)])) {
                    nd.glue.emplace_back(prev, h);
                    piece.unite(cix[cross_of(prev)], cix[cross_of(h)]);
                }
                prev = h;
            }
        }
    }
    nd.remove_crossings(dead);
    Removal r;
    r.nd = std::move(nd);
    r.crossing_map.assign(n, -1);
    for (int c = 0, next = 0; c < n; ++c)
        if (!is_dead[c]) r.crossing_map[c] = next++;
    return r;
}

int site_region(const PlanarDiagram& d, const BandSite& s) {
    if (!s.is_circle()) return d.region(s.edge);
    if (s.circle_inside) return d.region_of_circle(s.circle);
    return host_region(d, d.data().circle_host[s.circle]);
}

DiagramData build_band(const PlanarDiagram& d, const BandCandidate& b, int variant) {
    Surgeon s(d);
    int R1 = site_region(d, b.a);
    auto flip = [&](std::pair<int, int>& p, bool f) {
        if (f) std::swap(p.first, p.second);
    };
    if (b.kind == BandKind::Length1) {
        std::pair<int, int> sa, sb;
        if (b.a == b.b) {
            if (!b.a.is_circle()) throw std::invalid_argument("band: same-edge length-1 band");
            auto cuts = s.cut(b.a, 2);
            sa = cuts[0];
            sb = cuts[1];
        } else {
            sa = s.cut(b.a, 1)[0];
            sb = s.cut(b.b, 1)[0];
        }
        flip(sa, variant & 1);
        flip(sb, variant & 2);
        int c = s.new_crossing();
        // A-D and B-C joined through the half-twist crossing
        s.weld(sa.first, half_of(c, 0));
        s.weld(sa.second, half_of(c, 1));
        s.weld(sb.second, half_of(c, 2));
        s.weld(sb.first, half_of(c, 3));
        s.finish();
        // corner (c,0) sits between the two strands heading to attachment a:
        // opposite colour to the band's region
        std::map<int, int> seeds;
        seeds[c] = (d.region_is_white(R1) ? 0 : 1);
        s.set_colours(d.crossings(), seeds);
        s.nd.over[c] = s.nd.col0[c] ^ 1;  // nonalternating
        s.fix_circles(R1);
        return std::move(s.nd);
    }
    // Length2: cuts may share a physical edge or circle with the crossed strand
    auto same_strand = [&](const BandSite& x, const BandSite& y) {
        if (x.is_circle() != y.is_circle()) return false;
        if (x.is_circle()) return x.circle == y.circle;
        return std::min(x.edge, d.twin(x.edge)) == std::min(y.edge, d.twin(y.edge));
    };
    std::pair<int, int> sa, sb, se;
    bool a_on_e = same_strand(b.a, b.across), b_on_e = same_strand(b.b, b.across);
    bool a_b_same = same_strand(b.a, b.b);
    if (a_on_e || b_on_e) {
        int times = 1 + (a_on_e ? 1 : 0) + (b_on_e ? 1 : 0);
        auto cuts = s.cut(b.across, times);
        int at = 0;
        if (a_on_e) sa = cuts[at++];
        se = cuts[at++];
        if (b_on_e) sb = cuts[at++];
        if (!a_on_e) sa = s.cut(b.a, 1)[0];
        if (!b_on_e) sb = s.cut(b.b, 1)[0];
    } else if (a_b_same && b.a != b.b) {
        auto cuts = s.cut(b.a, 2);
        sa = cuts[0];
        sb = cuts[1];
        se = s.cut(b.across, 1)[0];
    } else if (b.a == b.b) {
        throw std::invalid_argument("band: length-2 attachments coincide");
    } else {
        sa = s.cut(b.a, 1)[0];
        sb = s.cut(b.b, 1)[0];
        se = s.cut(b.across, 1)[0];
    }
    flip(sa, variant & 1);
    flip(sb, variant & 2);
    flip(se, variant & 4);
    int c1 = s.new_crossing(), c2 = s.new_crossing();
    // slots: 0 = E, 1 = N, 2 = W, 3 = S; strand e runs W-E, band sides N-S
    s.weld(se.first, half_of(c1, 2));
    s.weld(half_of(c1, 0), half_of(c2, 2));
    s.weld(half_of(c2, 0), se.second);
    s.weld(sa.first, half_of(c1, 1));
    s.weld(sb.first, half_of(c1, 3));
    s.weld(sa.second, half_of(c2, 1));
    s.weld(sb.second, half_of(c2, 3));
    s.finish();
    // corner (c1,0) lies in the bigon between the band sides on the a side,
    // part of the attachment region R1
    std::map<int, int> seeds;
    seeds[c1] = d.region_is_white(R1) ? 1 : 0;
    s.set_colours(d.crossings(), seeds);
    s.nd.over[c1] = b.band_over ? 1 : 0;
    s.nd.over[c2] = b.band_over ? 1 : 0;
    s.fix_circles(R1);
    return std::move(s.nd);
}

}  // namespace

int region_of_site(const PlanarDiagram& d, const BandSite& s) { return site_region(d, s); }

std::vector<BandCandidate> enumerate_candidate_bands(const PlanarDiagram& d) {
    // attachable sites per region
    std::vector<std::vector<BandSite>> sites(d.region_count());
    for (Half h = 0; h < d.halfedges(); ++h) sites[d.region(h)].push_back(BandSite{h, -1, false});
    for (int j = 0; j < d.circles(); ++j) {
        sites[d.region_of_circle(j)].push_back(BandSite{-1, j, true});
        sites[host_region(d, d.data().circle_host[j])].push_back(BandSite{-1, j, false});
    }
    std::vector<BandCandidate> out;
    for (int r = 0; r < d.region_count(); ++r) {
        const auto& ss = sites[r];
        for (std::size_t i = 0; i < ss.size(); ++i) {
            if (ss[i].is_circle()) {
                BandCandidate c;
                c.kind = BandKind::Length1;
                c.a = c.b = ss[i];
                c.twist = 1;
                out.push_back(c);
            }
            for (std::size_t j = i + 1; j < ss.size(); ++j) {
                BandCandidate c;
                c.kind = BandKind::Length1;
                c.a = ss[i];
                c.b = ss[j];
                c.twist = 1;
                out.push_back(c);
            }
        }
    }
    auto emit_l2 = [&](const BandSite& across, int r1, int r2) {
        for (const auto& a : sites[r1])
            for (const auto& b : sites[r2])
                for (int over = 0; over < 2; ++over) {
                    BandCandidate c;
                    c.kind = BandKind::Length2;
                    c.a = a;
                    c.b = b;
                    c.across = across;
                    c.band_over = over;
                    out.push_back(c);
                }
    };
    for (Half h = 0; h < d.halfedges(); ++h) {
        if (h > d.twin(h)) continue;
        emit_l2(BandSite{h, -1, false}, d.region(h), d.region(d.twin(h)));
    }
    for (int j = 0; j < d.circles(); ++j)
        emit_l2(BandSite{-1, j, true}, d.region_of_circle(j),
                host_region(d, d.data().circle_host[j]));
    return out;
}

AppliedMove apply_band(const PlanarDiagram& d, const BandCandidate& b) {
    int R1 = site_region(d, b.a);
    if (b.kind == BandKind::Length1) {
        if (site_region(d, b.b) != R1)
            throw std::invalid_argument("band: attachments in different regions");
    } else {
        if (site_region(d, b.across) != R1)
            throw std::invalid_argument("band: crossed strand not on the attachment region");
        int r2;
        if (b.across.is_circle())
            r2 = b.across.circle_inside ? host_region(d, d.data().circle_host[b.across.circle])
                                        : d.region_of_circle(b.across.circle);
        else
            r2 = d.region(d.twin(b.across.edge));
        if (site_region(d, b.b) != r2)
            throw std::invalid_argument("band: far attachment not across the strand");
    }
    int variants = b.kind == BandKind::Length1 ? 4 : 8;
    int added = b.kind == BandKind::Length1 ? 1 : 2;
    std::string last_err = "no variant realisable";
    for (int v = 0; v < variants; ++v) {
        DiagramData nd;
        try {
            nd = build_band(d, b, v);
            PlanarDiagram pd(std::move(nd));
            if (pd.crossings() != d.crossings() + added) continue;
            if (pd.stats().k != d.stats().k + 1) continue;
            AppliedMove am{std::move(pd), MoveRecord{MoveKind::Band, b, {}, v}, {}};
            am.crossing_map.resize(d.crossings());
            for (int c = 0; c < d.crossings(); ++c) am.crossing_map[c] = c;
            return am;
        } catch (const std::exception& e) {
            last_err = e.what();
            continue;
        }
    }
    throw std::invalid_argument("apply_band: " + last_err);
}

std::vector<MoveRecord> find_r1(const PlanarDiagram& d) {
    std::vector<MoveRecord> out;
    for (Half h = 0; h < d.halfedges(); ++h)
        if (rot(d.twin(h)) == h && d.eps(cross_of(h)) > 0)
            out.push_back(MoveRecord{MoveKind::R1, {}, {(int)h}, 0});
    return out;
}

std::vector<MoveRecord> find_r2(const PlanarDiagram& d) {
    std::vector<MoveRecord> out;
    for (int r = 0; r < d.region_count(); ++r) {
        const auto& cs = d.region_corners(r);
        if (cs.size() != 2) continue;
        int c1 = cross_of(cs[0]), c2 = cross_of(cs[1]);
        if (c1 == c2) continue;
        if (d.eps(c1) + d.eps(c2) != 0) continue;  // clasp-shaped bigons stay
        // poke, not clasp: one strand must run over at both crossings
        Half p = half_of(c1, slot_of(cs[0])), q = d.twin(p);
        if ((d.data().over[c1] == (p & 1)) != (d.data().over[cross_of(q)] == (q & 1))) continue;
        out.push_back(MoveRecord{MoveKind::R2, {}, {(int)cs[0], (int)cs[1]}, 0});
    }
    return out;
}

namespace {

// R3 slide: triangle face with corners a -> b -> c in face order; the strand
// joining cross(b) and cross(c) slides across cross(a).  Valid when that
// strand runs over both or under both of the other two.  Crossing ids, slot
// directions and over bits are preserved; the wedge colours at all three
// crossings change, so col0 there is recomputed.  eps can flip transiently:
// only composites of slides (untongue = slide + untwist) preserve the
// alternating/non-alternating split.
struct R3Probe {
    bool ok = false;
    DiagramData nd;
};

R3Probe try_r3(const PlanarDiagram& d, Half a, Half b, Half c) {
    R3Probe res;
    int A = cross_of(a), B = cross_of(b), C = cross_of(c);
    if (A == B || B == C || A == C) return res;
    if (rot(d.twin(a)) != b || rot(d.twin(b)) != c || rot(d.twin(c)) != a) return res;
    int sa = slot_of(a), sb = slot_of(b), sc = slot_of(c);
    // slider over/under consistency at its two crossings
    bool over_b = d.data().over[B] == (sb & 1);
    bool over_c = d.data().over[C] == ((sc + 1) & 1);
    if (over_b != over_c) return res;
    Half pA1 = d.twin(half_of(A, sa + 1)), pA2 = d.twin(half_of(A, sa + 2));
    Half pB1 = d.twin(half_of(B, sb + 1)), pB2 = d.twin(half_of(B, sb + 2));
    Half pC1 = d.twin(half_of(C, sc + 1)), pC2 = d.twin(half_of(C, sc + 2));
    for (Half p : {pA1, pA2, pB1, pB2, pC1, pC2}) {
        int cp = cross_of(p);
        if (cp == A || cp == B || cp == C) return res;  // degenerate tangle boundary
    }
    // crossings keep their absolute orientation while sliding along their
    // strands, so slot directions and col0/over/eps are all preserved
    DiagramData nd = d.data();
    nd.weld(half_of(A, sa), pB1);
    nd.weld(half_of(A, sa - 1), pC2);
    nd.weld(half_of(A, sa + 1), half_of(C, sc + 2));
    nd.weld(half_of(A, sa + 2), half_of(B, sb + 1));
    nd.weld(half_of(B, sb - 1), pA2);
    nd.weld(half_of(B, sb), pC1);
    nd.weld(half_of(B, sb + 2), half_of(C, sc + 1));
    nd.weld(half_of(C, sc), pA1);
    nd.weld(half_of(C, sc - 1), pB2);
    // the regions filling the wedges of A, B, C change under the slide;
    // re-anchor their colours from the untouched neighbours across the
    // external ports (over bits are intrinsic and stay put)
    for (Half x : {half_of(A, sa), half_of(B, sb), half_of(C, sc)}) {
        Half y = nd.twin[x];
        nd.col0[cross_of(x)] = (nd.col0[cross_of(y)] ^ (rot(y) & 1) ^ (x & 1)) & 1;
    }
    res.ok = true;
    res.nd = std::move(nd);
    return res;
}

// face-ordered corner triples of every triangular region
std::vector<std::array<Half, 3>> triangles(const PlanarDiagram& d) {
    std::vector<std::array<Half, 3>> out;
    for (int r = 0; r < d.region_count(); ++r) {
        const auto& cs = d.region_corners(r);
        if (cs.size() != 3) continue;
        Half a = cs[0], b = rot(d.twin(a)), c = rot(d.twin(b));
        out.push_back({a, b, c});
        out.push_back({b, c, a});
        out.push_back({c, a, b});
    }
    return out;
}

}  // namespace

std::vector<MoveRecord> find_untongue(const PlanarDiagram& d) {
    std::vector<MoveRecord> out;
    for (const auto& t : triangles(d)) {
        auto pr = try_r3(d, t[0], t[1], t[2]);
        if (!pr.ok) continue;
        PlanarDiagram pd;
        try {
            pd = PlanarDiagram(std::move(pr.nd));
        } catch (const std::exception&) {
            continue;
        }
        for (const auto& m2 : find_r2(pd))
            out.push_back(MoveRecord{
                MoveKind::Untongue, {}, {(int)t[0], (int)t[1], (int)t[2], m2.loc[0], m2.loc[1]},
                0});
    }
    return out;
}
// terminal clasp: a 2-crossing diagram whose two strands form two components,
// one strand running over at both crossings.  Retracting it splits the diagram
// into two crossingless circles (components +1, nonalternating crossings -1).
std::vector<MoveRecord> find_clasp(const PlanarDiagram& d) {
    std::vector<MoveRecord> out;
    if (d.crossings() != 2) return out;
    if (d.eps(0) + d.eps(1) != 0) return out;
    const auto& dd = d.data();
    // two components: following a strand from (0,0) must not visit slot 1
    {
        Half x = 0;
        bool two = true;
        do {
            if (x == half_of(0, 1) || x == half_of(0, 3)) two = false;
            x = dd.twin[x] ^ 2;  // cross over, continue through
        } while (x != 0 && two);
        if (!two) return out;
    }
    for (int r = 0; r < d.region_count(); ++r) {
        const auto& cs = d.region_corners(r);
        if (cs.size() != 2 || cross_of(cs[0]) == cross_of(cs[1])) continue;
        Half x1 = cs[0], x2 = cs[1];
        // the strand through port (c0, slot(x1)) must be over or under at both
        Half p = half_of(cross_of(x1), slot_of(x1));
        Half q = dd.twin[p];
        bool o0 = dd.over[cross_of(p)] == (p & 1), o1 = dd.over[cross_of(q)] == (q & 1);
        if (o0 != o1) continue;
        out.push_back(MoveRecord{MoveKind::Clasp, {}, {(int)x1, (int)x2}, 0});
        break;
    }
    return out;
}
std::vector<MoveRecord> find_untongue2(const PlanarDiagram&) { return {}; }
std::vector<MoveRecord> find_floating_loop_3flype(const PlanarDiagram&) { return {}; }

namespace {

// Partition crossings by connectivity after deleting four edges (given by one
// half-edge each).  Returns the side of each crossing: 0 = side of `seed`,
// 1 = other side, or nullopt if the cut does not disconnect.
std::optional<std::vector<char>> cut_sides(const PlanarDiagram& d, std::array<Half, 4> cut,
                                           int seed) {
    int n = d.crossings();
    UF uf(n);
    auto is_cut = [&](Half h) {
        for (Half x : cut)
            if (h == x || d.twin(h) == x) return true;
        return false;
    };
    for (Half h = 0; h < 4 * n; ++h)
        if (h < d.twin(h) && !is_cut(h)) uf.unite(cross_of(h), cross_of(d.twin(h)));
    std::vector<char> side(n, 1);
    bool split = false;
    for (int c = 0; c < n; ++c) {
        if (uf.find(c) == uf.find(seed)) side[c] = 0;
        else split = true;
    }
    if (!split) return std::nullopt;
    // a 4-edge cut of a connected 4-valent graph must leave exactly two parts
    int reps = 0;
    for (int c = 0; c < n; ++c)
        if (uf.find(c) == c) ++reps;
    if (reps != 2) return std::nullopt;
    return side;
}

// strand chase from port p into the tangle; returns the tangle-side port at
// which the strand leaves again
Half chase_through(const PlanarDiagram& d, const std::vector<char>& side, Half p) {
    Half x = d.twin(p);
    for (;;) {
        Half y = x ^ 2;
        Half z = d.twin(y);
        if (side[cross_of(z)] == 0) return y;
        x = z;
    }
}

}  // namespace

std::vector<MoveRecord> enumerate_flypes(const PlanarDiagram& d) {
    std::vector<MoveRecord> out;
    int n = d.crossings();
    if (n < 2) return out;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            // tangle hangs off slots s and s+1 of c
            Half ts2 = half_of(c, s), ts1 = half_of(c, s + 1);
            if (cross_of(d.twin(ts1)) == c || cross_of(d.twin(ts2)) == c) continue;
            int fn = d.region(half_of(c, s + 2)), fs = d.region(half_of(c, s));
            for (Half x1 : d.region_corners(fn)) {
                if (cross_of(x1) == c) continue;
                for (Half x2 : d.region_corners(fs)) {
                    if (cross_of(x2) == c || x2 == x1 || d.twin(x2) == x1) continue;
                    if (x1 == ts1 || x1 == ts2 || d.twin(x1) == ts1 || d.twin(x1) == ts2)
                        continue;
                    if (x2 == ts1 || x2 == ts2 || d.twin(x2) == ts1 || d.twin(x2) == ts2)
                        continue;
                    if (cross_of(d.twin(x1)) == c || cross_of(d.twin(x2)) == c) continue;
                    auto side = cut_sides(d, {ts1, ts2, x1, x2}, c);
                    if (!side) continue;
                    // cut edges must straddle the cut, tangle on the far side
                    if ((*side)[cross_of(d.twin(ts1))] != 1) continue;
                    if ((*side)[cross_of(d.twin(ts2))] != 1) continue;
                    if ((*side)[cross_of(x1)] == (*side)[cross_of(d.twin(x1))]) continue;
                    if ((*side)[cross_of(x2)] == (*side)[cross_of(d.twin(x2))]) continue;
                    // each strand into the tangle must leave through x1 or x2
                    Half a1 = (*side)[cross_of(x1)] == 1 ? x1 : d.twin(x1);
                    Half a2 = (*side)[cross_of(x2)] == 1 ? x2 : d.twin(x2);
                    Half e1 = chase_through(d, *side, ts1);
                    Half e2 = chase_through(d, *side, ts2);
                    if (!((e1 == a1 && e2 == a2) || (e1 == a2 && e2 == a1))) continue;
                    out.push_back(MoveRecord{
                        MoveKind::Flype, {}, {c, s, (int)x1, (int)x2}, 0});
                }
            }
        }
    return out;
}

AppliedMove apply_move(const PlanarDiagram& d, const MoveRecord& m) {
    switch (m.kind) {
        case MoveKind::Band:
            return apply_band(d, m.band);
        case MoveKind::R1: {
            Half h = m.loc.at(0);
            if (rot(d.twin(h)) != h) throw std::invalid_argument("R1: no kink here");
            auto rm = remove_strand_through(d, {cross_of(h)},
                                            {{h, half_of(cross_of(h), slot_of(h) ^ 2)}});
            return AppliedMove{PlanarDiagram(std::move(rm.nd)), m, std::move(rm.crossing_map)};
        }
        case MoveKind::R2: {
            Half x1 = m.loc.at(0), x2 = m.loc.at(1);
            if (d.region(x1) != d.region(x2) || d.region_corners(d.region(x1)).size() != 2)
                throw std::invalid_argument("R2: not a bigon");
            auto rm = remove_strand_through(
                d, {cross_of(x1), cross_of(x2)},
                {{x1, half_of(cross_of(x1), slot_of(x1) ^ 2)},
                 {x2, half_of(cross_of(x2), slot_of(x2) ^ 2)}});
            return AppliedMove{PlanarDiagram(std::move(rm.nd)), m, std::move(rm.crossing_map)};
        }
        case MoveKind::Flype: {
            int c = m.loc.at(0), s = m.loc.at(1);
            Half x1 = m.loc.at(2), x2 = m.loc.at(3);
            Half ts2 = half_of(c, s), ts1 = half_of(c, s + 1);
            auto sideOpt = cut_sides(d, {ts1, ts2, x1, x2}, c);
            if (!sideOpt) throw std::invalid_argument("flype: cut does not separate");
            const auto& side = *sideOpt;
            const auto& dd = d.data();
            Half u1 = d.twin(ts1), u2 = d.twin(ts2);
            Half r1 = d.twin(half_of(c, s + 2)), r2 = d.twin(half_of(c, s + 3));
            if (cross_of(r1) == c || cross_of(r2) == c)
                throw std::invalid_argument("flype: kink at the flyped crossing");
            Half a1 = side[cross_of(x1)] == 1 ? x1 : d.twin(x1);
            Half b1 = d.twin(a1);
            Half a2 = side[cross_of(x2)] == 1 ? x2 : d.twin(x2);
            Half b2 = d.twin(a2);
            // tangle reflects about the axis through c and the cut: slot map
            // sigma(u) = 2s+1-u preserves over bits of tangle crossings
            auto sigma = [&](Half h) {
                if (side[cross_of(h)] != 1) return h;
                return half_of(cross_of(h), (2 * s + 1 - slot_of(h)) & 3);
            };
            int n = d.crossings();
            for (int var = 0; var < 4; ++var) {
                DiagramData nd;
                nd.twin.assign(4 * n, 0);
                for (Half h = 0; h < 4 * n; ++h) nd.twin[sigma(h)] = sigma(dd.twin[h]);
                nd.weld(r1, sigma(u2));
                nd.weld(r2, sigma(u1));
                nd.weld(half_of(c, s + 2), sigma(a2));
                nd.weld(half_of(c, s + 3), sigma(a1));
                nd.weld(half_of(c, s + 1), b1);
                nd.weld(half_of(c, s), b2);
                nd.over = dd.over;
                nd.col0 = dd.col0;
                nd.over[c] ^= var & 1;
                if (var & 2)
                    for (int t = 0; t < n; ++t)
                        if (side[t]) nd.col0[t] ^= 1;
                {
                    Half xh = half_of(c, s + 1), y = nd.twin[xh];
                    nd.col0[c] = (nd.col0[cross_of(y)] ^ (rot(y) & 1) ^ (xh & 1)) & 1;
                }
                for (int j = 0; j < d.circles(); ++j) {
                    int h = dd.circle_host[j];
                    nd.circle_host.push_back(h >= 0 ? sigma(h) : h);
                }
                nd.glue = dd.glue;
                for (auto& [g1, g2] : nd.glue) g1 = sigma(g1), g2 = sigma(g2);
                PlanarDiagram pd;
                try {
                    pd = PlanarDiagram(std::move(nd));
                } catch (const std::exception&) {
                    continue;
                }
                bool same = pd.stats().l == d.stats().l &&
                            pd.region_count() == d.region_count();
                for (int t = 0; same && t < n; ++t) same = pd.eps(t) == d.eps(t);
                if (!same) continue;
                MoveRecord rec = m;
                rec.variant = var;
                std::vector<int> idmap(n);
                for (int t = 0; t < n; ++t) idmap[t] = t;
                return AppliedMove{std::move(pd), rec, std::move(idmap)};
            }
            throw std::invalid_argument("flype: no consistent rewiring");
        }
        case MoveKind::Clasp: {
            Half x1 = m.loc.at(0);
            if (find_clasp(d).empty()) throw std::invalid_argument("clasp: not a clasp");
            const auto& dd = d.data();
            int c0 = cross_of(x1), s0 = slot_of(x1);
            // final faces: lens+opposite merge into the middle; the wedge past
            // the under strand is the crescent inside strand (c0,s0)'s circle
            int in1 = d.region(half_of(c0, s0 + 1)), in2 = d.region(half_of(c0, s0 - 1));
            DiagramData nd;
            int base = d.circles();
            // nesting chain in1 | base | middle | base+1 | in2, rooted at in1
            // (the sphere has no distinguished region while crossings remain,
            // so the new ambient is ours to choose)
            nd.ambient_white = d.region_is_white(in1);
            auto host_in = [&](int r) {
                if (r == in1) return kHostAmbient;
                if (r == in2) return host_circle(base + 1);
                return host_circle(base);  // lens + opposite merge into middle
            };
            for (int j = 0; j < base; ++j) {
                int h = dd.circle_host[j];
                nd.circle_host.push_back(h < 0 ? h : host_in(d.region(h)));
            }
            nd.circle_host.push_back(kHostAmbient);
            nd.circle_host.push_back(host_circle(base));
            std::vector<int> cmap(2, -1);
            return AppliedMove{PlanarDiagram(std::move(nd)), m, std::move(cmap)};
        }
        case MoveKind::Untongue: {
            auto pr = try_r3(d, m.loc.at(0), m.loc.at(1), m.loc.at(2));
            if (!pr.ok) throw std::invalid_argument("untongue: R3 slide does not apply");
            PlanarDiagram mid(std::move(pr.nd));
            MoveRecord r2{MoveKind::R2, {}, {m.loc.at(3), m.loc.at(4)}, 0};
            auto am = apply_move(mid, r2);
            return AppliedMove{std::move(am.diagram), m, std::move(am.crossing_map)};
        }
        default:
            throw std::invalid_argument("apply_move: unsupported move kind");
    }
}

AppliedTsukamoto apply_tsukamoto(const PlanarDiagram& d, const Bifactorisation& bf,
                                 const MoveRecord& m, unsigned long long node_budget) {
    auto am = apply_move(d, m);
    const auto& s0 = d.stats();
    const auto& s1 = am.diagram.stats();
    if (s1.crossing_count > s0.crossing_count)
        throw std::invalid_argument("tsukamoto: crossing count increased");
    if (s1.k + s1.l != s0.k + s0.l)
        throw std::invalid_argument("tsukamoto: k + l not preserved");
    auto tr = transport_by_extension(d, bf, am.diagram, am.crossing_map, true, node_budget);
    if (!tr.ok) throw std::invalid_argument("tsukamoto: bifactorisation transport failed");
    return AppliedTsukamoto{std::move(am.diagram), std::move(tr.bf), am.record};
}

SimplifyResult aa_simplify(const PlanarDiagram& d, const Bifactorisation& bf,
                           unsigned long long node_budget) {
    SimplifyResult res{d, bf, {}};
    using Finder = std::vector<MoveRecord> (*)(const PlanarDiagram&);
    static const Finder finders[] = {find_r1,    find_r2,        find_untongue,
                                     find_clasp, find_untongue2, find_floating_loop_3flype};
    auto reduce_once = [&](PlanarDiagram& dia, Bifactorisation& b,
                           std::vector<MoveRecord>* trace) -> bool {
        for (auto f : finders)
            for (const auto& m : f(dia)) {
                try {
                    auto t = apply_tsukamoto(dia, b, m, node_budget);
                    if (t.diagram.crossings() >= dia.crossings()) continue;
                    dia = std::move(t.diagram);
                    b = std::move(t.bf);
                    if (trace) trace->push_back(m);
                    return true;
                } catch (const std::exception&) {
                    continue;
                }
            }
        return false;
    };
    for (;;) {
        if (reduce_once(res.diagram, res.bf, &res.trace)) continue;
        // flypes accepted only when they enable a reduction right away
        bool flyped = false;
        for (const auto& fm : enumerate_flypes(res.diagram)) {
            try {
                auto t = apply_tsukamoto(res.diagram, res.bf, fm, node_budget);
                PlanarDiagram probe = t.diagram;
                Bifactorisation pb = t.bf;
                if (!reduce_once(probe, pb, nullptr)) continue;
                res.diagram = std::move(t.diagram);
                res.bf = std::move(t.bf);
                res.trace.push_back(fm);
                flyped = true;
                break;
            } catch (const std::exception&) {
                continue;
            }
        }
        if (!flyped) break;
    }
    return res;
}

TransportResult transport_by_extension(const PlanarDiagram& before, const Bifactorisation& bf,
                                       const PlanarDiagram& after,
                                       const std::vector<int>& crossing_map,
                                       bool recompute_on_rank_change,
                                       unsigned long long node_budget) {
    TransportResult res;
    auto rd = rank_data(after);
    if (rd.m_prime != bf.m_prime || rd.n_prime != bf.n_prime) {
        if (!recompute_on_rank_change) return res;
        auto fresh = bifactorise(after, node_budget);
        res.budget_exceeded = fresh.budget_exceeded;
        if (fresh.items.empty()) return res;
        res.ok = true;
        res.bf = fresh.items.front();
        return res;
    }
    // old region -> canonical corner-set key, remapped through crossing_map
    std::map<std::vector<Half>, int> old_by_corners;
    for (int r = 0; r < before.region_count(); ++r) {
        std::vector<Half> key;
        bool dead = false;
        for (Half h : before.region_corners(r)) {
            int c = crossing_map[cross_of(h)];
            if (c < 0) {
                dead = true;
                break;
            }
            key.push_back(half_of(c, slot_of(h)));
        }
        if (dead || key.empty()) continue;
        std::sort(key.begin(), key.end());
        old_by_corners[std::move(key)] = r;
    }
    Bifactorisation out;
    out.m_prime = bf.m_prime;
    out.n_prime = bf.n_prime;
    for (int colour = 0; colour < 2; ++colour) {
        bool white = colour == 0;
        int r_target = white ? bf.m_prime : bf.n_prime;
        const auto& old_vecs = white ? bf.white : bf.black;
        const auto& old_index = white ? bf.white_index : bf.black_index;
        std::vector<int> index;
        IntMat hat = goeritz_hat(after, white, index);
        int rows = hat.rows;
        std::vector<std::optional<std::vector<long long>>> pinned(rows);
        for (int r = 0; r < after.region_count(); ++r) {
            if (after.region_is_white(r) != white) continue;
            auto key = after.region_corners(r);
            std::sort(key.begin(), key.end());
            auto it = old_by_corners.find(key);
            if (it == old_by_corners.end()) continue;
            int old_row = old_index[it->second];
            if (old_row < 0) continue;
            pinned[index[r]] = old_vecs[old_row];
        }
        // delete an unpinned row so the sum-zero condition stays implicit
        int del = -1;
        for (int i = 0; i < rows && del < 0; ++i)
            if (!pinned[i]) del = i;
        std::vector<std::vector<long long>> full(rows);
        if (del < 0) {
            // everything pinned: just verify the Gram conditions
            for (int i = 0; i < rows; ++i) full[i] = *pinned[i];
        } else {
            IntMat g(rows - 1, rows - 1);
            std::vector<int> keep;
            for (int i = 0; i < rows; ++i)
                if (i != del) keep.push_back(i);
            for (int i = 0; i < rows - 1; ++i)
                for (int j = 0; j < rows - 1; ++j) g.at(i, j) = hat.at(keep[i], keep[j]);
            std::vector<std::optional<std::vector<long long>>> fixed(rows - 1);
            for (int i = 0; i < rows - 1; ++i) fixed[i] = pinned[keep[i]];
            auto ext = extend_factorisation(g, r_target, fixed, 1, node_budget);
            res.budget_exceeded = res.budget_exceeded || ext.budget_exceeded;
            if (!ext.ok) return res;
            std::vector<long long> sum(r_target, 0);
            for (int i = 0; i < rows - 1; ++i) {
                full[keep[i]] = ext.witnesses[0][i];
                for (int t = 0; t < r_target; ++t) sum[t] += full[keep[i]][t];
            }
            full[del].assign(r_target, 0);
            for (int t = 0; t < r_target; ++t) full[del][t] = -sum[t];
        }
        // exact Gram verification against \hat G
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j) {
                long long dot = 0;
                for (int t = 0; t < r_target; ++t) dot += full[i][t] * full[j][t];
                if (dot != hat.at(i, j)) return res;
            }
        if (white) {
            out.white = std::move(full);
            out.white_index = index;
        } else {
            out.black = std::move(full);
            out.black_index = index;
        }
    }
    res.ok = true;
    res.bf = std::move(out);
    return res;
}

BandTest is_algorithmic_band(const PlanarDiagram& d, const Bifactorisation& bf,
                             const BandCandidate& b, unsigned long long node_budget) {
    BandTest t;
    AppliedMove am;
    try {
        am = apply_band(d, b);
    } catch (const std::exception&) {
        return t;
    }
    const auto& s0 = d.stats();
    const auto& s1 = am.diagram.stats();
    if (s1.k != s0.k + 1 || s1.l != s0.l) return t;
    if (!is_minimally_nonalternating(am.diagram)) return t;
    auto tr = transport_by_extension(d, bf, am.diagram, am.crossing_map, false, node_budget);
    t.budget_exceeded = tr.budget_exceeded;
    if (!tr.ok) return t;
    t.ok = true;
    t.result = std::move(am.diagram);
    t.record = am.record;
    t.extended = std::move(tr.bf);
    return t;
}

}  // namespace ribbon
