#include "ribbon/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ribbon {

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        p[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

[[noreturn]] void bad(const std::string& msg) {
    throw std::invalid_argument("PlanarDiagram: " + msg);
}

}  // namespace

int DiagramData::add_crossing(int over_parity, int colour0) {
    int c = crossings();
    over.push_back((std::uint8_t)(over_parity & 1));
    col0.push_back((std::uint8_t)(colour0 & 1));
    twin.resize(twin.size() + 4, -1);
    return c;
}

void DiagramData::weld(Half a, Half b) {
    twin[a] = b;
    twin[b] = a;
}

void DiagramData::remove_crossings(std::vector<int> dead) {
    std::sort(dead.begin(), dead.end());
    int n = crossings();
    std::vector<int> newidx(n, -1);
    int next = 0;
    for (int c = 0, di = 0; c < n; ++c) {
        if (di < (int)dead.size() && dead[di] == c) { ++di; continue; }
        newidx[c] = next++;
    }
    auto maph = [&](Half h) -> Half {
        int ni = newidx[cross_of(h)];
        if (ni < 0) bad("remove_crossings: half-edge still attached to a dead crossing");
        return half_of(ni, slot_of(h));
    };
    DiagramData out;
    out.circle_host = circle_host;
    out.ambient_white = ambient_white;
    for (int c = 0; c < n; ++c) {
        if (newidx[c] < 0) continue;
        out.over.push_back(over[c]);
        out.col0.push_back(col0[c]);
    }
    out.twin.resize(4 * next);
    for (int c = 0; c < n; ++c) {
        if (newidx[c] < 0) continue;
        for (int s = 0; s < 4; ++s) out.twin[maph(half_of(c, s))] = maph(twin[half_of(c, s)]);
    }
    for (auto& g : glue) out.glue.emplace_back(maph(g.first), maph(g.second));
    for (auto& h : out.circle_host)
        if (h >= 0) h = maph(h);
    *this = std::move(out);
}

PlanarDiagram::PlanarDiagram(DiagramData d) : d_(std::move(d)) { finalize(); }

void PlanarDiagram::finalize() {
    int n = d_.crossings();
    int H = 4 * n;
    if ((int)d_.twin.size() != H || (int)d_.col0.size() != n) bad("inconsistent sizes");
    for (Half h = 0; h < H; ++h) {
        if (d_.twin[h] < 0 || d_.twin[h] >= H || d_.twin[h] == h) bad("twin out of range");
        if (d_.twin[d_.twin[h]] != h) bad("twin not an involution");
    }
    for (int c = 0; c < n; ++c)
        if (d_.over[c] > 1 || d_.col0[c] > 1) bad("over/col0 not a bit");

    eps_.resize(n);
    for (int c = 0; c < n; ++c) eps_[c] = (d_.col0[c] ^ d_.over[c]) ? -1 : 1;

    // faces: orbits of h -> rot(twin(h))
    face_.assign(H, -1);
    face_count_ = 0;
    std::vector<std::uint8_t> face_white;
    for (Half h0 = 0; h0 < H; ++h0) {
        if (face_[h0] >= 0) continue;
        int f = face_count_++;
        bool white = corner_white(h0);
        for (Half h = h0; face_[h] < 0; h = rot(d_.twin[h])) {
            face_[h] = f;
            if (corner_white(h) != white) bad("inconsistent face colouring");
        }
        face_white.push_back(white);
    }

    // pieces
    piece_.assign(n, 0);
    if (n > 0) {
        UF uf(n);
        for (Half h = 0; h < H; ++h) uf.unite(cross_of(h), cross_of(d_.twin[h]));
        std::vector<int> idx(n, -1);
        piece_count_ = 0;
        for (int c = 0; c < n; ++c) {
            int r = uf.find(c);
            if (idx[r] < 0) idx[r] = piece_count_++;
            piece_[c] = idx[r];
        }
        // Euler check per piece: F = V + 2
        std::vector<int> fcount(piece_count_, 0);
        std::vector<int> fseen(face_count_, -1);
        for (Half h = 0; h < H; ++h) {
            int f = face_[h];
            if (fseen[f] < 0) { fseen[f] = piece_[cross_of(h)]; ++fcount[fseen[f]]; }
        }
        std::vector<int> vcount(piece_count_, 0);
        for (int c = 0; c < n; ++c) ++vcount[piece_[c]];
        for (int p = 0; p < piece_count_; ++p)
            if (fcount[p] != vcount[p] + 2) bad("piece is not planar (Euler count)");
    } else {
        piece_count_ = 0;
    }

    // glue: faces of distinct pieces identified, forming a tree of pieces
    if (n == 0 && !d_.glue.empty()) bad("glue without crossings");
    {
        UF fuf(std::max(face_count_, 1));
        UF puf(std::max(piece_count_, 1));
        for (auto& [a, b] : d_.glue) {
            if (a < 0 || a >= H || b < 0 || b >= H) bad("glue corner out of range");
            if (corner_white(a) != corner_white(b)) bad("glue joins different colours");
            if (!puf.unite(piece_[cross_of(a)], piece_[cross_of(b)]))
                bad("glue does not form a tree of pieces");
            fuf.unite(face_[a], face_[b]);
        }
        if (n > 0 && (int)d_.glue.size() != piece_count_ - 1)
            bad("glue must connect all pieces into one sphere");

        // compact merged face classes into region ids
        region_of_face_.assign(face_count_, -1);
        region_white_.clear();
        int next = 0;
        for (int f = 0; f < face_count_; ++f) {
            int r = fuf.find(f);
            if (region_of_face_[r] < 0) {
                region_of_face_[r] = next++;
                region_white_.push_back(face_white[f]);
            }
            region_of_face_[f] = region_of_face_[r];
        }
    }
    int nface_regions = (int)region_white_.size();

    // circles
    int C = circles();
    region_of_circle_.resize(C);
    for (int j = 0; j < C; ++j) region_of_circle_[j] = nface_regions + j;
    ambient_region_ = (n == 0) ? nface_regions + C : -1;

    // resolve circle interior colours (opposite of host region colour)
    {
        std::vector<int> state(C, 0);  // 0 unvisited, 1 on stack, 2 done
        std::vector<std::uint8_t> cwhite(C);
        auto resolve = [&](auto&& self, int j) -> bool {
            if (state[j] == 2) return cwhite[j];
            if (state[j] == 1) bad("circle nesting cycle");
            state[j] = 1;
            int h = d_.circle_host[j];
            bool hostwhite;
            if (h >= 0) {
                if (n == 0 || h >= H) bad("circle host corner out of range");
                hostwhite = corner_white(h);
            } else if (h == kHostAmbient) {
                if (n != 0) bad("ambient-hosted circle in a diagram with crossings");
                hostwhite = d_.ambient_white;
            } else {
                int k = host_circle_index(h);
                if (k < 0 || k >= C || k == j) bad("bad circle host");
                hostwhite = self(self, k);
            }
            state[j] = 2;
            cwhite[j] = !hostwhite;
            return cwhite[j];
        };
        for (int j = 0; j < C; ++j) resolve(resolve, j);
        for (int j = 0; j < C; ++j) region_white_.push_back(cwhite[j]);
    }
    if (n == 0) region_white_.push_back(d_.ambient_white);

    region_corners_.assign(region_white_.size(), {});
    for (Half h = 0; h < H; ++h) region_corners_[region(h)].push_back(h);

    // stats
    DiagramStats& s = stats_;
    s = DiagramStats{};
    s.crossing_count = n;
    for (int c = 0; c < n; ++c)
        if (eps_[c] < 0) ++s.k;
    for (bool w : region_white_) (w ? s.m_plus_1 : s.n_plus_1)++;
    s.l = piece_count_ + C;  // diagram components (projection components)
    {
        // surface components: regions of one colour glued at crossings
        int R = (int)region_white_.size();
        UF uf(R);
        for (int c = 0; c < n; ++c) {
            int wslot = (d_.col0[c] ^ 1) & 1;
            uf.unite(region(half_of(c, wslot)), region(half_of(c, wslot + 2)));
            int bslot = d_.col0[c] & 1;
            uf.unite(region(half_of(c, bslot)), region(half_of(c, bslot + 2)));
        }
        std::vector<char> counted(R, 0);
        for (int r = 0; r < R; ++r) {
            int root = uf.find(r);
            if (counted[root]) continue;
            counted[root] = 1;
            (region_white_[r] ? s.l_w : s.l_b)++;
        }
    }
}

DiagramStats stats(const PlanarDiagram& d) { return d.stats(); }

int link_components(const PlanarDiagram& d) {
    int H = d.halfedges();
    std::vector<char> seen(H, 0);
    int orbits = 0;
    for (Half h0 = 0; h0 < H; ++h0) {
        if (seen[h0]) continue;
        ++orbits;
        for (Half h = h0; !seen[h]; h = opp(d.twin(h))) seen[h] = 1;
    }
    return orbits / 2 + d.circles();
}

PlanarDiagram mirror(const PlanarDiagram& d) {
    DiagramData m = d.data();
    for (auto& o : m.over) o ^= 1;
    for (auto& c : m.col0) c ^= 1;
    m.ambient_white = !m.ambient_white;
    return PlanarDiagram(std::move(m));
}

PlanarDiagram flip(const PlanarDiagram& d) {
    const DiagramData& s = d.data();
    int n = s.crossings();
    DiagramData f = s;
    // edge ends: slot s -> -s; corners (wedge between slots s-1, s): s -> 1-s
    auto g = [](Half h) { return half_of(cross_of(h), -slot_of(h)); };
    auto k = [](Half h) { return half_of(cross_of(h), 1 - slot_of(h)); };
    for (Half h = 0; h < 4 * n; ++h) f.twin[g(h)] = g(s.twin[h]);
    for (auto& o : f.over) o ^= 1;
    for (auto& c : f.col0) c ^= 1;
    for (auto& h : f.circle_host)
        if (h >= 0) h = k(h);
    for (auto& [a, b] : f.glue) { a = k(a); b = k(b); }
    return PlanarDiagram(std::move(f));
}

std::string CanonicalCode::to_string() const {
    std::ostringstream s;
    for (size_t i = 0; i < code.size(); ++i) s << (i ? "," : "") << code[i];
    return s.str();
}

namespace {

// Encoding of one piece starting from half-edge h0; fills relabelling maps.
// id[c] = new crossing index, r[c] = slot of c that becomes slot 0.
std::vector<int> encode_piece(const DiagramData& d, Half h0, std::vector<int>& id,
                              std::vector<int>& r) {
    std::vector<int> order;
    int c0 = cross_of(h0);
    id[c0] = 0;
    r[c0] = slot_of(h0);
    order.push_back(c0);
    std::vector<int> code;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int c = order[qi];
        for (int j = 0; j < 4; ++j) {
            Half t = d.twin[half_of(c, r[c] + j)];
            int c2 = cross_of(t);
            if (id[c2] < 0) {
                id[c2] = (int)order.size();
                r[c2] = slot_of(t);
                order.push_back(c2);
            }
            code.push_back(4 * id[c2] + ((slot_of(t) - r[c2]) & 3));
        }
        code.push_back((d.over[c] + r[c]) & 1);
        code.push_back(d.col0[c] ^ (r[c] & 1));
    }
    return code;
}

}  // namespace

CanonicalCode canonical_code(const PlanarDiagram& diag) {
    const DiagramData& d = diag.data();
    int n = d.crossings();
    int P = diag.pieces();

    // minimal code per piece, with the relabelling of the first minimising start
    std::vector<std::vector<int>> best(P);
    std::vector<int> best_id(n, -1), best_r(n, 0);
    std::vector<int> piece_size(P, 0);
    for (int c = 0; c < n; ++c) ++piece_size[diag.piece(c)];
    for (Half h0 = 0; h0 < 4 * n; ++h0) {
        int p = diag.piece(cross_of(h0));
        std::vector<int> id(n, -1), r(n, 0);
        auto code = encode_piece(d, h0, id, r);
        if (best[p].empty() || code < best[p]) {
            best[p] = std::move(code);
            for (int c = 0; c < n; ++c)
                if (diag.piece(c) == p) { best_id[c] = id[c]; best_r[c] = r[c]; }
        }
    }

    // order pieces by code (ties by original index: stable)
    std::vector<int> porder(P);
    std::iota(porder.begin(), porder.end(), 0);
    std::stable_sort(porder.begin(), porder.end(),
                     [&](int a, int b) { return best[a] < best[b]; });
    std::vector<int> piece_offset(P, 0);
    {
        int off = 0;
        for (int p : porder) { piece_offset[p] = off; off += piece_size[p]; }
    }
    auto relabel = [&](Half h) {
        int c = cross_of(h);
        return 4 * (piece_offset[diag.piece(c)] + best_id[c]) +
               ((slot_of(h) - best_r[c]) & 3);
    };

    CanonicalCode out;
    auto& code = out.code;
    code.push_back(n);
    code.push_back(diag.circles());
    for (int p : porder) {
        code.push_back(piece_size[p]);
        code.insert(code.end(), best[p].begin(), best[p].end());
    }

    std::vector<std::pair<int, int>> g;
    for (auto& [a, b] : d.glue) {
        int x = relabel(a), y = relabel(b);
        g.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(g.begin(), g.end());
    code.push_back((int)g.size());
    for (auto& [x, y] : g) { code.push_back(x); code.push_back(y); }

    // circles: key = path of hosts down to a corner or the ambient region
    int C = diag.circles();
    std::vector<std::vector<int>> keys(C);
    auto key_of = [&](auto&& self, int j) -> const std::vector<int>& {
        if (!keys[j].empty()) return keys[j];
        int h = d.circle_host[j];
        if (h >= 0) keys[j] = {0, relabel(h)};
        else if (h == kHostAmbient) keys[j] = {1};
        else {
            keys[j] = {2};
            auto& inner = self(self, host_circle_index(h));
            keys[j].insert(keys[j].end(), inner.begin(), inner.end());
        }
        return keys[j];
    };
    for (int j = 0; j < C; ++j) key_of(key_of, j);
    std::sort(keys.begin(), keys.end());
    for (auto& k : keys) {
        code.insert(code.end(), k.begin(), k.end());
        code.push_back(-1);
    }
    code.push_back(n == 0 ? (int)d.ambient_white : 2);
    return out;
}

PlanarDiagram connected_sum(const PlanarDiagram& a, Half edge_a, const PlanarDiagram& b,
                            Half edge_b) {
    if (a.crossings() == 0 || b.crossings() == 0)
        throw std::invalid_argument("connected_sum needs crossings on both sides");
    // Try both splice orientations and both colour flips of b; keep the valid
    // result with the fewest nonalternating crossings.
    PlanarDiagram best;
    bool have = false;
    for (int orient = 0; orient < 2; ++orient)
        for (int flip = 0; flip < 2; ++flip) {
            DiagramData d = a.data();
            const DiagramData& db = b.data();
            int off = a.crossings();
            for (int c = 0; c < b.crossings(); ++c) {
                d.over.push_back(db.over[c]);
                d.col0.push_back(db.col0[c] ^ flip);
            }
            d.twin.resize(4 * (off + b.crossings()));
            auto mb = [&](Half h) { return h + 4 * off; };
            for (Half h = 0; h < 4 * b.crossings(); ++h) d.twin[mb(h)] = mb(db.twin[h]);
            for (auto& g : db.glue) d.glue.emplace_back(mb(g.first), mb(g.second));
            for (int h : db.circle_host) d.circle_host.push_back(h >= 0 ? mb(h) : h);
            Half ha = edge_a, ta = a.twin(edge_a);
            Half hb = mb(edge_b), tb = mb(b.twin(edge_b));
            if (orient == 0) {
                d.weld(ha, tb);
                d.weld(hb, ta);
            } else {
                d.weld(ha, hb);
                d.weld(ta, tb);
            }
            try {
                PlanarDiagram out(std::move(d));
                if (!have || out.stats().k < best.stats().k) {
                    best = std::move(out);
                    have = true;
                }
            } catch (const std::invalid_argument&) {
            }
        }
    if (!have) throw std::invalid_argument("connected_sum: incompatible splice");
    return best;
}

PlanarDiagram connected_sum_mirror(const PlanarDiagram& d, Half edge) {
    return connected_sum(d, edge, mirror(d), edge);
}

}  // namespace ribbon
