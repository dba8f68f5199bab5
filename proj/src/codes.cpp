#include "ribbon/codes.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ribbon {

namespace {

// ---- partial-map face walking (unwelded stubs make a U-turn) ----

struct Draw {
    std::vector<Half> twin;  // -1 = dangling
    explicit Draw(int crossings) : twin(4 * crossings, -1) {}
    Half t(Half h) const { return twin[h] < 0 ? h : twin[h]; }
    void weld(Half a, Half b) { twin[a] = b; twin[b] = a; }
    void unweld(Half a) { twin[twin[a]] = -1; twin[a] = -1; }
    bool same_face(Half a, Half b) const {
        Half x = a;
        do {
            if (x == b) return true;
            x = rot(t(x));
        } while (x != a);
        return false;
    }
};

// 2-colour the faces of a completed shadow and set col0; among the two
// colourings pick the one minimising k (ties: colour of corner 0 black).
DiagramData colour_min_k(DiagramData d) {
    int n = d.crossings();
    if (n == 0) return d;
    // corner colours alternate with slot parity and are opposite across each
    // edge; propagate col0 per crossing along edges.
    std::vector<int> cc(n, -1);  // col0 per crossing
    std::vector<int> st;
    for (int c0 = 0; c0 < n; ++c0) {
        if (cc[c0] >= 0) continue;
        cc[c0] = 0;
        st.push_back(c0);
        while (!st.empty()) {
            int c = st.back();
            st.pop_back();
            for (int s = 0; s < 4; ++s) {
                Half u = d.twin[half_of(c, s)];
                int c2 = cross_of(u);
                // corner colours must agree along the shared face: corner
                // (c, s) and corner u lie in the same face
                // corner (c,s) shares a face with corner rot(u)
                int want = cc[c] ^ (s & 1) ^ (u & 1) ^ 1;
                if (cc[c2] < 0) {
                    cc[c2] = want;
                    st.push_back(c2);
                } else if (cc[c2] != want) {
                    throw std::invalid_argument("diagram faces are not 2-colourable");
                }
            }
        }
    }
    int k0 = 0;
    for (int c = 0; c < n; ++c)
        if ((cc[c] ^ d.over[c]) & 1) ++k0;
    int flip = 0;
    if (k0 * 2 > n || (k0 * 2 == n && cc[0] != 0)) flip = 1;
    for (int c = 0; c < n; ++c) d.col0[c] = (std::uint8_t)(cc[c] ^ flip);
    return d;
}

// set over-strands so that every crossing is alternating w.r.t. the colouring
PlanarDiagram finish_alternating(DiagramData d) {
    d = colour_min_k(std::move(d));
    for (int c = 0; c < d.crossings(); ++c) d.over[c] = d.col0[c];
    d = colour_min_k(std::move(d));  // re-pick colouring now that k changed
    return PlanarDiagram(std::move(d));
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string t = text;
    for (auto& ch : t)
        if (ch == ',' || ch == ';') ch = ' ';
    std::istringstream s(t);
    int v;
    while (s >> v) out.push_back(v);
    if (!s.eof()) throw std::invalid_argument("bad integer list: " + text);
    return out;
}

namespace {

struct DTRealizer {
    int n;
    std::vector<int> cr;        // crossing index at each time step
    std::vector<char> second;   // is time t the second visit?
    Draw d;
    bool done = false;

    DTRealizer(int n_) : n(n_), cr(2 * n_), second(2 * n_, 0), d(n_) {}

    void dfs(int t, Half head) {
        if (done) return;
        if (t == 2 * n) {
            Half start = half_of(cr[0], 0);
            if (d.same_face(head, start)) {
                d.weld(head, start);
                done = true;  // keep welds
            }
            return;
        }
        int c = cr[t];
        if (!second[t]) {
            d.weld(head, half_of(c, 0));
            dfs(t + 1, half_of(c, 2));
            if (done) return;
            d.unweld(head);
        } else {
            for (int s = 1; s <= 3; s += 2) {
                if (!d.same_face(head, half_of(c, s))) continue;
                d.weld(head, half_of(c, s));
                dfs(t + 1, half_of(c, s ^ 2));
                if (done) return;
                d.unweld(head);
            }
        }
    }
};

}  // namespace

PlanarDiagram parse_dt(const std::vector<int>& code) {
    int n = (int)code.size();
    if (n == 0) {
        DiagramData d;
        d.circle_host = {kHostAmbient};
        d.ambient_white = false;
        return PlanarDiagram(std::move(d));
    }
    std::vector<int> even_time(n);
    std::vector<char> used(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        int e = std::abs(code[i]);
        if (e < 2 || e > 2 * n || e % 2)
            throw std::invalid_argument("DT entry " + std::to_string(i) + " is not a valid even label");
        if (used[e / 2]) throw std::invalid_argument("DT entry " + std::to_string(i) + " repeats a label");
        used[e / 2] = 1;
        even_time[i] = e - 1;
    }
    DTRealizer R(n);
    for (int i = 0; i < n; ++i) {
        R.cr[2 * i] = i;
        R.cr[even_time[i]] = i;
        R.second[std::max(2 * i, even_time[i])] = 1;
    }
    R.dfs(1, half_of(R.cr[0], 2));
    if (!R.done) throw std::invalid_argument("DT code is not realizable as a planar diagram");

    DiagramData d;
    d.twin = R.d.twin;
    d.over.resize(n);
    d.col0.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int over_is_second = R.second[even_time[i]] ? 1 : 0;
        if (code[i] < 0) over_is_second ^= 1;
        d.over[i] = (std::uint8_t)over_is_second;  // visit 1 enters slot 0, visit 2 slot 1/3
    }
    // self-check: tracing the realized diagram from its basepoint must
    // reproduce the input code
    {
        std::vector<int> odd_at(n, 0), even_at(n, 0);
        std::vector<char> over_even(n, 0);
        Half e = half_of(R.cr[0], 0);
        for (int t = 1; t <= 2 * n; ++t) {
            int c = cross_of(e);
            bool over = ((e & 1) == d.over[c]);
            if (t % 2) odd_at[c] = t;
            else { even_at[c] = t; over_even[c] = over; }
            e = d.twin[opp(e)];
        }
        for (int c = 0; c < n; ++c) {
            int i = (odd_at[c] - 1) / 2;
            int v = over_even[c] ? even_at[c] : -even_at[c];
            if (v != code[i]) throw std::logic_error("DT realization self-check failed");
        }
    }
    return PlanarDiagram(colour_min_k(std::move(d)));
}

PlanarDiagram parse_pd(const std::string& text) {
    // collect X[a,b,c,d] tuples
    std::vector<std::array<int, 4>> xs;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == 'X' || ch == 'x') {
            size_t j = i + 1;
            while (j < text.size() && std::isspace((unsigned char)text[j])) ++j;
            if (j >= text.size() || (text[j] != '[' && text[j] != '(' && text[j] != '{'))
                throw std::invalid_argument("PD parse error near position " + std::to_string(i));
            size_t end = text.find_first_of("])}", j);
            if (end == std::string::npos) throw std::invalid_argument("PD: unclosed crossing tuple");
            auto vals = parse_int_list(text.substr(j + 1, end - j - 1));
            if (vals.size() != 4) throw std::invalid_argument("PD: crossing needs 4 labels");
            xs.push_back({vals[0], vals[1], vals[2], vals[3]});
            i = end + 1;
        } else if (std::isspace((unsigned char)ch) || ch == ',' || ch == 'P' || ch == 'D' ||
                   ch == '[' || ch == ']') {
            ++i;
        } else {
            throw std::invalid_argument(std::string("PD: unexpected character '") + ch + "'");
        }
    }
    int n = (int)xs.size();
    if (n == 0) return parse_dt({});
    std::map<int, std::vector<Half>> occ;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) occ[xs[c][s]].push_back(half_of(c, s));
    DiagramData d;
    d.twin.assign(4 * n, -1);
    d.over.assign(n, 1);  // incoming under-strand at slot 0
    d.col0.assign(n, 0);
    for (auto& [label, hs] : occ) {
        if (hs.size() != 2)
            throw std::invalid_argument("PD: edge label " + std::to_string(label) +
                                        " appears " + std::to_string(hs.size()) + " times");
        d.twin[hs[0]] = hs[1];
        d.twin[hs[1]] = hs[0];
    }
    try {
        return PlanarDiagram(colour_min_k(std::move(d)));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("PD: inconsistent diagram: ") + e.what());
    }
}

PlanarDiagram two_bridge_diagram(const std::vector<int>& a) {
    if (a.empty()) throw std::invalid_argument("two_bridge_diagram: empty coefficients");
    for (int v : a)
        if (v < 2) throw std::invalid_argument("two_bridge_diagram: coefficients must be >= 2");
    // value of the negative continued fraction
    long long m = a.back(), q = 1;
    for (int i = (int)a.size() - 2; i >= 0; --i) {
        long long nm = a[i] * m - q;
        q = m;
        m = nm;
    }
    // S(m,q) ~ S(m,m-q) up to mirror image; keep q < m/2 so the additive
    // expansion below starts with a term >= 2
    if (2 * q > m) q = m - q;
    // additive continued fraction of m/q, realized by the plat builder
    std::vector<long long> b;
    while (q > 0) {
        b.push_back(m / q);
        long long r = m % q;
        m = q;
        q = r;
    }
    if (b.size() > 1 && b.back() == 1) {
        b.pop_back();
        b.back() += 1;
    }
    DiagramData d;
    // Open plat stubs; crossing slots: 0=NE 1=NW 2=SW 3=SE.  The innermost
    // coefficient a_k is applied first so that a_1 is a horizontal group
    // applied last, followed by the numerator closure.
    Half nw = -1, ne = -1, sw = -1, se = -1;
    for (int i = (int)b.size() - 1; i >= 0; --i) {
        for (long long j = 0; j < b[i]; ++j) {
            int c = d.add_crossing(0, 0);
            if (i % 2 == 0) {  // horizontal twists, added on the east
                if (ne < 0) {
                    nw = half_of(c, 1);
                    sw = half_of(c, 2);
                } else {
                    d.weld(ne, half_of(c, 1));
                    d.weld(se, half_of(c, 2));
                }
                ne = half_of(c, 0);
                se = half_of(c, 3);
            } else {  // vertical twists, added on the south (opposite handedness)
                if (sw < 0) {
                    nw = half_of(c, 1);
                    ne = half_of(c, 0);
                } else {
                    d.weld(sw, half_of(c, 1));
                    d.weld(se, half_of(c, 0));
                }
                sw = half_of(c, 2);
                se = half_of(c, 3);
            }
        }
    }
    d.weld(nw, ne);
    d.weld(sw, se);
    return finish_alternating(std::move(d));
}

PlanarDiagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 2) throw std::invalid_argument("braid_closure: need >= 2 strands");
    DiagramData d;
    std::vector<Half> top(strands, -1), bot(strands, -1);
    for (int w : word) {
        int i = std::abs(w);
        if (i < 1 || i >= strands) throw std::invalid_argument("braid_closure: bad letter");
        // slots: 0=NE 1=NW 2=SW 3=SE; positive letter: NW-SE strand over
        int c = d.add_crossing(w > 0 ? 1 : 0, 0);
        if (bot[i - 1] < 0) top[i - 1] = half_of(c, 1); else d.weld(bot[i - 1], half_of(c, 1));
        if (bot[i] < 0) top[i] = half_of(c, 0); else d.weld(bot[i], half_of(c, 0));
        bot[i - 1] = half_of(c, 2);
        bot[i] = half_of(c, 3);
    }
    for (int j = 0; j < strands; ++j) {
        if (bot[j] < 0) throw std::invalid_argument("braid_closure: unused strand column");
        d.weld(bot[j], top[j]);
    }
    return PlanarDiagram(colour_min_k(std::move(d)));
}

PlanarDiagram random_diagram(std::mt19937& rng, int max_crossings) {
    for (;;) {
        int strands = 2 + (int)(rng() % 3);
        int len = std::max(strands - 1, 2) + (int)(rng() % std::max(1, max_crossings - 2));
        if (len > max_crossings) len = max_crossings;
        std::vector<int> word(len);
        std::vector<char> seen(strands, 0);
        for (auto& w : word) {
            int i = 1 + (int)(rng() % (strands - 1));
            seen[i] = 1;
            w = (rng() & 1) ? i : -i;
        }
        bool ok = true;
        for (int i = 1; i < strands; ++i) ok &= (bool)seen[i];
        if (!ok) continue;
        PlanarDiagram base = braid_closure(strands, word);
        DiagramData d = base.data();
        for (auto& o : d.over) o = rng() & 1;
        if (rng() & 1) {
            for (auto& c : d.col0) c ^= 1;
            d.ambient_white = !d.ambient_white;
        }
        return PlanarDiagram(std::move(d));
    }
}

std::vector<int> minimal_dt(const PlanarDiagram& dg) {
    int n = dg.crossings();
    if (n == 0) return {};
    if (dg.stats().l != 1 || dg.circles() != 0)
        throw std::invalid_argument("minimal_dt: knots only");
    std::vector<int> best, best_key;
    for (Half h0 = 0; h0 < 4 * n; ++h0) {
        // trace the strand entering crossings, starting by entering at h0
        std::vector<int> odd_label(n, 0), even_label(n, 0);
        std::vector<char> over_at_even(n, 0);
        Half e = h0;
        for (int t = 1; t <= 2 * n; ++t) {
            int c = cross_of(e);
            bool over = ((e & 1) == dg.over(c));
            if (t % 2) odd_label[c] = t;
            else { even_label[c] = t; over_at_even[c] = over; }
            e = dg.twin(opp(e));
        }
        std::vector<int> dt(n), key(n);
        bool valid = true;
        for (int c = 0; c < n; ++c)
            if (!odd_label[c] || !even_label[c]) valid = false;
        if (!valid) continue;  // cannot happen for knots, kept for safety
        for (int c = 0; c < n; ++c) {
            int i = (odd_label[c] - 1) / 2;
            dt[i] = over_at_even[c] ? even_label[c] : -even_label[c];
            key[i] = 2 * even_label[c] + (over_at_even[c] ? 0 : 1);
        }
        if (best_key.empty() || key < best_key) { best_key = key; best = dt; }
    }
    return best;
}

std::vector<KnotEntry> load_knot_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open knot table: " + path);
    std::vector<KnotEntry> out;
    std::string line;
    while (std::getline(f, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad table line: " + line);
        std::string name = line.substr(0, comma);
        if (name == "name") continue;  // header
        out.push_back({name, parse_int_list(line.substr(comma + 1))});
    }
    return out;
}

namespace {

struct ShadowEnum {
    int n;
    Draw d;
    std::vector<char> open;
    int created = 0;
    std::unordered_set<std::string> seen;
    const std::function<void(const PlanarDiagram&)>* fn;

    explicit ShadowEnum(int n_) : n(n_), d(n_), open(n_, 0) {}

    void leaf() {
        // faces of the completed shadow
        int H = 4 * n;
        std::vector<int> face(H, -1);
        int nf = 0;
        for (Half h0 = 0; h0 < H; ++h0) {
            if (face[h0] >= 0) continue;
            for (Half h = h0; face[h] < 0; h = rot(d.twin[h])) face[h] = nf;
            ++nf;
        }
        // reduced: no face meets a crossing at two opposite corners
        for (int c = 0; c < n; ++c)
            for (int s = 0; s < 2; ++s)
                if (face[half_of(c, s)] == face[half_of(c, s + 2)]) return;
        // prime: no pair of edges bounding the same two faces whose removal
        // disconnects the diagram
        std::vector<Half> edges;
        for (Half h = 0; h < H; ++h)
            if (h < d.twin[h]) edges.push_back(h);
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) {
                Half a = edges[i], b = edges[j];
                int fa1 = face[a], fa2 = face[d.twin[a]];
                int fb1 = face[b], fb2 = face[d.twin[b]];
                if (!((fa1 == fb1 && fa2 == fb2) || (fa1 == fb2 && fa2 == fb1))) continue;
                // connectivity without edges a, b
                std::vector<int> uf(n);
                for (int c = 0; c < n; ++c) uf[c] = c;
                auto find = [&](auto&& self, int x) -> int {
                    return uf[x] == x ? x : uf[x] = self(self, uf[x]);
                };
                for (Half h : edges) {
                    if (h == a || h == b) continue;
                    uf[find(find, cross_of(h))] = find(find, cross_of(d.twin[h]));
                }
                int root = find(find, 0);
                for (int c = 1; c < n; ++c)
                    if (find(find, c) != root) return;  // composite
            }
        DiagramData dd;
        dd.twin = d.twin;
        dd.over.assign(n, 0);
        dd.col0.assign(n, 0);
        PlanarDiagram diag = finish_alternating(std::move(dd));
        auto c1 = canonical_code(diag).code;
        auto c2 = canonical_code(mirror(diag)).code;
        const auto& cmin = std::min(c1, c2);
        std::string key((const char*)cmin.data(), cmin.size() * sizeof(int));
        if (seen.insert(std::move(key)).second) (*fn)(diag);
    }

    void dfs(int t, Half head) {
        if (t == 2 * n) {
            Half start = half_of(0, 0);
            if (!d.same_face(head, start)) return;
            if (rot(start) == head || rot(head) == start) return;  // monogon
            d.weld(head, start);
            leaf();
            d.unweld(head);
            return;
        }
        if (created < n) {
            int c = created++;
            open[c] = 1;
            d.weld(head, half_of(c, 0));
            dfs(t + 1, half_of(c, 2));
            d.unweld(head);
            open[c] = 0;
            --created;
        }
        for (int c = 0; c < created; ++c) {
            if (!open[c]) continue;
            for (int s = 1; s <= 3; s += 2) {
                Half tgt = half_of(c, s);
                if (cross_of(head) == c && (rot(tgt) == head || rot(head) == tgt))
                    continue;  // would create a monogon
                if (!d.same_face(head, tgt)) continue;
                open[c] = 0;
                d.weld(head, tgt);
                dfs(t + 1, half_of(c, s ^ 2));
                d.unweld(head);
                open[c] = 1;
            }
        }
    }
};

}  // namespace

void enumerate_alternating_diagrams(int n,
                                    const std::function<void(const PlanarDiagram&)>& fn) {
    if (n < 3) return;
    ShadowEnum e(n);
    e.fn = &fn;
    e.created = 1;
    e.open[0] = 1;
    e.dfs(1, half_of(0, 2));
}

}  // namespace ribbon
