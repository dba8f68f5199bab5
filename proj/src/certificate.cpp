// Certificate file format (version 1), line oriented:
//
//   ribbon-certificate v1
//   name <label>                      (optional)
//   crossings <n>
//   twin <4n ints>                    (omitted when n = 0)
//   over <n bits>
//   col0 <n bits>
//   circles <m>
//   hosts <m ints>                    (omitted when m = 0)
//   ambient_white <0|1>
//   glue <h1> <h2>                    (one line per glued corner pair)
//   moves <k>
//   band <1|2> <twist> <over> <a> <b> <across> <variant>
//        each site as edge:circle:inside
//   move <r1|r2|untongue|clasp|flype|untongue2|loop3flype> <variant> <loc...>
//   final <components>
//
// The initial diagram is embedded in full so a certificate replays with no
// external data.
#include "ribbon/certificate.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ribbon/goeritz.hpp"
#include "ribbon/lattice.hpp"

namespace ribbon {

namespace {

const std::map<MoveKind, std::string> kKindNames = {
    {MoveKind::Flype, "flype"},       {MoveKind::R1, "r1"},
    {MoveKind::R2, "r2"},             {MoveKind::Untongue, "untongue"},
    {MoveKind::Clasp, "clasp"},       {MoveKind::Untongue2, "untongue2"},
    {MoveKind::FloatingLoop3Flype, "loop3flype"},
};

std::string site_str(const BandSite& s) {
    std::ostringstream o;
    o << s.edge << ':' << s.circle << ':' << (s.circle_inside ? 1 : 0);
    return o.str();
}

BandSite parse_site(const std::string& t) {
    BandSite s;
    char c1, c2;
    int in = 0;
    std::istringstream i(t);
    if (!(i >> s.edge >> c1 >> s.circle >> c2 >> in) || c1 != ':' || c2 != ':')
        throw std::invalid_argument("certificate: bad band site '" + t + "'");
    s.circle_inside = in != 0;
    return s;
}

}  // namespace

std::string serialize_certificate(const Certificate& c) {
    std::ostringstream o;
    o << "ribbon-certificate v" << c.version << "\n";
    if (!c.name.empty()) o << "name " << c.name << "\n";
    int n = c.initial.crossings();
    o << "crossings " << n << "\n";
    if (n > 0) {
        o << "twin";
        for (Half h : c.initial.twin) o << ' ' << h;
        o << "\nover";
        for (auto b : c.initial.over) o << ' ' << (int)b;
        o << "\ncol0";
        for (auto b : c.initial.col0) o << ' ' << (int)b;
        o << "\n";
    }
    o << "circles " << c.initial.circle_host.size() << "\n";
    if (!c.initial.circle_host.empty()) {
        o << "hosts";
        for (int h : c.initial.circle_host) o << ' ' << h;
        o << "\n";
    }
    o << "ambient_white " << (c.initial.ambient_white ? 1 : 0) << "\n";
    for (const auto& [g1, g2] : c.initial.glue) o << "glue " << g1 << ' ' << g2 << "\n";
    o << "moves " << c.moves.size() << "\n";
    for (const auto& m : c.moves) {
        if (m.kind == MoveKind::Band) {
            const auto& b = m.band;
            o << "band " << (b.kind == BandKind::Length1 ? 1 : 2) << ' ' << b.twist << ' '
              << (b.band_over ? 1 : 0) << ' ' << site_str(b.a) << ' ' << site_str(b.b) << ' '
              << site_str(b.across) << ' ' << m.variant << "\n";
        } else {
            o << "move " << kKindNames.at(m.kind) << ' ' << m.variant;
            for (int x : m.loc) o << ' ' << x;
            o << "\n";
        }
    }
    o << "final " << c.final_components << "\n";
    return o.str();
}

Certificate parse_certificate(const std::string& text) {
    Certificate c;
    std::istringstream in(text);
    std::string line;
    auto fail = [](const std::string& why) -> std::istringstream& {
        throw std::invalid_argument("certificate: " + why);
    };
    if (!std::getline(in, line) || line.rfind("ribbon-certificate v", 0) != 0)
        fail("missing header");
    c.version = std::stoi(line.substr(20));
    if (c.version != 1) fail("unsupported version");
    int n = -1, moves = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "name") {
            ls >> std::ws;
            std::getline(ls, c.name);
        } else if (key == "crossings") {
            ls >> n;
            c.initial.twin.assign(4 * std::max(n, 0), 0);
            c.initial.over.assign(std::max(n, 0), 0);
            c.initial.col0.assign(std::max(n, 0), 0);
        } else if (key == "twin") {
            for (auto& h : c.initial.twin)
                if (!(ls >> h)) fail("short twin list");
        } else if (key == "over" || key == "col0") {
            for (auto& b : (key == "over" ? c.initial.over : c.initial.col0)) {
                int v;
                if (!(ls >> v)) fail("short " + key + " list");
                b = (std::uint8_t)v;
            }
        } else if (key == "circles") {
            int m;
            ls >> m;
            c.initial.circle_host.assign(std::max(m, 0), kHostAmbient);
        } else if (key == "hosts") {
            for (auto& h : c.initial.circle_host)
                if (!(ls >> h)) fail("short host list");
        } else if (key == "ambient_white") {
            int v;
            ls >> v;
            c.initial.ambient_white = v != 0;
        } else if (key == "glue") {
            Half a, b;
            if (!(ls >> a >> b)) fail("bad glue line");
            c.initial.glue.emplace_back(a, b);
        } else if (key == "moves") {
            ls >> moves;
        } else if (key == "band") {
            MoveRecord m;
            m.kind = MoveKind::Band;
            int kind, over;
            std::string sa, sb, sx;
            if (!(ls >> kind >> m.band.twist >> over >> sa >> sb >> sx >> m.variant))
                fail("bad band line");
            m.band.kind = kind == 1 ? BandKind::Length1 : BandKind::Length2;
            m.band.band_over = over != 0;
            m.band.a = parse_site(sa);
            m.band.b = parse_site(sb);
            m.band.across = parse_site(sx);
            c.moves.push_back(std::move(m));
        } else if (key == "move") {
            MoveRecord m;
            std::string name;
            if (!(ls >> name >> m.variant)) fail("bad move line");
            bool found = false;
            for (const auto& [k, s] : kKindNames)
                if (s == name) m.kind = k, found = true;
            if (!found) fail("unknown move kind '" + name + "'");
            int x;
            while (ls >> x) m.loc.push_back(x);
            c.moves.push_back(std::move(m));
        } else if (key == "final") {
            ls >> c.final_components;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (n < 0) fail("missing crossings");
    if (moves != (int)c.moves.size()) fail("move count mismatch");
    return c;
}

VerifyResult verify_certificate(const Certificate& c, unsigned long long node_budget) {
    VerifyResult r;
    auto reject = [&](int step, const std::string& why) {
        std::ostringstream o;
        if (step < 0) o << "initial diagram: " << why;
        else o << "step " << step + 1 << ": " << why;
        r.diagnostic = o.str();
        return r;
    };
    PlanarDiagram cur;
    try {
        cur = PlanarDiagram(c.initial);
    } catch (const std::exception& e) {
        return reject(-1, std::string("invalid encoding (") + e.what() + ")");
    }
    if (!is_minimally_nonalternating(cur))
        return reject(-1, "not minimally nonalternating");
    if (bifactorise(cur, node_budget).items.empty())
        return reject(-1, "no bifactorisation");
    int bands = 0;
    for (std::size_t i = 0; i < c.moves.size(); ++i) {
        const auto& m = c.moves[i];
        auto s0 = cur.stats();
        AppliedMove am;
        try {
            am = apply_move(cur, m);
        } catch (const std::exception& e) {
            return reject((int)i, std::string("move does not apply (") + e.what() + ")");
        }
        auto s1 = am.diagram.stats();
        if (m.kind == MoveKind::Band) {
            ++bands;
            if (s1.k != s0.k + 1)
                return reject((int)i, "band's new crossing is not nonalternating");
            if (s1.l != s0.l) return reject((int)i, "band changed the component count");
            int added = m.band.kind == BandKind::Length1 ? 1 : 2;
            if (s1.crossing_count != s0.crossing_count + added)
                return reject((int)i, "band added the wrong number of crossings");
            if (rank_data(am.diagram).eta != rank_data(cur).eta + 1)
                return reject((int)i, "band did not raise the nullity by one");
        } else {
            if (s1.crossing_count > s0.crossing_count)
                return reject((int)i, "isotopy move increased the crossing count");
            if (s1.k + s1.l != s0.k + s0.l)
                return reject((int)i, "move changed components + nonalternating crossings");
        }
        if (!is_minimally_nonalternating(am.diagram))
            return reject((int)i, "result is not minimally nonalternating");
        if (bifactorise(am.diagram, node_budget).items.empty())
            return reject((int)i, "result is not bifactorisable");
        cur = std::move(am.diagram);
    }
    if (cur.crossings() != 0) return reject((int)c.moves.size(), "final diagram has crossings");
    if (cur.circles() != c.final_components)
        return reject((int)c.moves.size(), "final component count differs from the claim");
    if (c.final_components != bands + 1)
        return reject((int)c.moves.size(),
                      "Euler characteristic is not one (components != bands + 1)");
    r.ok = true;
    return r;
}

// ------------------------------------------------------------- rendering

namespace {

struct Frame {
    PlanarDiagram diagram;
    std::string caption;
};

std::vector<Frame> replay_frames(const Certificate& c) {
    std::vector<Frame> frames;
    PlanarDiagram cur(c.initial);
    frames.push_back({cur, "initial"});
    for (const auto& m : c.moves) {
        auto am = apply_move(cur, m);
        std::string cap;
        if (m.kind == MoveKind::Band)
            cap = m.band.kind == BandKind::Length1 ? "band (length 1)" : "band (length 2)";
        else cap = kKindNames.at(m.kind);
        cur = std::move(am.diagram);
        frames.push_back({cur, cap});
    }
    return frames;
}

void describe(std::ostringstream& o, const PlanarDiagram& d) {
    o << "  crossings " << d.crossings() << ", circles " << d.circles() << ", k "
      << d.stats().k << ", l " << d.stats().l << "\n";
    for (int x = 0; x < d.crossings(); ++x) {
        o << "  c" << x << (d.eps(x) < 0 ? "*" : " ") << " :";
        for (int s = 0; s < 4; ++s) {
            Half t = d.twin(half_of(x, s));
            o << " (" << cross_of(t) << ',' << slot_of(t) << ')';
        }
        o << "\n";
    }
    auto bf = bifactorise(d);
    if (!bf.items.empty()) {
        const auto& b = bf.items.front();
        for (int r = 0; r < d.region_count(); ++r) {
            bool white = d.region_is_white(r);
            int row = white ? b.white_index[r] : b.black_index[r];
            if (row < 0) continue;
            const auto& vec = white ? b.white[row] : b.black[row];
            o << "  r" << r << (white ? " = " : " = ");
            bool first = true;
            for (std::size_t j = 0; j < vec.size(); ++j) {
                if (!vec[j]) continue;
                if (!first || vec[j] < 0) o << (vec[j] < 0 ? '-' : '+');
                if (std::abs(vec[j]) != 1) o << std::abs(vec[j]);
                o << (white ? 'e' : 'f') << j + 1;
                first = false;
            }
            if (first) o << '0';
            o << "\n";
        }
    }
}

}  // namespace

std::string render_text(const Certificate& c) {
    auto vr = verify_certificate(c);
    if (!vr.ok)
        throw std::invalid_argument("render: certificate does not verify: " + vr.diagnostic);
    std::ostringstream o;
    auto frames = replay_frames(c);
    for (std::size_t i = 0; i < frames.size(); ++i) {
        o << "frame " << i << " (" << frames[i].caption << ")\n";
        describe(o, frames[i].diagram);
    }
    o << "unlink with " << c.final_components << " components\n";
    return o.str();
}

namespace {

// Tutte embedding of the 4-valent projection: ambient-region crossings on a
// regular polygon, interior crossings at the average of their neighbours.
std::vector<std::pair<double, double>> layout(const PlanarDiagram& d) {
    int n = d.crossings();
    std::vector<std::pair<double, double>> pos(n, {0.0, 0.0});
    if (n == 0) return pos;
    std::vector<int> outer;
    {
        // draw the biggest region as the outer face (the sphere projection
        // has no distinguished region to use)
        int big = 0;
        for (int r = 1; r < d.region_count(); ++r)
            if (d.region_corners(r).size() > d.region_corners(big).size()) big = r;
        std::vector<char> on(n, 0);
        for (Half h : d.region_corners(big)) on[cross_of(h)] = 1;
        for (int x = 0; x < n; ++x)
            if (on[x]) outer.push_back(x);
    }
    for (std::size_t i = 0; i < outer.size(); ++i) {
        double a = 2 * 3.14159265358979 * (double)i / (double)outer.size();
        pos[outer[i]] = {std::cos(a), std::sin(a)};
    }
    if ((int)outer.size() == n) return pos;
    // Gauss-Seidel on the barycentric conditions (diagonally dominant)
    std::vector<char> fixed(n, 0);
    for (int x : outer) fixed[x] = 1;
    for (int it = 0; it < 600; ++it)
        for (int x = 0; x < n; ++x) {
            if (fixed[x]) continue;
            double sx = 0, sy = 0;
            for (int s = 0; s < 4; ++s) {
                int y = cross_of(d.twin(half_of(x, s)));
                sx += pos[y].first;
                sy += pos[y].second;
            }
            pos[x] = {sx / 4, sy / 4};
        }
    return pos;
}

}  // namespace

std::string render_svg(const Certificate& c) {
    auto vr = verify_certificate(c);
    if (!vr.ok)
        throw std::invalid_argument("render: certificate does not verify: " + vr.diagnostic);
    auto frames = replay_frames(c);
    const double W = 220, H = 240, R = 90;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << W * frames.size() << "\" height=\"" << H << "\">\n";
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const auto& d = frames[f].diagram;
        double ox = W * f + W / 2, oy = H / 2 + 10;
        o << "<g stroke=\"black\" fill=\"none\">\n";
        o << "<text x=\"" << ox << "\" y=\"16\" fill=\"black\" stroke=\"none\" "
             "text-anchor=\"middle\" font-size=\"12\">frame "
          << f << ": " << frames[f].caption << "</text>\n";
        auto pos = layout(d);
        auto X = [&](int x) { return ox + R * pos[x].first; };
        auto Y = [&](int x) { return oy + R * pos[x].second; };
        int n = d.crossings();
        // edges as curves bulging away from straight lines so multi-edges stay
        // distinguishable; under-strands get a gap at each endpoint crossing
        for (Half h = 0; h < 4 * n; ++h) {
            Half t = d.twin(h);
            if (t < h) continue;
            int a = cross_of(h), b = cross_of(t);
            double x1 = X(a), y1 = Y(a), x2 = X(b), y2 = Y(b);
            double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
            double dx = x2 - x1, dy = y2 - y1;
            double bend = 0.12 * (slot_of(h) - 1.5);
            double cx = mx - bend * dy, cy = my + bend * dx;
            if (a == b) {  // kink: loop beside the crossing
                cx = x1 + 26 * (slot_of(h) == 0 || slot_of(h) == 3 ? 1 : -1);
                cy = y1 + 26 * (slot_of(h) <= 1 ? -1 : 1);
            }
            auto shrink = [&](double& px, double& py, double qx, double qy, bool cut) {
                if (!cut) return;
                px += 0.22 * (qx - px);
                py += 0.22 * (qy - py);
            };
            bool under1 = d.data().over[a] != (h & 1);
            bool under2 = d.data().over[b] != (t & 1);
            shrink(x1, y1, cx, cy, under1);
            shrink(x2, y2, cx, cy, under2);
            o << "<path d=\"M" << x1 << ' ' << y1 << " Q" << cx << ' ' << cy << ' ' << x2
              << ' ' << y2 << "\"/>\n";
        }
        for (int x = 0; x < n; ++x)
            if (d.eps(x) < 0)
                o << "<text x=\"" << X(x) + 4 << "\" y=\"" << Y(x) - 4
                  << "\" fill=\"black\" stroke=\"none\" font-size=\"14\">*</text>\n";
        for (int j = 0; j < d.circles(); ++j)
            o << "<circle cx=\"" << ox - R + 18 + 14 * j << "\" cy=\"" << oy + R - 4
              << "\" r=\"6\"/>\n";
        o << "</g>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace ribbon
