// Prime alternating knot table generator.  Enumerates reduced prime
// alternating diagrams, groups them into knots by flype orbits (Tait: two
// reduced alternating diagrams of a knot differ by flypes, sphere reversal
// allowed), and names each knot <n>a<rank> by lexicographic rank of its
// minimal DT code — the ordering public alternating tables use.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "ribbon/codes.hpp"
#include "ribbon/moves.hpp"

using namespace ribbon;

namespace {

std::string key(const PlanarDiagram& d) {
    auto c = canonical_code(d).code;
    for (const auto& v : {mirror(d), flip(d), mirror(flip(d))})
        c = std::min(c, canonical_code(v).code);
    return std::string((const char*)c.data(), c.size() * sizeof(int));
}

std::vector<std::vector<int>> knots_with(int n) {
    std::vector<PlanarDiagram> diags;
    std::map<std::string, int> id;
    std::vector<int> uf;
    auto find = [&](auto&& self, int x) -> int {
        return uf[x] == x ? x : uf[x] = self(self, uf[x]);
    };
    enumerate_alternating_diagrams(n, [&](const PlanarDiagram& d) {
        int i = (int)diags.size();
        uf.push_back(i);
        // the enumerator works up to relabelling and mirror but not sphere
        // reversal, so flip-related repeats show up; unite them here
        auto [it, fresh] = id.emplace(key(d), i);
        if (!fresh) uf[i] = find(find, it->second);
        diags.push_back(d);
    });
    for (size_t i = 0; i < diags.size(); ++i)
        for (const auto& m : enumerate_flypes(diags[i])) {
            auto it = id.find(key(apply_move(diags[i], m).diagram));
            if (it == id.end()) throw std::logic_error("flype left the enumeration");
            uf[find(find, (int)i)] = find(find, it->second);
        }
    // canonical DT per knot: minimum over the class and its sphere reversals
    std::map<int, std::vector<int>> best;
    for (size_t i = 0; i < diags.size(); ++i) {
        auto dt = std::min(minimal_dt(diags[i]), minimal_dt(flip(diags[i])));
        auto [it, fresh] = best.emplace(find(find, (int)i), dt);
        if (!fresh && dt < it->second) it->second = dt;
    }
    std::vector<std::vector<int>> out;
    for (auto& [root, dt] : best) out.push_back(std::move(dt));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generate a prime alternating knot table (CSV: name,dt)"};
    int min_n = 3, max_n = 12;
    std::string output = "-";
    app.add_option("--min", min_n, "smallest crossing number")->check(CLI::PositiveNumber);
    app.add_option("--max", max_n, "largest crossing number")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", output, "output file (default stdout)");
    CLI11_PARSE(app, argc, argv);

    std::ofstream file;
    if (output != "-") {
        file.open(output);
        if (!file) { std::cerr << "cannot write " << output << "\n"; return 1; }
    }
    std::ostream& out = output == "-" ? std::cout : file;
    out << "name,dt_code\n";
    for (int n = min_n; n <= max_n; ++n) {
        auto knots = knots_with(n);
        for (size_t i = 0; i < knots.size(); ++i) {
            out << n << 'a' << i + 1 << ',';
            for (size_t j = 0; j < knots[i].size(); ++j)
                out << (j ? " " : "") << knots[i][j];
            out << '\n';
        }
        std::cerr << "n=" << n << ": " << knots.size() << " knots\n";
    }
    return 0;
}
