#include "topo/io.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace topo {

using nlohmann::json;

ComplexDocument parse_complex(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    ComplexDocument out;
    std::map<std::string, CellId> by_name;
    if (!doc.contains("cells") || !doc["cells"].is_array())
        throw std::invalid_argument("document has no cell list");
    for (const auto& jc : doc["cells"]) {
        std::string id = jc.at("id").get<std::string>();
        int dim = jc.at("dim").get<int>();
        if (by_name.count(id)) throw std::invalid_argument("duplicate cell id: " + id);
        by_name[id] = out.complex.add_cell(dim, id);
    }
    for (const auto& jc : doc["cells"]) {
        std::string id = jc.at("id").get<std::string>();
        if (!jc.contains("facets")) continue;
        for (const auto& jf : jc["facets"]) {
            std::string f = jf.get<std::string>();
            auto it = by_name.find(f);
            if (it == by_name.end())
                throw std::invalid_argument("facet reference to missing id: " + f);
            out.complex.add_boundary(it->second, by_name[id]);
        }
    }
    ComplexReport rep = validate_complex(out.complex);
    if (!rep.valid()) {
        std::ostringstream os;
        os << "invalid complex:";
        for (const auto& v : rep.violations)
            os << " (" << out.complex.name(v.a) << "," << out.complex.name(v.b) << ")";
        throw std::invalid_argument(os.str());
    }
    if (doc.contains("values")) {
        DiscreteMorseFunction h;
        h.values.assign(out.complex.size(), 0.0);
        for (auto it = doc["values"].begin(); it != doc["values"].end(); ++it) {
            auto cell = by_name.find(it.key());
            if (cell == by_name.end())
                throw std::invalid_argument("value for missing id: " + it.key());
            h.values[cell->second] = it.value().get<double>();
        }
        DmfReport dr = validate_dmf(out.complex, h);
        if (!dr.valid()) {
            std::ostringstream os;
            os << "invalid discrete Morse function:";
            for (const auto& v : dr.violations) {
                os << " [";
                if (v.a != kNoCell) os << out.complex.name(v.a);
                if (v.b != kNoCell) os << "," << out.complex.name(v.b);
                os << "]";
            }
            throw std::invalid_argument(os.str());
        }
        out.values = std::move(h);
    }
    return out;
}

std::string emit_complex(const LefschetzComplex& X, const DiscreteMorseFunction* h) {
    json doc;
    doc["cells"] = json::array();
    for (const Cell& c : X.cells()) {
        json jc;
        jc["id"] = c.name;
        jc["dim"] = c.dim;
        json fs = json::array();
        for (CellId f : X.facets(c.id)) fs.push_back(X.name(f));
        jc["facets"] = fs;
        doc["cells"].push_back(jc);
    }
    if (h) {
        json vs = json::object();
        for (const Cell& c : X.cells()) vs[c.name] = h->values[c.id];
        doc["values"] = vs;
    }
    return doc.dump(2);
}

LefschetzComplex simplex_skeleton(int d, int cell_budget) {
    if (d < 0) throw std::invalid_argument("dimension must be non-negative");
    if (d > 20 || (1 << (d + 1)) - 1 > cell_budget)
        throw std::invalid_argument("simplex exceeds the configured cell budget");
    LefschetzComplex X;
    int verts = d + 1;
    int full = 1 << verts;
    std::vector<CellId> by_mask(full, kNoCell);
    // subsets ordered by popcount so facets exist before cofacets
    std::vector<int> masks;
    for (int m = 1; m < full; ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](int a, int b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    for (int m : masks) {
        int k = __builtin_popcount(m) - 1;
        std::string name;
        for (int v = 0; v < verts; ++v)
            if (m & (1 << v)) {
                if (!name.empty()) name += "-";
                name += std::to_string(v);
            }
        by_mask[m] = X.add_cell(k, name);
        if (k > 0) {
            for (int v = 0; v < verts; ++v)
                if (m & (1 << v)) X.add_boundary(by_mask[m ^ (1 << v)], by_mask[m]);
        }
    }
    return X;
}

DiscreteMorseFunction random_dmf(const LefschetzComplex& X, std::uint64_t seed, bool banded) {
    std::mt19937_64 rng(seed);
    // random linear extension: repeatedly draw among cells with all facets placed
    std::vector<int> missing(X.size());
    std::vector<CellId> ready;
    for (CellId c = 0; c < X.size(); ++c) {
        missing[c] = static_cast<int>(X.facets(c).size());
        if (missing[c] == 0) ready.push_back(c);
    }
    std::vector<CellId> extension;
    while (!ready.empty()) {
        size_t pick;
        if (banded) {
            // among minimal-dimension ready cells
            int dmin = X.dim(ready[0]);
            for (CellId c : ready) dmin = std::min(dmin, X.dim(c));
            std::vector<size_t> idx;
            for (size_t i = 0; i < ready.size(); ++i)
                if (X.dim(ready[i]) == dmin) idx.push_back(i);
            pick = idx[std::uniform_int_distribution<size_t>(0, idx.size() - 1)(rng)];
        } else {
            pick = std::uniform_int_distribution<size_t>(0, ready.size() - 1)(rng);
        }
        CellId c = ready[pick];
        ready.erase(ready.begin() + pick);
        extension.push_back(c);
        for (CellId cf : X.cofacets(c))
            if (--missing[cf] == 0) ready.push_back(cf);
    }
    if (extension.size() != static_cast<size_t>(X.size()))
        throw std::logic_error("face poset has a cycle");
    DiscreteMorseFunction h;
    h.values.assign(X.size(), 0.0);
    for (size_t i = 0; i < extension.size(); ++i) h.values[extension[i]] = static_cast<double>(i);
    return h;
}

bool bands_separated(const LefschetzComplex& X, const DiscreteMorseFunction& h) {
    std::map<int, std::pair<double, double>> range;  // dim -> [min, max]
    for (const Cell& c : X.cells()) {
        auto it = range.find(c.dim);
        if (it == range.end())
            range[c.dim] = {h(c.id), h(c.id)};
        else {
            it->second.first = std::min(it->second.first, h(c.id));
            it->second.second = std::max(it->second.second, h(c.id));
        }
    }
    double prev_max = -1;
    for (auto& [d, mm] : range) {
        (void)d;
        if (mm.first <= prev_max) return false;
        prev_max = mm.second;
    }
    return true;
}

namespace {

json pairs_json(const ReducedState& s, bool with_regions) {
    const LefschetzComplex& X = s.complex();
    json jpairs = json::array();
    for (const BirthDeathPair& p : s.pairs()) {
        json jp;
        jp["dim"] = p.dim;
        jp["birth"] = X.name(p.birth);
        jp["birth_value"] = s.value(p.birth);
        if (p.has_death()) {
            jp["death"] = X.name(p.death);
            jp["death_value"] = s.value(p.death);
        } else {
            jp["death"] = nullptr;
            jp["death_value"] = nullptr;
        }
        switch (p.cls) {
            case PairClass::off_diagonal: jp["class"] = "off-diagonal"; break;
            case PairClass::diagonal: jp["class"] = "diagonal"; break;
            case PairClass::essential: jp["class"] = "essential"; break;
        }
        if (with_regions && p.cls == PairClass::off_diagonal) {
            json regions;
            json dr = json::array(), br = json::array();
            for (auto [x, y] : death_region(s, p).corners) dr.push_back({x, y});
            for (auto [x, y] : birth_region(s, p).corners) br.push_back({x, y});
            regions["death"] = dr;
            regions["birth"] = br;
            jp["regions"] = regions;
        }
        jpairs.push_back(jp);
    }
    return jpairs;
}

json relations_json(const ReducedState& s) {
    const LefschetzComplex& X = s.complex();
    json jrel = json::array();
    for (int n = 0; n <= s.max_dim(); ++n) {
        for (CellId y : s.bd(n).col_ids()) {
            for (CellId x : s.bd(n).col_ids()) {
                if (x != y && s.hom_relation(x, y))
                    jrel.push_back({{"from", X.name(x)}, {"to", X.name(y)}, {"kind", "hom"}});
                if (x != y && s.cohom_relation(x, y))
                    jrel.push_back({{"from", X.name(x)}, {"to", X.name(y)}, {"kind", "cohom"}});
            }
        }
    }
    return jrel;
}

std::string diagram_svg(const ReducedState& s, bool with_regions) {
    double vmin = 0, vmax = 1;
    if (s.complex().size() > 0) {
        vmin = *std::min_element(s.dmf().values.begin(), s.dmf().values.end());
        vmax = *std::max_element(s.dmf().values.begin(), s.dmf().values.end());
    }
    double span = std::max(vmax - vmin, 1.0);
    const double W = 640, H = 640, pad = 48;
    auto sx = [&](double v) { return pad + (v - vmin) / span * (W - 2 * pad); };
    auto sy = [&](double v) { return H - pad - (v - vmin) / span * (H - 2 * pad); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << sx(vmin) << "\" y1=\"" << sy(vmin) << "\" x2=\"" << sx(vmax)
       << "\" y2=\"" << sy(vmax) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    if (with_regions) {
        for (const BirthDeathPair& p : s.pairs()) {
            if (p.cls != PairClass::off_diagonal) continue;
            for (auto [x, y] : death_region(s, p).corners)
                os << "<rect x=\"" << sx(vmin) << "\" y=\"" << sy(y) << "\" width=\""
                   << sx(x) - sx(vmin) << "\" height=\"" << sy(vmin) - sy(y)
                   << "\" fill=\"#a9d1f7\" fill-opacity=\"0.25\"/>\n";
            for (auto [x, y] : birth_region(s, p).corners)
                os << "<rect x=\"" << sx(x) << "\" y=\"" << sy(vmax) << "\" width=\""
                   << sx(vmax) - sx(x) << "\" height=\"" << sy(y) - sy(vmax)
                   << "\" fill=\"#2c5f9e\" fill-opacity=\"0.25\"/>\n";
        }
    }
    // relation arrows between same-dimension off-diagonal pairs
    const LefschetzComplex& X = s.complex();
    auto arrow = [&](const BirthDeathPair& b, const BirthDeathPair& a, const char* color) {
        os << "<line x1=\"" << sx(s.value(b.birth)) << "\" y1=\"" << sy(s.value(b.death))
           << "\" x2=\"" << sx(s.value(a.birth)) << "\" y2=\"" << sy(s.value(a.death))
           << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
    };
    for (const BirthDeathPair& a : s.pairs()) {
        if (a.cls != PairClass::off_diagonal) continue;
        for (const BirthDeathPair& b : s.pairs()) {
            if (b.cls != PairClass::off_diagonal || b.dim != a.dim || b.birth == a.birth) continue;
            if (s.hom_relation(b.death, a.death)) arrow(b, a, "#c0392b");
            if (s.cohom_relation(b.birth, a.birth)) arrow(b, a, "#27ae60");
        }
    }
    (void)X;
    for (const BirthDeathPair& p : s.pairs()) {
        double b = s.value(p.birth);
        double d = p.has_death() ? s.value(p.death) : vmax;
        const char* fill = p.cls == PairClass::off_diagonal ? "#2c3e50"
                           : p.cls == PairClass::diagonal   ? "#bdc3c7"
                                                            : "#e67e22";
        os << "<circle cx=\"" << sx(b) << "\" cy=\"" << sy(d) << "\" r=\"3\" fill=\"" << fill
           << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string emit_diagram(const ReducedState& s, DiagramFormat format, bool with_regions) {
    if (format == DiagramFormat::svg) return diagram_svg(s, with_regions);
    if (format == DiagramFormat::csv) {
        std::ostringstream os;
        os << "dim,birth,death,birth_value,death_value,class\n";
        for (const BirthDeathPair& p : s.pairs()) {
            os << p.dim << ',' << s.complex().name(p.birth) << ',';
            if (p.has_death())
                os << s.complex().name(p.death);
            os << ',' << s.value(p.birth) << ',';
            if (p.has_death()) os << s.value(p.death);
            os << ','
               << (p.cls == PairClass::off_diagonal ? "off-diagonal"
                   : p.cls == PairClass::diagonal   ? "diagonal"
                                                    : "essential")
               << '\n';
        }
        return os.str();
    }
    json doc;
    doc["pairs"] = pairs_json(s, with_regions);
    doc["relations"] = relations_json(s);
    return doc.dump(2);
}

}  // namespace topo
