#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "topo/oracle.hpp"
#include "topo/vector_field.hpp"

using namespace topo;
using testgen::hollow_triangle;
using testgen::segment_vector;
using testgen::triangle_values;

TEST_CASE("validate_complex basics") {
    LefschetzComplex single;
    single.add_cell(0, "pt");
    CHECK(validate_complex(single).valid());

    CHECK(validate_complex(hollow_triangle()).valid());

    // edge with a single endpoint under a 2-cell: boundary of boundary is odd
    LefschetzComplex bad;
    CellId a = bad.add_cell(0, "a");
    CellId ab = bad.add_cell(1, "ab");
    CellId T = bad.add_cell(2, "T");
    bad.add_boundary(a, ab);
    bad.add_boundary(ab, T);
    ComplexReport rep = validate_complex(bad);
    REQUIRE_FALSE(rep.valid());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.kind == ComplexViolation::square_nonzero && v.a == a && v.b == T) found = true;
    CHECK(found);
}

TEST_CASE("validate_dmf basics") {
    LefschetzComplex X = hollow_triangle();
    CHECK(validate_dmf(X, triangle_values()).valid());

    DiscreteMorseFunction bad = triangle_values();
    bad.values[3] = 0;  // ab below its endpoint b
    DmfReport rep = validate_dmf(X, bad);
    REQUIRE_FALSE(rep.valid());
    CHECK(rep.violations[0].kind == DmfViolation::weak_monotonicity);
    CHECK(rep.violations[0].a == 1);
    CHECK(rep.violations[0].b == 3);

    DiscreteMorseFunction triple = triangle_values();
    triple.values[0] = triple.values[1] = triple.values[2] = 7;
    bool almost = false;
    for (const auto& v : validate_dmf(X, triple).violations)
        if (v.kind == DmfViolation::almost_injective) almost = true;
    CHECK(almost);
}

TEST_CASE("induced_vector_field") {
    auto inst = segment_vector();
    CombinatorialVectorField V = induced_vector_field(inst.X, inst.h);
    CHECK(V.partner[0] == kNoCell);
    CHECK(V.partner[1] == 2);
    CHECK(V.partner[2] == 1);
    CHECK(V.criticals() == std::vector<CellId>{0});
    CHECK(V.vectors(inst.X) == std::vector<std::pair<CellId, CellId>>{{1, 2}});

    LefschetzComplex X = hollow_triangle();
    CombinatorialVectorField W = induced_vector_field(X, triangle_values());
    CHECK(W.criticals().size() == 6);  // injective values: everything critical
}

TEST_CASE("induced_partition") {
    LefschetzComplex X = hollow_triangle();
    auto parts = induced_partition(X, triangle_values().values);
    CHECK(parts.size() == 6);

    std::vector<double> constant(6, 1.0);
    CHECK(induced_partition(X, constant).size() == 1);

    LefschetzComplex two;
    CellId a = two.add_cell(0, "a"), b = two.add_cell(0, "b");
    CellId c = two.add_cell(0, "c"), d = two.add_cell(0, "d");
    CellId e1 = two.add_cell(1, "e1"), e2 = two.add_cell(1, "e2");
    two.add_boundary(a, e1);
    two.add_boundary(b, e1);
    two.add_boundary(c, e2);
    two.add_boundary(d, e2);
    CHECK(induced_partition(two, std::vector<double>(6, 3.0)).size() == 2);
}

TEST_CASE("count_paths on the hollow triangle") {
    LefschetzComplex X = hollow_triangle();
    // vectors (b,ab), (c,bc); criticals a, ca
    DiscreteMorseFunction h;
    h.values = {0, 1, 2, 1, 2, 5};
    CombinatorialVectorField V = induced_vector_field(X, h);
    REQUIRE(V.partner[1] == 3);
    REQUIRE(V.partner[2] == 4);

    PathCount self = count_paths(X, V, 5, 5, 8);
    CHECK(self.count == 1);
    CHECK(self.parity == 1);

    PathCount pc = count_paths(X, V, 5, 0, 8);  // ca down to a, both ways around
    CHECK(pc.count == 2);
    CHECK(pc.parity == 0);

    PathCount capped = count_paths(X, V, 5, 0, 2);
    CHECK(capped.count == 2);
    CHECK_FALSE(capped.unique());

    auto listed = oracle::brute_paths(X, V, 5, 0);
    CHECK(listed.size() == 2);
}

TEST_CASE("morse_complex") {
    LefschetzComplex X = hollow_triangle();
    CombinatorialVectorField all_crit;
    all_crit.partner.assign(6, kNoCell);
    MorseComplex M = morse_complex(X, all_crit);
    CHECK(M.complex.size() == 6);
    for (const Cell& c : X.cells())
        for (CellId f : X.facets(c.id))
            CHECK(M.complex.has_boundary(M.to_morse[f], M.to_morse[c.id]));

    auto seg = segment_vector();
    CombinatorialVectorField V = induced_vector_field(seg.X, seg.h);
    MorseComplex Mseg = morse_complex(seg.X, V);
    CHECK(Mseg.complex.size() == 1);
    CHECK(Mseg.complex.dim(0) == 0);

    DiscreteMorseFunction h;
    h.values = {0, 1, 2, 1, 2, 5};
    CombinatorialVectorField W = induced_vector_field(X, h);
    MorseComplex Mt = morse_complex(X, W);
    CHECK(Mt.complex.size() == 2);
    // two paths from ca to a cancel over Z2
    CHECK(Mt.complex.facets(Mt.to_morse[5]).empty());
    CHECK(validate_complex(Mt.complex).valid());
}

TEST_CASE("reverse_path") {
    auto seg = segment_vector();
    CombinatorialVectorField all_crit;
    all_crit.partner.assign(3, kNoCell);
    // direct facet path e -> u
    GradientPath p{2, 0};
    CombinatorialVectorField W = reverse_path(seg.X, all_crit, p);
    CHECK(W.partner[0] == 2);
    CHECK(W.partner[2] == 0);
    CHECK(W.partner[1] == kNoCell);

    // reversing back along the flipped path restores the field
    CombinatorialVectorField back = reverse_path(seg.X, W, GradientPath{0, 2});
    CHECK(back == all_crit);
}

TEST_CASE("reverse_path along a zigzag") {
    // path graph u - v - w with edges uv, vw; vector (v, uv); reverse vw ~> u
    LefschetzComplex X;
    CellId u = X.add_cell(0, "u"), v = X.add_cell(0, "v"), w = X.add_cell(0, "w");
    CellId uv = X.add_cell(1, "uv"), vw = X.add_cell(1, "vw");
    X.add_boundary(u, uv);
    X.add_boundary(v, uv);
    X.add_boundary(v, vw);
    X.add_boundary(w, vw);
    CombinatorialVectorField V;
    V.partner.assign(5, kNoCell);
    V.partner[v] = uv;
    V.partner[uv] = v;
    REQUIRE(is_gradient(X, V));
    auto path = unique_path(X, V, vw, u);
    REQUIRE(path.has_value());
    CHECK(*path == GradientPath{vw, v, uv, u});
    CombinatorialVectorField W = reverse_path(X, V, *path);
    CHECK(W.partner[u] == uv);
    CHECK(W.partner[v] == vw);
    CHECK(is_gradient(X, W));
    CHECK(W.criticals() == std::vector<CellId>{w});
    // double reversal restores
    CombinatorialVectorField back = reverse_path(X, W, GradientPath{u, uv, v, vw});
    CHECK(back == V);
}

TEST_CASE("random fields are acyclic partitions; parity matches enumeration") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = testgen::random_instance(rng, 40);
        CombinatorialVectorField V = induced_vector_field(inst.X, inst.h);
        // partition: every cell critical or in exactly one vector
        for (CellId c = 0; c < inst.X.size(); ++c) {
            if (V.partner[c] != kNoCell) CHECK(V.partner[V.partner[c]] == c);
        }
        CHECK(is_gradient(inst.X, V));
        MorseComplex M = morse_complex(inst.X, V);
        CHECK(validate_complex(M.complex).valid());
        auto crit = V.criticals();
        for (CellId y : crit)
            for (CellId x : crit) {
                if (inst.X.dim(y) != inst.X.dim(x) + 1) continue;
                auto listed = oracle::brute_paths(inst.X, V, y, x);
                PathCount pc = count_paths(inst.X, V, y, x, 1u << 20);
                CHECK(pc.parity == static_cast<int>(listed.size() % 2));
                CHECK(pc.count == listed.size());
            }
    }
}

TEST_CASE("linear homotopy between same-field filters keeps the partition") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        auto inst = testgen::random_instance(rng, 40);
        DiscreteMorseFunction g = testgen::random_same_field(rng, inst.X, inst.h);
        CombinatorialVectorField V = induced_vector_field(inst.X, inst.h);
        REQUIRE(induced_vector_field(inst.X, g) == V);
        // partition classes of the interpolant = classes of V
        std::set<std::set<CellId>> expected;
        for (CellId c = 0; c < inst.X.size(); ++c) {
            std::set<CellId> cls{c};
            if (V.partner[c] != kNoCell) cls.insert(V.partner[c]);
            expected.insert(cls);
        }
        for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            std::vector<double> f(inst.X.size());
            for (CellId c = 0; c < inst.X.size(); ++c)
                f[c] = (1 - t) * inst.h.values[c] + t * g.values[c];
            std::set<std::set<CellId>> got;
            for (const auto& cls : induced_partition(inst.X, f))
                got.insert(std::set<CellId>(cls.begin(), cls.end()));
            CHECK(got == expected);
        }
    }
}
