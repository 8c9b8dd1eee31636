#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tci/cone.hpp"

using namespace tci;

static IVec iv(std::initializer_list<long long> xs) {
    IVec v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

TEST_CASE("dual rays of the positive orthant") {
    auto rays = dual_rays(IMat::identity(3));
    REQUIRE(rays == std::vector<IVec>{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, 0, 0})});
}

TEST_CASE("dual rays of a plane wedge") {
    // x >= 0, x + 2y >= 0
    auto rays = dual_rays(IMat{{1, 0}, {1, 2}});
    REQUIRE(rays == std::vector<IVec>{iv({0, 1}), iv({2, -1})});
}

TEST_CASE("dual rays of the cone over a square") {
    // z >= |x|, z >= |y|: four facets, four rays, degenerate adjacency
    IMat A{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
    auto rays = dual_rays(A);
    std::vector<IVec> expect = {iv({-1, -1, 1}), iv({-1, 1, 1}), iv({1, -1, 1}),
                                iv({1, 1, 1})};
    REQUIRE(rays == expect);
}

TEST_CASE("dual rays are permutation invariant") {
    IMat A{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}, {1, 1, 3}};
    IMat B{{0, -1, 1}, {1, 1, 3}, {1, 0, 1}, {0, 1, 1}, {-1, 0, 1}};
    REQUIRE(dual_rays(A) == dual_rays(B));
}

TEST_CASE("double description randomized double-dual check") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> dim(2, 4), rows(2, 6), entry(-3, 3), pt(-6, 6);
    int done = 0;
    while (done < 300) {
        int d = dim(rng), m = rows(rng);
        IMat A(m, d);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < d; ++j) A(i, j) = entry(rng);
        if (rank(A) != d) continue;  // keep the cone pointed
        ++done;
        auto rays = dual_rays(A);
        for (const IVec& r : rays) {
            std::vector<IVec> tight;
            for (int i = 0; i < m; ++i) {
                Int s = dot(A.row(i), r);
                REQUIRE(s >= 0);
                if (s == 0) tight.push_back(A.row(i));
            }
            REQUIRE(rank_of_vectors(tight) == d - 1);  // extremality certificate
        }
        Cone c = make_cone(d, rays);
        for (int t = 0; t < 40; ++t) {
            IVec x(d);
            for (int j = 0; j < d; ++j) x[j] = pt(rng);
            bool in_h = true;
            for (int i = 0; i < m; ++i)
                if (dot(A.row(i), x) < 0) { in_h = false; break; }
            REQUIRE(c.contains(x) == in_h);
        }
    }
}

TEST_CASE("make_cone drops non-extreme generators") {
    Cone c = make_cone(2, {iv({1, 0}), iv({1, 1}), iv({1, 2})});
    REQUIRE(c.rays == std::vector<IVec>{iv({1, 0}), iv({1, 2})});
    REQUIRE(c.dim == 2);
    REQUIRE(c.equations.empty());
    REQUIRE(c.facets.size() == 2);
    REQUIRE(c.contains(iv({1, 1})));
    REQUIRE(c.contains(iv({3, 6})));
    REQUIRE_FALSE(c.contains(iv({-1, 0})));
    REQUIRE_FALSE(c.contains(iv({1, 3})));
}

TEST_CASE("make_cone normalizes generator scaling and order") {
    Cone a = make_cone(3, {iv({1, 1, 1}), iv({-1, 1, 1}), iv({1, -1, 1}), iv({-1, -1, 1})});
    Cone b = make_cone(3, {iv({-3, -3, 3}), iv({2, 2, 2}), iv({-1, 1, 1}), iv({5, -5, 5})});
    REQUIRE(a == b);
    REQUIRE(a.rays.size() == 4);
    REQUIRE(a.dim == 3);
}

TEST_CASE("lower-dimensional cone carries span equations") {
    Cone c = make_cone(3, {iv({1, 0, 0}), iv({1, 1, 0})});
    REQUIRE(c.dim == 2);
    REQUIRE(c.equations.size() == 1);
    REQUIRE(c.contains(iv({2, 1, 0})));
    REQUIRE(c.contains(iv({1, 1, 0})));
    REQUIRE_FALSE(c.contains(iv({1, 2, 0})));
    REQUIRE_FALSE(c.contains(iv({1, 0, 1})));
}

TEST_CASE("non-pointed generators are rejected") {
    REQUIRE_THROWS_AS(make_cone(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})}), MathError);
}

TEST_CASE("zero cone") {
    Cone z = make_cone(3, {});
    REQUIRE(z.dim == 0);
    REQUIRE(z.rays.empty());
    REQUIRE(z.contains(iv({0, 0, 0})));
    REQUIRE_FALSE(z.contains(iv({1, 0, 0})));
    REQUIRE(faces(z).size() == 1);
}

TEST_CASE("faces of the orthant") {
    Cone c = make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    auto fs = faces(c);
    REQUIRE(fs.size() == 8);
    int by_dim[4] = {0, 0, 0, 0};
    for (const Cone& f : fs) {
        ++by_dim[f.dim];
        REQUIRE(is_face_of(f, c));
    }
    REQUIRE(by_dim[0] == 1);
    REQUIRE(by_dim[1] == 3);
    REQUIRE(by_dim[2] == 3);
    REQUIRE(by_dim[3] == 1);
}

TEST_CASE("faces of the cone over a square") {
    Cone c = make_cone(3, {iv({1, 1, 1}), iv({-1, 1, 1}), iv({1, -1, 1}), iv({-1, -1, 1})});
    auto fs = faces(c);
    REQUIRE(fs.size() == 10);  // 1 + 4 + 4 + 1
}

TEST_CASE("a contained ray through the interior is not a face") {
    Cone c = make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    Cone diag = make_cone(3, {iv({1, 1, 0})});
    REQUIRE(c.contains(diag));
    REQUIRE_FALSE(is_face_of(diag, c));
}

TEST_CASE("face_containing picks the minimal face") {
    Cone c = make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    REQUIRE(face_containing(c, iv({1, 1, 0})) ==
            make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0})}));
    REQUIRE(face_containing(c, iv({0, 0, 0})).dim == 0);
    REQUIRE(face_containing(c, iv({1, 2, 3})) == c);
    REQUIRE_THROWS_AS(face_containing(c, iv({-1, 0, 0})), MathError);
}

TEST_CASE("cone intersections") {
    Cone orthant = make_cone(2, {iv({1, 0}), iv({0, 1})});
    Cone wedge = make_cone(2, {iv({1, 1}), iv({-1, 1})});
    Cone meet = intersect(orthant, wedge);
    REQUIRE(meet == make_cone(2, {iv({0, 1}), iv({1, 1})}));

    Cone left = make_cone(2, {iv({0, 1}), iv({-1, 0})});
    REQUIRE(intersect(orthant, left) == make_cone(2, {iv({0, 1})}));

    Cone ex = make_cone(2, {iv({1, 0})});
    Cone ey = make_cone(2, {iv({0, 1})});
    REQUIRE(intersect(ex, ey).dim == 0);
}

TEST_CASE("supporting form levels") {
    Cone orthant = make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    auto lvl = minimal_integral_level(orthant);
    REQUIRE(lvl);
    REQUIRE(lvl->iota == 1);
    REQUIRE(lvl->m == iv({-1, -1, -1}));

    Cone half = make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})});
    auto l2 = minimal_integral_level(half);
    REQUIRE(l2);
    REQUIRE(l2->iota == 2);
    for (const IVec& r : half.rays) REQUIRE(dot(l2->m, r) == -2);
    SupportForm sf = gorenstein_form(half);
    REQUIRE(sf.index == 2);
    REQUIRE(sf.u == QVec{Rat(-1), Rat(-1), Rat(1) / Rat(2)});

    Cone third = make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 3})});
    auto l3 = minimal_integral_level(third);
    REQUIRE(l3);
    REQUIRE(l3->iota == 1);
    REQUIRE(l3->m == iv({-1, -1, -1}));
}

TEST_CASE("inconsistent support levels are detected") {
    Cone bad = make_cone(3, {iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, 0, 1}), iv({0, -1, 2})});
    REQUIRE(bad.rays.size() == 4);
    REQUIRE_FALSE(minimal_integral_level(bad));
    REQUIRE_THROWS_AS(gorenstein_form(bad), MathError);
}

TEST_CASE("simplicial multiplicity") {
    REQUIRE(make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}).multiplicity() == 1);
    REQUIRE(make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})}).multiplicity() == 2);
    REQUIRE(make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 3})}).multiplicity() == 3);
    REQUIRE(make_cone(2, {iv({1, 0}), iv({1, 2})}).multiplicity() == 2);
    Cone square = make_cone(3, {iv({1, 1, 1}), iv({-1, 1, 1}), iv({1, -1, 1}), iv({-1, -1, 1})});
    REQUIRE_THROWS_AS(square.multiplicity(), MathError);
}
