#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tci/fan.hpp"

using namespace tci;

static IVec iv(std::initializer_list<long long> xs) {
    IVec v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

static Fan p3_fan() {
    std::vector<IVec> rays = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}),
                              iv({-1, -1, -1})};
    return make_fan(3, rays, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

static Fan p1xp1_fan() {
    std::vector<IVec> rays = {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})};
    return make_fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

static Fan p2_fan() {
    std::vector<IVec> rays = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
    return make_fan(2, rays, {{0, 1}, {1, 2}, {2, 0}});
}

// five rays at heights +-1, the apex ray subdividing the upper cone
static Fan height_split_fan() {
    std::vector<IVec> rays = {iv({-2, -2, 1}), iv({2, 0, 1}), iv({0, 2, 1}),
                              iv({0, 0, 1}), iv({0, 0, -1})};
    return make_fan(3, rays,
                    {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}});
}

TEST_CASE("projective space fan validates and is complete") {
    Fan f = p3_fan();
    REQUIRE(f.cones.size() == 4);
    REQUIRE(is_complete(f));
    REQUIRE(all_cones(f).size() == 15);  // 1 + 4 + 6 + 4
    REQUIRE(irrelevant_locus_dimension(f) == 0);
}

TEST_CASE("height-split fan validates and is complete") {
    Fan f = height_split_fan();
    REQUIRE(is_complete(f));
    REQUIRE(all_cones(f).size() == 21);  // 1 + 5 + 9 + 6
}

TEST_CASE("affine fans are not complete") {
    Fan f = make_fan(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {{0, 1, 2}});
    REQUIRE_FALSE(is_complete(f));
    REQUIRE(irrelevant_locus_dimension(f) == -1);
}

TEST_CASE("fan validation rejects bad input") {
    REQUIRE_THROWS_AS(make_fan(2, {iv({2, 0}), iv({0, 1})}, {{0, 1}}), MathError);
    REQUIRE_THROWS_AS(make_fan(2, {iv({1, 0}), iv({1, 0})}, {{0}, {1}}), MathError);
    REQUIRE_THROWS_AS(
        make_fan(2, {iv({1, 0}), iv({1, 1}), iv({0, 1})}, {{0, 1, 2}}), MathError);
    REQUIRE_THROWS_AS(
        make_fan(2, {iv({1, 0}), iv({1, 2}), iv({1, 1}), iv({0, 1})}, {{0, 1}, {2, 3}}),
        MathError);
    REQUIRE_THROWS_AS(make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}, {0}}), MathError);
}

TEST_CASE("class group of projective space") {
    CoxData d = cox_data(p3_fan());
    REQUIRE(d.cl.free_rank == 1);
    REQUIRE(d.cl.torsion.empty());
    for (int i = 1; i < 4; ++i) REQUIRE(d.weights[i] == d.weights[0]);
    REQUIRE((d.weights[0].free[0] == 1 || d.weights[0].free[0] == -1));
}

TEST_CASE("class group of the height-split fan") {
    CoxData d = cox_data(height_split_fan());
    REQUIRE(d.cl.free_rank == 2);
    REQUIRE(d.cl.torsion == std::vector<Int>{Int(2), Int(2)});
}

TEST_CASE("class group of a product of lines") {
    Fan f = p1xp1_fan();
    CoxData d = cox_data(f);
    REQUIRE(d.cl.free_rank == 2);
    REQUIRE(d.cl.torsion.empty());
    REQUIRE(d.weights[0] == d.weights[2]);
    REQUIRE(d.weights[1] == d.weights[3]);
    REQUIRE_FALSE(d.weights[0] == d.weights[1]);
    REQUIRE(irrelevant_locus_dimension(f) == 2);
}

TEST_CASE("section polytopes through ray data") {
    Fan f = p3_fan();
    auto B = divisorial_polytope(f.rays, iv({1, 1, 1, 1}));
    REQUIRE(B);
    REQUIRE(lattice_point_count(*B) == 35);
    REQUIRE_FALSE(divisorial_polytope(f.rays, iv({-1, 0, 0, 0})).has_value());

    std::vector<IVec> wrays = {iv({1, 0, 0}), iv({-1, 1, 0}), iv({0, -1, 2}),
                               iv({0, 0, -1})};
    auto W = divisorial_polytope(wrays, iv({2, 0, 0, 0}));
    REQUIRE(W);
    REQUIRE(lattice_point_count(*W) == 7);
}

TEST_CASE("normal quasifan of a full-dimensional polytope") {
    Polytope sq = convex_hull(2, std::vector<IVec>{iv({1, 1}), iv({1, -1}), iv({-1, 1}),
                                                   iv({-1, -1})});
    Quasifan q = normal_quasifan(sq);
    REQUIRE(q.covering);
    REQUIRE(q.lineality.empty());
    REQUIRE(q.maximal.size() == 4);
    REQUIRE(q.cones.size() == 9);  // 4 vertices, 4 edges, the whole square
    REQUIRE(refines(p1xp1_fan(), q));
    REQUIRE_FALSE(refines(p2_fan(), q));

    std::vector<IVec> rays = {iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({-1, 0}),
                              iv({0, -1})};
    Fan split = make_fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    REQUIRE(refines(split, q));

    Fan quadrant = make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
    REQUIRE_FALSE(refines(quadrant, q));
}

TEST_CASE("normal quasifan of lower-dimensional polytopes") {
    Polytope seg = convex_hull(2, std::vector<IVec>{iv({0, 0}), iv({1, 0})});
    Quasifan q = normal_quasifan(seg);
    REQUIRE(q.lineality.size() == 1);
    REQUIRE(q.maximal.size() == 2);
    REQUIRE(refines(p1xp1_fan(), q));
    REQUIRE_FALSE(refines(p2_fan(), q));

    Polytope pt = convex_hull(2, std::vector<IVec>{iv({3, 5})});
    Quasifan qp = normal_quasifan(pt);
    REQUIRE(qp.lineality.size() == 2);
    REQUIRE(refines(p2_fan(), qp));
    REQUIRE(refines(p1xp1_fan(), qp));
}

TEST_CASE("face dimension pairs with normal cone dimension") {
    std::mt19937 rng(2214);
    std::uniform_int_distribution<int> dim_pick(1, 3), coord(-4, 4), count(2, 7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = dim_pick(rng);
        std::vector<IVec> pts;
        for (int k = count(rng); k > 0; --k) {
            IVec p(n);
            for (int i = 0; i < n; ++i) p[i] = coord(rng);
            pts.push_back(p);
        }
        Polytope B = convex_hull(n, pts);
        Quasifan q = normal_quasifan(B);
        std::vector<PolytopeFace> fs = all_faces(B);
        REQUIRE(fs.size() == q.cones.size());
        for (size_t k = 0; k < fs.size(); ++k)
            REQUIRE(fs[k].dim + q.cones[k].dim == n);
        // support vectors select their faces
        for (const PolytopeFace& F : fs) {
            Polytope sel = face_at(B, F.support);
            REQUIRE(sel == face_polytope(B, F));
        }
        // covering: every probe lies in some maximal cone; interior probes in one
        std::uniform_int_distribution<int> pc(-5, 5);
        for (int probe = 0; probe < 20; ++probe) {
            IVec x(n);
            for (int i = 0; i < n; ++i) x[i] = pc(rng);
            int hits = 0;
            bool boundary = false;
            for (int l : q.maximal)
                if (q.cones[l].contains(x)) {
                    ++hits;
                    for (const IVec& h : q.cones[l].hrep)
                        if (dot(h, x) == 0) boundary = true;
                }
            REQUIRE(hits >= 1);
            if (hits > 1) REQUIRE(boundary);
        }
    }
}

TEST_CASE("quasifan refinement between quasifans") {
    Polytope sq = convex_hull(2, std::vector<IVec>{iv({1, 1}), iv({1, -1}), iv({-1, 1}),
                                                   iv({-1, -1})});
    Polytope dia = convex_hull(2, std::vector<IVec>{iv({1, 0}), iv({0, 1}), iv({-1, 0}),
                                                    iv({0, -1})});
    Quasifan qs = normal_quasifan(sq);
    Quasifan qd = normal_quasifan(dia);
    // sum's normal quasifan refines both factors'
    Quasifan qsum = normal_quasifan(minkowski_sum(sq, dia));
    REQUIRE(refines(qsum, qs));
    REQUIRE(refines(qsum, qd));
    REQUIRE_FALSE(refines(qs, qd));
    REQUIRE_FALSE(refines(qd, qs));
    REQUIRE(refines(as_quasifan(p1xp1_fan()), qs));
    REQUIRE_FALSE(refines(as_quasifan(p2_fan()), qs));
    Fan quadrant = make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
    REQUIRE_FALSE(refines(as_quasifan(quadrant), qs));
    REQUIRE_THROWS_AS(refines(as_quasifan(p2_fan()), as_quasifan(quadrant)), GuardError);
}

TEST_CASE("fan reports") {
    FanReport rep = validate_fan(p3_fan());
    REQUIRE(rep.complete);
    REQUIRE(rep.simplicial);
    Fan quadrant = make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
    rep = validate_fan(quadrant);
    REQUIRE_FALSE(rep.complete);
    REQUIRE(rep.simplicial);
    // square-based cone over the apex: complete but not simplicial
    std::vector<IVec> rays = {iv({1, 1, 1}), iv({-1, 1, 1}), iv({-1, -1, 1}),
                              iv({1, -1, 1}), iv({0, 0, -1})};
    Fan pyramid = make_fan(3, rays,
                           {{0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}});
    rep = validate_fan(pyramid);
    REQUIRE(rep.complete);
    REQUIRE_FALSE(rep.simplicial);
}

TEST_CASE("degree map kills the ray matrix") {
    for (const Fan& f : {p3_fan(), p1xp1_fan(), p2_fan(), height_split_fan()}) {
        CoxData cd = cox_data(f);
        IMat Pt = f.ray_matrix().transposed();
        for (int c = 0; c < Pt.cols; ++c) {
            GroupElement img = cd.pres.projection(Pt.col(c));
            REQUIRE(img.is_zero());
        }
    }
}

TEST_CASE("weighted projective plane class data") {
    std::vector<IVec> rays = {iv({1, 0}), iv({0, 1}), iv({-1, -2})};
    CoxData cd = cox_data(rays);
    REQUIRE(cd.cl.free_rank == 1);
    REQUIRE(cd.cl.torsion.empty());
    std::vector<Int> xs;
    for (const GroupElement& w : cd.weights) xs.push_back(abs(w.free[0]));
    std::sort(xs.begin(), xs.end());
    REQUIRE(xs == std::vector<Int>{1, 1, 2});
}

TEST_CASE("class data needs spanning rays") {
    // both rays on a line: a torus factor splits off
    REQUIRE_THROWS_AS(cox_data(std::vector<IVec>{iv({1, 0}), iv({-1, 0})}), MathError);
}
