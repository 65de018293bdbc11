#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heartglue/upperset.hpp"

using namespace heartglue;

namespace {

// brute-force window membership comparison, the independent set-level oracle
bool same_on_window(const UpperSet2D& u, const UpperSet2D& v, Int r = 10) {
    for (Int n = -r; n <= r; ++n)
        for (Int m = -r; m <= r; ++m)
            if (u.contains(n, m) != v.contains(n, m)) return false;
    return true;
}

bool subset_on_window(const UpperSet2D& small, const UpperSet2D& big, Int r = 10) {
    for (Int n = -r; n <= r; ++n)
        for (Int m = -r; m <= r; ++m)
            if (small.contains(n, m) && !big.contains(n, m)) return false;
    return true;
}

UpperSet2D random_staircase(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> anchor(-4, 4), len(1, 6), start(-4, 4), drop(0, 2);
    std::uniform_int_distribution<Int> mode(0, 3), period(1, 3), shift_mag(0, 2);
    Boundary b;
    b.form = Boundary::Form::staircase;
    b.core.anchor = anchor(rng);
    Int v = start(rng);
    for (Int i = 0, k = len(rng); i < k; ++i) {
        b.core.values.push_back(v);
        v -= drop(rng);
    }
    Int n = static_cast<Int>(b.core.values.size());
    b.left_plus_inf = mode(rng) == 0;
    b.right_minus_inf = mode(rng) == 0;
    if (!b.left_plus_inf) {
        Int t = std::min(period(rng), n);
        b.core.left = {t, -shift_mag(rng)};
    }
    if (!b.right_minus_inf) {
        Int t = std::min(period(rng), n);
        b.core.right = {t, -shift_mag(rng)};
    }
    try {
        return UpperSet2D::from_boundary(b);
    } catch (const std::invalid_argument&) {
        return random_staircase(rng);
    }
}

const std::vector<Perversity>& sample_perversities() {
    static std::vector<Perversity> all = [] {
        std::vector<Perversity> v = enumerate_perversities(-2, 2, -2, 2);
        v.push_back(Perversity::zero());
        v.push_back(Perversity::identity());
        v.push_back(Perversity::middle());
        for (Int k = -2; k <= 2; ++k) v.push_back(Perversity::chi_upper(k));
        v.push_back(Perversity::pos_inf());
        v.push_back(Perversity::neg_inf());
        return v;
    }();
    return all;
}

}  // namespace

TEST_CASE("membership against the boundary") {
    Boundary b;
    b.form = Boundary::Form::staircase;
    b.core = {0, {0}, {1, 0}, {1, 0}};
    UpperSet2D u = UpperSet2D::from_boundary(b);
    CHECK(u.contains(3, 0));
    CHECK_FALSE(u.contains(3, -1));
    CHECK_FALSE(UpperSet2D::empty().contains(0, 0));
    CHECK(UpperSet2D::full().contains(-100, -100));
}

TEST_CASE("upward closure in the product order") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        UpperSet2D u = random_staircase(rng);
        for (Int n = -8; n <= 8; ++n)
            for (Int m = -8; m <= 8; ++m) {
                if (!u.contains(n, m)) continue;
                CHECK(u.contains(n + 1, m));
                CHECK(u.contains(n, m + 1));
            }
    }
}

TEST_CASE("rows and their graph") {
    std::vector<std::pair<Int, UpperSet1D>> rows;
    for (Int j = -3; j <= 3; ++j) rows.push_back({j, UpperSet1D::half_line(-j)});
    UpperSet2D u = from_rows(rows);
    for (Int j = -3; j <= 3; ++j) CHECK(u.row(j) == UpperSet1D::half_line(-j));

    std::vector<std::pair<Int, UpperSet1D>> constant;
    for (Int j = -3; j <= 3; ++j) constant.push_back({j, UpperSet1D::half_line(0)});
    UpperSet2D c = from_rows(constant);
    for (Int n = -10; n <= 10; ++n) CHECK(c.row(n) == UpperSet1D::half_line(0));

    // non-monotone input carries a witness
    std::vector<std::pair<Int, UpperSet1D>> bad = {{0, UpperSet1D::half_line(0)},
                                                   {1, UpperSet1D::half_line(2)}};
    CHECK_THROWS_AS(from_rows(bad), RowsError);

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        UpperSet2D u2 = random_staircase(rng);
        std::vector<std::pair<Int, UpperSet1D>> window;
        for (Int j = -10; j <= 10; ++j) window.push_back({j, u2.row(j)});
        UpperSet2D back = from_rows(window);
        CHECK(same_on_window(back, u2));  // identical inside the window
    }
}

TEST_CASE("kinkiness") {
    Boundary flat;
    flat.form = Boundary::Form::staircase;
    flat.core = {0, {0}, {1, 0}, {1, 0}};
    CHECK(UpperSet2D::from_boundary(flat).is_kinky());

    Boundary steep;
    steep.form = Boundary::Form::staircase;
    steep.core = {0, {0}, {1, -2}, {1, -2}};  // b(n) = -2n
    CHECK_FALSE(UpperSet2D::from_boundary(steep).is_kinky());

    CHECK(UpperSet2D::empty().is_kinky());
    CHECK(UpperSet2D::full().is_kinky());
    CHECK_FALSE(UpperSet2D::half_plane(0).is_kinky());

    for (const Perversity& p : sample_perversities()) CHECK(kinky_graph(p).is_kinky());
}

TEST_CASE("kinky cone characterizations by membership sampling") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        UpperSet2D u = random_staircase(rng);
        bool kink_sampled = true;
        for (Int n = -8; n <= 8; ++n)
            for (Int m = -8; m <= 8; ++m)
                if (u.contains(n, m) && !u.contains(n - 1, m + 1)) kink_sampled = false;
        if (u.is_kinky())
            CHECK(kink_sampled);
        else if (!kink_sampled)
            CHECK_FALSE(u.is_kinky());
    }
    for (const Perversity& p : sample_perversities()) {
        if (!p.is_finite()) continue;
        UpperSet2D g = kinky_graph(p);
        for (Int n = -6; n <= 6; ++n)
            for (Int m = -6; m <= 6; ++m) {
                if (!g.contains(n, m)) continue;
                CHECK(g.contains(n + 1, m));      // cone generator (1, 0)
                CHECK(g.contains(n - 1, m + 1));  // cone generator (-1, 1)
            }
    }
}

TEST_CASE("shear and its inverse") {
    // the kinky cone generator (-1, 1) maps to the vertical generator (0, 1)
    UpperSet2D g = kinky_graph(Perversity::identity());
    UpperSet2D img = phi_image(g);
    for (Int n = -8; n <= 8; ++n)
        for (Int m = -8; m <= 8; ++m)
            CHECK(img.contains(n, m) == g.contains(n - m, m));

    for (const Perversity& p : sample_perversities()) {
        UpperSet2D k = kinky_graph(p);
        CHECK(phi_preimage(phi_image(k)) == k);
    }

    // phi carries nontrivial kinky sets onto proper upper sets, and back
    std::mt19937_64 rng(37);
    int proper_count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        UpperSet2D u = random_staircase(rng);
        UpperSet2D k = phi_preimage(u);
        CHECK(k.is_kinky());
        CHECK(phi_image(k) == u);
        if (u.is_proper()) ++proper_count;
    }
    CHECK(proper_count > 0);
}

TEST_CASE("perversity to upper set") {
    CHECK(to_upperset(Perversity::zero()) == UpperSet2D::half_plane(0));
    for (Int n = -6; n <= 6; ++n)
        for (Int m = -6; m <= 6; ++m)
            CHECK(to_upperset(Perversity::identity()).contains(n, m) == (m >= 0));
    CHECK(to_upperset(Perversity::pos_inf()) == UpperSet2D::empty());
    CHECK(to_upperset(Perversity::neg_inf()) == UpperSet2D::full());

    // membership rule x >= p(x - y), on every sample
    for (const Perversity& p : sample_perversities()) {
        if (!p.is_finite()) continue;
        UpperSet2D u = to_upperset(p);
        for (Int x = -8; x <= 8; ++x)
            for (Int y = -8; y <= 8; ++y) CHECK(u.contains(x, y) == (x >= p(x - y)));
    }
}

TEST_CASE("upper set to perversity") {
    // {(n, n') : n' >= 1}
    Boundary one;
    one.form = Boundary::Form::staircase;
    one.core = {0, {1}, {1, 0}, {1, 0}};
    CHECK(to_perversity(UpperSet2D::from_boundary(one)) == Perversity::identity());
    // {(n, n') : n >= 1}
    CHECK(to_perversity(UpperSet2D::half_plane(1)) == Perversity::zero());
    CHECK(to_perversity(UpperSet2D::empty()) == Perversity::neg_inf());
    CHECK(to_perversity(UpperSet2D::full()) == Perversity::pos_inf());
}

TEST_CASE("round trips along both parametrizations") {
    for (const Perversity& p : sample_perversities()) {
        CHECK(to_perversity(to_upperset_op(p)) == p);
        CHECK(graph_inverse(to_upperset(p)) == p);
    }
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        UpperSet2D u = random_staircase(rng);
        CHECK(to_upperset_op(to_perversity(u)) == u);
        CHECK(to_upperset(graph_inverse(u)) == u);
    }
}

TEST_CASE("order reversal of the direct parametrization") {
    const auto& ps = sample_perversities();
    for (const Perversity& p : ps)
        for (const Perversity& q : ps) {
            Cmp c = compare(p, q);
            if (c == Cmp::less || c == Cmp::equal) {
                CHECK(includes(to_upperset(p), to_upperset(q)));
                CHECK(subset_on_window(to_upperset(q), to_upperset(p)));
                // the complement-opposite route preserves the order instead
                CHECK(includes(to_upperset_op(q), to_upperset_op(p)));
            }
            if (c == Cmp::incomparable) {
                bool both = includes(to_upperset(p), to_upperset(q)) &&
                            includes(to_upperset(q), to_upperset(p));
                CHECK_FALSE(both);
            }
        }
}

TEST_CASE("translations") {
    Boundary flat;
    flat.form = Boundary::Form::staircase;
    flat.core = {0, {0}, {1, 0}, {1, 0}};
    UpperSet2D u = UpperSet2D::from_boundary(flat);
    UpperSet2D north = u.act(Translation::north, 1);
    CHECK(north.contains(0, 1));
    CHECK_FALSE(north.contains(0, 0));

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        UpperSet2D v = random_staircase(rng);
        CHECK(v.act(Translation::northeast, 1).act(Translation::southwest, 1) == v);
        CHECK(v.act(Translation::northwest, 2) == v.translate(-2, 2));
    }

    // the value action transports to the northeastern translation
    for (const Perversity& p : sample_perversities())
        CHECK(to_upperset(act_plus(p, 1)) == to_upperset(p).act(Translation::northeast, 1));
}

TEST_CASE("inclusion agrees with window membership") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        UpperSet2D u = random_staircase(rng), v = random_staircase(rng);
        bool inc = includes(u, v);
        if (inc) CHECK(subset_on_window(v, u, 12));
        if (!subset_on_window(v, u, 12)) CHECK_FALSE(inc);
    }
}

TEST_CASE("ascii rendering") {
    std::string art = ascii_staircase(UpperSet2D::half_plane(0), -2, 2, -2, 2);
    CHECK(art == "..###\n..###\n..###\n..###\n..###\n");
    CHECK(ascii_staircase(UpperSet2D::empty(), -1, 1, -1, 1) == "...\n...\n...\n");
}
