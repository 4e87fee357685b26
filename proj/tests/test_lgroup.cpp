#include <doctest.h>

#include <random>
#include <set>

#include "cyclotwist/lgroup.hpp"

using namespace cyclotwist;

namespace {

// Closure by breadth-first multiplication; only for tiny groups.
std::size_t bfs_order(const std::vector<GlElement>& gens) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<GlElement> frontier{GlElement::identity(gens.front().k)};
    seen.insert(frontier.front().rows);
    while (!frontier.empty()) {
        std::vector<GlElement> next;
        for (const GlElement& g : frontier)
            for (const GlElement& s : gens) {
                GlElement h = g * s;
                if (seen.insert(h.rows).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

GlElement transvection(int k, int r, int c) {
    GlElement e = GlElement::identity(k);
    e.rows[r] |= std::uint32_t(1) << c;
    return e;
}

}  // namespace

TEST_CASE("BigUint arithmetic") {
    BigUint a(1);
    for (int i = 0; i < 5; ++i) a.mul_u64(1000000007ull);
    CHECK(a.to_string() == "1000000035000000490000003430000012005000016807");
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint::from_decimal("5348063769211699200") == [] {
        BigUint b(5348063769211699200ull);
        return b;
    }());
}

TEST_CASE("gl_order closed form") {
    CHECK(gl_order(1).to_string() == "1");
    CHECK(gl_order(2).to_string() == "6");
    CHECK(gl_order(3).to_string() == "168");
    CHECK(gl_order(8).to_string() == "5348063769211699200");
}

TEST_CASE("group order on small fixed groups") {
    CHECK(generated_group_order({GlElement::identity(3)}) == BigUint(1));
    CHECK(generated_group_order({transvection(2, 0, 1)}) == BigUint(2));

    // GL(2,2) from a transvection and the swap
    GlElement swap2 = GlElement::identity(2);
    std::swap(swap2.rows[0], swap2.rows[1]);
    CHECK(generated_group_order({transvection(2, 0, 1), swap2}) == BigUint(6));

    // GL(3,2) from a transvection and a cyclic shift
    GlElement cyc = GlElement::identity(3);
    cyc.rows = {2, 4, 1};
    std::vector<GlElement> gens3{transvection(3, 0, 1), cyc};
    CHECK(generated_group_order(gens3) == gl_order(3));
    CHECK(is_full_gl(gens3));
    CHECK(bfs_order(gens3) == 168);
}

TEST_CASE("order agrees with BFS closure on random small groups") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        int k = 3 + static_cast<int>(rng() % 2);
        std::vector<GlElement> gens;
        while (gens.size() < 2) {
            GlElement g = GlElement::identity(k);
            for (int r = 0; r < k; ++r) g.rows[r] = rng() & ((1u << k) - 1);
            try {
                (void)g.inverse();
            } catch (...) {
                continue;
            }
            gens.push_back(g);
        }
        BigUint fast = generated_group_order(gens);
        CHECK(fast == BigUint(bfs_order(gens)));
    }
}

TEST_CASE("order is invariant under conjugation and divides gl_order") {
    GlElement cyc = GlElement::identity(3);
    cyc.rows = {2, 4, 1};
    std::vector<GlElement> gens{transvection(3, 0, 1), cyc};
    BigUint base = generated_group_order(gens);

    GlElement conj = transvection(3, 1, 2);
    GlElement conj_inv = conj.inverse();
    std::vector<GlElement> conjugated;
    for (const GlElement& g : gens) conjugated.push_back(conj * g * conj_inv);
    CHECK(generated_group_order(conjugated) == base);

    // |G| divides |GL(3,2)| = 168 (Lagrange); check on the BFS value
    CHECK(168 % bfs_order(gens) == 0);
}

TEST_CASE("non-invertible generators are rejected") {
    GlElement bad = GlElement::identity(2);
    bad.rows[1] = bad.rows[0];
    CHECK_THROWS(generated_group_order({bad}));
}

TEST_CASE("pair group order on block-diagonal generators") {
    GlElement cyc = GlElement::identity(3);
    cyc.rows = {2, 4, 1};
    GlElement t = transvection(3, 0, 1);
    // pairs (g, g): diagonal subgroup, isomorphic to the single group
    BigUint diag = generated_pair_group_order({t, cyc}, {t, cyc});
    CHECK(diag == gl_order(3));
    // pairs (g, I): first factor only
    BigUint first = generated_pair_group_order({t, cyc},
                                               {GlElement::identity(3), GlElement::identity(3)});
    CHECK(first == gl_order(3));
}
