#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "f0f2/kontsevich.hpp"

using namespace f0f2;

TEST_CASE("phi coefficients at hand-checked splits") {
    // F0 recursion at (a,b) = (1,0): both splits contribute 1.
    CHECK(phi0(0, 1, 1, -1, 1, 0) == 1);
    CHECK(phi0(1, -1, 0, 1, 1, 0) == 1);
    // The mixed factor a1*b2 + a2*b1 + 2*a1*a2 vanishes when a1 = a2 = 0.
    CHECK(phi0(0, 2, 0, 3, 0, 5) == 0);
    CHECK(phi21(0, 1, 0, 2, 0, 3) == 0);

    // F2 string correction at (1,0): splits of (0,2).
    CHECK(phi22(0, 1, 0, 1, 1, 0) == 2);
    CHECK(phi22(0, 0, 0, 2, 1, 0) == 0); // factor b1*b2
    CHECK(phi22(1, 2, 0, 0, 2, 0) == 0);
}

TEST_CASE("genus-0 F2 recursion") {
    CountTable table;
    CHECK(n0_f2(0, 1, &table) == 1); // base case
    CHECK(n0_f2(1, 0, &table) == 1); // one step: phi22(0,1,0,1)/2
    CHECK(n0_f2(1, 1, &table) == 1);
    CHECK(n0_f2(1, 2, &table) == 1);
    CHECK(n0_f2(2, 0, &table) == 10);
    CHECK(n0_f2(2, 1, &table) == 93);

    SUBCASE("zero extension and emergent zeros") {
        CHECK(n0_f2(3, -2, &table) == 0);
        CHECK_THROWS_AS(n0_f2(0, 0, &table), std::invalid_argument);
        for (int b = 2; b <= 6; ++b) CHECK(n0_f2(0, b, &table) == 0);
        CHECK(n0_f2(2, -1, &table) == 0);
    }
}

TEST_CASE("genus-0 F0 recursion") {
    CountTable table;
    CHECK(n0_f0(0, 1, &table) == 1);
    CHECK(n0_f0(1, 0, &table) == 1); // adopted transpose of the (0,1) base
    CHECK(n0_f0(1, 1, &table) == 1);
    CHECK(n0_f0(2, 2, &table) == 12);
    // Classical bidegree counts on P1 x P1.
    CHECK(n0_f0(2, 3, &table) == 96);
    CHECK(n0_f0(2, 4, &table) == 640);
    CHECK(n0_f0(3, 3, &table) == 3510);
    CHECK(n0_f0(0, 4, &table) == 0);
    CHECK(n0_f0(3, 0, &table) == 0);

    SUBCASE("transpose symmetry") {
        for (int a = 0; a <= 4; ++a)
            for (int c = a + 1; c <= 4; ++c) {
                if (a + c < 1) continue;
                CHECK(n0_f0(a, c, &table) == n0_f0(c, a, &table));
            }
    }
}

TEST_CASE("main identity at genus 0") {
    CountTable table;
    SUBCASE("the worked instance 12 = 10 + 2*1") {
        auto inst = main_identity_check_g0(2, 0, &table);
        CHECK(inst.pass);
        CHECK(inst.lhs == 12);
        CHECK(inst.terms.size() == 3);
        CHECK(inst.terms[0] == std::pair<Count, Count>{1, 10});
        CHECK(inst.terms[1] == std::pair<Count, Count>{2, 1});
        CHECK(inst.terms[2] == std::pair<Count, Count>{6, 0});
        CHECK(inst.witness == "12 = 10 + 2*1 + 6*0");
    }
    SUBCASE("the k=a summand carries the degenerate case") {
        auto inst = main_identity_check_g0(0, 1, &table);
        CHECK(inst.pass);
        CHECK(inst.lhs == 1);
        CHECK(inst.terms == std::vector<std::pair<Count, Count>>{{1, 1}});
    }
    SUBCASE("extended domain with negative b") {
        auto inst = main_identity_check_g0(1, -1, &table);
        CHECK(inst.pass);
        CHECK(inst.lhs == 1);
        for (int a = 0; a <= 4; ++a)
            for (int b = -a; b <= 5; ++b) {
                if (2 * a + b < 1) continue;
                CHECK(main_identity_check_g0(a, b, &table).pass);
            }
    }
    SUBCASE("a=1 collapses to equality of the two surfaces") {
        for (int b = 0; b <= 5; ++b) {
            auto inst = main_identity_check_g0(1, b, &table);
            CHECK(inst.pass);
            CHECK(inst.lhs == n0_f2(1, b, &table));
        }
    }
}

TEST_CASE("count table persistence") {
    namespace fs = std::filesystem;
    fs::path file = fs::temp_directory_path() / "f0f2_cache_test.bin";

    CountTable table;
    n0_f2(3, 2, &table);
    n0_f0(3, 3, &table);
    size_t entries = table.size();
    CHECK(entries > 0);
    table.save(file);

    SUBCASE("reload gives identical values") {
        CountTable fresh;
        fresh.load(file);
        CHECK(fresh.size() == entries);
        CHECK(n0_f2(3, 2, &fresh) == n0_f2(3, 2, &table));
    }

    SUBCASE("paranoid mode recomputes and accepts a consistent cache") {
        CountTable paranoid;
        paranoid.load(file);
        paranoid.set_paranoid(true);
        CHECK(n0_f2(3, 2, &paranoid) == n0_f2(3, 2, &table));
        CHECK(paranoid.mismatches_detected() == 0);
    }

    SUBCASE("paranoid mode rejects a corrupted cache") {
        CountTable bogus;
        bogus.insert({Surface::F2, 2, 0, 0, true}, 11); // wrong on purpose
        fs::path bad = fs::temp_directory_path() / "f0f2_cache_bad.bin";
        bogus.save(bad);
        CountTable victim;
        victim.load(bad);
        victim.set_paranoid(true);
        CHECK_THROWS_AS(n0_f2(2, 0, &victim), std::logic_error);
        fs::remove(bad);
    }

    SUBCASE("bad magic is rejected") {
        fs::path bad = fs::temp_directory_path() / "f0f2_cache_magic.bin";
        std::FILE* f = std::fopen(bad.c_str(), "wb");
        std::fputs("NOTF0F2!", f);
        std::fclose(f);
        CountTable t;
        CHECK_THROWS_AS(t.load(bad), std::runtime_error);
        fs::remove(bad);
    }

    fs::remove(file);
}

TEST_CASE("recursion results do not depend on memo priming") {
    CountTable a;
    Count direct = n0_f2(3, 1, &a);
    CountTable b;
    n0_f2(1, 4, &b); // prime with unrelated keys
    n0_f0(2, 2, &b);
    CHECK(n0_f2(3, 1, &b) == direct);
    CHECK(n0_f2(3, 1) == direct); // fresh local table
}
