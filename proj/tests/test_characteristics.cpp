#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "thetaquartic/characteristics.hpp"
#include "thetaquartic/siegel.hpp"
#include "thetaquartic/symplectic.hpp"

using namespace thetaquartic;

namespace {

Characteristic ch(const char* s) { return Characteristic::parse(s); }

std::vector<Characteristic> odd3() { return enumerate(3, ParityFilter::Odd); }

}  // namespace

TEST_CASE("parse and format round trip") {
    for (const auto& m : enumerate(3)) CHECK(Characteristic::parse(m.to_string()) == m);
    CHECK(ch("101|010").top(0) == 1);
    CHECK(ch("101|010").top(1) == 0);
    CHECK(ch("101|010").bottom(1) == 1);
    CHECK(ch("1|1").genus() == 1);
    CHECK_THROWS_AS(ch("101010"), Error);
    CHECK_THROWS_AS(ch("10|010"), Error);
    CHECK_THROWS_AS(ch("102|010"), Error);
    CHECK_THROWS_AS(ch("|"), Error);
}

TEST_CASE("from_vectors reduces mod 2") {
    const int top[] = {3, -2, 1};
    const int bottom[] = {-1, 4, 2};
    CHECK(Characteristic::from_vectors(top, bottom) == ch("101|100"));
}

TEST_CASE("parity examples") {
    CHECK(parity(ch("000|000")) == 1);
    CHECK(parity(ch("110|100")) == -1);
    CHECK(parity(ch("111|101")) == 1);
}

TEST_CASE("addition examples") {
    CHECK(ch("100|100") + ch("100|100") == ch("000|000"));
    CHECK(ch("100|100") + ch("010|010") == ch("110|110"));
    CHECK(ch("111|101") + ch("000|000") == ch("111|101"));
    CHECK_THROWS_AS(ch("1|1") + ch("100|100"), Error);
}

TEST_CASE("parity is a quadratic form whose polarization is the pairing") {
    // e(a + b) = e(a) e(b) (-1)^{a'.b'' + a''.b'} for all 64 x 64 pairs.
    for (const auto& a : enumerate(3))
        for (const auto& b : enumerate(3)) {
            int cross = 0;
            for (int i = 0; i < 3; ++i) cross += a.top(i) * b.bottom(i) + a.bottom(i) * b.top(i);
            const int expected = parity(a) * parity(b) * (cross % 2 == 0 ? 1 : -1);
            REQUIRE(parity(a + b) == expected);
            REQUIRE(pairing_sign(a, b) == (cross % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate(3, ParityFilter::Even).size() == 36);
    CHECK(enumerate(3, ParityFilter::Odd).size() == 28);
    CHECK(enumerate(3, ParityFilter::All).size() == 64);
    for (int g = 1; g <= 4; ++g) {
        const std::size_t half = std::size_t{1} << (g - 1);
        CHECK(enumerate(g, ParityFilter::Even).size() == half * ((std::size_t{1} << g) + 1));
        CHECK(enumerate(g, ParityFilter::Odd).size() == half * ((std::size_t{1} << g) - 1));
    }
    const auto odd1 = enumerate(1, ParityFilter::Odd);
    REQUIRE(odd1.size() == 1);
    CHECK(odd1[0] == ch("1|1"));
    const auto all = enumerate(3);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == ch("000|000"));
}

TEST_CASE("azygetic triple examples") {
    CHECK_FALSE(is_azygetic_triple(ch("100|100"), ch("010|010"), ch("001|001")));
    CHECK(is_azygetic_triple(ch("100|100"), ch("010|010"), ch("001|011")));
    CHECK_THROWS_AS(is_azygetic_triple(ch("100|100"), ch("100|100"), ch("001|011")), Error);
    CHECK_THROWS_AS(is_azygetic_triple(ch("1|1"), ch("100|100"), ch("001|011")), Error);
}

TEST_CASE("odd triple census") {
    const auto odd = odd3();
    int azygetic = 0;
    int syzygetic = 0;
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i + 1; j < odd.size(); ++j)
            for (std::size_t k = j + 1; k < odd.size(); ++k)
                (is_azygetic_triple(odd[i], odd[j], odd[k]) ? azygetic : syzygetic) += 1;
    CHECK(azygetic + syzygetic == 3276);
    CHECK(azygetic == 2016);
    CHECK(syzygetic == 1260);
}

TEST_CASE("azygetic tuples") {
    const Characteristic a = ch("100|100");
    const Characteristic b = ch("010|010");
    const Characteristic c = ch("001|011");
    const std::array<Characteristic, 3> triple{a, b, c};
    CHECK(is_azygetic_tuple(triple));
    // Add a fourth element making (a, b, d) syzygetic.
    const std::array<Characteristic, 4> four{a, b, c, ch("001|001")};
    CHECK_FALSE(is_azygetic_tuple(four));
}

TEST_CASE("Aronhold sets: count and brute-force oracle") {
    const auto sets = enumerate_aronhold_sets();
    REQUIRE(sets.size() == 288);

    const auto odd = odd3();
    std::set<std::array<Characteristic, 7>> seen;
    for (const auto& s : sets) {
        for (const auto& n : s.members) CHECK(is_odd(n));
        CHECK(is_even(s.sum));
        Characteristic total = Characteristic::zero(3);
        for (const auto& n : s.members) total = total + n;
        CHECK(total == s.sum);
        CHECK(is_aronhold_set(s.members));

        // Every sub-triple of the eight-tuple (n1..n7, sum) is azygetic.
        std::vector<Characteristic> eight(s.members.begin(), s.members.end());
        eight.push_back(s.sum);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j)
                for (std::size_t k = j + 1; k < 8; ++k) REQUIRE(is_azygetic_triple(eight[i], eight[j], eight[k]));

        auto sorted = s.members;
        std::sort(sorted.begin(), sorted.end());
        CHECK(seen.insert(sorted).second);
    }

    // Independent count: azygetic 7-subsets of the odd characteristics, by
    // plain filtering without the library's pruning.
    std::size_t brute = 0;
    std::vector<Characteristic> chosen;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == 7) {
            ++brute;
            return;
        }
        for (std::size_t i = start; i < odd.size(); ++i) {
            bool ok = true;
            for (std::size_t a = 0; a < chosen.size() && ok; ++a)
                for (std::size_t b = a + 1; b < chosen.size() && ok; ++b)
                    ok = is_azygetic_triple(chosen[a], chosen[b], odd[i]);
            if (!ok) continue;
            chosen.push_back(odd[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    CHECK(brute == 288);
}

TEST_CASE("Aronhold sets for every ordered even pair") {
    const auto even = enumerate(3, ParityFilter::Even);
    int found = 0;
    for (const auto& m1 : even)
        for (const auto& m2 : even) {
            if (m1 == m2) continue;
            const AronholdSet s = aronhold_for_pair(m1, m2);
            REQUIRE(is_aronhold_set(s.members));
            REQUIRE(s.sum == m1);
            REQUIRE(s.members[0] + s.members[1] + s.members[2] == m2);
            ++found;
        }
    CHECK(found == 36 * 35);
    CHECK_THROWS_AS(aronhold_for_pair(even[0], even[0]), Error);
    CHECK_THROWS_AS(aronhold_for_pair(ch("100|100"), even[0]), Error);
    CHECK_THROWS_AS(aronhold_for_pair(even[0], ch("100|100")), Error);
}

TEST_CASE("aronhold_sets_for_pair respects its limit") {
    const auto even = enumerate(3, ParityFilter::Even);
    const auto few = aronhold_sets_for_pair(even[0], even[1], 3);
    CHECK(few.size() == 3);
    const auto many = aronhold_sets_for_pair(even[0], even[1], 1000);
    CHECK(many.size() >= 3);
    CHECK(std::equal(few.begin(), few.end(), many.begin()));
}

TEST_CASE("completed labels cover all odd characteristics") {
    for (const auto& s : enumerate_aronhold_sets()) {
        const auto labels = complete_aronhold_labels(s);
        REQUIRE(labels.size() == 21);
        std::set<Characteristic> all(s.members.begin(), s.members.end());
        for (const auto& [ij, n] : labels) {
            CHECK(ij.first < ij.second);
            CHECK(is_odd(n));
            all.insert(n);
            CHECK(n == s.sum + s.members[static_cast<std::size_t>(ij.first)] +
                           s.members[static_cast<std::size_t>(ij.second)]);
        }
        REQUIRE(all.size() == 28);
    }
}

TEST_CASE("is_aronhold_set rejects non-sets") {
    const auto s = enumerate_aronhold_sets().front();
    auto broken = s.members;
    broken[6] = broken[5];
    CHECK_FALSE(is_aronhold_set(broken));
    const std::array<Characteristic, 3> short_tuple{s.members[0], s.members[1], s.members[2]};
    CHECK_FALSE(is_aronhold_set(short_tuple));
}

TEST_CASE("modular action on characteristics") {
    const auto all = enumerate(3);
    for (const auto& m : all) CHECK(gamma_act_char(SymplecticMatrix::identity(3), m) == SignedCharacteristic{m, 1});

    std::mt19937_64 rng(11);
    const auto gens = generators(3);
    const auto level2 = level2_generators(3);
    for (int trial = 0; trial < 20; ++trial) {
        const SymplecticMatrix g = random_word(gens, 12, rng);
        const SymplecticMatrix h = random_word(gens, 12, rng);
        std::set<Characteristic> image;
        for (const auto& m : all) {
            const auto gm = gamma_act_char(g, m);
            image.insert(gm.ch);
            CHECK(parity(gm.ch) == parity(m));
            // Composition: (gh).m = g.(h.m) on the characteristic component.
            CHECK(gamma_act_char(g * h, m).ch == gamma_act_char(g, gamma_act_char(h, m).ch).ch);
        }
        CHECK(image.size() == 64);

        const SymplecticMatrix w = random_word(level2, 6, rng);
        for (const auto& m : all) CHECK(gamma_act_char(w, m).ch == m);
    }
}

TEST_CASE("J swaps the halves of a characteristic") {
    const SymplecticMatrix j = SymplecticMatrix::standard_j(3);
    for (const auto& m : enumerate(3)) {
        const auto jm = gamma_act_char(j, m);
        CHECK(jm.ch.top_bits() == m.bottom_bits());
        CHECK(jm.ch.bottom_bits() == m.top_bits());
    }
}
