#include <doctest.h>

#include "schub/composition.hpp"
#include "schub/permutation.hpp"
#include "schub/types.hpp"

using namespace schub;

TEST_CASE("permutations parse from digit strings and comma lists") {
    CHECK(Permutation::parse("41532") == Permutation({4, 1, 5, 3, 2}));
    CHECK(Permutation::parse("4,1,5,3,2") == Permutation({4, 1, 5, 3, 2}));
    Permutation big = Permutation::parse("10,1,2,3,4,5,6,7,8,9");
    CHECK(big.size() == 10);
    CHECK(Permutation::parse(big.to_string()) == big);
    CHECK(Permutation::parse("41532").to_string() == "41532");
}

TEST_CASE("bad permutation inputs are rejected") {
    CHECK_THROWS_AS(Permutation::parse(""), MalformedInput);
    CHECK_THROWS_AS(Permutation::parse("40"), MalformedInput);   // digit 0
    CHECK_THROWS_AS(Permutation::parse("1,1"), MalformedInput);  // repeated value
    CHECK_THROWS_AS(Permutation::parse("1,3"), MalformedInput);  // not onto [2]
    CHECK_THROWS_AS(Permutation::parse("2,x"), MalformedInput);
}

TEST_CASE("permutation accessors") {
    Permutation w({4, 1, 5, 3, 2});
    CHECK(w.inverse() == Permutation({2, 5, 4, 1, 3}));
    CHECK(w.inversions() == 6);
    CHECK(w.ascents() == std::vector<int>{2});
    CHECK(w.swap_adjacent(2) == Permutation({4, 5, 1, 3, 2}));
    CHECK(Permutation::longest(4) == Permutation({4, 3, 2, 1}));
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(3).front() == Permutation::identity(3));
    CHECK(all_permutations(3).back() == Permutation::longest(3));
}

TEST_CASE("compositions parse and report their shape") {
    Composition alpha = Composition::parse("3,2,1,0,1");
    CHECK(alpha.parts() == std::vector<int>{3, 2, 1, 0, 1});
    CHECK(alpha.sum() == 7);
    CHECK(alpha.last_nonzero() == 5);
    CHECK(alpha.ambient_size() == 5);
    CHECK(!alpha.is_weakly_decreasing());
    CHECK(alpha.to_string() == "3,2,1,0,1");

    Composition zero = Composition::parse("0,0");
    CHECK(zero.ambient_size() == 0);
    CHECK(zero.is_weakly_decreasing());

    CHECK(Composition::parse("7").ambient_size() == 7);
    CHECK_THROWS_AS(Composition::parse(""), MalformedInput);
    CHECK_THROWS_AS(Composition::parse("1,-2"), MalformedInput);
    CHECK_THROWS_AS(Composition::parse("1,b"), MalformedInput);
}

TEST_CASE("subset helpers round-trip") {
    CHECK(subset_elements(0b101u) == std::vector<int>{1, 3});
    CHECK(subset_from_elements({1, 3}, 3) == 0b101u);
    CHECK_THROWS_AS(subset_from_elements({4}, 3), MalformedInput);
    CHECK(full_set(0) == 0u);
    CHECK(full_set(3) == 0b111u);
}
