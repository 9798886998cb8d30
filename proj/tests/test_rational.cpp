#include <doctest.h>

#include "support.hpp"

using namespace pmf;

TEST_CASE("rational arithmetic stays normalized") {
    Rat a(i128(2), i128(4));
    CHECK(a.num == 1);
    CHECK(a.den == 2);
    CHECK((a + a) == Rat(1));
    CHECK((Rat(3) - Rat(i128(1), i128(2))) == Rat(i128(5), i128(2)));
    CHECK((Rat(i128(2), i128(3)) * Rat(i128(9), i128(4))) == Rat(i128(3), i128(2)));
    CHECK((Rat(5) / Rat(2)) == Rat(i128(5), i128(2)));
    CHECK((Rat(i128(-3), i128(6))) == Rat(i128(-1), i128(2)));
    CHECK(Rat(i128(1), i128(-2)).den == 2);
    CHECK(Rat(i128(1), i128(-2)).num == -1);
}

TEST_CASE("floor, ceil, frac") {
    CHECK(Rat(i128(7), i128(2)).floor() == 3);
    CHECK(Rat(i128(7), i128(2)).ceil() == 4);
    CHECK(Rat(i128(-7), i128(2)).floor() == -4);
    CHECK(Rat(i128(-7), i128(2)).ceil() == -3);
    CHECK(Rat(i128(9), i128(4)).frac() == Rat(i128(1), i128(4)));
    CHECK(Rat(i128(-9), i128(4)).frac() == Rat(i128(3), i128(4)));
    CHECK(Rat(6).is_integer());
    CHECK(!Rat(i128(1), i128(3)).is_integer());
}

TEST_CASE("comparisons") {
    CHECK(Rat(i128(1), i128(3)) < Rat(i128(1), i128(2)));
    CHECK(Rat(i128(-1), i128(3)) > Rat(i128(-1), i128(2)));
    CHECK(max(Rat(1), Rat(2)) == Rat(2));
    CHECK(abs(Rat(-5)) == Rat(5));
    CHECK(Rat(i128(10), i128(5)).str() == "2");
    CHECK(Rat(i128(-10), i128(4)).str() == "-5/2");
}

TEST_CASE("capacity sentinel saturates and dominates") {
    Cap inf = Cap::infinite();
    CHECK((inf - Rat(5)).inf);
    CHECK((inf + Rat(5)).inf);
    CHECK(Cap(Rat(3)) < inf);
    CHECK(!(inf < Cap(Rat(1000000))));
    CHECK(min(inf, Cap(Rat(7))) == Cap(Rat(7)));
    CHECK(min(inf, inf).inf);
    CHECK((Cap(Rat(5)) - Rat(2)) == Cap(Rat(3)));
    CHECK(Rat(4) <= Cap(Rat(4)));
    CHECK(Rat(4) < inf);
}

TEST_CASE("overflow is loud, not silent") {
    i128 big = i128(1) << 126;
    Rat huge = Rat::raw(big, 1);
    CHECK_THROWS_AS((void)(huge * Rat(4)), Error);
}
