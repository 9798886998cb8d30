#include "pmf/rational.hpp"

namespace pmf {

std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    char buf[48];
    int i = 48;
    while (u > 0) {
        buf[--i] = char('0' + (int)(u % 10));
        u /= 10;
    }
    std::string s(buf + i, buf + 48);
    return neg ? "-" + s : s;
}

std::string Rat::str() const {
    if (den == 1) return i128_to_string(num);
    return i128_to_string(num) + "/" + i128_to_string(den);
}

} // namespace pmf
