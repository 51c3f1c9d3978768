#include <hankelkit/oeis.hpp>

namespace hankelkit {

namespace {

struct RawFixture {
    const char* id;
    const char* name;
    const char* data;
};

// Data fields as the OEIS search endpoint returns them.
constexpr RawFixture kRaw[] = {
    {"A000012", "The simplest sequence of positive numbers: the all 1's sequence.",
     "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,"
     "1,1,1,1,1"},
    {"A000045", "Fibonacci numbers: F(n) = F(n-1) + F(n-2) with F(0) = 0 and F(1) = 1.",
     "0,1,1,2,3,5,8,13,21,34,55,89,144,233,377,610,987,1597,2584,4181,6765,10946,17711,28657,46368,75025,121393,"
     "196418,317811,514229,832040,1346269,2178309,3524578,5702887,9227465,14930352,24157817,39088169,63245986,"
     "102334155"},
    {"A000079", "Powers of 2: a(n) = 2^n.",
     "1,2,4,8,16,32,64,128,256,512,1024,2048,4096,8192,16384,32768,65536,131072,262144,524288,1048576,2097152,"
     "4194304,8388608,16777216,33554432,67108864,134217728,268435456,536870912,1073741824,2147483648,4294967296,"
     "8589934592"},
    {"A000108", "Catalan numbers: C(n) = binomial(2n,n)/(n+1) = (2n)!/(n!(n+1)!).",
     "1,1,2,5,14,42,132,429,1430,4862,16796,58786,208012,742900,2674440,9694845,35357670,129644790,477638700,"
     "1767263190,6564120420,24466267020,91482563640,343059613650,1289904147324,4861946401452,18367353072152,"
     "69533550916004,263747951750360,1002242216651368"},
    {"A000984", "Central binomial coefficients: binomial(2*n,n) = (2*n)!/(n!)^2.",
     "1,2,6,20,70,252,924,3432,12870,48620,184756,705432,2704156,10400600,40116600,155117520,601080390,2333606220,"
     "9075135300,35345263800,137846528820,538257874440,2104098963720,8233430727600,32247603683100,"
     "126410606437752,495918532948104,1946939425648112"},
    {"A001006",
     "Motzkin numbers: number of ways of drawing any number of nonintersecting chords joining n (labeled) points "
     "on a circle.",
     "1,1,2,4,9,21,51,127,323,835,2188,5798,15511,41835,113634,310572,853467,2356779,6536382,18199284,50852019,"
     "142547559,400763223,1129760415,3192727797,9043402501,25669818476,73007772802,208023278209,593742784829,"
     "1697385471211,4859761676391"},
    {"A001477", "The nonnegative integers.",
     "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,"
     "39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59"},
    {"A001787", "a(n) = n*2^(n-1).",
     "0,1,4,12,32,80,192,448,1024,2304,5120,11264,24576,53248,114688,245760,524288,1114112,2359296,4980736,"
     "10485760,22020096,46137344,96468992,201326592,419430400,872415232,1811939328,3758096384,7784628224"},
};

} // namespace

const std::vector<OeisFixture>& oeis_fixtures() {
    static const std::vector<OeisFixture> fixtures = [] {
        std::vector<OeisFixture> out;
        for (const auto& raw : kRaw) {
            out.push_back({raw.id, raw.name, parse_sequence(raw.data)});
        }
        return out;
    }();
    return fixtures;
}

} // namespace hankelkit
