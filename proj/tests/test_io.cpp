#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "cyclotwist/io.hpp"
#include "cyclotwist/products.hpp"

using namespace cyclotwist;

TEST_CASE("alist round-trip is bit-exact") {
    for (const ProductCode& code : {toric_build(3, 4), bp90_build()}) {
        std::string text = to_alist(code.code.hx);
        BinMatrix back = from_alist(text);
        CHECK(back == code.code.hx);
        CHECK(from_alist(to_alist(code.code.hz)) == code.code.hz);
    }
}

TEST_CASE("alist header fields") {
    ProductCode toric = toric_build(3, 3);
    std::string text = to_alist(toric.code.hx);
    std::istringstream is(text);
    int n, m, maxc, maxr;
    is >> n >> m >> maxc >> maxr;
    CHECK(n == 18);
    CHECK(m == 9);
    CHECK(maxc == 2);  // every qubit touches 2 X-checks
    CHECK(maxr == 4);  // toric checks have weight 4
}

TEST_CASE("bundle JSON round-trip") {
    for (const ProductCode& code :
         {hgp_family(2), bp90_build(), bb90_build(), toric_build(3, 5)}) {
        std::string text = bundle_to_json(code);
        ProductCode back = bundle_from_json(text);
        CHECK(back.code.hx == code.code.hx);
        CHECK(back.code.hz == code.code.hz);
        CHECK(back.k == code.k);
        CHECK(back.blueprint.kind == code.blueprint.kind);
    }
}

TEST_CASE("bundle files") {
    std::string path = "/tmp/cyclotwist_bundle_test.json";
    ProductCode code = bp90_build();
    write_bundle_file(path, code);
    ProductCode back = read_bundle_file(path);
    CHECK(back.code.hx == code.code.hx);
    CHECK(back.code.hz == code.code.hz);
    std::remove(path.c_str());
}

TEST_CASE("a flipped bit in a stored bundle breaks commutation") {
    ProductCode code = hgp_family(1);
    std::string text = bundle_to_json(code);
    // flip one bit by editing the first hx row's first index
    auto pos = text.find("\"hx\"");
    REQUIRE(pos != std::string::npos);
    auto bracket = text.find('[', text.find('[', pos) + 1);
    std::string broken = text;
    broken.insert(bracket + 1, "17,");
    ProductCode loaded = bundle_from_json(broken);
    CHECK_FALSE(commutation_holds(loaded.code));  // verify catches this
    CHECK(commutation_holds(bundle_from_json(text).code));
}
