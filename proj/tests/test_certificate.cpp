#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcolor/certificate.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/product.hpp"

using namespace dpc;

TEST_CASE("star certificate round trip") {
    auto cert = build_star_bad_cover(cycle_graph(3), 3, 2);
    auto text = certificate_to_json(cert);
    auto back = certificate_from_json(text);
    CHECK(back.kind == "star");
    CHECK(back.k == cert.k);
    CHECK(back.t == cert.t);
    CHECK(back.verified == cert.verified);
    CHECK(back.class_reps == cert.class_reps);
    CHECK(back.product.cover.matchings == cert.product.cover.matchings);
    CHECK(certificate_to_json(back) == text);  // byte-identical re-emit
    CHECK(replay_matches(back));
}

TEST_CASE("random certificate round trip") {
    auto cert = build_random_bad_cover(complete_graph(2), 2, 2, 8, 7);
    auto text = certificate_to_json(cert);
    auto back = certificate_from_json(text);
    CHECK(back.seed == 7);
    CHECK(back.c == cert.c);
    CHECK(back.bijections == cert.bijections);
    CHECK(back.product.cover.matchings == cert.product.cover.matchings);
    CHECK(replay_matches(back));
    CHECK(verify_bad_by_volatility(back.product).bad == cert.verified);
}

TEST_CASE("content hash pins the payload") {
    auto cert = build_star_bad_cover(cycle_graph(3), 3, 2);
    auto h = certificate_content_hash(cert);
    CHECK(h.size() == 16);
    CHECK(h == certificate_content_hash(cert));
    auto tampered = cert;
    for (auto& m : tampered.product.cover.matchings) {
        if (m[0] >= 0) {
            std::swap(m[0], m[1]);
            break;
        }
    }
    CHECK(certificate_content_hash(tampered) != h);
    CHECK(!replay_matches(tampered));
}

TEST_CASE("hash mismatch is rejected on parse") {
    auto cert = build_star_bad_cover(cycle_graph(3), 3, 2);
    auto text = certificate_to_json(cert);
    auto pos = text.find("\"content_hash\"");
    REQUIRE(pos != std::string::npos);
    text[pos + 18] = text[pos + 18] == '0' ? '1' : '0';
    CHECK_THROWS_AS(certificate_from_json(text), ParseError);
}

TEST_CASE("malformed certificates are parse errors") {
    CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
    CHECK_THROWS_AS(certificate_from_json("{}"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"version":9})"), ParseError);
}
