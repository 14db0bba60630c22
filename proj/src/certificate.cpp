#include "dpcolor/certificate.hpp"

#include <json.hpp>

#include <stdexcept>

#include "dpcolor/errors.hpp"

namespace dpc {

namespace {

using nlohmann::json;

// Canonical serialization: fixed key order via ordered_json, matchings in
// the lexicographic edge order of the product graph, -1 for unmatched.
nlohmann::ordered_json certificate_body(const CoverCertificate& cert) {
    nlohmann::ordered_json j;
    j["version"] = cert.version;
    j["kind"] = cert.kind;
    j["graph6"] = to_graph6(cert.product.g);
    j["k"] = cert.k;
    j["l"] = cert.l;
    j["t"] = cert.t;
    j["seed"] = cert.seed;
    j["c"] = cert.c;
    j["b"] = cert.b;
    j["classes"] = cert.class_reps;
    j["bijections"] = cert.bijections;
    j["blocks_resampled"] = cert.blocks_resampled;
    j["block_attempts"] = cert.block_attempts;
    j["matchings"] = cert.product.cover.matchings;
    j["verified"] = cert.verified;
    return j;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

}  // namespace

std::string certificate_content_hash(const CoverCertificate& cert) {
    return hex64(fnv1a64(certificate_body(cert).dump()));
}

std::string certificate_to_json(const CoverCertificate& cert) {
    auto j = certificate_body(cert);
    j["content_hash"] = certificate_content_hash(cert);
    return j.dump(2) + "\n";
}

CoverCertificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what(), e.byte);
    }
    CoverCertificate cert;
    try {
        cert.version = j.at("version").get<int>();
        cert.kind = j.at("kind").get<std::string>();
        cert.k = j.at("k").get<int>();
        cert.l = j.at("l").get<int>();
        cert.t = j.at("t").get<int>();
        cert.seed = j.at("seed").get<std::uint64_t>();
        cert.c = j.at("c").get<int>();
        cert.b = j.at("b").get<int>();
        cert.class_reps = j.at("classes").get<std::vector<std::vector<int>>>();
        cert.bijections =
            j.at("bijections")
                .get<std::vector<std::vector<std::vector<std::vector<int>>>>>();
        cert.blocks_resampled = j.at("blocks_resampled").get<std::uint64_t>();
        cert.block_attempts = j.at("block_attempts").get<std::uint64_t>();
        cert.verified = j.at("verified").get<bool>();

        SimpleGraph g = parse_graph6(j.at("graph6").get<std::string>());
        int fold = cert.k + cert.l - 1;
        cert.product = make_product_cover(g, fold, cert.l, cert.t);
        auto matchings = j.at("matchings").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(matchings.size()) != cert.product.cover.base.m())
            throw ParseError("certificate matchings count does not match the product graph", 0);
        for (const auto& m : matchings)
            if (static_cast<int>(m.size()) != fold)
                throw ParseError("certificate matching has wrong length", 0);
        cert.product.cover.matchings = std::move(matchings);
        auto problems = validate_cover(cert.product.cover);
        if (!problems.empty())
            throw ParseError("certificate cover invalid: " + problems.front(), 0);
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what(), 0);
    }
    if (cert.version != 1) throw ParseError("unsupported certificate version", 0);
    if (cert.kind != "star" && cert.kind != "random")
        throw ParseError("unknown certificate kind: " + cert.kind, 0);
    if (j.contains("content_hash")) {
        auto want = j.at("content_hash").get<std::string>();
        if (want != certificate_content_hash(cert))
            throw ParseError("certificate content hash mismatch", 0);
    }
    return cert;
}

bool replay_matches(const CoverCertificate& cert) {
    ShiftClasses classes;
    classes.k = cert.k + cert.l - 1;
    classes.representatives = cert.class_reps;
    ProductCover rebuilt =
        cert.kind == "star"
            ? assemble_star_cover(cert.product.g, cert.k, cert.t, classes)
            : assemble_random_cover(cert.product.g, cert.k, cert.l, cert.t, cert.c, classes,
                                    cert.bijections);
    return rebuilt.cover.base == cert.product.cover.base &&
           rebuilt.cover.fold == cert.product.cover.fold &&
           rebuilt.cover.matchings == cert.product.cover.matchings;
}

}  // namespace dpc
