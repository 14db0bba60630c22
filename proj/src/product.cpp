#include "dpcolor/product.hpp"

#include "dpcolor/certificate.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "dpcolor/coloring.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/parallel.hpp"
#include "dpcolor/rng.hpp"

namespace dpc {

std::vector<int> ShiftClasses::member(std::size_t cls, int shift) const {
    std::vector<int> m = representatives[cls];
    for (int& c : m) c = (c + shift) % k;
    return m;
}

ShiftClasses shift_classes(const SimpleGraph& g, int k, std::uint64_t cap) {
    auto colorings = enumerate_proper_colorings(g, k, cap);
    ShiftClasses out;
    out.k = k;
    std::map<std::vector<int>, bool> claimed;
    for (const auto& c : colorings) claimed[c.assignment] = false;
    // Lexicographic iteration: the first unclaimed member of each class is
    // its lexicographically smallest element.
    for (const auto& c : colorings) {
        if (claimed[c.assignment]) continue;
        out.representatives.push_back(c.assignment);
        std::vector<int> m = c.assignment;
        for (int j = 0; j < k; ++j) {
            auto it = claimed.find(m);
            if (it == claimed.end() || it->second)
                throw std::logic_error("shift class structure violated");
            it->second = true;
            for (int& x : m) x = (x + 1) % k;
        }
    }
    return out;
}

const std::vector<int>& ProductCover::cross_matching(int u, int j, int q) const {
    int e = cover.base.edge_index(x_vertex(u, j), y_vertex(u, q));
    return cover.matchings[e];
}

std::vector<int>& ProductCover::cross_matching(int u, int j, int q) {
    int e = cover.base.edge_index(x_vertex(u, j), y_vertex(u, q));
    return cover.matchings[e];
}

Cover ProductCover::x_subcover() const {
    std::vector<int> verts;
    for (int u = 0; u < g.n(); ++u)
        for (int j = 0; j < l; ++j) verts.push_back(x_vertex(u, j));
    return subcover_induced(cover, verts);
}

ProductCover make_product_cover(const SimpleGraph& g, int k, int l, int t) {
    SimpleGraph m = cartesian_product(g, complete_bipartite(l, t));
    Cover c = canonical_cover(m, k);
    int kv = l + t;
    for (int e = 0; e < m.m(); ++e) {
        auto [a, b] = m.edges()[e];
        if (a / kv == b / kv)  // same g-vertex: a cross edge inside a K-fiber
            c.matchings[e].assign(k, -1);
    }
    ProductCover pc;
    pc.g = g;
    pc.l = l;
    pc.t = t;
    pc.cover = std::move(c);
    return pc;
}

VolatilityReport check_volatile(const ProductCover& pc, const Transversal& ix, int q,
                                const SolveOptions& opts) {
    int K = pc.fold();
    int n = pc.g.n();
    VolatilityReport rep;
    rep.x_choice = ix.choice;
    rep.leaf = q;
    rep.reduced_lists.resize(n);
    std::vector<std::vector<int>> removed(n);
    for (int u = 0; u < n; ++u) {
        for (int j = 0; j < pc.l; ++j) {
            int chosen = ix.choice[u * pc.l + j];
            int img = pc.cross_matching(u, j, q)[chosen];
            if (img >= 0) removed[u].push_back(img);
        }
        std::sort(removed[u].begin(), removed[u].end());
        removed[u].erase(std::unique(removed[u].begin(), removed[u].end()), removed[u].end());
        for (int i = 0; i < K; ++i)
            if (!std::binary_search(removed[u].begin(), removed[u].end(), i))
                rep.reduced_lists[u].push_back(i);
    }
    bool uniform = std::all_of(removed.begin(), removed.end(),
                               [&](const std::vector<int>& r) { return r == removed[0]; });
    if (uniform && n > 0) rep.tau = static_cast<int>(removed[0].size());
    // Reduced cover on the leaf copy: identity matchings restricted to the
    // surviving indices.
    std::vector<int> fold(n);
    for (int u = 0; u < n; ++u) fold[u] = static_cast<int>(rep.reduced_lists[u].size());
    std::vector<std::vector<int>> matchings(pc.g.m());
    for (int e = 0; e < pc.g.m(); ++e) {
        auto [u, v] = pc.g.edges()[e];
        std::vector<int> m(fold[u], -1);
        for (int i = 0; i < fold[u]; ++i) {
            int orig = rep.reduced_lists[u][i];
            auto it = std::lower_bound(rep.reduced_lists[v].begin(), rep.reduced_lists[v].end(), orig);
            if (it != rep.reduced_lists[v].end() && *it == orig)
                m[i] = static_cast<int>(it - rep.reduced_lists[v].begin());
        }
        matchings[e] = std::move(m);
    }
    Cover reduced(pc.g, std::move(fold), std::move(matchings));
    auto sol = find_transversal(reduced, opts);
    if (sol) {
        Transversal wit;
        wit.choice.resize(n);
        for (int u = 0; u < n; ++u) wit.choice[u] = rep.reduced_lists[u][sol->choice[u]];
        rep.witness = wit;
        rep.is_volatile = false;
    } else {
        rep.is_volatile = true;
    }
    return rep;
}

BadnessVerdict verify_bad_by_volatility(const ProductCover& pc, const EnumOptions& opts) {
    SolveOptions sopts{opts.node_cap};
    auto xs = enumerate_transversals(pc.x_subcover(), sopts);
    if (static_cast<std::uint64_t>(xs.size()) > opts.cover_cap)
        throw CapExceeded("too many H_X-colorings");
    BadnessVerdict verdict;
    verdict.x_colorings = xs.size();
    std::mutex mu;
    std::optional<std::uint64_t> escape;  // lowest-index non-volatile-everywhere coloring
    parallel_ranges(xs.size(), opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            {
                std::lock_guard<std::mutex> g_(mu);
                if (escape && *escape <= i) return;
            }
            bool volatile_somewhere = false;
            for (int q = 0; q < pc.t; ++q) {
                if (check_volatile(pc, xs[i], q, sopts).is_volatile) {
                    volatile_somewhere = true;
                    break;
                }
            }
            if (!volatile_somewhere) {
                std::lock_guard<std::mutex> g_(mu);
                if (!escape || i < *escape) escape = i;
                return;
            }
        }
    });
    if (!escape) {
        verdict.bad = true;
        return verdict;
    }
    // Assemble the full transversal: the X-coloring plus each leaf's witness
    // extension (leaves attach only to X, so they extend independently).
    const Transversal& ix = xs[*escape];
    int n = pc.g.n(), kv = pc.kv();
    Transversal full;
    full.choice.assign(n * kv, -1);
    for (int u = 0; u < n; ++u)
        for (int j = 0; j < pc.l; ++j) full.choice[pc.x_vertex(u, j)] = ix.choice[u * pc.l + j];
    for (int q = 0; q < pc.t; ++q) {
        auto rep = check_volatile(pc, ix, q, sopts);
        if (rep.is_volatile || !rep.witness)
            throw std::logic_error("escape coloring became volatile on re-check");
        for (int u = 0; u < n; ++u) full.choice[pc.y_vertex(u, q)] = rep.witness->choice[u];
    }
    if (!check_transversal(pc.cover, full))
        throw std::logic_error("assembled extension is not a transversal");
    verdict.counterexample = full;
    return verdict;
}

std::uint64_t count_volatile(const ProductCover& pc, int q, const EnumOptions& opts) {
    SolveOptions sopts{opts.node_cap};
    auto xs = enumerate_transversals(pc.x_subcover(), sopts);
    std::uint64_t count = 0;
    for (const auto& ix : xs)
        if (check_volatile(pc, ix, q, sopts).is_volatile) ++count;
    return count;
}

namespace {

mpz_class factorial_z(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class pow_z(int base, int exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

mpq_class volatility_probability_formula(int k, int l) {
    if (k < 2 || l < 1) throw std::invalid_argument("requires k >= 2, l >= 1");
    mpq_class p(factorial_z(k + l - 1), factorial_z(k - 1) * pow_z(k + l - 1, l));
    p.canonicalize();
    return p;
}

mpq_class volatility_probability_exact(int k, int l, std::uint64_t cap) {
    if (k < 2 || l < 1) throw std::invalid_argument("requires k >= 2, l >= 1");
    int K = k + l - 1;
    std::vector<int> base(K);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    std::uint64_t nf = perms.size();
    std::uint64_t total = 1;
    for (int j = 0; j < l; ++j) {
        if (total > cap / nf) throw CapExceeded("bijection tuple space exceeds cap");
        total *= nf;
    }
    // Fixed class element z_j = 0 for every copy; tau is the number of
    // distinct images of it.
    std::vector<std::uint64_t> odo(l, 0);
    std::uint64_t volatile_count = 0;
    for (std::uint64_t it = 0; it < total; ++it) {
        std::uint64_t seen = 0;
        int tau = 0;
        for (int j = 0; j < l; ++j) {
            int img = perms[odo[j]][0];
            if (!(seen >> img & 1)) {
                seen |= std::uint64_t{1} << img;
                ++tau;
            }
        }
        if (tau == l) ++volatile_count;
        for (int j = l - 1; j >= 0; --j) {
            if (++odo[j] < nf) break;
            odo[j] = 0;
        }
    }
    mpq_class p(mpz_class(static_cast<unsigned long>(volatile_count)),
                mpz_class(static_cast<unsigned long>(total)));
    p.canonicalize();
    return p;
}

double volatility_probability_montecarlo(int k, int l, std::uint64_t samples,
                                         std::uint64_t seed) {
    if (k < 2 || l < 1) throw std::invalid_argument("requires k >= 2, l >= 1");
    if (samples == 0) throw std::invalid_argument("samples must be positive");
    int K = k + l - 1;
    SplitMix64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint64_t seen = 0;
        int tau = 0;
        for (int j = 0; j < l; ++j) {
            auto perm = rng.permutation(K);
            int img = perm[0];
            if (!(seen >> img & 1)) {
                seen |= std::uint64_t{1} << img;
                ++tau;
            }
        }
        if (tau == l) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

int c_constant(int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("c_constant requires k >= 2 and l >= 2");
    // ceil of the log-ratio equals the least c with (1-p)^c <= (k+l-1)^-l,
    // with p the exact volatility probability; decided in exact rationals.
    mpq_class p = volatility_probability_formula(k, l);
    mpq_class r = 1 - p;
    if (r <= 0) throw std::logic_error("volatility probability out of range");
    mpq_class target(1, pow_z(k + l - 1, l));
    target.canonicalize();
    mpq_class acc = 1;
    for (int c = 1; c <= 1'000'000; ++c) {
        acc *= r;
        if (acc <= target) return c;
    }
    throw std::logic_error("c_constant did not converge");
}

bool c_bound_check(int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("c_bound_check requires k >= 2 and l >= 2");
    int c = c_constant(k, l);
    // c <= (l (k-1)! ln(k+l-1) / (k+l-1)!) (k+l-1)^l
    //   <=>  ln(k+l-1) >= c (k+l-1)! / (l (k-1)! (k+l-1)^l)  =: num/den.
    mpq_class rhs(mpz_class(c) * factorial_z(k + l - 1),
                  mpz_class(l) * factorial_z(k - 1) * pow_z(k + l - 1, l));
    rhs.canonicalize();
    // Directed rounding: compare den*ln(k+l-1) against num; widen precision
    // until the interval separates (equality cannot occur, ln of an integer
    // >= 2 is irrational).
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_ui(lo, static_cast<unsigned long>(k + l - 1), MPFR_RNDD);
        mpfr_set_ui(hi, static_cast<unsigned long>(k + l - 1), MPFR_RNDU);
        mpfr_log(lo, lo, MPFR_RNDD);
        mpfr_log(hi, hi, MPFR_RNDU);
        mpfr_mul_z(lo, lo, rhs.get_den().get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(hi, hi, rhs.get_den().get_mpz_t(), MPFR_RNDU);
        int cmp_lo = mpfr_cmp_z(lo, rhs.get_num().get_mpz_t());
        int cmp_hi = mpfr_cmp_z(hi, rhs.get_num().get_mpz_t());
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (cmp_lo >= 0) return true;   // even rounded down, ln >= num/den
        if (cmp_hi < 0) return false;   // even rounded up, ln < num/den
        if (prec > 1 << 20) throw std::logic_error("c_bound_check precision blowup");
    }
}

ProductCover assemble_star_cover(const SimpleGraph& g, int k, int t,
                                 const ShiftClasses& classes) {
    ProductCover pc = make_product_cover(g, k, 1, t);
    int leaves = std::min<std::size_t>(classes.class_count(), static_cast<std::size_t>(t));
    for (int j = 0; j < leaves; ++j) {
        for (int r = 0; r < k; ++r) {
            auto member = classes.member(j, r);
            for (int u = 0; u < g.n(); ++u) pc.cross_matching(u, 0, j)[member[u]] = r;
        }
    }
    return pc;
}

ProductCover assemble_random_cover(
    const SimpleGraph& g, int k, int l, int t, int c, const ShiftClasses& classes,
    const std::vector<std::vector<std::vector<std::vector<int>>>>& bijections) {
    int K = k + l - 1;
    ProductCover pc = make_product_cover(g, K, l, t);
    std::uint64_t b = classes.class_count();
    std::uint64_t blocks = bijections.size();
    for (std::uint64_t m = 0; m < blocks; ++m) {
        // Block digits p_1..p_l in [b), first coordinate most significant.
        std::vector<std::uint64_t> p(l);
        std::uint64_t rest = m;
        for (int j = l - 1; j >= 0; --j) {
            p[j] = rest % b;
            rest /= b;
        }
        for (int omega = 0; omega < c; ++omega) {
            int q = static_cast<int>(c * m) + omega;
            for (int j = 0; j < l; ++j) {
                const auto& sigma = bijections[m][j][omega];
                for (int z = 0; z < K; ++z) {
                    auto member = classes.member(p[j], z);
                    for (int u = 0; u < g.n(); ++u)
                        pc.cross_matching(u, j, q)[member[u]] = sigma[z];
                }
            }
        }
    }
    return pc;
}

namespace {

void check_construction_hypotheses(const SimpleGraph& g, int k, const EnumOptions& opts) {
    if (!is_k_critical(g, k, opts.node_cap))
        throw PreconditionError("base graph is not " + std::to_string(k) + "-critical");
    int cdp = chi_dp(g, opts);
    if (cdp != k)
        throw PreconditionError("chi_DP of the base graph is " + std::to_string(cdp) +
                                ", expected " + std::to_string(k));
}

}  // namespace

CoverCertificate build_star_bad_cover(const SimpleGraph& g, int k, int t,
                                      const EnumOptions& opts, bool check_hypotheses) {
    if (k < 2) throw std::invalid_argument("build_star_bad_cover requires k >= 2");
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    if (check_hypotheses) check_construction_hypotheses(g, k, opts);
    auto classes = shift_classes(g, k, opts.node_cap);
    std::uint64_t need = classes.class_count();  // P(g,k)/k
    if (static_cast<std::uint64_t>(t) < need)
        throw PreconditionError("t = " + std::to_string(t) + " is below the threshold P(G,k)/k = " +
                                std::to_string(need));
    CoverCertificate cert;
    cert.kind = "star";
    cert.k = k;
    cert.l = 1;
    cert.t = t;
    cert.b = static_cast<int>(need);
    cert.class_reps = classes.representatives;
    cert.product = assemble_star_cover(g, k, t, classes);
    cert.verified = verify_bad_by_volatility(cert.product, opts).bad;
    return cert;
}

CoverCertificate build_random_bad_cover(const SimpleGraph& g, int k, int l, int t,
                                        std::uint64_t seed, const EnumOptions& opts,
                                        bool check_hypotheses) {
    if (k < 2) throw std::invalid_argument("build_random_bad_cover requires k >= 2");
    if (l < 2)
        throw PreconditionError("the randomized construction needs l >= 2; use the star "
                                "construction for l = 1");
    if (check_hypotheses) check_construction_hypotheses(g, k, opts);
    int K = k + l - 1;
    auto classes = shift_classes(g, K, opts.node_cap);
    std::uint64_t b = classes.class_count();  // P(g,K)/K
    int c = c_constant(k, l);
    mpz_class threshold = mpz_class(c);
    for (int j = 0; j < l; ++j) threshold *= static_cast<unsigned long>(b);
    if (mpz_class(t) < threshold)
        throw PreconditionError("t = " + std::to_string(t) + " is below the threshold c*(P/(k+l-1))^l = " +
                                threshold.get_str());
    std::uint64_t blocks = 1;
    for (int j = 0; j < l; ++j) blocks *= b;
    if (blocks > opts.cover_cap) throw CapExceeded("block count exceeds cover cap");

    constexpr int kRetryCap = 10'000;
    std::vector<std::vector<std::vector<std::vector<int>>>> bijections(blocks);
    std::vector<std::uint64_t> attempts(blocks, 0);
    // Per-block independent streams: sampling is reproducible regardless of
    // thread count or block order.
    parallel_ranges(blocks, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t m = lo; m < hi; ++m) {
            SplitMix64 rng(derive_stream(seed, m));
            bool ok = false;
            for (int attempt = 0; attempt < kRetryCap && !ok; ++attempt) {
                ++attempts[m];
                std::vector<std::vector<std::vector<int>>> sig(l);
                for (int j = 0; j < l; ++j) {
                    sig[j].resize(c);
                    for (int omega = 0; omega < c; ++omega) sig[j][omega] = rng.permutation(K);
                }
                // Block check: every member tuple must collide with no copy
                // (tau = l) on at least one of the block's c leaves.
                bool covered = true;
                std::vector<int> z(l, 0);
                while (covered) {
                    bool vol = false;
                    for (int omega = 0; omega < c && !vol; ++omega) {
                        std::uint64_t seen = 0;
                        int tau = 0;
                        for (int j = 0; j < l; ++j) {
                            int img = sig[j][omega][z[j]];
                            if (!(seen >> img & 1)) {
                                seen |= std::uint64_t{1} << img;
                                ++tau;
                            }
                        }
                        vol = (tau == l);
                    }
                    if (!vol) {
                        covered = false;
                        break;
                    }
                    int j = l - 1;
                    for (; j >= 0; --j) {
                        if (++z[j] < K) break;
                        z[j] = 0;
                    }
                    if (j < 0) break;
                }
                if (covered) {
                    bijections[m] = std::move(sig);
                    ok = true;
                }
            }
            if (!ok)
                throw CapExceeded("block " + std::to_string(m) + " failed " +
                                  std::to_string(kRetryCap) + " sampling attempts");
        }
    });

    CoverCertificate cert;
    cert.kind = "random";
    cert.k = k;
    cert.l = l;
    cert.t = t;
    cert.seed = seed;
    cert.c = c;
    cert.b = static_cast<int>(b);
    cert.class_reps = classes.representatives;
    cert.bijections = std::move(bijections);
    for (std::uint64_t m = 0; m < blocks; ++m) {
        cert.block_attempts += attempts[m];
        cert.blocks_resampled += attempts[m] - 1;
    }
    cert.product = assemble_random_cover(g, k, l, t, c, classes, cert.bijections);
    cert.verified = verify_bad_by_volatility(cert.product, opts).bad;
    return cert;
}

FdpBracket f_dp_bracket(const SimpleGraph& g, int k, const EnumOptions& opts) {
    auto rr = is_robustly_critical(g, k, RobustMode::reduced, opts);
    if (!rr.robust)
        throw PreconditionError(rr.critical ? "graph is not robustly critical"
                                            : "graph is not k-critical");
    FdpBracket out;
    out.lower = mpq_class(p_dp(g, k, opts), k);
    out.upper = mpq_class(chromatic_polynomial_eval(g, k, opts.node_cap), k);
    out.lower.canonicalize();
    out.upper.canonicalize();
    if (out.lower == out.upper) out.exact = out.lower;
    return out;
}

}  // namespace dpc
