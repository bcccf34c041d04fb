#include <doctest.h>

#include "lcvanish/vanish.hpp"

using namespace lcv;

namespace {

std::vector<IntPoly> parse_all(int n, std::vector<std::string> texts) {
    std::vector<IntPoly> out;
    for (const auto& s : texts) out.push_back(parse_int_poly(s, n));
    return out;
}

}  // namespace

TEST_CASE("single variable: the top local cohomology never vanishes") {
    for (u64 p : {2ull, 3ull, 5ull}) {
        Instance inst = build_instance(parse_all(1, {"x1"}), 1, p, 1);
        for (Mode mode : {Mode::streaming, Mode::baseline, Mode::compare}) {
            Verdict v = decide_vanishing(inst, {BoundSource::finite_length, 0},
                                         mode);
            CHECK(v.result == ResultKind::NONVANISHING);
            REQUIRE(v.witness.has_value());
            CHECK(v.witness->j == 1);
            CHECK(v.witness->offset == ExpVec{0});
            CHECK(v.witness->gen_index == 0);
            CHECK(recheck_witness(inst, v));
        }
    }
}

TEST_CASE("repeated generator: excess Koszul cohomology vanishes") {
    for (u64 p : {2ull, 3ull}) {
        Instance inst = build_instance(parse_all(1, {"x1", "x1"}), 1, p, 2);
        for (Mode mode : {Mode::streaming, Mode::baseline, Mode::compare}) {
            Verdict v = decide_vanishing(inst, {BoundSource::finite_length, 0},
                                         mode);
            CHECK(v.result == ResultKind::VANISHES);
            CHECK(!v.witness.has_value());
        }
    }
}

TEST_CASE("coordinate axes in the plane") {
    Instance inst = build_instance(parse_all(2, {"x1", "x2"}), 2, 3, 2);
    Verdict v = decide_vanishing(inst, {BoundSource::finite_length, 0},
                                 Mode::compare);
    CHECK(v.result == ResultKind::NONVANISHING);
    REQUIRE(v.witness.has_value());
    REQUIRE(v.r.has_value());
    REQUIRE(v.u.has_value());
    CHECK(*v.r <= static_cast<int>(*v.u));
    CHECK(recheck_witness(inst, v));
}

TEST_CASE("bound sources agree where both are defined") {
    Instance inst = build_instance(parse_all(1, {"x1"}), 1, 2, 1);
    u64 u_len = resolve_bound(inst, {BoundSource::finite_length, 0});
    u64 u_emp = resolve_bound(inst, {BoundSource::empirical, 0});
    CHECK(u_len >= 1);
    CHECK(u_emp >= 1);
    CHECK(u_emp <= u_len);  // the chain stabilizes no later than the length
}

TEST_CASE("user bound is taken verbatim and validated") {
    Instance inst = build_instance(parse_all(1, {"x1"}), 1, 2, 1);
    CHECK(resolve_bound(inst, {BoundSource::user, 3}) == 3);
    CHECK_THROWS_AS(resolve_bound(inst, {BoundSource::user, 0}),
                    std::runtime_error);
}

TEST_CASE("infinite length reports INCONCLUSIVE instead of guessing") {
    // H^1 of (x1) inside a two-variable ring is x2-torsion-free: infinite length
    Instance inst = build_instance(parse_all(2, {"x1"}), 2, 3, 1);
    Verdict v = decide_vanishing(inst, {BoundSource::finite_length, 0},
                                 Mode::streaming);
    CHECK(v.result == ResultKind::INCONCLUSIVE);
    CHECK(!v.reason.empty());
    // a user-supplied bound unblocks the same instance
    Verdict v2 = decide_vanishing(inst, {BoundSource::user, 1}, Mode::streaming);
    CHECK(v2.result == ResultKind::NONVANISHING);
}

TEST_CASE("kernel chain is monotone and stabilizes at r") {
    for (u64 p : {2ull, 3ull}) {
        Instance inst = build_instance(parse_all(2, {"x1*x2", "x1 + x2"}), 2, p, 2);
        KernelChain chain = baseline_kernel_chain(inst, 4);
        REQUIRE(chain.stabilized);
        CHECK(chain.r >= 1);
        REQUIRE(chain.kernels.size() >= static_cast<size_t>(chain.r) + 1);
        const Ring& R = inst.ring;
        for (size_t j = 0; j + 1 < chain.kernels.size(); ++j) {
            // ker beta_j is contained in ker beta_{j+1}
            std::vector<FreeElem> next = chain.kernels[j + 1];
            if (next.empty()) {
                for (const auto& g : chain.kernels[j]) CHECK(g.is_zero());
                continue;
            }
            ModuleGB next_gb = buchberger(R, next, inst.module.rank);
            for (const auto& g : chain.kernels[j])
                CHECK(is_member(R, g, next_gb));
        }
        CHECK(submodule_equal(R, inst.module.rank, chain.kernels[chain.r - 1],
                              chain.kernels[chain.r]));
    }
}

TEST_CASE("once the streamed map dies it stays dead") {
    for (u64 p : {2ull, 3ull}) {
        Instance inst = build_instance(parse_all(1, {"x1", "x1"}), 1, p, 2);
        if (inst.trivially_vanishing()) continue;
        StreamCounters sc;
        std::optional<Witness> w;
        bool z1 = beta_j_is_zero_streamed(inst, 1, sc, w);
        bool z2 = beta_j_is_zero_streamed(inst, 2, sc, w);
        if (z1) CHECK(z2);
    }
}

TEST_CASE("verdict recheck rejects tampering") {
    Instance inst = build_instance(parse_all(1, {"x1"}), 1, 2, 1);
    Verdict v = decide_vanishing(inst, {BoundSource::finite_length, 0},
                                 Mode::streaming);
    REQUIRE(v.witness.has_value());

    Verdict out_of_range = v;
    out_of_range.witness->offset = ExpVec{99};  // beyond the level box
    CHECK_THROWS_AS(recheck_witness(inst, out_of_range), std::invalid_argument);

    Verdict bad_gen = v;
    bad_gen.witness->gen_index = 42;
    CHECK_THROWS_AS(recheck_witness(inst, bad_gen), std::invalid_argument);

    Verdict missing = v;
    missing.witness.reset();
    CHECK_THROWS_AS(recheck_witness(inst, missing), std::invalid_argument);
}

TEST_CASE("degenerate generators produce warnings, not failures") {
    Instance inst = build_instance(parse_all(2, {"x1", "0"}), 2, 3, 2);
    CHECK(!inst.warnings.empty());
    Verdict v = decide_vanishing(inst, {BoundSource::user, 1}, Mode::baseline);
    CHECK(v.result != ResultKind::INCONCLUSIVE);
}

TEST_CASE("cohomology degree outside the complex is rejected") {
    CHECK_THROWS(build_instance(parse_all(1, {"x1"}), 1, 2, 2));
    CHECK_THROWS(build_instance(parse_all(1, {"x1"}), 1, 2, -1));
}

TEST_CASE("compare mode carries both the witness and the chain index") {
    Instance inst = build_instance(parse_all(2, {"x1", "x2"}), 2, 2, 2);
    Verdict v = decide_vanishing(inst, {BoundSource::finite_length, 0},
                                 Mode::compare);
    CHECK(v.mode == Mode::compare);
    CHECK(v.result == ResultKind::NONVANISHING);
    CHECK(v.r.has_value());
    CHECK(v.witness.has_value());
    CHECK(v.counters.max_degree <= 64);  // sanity: instrumentation populated
    CHECK(v.counters.tuples >= 1);
}
