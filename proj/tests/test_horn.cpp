#include "doctest.h"
#include "test_support.hpp"

#include "toric/errors.hpp"

#include <numeric>

using namespace toric;
using namespace toric::testing;

namespace {

const std::vector<std::size_t> kBlockB{0, 0, 1, 1};
const std::vector<std::size_t> kBlockC{0, 0, 0, 1, 1};

HornPair tfp_pair() { return tfp_horn_pair(square_horn(), trapezoid_horn(), 2, kBlockB, kBlockC); }

RationalVector as_rationals(const std::vector<long long>& u) {
    RationalVector out;
    for (auto v : u) out.emplace_back(static_cast<long>(v));
    return out;
}

} // namespace

TEST_CASE("horn_parametrize") {
    auto d1 = simplex_horn_pair(2);
    CHECK(horn_parametrize(d1, qv({"3", "5"})) == qv({"3/8", "5/8"}));
    CHECK(horn_parametrize(square_horn(), qv({"3", "1", "1", "1"})) == qv({"4/9", "2/9", "2/9", "1/9"}));
    CHECK_THROWS_AS(horn_parametrize(d1, qv({"0", "0"})), ZeroToNegativePower);
    // 0^0 = 1 and 0^positive = 0
    CHECK(horn_parametrize(d1, qv({"0", "2"})) == qv({"0", "1"}));
    CHECK_THROWS_AS(horn_parametrize(d1, qv({"1"})), DimensionMismatch);
}

TEST_CASE("HornMatrix and HornPair invariants") {
    CHECK_THROWS_AS(HornMatrix({{1, 0}, {0, 1}}), InvalidHornMatrix);
    CHECK_THROWS_AS(HornMatrix({{1, -1}, {-1}}), InvalidHornMatrix);
    HornPair p = simplex_horn_pair(2);
    p.lambda = qv({"1", "0"});
    CHECK_THROWS_AS(p.validate(), InvalidHornMatrix);
    p.lambda = qv({"1"});
    CHECK_THROWS_AS(p.validate(), InvalidHornMatrix);
}

TEST_CASE("validate_horn_pair") {
    auto sq = validate_horn_pair(square_horn(), 100, 0);
    CHECK(sq.sums_to_one);
    CHECK(sq.positive);
    CHECK(sq.symbolic_checked);
    auto tr = validate_horn_pair(trapezoid_horn(), 100, 0);
    CHECK(tr.sums_to_one);
    CHECK(tr.positive);

    auto bad = square_horn();
    bad.lambda = qv({"1", "1", "1", "2"});
    auto r = validate_horn_pair(bad, 100, 0);
    CHECK_FALSE(r.sums_to_one);
    CHECK(r.witness.find("5/4") != std::string::npos);
    CHECK(r.witness.find("u=(1,1,1,1)") != std::string::npos);

    auto negative = simplex_horn_pair(2);
    negative.lambda = qv({"1", "-1"});
    negative.H = HornMatrix({{1, 0}, {0, 1}, {-1, -1}});
    auto n = validate_horn_pair(negative, 10, 0);
    CHECK_FALSE(n.positive);
}

TEST_CASE("simplex_horn_pair") {
    auto d1 = simplex_horn_pair(2);
    CHECK(d1.H.entries() == std::vector<std::vector<long long>>{{1, 0}, {0, 1}, {-1, -1}});
    CHECK(d1.lambda == qv({"-1", "-1"}));
    auto pt = simplex_horn_pair(1);
    CHECK(pt.H.entries() == std::vector<std::vector<long long>>{{1}, {-1}});
    CHECK(horn_parametrize(pt, qv({"7"})) == qv({"1"}));
    CHECK(horn_parametrize(simplex_horn_pair(3), qv({"1", "2", "3"})) == qv({"1/6", "2/6", "3/6"}));
    CHECK(validate_horn_pair(simplex_horn_pair(4)).ok());
}

TEST_CASE("tfp_horn_pair reproduces the reference matrix") {
    auto p = tfp_pair();
    CHECK(p.H.entries() == reference_tfp_horn_matrix());
    CHECK(p.lambda == reference_tfp_lambda());
    CHECK(p.H.column(5) == std::vector<long long>{0, 1, 1, 0, -1, -1, 2, 0, 0, 1, -1, -2, -1, 0, 1});
    CHECK(p.lambda[1] == 2);
    CHECK(p.column_labels[5] == "(1,2,3)");
    CHECK(validate_horn_pair(p, 100, 0).ok());
}

TEST_CASE("tfp_horn_pair with a multigrading checks class sizes") {
    auto g = validate_multigrading(square_graded(), trapezoid_graded(), degrees_e1_e2());
    CHECK(tfp_horn_pair(square_horn(), trapezoid_horn(), g, kBlockB, kBlockC).H.entries() ==
          reference_tfp_horn_matrix());
    CHECK_THROWS_AS(tfp_horn_pair(square_horn(), trapezoid_horn(), g, {0, 1, 1, 1}, kBlockC),
                    InconsistentBlockIndex);
    CHECK_THROWS_AS(tfp_horn_pair(square_horn(), trapezoid_horn(), 2, {0, 0, 1}, kBlockC), InconsistentBlockIndex);
    CHECK_THROWS_AS(tfp_horn_pair(square_horn(), trapezoid_horn(), 2, {0, 0, 0, 0}, kBlockC),
                    InconsistentBlockIndex);
    CHECK_THROWS_AS(tfp_horn_pair(square_horn(), trapezoid_horn(), 2, {0, 0, 2, 1}, kBlockC),
                    InconsistentBlockIndex);
}

TEST_CASE("minimize_horn_pair") {
    auto r = minimize_horn_pair(square_horn());
    CHECK(r.pair.H.rows() == 5);
    CHECK(r.pair.H.entries().back() == std::vector<long long>{-2, -2, -2, -2});
    CHECK(r.pair.lambda == qv({"4", "4", "4", "4"}));

    auto t = minimize_horn_pair(tfp_pair());
    CHECK(t.pair.H.rows() < 15);
    CHECK(validate_horn_pair(t.pair).ok());

    auto d1 = minimize_horn_pair(simplex_horn_pair(2));
    CHECK(d1.pair.H == simplex_horn_pair(2).H);
    CHECK(d1.pair.lambda == simplex_horn_pair(2).lambda);
    CHECK(d1.notes.empty());

    HornPair zero_sum;
    zero_sum.H = HornMatrix({{1, -1}, {-1, 1}, {1, 1}, {-1, -1}});
    zero_sum.lambda = qv({"1", "1"});
    CHECK_THROWS_AS(minimize_horn_pair(zero_sum, true), MergeAborted);
    auto lenient = minimize_horn_pair(zero_sum, false);
    CHECK(lenient.pair.H.rows() == 4);
    CHECK_FALSE(lenient.notes.empty());
}

TEST_CASE("align_columns") {
    auto aligned = align_columns(trapezoid_horn(), {"(0,0)", "(1,0)", "(2,0)", "(0,1)", "(1,1)"});
    CHECK(aligned.H.column(3) == trapezoid_horn().H.column(4));
    CHECK(aligned.lambda[3] == 1);
    CHECK_THROWS_AS(align_columns(trapezoid_horn(), {"a", "b", "c", "d", "e"}), DimensionMismatch);
}

// Properties ------------------------------------------------------------------

TEST_CASE("property: constructed Horn matrices have zero column sums") {
    for (const auto& p : {simplex_horn_pair(1), simplex_horn_pair(5), tfp_pair(), minimize_horn_pair(tfp_pair()).pair}) {
        for (std::size_t c = 0; c < p.H.cols(); ++c) {
            auto col = p.H.column(c);
            CHECK(std::accumulate(col.begin(), col.end(), 0LL) == 0);
        }
    }
}

TEST_CASE("property: TFP Horn parametrization is the product formula") {
    auto pair = tfp_pair();
    auto b = square_horn(), c = trapezoid_horn();
    // column (i, j, k) of the TFP pair, in order, refers to these B and C columns
    std::vector<std::size_t> col_b, col_c, col_i;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t jb = 0; jb < 4; ++jb)
            for (std::size_t kc = 0; kc < 5; ++kc)
                if (kBlockB[jb] == i && kBlockC[kc] == i) {
                    col_b.push_back(jb);
                    col_c.push_back(kc);
                    col_i.push_back(i);
                }
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        auto counts = rng.counts(10);
        std::vector<long long> ub(4, 0), uc(5, 0), ua(2, 0);
        long long total = 0;
        for (std::size_t n = 0; n < 10; ++n) {
            ub[col_b[n]] += counts[n];
            uc[col_c[n]] += counts[n];
            ua[col_i[n]] += counts[n];
            total += counts[n];
        }
        auto phi = horn_parametrize(pair, as_rationals(counts));
        auto pb = horn_parametrize(b, as_rationals(ub));
        auto pc = horn_parametrize(c, as_rationals(uc));
        for (std::size_t n = 0; n < 10; ++n) {
            Rational pa(static_cast<long>(ua[col_i[n]]), static_cast<long>(total));
            pa.canonicalize();
            CHECK(phi[n] == pb[col_b[n]] * pc[col_c[n]] / pa);
        }
    }
}

TEST_CASE("property: minimization preserves the parametrization") {
    Rng rng(32);
    for (const auto& p : {square_horn(), trapezoid_horn(), tfp_pair()}) {
        auto m = minimize_horn_pair(p).pair;
        for (int t = 0; t < 100; ++t) {
            auto u = as_rationals(rng.counts(p.H.cols()));
            CHECK(horn_parametrize(p, u) == horn_parametrize(m, u));
        }
    }
}

TEST_CASE("property: permuting columns permutes the parametrization") {
    Rng rng(33);
    auto p = tfp_pair();
    for (int t = 0; t < 10; ++t) {
        std::vector<std::size_t> perm(p.H.cols());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.gen);
        auto q2 = permute_columns(p, perm);
        auto u = as_rationals(rng.counts(p.H.cols()));
        RationalVector up(u.size());
        for (std::size_t c = 0; c < perm.size(); ++c) up[c] = u[perm[c]];
        auto phi = horn_parametrize(p, u);
        auto phip = horn_parametrize(q2, up);
        for (std::size_t c = 0; c < perm.size(); ++c) CHECK(phip[c] == phi[perm[c]]);
    }
}
