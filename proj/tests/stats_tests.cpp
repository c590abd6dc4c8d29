#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "jnismell/stats.hpp"

using namespace jnismell;

namespace {

// Synthetic logistic sample shared by several cases: two uniform covariates
// in [-1, 1] and a Bernoulli response from known coefficients. The draw
// order (x1, x2, y per row) is part of the fixture's identity.
struct Sample {
    FeatureMatrix matrix;
};

Sample make_sample(std::uint32_t seed, int n, double b0, double b1, double b2) {
    std::mt19937 gen(seed);
    auto unit = [&] {
        return static_cast<double>(gen()) / 4294967296.0;  // [0, 1)
    };
    Sample s;
    s.matrix.column_names = {"x1", "x2"};
    for (int i = 0; i < n; ++i) {
        double x1 = 2.0 * unit() - 1.0;
        double x2 = 2.0 * unit() - 1.0;
        double eta = b0 + b1 * x1 + b2 * x2;
        double p = 1.0 / (1.0 + std::exp(-eta));
        int y = unit() < p ? 1 : 0;
        s.matrix.rows.push_back({x1, x2});
        s.matrix.response.push_back(y);
    }
    return s;
}

// Straight Newton-Raphson fit with its own linear solver, kept deliberately
// separate from the library's iteratively reweighted implementation.
std::vector<double> newton_fit(const FeatureMatrix& matrix) {
    const size_t n = matrix.rows.size();
    const size_t m = matrix.column_names.size() + 1;
    std::vector<double> beta(m, 0.0);
    auto x_at = [&](size_t i, size_t k) {
        return k == 0 ? 1.0 : matrix.rows[i][k - 1];
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> grad(m, 0.0);
        std::vector<std::vector<double>> hess(m, std::vector<double>(m, 0.0));
        for (size_t i = 0; i < n; ++i) {
            double eta = 0.0;
            for (size_t k = 0; k < m; ++k) eta += beta[k] * x_at(i, k);
            double mu = 1.0 / (1.0 + std::exp(-eta));
            double w = mu * (1.0 - mu);
            for (size_t r = 0; r < m; ++r) {
                grad[r] += (matrix.response[i] - mu) * x_at(i, r);
                for (size_t c = 0; c < m; ++c)
                    hess[r][c] += w * x_at(i, r) * x_at(i, c);
            }
        }
        // solve hess * delta = grad by Gauss-Jordan with partial pivoting
        std::vector<std::vector<double>> a = hess;
        std::vector<double> rhs = grad;
        for (size_t col = 0; col < m; ++col) {
            size_t pivot = col;
            for (size_t r = col + 1; r < m; ++r)
                if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
            std::swap(a[col], a[pivot]);
            std::swap(rhs[col], rhs[pivot]);
            for (size_t r = 0; r < m; ++r) {
                if (r == col) continue;
                double f = a[r][col] / a[col][col];
                for (size_t c = 0; c < m; ++c) a[r][c] -= f * a[col][c];
                rhs[r] -= f * rhs[col];
            }
        }
        double max_step = 0.0;
        for (size_t k = 0; k < m; ++k) {
            double d = rhs[k] / a[k][k];
            beta[k] += d;
            max_step = std::max(max_step, std::fabs(d));
        }
        if (max_step < 1e-12) break;
    }
    return beta;
}

}  // namespace

TEST_SUITE("fisher exact") {

TEST_CASE("small table by hand") {
    // margins 4/4 and 4/4 admit five tables; the two extremes are the only
    // ones strictly less probable than the observed diagonal split
    FisherResult r = fisher_exact({3, 1, 1, 3});
    REQUIRE(r.odds_ratio.has_value());
    CHECK(*r.odds_ratio == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(r.p_value == doctest::Approx(34.0 / 70.0).epsilon(1e-12));
    CHECK_FALSE(r.significant);
}

TEST_CASE("the balanced table is as even as it gets") {
    FisherResult r = fisher_exact({1, 1, 1, 1});
    CHECK(*r.odds_ratio == doctest::Approx(1.0));
    CHECK(r.p_value == doctest::Approx(1.0));
}

TEST_CASE("published-style rows with known values") {
    struct Row {
        ContingencyTable t;
        double or_expect, lo, hi, p;
    };
    const Row rows[] = {
        {{15, 2, 7, 13}, 13.928571, 0.895778, 4.372106, 0.002001},
        {{89, 90, 23, 98}, 4.213527, 0.897861, 1.978739, 0.0},
        {{6, 28, 1, 43}, 9.214286, 0.050869, 4.390641, 0.038940},
    };
    for (const Row& row : rows) {
        FisherResult r = fisher_exact(row.t);
        REQUIRE(r.odds_ratio.has_value());
        CHECK(*r.odds_ratio == doctest::Approx(row.or_expect).epsilon(1e-5));
        CHECK(*r.ci_low == doctest::Approx(row.lo).epsilon(1e-4));
        CHECK(*r.ci_high == doctest::Approx(row.hi).epsilon(1e-4));
        CHECK(r.p_value == doctest::Approx(row.p).scale(1.0).epsilon(1e-5));
    }
    // both rows clear 0.05 and their log-ratio intervals exclude zero
    CHECK(fisher_exact({6, 28, 1, 43}).significant);
    CHECK(fisher_exact({15, 2, 7, 13}).significant);
}

TEST_CASE("zero margins leave the ratio undefined") {
    FisherResult r = fisher_exact({0, 0, 5, 5});  // nobody is buggy
    CHECK_FALSE(r.odds_ratio.has_value());
    CHECK_FALSE(r.infinite_odds_ratio);
    CHECK(r.p_value == doctest::Approx(1.0));
    CHECK_FALSE(r.significant);
}

TEST_CASE("a zero denominator with live margins is infinite") {
    FisherResult r = fisher_exact({3, 2, 0, 4});
    CHECK(r.infinite_odds_ratio);
    REQUIRE(r.odds_ratio.has_value());
    CHECK(std::isinf(*r.odds_ratio));
    CHECK_FALSE(r.ci_low.has_value());
}

TEST_CASE("two-sided p is invariant under column swap") {
    FisherResult a = fisher_exact({15, 2, 7, 13});
    FisherResult b = fisher_exact({7, 13, 15, 2});
    CHECK(a.p_value == doctest::Approx(b.p_value).epsilon(1e-12));
}

TEST_CASE("negative cells are rejected") {
    CHECK_THROWS_AS(fisher_exact({-1, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(fisher_exact({0, 0, 0, 0}), std::invalid_argument);
}

}  // suite

TEST_SUITE("spearman") {

TEST_CASE("tied values get averaged ranks") {
    std::vector<double> x = {1, 2, 2, 4};
    std::vector<double> y = {1, 3, 2, 4};
    auto rho = spearman(x, y);
    REQUIRE(rho.has_value());
    CHECK(*rho == doctest::Approx(0.9486832980505138).epsilon(1e-12));
}

TEST_CASE("monotone sequences hit the poles") {
    std::vector<double> up = {1, 5, 9, 200};
    std::vector<double> up2 = {2, 3, 4, 5};
    std::vector<double> down = {9, 7, 4, -2};
    CHECK(*spearman(up, up2) == doctest::Approx(1.0));
    CHECK(*spearman(up, down) == doctest::Approx(-1.0));
}

TEST_CASE("constant input has no rank variance") {
    std::vector<double> flat = {3, 3, 3, 3};
    std::vector<double> vary = {1, 2, 3, 4};
    CHECK_FALSE(spearman(flat, vary).has_value());
    CHECK_FALSE(spearman(vary, flat).has_value());
}

TEST_CASE("bad shapes are rejected") {
    std::vector<double> a = {1, 2, 3};
    std::vector<double> b = {1, 2};
    CHECK_THROWS_AS(spearman(a, b), std::invalid_argument);
    CHECK_THROWS_AS(spearman(b, b), std::invalid_argument);
}

}  // suite

TEST_SUITE("collinearity pruning") {

TEST_CASE("the lower-prevalence twin is dropped") {
    FeatureMatrix m;
    m.column_names = {"alpha", "beta", "gamma"};
    // beta duplicates alpha; gamma is independent
    m.rows = {{1, 1, 0}, {2, 2, 5}, {3, 3, 1}, {4, 4, 4}, {5, 5, 2}};
    m.response = {0, 1, 0, 1, 0};
    std::vector<double> prevalence = {0.5, 0.3, 0.4};

    std::vector<std::string> dropped = prune_collinear(m, prevalence);
    CHECK(dropped == std::vector<std::string>{"beta"});
    CHECK(m.column_names == std::vector<std::string>{"alpha", "gamma"});
    REQUIRE(m.rows[1].size() == 2);
    CHECK(m.rows[1][1] == 5);
}

TEST_CASE("prevalence ties break by column name") {
    FeatureMatrix m;
    m.column_names = {"b_col", "a_col"};
    m.rows = {{1, 1}, {2, 2}, {3, 3}, {4, 4}};
    m.response = {0, 1, 0, 1};
    std::vector<double> prevalence = {0.5, 0.5};
    std::vector<std::string> dropped = prune_collinear(m, prevalence);
    // the lexicographically larger name loses
    CHECK(dropped == std::vector<std::string>{"b_col"});
    CHECK(m.column_names == std::vector<std::string>{"a_col"});
}

TEST_CASE("uncorrelated columns survive") {
    FeatureMatrix m;
    m.column_names = {"a", "b"};
    m.rows = {{1, 5}, {2, 1}, {3, 4}, {4, 2}, {5, 3}};
    m.response = {0, 1, 0, 1, 0};
    std::vector<double> prevalence = {0.5, 0.5};
    CHECK(prune_collinear(m, prevalence).empty());
    CHECK(m.column_names.size() == 2);
}

TEST_CASE("prevalence must match the columns") {
    FeatureMatrix m;
    m.column_names = {"a", "b"};
    m.rows = {{1, 2}};
    m.response = {1};
    std::vector<double> prevalence = {0.5};
    CHECK_THROWS_AS(prune_collinear(m, prevalence), std::invalid_argument);
}

}  // suite

TEST_SUITE("logistic regression") {

TEST_CASE("intercept-only fit is the log odds of the base rate") {
    FeatureMatrix m;
    for (int i = 0; i < 10; ++i) {
        m.rows.push_back({});
        m.response.push_back(i < 7 ? 1 : 0);
    }
    RegressionResult r = logistic_fit(m);
    REQUIRE(r.converged);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].name == "(Intercept)");
    CHECK(r.terms[0].coefficient ==
          doctest::Approx(std::log(7.0 / 3.0)).epsilon(1e-9));
    CHECK(r.residual_deviance == doctest::Approx(r.null_deviance).epsilon(1e-12));
    CHECK(r.aic == doctest::Approx(r.residual_deviance + 2.0).epsilon(1e-12));
}

TEST_CASE("fixed-seed fit matches an independent newton solve") {
    Sample s = make_sample(2024, 40, -0.4, 1.3, -0.8);

    // pin the draw so the fixture cannot silently drift
    int head[10];
    int total = 0;
    for (int i = 0; i < 40; ++i) {
        if (i < 10) head[i] = s.matrix.response[i];
        total += s.matrix.response[i];
    }
    const int expected_head[10] = {0, 1, 0, 1, 0, 0, 1, 0, 0, 1};
    for (int i = 0; i < 10; ++i) CHECK(head[i] == expected_head[i]);
    CHECK(total == 15);

    RegressionResult r = logistic_fit(s.matrix);
    REQUIRE(r.converged);
    CHECK_FALSE(r.separation_detected);
    REQUIRE(r.terms.size() == 3);

    std::vector<double> oracle = newton_fit(s.matrix);
    for (size_t k = 0; k < 3; ++k)
        CHECK(r.terms[k].coefficient == doctest::Approx(oracle[k]).epsilon(1e-6));

    // values double-checked against a reference implementation
    CHECK(r.terms[0].coefficient == doctest::Approx(-0.7959778078).epsilon(1e-6));
    CHECK(r.terms[1].coefficient == doctest::Approx(1.6078573033).epsilon(1e-6));
    CHECK(r.terms[2].coefficient == doctest::Approx(-1.8158101543).epsilon(1e-6));
    CHECK(r.terms[0].std_error == doctest::Approx(0.4220176221).epsilon(1e-6));
    CHECK(r.terms[1].std_error == doctest::Approx(0.8540911458).epsilon(1e-6));
    CHECK(r.terms[2].std_error == doctest::Approx(0.6733480292).epsilon(1e-6));
    CHECK(r.residual_deviance == doctest::Approx(40.2862190822).epsilon(1e-8));
    CHECK(r.null_deviance == doctest::Approx(52.9250590526).epsilon(1e-8));
    CHECK(r.terms[2].z == doctest::Approx(-2.696689).epsilon(1e-4));
    CHECK(r.terms[2].p_value == doctest::Approx(0.007003).epsilon(1e-3));

    // the information-criterion identity must hold to the last bit of the
    // deviance: two parameters... intercept plus two slopes
    CHECK(r.aic == doctest::Approx(r.residual_deviance + 2.0 * 3).epsilon(1e-12));
    CHECK(r.aic == doctest::Approx(46.2862190822).epsilon(1e-8));

    // at the optimum the fitted probabilities reproduce the observed total
    double fitted_sum = 0.0;
    REQUIRE(r.fitted_probabilities.size() == 40);
    for (double p : r.fitted_probabilities) {
        CHECK(p > 0.0);
        CHECK(p < 1.0);
        fitted_sum += p;
    }
    CHECK(fitted_sum == doctest::Approx(15.0).epsilon(1e-6));
}

TEST_CASE("large samples recover the generating coefficients") {
    Sample s = make_sample(77, 2000, 0.3, 1.0, -0.5);
    RegressionResult r = logistic_fit(s.matrix);
    REQUIRE(r.converged);
    const double truth[3] = {0.3, 1.0, -0.5};
    for (size_t k = 0; k < 3; ++k) {
        CHECK(std::fabs(r.terms[k].coefficient - truth[k]) <
              3.0 * r.terms[k].std_error);
    }
}

TEST_CASE("perfect separation is flagged, not reported as a fit") {
    FeatureMatrix m;
    m.column_names = {"x"};
    for (int i = 0; i < 12; ++i) {
        double x = i - 5.5;
        m.rows.push_back({x});
        m.response.push_back(x > 0 ? 1 : 0);
    }
    RegressionResult r = logistic_fit(m);
    CHECK(r.separation_detected);
    CHECK_FALSE(r.converged);
}

TEST_CASE("duplicated columns are aliased rather than fitted") {
    Sample s = make_sample(5, 60, 0.2, 0.9, 0.0);
    FeatureMatrix m = s.matrix;
    m.column_names = {"x1", "x2", "x1_copy"};
    for (auto& row : m.rows) row.push_back(row[0]);

    RegressionResult r = logistic_fit(m);
    REQUIRE(r.terms.size() == 4);
    int aliased = 0;
    for (const RegressionTerm& t : r.terms) aliased += t.aliased ? 1 : 0;
    CHECK(aliased == 1);
    CHECK_FALSE(r.terms[0].aliased);  // never the intercept
    // aic counts only the retained columns
    CHECK(r.aic == doctest::Approx(r.residual_deviance + 2.0 * 3).epsilon(1e-12));
}

TEST_CASE("shape errors are rejected") {
    FeatureMatrix m;
    m.column_names = {"x"};
    m.rows = {{1.0}, {2.0}};
    m.response = {1};
    CHECK_THROWS_AS(logistic_fit(m), std::invalid_argument);
    m.response = {1, 0};
    m.rows[1] = {};
    CHECK_THROWS_AS(logistic_fit(m), std::invalid_argument);
}

}  // suite

TEST_SUITE("ranking and csv output") {

namespace {

RegressionResult result_with(const std::vector<RegressionTerm>& named_terms) {
    RegressionResult r;
    RegressionTerm intercept;
    intercept.name = "(Intercept)";
    r.terms.push_back(intercept);
    for (const RegressionTerm& t : named_terms) r.terms.push_back(t);
    r.converged = true;
    return r;
}

RegressionTerm term(const std::string& name, double coef, double p,
                    bool aliased = false) {
    RegressionTerm t;
    t.name = name;
    t.coefficient = coef;
    t.p_value = p;
    t.aliased = aliased;
    return t;
}

}  // namespace

TEST_CASE("per-term tallies across systems") {
    std::vector<std::pair<std::string, RegressionResult>> per_system = {
        {"sysA", result_with({term("LeakyHandles", 1.2, 0.004),
                              term("ChattyCalls", -0.3, 0.6)})},
        {"sysB", result_with({term("LeakyHandles", 0.8, 0.03),
                              term("ChattyCalls", 0.1, 0.7)})},
        {"sysC", result_with({term("LeakyHandles", 0.0, 1.0, true),
                              term("ChattyCalls", 0.5, 0.2)})},
    };
    auto rows = rank_smells(per_system, {"LeakyHandles", "ChattyCalls"});
    REQUIRE(rows.size() == 2);

    CHECK(rows[0].smell_type == "LeakyHandles");
    CHECK(rows[0].models == 2);       // aliased in sysC
    CHECK(rows[0].positive == 2);
    CHECK(rows[0].pct_positive == doctest::Approx(1.0));
    CHECK(rows[0].top5 == 2);
    CHECK(rows[0].significant == 1);  // only sysA clears p < 0.01

    CHECK(rows[1].models == 3);
    CHECK(rows[1].positive == 2);
    CHECK(rows[1].pct_positive == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("fisher csv carries NA and Inf variants") {
    std::vector<std::pair<std::string, ContingencyTable>> rows = {
        {"r1", {3, 1, 1, 3}},
        {"r2", {0, 0, 5, 5}},
        {"r3", {3, 2, 0, 4}},
    };
    std::string csv = fisher_csv(rows);
    auto lines = [&] {
        std::vector<std::string> out;
        size_t start = 0;
        while (start < csv.size()) {
            size_t nl = csv.find('\n', start);
            out.push_back(csv.substr(start, nl - start));
            start = nl + 1;
        }
        return out;
    }();
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "release,sb,bns,snb,nbns,or,p,ci_low,ci_high,significant");
    CHECK(lines[1].find("r1,3,1,1,3,9.0000,") == 0);
    CHECK(lines[2].find(",NA,") != std::string::npos);
    CHECK(lines[3].find("Inf") != std::string::npos);
}

TEST_CASE("regression csv renders aliased terms as NA") {
    auto r = result_with({term("Gone", 0.0, 1.0, true)});
    std::string csv = regression_csv({{"sysA", r}});
    CHECK(csv.find("system,term,coef,stderr,z,p\n") == 0);
    CHECK(csv.find("sysA,Gone,NA,NA,NA,NA\n") != std::string::npos);
}

TEST_CASE("ranking csv shape") {
    SmellRankRow row;
    row.smell_type = "LeakyHandles";
    row.models = 4;
    row.positive = 3;
    row.pct_positive = 0.75;
    row.top5 = 2;
    row.significant = 1;
    CHECK(ranking_csv({row}) ==
          "smell_type,models,positive,pct_positive,top5,significant\n"
          "LeakyHandles,4,3,0.7500,2,1\n");
}

}  // suite
