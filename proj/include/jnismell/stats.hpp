#ifndef JNISMELL_STATS_HPP
#define JNISMELL_STATS_HPP

#include <optional>
#include <string>
#include <vector>

namespace jnismell {

// 2x2 table of file counts:
//                 buggy   not buggy
//   smelly          sb        snb
//   not smelly     bns       nbns
struct ContingencyTable {
    long long sb = 0;
    long long bns = 0;
    long long snb = 0;
    long long nbns = 0;
};

struct FisherResult {
    // Odds ratio sb*nbns / (bns*snb); +inf when only the denominator is
    // zero; absent when a row or column margin is zero.
    std::optional<double> odds_ratio;
    bool infinite_odds_ratio = false;
    double p_value = 1.0;
    // Wald interval for ln(OR); present only when all four cells are > 0.
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    bool significant = false;  // p < 0.05 and the interval excludes 0
};

// Two-sided exact test: sums hypergeometric probabilities of all tables (with
// the observed margins) no more probable than the observed one, with 1e-12
// relative slack on the comparison.
FisherResult fisher_exact(const ContingencyTable& table);

// Spearman rank correlation as Pearson over mid-ranks (ties get averaged
// ranks). Requires equal lengths >= 3; absent when either side has zero rank
// variance.
std::optional<double> spearman(const std::vector<double>& x,
                               const std::vector<double>& y);

struct FeatureMatrix {
    std::vector<std::string> column_names;
    // Row-major: rows x columns, no intercept column.
    std::vector<std::vector<double>> rows;
    std::vector<int> response;  // 0/1 per row
};

// Drops the lower-prevalence member of every column pair with
// |spearman| >= threshold, re-checking after each drop. Pairs are processed
// by descending |rho|, ties by column-name pair. Returns dropped names.
std::vector<std::string> prune_collinear(FeatureMatrix& matrix,
                                         const std::vector<double>& prevalence,
                                         double threshold = 0.6);

struct RegressionTerm {
    std::string name;  // "(Intercept)" or a column name
    double coefficient = 0.0;
    double std_error = 0.0;
    double z = 0.0;
    double p_value = 1.0;
    bool aliased = false;  // dropped as NA due to singularities
};

struct RegressionResult {
    std::vector<RegressionTerm> terms;  // intercept first
    bool converged = false;
    bool separation_detected = false;
    int iterations = 0;
    double residual_deviance = 0.0;
    double null_deviance = 0.0;
    double aic = 0.0;  // residual_deviance + 2 * (1 + retained columns)
    std::vector<double> fitted_probabilities;
};

// Logistic regression by iteratively reweighted least squares: beta starts at
// zero, converges when max |delta beta| < 1e-8, caps at 50 iterations.
// Aliased (singular) columns are dropped and flagged; perfect separation is
// flagged instead of being reported as converged.
RegressionResult logistic_fit(const FeatureMatrix& matrix);

struct SmellRankRow {
    std::string smell_type;
    int models = 0;            // systems where the term was estimable
    int positive = 0;          // coefficient > 0
    double pct_positive = 0.0; // positive / models
    int top5 = 0;              // appearances among a system's 5 largest positive coefficients
    int significant = 0;       // coefficient > 0 and p < 0.01
};

std::vector<SmellRankRow> rank_smells(
    const std::vector<std::pair<std::string, RegressionResult>>& per_system,
    const std::vector<std::string>& smell_terms);

// fisher.csv: release,sb,bns,snb,nbns,or,p,ci_low,ci_high,significant
std::string fisher_csv(
    const std::vector<std::pair<std::string, ContingencyTable>>& per_release);
// regression.csv: system,term,coef,stderr,z,p
std::string regression_csv(
    const std::vector<std::pair<std::string, RegressionResult>>& per_system);
// ranking.csv: smell_type,models,positive,pct_positive,top5,significant
std::string ranking_csv(const std::vector<SmellRankRow>& rows);

}  // namespace jnismell

#endif
