#include "jnismell/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jnismell/csv.hpp"

namespace jnismell {
namespace {

double log_choose(long long n, long long k) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

std::vector<double> midranks(const std::vector<double>& v) {
    const size_t n = v.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        i = j + 1;
    }
    return ranks;
}

double normal_two_sided_p(double z) {
    return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// Returns the index of the first column whose pivot collapses, or -1.
int solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const size_t n = a.size();
    double scale = 0.0;
    for (const auto& row : a)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    const double tol = 1e-10 * (1.0 + scale);

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < tol) return static_cast<int>(col);
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            double factor = a[r][col] / a[col][col];
            if (factor == 0.0) continue;
            for (size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    for (size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return -1;
}

// Inverts a symmetric positive-definite matrix by Gauss-Jordan; returns false
// when a pivot collapses.
bool invert_matrix(std::vector<std::vector<double>> a,
                   std::vector<std::vector<double>>& inv) {
    const size_t n = a.size();
    inv.assign(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    double scale = 0.0;
    for (const auto& row : a)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    const double tol = 1e-12 * (1.0 + scale);

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < tol) return false;
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        double d = a[col][col];
        for (size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            double factor = a[r][col];
            if (factor == 0.0) continue;
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return true;
}

double binomial_deviance(const std::vector<int>& y,
                         const std::vector<double>& mu) {
    double dev = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
        double p = std::min(std::max(mu[i], 1e-12), 1.0 - 1e-12);
        dev += y[i] ? std::log(p) : std::log(1.0 - p);
    }
    return -2.0 * dev;
}

std::string or_na(const std::optional<double>& value, int digits) {
    return value ? format_fixed(*value, digits) : "NA";
}

std::string format_p(double p) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", p);
    return buf;
}

}  // namespace

FisherResult fisher_exact(const ContingencyTable& table) {
    FisherResult result;
    const long long sb = table.sb, bns = table.bns, snb = table.snb,
                    nbns = table.nbns;
    if (sb < 0 || bns < 0 || snb < 0 || nbns < 0)
        throw std::invalid_argument("contingency cells must be non-negative");
    const long long row_smelly = sb + snb;
    const long long row_clean = bns + nbns;
    const long long col_buggy = sb + bns;
    const long long col_ok = snb + nbns;
    const long long total = row_smelly + row_clean;
    if (total == 0) throw std::invalid_argument("empty contingency table");

    if (row_smelly == 0 || row_clean == 0 || col_buggy == 0 || col_ok == 0) {
        // Degenerate margins admit exactly one table.
        result.p_value = 1.0;
        return result;
    }

    const long long numerator = sb * nbns;
    const long long denominator = bns * snb;
    if (denominator > 0) {
        result.odds_ratio = static_cast<double>(numerator) / denominator;
    } else {
        result.infinite_odds_ratio = true;
        result.odds_ratio = std::numeric_limits<double>::infinity();
    }

    // Hypergeometric enumeration over the smelly∧buggy cell.
    const double log_denom = log_choose(total, col_buggy);
    auto log_prob = [&](long long k) {
        return log_choose(row_smelly, k) + log_choose(row_clean, col_buggy - k) -
               log_denom;
    };
    const double observed = log_prob(sb);
    const double slack = std::log1p(1e-12);
    const long long lo = std::max<long long>(0, col_buggy - row_clean);
    const long long hi = std::min(row_smelly, col_buggy);
    double p = 0.0;
    for (long long k = lo; k <= hi; ++k) {
        double lp = log_prob(k);
        if (lp <= observed + slack) p += std::exp(lp);
    }
    result.p_value = std::min(p, 1.0);

    if (sb > 0 && bns > 0 && snb > 0 && nbns > 0) {
        double center = std::log(*result.odds_ratio);
        double se = std::sqrt(1.0 / sb + 1.0 / bns + 1.0 / snb + 1.0 / nbns);
        result.ci_low = center - 1.96 * se;
        result.ci_high = center + 1.96 * se;
        result.significant = result.p_value < 0.05 &&
                             (*result.ci_low > 0.0 || *result.ci_high < 0.0);
    }
    return result;
}

std::optional<double> spearman(const std::vector<double>& x,
                               const std::vector<double>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("spearman inputs must have equal length");
    if (x.size() < 3)
        throw std::invalid_argument("spearman needs at least 3 observations");

    std::vector<double> rx = midranks(x);
    std::vector<double> ry = midranks(y);
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < rx.size(); ++i) {
        double dx = rx[i] - mx;
        double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

std::vector<std::string> prune_collinear(FeatureMatrix& matrix,
                                         const std::vector<double>& prevalence,
                                         double threshold) {
    if (prevalence.size() != matrix.column_names.size())
        throw std::invalid_argument(
            "prevalence must have one entry per column");

    std::vector<double> prev = prevalence;
    std::vector<std::string> dropped;

    auto column = [&](size_t c) {
        std::vector<double> v;
        v.reserve(matrix.rows.size());
        for (const auto& row : matrix.rows) v.push_back(row[c]);
        return v;
    };

    for (;;) {
        struct Pair {
            double abs_rho;
            std::string first_name;
            std::string second_name;
            size_t i, j;
        };
        std::vector<Pair> pairs;
        const size_t ncol = matrix.column_names.size();
        for (size_t i = 0; i < ncol; ++i) {
            std::vector<double> ci = column(i);
            for (size_t j = i + 1; j < ncol; ++j) {
                auto rho = spearman(ci, column(j));
                if (!rho || std::fabs(*rho) < threshold) continue;
                pairs.push_back({std::fabs(*rho), matrix.column_names[i],
                                 matrix.column_names[j], i, j});
            }
        }
        if (pairs.empty()) return dropped;

        std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.abs_rho != b.abs_rho) return a.abs_rho > b.abs_rho;
            if (a.first_name != b.first_name) return a.first_name < b.first_name;
            return a.second_name < b.second_name;
        });

        const Pair& worst = pairs.front();
        size_t victim;
        if (prev[worst.i] != prev[worst.j])
            victim = prev[worst.i] < prev[worst.j] ? worst.i : worst.j;
        else
            victim = matrix.column_names[worst.i] < matrix.column_names[worst.j]
                         ? worst.j
                         : worst.i;

        dropped.push_back(matrix.column_names[victim]);
        matrix.column_names.erase(matrix.column_names.begin() + victim);
        prev.erase(prev.begin() + victim);
        for (auto& row : matrix.rows) row.erase(row.begin() + victim);
    }
}

RegressionResult logistic_fit(const FeatureMatrix& matrix) {
    const size_t n = matrix.rows.size();
    const size_t p = matrix.column_names.size();
    if (matrix.response.size() != n)
        throw std::invalid_argument("response length must match rows");
    for (const auto& row : matrix.rows)
        if (row.size() != p)
            throw std::invalid_argument("ragged feature matrix");

    RegressionResult result;
    result.terms.resize(p + 1);
    result.terms[0].name = "(Intercept)";
    for (size_t c = 0; c < p; ++c) result.terms[c + 1].name = matrix.column_names[c];
    if (n == 0) return result;

    // active[k] = design-column index (0 = intercept, c+1 = column c).
    std::vector<size_t> active(p + 1);
    std::iota(active.begin(), active.end(), size_t{0});
    std::vector<bool> aliased(p + 1, false);

    auto design = [&](size_t row, size_t design_col) -> double {
        return design_col == 0 ? 1.0 : matrix.rows[row][design_col - 1];
    };

    std::vector<double> beta;
    std::vector<double> mu(n, 0.5), eta(n, 0.0);
    int iterations = 0;
    bool converged = false;

restart:
    beta.assign(active.size(), 0.0);
    iterations = 0;
    converged = false;
    for (int iter = 0; iter < 50; ++iter) {
        iterations = iter + 1;
        for (size_t i = 0; i < n; ++i) {
            double e = 0.0;
            for (size_t k = 0; k < active.size(); ++k)
                e += beta[k] * design(i, active[k]);
            eta[i] = e;
            mu[i] = 1.0 / (1.0 + std::exp(-e));
        }
        const size_t m = active.size();
        std::vector<std::vector<double>> xtwx(m, std::vector<double>(m, 0.0));
        std::vector<double> xtwz(m, 0.0);
        for (size_t i = 0; i < n; ++i) {
            double w = std::max(mu[i] * (1.0 - mu[i]), 1e-10);
            double z = eta[i] + (matrix.response[i] - mu[i]) / w;
            for (size_t r = 0; r < m; ++r) {
                double xr = design(i, active[r]);
                xtwz[r] += w * xr * z;
                for (size_t c = r; c < m; ++c)
                    xtwx[r][c] += w * xr * design(i, active[c]);
            }
        }
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < r; ++c) xtwx[r][c] = xtwx[c][r];

        std::vector<std::vector<double>> a = xtwx;
        std::vector<double> next = xtwz;
        int singular_at = solve_linear(a, next);
        if (singular_at >= 0) {
            // Linearly dependent column: drop it (NA due to singularities)
            // and refit from scratch. Never drop the intercept.
            size_t k = static_cast<size_t>(singular_at);
            if (k == 0 && active.size() > 1) k = active.size() - 1;
            aliased[active[k]] = true;
            active.erase(active.begin() + k);
            if (active.empty()) break;
            goto restart;
        }

        double max_delta = 0.0;
        for (size_t k = 0; k < m; ++k)
            max_delta = std::max(max_delta, std::fabs(next[k] - beta[k]));
        beta = next;
        if (max_delta < 1e-8) {
            converged = true;
            break;
        }
    }

    // Final state.
    for (size_t i = 0; i < n; ++i) {
        double e = 0.0;
        for (size_t k = 0; k < active.size(); ++k)
            e += beta[k] * design(i, active[k]);
        eta[i] = e;
        mu[i] = 1.0 / (1.0 + std::exp(-e));
    }
    result.iterations = iterations;
    result.fitted_probabilities = mu;

    double max_beta = 0.0;
    for (double b : beta) max_beta = std::max(max_beta, std::fabs(b));
    result.separation_detected = max_beta > 30.0;
    result.converged = converged && !result.separation_detected;

    // Deviance and AIC.
    result.residual_deviance = binomial_deviance(matrix.response, mu);
    double ybar = 0.0;
    for (int y : matrix.response) ybar += y;
    ybar /= static_cast<double>(n);
    std::vector<double> mu0(n, ybar);
    result.null_deviance = binomial_deviance(matrix.response, mu0);
    size_t retained = active.empty() ? 0 : active.size() - 1;
    result.aic = result.residual_deviance + 2.0 * (1.0 + retained);

    // Standard errors from the inverse information matrix at the optimum.
    const size_t m = active.size();
    std::vector<std::vector<double>> xtwx(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < n; ++i) {
        double w = std::max(mu[i] * (1.0 - mu[i]), 1e-10);
        for (size_t r = 0; r < m; ++r)
            for (size_t c = r; c < m; ++c)
                xtwx[r][c] += w * design(i, active[r]) * design(i, active[c]);
    }
    for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < r; ++c) xtwx[r][c] = xtwx[c][r];
    std::vector<std::vector<double>> cov;
    bool have_cov = m > 0 && invert_matrix(xtwx, cov);

    for (size_t t = 0; t < result.terms.size(); ++t) result.terms[t].aliased = aliased[t];
    for (size_t k = 0; k < m; ++k) {
        RegressionTerm& term = result.terms[active[k]];
        term.coefficient = beta[k];
        if (have_cov && cov[k][k] > 0.0) {
            term.std_error = std::sqrt(cov[k][k]);
            term.z = term.coefficient / term.std_error;
            term.p_value = normal_two_sided_p(term.z);
        }
    }
    return result;
}

std::vector<SmellRankRow> rank_smells(
    const std::vector<std::pair<std::string, RegressionResult>>& per_system,
    const std::vector<std::string>& smell_terms) {
    std::vector<SmellRankRow> rows;
    for (const std::string& term_name : smell_terms) {
        SmellRankRow row;
        row.smell_type = term_name;
        rows.push_back(row);
    }

    for (const auto& [system, result] : per_system) {
        // The system's five largest positive coefficients (intercept excluded).
        std::vector<const RegressionTerm*> positive;
        for (size_t t = 1; t < result.terms.size(); ++t) {
            const RegressionTerm& term = result.terms[t];
            if (!term.aliased && term.coefficient > 0.0)
                positive.push_back(&term);
        }
        std::sort(positive.begin(), positive.end(),
                  [](const RegressionTerm* a, const RegressionTerm* b) {
                      if (a->coefficient != b->coefficient)
                          return a->coefficient > b->coefficient;
                      return a->name < b->name;
                  });
        if (positive.size() > 5) positive.resize(5);

        for (SmellRankRow& row : rows) {
            const RegressionTerm* found = nullptr;
            for (size_t t = 1; t < result.terms.size(); ++t)
                if (result.terms[t].name == row.smell_type &&
                    !result.terms[t].aliased)
                    found = &result.terms[t];
            if (!found) continue;
            ++row.models;
            if (found->coefficient > 0.0) {
                ++row.positive;
                if (found->p_value < 0.01) ++row.significant;
                for (const RegressionTerm* top : positive)
                    if (top == found) ++row.top5;
            }
        }
    }

    for (SmellRankRow& row : rows)
        row.pct_positive = row.models == 0
                               ? 0.0
                               : static_cast<double>(row.positive) / row.models;
    return rows;
}

std::string fisher_csv(
    const std::vector<std::pair<std::string, ContingencyTable>>& per_release) {
    std::ostringstream out;
    out << "release,sb,bns,snb,nbns,or,p,ci_low,ci_high,significant\n";
    for (const auto& [release, table] : per_release) {
        FisherResult r = fisher_exact(table);
        std::string or_text = r.infinite_odds_ratio
                                  ? "Inf"
                                  : or_na(r.odds_ratio, 4);
        out << csv_row({release, std::to_string(table.sb),
                        std::to_string(table.bns), std::to_string(table.snb),
                        std::to_string(table.nbns), or_text,
                        format_p(r.p_value), or_na(r.ci_low, 4),
                        or_na(r.ci_high, 4), r.significant ? "1" : "0"});
    }
    return out.str();
}

std::string regression_csv(
    const std::vector<std::pair<std::string, RegressionResult>>& per_system) {
    std::ostringstream out;
    out << "system,term,coef,stderr,z,p\n";
    for (const auto& [system, result] : per_system) {
        for (const RegressionTerm& term : result.terms) {
            if (term.aliased) {
                out << csv_row({system, term.name, "NA", "NA", "NA", "NA"});
            } else {
                out << csv_row({system, term.name,
                                format_fixed(term.coefficient, 6),
                                format_fixed(term.std_error, 6),
                                format_fixed(term.z, 6), format_p(term.p_value)});
            }
        }
    }
    return out.str();
}

std::string ranking_csv(const std::vector<SmellRankRow>& rows) {
    std::ostringstream out;
    out << "smell_type,models,positive,pct_positive,top5,significant\n";
    for (const SmellRankRow& row : rows) {
        out << csv_row({row.smell_type, std::to_string(row.models),
                        std::to_string(row.positive),
                        format_fixed(row.pct_positive, 4),
                        std::to_string(row.top5),
                        std::to_string(row.significant)});
    }
    return out.str();
}

}  // namespace jnismell
