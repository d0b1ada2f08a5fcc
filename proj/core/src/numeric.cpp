#include "stratmap/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace stratmap {

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_number: to_chars failed");
    return std::string(buf, ptr);
}

std::string format_fixed(double value, int precision) {
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::fixed, precision);
    if (ec != std::errc{}) throw std::runtime_error("format_fixed: to_chars failed");
    std::string out(buf, ptr);
    if (out == "-0" || out.rfind("-0.", 0) == 0) {
        // collapse negative zero so equal values print identically
        bool all_zero = true;
        for (char c : out)
            if (c != '-' && c != '0' && c != '.') { all_zero = false; break; }
        if (all_zero) out.erase(out.begin());
    }
    return out;
}

std::optional<double> parse_double(std::string_view token) {
    if (token.empty()) return std::nullopt;
    double value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

std::optional<std::int64_t> parse_int(std::string_view token) {
    if (token.empty()) return std::nullopt;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

namespace {

// Series expansion of P(s, x), converges fast for x < s + 1.
double gamma_p_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    double a = s;
    for (int n = 0; n < 1000; ++n) {
        a += 1.0;
        term *= x / a;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Lentz continued fraction for Q(s, x), converges fast for x >= s + 1.
double gamma_q_continued_fraction(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

} // namespace

double regularized_gamma_q(double s, double x) {
    if (!(s > 0.0) || x < 0.0 || !std::isfinite(s) || !std::isfinite(x))
        throw std::invalid_argument("regularized_gamma_q: need s > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
    return gamma_q_continued_fraction(s, x);
}

double chi_square_upper_tail(double statistic, int df) {
    if (df < 1) throw std::invalid_argument("chi_square_upper_tail: df must be >= 1");
    if (statistic < 0) throw std::invalid_argument("chi_square_upper_tail: negative statistic");
    return regularized_gamma_q(0.5 * df, 0.5 * statistic);
}

std::int64_t max_assignment_value(const std::vector<std::vector<std::int64_t>>& scores) {
    const std::size_t rows = scores.size();
    std::size_t cols = 0;
    for (const auto& row : scores) cols = std::max(cols, row.size());
    const std::size_t n = std::max(rows, cols);
    if (n == 0) return 0;

    // Hungarian algorithm with potentials on the negated, zero-padded matrix.
    // Indices are 1-based inside; row 0 / column 0 are sentinels.
    auto cost = [&](std::size_t i, std::size_t j) -> std::int64_t {
        if (i < rows && j < scores[i].size()) return -scores[i][j];
        return 0;
    };

    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<char> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = match[j0], j1 = 0;
            std::int64_t delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }

    std::int64_t total = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (match[j] != 0) total += -cost(match[j] - 1, j - 1);
    return total;
}

} // namespace stratmap
