#include "ied/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ied/errors.hpp"

namespace ied {

namespace detail {

BigInt factorial_big(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Row n of the Stirling triangle, S(n, 0..n), via the in-place recurrence
// S(n, i) = i * S(n-1, i) + S(n-1, i-1).
static std::vector<BigInt> stirling_row(int n) {
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (int r = 1; r <= n; ++r) {
        for (int i = r; i >= 1; --i) row[i] = i * row[i] + row[i - 1];
        row[0] = 0;
    }
    return row;
}

BigInt stirling2_big(int n, int i) {
    if (i < 0 || i > n) return 0;
    return stirling_row(n)[i];
}

BigInt fubini_big(int n) {
    const auto row = stirling_row(n);
    BigInt fact = 1, total = 0;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) fact *= i;
        total += fact * row[i];
    }
    return total;
}

// Exact integer i-th root, if x is a perfect i-th power.
static std::optional<BigInt> exact_iroot(const BigInt& x, int i) {
    if (x < 0) return std::nullopt;
    if (x == 0 || x == 1 || i == 1) return x;
    BigInt lo = 0, hi = BigInt(1) << (msb(x) / i + 2);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (pow(mid, i) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (pow(lo, i) == x) return lo;
    return std::nullopt;
}

// One radical term: scale * radicand^(1/root), scale and radicand rational.
struct Term {
    int root;
    BigRat scale;
    BigRat radicand;
};

// Rational value of a term when scale^root * radicand is a perfect root-th
// power; nullopt when the term is irrational. The power is assembled from
// integer pow and normalized once, which keeps the huge-root cases cheap.
static std::optional<BigRat> exact_term_value(const Term& t) {
    if (t.root == 1) return t.scale * t.radicand;
    const BigRat combined(pow(numerator(t.scale), t.root) * numerator(t.radicand),
                          pow(denominator(t.scale), t.root) * denominator(t.radicand));
    const auto num = exact_iroot(numerator(combined), t.root);
    if (!num) return std::nullopt;
    const auto den = exact_iroot(denominator(combined), t.root);
    if (!den) return std::nullopt;
    return BigRat(*num, *den);
}

template <typename F>
static F to_float(const BigRat& r) {
    return F(numerator(r)) / F(denominator(r));
}

template <typename F>
static F eval_sum(const BigRat& base, const std::vector<Term>& terms) {
    F x = to_float<F>(base);
    for (const auto& t : terms)
        x += to_float<F>(t.scale) * exp(log(to_float<F>(t.radicand)) / t.root);
    return x;
}

enum class Round { up, down };

static long long exact_round(const BigRat& r, Round dir) {
    const BigInt num = numerator(r), den = denominator(r);
    BigInt q = num / den;  // truncation; all values here are nonnegative
    if (dir == Round::up && q * den != num) q += 1;
    return q.convert_to<long long>();
}

template <typename F>
static std::optional<long long> try_round(const BigRat& base, const std::vector<Term>& terms,
                                          Round dir, double eps) {
    const F x = eval_sum<F>(base, terms);
    const F lo = x - F(eps), hi = x + F(eps);
    const long long a = static_cast<long long>(
        (dir == Round::up ? ceil(lo) : floor(lo)).template convert_to<long long>());
    const long long b = static_cast<long long>(
        (dir == Round::up ? ceil(hi) : floor(hi)).template convert_to<long long>());
    if (a == b) return a;
    return std::nullopt;
}

// ceil/floor of base + sum of radical terms. Rational terms are folded exactly;
// the remaining irrational part is evaluated in extended precision with an
// interval stability check, escalating the precision when the interval straddles
// an integer.
static long long stable_round(BigRat base, const std::vector<Term>& terms, Round dir) {
    std::vector<Term> irrational;
    for (const auto& t : terms) {
        if (auto v = exact_term_value(t))
            base += *v;
        else
            irrational.push_back(t);
    }
    if (irrational.empty()) return exact_round(base, dir);

    using F50 = boost::multiprecision::cpp_bin_float_50;
    using F100 = boost::multiprecision::cpp_bin_float_100;
    using F200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    if (auto r = try_round<F50>(base, irrational, dir, 1e-9)) return *r;
    if (auto r = try_round<F100>(base, irrational, dir, 1e-30)) return *r;
    if (auto r = try_round<F200>(base, irrational, dir, 1e-60)) return *r;
    throw OutOfRangeError("radical sum too close to an integer to round reliably");
}

// q_i * radicand^(1/i) with the q_i radical folded into the radicand:
// (i/(i-1)) * ((i-1) * radicand)^(1/i).
static Term radical_term(int i, const BigRat& radicand) {
    if (i == 1) return Term{1, BigRat(1), radicand};
    return Term{i, BigRat(i, i - 1), BigRat(i - 1) * radicand};
}

}  // namespace detail

BigInt stirling2(int n, int i) {
    if (n < 0 || i < 0 || i > n || n > 64)
        throw OutOfRangeError("stirling2 requires 0 <= i <= n <= 64");
    return detail::stirling2_big(n, i);
}

BigInt fubini(int n) {
    if (n < 0 || n > 64) throw OutOfRangeError("fubini requires 0 <= n <= 64");
    return detail::fubini_big(n);
}

double q(int i) {
    if (i < 1) throw OutOfRangeError("q requires i >= 1");
    if (i == 1) return 1.0;
    return static_cast<double>(i) / (i - 1) * std::pow(static_cast<double>(i - 1), 1.0 / i);
}

static void check_bound_input(int k, int delta, const std::vector<int>& spectrum) {
    if (k < 2) throw InvalidInputError("uniformity k must be at least 2");
    if (delta < 2) throw InvalidInputError("degree bound must be at least 2");
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        if (spectrum[j] < 1 || spectrum[j] > k - 1)
            throw InvalidInputError("difference spectrum entry outside [k-1]");
        if (j > 0 && spectrum[j] <= spectrum[j - 1])
            throw InvalidInputError("difference spectrum must be strictly increasing");
    }
}

int bound_ieds(int k, int delta, const std::vector<int>& spectrum) {
    check_bound_input(k, delta, spectrum);
    std::vector<detail::Term> terms;
    for (int i : spectrum) {
        const BigRat radicand =
            BigRat(BigInt(delta) * (delta - 1) * (k - 1) * (BigInt(1) << (k - i + 1)) *
                       detail::fubini_big(i),
                   k - i);
        terms.push_back(detail::radical_term(i, radicand));
    }
    return static_cast<int>(detail::stable_round(BigRat(2), terms, detail::Round::up));
}

int bound_iedm(int k, int delta, const std::vector<int>& spectrum) {
    check_bound_input(k, delta, spectrum);
    std::vector<detail::Term> terms;
    for (int i : spectrum) {
        const BigRat radicand =
            BigRat(BigInt(delta) * (delta - 1) * (k - 1) * detail::factorial_big(i), k - i);
        terms.push_back(detail::radical_term(i, radicand));
    }
    return static_cast<int>(detail::stable_round(BigRat(2), terms, detail::Round::up));
}

int bound_sequences(int k, int delta, const std::vector<int>& spectrum, int pi) {
    check_bound_input(k, delta, spectrum);
    if (pi < 1) throw InvalidInputError("permutation family size must be at least 1");
    const int isize = static_cast<int>(spectrum.size());
    std::vector<detail::Term> terms;
    for (int i : spectrum) {
        const BigRat ratio = std::min(BigRat(1), BigRat(isize, k - i));
        const BigRat radicand = BigRat(BigInt(delta) * (delta - 1) * pi) *
                                (BigRat(1) + BigRat(k - 1) * ratio);
        terms.push_back(detail::radical_term(i, radicand));
    }
    return 1 + static_cast<int>(detail::stable_round(BigRat(0), terms, detail::Round::down));
}

// The printed special-case forms, evaluated as displayed.

static int ceil_closed_form(const BigRat& scale, const BigInt& radicand, int root) {
    return static_cast<int>(detail::stable_round(
        BigRat(2), {detail::Term{root, scale, BigRat(radicand)}}, detail::Round::up));
}

static int floor_closed_form(const BigRat& scale, const BigInt& radicand, int root) {
    return 1 + static_cast<int>(detail::stable_round(
                   BigRat(0), {detail::Term{root, scale, BigRat(radicand)}},
                   detail::Round::down));
}

int closed_form_edge_sets(int k) {
    if (k < 3) throw InvalidInputError("edge form requires k >= 3");
    return ceil_closed_form(BigRat(k - 1, k - 2),
                            BigInt(8) * (k - 1) * (k - 2) * detail::fubini_big(k - 1), k - 1);
}

int closed_form_total_sets(int k) {
    if (k < 2) throw InvalidInputError("total form requires k >= 2");
    return ceil_closed_form(BigRat(k, k - 1), BigInt(8) * k * (k - 1) * detail::fubini_big(k),
                            k);
}

int closed_form_edge_multisets(int k) {
    if (k < 3) throw InvalidInputError("edge form requires k >= 3");
    return ceil_closed_form(BigRat(k - 1, k - 2),
                            BigInt(2) * (k - 1) * (k - 2) * detail::factorial_big(k - 1), k - 1);
}

int closed_form_total_multisets(int k) {
    if (k < 2) throw InvalidInputError("total form requires k >= 2");
    return ceil_closed_form(BigRat(k, k - 1), BigInt(2) * k * (k - 1) * detail::factorial_big(k),
                            k);
}

int closed_form_configuration_sets(int k, int r) {
    if (k < 3 || r < 2) throw InvalidInputError("configuration form requires k >= 3, r >= 2");
    return ceil_closed_form(
        BigRat(k - 1, k - 2),
        BigInt(4) * r * (r - 1) * (k - 1) * (k - 2) * detail::fubini_big(k - 1), k - 1);
}

int closed_form_configuration_multisets(int k, int r) {
    if (k < 3 || r < 2) throw InvalidInputError("configuration form requires k >= 3, r >= 2");
    return ceil_closed_form(
        BigRat(k - 1, k - 2),
        BigInt(r) * (r - 1) * (k - 1) * (k - 2) * detail::factorial_big(k - 1), k - 1);
}

int closed_form_graph_sequences(int k) {
    if (k < 3) throw InvalidInputError("sequence form requires k >= 3");
    return floor_closed_form(BigRat(k - 1, k - 2), BigInt(2) * k * k - BigInt(4) * k, k - 1);
}

int closed_form_lines_sequences(int k) {
    if (k < 3) throw InvalidInputError("sequence form requires k >= 3");
    return floor_closed_form(BigRat(k - 1, k - 2), BigInt(4) * k * k - BigInt(8) * k, k - 1);
}

std::vector<ThresholdCheck> special_case_threshold_checks() {
    std::vector<ThresholdCheck> out;
    const auto check = [&](std::string name, int k, int bound, int percent) {
        // bound <= (percent/100) * k, exactly.
        out.push_back({std::move(name), k, bound, percent, 100LL * bound <= 1LL * percent * k});
    };
    check("edge-sets", 1540, closed_form_edge_sets(1540), 54);
    check("total-sets", 1600, closed_form_total_sets(1600), 54);
    check("edge-multisets", 5435, closed_form_edge_multisets(5435), 37);
    check("total-multisets", 5650, closed_form_total_multisets(5650), 37);
    return out;
}

}  // namespace ied
