#include "f0f2/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace f0f2 {

Count binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is C(n-k+i, i)
    }
    return result;
}

BigInt binom_general(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0) return binom(n, k);
    BigInt v = binom(k - n - 1, k);
    return (k % 2 == 0) ? v : -v;
}

Lemma31Result lemma31(int n, int m, int k) {
    BigInt lhs = 0;
    for (int i = 0; i <= k; ++i) {
        BigInt weight = BigInt(m) * i + BigInt(n) * (k - i) - BigInt(2) * i * (k - i);
        lhs += weight * binom(n, i) * binom(m, k - i);
    }
    BigInt rhs = BigInt(2) * n * m * binom(n + m - 2, k - 1);
    return {lhs, rhs};
}

Count vandermonde_lhs(int n, int m, int k) {
    Count sum = 0;
    for (int i = 0; i <= k; ++i) sum += binom(n, i) * binom(m, k - i);
    return sum;
}

Count a1_count(int b, int g, Surface surface) {
    if (b < 0 || g < 0) return 0;
    Count sum = 0;
    for (int i = 0; i <= g; ++i) {
        int j = g - i;
        if (surface == Surface::F0)
            sum += binom(b + 1 - i, j) * binom(b + 1 - j, i);
        else
            sum += binom(b + 2 - i, j) * binom(b - j, i);
    }
    return sum;
}

Count a1_closed_form_stated(int b, int g) { return binom(2LL * b + 2 - g, g); }

Count a1_closed_form_observed(int b, int g, Surface surface) {
    if (surface == Surface::F2 && g > b) return 0;
    return binom(2LL * b + 3 - g, g);
}

int A2MultiplicityParams::alpha1() const {
    auto it = alpha.find(1);
    return it == alpha.end() ? 0 : it->second;
}

int A2MultiplicityParams::t() const {
    int sum = 0;
    for (const auto& [len, cnt] : alpha)
        if (len >= 2) sum += len * cnt;
    return sum;
}

Count A2MultiplicityParams::i_alpha_sq() const {
    Count p = 1;
    for (const auto& [len, cnt] : alpha)
        for (int c = 0; c < cnt; ++c) p *= len;
    return p * p;
}

void A2MultiplicityParams::validate() const {
    for (const auto& [len, cnt] : alpha)
        if (len < 1 || cnt < 0) throw std::invalid_argument("alpha needs lengths >= 1, counts >= 0");
    if (r < alpha1() + t())
        throw std::invalid_argument("a2 params need r >= alpha1 + t");
    if (i_free < 0 || i_free > r - alpha1() - t())
        throw std::invalid_argument("a2 params need 0 <= i_free <= r - alpha1 - t");
    if (j_free < 0 || j_free > s)
        throw std::invalid_argument("a2 params need 0 <= j_free <= s");
}

namespace {

Count a2_product(const A2MultiplicityParams& p, int column_shift) {
    p.validate();
    const int a1 = p.alpha1(), t = p.t(), i = p.i_free, j = p.j_free, s = p.s, r = p.r;
    return p.i_alpha_sq() * binom(r - i - t, j) * binom(r - j + column_shift, i) *
           binom(r - s + j - column_shift, r - a1 - t - i) * binom(a1 + i, s - j);
}

} // namespace

Count a2_mult(const A2MultiplicityParams& p) { return a2_product(p, 0); }
Count a2_mult_prime(const A2MultiplicityParams& p) { return a2_product(p, 2); }

namespace {

BigInt fg_sum(int r, int alpha1, int t, int s, int column_shift, BinomialConvention conv) {
    if (r < alpha1 + t || alpha1 < 0 || t < 0 || s < 0)
        throw std::invalid_argument("fg sums need alpha1, t, s >= 0 and r >= alpha1 + t");
    auto c = [conv](long long n, long long k) {
        return conv == BinomialConvention::Generalized ? binom_general(n, k) : BigInt(binom(n, k));
    };
    BigInt sum = 0;
    for (int j = 0; j <= s; ++j)
        for (int i = 0; i <= r - alpha1 - t; ++i)
            sum += c(r - i - t, j) * c(r - j + column_shift, i) *
                   c(r - s + j - column_shift, r - alpha1 - t - i) * c(alpha1 + i, s - j);
    return sum;
}

} // namespace

BigInt f_sum(int r, int alpha1, int t, int s, BinomialConvention conv) {
    return fg_sum(r, alpha1, t, s, 0, conv);
}

BigInt g_sum(int r, int alpha1, int t, int s, BinomialConvention conv) {
    return fg_sum(r, alpha1, t, s, 2, conv);
}

BigInt fg_recurrence_residual(FgKind kind, int r, int alpha1, int t, int s) {
    auto x = [&](int rr, int ss) {
        return kind == FgKind::F ? f_sum(rr, alpha1, t, ss) : g_sum(rr, alpha1, t, ss);
    };
    BigInt c0 = BigInt(2 * r - s + 2) * (alpha1 + r - t + 2);
    BigInt c1 = BigInt(-2) * (BigInt(r) * r + BigInt(alpha1) * r - BigInt(t) * r + 4 * r -
                              BigInt(alpha1) * s - 2 * t + 4);
    BigInt c2 = BigInt(-(s + 2)) * (alpha1 - r + t - 2);
    return c0 * x(r, s) + c1 * x(r + 1, s + 1) + c2 * x(r + 2, s + 2);
}

BigInt fg_s1_closed_form(int r, int alpha1, int t) {
    return BigInt(alpha1 + r - t) * binom(2 * r - 1, r - alpha1 - t) +
           binom(2 * r - 2, r - alpha1 - t - 1);
}

} // namespace f0f2
