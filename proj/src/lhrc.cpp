#include "scomp/lhrc.hpp"

#include <functional>
#include <stdexcept>

#include "scomp/diophantine.hpp"

namespace scomp {

void Lhrc::validate() const {
    if (offsets.empty() || offsets.size() != coeffs.size())
        throw std::invalid_argument("lhrc: offsets and coeffs must be non-empty and equally long");
    int prev = 0;
    for (int a : offsets) {
        if (a < 1) throw std::invalid_argument("lhrc: offsets must be >= 1");
        if (a <= prev) throw std::invalid_argument("lhrc: offsets must be strictly increasing");
        prev = a;
    }
    for (long long k : coeffs)
        if (k == 0) throw std::invalid_argument("lhrc: coefficients must be nonzero");
    if (initial.size() != static_cast<std::size_t>(offsets.back()))
        throw std::invalid_argument("lhrc: expected exactly max(offsets) initial values");
}

BigInt eval_dp(const Lhrc& rec, int n) {
    rec.validate();
    if (n < 0) throw std::invalid_argument("eval_dp: n must be >= 0");
    int order = rec.order();
    if (n < order) return rec.initial[n];
    std::vector<BigInt> values(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < order; ++i) values[i] = rec.initial[i];
    for (int j = order; j <= n; ++j) {
        BigInt total = 0;
        for (std::size_t i = 0; i < rec.offsets.size(); ++i)
            total += rec.coeffs[i] * values[j - rec.offsets[i]];
        values[j] = std::move(total);
    }
    return values[n];
}

namespace {

// Factorial and coefficient-power tables shared by all kernel evaluations of
// one solve call; the library surface stays pure because the context lives
// on the stack of each call.
class ResolventContext {
public:
    ResolventContext(const std::vector<int>& offsets, const std::vector<long long>& coeffs,
                     long long max_q2)
        : offsets_(offsets.begin(), offsets.end()), coeffs_(coeffs) {
        long long cap = max_q2 < 0 ? 0 : max_q2;
        factorial_.resize(static_cast<std::size_t>(cap) + 1);
        factorial_[0] = 1;
        for (long long i = 1; i <= cap; ++i) factorial_[i] = factorial_[i - 1] * i;
        powers_.resize(coeffs_.size());
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            long long emax = cap / offsets_[j];
            powers_[j].resize(static_cast<std::size_t>(emax) + 1);
            powers_[j][0] = 1;
            for (long long e = 1; e <= emax; ++e)
                powers_[j][e] = powers_[j][e - 1] * coeffs_[j];
        }
    }

    // Kernel value for resolvent argument q'' (already shifted by a_l - a_1).
    BigInt eval(long long q2) const {
        if (q2 < 0) return 0;
        BigInt total = 0;
        for_each_solution(offsets_, q2, [&](const std::vector<long long>& x) {
            long long parts = 0;
            for (long long xi : x) parts += xi;
            BigInt term = factorial_[parts];
            for (std::size_t j = 0; j < x.size(); ++j) {
                term /= factorial_[x[j]];
                term *= powers_[j][x[j]];
            }
            total += term;
        });
        return total;
    }

private:
    PartVector offsets_;
    std::vector<long long> coeffs_;
    std::vector<BigInt> factorial_;
    std::vector<std::vector<BigInt>> powers_;
};

// Shared shape of the closed-form solution: expand f(n) over the initial
// values with kernel weights. The first block covers seeds below a_l - a_1
// (reachable only through offsets alpha >= a_l - i), the second the rest.
BigInt closed_eval(const Lhrc& rec, int n, const std::function<BigInt(long long)>& kernel) {
    int a1 = rec.offsets.front();
    int al = rec.order();
    int spread = al - a1;
    if (n < al) return rec.initial[n];
    BigInt total = 0;
    for (std::size_t idx = 1; idx < rec.offsets.size(); ++idx) {
        int alpha = rec.offsets[idx];
        for (int i = al - alpha; i <= spread - 1; ++i)
            total += rec.coeffs[idx] * kernel(n - i - alpha + spread) * rec.initial[i];
    }
    for (int i = spread; i <= al - 1; ++i)
        total += kernel(n - i + spread) * rec.initial[i];
    return total;
}

}  // namespace

BigInt resolvent_sum(const Lhrc& rec, long long q) {
    rec.validate();
    long long q2 = q - (rec.order() - rec.offsets.front());
    if (q2 < 0) return 0;
    return ResolventContext(rec.offsets, rec.coeffs, q2).eval(q2);
}

BigInt resolvent_sum_pair(int a1, int a2, long long k1, long long k2, long long q) {
    long long q1 = q - (a2 - a1);
    if (q1 < 0) return 0;
    TwoVarFamily family = two_var_family(a1, a2, q1);
    std::vector<long long> k{k1, k2};
    BigInt total = 0;
    for (long long t = family.lo; t <= family.hi; ++t) {
        SolutionVector x = family.at(t);
        total += power_product(k, x) * multinomial(x);
    }
    return total;
}

BigInt resolvent_sum_triple(int a1, int a2, int a3, long long k1, long long k2,
                            long long k3, long long q) {
    long long q1 = q - (a3 - a1);
    if (q1 < 0) return 0;
    std::vector<long long> k{k1, k2, k3};
    BigInt total = 0;
    for (long long x3 = 0; x3 <= q1 / a3; ++x3) {
        long long qhat = q1 - a3 * x3;
        TwoVarFamily family = two_var_family(a1, a2, qhat);
        for (long long t = family.lo; t <= family.hi; ++t) {
            SolutionVector x = family.at(t);
            x.push_back(x3);
            total += power_product(k, x) * multinomial(x);
        }
    }
    return total;
}

SolutionCoefficients solution_coefficients(const Lhrc& rec, int n) {
    rec.validate();
    int al = rec.order();
    if (n < al) throw std::invalid_argument("solution_coefficients: n must be >= max(offsets)");
    int a1 = rec.offsets.front();
    int spread = al - a1;
    ResolventContext context(rec.offsets, rec.coeffs, n);
    auto kernel = [&](long long q) { return context.eval(q - spread); };

    SolutionCoefficients out{n, std::vector<BigInt>(static_cast<std::size_t>(al))};
    for (int i = spread; i <= al - 1; ++i) out.v[i] = kernel(n - i + spread);
    for (std::size_t idx = 1; idx < rec.offsets.size(); ++idx) {
        int alpha = rec.offsets[idx];
        for (int i = al - alpha; i <= spread - 1; ++i)
            out.v[i] += rec.coeffs[idx] * kernel(n - i - alpha + spread);
    }
    return out;
}

BigInt solve_closed(const Lhrc& rec, int n) {
    rec.validate();
    if (n < 0) throw std::invalid_argument("solve_closed: n must be >= 0");
    if (n < rec.order()) return rec.initial[n];
    int spread = rec.order() - rec.offsets.front();
    ResolventContext context(rec.offsets, rec.coeffs, n);
    return closed_eval(rec, n, [&](long long q) { return context.eval(q - spread); });
}

BigInt solve_two_term(const Lhrc& rec, int n) {
    rec.validate();
    if (rec.offsets.size() != 2)
        throw std::invalid_argument("solve_two_term: recurrence must have exactly two offsets");
    if (n < 0) throw std::invalid_argument("solve_two_term: n must be >= 0");
    return closed_eval(rec, n, [&](long long q) {
        return resolvent_sum_pair(rec.offsets[0], rec.offsets[1], rec.coeffs[0], rec.coeffs[1], q);
    });
}

BigInt solve_three_term(const Lhrc& rec, int n) {
    rec.validate();
    if (rec.offsets.size() != 3)
        throw std::invalid_argument("solve_three_term: recurrence must have exactly three offsets");
    if (n < 0) throw std::invalid_argument("solve_three_term: n must be >= 0");
    return closed_eval(rec, n, [&](long long q) {
        return resolvent_sum_triple(rec.offsets[0], rec.offsets[1], rec.offsets[2],
                                    rec.coeffs[0], rec.coeffs[1], rec.coeffs[2], q);
    });
}

}  // namespace scomp
