#ifndef MACDUAL_HILBERT_HPP
#define MACDUAL_HILBERT_HPP

#include "macdual/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace macdual {

// Hilbert series N(t) / (1-t)^k with an integer numerator. denominator_power
// zero encodes a finite h-vector; trailing zero coefficients are trimmed.
class HilbertSeries {
public:
    HilbertSeries() = default;

    HilbertSeries(std::vector<Int> numerator, int denominator_power)
        : num_(std::move(numerator)), denom_pow_(denominator_power) {
        if (denominator_power < 0)
            throw std::invalid_argument("HilbertSeries: negative denominator power");
        trim();
    }

    static HilbertSeries from_h_vector(const std::vector<Int>& h) { return HilbertSeries(h, 0); }
    static HilbertSeries from_h_vector(const std::vector<int>& h) {
        std::vector<Int> v(h.begin(), h.end());
        return HilbertSeries(std::move(v), 0);
    }

    // Hilbert series of a complete intersection cut out by forms of the given
    // degrees inside a polynomial ring with `nvars` variables:
    // prod (1-t^{d_i}) / (1-t)^{nvars}, reduced.
    static HilbertSeries complete_intersection(const std::vector<int>& degrees, int nvars);

    const std::vector<Int>& numerator() const { return num_; }
    int denominator_power() const { return denom_pow_; }
    bool is_zero() const { return num_.empty(); }

    // Cancels every (1-t) factor that divides the numerator.
    HilbertSeries reduced() const;

    bool is_polynomial() const { return reduced().denom_pow_ == 0; }

    // Finite h-vector; requires a polynomial series.
    std::vector<Int> h_vector() const;

    // Coefficient of t^j in the power-series expansion.
    Int coefficient(int j) const;

    int top_degree() const { return static_cast<int>(num_.size()) - 1; } // numerator degree

    HilbertSeries operator+(const HilbertSeries& o) const;
    HilbertSeries operator-(const HilbertSeries& o) const;
    bool operator==(const HilbertSeries& o) const;
    bool operator!=(const HilbertSeries& o) const { return !(*this == o); }

    bool symmetric() const;
    bool unimodal() const;

    std::string to_string() const;

private:
    void trim() {
        while (!num_.empty() && num_.back() == 0) num_.pop_back();
    }

    std::vector<Int> num_;
    int denom_pow_ = 0;
};

// 1 + t + ... + t^j as a coefficient vector (s(j) in h-vector computations);
// j < 0 yields the zero polynomial.
std::vector<Int> geometric_sum(int j);

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b);

} // namespace macdual

#endif
