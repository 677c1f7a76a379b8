#include "macdual/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace macdual {

std::vector<Int> geometric_sum(int j) {
    if (j < 0) return {};
    return std::vector<Int>(static_cast<size_t>(j) + 1, 1);
}

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

HilbertSeries HilbertSeries::complete_intersection(const std::vector<int>& degrees, int nvars) {
    // prod (1-t^{d}) / (1-t)^{nvars} = prod s(d-1) / (1-t)^{nvars - #degrees}
    std::vector<Int> num{1};
    int cancelled = 0;
    for (int d : degrees) {
        if (d <= 0) throw std::invalid_argument("complete_intersection: degree must be positive");
        num = convolve(num, geometric_sum(d - 1));
        ++cancelled;
    }
    if (cancelled > nvars)
        throw std::invalid_argument("complete_intersection: more forms than variables");
    return HilbertSeries(std::move(num), nvars - cancelled).reduced();
}

HilbertSeries HilbertSeries::reduced() const {
    std::vector<Int> num = num_;
    int k = denom_pow_;
    while (k > 0) {
        if (num.empty()) { // zero series
            k = 0;
            break;
        }
        if (num.size() == 1) break; // nonzero constant: (1-t) does not divide
        // N(t) = (1-t) Q(t) means q_i = n_i + q_{i-1}; exact iff the final
        // carry cancels the top coefficient.
        std::vector<Int> q(num.size() - 1);
        Int prev = 0;
        for (size_t i = 0; i + 1 < num.size(); ++i) {
            q[i] = num[i] + prev;
            prev = q[i];
        }
        if (num.back() + prev != 0) break;
        num = std::move(q);
        while (!num.empty() && num.back() == 0) num.pop_back();
        --k;
    }
    return HilbertSeries(std::move(num), k);
}

std::vector<Int> HilbertSeries::h_vector() const {
    HilbertSeries r = reduced();
    if (r.denom_pow_ != 0)
        throw std::domain_error("HilbertSeries::h_vector: series is not a polynomial");
    return r.num_;
}

Int HilbertSeries::coefficient(int j) const {
    if (j < 0) return 0;
    if (denom_pow_ == 0) return j < static_cast<int>(num_.size()) ? num_[j] : Int(0);
    Int total = 0;
    for (size_t i = 0; i < num_.size(); ++i) {
        int shift = j - static_cast<int>(i);
        if (shift < 0) break;
        total += num_[i] * binomial(shift + denom_pow_ - 1, denom_pow_ - 1);
    }
    return total;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
    int k = std::max(denom_pow_, o.denom_pow_);
    auto lift = [&](const HilbertSeries& s) {
        std::vector<Int> num = s.num_;
        for (int i = s.denom_pow_; i < k; ++i) {
            // multiply numerator by (1-t)
            std::vector<Int> next(num.size() + 1, 0);
            for (size_t j = 0; j < num.size(); ++j) {
                next[j] += num[j];
                next[j + 1] -= num[j];
            }
            num = std::move(next);
        }
        return num;
    };
    std::vector<Int> a = lift(*this), b = lift(o);
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return HilbertSeries(std::move(a), k);
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
    std::vector<Int> neg = o.num_;
    for (Int& v : neg) v = -v;
    return *this + HilbertSeries(std::move(neg), o.denom_pow_);
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    HilbertSeries a = reduced(), b = o.reduced();
    return a.denom_pow_ == b.denom_pow_ && a.num_ == b.num_;
}

bool HilbertSeries::symmetric() const {
    std::vector<Int> h = h_vector();
    std::vector<Int> r(h.rbegin(), h.rend());
    return h == r;
}

bool HilbertSeries::unimodal() const {
    std::vector<Int> h = h_vector();
    size_t i = 1;
    while (i < h.size() && h[i] >= h[i - 1]) ++i;
    while (i < h.size() && h[i] <= h[i - 1]) ++i;
    return i == h.size();
}

std::string HilbertSeries::to_string() const {
    std::ostringstream os;
    HilbertSeries r = reduced();
    os << "(";
    for (size_t i = 0; i < r.num_.size(); ++i) {
        if (i) os << ", ";
        os << r.num_[i].get_str();
    }
    os << ")";
    if (r.denom_pow_ > 0) os << " / (1-t)^" << r.denom_pow_;
    return os.str();
}

} // namespace macdual
