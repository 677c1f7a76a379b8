#ifndef MACDUAL_CODIMN_HPP
#define MACDUAL_CODIMN_HPP

#include "macdual/apolar.hpp"
#include "macdual/lefschetz.hpp"

#include <string>
#include <vector>

namespace macdual {

// Dual generator of the codimension-n family
// F = X1 X2 X5 ... Xn (X1^{n-2} X3 - X2^{n-2} X4), n >= 4.
Poly codimn_dual_generator(int n);

struct CodimnReport {
    int n = 0;
    std::vector<int> h_vector;
    int mid_degree = 0;     // floor((d-1)/2)
    int required_rank = 0;  // h at the middle
    int best_sampled_rank = 0;
    bool failure_certified = false;
    std::string method;     // hessian | kernel-witness
    std::vector<Poly> witness; // symbolic kernel witness when used
    double seconds = 0.0;
};

// Certifies that the family member fails the weak Lefschetz property: the
// middle multiplication map drops rank for every linear form. Sampled ranks
// report the drop; the certificate is the identically vanishing Hessian
// determinant (symbolic determinant for n = 4, a verified symbolic kernel
// witness in general).
CodimnReport codimn_wlp_failure(int n, const LefschetzOptions& opts = {},
                                double budget_seconds = 300.0);

} // namespace macdual

#endif
