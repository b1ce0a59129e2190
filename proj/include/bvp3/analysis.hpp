#pragma once

#include <optional>
#include <vector>

#include "bvp3/solver.hpp"

namespace bvp3 {

/// Outcome of the contraction-hypothesis check q = L0/12 + L1/8 + L2/2 < 1,
/// together with the box |u| <= M/12, |u'| <= M/8, |u''| <= M/2 on which the
/// constants must be valid.
struct UniquenessReport {
    double m_bound;
    double l0, l1, l2;
    double q;
    bool satisfied; // q < 1, strictly
    double box_u, box_y, box_z;
};

UniquenessReport uniqueness_report(double m_bound, double l0, double l1, double l2);

/// p_k = q^k * delta0 / (1 - q) and the induced bounds on the k-th iterate:
/// |u_k - u| <= p_k/12, |u'_k - u'| <= p_k/8, |u''_k - u''| <= p_k/2.
struct AprioriBound {
    double p_k;
    double bound_u, bound_y, bound_z;
};

AprioriBound apriori_bound(int k, double q, double delta0);

struct ConvergenceRow {
    int n = 0;
    int iterations = 0;
    double error = 0.0;
    std::optional<double> order; // absent on the first row
    bool warning = false;        // order skipped: nonpositive error
};

struct StudyPoint {
    int n;
    int iterations;
    double error;
};

/// Empirical orders under grid doubling: order_i = log2(error_{i-1}/error_i).
/// The n values must double strictly row to row.
std::vector<ConvergenceRow> order_table(const std::vector<StudyPoint>& points);

struct ConstantEstimates {
    double sup_f;
    double l0, l1, l2;
};

/// Sampled lower estimates of sup|f| and of the Lipschitz constants over a
/// uniform lattice on [0,1] x [-M/12,M/12] x [-M/8,M/8] x [-M/2,M/2].
/// Adjacent-lattice divided differences along one axis at a time; a lower
/// bound of the true constants, so prefer analytic values when available.
ConstantEstimates estimate_constants(const Problem& p, double m_bound, int samples_per_axis);

} // namespace bvp3
