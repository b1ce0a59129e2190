#include "bvp3/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace bvp3 {

UniquenessReport uniqueness_report(double m_bound, double l0, double l1, double l2) {
    if (!std::isfinite(m_bound) || !std::isfinite(l0) || !std::isfinite(l1) || !std::isfinite(l2)) {
        throw std::invalid_argument("uniqueness_report: non-finite input");
    }
    if (!(m_bound > 0.0)) throw std::invalid_argument("uniqueness_report: M must be positive");
    if (l0 < 0.0 || l1 < 0.0 || l2 < 0.0) {
        throw std::invalid_argument("uniqueness_report: Lipschitz constants must be nonnegative");
    }
    const KernelBounds b = kernel_bounds();
    const double q = l0 * b.m0 + l1 * b.m1 + l2 * b.m2;
    return {m_bound, l0,          l1,
            l2,      q,           q < 1.0,
            m_bound * b.m0, m_bound * b.m1, m_bound * b.m2};
}

AprioriBound apriori_bound(int k, double q, double delta0) {
    if (k < 0) throw std::invalid_argument("apriori_bound: k must be >= 0");
    if (!(q >= 0.0 && q < 1.0)) throw std::invalid_argument("apriori_bound: q must lie in [0,1)");
    if (!(delta0 >= 0.0) || !std::isfinite(delta0)) {
        throw std::invalid_argument("apriori_bound: delta0 must be finite and >= 0");
    }
    const double p_k = std::pow(q, k) * delta0 / (1.0 - q);
    const KernelBounds b = kernel_bounds();
    return {p_k, b.m0 * p_k, b.m1 * p_k, b.m2 * p_k};
}

std::vector<ConvergenceRow> order_table(const std::vector<StudyPoint>& points) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0 && points[i].n != 2 * points[i - 1].n) {
            throw std::invalid_argument("order_table: n values must double row to row");
        }
        ConvergenceRow row{points[i].n, points[i].iterations, points[i].error, std::nullopt, false};
        if (i > 0) {
            if (points[i - 1].error > 0.0 && points[i].error > 0.0) {
                row.order = std::log2(points[i - 1].error / points[i].error);
            } else {
                row.warning = true;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

ConstantEstimates estimate_constants(const Problem& p, double m_bound, int samples_per_axis) {
    if (!(m_bound > 0.0)) throw std::invalid_argument("estimate_constants: M must be positive");
    if (samples_per_axis < 2) throw std::invalid_argument("estimate_constants: need >= 2 samples per axis");

    const KernelBounds b = kernel_bounds();
    const double bx = m_bound * b.m0, by = m_bound * b.m1, bz = m_bound * b.m2;
    const int s = samples_per_axis;

    auto coord = [s](double lo, double hi, int j) {
        return lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(s - 1);
    };

    ConstantEstimates est{0.0, 0.0, 0.0, 0.0};
    for (int it = 0; it < s; ++it) {
        const double t = coord(0.0, 1.0, it);
        for (int ix = 0; ix < s; ++ix) {
            const double x = coord(-bx, bx, ix);
            for (int iy = 0; iy < s; ++iy) {
                const double y = coord(-by, by, iy);
                double prev_z = 0.0;
                for (int iz = 0; iz < s; ++iz) {
                    const double z = coord(-bz, bz, iz);
                    const double f = p.rhs(t, x, y, z);
                    if (!std::isfinite(f)) {
                        throw std::domain_error("estimate_constants: rhs non-finite on the lattice");
                    }
                    est.sup_f = std::max(est.sup_f, std::abs(f));
                    if (iz > 0) {
                        const double zp = coord(-bz, bz, iz - 1);
                        est.l2 = std::max(est.l2, std::abs(f - prev_z) / (z - zp));
                    }
                    prev_z = f;
                    if (ix > 0) {
                        const double xp = coord(-bx, bx, ix - 1);
                        est.l0 = std::max(est.l0, std::abs(f - p.rhs(t, xp, y, z)) / (x - xp));
                    }
                    if (iy > 0) {
                        const double yp = coord(-by, by, iy - 1);
                        est.l1 = std::max(est.l1, std::abs(f - p.rhs(t, x, yp, z)) / (y - yp));
                    }
                }
            }
        }
    }
    return est;
}

} // namespace bvp3
