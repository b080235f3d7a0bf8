#include "qcap/cat.hpp"

#include <cmath>
#include <stdexcept>

namespace qcap {

namespace {

constexpr int kMaxClosedFormP = 61;  // binomial_exact limit

// Integer power by repeated multiplication; exact sign handling for
// negative bases ((f-g)^p with f < g).
double pow_int(double base, int exp) {
    double out = 1.0;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// 2^e * a^ea * b^eb, falling back to log2 space if the direct product
// underflows while every factor is positive.
double scaled_power(int e, double a, int ea, double b, int eb) {
    const double direct = std::ldexp(pow_int(a, ea) * pow_int(b, eb), e);
    if (direct == 0.0 && a > 0.0 && b > 0.0) {
        return std::exp2(e + ea * std::log2(a) + eb * std::log2(b));
    }
    return direct;
}

double entropy_term(double x) {
    return x > 0.0 ? -x * std::log2(x) : 0.0;
}

struct KahanSum {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void check_p_f(int p, double f, int p_max) {
    if (p < 1 || p > p_max) {
        throw std::invalid_argument("cat code size must be in [1, " + std::to_string(p_max) + "]");
    }
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
}

}  // namespace

StabilizerCode cat_code(int p) {
    if (p < 1 || p > kMaxQubits) {
        throw std::invalid_argument("cat_code: p must be in [1, 32]");
    }
    StabilizerCode code;
    code.n = p;
    for (int q = 1; q < p; ++q) {
        code.generators.emplace_back(p, 0u, uint32_t{1} | (uint32_t{1} << q));
    }
    code.logical_x = PauliOperator(p, qubit_mask(p), 0u);
    code.logical_z = PauliOperator(p, 0u, 1u);
    return code;
}

StabilizerCode rotated_cat_code(int p) {
    StabilizerCode code = cat_code(p);
    for (auto& g : code.generators) {
        g = PauliOperator(p, g.z_bits(), g.x_bits());
    }
    code.logical_x = PauliOperator(p, 1u, 0u);
    code.logical_z = PauliOperator(p, 0u, qubit_mask(p));
    return code;
}

uint64_t binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > kMaxClosedFormP) {
        throw std::invalid_argument("binomial_exact: n too large for exact 64-bit evaluation");
    }
    k = std::min(k, n - k);
    uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    }
    return c;
}

CatCosetProbs cat_coset_probs(int p, int r, double f) {
    check_p_f(p, f, kMaxClosedFormP);
    if (r < 0 || r > p - 1) {
        throw std::invalid_argument("cat_coset_probs: r must lie in [0, p-1]");
    }
    const double g = (1.0 - f) / 3.0;
    CatCosetProbs out;
    out.p = p;
    out.r = r;
    out.multiplicity = binomial_exact(p - 1, r);

    const double psi = scaled_power(p - r - 1, g, p - r, f + g, r);
    double phi_plus, phi_minus;
    if (r == 0) {
        phi_plus = (pow_int(f + g, p) + pow_int(f - g, p)) / 2.0;
        phi_minus = (pow_int(f + g, p) - pow_int(f - g, p)) / 2.0;
    } else {
        phi_plus = scaled_power(r - 1, g, r, f + g, p - r);
        phi_minus = phi_plus;
    }
    out.probs = {phi_plus, psi, psi, phi_minus};
    return out;
}

CapacityResult cat_qss(int p, double f) {
    check_p_f(p, f, kMaxClosedFormP);
    KahanSum h_syndrome, h_joint, s_x2;
    for (int r = 0; r < p; ++r) {
        const auto cls = cat_coset_probs(p, r, f);
        const double m = static_cast<double>(cls.multiplicity);
        const double row = cls.probs[0] + cls.probs[1] + cls.probs[2] + cls.probs[3];
        h_syndrome.add(m * entropy_term(row));
        double h4 = 0.0;
        for (double v : cls.probs) {
            h_joint.add(m * entropy_term(v));
            if (row > 0.0) h4 += entropy_term(v / row);
        }
        s_x2.add(m * row * h4);
    }
    CapacityResult out;
    out.q_ss = (1.0 + h_syndrome.sum - h_joint.sum) / p;
    out.s_x2 = s_x2.sum;
    out.h_syndrome = h_syndrome.sum;
    out.h_joint = h_joint.sum;
    out.p = p;
    return out;
}

double cat_coherent_information(int p, double f) {
    check_p_f(p, f, kMaxClosedFormP);
    KahanSum s_q, s_rq;
    for (int r = 0; r < p; ++r) {
        const auto cls = cat_coset_probs(p, r, f);
        const double m = static_cast<double>(cls.multiplicity);
        const double row = cls.probs[0] + cls.probs[1] + cls.probs[2] + cls.probs[3];
        s_q.add(2.0 * m * entropy_term(row / 2.0));
        for (double v : cls.probs) s_rq.add(m * entropy_term(v));
    }
    return (s_q.sum - s_rq.sum) / p;
}

double asymptotic_threshold() {
    auto residual = [](double f) {
        const double g = (1.0 - f) / 3.0;
        return (f - g) * (f - g) / (f + g) - std::sqrt(8.0 * g * (f + g));
    };
    double lo = 0.75, hi = 1.0;  // residual(lo) < 0 < residual(hi)
    while (hi - lo > 1e-9) {
        const double mid = (lo + hi) / 2.0;
        (residual(mid) < 0.0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2.0;
}

}  // namespace qcap
