// Independent reference computations used to freeze expected values in the
// test suites. Everything here is deliberately written on a different
// algorithmic route than the library: eigenvalues via Sylvester inertia
// bisection instead of Jacobi rotations, partial traces via plain bit loops,
// the three-qubit tangle via the degree-4 amplitude invariant. Test code only.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using CMat = std::vector<std::vector<Complex>>;

inline CMat cmat(int n) { return CMat(n, std::vector<Complex>(n, Complex{0.0, 0.0})); }

inline CMat matmul(const CMat& a, const CMat& b) {
    const int n = static_cast<int>(a.size());
    CMat c = cmat(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Number of eigenvalues of Hermitian A strictly below x, by counting negative
// pivots of the LDL^H factorization of A - xI (Sylvester's law of inertia).
// Zero pivots are dodged by nudging the shift; fine for test-scale matrices.
inline int count_below(const CMat& m, double x, int depth = 0) {
    const int n = static_cast<int>(m.size());
    CMat a = m;
    for (int i = 0; i < n; ++i) a[i][i] -= x;

    double scale = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));

    int neg = 0;
    for (int k = 0; k < n; ++k) {
        const double d = a[k][k].real();
        if (std::abs(d) < 1e-14 * scale) {
            if (depth > 8) throw std::runtime_error("count_below: persistent zero pivot");
            return count_below(m, x + 3.1e-13 * scale * (depth + 1), depth + 1);
        }
        if (d < 0.0) ++neg;
        // Work on the upper triangle only: row k is frozen at this step, so
        // every read below comes from entries no earlier row update touched.
        for (int i = k + 1; i < n; ++i) {
            const Complex f = std::conj(a[k][i]) / d;
            for (int j = i; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return neg;
}

// All eigenvalues of a Hermitian matrix, ascending, by bisection on the
// inertia count. Independent of any similarity-transform eigensolver.
inline std::vector<double> hermitian_eigenvalues(const CMat& m) {
    const int n = static_cast<int>(m.size());
    // Gershgorin bounds
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) r += std::abs(m[i][j]);
        lo = std::min(lo, m[i][i].real() - r);
        hi = std::max(hi, m[i][i].real() + r);
    }
    lo -= 1.0;
    hi += 1.0;

    std::vector<double> eig(n);
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 200 && (b - a) > 1e-15 * std::max(1.0, std::max(std::abs(a), std::abs(b))); ++it) {
            const double mid = 0.5 * (a + b);
            if (count_below(m, mid) >= k + 1)
                b = mid;
            else
                a = mid;
        }
        eig[k] = 0.5 * (a + b);
    }
    return eig;
}

// Largest eigenvalue of a 2x2 Hermitian matrix, closed form.
inline double largest_eig_2x2(Complex a00, Complex a01, Complex a11) {
    const double a = a00.real(), d = a11.real();
    return 0.5 * (a + d) + std::sqrt(0.25 * (a - d) * (a - d) + std::norm(a01));
}

// Partial trace of |psi><psi| onto the kept qubits (1-based, qubit 1 = most
// significant bit), via direct summation over the traced bit assignments.
inline CMat partial_trace_pure(const std::vector<Complex>& amps, int n_qubits,
                               const std::vector<int>& keep_sorted) {
    const int m = static_cast<int>(keep_sorted.size());
    std::vector<int> traced;
    for (int q = 1; q <= n_qubits; ++q)
        if (std::find(keep_sorted.begin(), keep_sorted.end(), q) == keep_sorted.end())
            traced.push_back(q);

    auto bit_pos = [n_qubits](int qubit) { return n_qubits - qubit; };  // MSB convention

    const int dim_keep = 1 << m;
    const int dim_tr = 1 << static_cast<int>(traced.size());
    CMat rho = cmat(dim_keep);

    auto full_index = [&](int kept_bits, int traced_bits) {
        int b = 0;
        for (int j = 0; j < m; ++j)
            if (kept_bits & (1 << (m - 1 - j))) b |= 1 << bit_pos(keep_sorted[j]);
        for (std::size_t j = 0; j < traced.size(); ++j)
            if (traced_bits & (1 << (static_cast<int>(traced.size()) - 1 - static_cast<int>(j))))
                b |= 1 << bit_pos(traced[j]);
        return b;
    };

    for (int r = 0; r < dim_keep; ++r)
        for (int c = 0; c < dim_keep; ++c)
            for (int e = 0; e < dim_tr; ++e)
                rho[r][c] += amps[full_index(r, e)] * std::conj(amps[full_index(c, e)]);
    return rho;
}

// Genuine three-qubit entanglement of a pure state from the degree-4
// polynomial invariant of the amplitudes: tau = 4 |d1 - 2 d2 + 4 d3|.
// Index convention: a[i*4 + j*2 + k] carries qubit values (i, j, k).
inline double three_tangle_pure(const std::vector<Complex>& a) {
    auto A = [&](int i, int j, int k) { return a[i * 4 + j * 2 + k]; };
    const Complex a000 = A(0, 0, 0), a001 = A(0, 0, 1), a010 = A(0, 1, 0), a011 = A(0, 1, 1);
    const Complex a100 = A(1, 0, 0), a101 = A(1, 0, 1), a110 = A(1, 1, 0), a111 = A(1, 1, 1);

    const Complex d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                       a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
    const Complex d2 = a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 +
                       a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010 +
                       a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
    const Complex d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;

    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

// Eigenvalues of a 4x4 product matrix of rank <= 2 from its power traces
// (Newton's identities). Returns the two possibly-nonzero eigenvalues in
// descending order; throws if the trailing traces betray rank > 2.
inline std::array<double, 2> rank2_product_eigenvalues(const CMat& prod) {
    auto tr = [](const CMat& m) {
        Complex t{0.0, 0.0};
        for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
        return t;
    };
    const CMat p2 = matmul(prod, prod);
    const CMat p3 = matmul(p2, prod);
    const double t1 = tr(prod).real();
    const double t2 = tr(p2).real();
    const double t3 = tr(p3).real();

    // a + b = t1, a^2 + b^2 = t2  =>  ab = (t1^2 - t2) / 2
    const double s = t1;
    const double p = 0.5 * (t1 * t1 - t2);
    double disc = s * s - 4.0 * p;
    if (disc < 0.0) {
        if (disc < -1e-12) throw std::runtime_error("rank2 oracle: negative discriminant");
        disc = 0.0;
    }
    const double a = 0.5 * (s + std::sqrt(disc));
    const double b = 0.5 * (s - std::sqrt(disc));
    if (std::abs(a * a * a + b * b * b - t3) > 1e-10 * std::max(1.0, std::abs(t3)))
        throw std::runtime_error("rank2 oracle: trace t3 inconsistent with rank-2 assumption");
    return {a, b};
}

}  // namespace oracle
