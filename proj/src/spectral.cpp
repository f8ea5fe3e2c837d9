#include "wronski/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace wronski {

std::string to_string(PsdVerdict v) {
    switch (v) {
        case PsdVerdict::Indefinite: return "indefinite";
        case PsdVerdict::Semidefinite: return "psd";
        case PsdVerdict::Definite: return "pd";
    }
    return "unknown";
}

// ---------------------------------------------------------------- exact certification

std::vector<Rational> characteristic_polynomial(const RationalMatrix& A) {
    if (A.rows() != A.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
    const std::size_t n = A.rows();
    RationalMatrix H = A;
    // similarity reduction to upper Hessenberg form
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && sgn(H(i, m - 1)) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(H(i, j), H(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(H(j, i), H(j, m));
        }
        for (std::size_t j = m + 1; j < n; ++j) {
            if (sgn(H(j, m - 1)) == 0) continue;
            const Rational u = H(j, m - 1) / H(m, m - 1);
            for (std::size_t k = 0; k < n; ++k) H(j, k) -= u * H(m, k);
            for (std::size_t k = 0; k < n; ++k) H(k, m) += u * H(k, j);
        }
    }
    std::vector<RationalPoly> p(n + 1);
    p[0] = RationalPoly::constant(1);
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = RationalPoly::linear(-H(m - 1, m - 1)) * p[m - 1];
        Rational t(1);
        for (std::size_t i = 1; i < m; ++i) {
            t *= H(m - i, m - i - 1);
            if (sgn(t) == 0) break;
            p[m] -= p[m - i - 1] * Rational(t * H(m - i - 1, m - 1));
        }
    }
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) c[i] = p[n].coeff(i);
    return c;
}

std::string matrix_hash(const ExactOperator& A) {
    // FNV-1a over the canonical entry strings
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        h ^= ',';
        h *= 1099511628211ULL;
    };
    feed(std::to_string(A.dim()));
    for (const auto& x : A.entries()) feed(format_rational(x));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Rational quadratic_form(const RationalMatrix& A, const std::vector<Rational>& v) {
    Rational acc(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (sgn(v[j]) != 0) row += A(i, j) * v[j];
        acc += v[i] * row;
    }
    return acc;
}

bool signs_psd(const std::vector<Rational>& c) {
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) {
        const int s = sgn(c[i]);
        if ((n - i) % 2 == 0 ? s < 0 : s > 0) return false;
    }
    return true;
}

// Symmetric elimination M = T A T^T; a negative pivot, or a zero pivot with a nonzero
// off-diagonal entry, yields v with v^T A v < 0.
std::optional<std::vector<Rational>> negative_direction(const RationalMatrix& A) {
    const std::size_t n = A.rows();
    RationalMatrix M = A, T = RationalMatrix::identity(n);
    auto row_of = [&](std::size_t k) {
        std::vector<Rational> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = T(k, j);
        return v;
    };
    for (std::size_t k = 0; k < n; ++k) {
        const int s = sgn(M(k, k));
        if (s < 0) return row_of(k);
        if (s == 0) {
            for (std::size_t i = k + 1; i < n; ++i) {
                if (sgn(M(i, k)) == 0) continue;
                // (x e_k + e_i)^T M (x e_k + e_i) = 2 x b + M_ii = -1
                const Rational x = -(M(i, i) + 1) / (2 * M(i, k));
                std::vector<Rational> v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = x * T(k, j) + T(i, j);
                return v;
            }
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(M(i, k)) == 0) continue;
            const Rational f = M(i, k) / M(k, k);
            for (std::size_t j = 0; j < n; ++j) M(i, j) -= f * M(k, j);
            for (std::size_t j = 0; j < n; ++j) M(j, i) -= f * M(j, k);
            for (std::size_t j = 0; j < n; ++j) T(i, j) -= f * T(k, j);
        }
    }
    return std::nullopt;
}

std::vector<Rational> leading_minors(const RationalMatrix& A) {
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= A.rows(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        out.push_back(determinant(A.submatrix(idx, idx)));
    }
    return out;
}

}  // namespace

PSDCertificate certify_psd_exact(const ExactOperator& A, bool strict) {
    if (!A.is_symmetric()) throw DomainError("PSD certification needs a symmetric operator");
    const RationalMatrix M = A.to_matrix();
    PSDCertificate cert;
    cert.matrix_hash = matrix_hash(A);
    cert.char_poly = characteristic_polynomial(M);
    const bool psd = signs_psd(cert.char_poly);
    auto neg = negative_direction(M);
    if (psd == neg.has_value()) throw IdentityViolation("characteristic polynomial and elimination disagree on semidefiniteness");
    if (!psd) {
        cert.verdict = PsdVerdict::Indefinite;
        cert.witness = *neg;
        cert.witness_value = quadratic_form(M, cert.witness);
        if (sgn(cert.witness_value) >= 0) throw IdentityViolation("indefinite witness has nonnegative form value");
        return cert;
    }
    const bool pd = sgn(cert.char_poly[0]) != 0;
    cert.verdict = pd ? PsdVerdict::Definite : PsdVerdict::Semidefinite;
    if (strict) {
        cert.leading_minors = leading_minors(M);
        const bool sylvester = std::all_of(cert.leading_minors.begin(), cert.leading_minors.end(),
                                           [](const Rational& x) { return sgn(x) > 0; });
        if (sylvester != pd) throw IdentityViolation("Sylvester minors disagree with the characteristic polynomial");
    }
    return cert;
}

bool certificate_consistent(const ExactOperator& A, const PSDCertificate& cert) {
    if (cert.matrix_hash != matrix_hash(A)) return false;
    const RationalMatrix M = A.to_matrix();
    if (cert.char_poly.size() != M.rows() + 1) return false;
    switch (cert.verdict) {
        case PsdVerdict::Indefinite:
            return cert.witness.size() == M.rows() && sgn(cert.witness_value) < 0 &&
                   quadratic_form(M, cert.witness) == cert.witness_value;
        case PsdVerdict::Semidefinite:
            return signs_psd(cert.char_poly) && sgn(cert.char_poly[0]) == 0;
        case PsdVerdict::Definite:
            return signs_psd(cert.char_poly) && sgn(cert.char_poly[0]) != 0 &&
                   std::all_of(cert.leading_minors.begin(), cert.leading_minors.end(),
                               [](const Rational& x) { return sgn(x) > 0; });
    }
    return false;
}

PsdReport verify_psd_theorem(const GaudinInstance& inst, const Rational& t, int bound) {
    inst.validate();
    PsdReport rep;
    const bool h_nonneg = std::all_of(inst.h.begin(), inst.h.end(), [](const Rational& x) { return sgn(x) >= 0; });
    const bool h_pos = std::all_of(inst.h.begin(), inst.h.end(), [](const Rational& x) { return sgn(x) > 0; });
    const bool t_weak = std::all_of(inst.z.begin(), inst.z.end(), [&](const Rational& z) { return t + z >= 0; });
    const bool t_strict = std::all_of(inst.z.begin(), inst.z.end(), [&](const Rational& z) { return t + z > 0; });
    rep.psd_hypotheses = h_nonneg && t_weak;
    rep.pd_hypotheses = h_pos && t_strict;
    for (const auto& lam : partitions_up_to(bound)) {
        PsdEntry e;
        e.lambda = lam;
        if (rep.pd_hypotheses && lam.length() <= inst.N) e.required = PsdVerdict::Definite;
        else if (rep.psd_hypotheses) e.required = PsdVerdict::Semidefinite;
        e.certificate = certify_psd_exact(build_T_definitional(lam, inst)(t), e.required == PsdVerdict::Definite);
        e.verdict = e.certificate.verdict;
        e.ok = static_cast<int>(e.verdict) >= static_cast<int>(e.required);
        rep.all_ok = rep.all_ok && e.ok;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// ---------------------------------------------------------------- float stage

OperatorFamily::OperatorFamily(GaudinInstance inst) : inst_(std::move(inst)) { inst_.validate(); }

const OperatorPolynomial& OperatorFamily::T(const Partition& lambda) {
    auto it = cache_.find(lambda);
    if (it == cache_.end()) it = cache_.emplace(lambda, build_T_definitional(lambda, inst_)).first;
    return it->second;
}

const FloatOperator& OperatorFamily::T_at(const Partition& lambda, const Rational& t) {
    auto key = std::make_pair(lambda, t);
    auto it = values_.find(key);
    if (it == values_.end()) it = values_.emplace(key, to_float(T(lambda)(t))).first;
    return it->second;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd dense(const FloatOperator& op) {
    MatrixXd m(op.dim(), op.dim());
    for (std::size_t r = 0; r < op.dim(); ++r)
        for (std::size_t c = 0; c < op.dim(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = op(r, c);
    return m;
}

MatrixXd basis_matrix(const Eigenspace& E) {
    const auto k = static_cast<Eigen::Index>(E.basis.size());
    const auto d = static_cast<Eigen::Index>(E.basis.front().size());
    MatrixXd Q(d, k);
    for (Eigen::Index j = 0; j < k; ++j)
        for (Eigen::Index i = 0; i < d; ++i) Q(i, j) = E.basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return Q;
}

struct Rayleigh {
    double value;
    double residual;  // ||T Q - value Q|| / max(1, ||T||)
    double spread;    // max |v^T T v - value| / max(1, ||T||)
};

Rayleigh rayleigh(const MatrixXd& T, const MatrixXd& Q) {
    const MatrixXd TQ = T * Q;
    const MatrixXd R = Q.transpose() * TQ;
    const double value = R.trace() / static_cast<double>(Q.cols());
    const double scale = std::max(1.0, T.norm());
    double spread = 0;
    for (Eigen::Index j = 0; j < Q.cols(); ++j) spread = std::max(spread, std::abs(R(j, j) - value));
    return {value, (TQ - value * Q).norm() / scale, spread / scale};
}

double factorial_d(int q) { return std::tgamma(static_cast<double>(q) + 1.0); }

// Truncated power series in w with coefficients 0..order.
using Series = std::vector<double>;

Series series_mul(const Series& a, const Series& b, std::size_t order) {
    Series r(order + 1, 0.0);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
    return r;
}

Series series_derivative(const Series& a, int k) {
    Series r = a;
    for (int s = 0; s < k; ++s) {
        if (r.empty()) break;
        for (std::size_t q = 0; q + 1 < r.size(); ++q) r[q] = r[q + 1] * static_cast<double>(q + 1);
        r.pop_back();
    }
    return r;
}

Series series_determinant(const std::vector<std::vector<Series>>& grid, std::size_t order) {
    const std::size_t n = grid.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Series det(order + 1, 0.0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Series term(order + 1, 0.0);
        term[0] = inversions % 2 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) term = series_mul(term, grid[i][perm[i]], order);
        for (std::size_t q = 0; q <= order; ++q) det[q] += term[q];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

EigenspaceDecomposition simultaneous_eigenspaces(OperatorFamily& family, const Rational& t, int bound, std::uint64_t seed,
                                                 const Tolerances& tol) {
    const auto parts = partitions_up_to(bound);
    std::vector<MatrixXd> ops;
    for (const auto& lam : parts) ops.push_back(dense(family.T_at(lam, t)));
    const Eigen::Index D = ops.front().rows();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(1, 400);
    for (int attempt = 0; attempt <= tol.max_rerandomizations; ++attempt) {
        MatrixXd C = MatrixXd::Zero(D, D);
        for (const auto& T : ops) {
            const int k = coef(rng);
            C += (static_cast<double>(k % 2 ? k : -k) / 97.0) * T;
        }
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(C);
        if (es.info() != Eigen::Success) continue;
        const VectorXd& ev = es.eigenvalues();
        const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
        std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // [begin, end)
        bool ambiguous = false;
        Eigen::Index begin = 0;
        for (Eigen::Index i = 1; i <= D; ++i) {
            if (i < D) {
                const double gap = (ev(i) - ev(i - 1)) / scale;
                if (gap <= tol.cluster_merge) continue;
                if (gap < tol.cluster_gap) {
                    ambiguous = true;
                    break;
                }
            }
            clusters.emplace_back(begin, i);
            begin = i;
        }
        if (ambiguous) continue;
        EigenspaceDecomposition dec;
        dec.t = t;
        dec.bound = bound;
        dec.seed = seed;
        dec.attempts = attempt + 1;
        bool ok = true;
        std::vector<MatrixXd> Qs;
        for (const auto& [b, e] : clusters) {
            const MatrixXd Q = es.eigenvectors().middleCols(b, e - b);
            Eigenspace E;
            for (Eigen::Index j = 0; j < Q.cols(); ++j) E.basis.emplace_back(Q.col(j).data(), Q.col(j).data() + Q.rows());
            for (std::size_t l = 0; l < parts.size(); ++l) {
                const Rayleigh r = rayleigh(ops[l], Q);
                E.eigenvalues[parts[l]] = r.value;
                E.residual = std::max(E.residual, r.residual);
                dec.max_rayleigh_deviation = std::max(dec.max_rayleigh_deviation, r.spread);
            }
            if (E.residual > tol.eigenvalue) ok = false;
            dec.max_residual = std::max(dec.max_residual, E.residual);
            Qs.push_back(Q);
            dec.spaces.push_back(std::move(E));
        }
        if (!ok) continue;  // a random coincidence merged two joint eigenspaces
        for (std::size_t a = 0; a < Qs.size(); ++a)
            for (std::size_t b = a + 1; b < Qs.size(); ++b)
                dec.max_orthogonality = std::max(dec.max_orthogonality, (Qs[a].transpose() * Qs[b]).cwiseAbs().maxCoeff());
        return dec;
    }
    throw GenericityError("eigenvalue clusters stayed ambiguous after " + std::to_string(tol.max_rerandomizations) +
                          " re-randomizations; perturb h or z");
}

EigenspaceDecomposition simultaneous_eigenspaces(const GaudinInstance& inst, const Rational& t, int bound, std::uint64_t seed,
                                                 const Tolerances& tol) {
    OperatorFamily family(inst);
    return simultaneous_eigenspaces(family, t, bound, seed, tol);
}

double eigenvalue_at(OperatorFamily& family, const Eigenspace& E, const Partition& lambda, const Rational& t) {
    return rayleigh(dense(family.T_at(lambda, t)), basis_matrix(E)).value;
}

FloatPoly eigenvalue_polynomial(OperatorFamily& family, const Eigenspace& E, const Partition& lambda, const Tolerances& tol) {
    const int n = family.instance().n;
    const MatrixXd Q = basis_matrix(E);
    std::vector<double> xs, ys;
    double magnitude = 1;
    for (int k = 0; k <= n; ++k) {
        const Rayleigh r = rayleigh(dense(family.T_at(lambda, Rational(k))), Q);
        if (r.residual > tol.eigenvalue) {
            throw InstabilityError("eigenspace is not invariant under T_" + lambda.to_string() + " at t = " + std::to_string(k));
        }
        xs.push_back(k);
        ys.push_back(r.value);
        magnitude = std::max(magnitude, std::abs(r.value));
    }
    FloatPoly p = interpolate(xs, ys);
    Rational held(2 * n + 1, 2);
    held.canonicalize();
    const double expect = rayleigh(dense(family.T_at(lambda, held)), Q).value;
    magnitude = std::max(magnitude, std::abs(expect));
    if (std::abs(p(held.get_d()) - expect) > tol.eigenvalue * magnitude) {
        throw InstabilityError("eigenvalue polynomial of T_" + lambda.to_string() + " fails its held-out check");
    }
    return p;
}

ReconstructionReport reconstruct_space(OperatorFamily& family, const Eigenspace& E, const Rational& t, int D, int bound,
                                       const Tolerances& tol) {
    const GaudinInstance& inst = family.instance();
    const int N = inst.N, n = inst.n;
    if (D < bound + N - 1) throw DomainError("truncation D must be >= bound + N - 1");
    const double td = t.get_d();
    // single-row eigenvalue polynomials and their derivatives at t
    std::vector<std::vector<double>> a(static_cast<std::size_t>(D + 1));
    for (int i = 0; i <= D; ++i) {
        FloatPoly p = eigenvalue_polynomial(family, E, Partition::row(i), tol);
        for (int s = 0; s < N; ++s) {
            a[static_cast<std::size_t>(i)].push_back(p(td));
            p = p.derivative();
        }
    }
    // cancellation scale of evaluating the T_empty eigenvalue polynomial at t
    double a0_scale = 0;
    {
        const FloatPoly p0 = eigenvalue_polynomial(family, E, Partition{}, tol);
        double power = 1;
        for (double c : p0.coeffs()) {
            a0_scale += std::abs(c) * power;
            power *= std::abs(td);
        }
    }
    if (std::abs(a[0][0]) <= 1e-9 * std::max(a0_scale, 1.0)) throw PreconditionError("t is a zero of the reconstructed Wronskian");

    ReconstructionReport rep;
    rep.order = D;
    const std::size_t len = static_cast<std::size_t>(D + 1);
    for (int j = 0; j < N; ++j) {
        Series row(len, 0.0);
        for (int q = 0; q <= D; ++q) {
            double acc = 0;
            for (int k = 0; k <= j; ++k) {
                const int i = q + k - N + 1;
                if (i < 0 || i > D) continue;
                const double term = binomial(j, k).get_d() * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - k)];
                acc += k % 2 ? -term : term;
            }
            row[static_cast<std::size_t>(q)] = acc / factorial_d(q);
        }
        rep.series.push_back(std::move(row));
    }

    // (b) Pluecker vector of the basis against the eigenvalue vector
    Matrix<double> jets(len, static_cast<std::size_t>(N));
    for (std::size_t q = 0; q < len; ++q)
        for (std::size_t j = 0; j < static_cast<std::size_t>(N); ++j) jets(q, j) = rep.series[j][q] * factorial_d(static_cast<int>(q));
    rep.plucker = plucker_from_jets(jets, bound);
    rep.eigenvalues = PlueckerVector<double>(N, bound);
    for (const auto& lam : partitions_up_to(bound)) rep.eigenvalues[lam] = eigenvalue_at(family, E, lam, t);
    rep.plucker_residual = projective_distance(rep.plucker, rep.eigenvalues);

    // (a) Wronskian against e^{(h_1+..+h_N) w} prod (w + t + z_k)
    const std::size_t worder = len - static_cast<std::size_t>(N);
    std::vector<std::vector<Series>> grid(static_cast<std::size_t>(N), std::vector<Series>(static_cast<std::size_t>(N)));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = series_derivative(rep.series[static_cast<std::size_t>(j)], i);
    const Series wr = series_determinant(grid, worder);
    double H = 0;
    for (const auto& h : inst.h) H += h.get_d();
    Series target(worder + 1, 0.0);
    for (std::size_t q = 0; q <= worder; ++q) target[q] = std::pow(H, static_cast<double>(q)) / factorial_d(static_cast<int>(q));
    for (const auto& z : inst.z) target = series_mul(target, Series{td + z.get_d(), 1.0}, worder);
    rep.wronskian_residual = projective_distance(wr, target);

    // (c) least-squares fit by sum_c e^{c w} (polynomial of degree <= n + m_c - 1)
    std::map<Rational, int> mult;
    for (const auto& h : inst.h) ++mult[h];
    std::vector<std::pair<double, int>> cols;
    double rho = 1;
    for (const auto& [c, m] : mult) {
        for (int d = 0; d < n + m; ++d) cols.emplace_back(c.get_d(), d);
        rho = std::max(rho, 1 + std::abs(c.get_d()));
    }
    if (cols.size() >= len) throw DomainError("truncation D too small for the quasi-exponential fit");
    // rows scaled by q!/rho^q so every column has polynomially bounded entries
    MatrixXd M(static_cast<Eigen::Index>(len), static_cast<Eigen::Index>(cols.size()));
    std::vector<double> row_scale(len);
    for (std::size_t q = 0; q < len; ++q) {
        row_scale[q] = factorial_d(static_cast<int>(q)) / std::pow(rho, static_cast<double>(q));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const auto [c, d] = cols[k];
            double v = 0;
            if (static_cast<int>(q) >= d) {
                const int e = static_cast<int>(q) - d;
                v = (e == 0 ? 1.0 : std::pow(c, e)) / factorial_d(e);
            }
            M(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(k)) = v * row_scale[q];
        }
    }
    const Eigen::ColPivHouseholderQR<MatrixXd> qr(M);
    for (const auto& s : rep.series) {
        VectorXd rhs(static_cast<Eigen::Index>(len));
        for (std::size_t q = 0; q < len; ++q) rhs(static_cast<Eigen::Index>(q)) = s[q] * row_scale[q];
        const VectorXd x = qr.solve(rhs);
        const double denom = std::max(rhs.cwiseAbs().maxCoeff(), 1e-300);
        rep.fit_residual = std::max(rep.fit_residual, (M * x - rhs).cwiseAbs().maxCoeff() / denom);
    }

    rep.passed = rep.wronskian_residual < tol.reconstruction && rep.plucker_residual < tol.reconstruction &&
                 rep.fit_residual < tol.reconstruction;
    return rep;
}

UniversalityReport verify_universal_coordinates(const GaudinInstance& inst, const Rational& t, int bound, int D,
                                                std::uint64_t seed, const Tolerances& tol) {
    OperatorFamily family(inst);
    const auto dec = simultaneous_eigenspaces(family, t, bound, seed, tol);
    UniversalityReport rep;
    rep.seed = seed;
    rep.attempts = dec.attempts;
    rep.max_orthogonality = dec.max_orthogonality;
    const int N = inst.N;
    for (const auto& E : dec.spaces) {
        EigenspaceCheck chk;
        chk.dim = E.basis.size();
        rep.total_dim += chk.dim;
        chk.reconstruction = reconstruct_space(family, E, t, D, bound, tol);
        // sum_i (-1)^i Delta_(1^i)(t+w) f^{(N-i)}(w) should vanish to order D - N
        const std::size_t order = static_cast<std::size_t>(D - N);
        std::vector<Series> cols;
        for (int i = 0; i <= N; ++i) cols.push_back(eigenvalue_polynomial(family, E, Partition::column(i), tol).shifted(t.get_d()).coeffs());
        double worst = 0, scale = 1e-300;
        for (const auto& f : chk.reconstruction.series) {
            Series total(order + 1, 0.0), mag(order + 1, 0.0);
            for (int i = 0; i <= N; ++i) {
                Series term = series_mul(cols[static_cast<std::size_t>(i)], series_derivative(f, N - i), order);
                for (std::size_t q = 0; q <= order; ++q) {
                    total[q] += i % 2 ? -term[q] : term[q];
                    mag[q] = std::max(mag[q], std::abs(term[q]));
                }
            }
            for (std::size_t q = 0; q <= order; ++q) {
                worst = std::max(worst, std::abs(total[q]));
                scale = std::max(scale, mag[q]);
            }
        }
        chk.link_residual = worst / scale;
        chk.passed = chk.reconstruction.passed && chk.link_residual < tol.reconstruction;
        rep.spaces.push_back(std::move(chk));
    }
    std::size_t expected = 1;
    for (int k = 0; k < inst.n; ++k) expected *= static_cast<std::size_t>(N);
    rep.passed = rep.total_dim == expected && rep.max_orthogonality <= tol.orthogonality &&
                 std::all_of(rep.spaces.begin(), rep.spaces.end(), [](const EigenspaceCheck& c) { return c.passed; });
    return rep;
}

double sign_violation(const PlueckerVector<double>& pv) {
    double top = 0, sign = 1;
    for (const auto& [p, x] : pv.values())
        if (std::abs(x) > top) {
            top = std::abs(x);
            sign = x > 0 ? 1 : -1;
        }
    if (top == 0) return 0;
    double worst = 0;
    for (const auto& [p, x] : pv.values()) worst = std::max(worst, -sign * x);
    return worst / top;
}

PositivityReport verify_positivity(const GaudinInstance& inst, const Rational& t, int bound, int D, std::uint64_t seed,
                                   const Tolerances& tol) {
    PositivityReport rep;
    rep.hypotheses = std::all_of(inst.h.begin(), inst.h.end(), [](const Rational& x) { return sgn(x) >= 0; }) &&
                     std::all_of(inst.z.begin(), inst.z.end(), [&](const Rational& z) { return t + z >= 0; });
    OperatorFamily family(inst);
    const auto dec = simultaneous_eigenspaces(family, t, std::min(bound, 4), seed, tol);
    for (const auto& E : dec.spaces) {
        const auto rec = reconstruct_space(family, E, t, D, bound, tol);
        const double v = sign_violation(rec.plucker);
        ++rep.spaces;
        if (v <= tol.sign) ++rep.one_signed;
        rep.worst_violation = std::max(rep.worst_violation, v);
    }
    rep.passed = rep.one_signed == rep.spaces;
    return rep;
}

}  // namespace wronski
