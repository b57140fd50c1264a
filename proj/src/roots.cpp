#include "qdpot/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdpot {

namespace {

// Backward-error yardstick: |p(z)| against eps * sum |c_k||z|^k.
double eval_bound(const Poly& p, cplx z) {
    double az = std::abs(z);
    double acc = 0.0;
    double pw = 1.0;
    for (const auto& c : p.coeffs()) {
        acc += std::abs(c) * pw;
        pw *= az;
    }
    return acc;
}

std::vector<cplx> aberth(const Poly& p) {
    const int n = p.degree();
    const Poly dp = p.derivative();
    std::vector<cplx> z(n);

    double a0 = std::abs(p.coeff(0));
    double an = std::abs(p.lead());
    double r = (a0 > 0.0) ? std::pow(a0 / an, 1.0 / n) : 0.5;
    double cauchy = 0.0;
    for (int k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(p.coeff(k)) / an);
    r = std::clamp(r, 1e-3, 1.0 + cauchy);
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * std::numbers::pi * k / n + 0.4;
        z[k] = r * cplx(std::cos(ang), std::sin(ang));
    }

    for (int iter = 0; iter < tol::root_iter_cap; ++iter) {
        bool all_done = true;
        for (int k = 0; k < n; ++k) {
            cplx pv = p(z[k]);
            if (std::abs(pv) <= tol::root * eval_bound(p, z[k])) continue;
            cplx dv = dp(z[k]);
            if (dv == cplx(0.0)) {
                z[k] += cplx(1e-8, 1e-8) * (1.0 + std::abs(z[k]));
                all_done = false;
                continue;
            }
            cplx newton = pv / dv;
            cplx s = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != k) s += 1.0 / (z[k] - z[j]);
            cplx denom = 1.0 - newton * s;
            cplx step = (std::abs(denom) > 1e-14) ? newton / denom : newton;
            z[k] -= step;
            if (std::abs(step) > tol::root * (1.0 + std::abs(z[k]))) all_done = false;
        }
        if (all_done) return z;
    }
    // Accept anyway if every iterate already meets the backward-error test.
    for (int k = 0; k < n; ++k)
        if (std::abs(p(z[k])) > tol::root * eval_bound(p, z[k]))
            throw root_failure("poly_roots: Aberth iteration did not converge", z);
    return z;
}

}  // namespace

std::vector<Root> poly_roots(const Poly& p) {
    if (p.is_zero()) throw error(errc::internal, "poly_roots: zero polynomial");

    // Exact zero roots split off first.
    std::vector<cplx> c = p.coeffs();
    int zero_mult = 0;
    while (!c.empty() && c.front() == cplx(0.0)) {
        c.erase(c.begin());
        ++zero_mult;
    }
    Poly q{std::vector<cplx>(c)};
    std::vector<Root> out;
    if (zero_mult > 0) out.push_back({cplx(0.0), zero_mult});
    const int n = q.degree();
    if (n <= 0) return out;

    std::vector<cplx> z;
    if (n == 1) {
        z = {-q.coeff(0) / q.coeff(1)};
    } else if (n == 2) {
        cplx a = q.coeff(2), b = q.coeff(1), cc = q.coeff(0);
        cplx d = std::sqrt(b * b - 4.0 * a * cc);
        // Pick the sign that avoids cancellation in -b -/+ d.
        cplx s = (std::abs(b - d) > std::abs(b + d)) ? (b - d) : (b + d);
        if (std::abs(s) == 0.0) {
            z = {-b / (2.0 * a), -b / (2.0 * a)};
        } else {
            cplx r1 = -s / (2.0 * a);
            cplx r2 = cc / (a * r1);
            z = {r1, r2};
        }
    } else {
        z = aberth(q);
    }

    // Iterates of an m-fold root stall at the intrinsic uncertainty
    // (noise/(|q^(m)|/m!))^(1/m), which can exceed tol::cluster at scale, so
    // the merge radius adapts to that floor. The centroid of a merged cluster
    // is far more accurate than its members (the iterates straddle the root
    // symmetrically) and is never polished; only multiplicity-1 reps get
    // Newton steps, which walks stalled pairs close enough to merge on a
    // later round.
    const Poly dq = q.derivative();
    std::vector<Poly> ders{q};
    for (int k = 1; k <= std::min(n, 10); ++k) ders.push_back(ders.back().derivative());
    auto noise = [&q](cplx at) { return 1e-16 * eval_bound(q, at); };
    auto accept = [&q](cplx cur, cplx old) {
        double bound = tol::root * eval_bound(q, cur);
        return std::abs(q(cur)) <= std::max(bound, std::abs(q(old)));
    };
    auto newton_polish = [&](cplx start) {
        cplx cur = start;
        for (int it = 0; it < 32; ++it) {
            cplx dv = dq(cur);
            if (std::abs(dv) == 0.0) break;
            cplx step = q(cur) / dv;
            cur -= step;
            if (std::abs(step) <= 1e-14 * (1.0 + std::abs(cur))) break;
        }
        return accept(cur, start) ? cur : start;
    };

    std::vector<Root> clusters;
    for (const auto& zk : z) clusters.push_back({zk, 1});

    auto pair_radius = [&](const Root& a, const Root& b) {
        cplx mid = 0.5 * (a.location + b.location);
        double base = tol::cluster * (1.0 + std::abs(mid));
        int m = a.multiplicity + b.multiplicity;
        if (m >= static_cast<int>(ders.size())) return base;
        double fact = 1.0;
        for (int k = 2; k <= m; ++k) fact *= k;
        double dm = std::abs(ders[m](mid)) / fact;
        if (dm <= 0.0) return base;
        double unc = std::pow(noise(mid) / dm, 1.0 / m);
        return std::max(base, 3.0 * unc);
    };

    for (int round = 0; round < 6; ++round) {
        bool merged_any = false;
        bool moved_any = false;
        std::vector<Root> next;
        std::vector<bool> used(clusters.size(), false);
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (used[i]) continue;
            Root acc = clusters[i];
            used[i] = true;
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(acc.location - clusters[j].location) <=
                    pair_radius(acc, clusters[j])) {
                    // multiplicity-weighted centroid
                    acc.location = (acc.location * double(acc.multiplicity) +
                                    clusters[j].location * double(clusters[j].multiplicity)) /
                                   double(acc.multiplicity + clusters[j].multiplicity);
                    acc.multiplicity += clusters[j].multiplicity;
                    used[j] = true;
                    merged_any = true;
                }
            }
            if (acc.multiplicity == 1) {
                cplx polished = newton_polish(acc.location);
                if (std::abs(polished - acc.location) >
                    0.01 * tol::cluster * (1.0 + std::abs(acc.location)))
                    moved_any = true;
                acc.location = polished;
            }
            next.push_back(acc);
        }
        clusters = std::move(next);
        if (!merged_any && !moved_any) break;
    }

    // Merge any cluster that landed on the exact zero root.
    for (auto& cl : clusters) {
        if (zero_mult > 0 && std::abs(cl.location) <= tol::cluster) {
            out.front().multiplicity += cl.multiplicity;
            cl.multiplicity = 0;
        }
    }
    for (auto& cl : clusters)
        if (cl.multiplicity > 0) out.push_back(cl);

    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

}  // namespace qdpot
