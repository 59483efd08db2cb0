// Seeded Monte Carlo experiments over random inscribed tetrahedra:
// well-centeredness / acuteness rates, the acute-face count N, and the
// histograms of theta_abc | E and theta_min with their theoretical overlays.
// Work is partitioned by quad index over counter-based substreams and merged
// as integer counts, so any thread count produces bit-identical results.
#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "capcover/bounds.hpp"
#include "capcover/min_cap.hpp"
#include "capcover/rng.hpp"

namespace capcover {

struct Estimate {
    double value = 0.0;
    double std_err = 0.0;
    long long n = 0;
};

struct Histogram {
    std::vector<double> bin_edges;  // strictly increasing, size bins + 1
    std::vector<long long> counts;
    std::vector<double> density;  // counts / (n * bin_width)
    std::vector<double> overlay;  // theoretical curve at bin midpoints
    long long n = 0;              // total count
};

struct TetraReport {
    long long n = 0;
    Estimate p_wc;                       // P{well-centered}
    Estimate p_acute;                    // P{base ABC acute}
    Estimate kappa_hat;                  // P{well-centered and ABC acute}
    std::map<int, long long> n_counts;   // acute-face count N over well-centered quads
    Estimate e_n_hat;                    // mean N over well-centered quads
    int min_n = 4;                       // smallest N observed
};

namespace detail {

inline bool face_acute(const UnitVec& a, const UnitVec& b, const UnitVec& c) {
    try {
        return is_acute_chordal(a, b, c);
    } catch (const std::domain_error&) {
        return false;  // degenerate face, measure zero
    }
}

inline Estimate proportion(long long hits, long long n) {
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

template <typename PerQuad>
void run_indexed(int threads, const PerQuad& body) {
    threads = std::max(1, threads);
    if (threads == 1) {
        body(0, 1);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(body, t, threads);
    for (auto& th : pool) th.join();
}

}  // namespace detail

inline TetraReport run_tetra_experiment(long long n, std::uint64_t seed, int threads = 1) {
    if (n < 1) throw std::invalid_argument("run_tetra_experiment: n must be >= 1");
    threads = std::max(1, threads);
    struct Acc {
        long long wc = 0, acute = 0, e = 0;
        std::array<long long, 5> n_hist{};
        long long n_sum = 0, n_sq_sum = 0;
        int min_n = 4;
    };
    std::vector<Acc> accs(threads);
    detail::run_indexed(threads, [&](int t, int stride) {
        Acc& acc = accs[t];
        for (long long k = t; k < n; k += stride) {
            RngStream rng(seed, static_cast<std::uint64_t>(k));
            const PointQuad q = sample_quad(rng);
            const bool wc = is_well_centered(q);
            const bool base_acute = detail::face_acute(q.a, q.b, q.c);
            if (base_acute) ++acc.acute;
            if (!wc) continue;
            ++acc.wc;
            if (base_acute) ++acc.e;
            const int faces = static_cast<int>(base_acute) +
                              static_cast<int>(detail::face_acute(q.a, q.b, q.d)) +
                              static_cast<int>(detail::face_acute(q.a, q.c, q.d)) +
                              static_cast<int>(detail::face_acute(q.b, q.c, q.d));
            ++acc.n_hist[static_cast<std::size_t>(faces)];
            acc.n_sum += faces;
            acc.n_sq_sum += static_cast<long long>(faces) * faces;
            acc.min_n = std::min(acc.min_n, faces);
        }
    });
    Acc total;
    for (const Acc& a : accs) {
        total.wc += a.wc;
        total.acute += a.acute;
        total.e += a.e;
        for (int i = 0; i < 5; ++i) total.n_hist[static_cast<std::size_t>(i)] += a.n_hist[static_cast<std::size_t>(i)];
        total.n_sum += a.n_sum;
        total.n_sq_sum += a.n_sq_sum;
        total.min_n = std::min(total.min_n, a.min_n);
    }
    TetraReport rep;
    rep.n = n;
    rep.p_wc = detail::proportion(total.wc, n);
    rep.p_acute = detail::proportion(total.acute, n);
    rep.kappa_hat = detail::proportion(total.e, n);
    for (int i = 0; i <= 4; ++i) rep.n_counts[i] = total.n_hist[static_cast<std::size_t>(i)];
    if (total.wc > 0) {
        const double nw = static_cast<double>(total.wc);
        const double mean = static_cast<double>(total.n_sum) / nw;
        const double var =
            std::max(0.0, static_cast<double>(total.n_sq_sum) / nw - mean * mean);
        rep.e_n_hat = {mean, std::sqrt(var / nw), total.wc};
        rep.min_n = total.min_n;
    }
    return rep;
}

namespace detail {

template <typename Sampler, typename Overlay>
Histogram histogram_experiment(long long n, int bins, double lo, double hi, int threads,
                               const Sampler& sample_one, const Overlay& overlay_fn) {
    if (n < 1 || bins < 2) throw std::invalid_argument("histogram: need n >= 1 and bins >= 2");
    threads = std::max(1, threads);
    const double width = (hi - lo) / bins;
    std::vector<std::vector<long long>> counts(static_cast<std::size_t>(threads),
                                               std::vector<long long>(static_cast<std::size_t>(bins), 0));
    run_indexed(threads, [&](int t, int stride) {
        auto& local = counts[static_cast<std::size_t>(t)];
        for (long long k = t; k < n; k += stride) {
            double value;
            if (!sample_one(static_cast<std::uint64_t>(k), value)) continue;
            auto bin = static_cast<long long>((value - lo) / width);
            bin = std::clamp<long long>(bin, 0, bins - 1);
            ++local[static_cast<std::size_t>(bin)];
        }
    });
    Histogram h;
    h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) h.bin_edges[static_cast<std::size_t>(i)] = lo + width * i;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    for (const auto& local : counts)
        for (int i = 0; i < bins; ++i) h.counts[static_cast<std::size_t>(i)] += local[static_cast<std::size_t>(i)];
    for (long long c : h.counts) h.n += c;
    h.density.resize(static_cast<std::size_t>(bins));
    h.overlay.resize(static_cast<std::size_t>(bins));
    for (int i = 0; i < bins; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        h.density[idx] = h.n > 0 ? static_cast<double>(h.counts[idx]) /
                                       (static_cast<double>(h.n) * width)
                                 : 0.0;
        h.overlay[idx] = overlay_fn(lo + width * (i + 0.5));
    }
    return h;
}

}  // namespace detail

/// Histogram of theta_abc over quads satisfying E (well-centered, base ABC
/// acute), on (pi/2, pi], with the density g sampled at bin midpoints.
inline Histogram hist_theta_abc(long long n, int bins, std::uint64_t seed,
                                const ThetaAbcDist& dist = ThetaAbcDist::shared(),
                                int threads = 1) {
    return detail::histogram_experiment(
        n, bins, kPi / 2, kPi, threads,
        [&](std::uint64_t k, double& value) {
            RngStream rng(seed, k);
            const PointQuad q = sample_quad(rng);
            if (!is_well_centered(q) || !detail::face_acute(q.a, q.b, q.c)) return false;
            value = circumcap_containing(q.a, q.b, q.c, q.d).theta;
            return true;
        },
        [&](double mid) { return dist.g(mid); });
}

/// Histogram of theta_min over raw quads, on [0, pi], with the dominating
/// function psi sampled at bin midpoints.
inline Histogram hist_theta_min(long long n, int bins, std::uint64_t seed,
                                const ThetaAbcDist& dist = ThetaAbcDist::shared(),
                                int threads = 1) {
    return detail::histogram_experiment(
        n, bins, 0.0, kPi, threads,
        [&](std::uint64_t k, double& value) {
            RngStream rng(seed, k);
            value = theta_min(sample_quad(rng));
            return true;
        },
        [&](double mid) { return psi(mid, dist); });
}

/// CSV contract: UTF-8, LF line endings, header
/// `bin_left,bin_right,count,density,overlay`, reals with 17 significant
/// digits, angles in radians.
inline void emit_csv(const Histogram& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    out << "bin_left,bin_right,count,density,overlay\n";
    char buf[128];
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%lld,%.17g,%.17g\n", h.bin_edges[i],
                      h.bin_edges[i + 1], h.counts[i], h.density[i], h.overlay[i]);
        out << buf;
    }
    if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

/// Parse a histogram CSV written by emit_csv; counts round-trip exactly.
inline Histogram read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "bin_left,bin_right,count,density,overlay")
        throw std::runtime_error("read_csv: bad header in " + path);
    Histogram h;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        double left, right, density, overlay;
        long long count;
        std::getline(row, field, ',');
        left = std::stod(field);
        std::getline(row, field, ',');
        right = std::stod(field);
        std::getline(row, field, ',');
        count = std::stoll(field);
        std::getline(row, field, ',');
        density = std::stod(field);
        std::getline(row, field, ',');
        overlay = std::stod(field);
        if (h.bin_edges.empty()) h.bin_edges.push_back(left);
        h.bin_edges.push_back(right);
        h.counts.push_back(count);
        h.density.push_back(density);
        h.overlay.push_back(overlay);
        h.n += count;
    }
    return h;
}

}  // namespace capcover
