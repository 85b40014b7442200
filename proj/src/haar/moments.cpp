// Copyright 2026 The plateau-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plateau/haar/moments.hpp"

#include <cmath>
#include <random>

#include "plateau/core/density_matrix.hpp"
#include "plateau/core/haar.hpp"
#include "plateau/core/rng.hpp"

namespace plateau {

namespace {

constexpr std::int64_t kChunk = 1000;
constexpr double kZeroVarianceSlack = 1e-10;

struct Moments {
    std::vector<Complex> mean;
    std::vector<double> std_error;
};

// Fixed-size chunks reduced in order, so the result does not depend on the
// number of threads.
Moments accumulate(int dim, int n_outputs, int n_samples, std::uint64_t seed,
                   const std::function<void(const CMatrix &, std::vector<Complex> &)> &f) {
    require(n_samples >= kMinMomentSamples,
            "moment checks need at least " + std::to_string(kMinMomentSamples) + " samples");
    const std::int64_t chunks = (n_samples + kChunk - 1) / kChunk;
    const auto k = static_cast<std::size_t>(n_outputs);
    std::vector<std::vector<Complex>> sums(static_cast<std::size_t>(chunks),
                                           std::vector<Complex>(k));
    std::vector<std::vector<double>> squares(static_cast<std::size_t>(chunks),
                                             std::vector<double>(k));
#pragma omp parallel
    {
        std::vector<Complex> out(k);
#pragma omp for schedule(static)
        for (std::int64_t c = 0; c < chunks; ++c) {
            auto &s = sums[static_cast<std::size_t>(c)];
            auto &q = squares[static_cast<std::size_t>(c)];
            const std::int64_t end = std::min<std::int64_t>(n_samples, (c + 1) * kChunk);
            for (std::int64_t i = c * kChunk; i < end; ++i) {
                Rng rng = make_rng(seed, streams::kHaarCheck, static_cast<std::uint64_t>(i));
                const CMatrix u = sample_haar(dim, rng);
                f(u, out);
                for (std::size_t j = 0; j < k; ++j) {
                    s[j] += out[j];
                    q[j] += std::norm(out[j]);
                }
            }
        }
    }
    Moments m{std::vector<Complex>(k), std::vector<double>(k)};
    const double n = n_samples;
    for (std::size_t j = 0; j < k; ++j) {
        Complex s{0.0, 0.0};
        double q = 0.0;
        for (std::int64_t c = 0; c < chunks; ++c) {
            s += sums[static_cast<std::size_t>(c)][j];
            q += squares[static_cast<std::size_t>(c)][j];
        }
        const Complex mean = s / n;
        // Sample variance of re plus that of im.
        const double var = std::max(0.0, (q - n * std::norm(mean)) / (n - 1.0));
        m.mean[j] = mean;
        m.std_error[j] = std::sqrt(var / n);
    }
    return m;
}

MomentCheckReport make_report(const std::string &check, int d, Complex closed, Complex mc,
                              double se, int n_samples) {
    const bool pass = std::abs(mc - closed) <= 3.0 * se + kZeroVarianceSlack;
    return {check, d, closed, mc, se, n_samples, pass};
}

void check_square(const CMatrix &m, int d, const char *name) {
    require(m.rows() == d && m.cols() == d, std::string("matrix ") + name + " must be d x d");
}

} // namespace

Complex twirl_value(const CMatrix &a, const CMatrix &b, int d) {
    require(d >= 1, "d must be >= 1");
    check_square(a, d, "A");
    check_square(b, d, "B");
    return a.trace() * b.trace() / static_cast<double>(d);
}

Complex single_trace_value(const CMatrix &a, const CMatrix &b, const CMatrix &c, const CMatrix &dm,
                     int d) {
    require(d >= 2, "d must be >= 2");
    check_square(a, d, "A");
    check_square(b, d, "B");
    check_square(c, d, "C");
    check_square(dm, d, "D");
    const double dd = d;
    const Complex ta = a.trace(), tb = b.trace(), tc = c.trace(), td = dm.trace();
    const Complex tac = (a * c).trace(), tbd = (b * dm).trace();
    return (ta * tc * tbd + tac * tb * td) / (dd * dd - 1.0) -
           (tac * tbd + ta * tb * tc * td) / (dd * (dd * dd - 1.0));
}

Complex double_trace_value(const CMatrix &a, const CMatrix &b, const CMatrix &c, const CMatrix &dm,
                     int d) {
    require(d >= 2, "d must be >= 2");
    check_square(a, d, "A");
    check_square(b, d, "B");
    check_square(c, d, "C");
    check_square(dm, d, "D");
    const double dd = d;
    const Complex ta = a.trace(), tb = b.trace(), tc = c.trace(), td = dm.trace();
    const Complex tac = (a * c).trace(), tbd = (b * dm).trace();
    return (ta * tb * tc * td + tac * tbd) / (dd * dd - 1.0) -
           (tac * tb * td + ta * tc * tbd) / (dd * (dd * dd - 1.0));
}

CMatrix partial_twirl(const CMatrix &a, int d_w) {
    require(d_w >= 2 && (d_w & (d_w - 1)) == 0, "d_w must be a power of two >= 2");
    require(a.rows() == a.cols() && a.rows() % d_w == 0 && a.rows() > d_w,
            "A must act on a (d_v * d_w)-dimensional space with d_v >= 2");
    const Eigen::Index dv = a.rows() / d_w;
    CMatrix reduced = CMatrix::Zero(dv, dv);
    for (Eigen::Index r = 0; r < dv; ++r) {
        for (Eigen::Index c = 0; c < dv; ++c) {
            for (Eigen::Index w = 0; w < d_w; ++w) {
                reduced(r, c) += a(r * d_w + w, c * d_w + w);
            }
        }
    }
    CMatrix out = CMatrix::Zero(a.rows(), a.cols());
    for (Eigen::Index r = 0; r < dv; ++r) {
        for (Eigen::Index c = 0; c < dv; ++c) {
            for (Eigen::Index w = 0; w < d_w; ++w) {
                out(r * d_w + w, c * d_w + w) = reduced(r, c) / static_cast<double>(d_w);
            }
        }
    }
    return out;
}

double first_moment_value(int d, int i, int j, int ip, int jp) {
    require(d >= 1, "d must be >= 1");
    return (i == ip && j == jp) ? 1.0 / d : 0.0;
}

double second_moment_value(int d, const std::array<int, 8> &x) {
    require(d >= 2, "d must be >= 2");
    const int i1 = x[0], j1 = x[1], i2 = x[2], j2 = x[3];
    const int a1 = x[4], b1 = x[5], a2 = x[6], b2 = x[7];
    const double dd = d;
    const double wg_id = 1.0 / (dd * dd - 1.0);
    const double wg_swap = -1.0 / (dd * (dd * dd - 1.0));
    // sigma, tau in S2: 0 = identity, 1 = swap.
    auto row = [&](int s) { return s == 0 ? (i1 == a1 && i2 == a2) : (i1 == a2 && i2 == a1); };
    auto col = [&](int t) { return t == 0 ? (j1 == b1 && j2 == b2) : (j1 == b2 && j2 == b1); };
    double total = 0.0;
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            if (row(s) && col(t)) {
                total += (s == t) ? wg_id : wg_swap;
            }
        }
    }
    return total;
}

MomentCheckReport moment_check(const std::string &check, int d, Complex closed_form,
                               const std::function<Complex(const CMatrix &)> &f,
                               int n_samples, std::uint64_t seed) {
    const Moments m = accumulate(d, 1, n_samples, seed,
                                 [&](const CMatrix &u, std::vector<Complex> &out) { out[0] = f(u); });
    return make_report(check, d, closed_form, m.mean[0], m.std_error[0], n_samples);
}

MomentCheckReport check_twirl(const CMatrix &a, const CMatrix &b, int n_samples,
                               std::uint64_t seed) {
    const int d = static_cast<int>(a.rows());
    return moment_check("twirl", d, twirl_value(a, b, d),
                        [&](const CMatrix &u) { return (u * a * u.adjoint() * b).trace(); },
                        n_samples, seed);
}

MomentCheckReport check_single_trace(const CMatrix &a, const CMatrix &b, const CMatrix &c,
                               const CMatrix &dm, int n_samples, std::uint64_t seed) {
    const int d = static_cast<int>(a.rows());
    return moment_check("single-trace", d, single_trace_value(a, b, c, dm, d),
                        [&](const CMatrix &u) {
                            const CMatrix ud = u.adjoint();
                            return (u * a * ud * b * u * c * ud * dm).trace();
                        },
                        n_samples, seed);
}

MomentCheckReport check_double_trace(const CMatrix &a, const CMatrix &b, const CMatrix &c,
                               const CMatrix &dm, int n_samples, std::uint64_t seed) {
    const int d = static_cast<int>(a.rows());
    return moment_check("double-trace", d, double_trace_value(a, b, c, dm, d),
                        [&](const CMatrix &u) {
                            const CMatrix ud = u.adjoint();
                            return (u * a * ud * b).trace() * (u * c * ud * dm).trace();
                        },
                        n_samples, seed);
}

std::vector<MomentCheckReport> check_partial_twirl(const CMatrix &a, int d_w, int n_samples,
                                            std::uint64_t seed) {
    const CMatrix closed = partial_twirl(a, d_w);
    const Eigen::Index dim = a.rows();
    const Eigen::Index dv = dim / d_w;
    const int k = static_cast<int>(dim * dim);
    const Moments m = accumulate(d_w, k, n_samples, seed,
                                 [&](const CMatrix &u, std::vector<Complex> &out) {
                                     CMatrix big = CMatrix::Zero(dim, dim);
                                     for (Eigen::Index b = 0; b < dv; ++b) {
                                         big.block(b * d_w, b * d_w, d_w, d_w) = u;
                                     }
                                     const CMatrix r = big * a * big.adjoint();
                                     for (Eigen::Index i = 0; i < dim * dim; ++i) {
                                         out[static_cast<std::size_t>(i)] = r(i / dim, i % dim);
                                     }
                                 });
    std::vector<MomentCheckReport> out;
    for (Eigen::Index i = 0; i < dim * dim; ++i) {
        const auto j = static_cast<std::size_t>(i);
        out.push_back(make_report("partial-twirl[" + std::to_string(i / dim) + ":" +
                                      std::to_string(i % dim) + "]",
                                  d_w, closed(i / dim, i % dim), m.mean[j], m.std_error[j],
                                  n_samples));
    }
    return out;
}

MomentCheckReport check_first_moment(int d, int i, int j, int ip, int jp, int n_samples,
                                     std::uint64_t seed) {
    require(i >= 0 && j >= 0 && ip >= 0 && jp >= 0 && i < d && j < d && ip < d && jp < d,
            "matrix index out of range");
    const std::string name = "first(" + std::to_string(i) + std::to_string(j) + ";" +
                             std::to_string(ip) + std::to_string(jp) + ")";
    return moment_check(name, d, first_moment_value(d, i, j, ip, jp),
                        [&](const CMatrix &u) { return u(i, j) * std::conj(u(ip, jp)); },
                        n_samples, seed);
}

MomentCheckReport check_second_moment(int d, const std::array<int, 8> &x, int n_samples,
                                      std::uint64_t seed) {
    std::string name = "second(";
    for (std::size_t t = 0; t < 8; ++t) {
        require(x[t] >= 0 && x[t] < d, "matrix index out of range");
        name += std::to_string(x[t]);
        if (t == 3) {
            name += ";";
        }
    }
    name += ")";
    return moment_check(name, d, second_moment_value(d, x),
                        [&](const CMatrix &u) {
                            return u(x[0], x[1]) * u(x[2], x[3]) * std::conj(u(x[4], x[5])) *
                                   std::conj(u(x[6], x[7]));
                        },
                        n_samples, seed);
}

CMatrix random_complex_matrix(int d, std::uint64_t seed) {
    Rng rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            const double re = g(rng);
            const double im = g(rng);
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

std::vector<MomentCheckReport> standard_moment_suite(const std::vector<int> &dims,
                                                     int n_samples, std::uint64_t seed) {
    std::vector<MomentCheckReport> out;
    std::uint64_t counter = 0;
    auto next = [&]() { return derive_seed(seed, streams::kHaarCheck, counter++); };
    for (int d : dims) {
        std::vector<CMatrix> r;
        for (int t = 0; t < 4; ++t) {
            r.push_back(random_complex_matrix(d, next()));
        }
        out.push_back(check_twirl(r[0], r[1], n_samples, next()));
        out.push_back(check_single_trace(r[0], r[1], r[2], r[3], n_samples, next()));
        out.push_back(check_double_trace(r[0], r[1], r[2], r[3], n_samples, next()));
        const CMatrix big = random_complex_matrix(2 * d, next());
        for (auto &rep : check_partial_twirl(big, d, n_samples, next())) {
            out.push_back(std::move(rep));
        }
        out.push_back(check_first_moment(d, 0, 0, 0, 0, n_samples, next()));
        out.push_back(check_first_moment(d, 0, 1, 0, 1, n_samples, next()));
        out.push_back(check_first_moment(d, 0, 0, 1, 1, n_samples, next()));
        const std::array<std::array<int, 8>, 5> second{{
            {0, 0, 0, 0, 0, 0, 0, 0}, // |u00|^4
            {0, 0, 1, 1, 0, 0, 1, 1}, // |u00|^2 |u11|^2
            {0, 0, 0, 1, 0, 0, 0, 1}, // |u00|^2 |u01|^2
            {0, 0, 1, 1, 0, 1, 1, 0}, // u00 u11 conj(u01 u10)
            {0, 0, 0, 1, 0, 0, 1, 1}, // vanishes
        }};
        for (const auto &x : second) {
            out.push_back(check_second_moment(d, x, n_samples, next()));
        }
    }
    return out;
}

} // namespace plateau
