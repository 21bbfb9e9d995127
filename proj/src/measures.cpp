#include "qpdiag/measures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "qpdiag/optim.hpp"
#include "qpdiag/parallel.hpp"

namespace qpdiag {

const char* distance_kind_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::bures: return "bures";
        case DistanceKind::bures_squared: return "bures-sq";
        case DistanceKind::one_minus_fidelity: return "fidelity";
        case DistanceKind::hellinger: return "hellinger";
        case DistanceKind::sym_relative_entropy: return "sym-rel-ent";
        case DistanceKind::trace: return "trace";
    }
    return "?";
}

DistanceKind distance_kind_from_name(const std::string& name) {
    if (name == "bures") return DistanceKind::bures;
    if (name == "bures-sq") return DistanceKind::bures_squared;
    if (name == "fidelity") return DistanceKind::one_minus_fidelity;
    if (name == "hellinger") return DistanceKind::hellinger;
    if (name == "sym-rel-ent") return DistanceKind::sym_relative_entropy;
    if (name == "trace") return DistanceKind::trace;
    throw DomainError("unknown distance selector: " + name);
}

namespace {

bool bitwise_equal(const RealVector& a, const RealVector& b) {
    for (Eigen::Index k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

double distance_eval(DistanceKind kind, const Matrix& rho1, const Matrix& rho2,
                     const Tolerances& tol, double t, double tau) {
    switch (kind) {
        case DistanceKind::trace:
            return 0.5 * numeric::abs_eigenvalue_sum(rho1 - rho2);
        case DistanceKind::bures:
            return std::sqrt(2.0 * std::max(0.0, 1.0 - fidelity(rho1, rho2, tol)));
        case DistanceKind::bures_squared:
            return 2.0 * std::max(0.0, 1.0 - fidelity(rho1, rho2, tol));
        case DistanceKind::one_minus_fidelity:
            return std::max(0.0, 1.0 - fidelity(rho1, rho2, tol));
        case DistanceKind::hellinger:
            return hellinger_distance(rho1, rho2, tol);
        case DistanceKind::sym_relative_entropy: {
            const double s = symmetric_relative_entropy(rho1, rho2, tol);
            if (std::isinf(s)) {
                std::ostringstream msg;
                msg << "symmetric relative entropy is singular at (t=" << t
                    << ", tau=" << tau << "): disjoint supports";
                throw SingularDistanceError(msg.str());
            }
            return s;
        }
    }
    throw DomainError("unknown distance kind");
}

// Trace distance along an evolved pair via the difference operator:
// identical arithmetic to trace_distance on the two densities, but with
// preallocated buffers for the sweep loops.
std::vector<double> pair_trace_distance_curve(const SampledProcess& sp,
                                              const HermitianBasis& basis,
                                              const RealVector& r1, const RealVector& r2) {
    const std::size_t n = sp.times.size();
    std::vector<double> dist(n);
    RealVector a(r1.size()), b(r1.size()), delta(r1.size());
    Matrix drho = Matrix::Zero(sp.dim, sp.dim);
    for (std::size_t i = 0; i < n; ++i) {
        a.noalias() = sp.m[i] * r1;
        a += sp.c[i];
        b.noalias() = sp.m[i] * r2;
        b += sp.c[i];
        delta = a - b;
        drho.setZero();
        basis.accumulate_traceless(delta, drho);
        dist[i] = 0.5 * numeric::abs_eigenvalue_sum(drho);
    }
    return dist;
}

// General distance along an evolved pair; bitwise-equal Bloch vectors
// short-circuit to distance 0, which keeps exactly-unital processes free
// of square-root-of-noise artifacts.
std::vector<double> pair_distance_curve(const SampledProcess& sp,
                                        const HermitianBasis& basis, DistanceKind kind,
                                        const RealVector& r1, const RealVector& r2,
                                        double tau_label, const Tolerances& tol) {
    if (kind == DistanceKind::trace) return pair_trace_distance_curve(sp, basis, r1, r2);
    const std::size_t n = sp.times.size();
    std::vector<double> dist(n);
    RealVector a(r1.size()), b(r1.size());
    Matrix rho1(sp.dim, sp.dim), rho2(sp.dim, sp.dim);
    const Matrix mixed = Matrix::Identity(sp.dim, sp.dim) / static_cast<double>(sp.dim);
    for (std::size_t i = 0; i < n; ++i) {
        a.noalias() = sp.m[i] * r1;
        a += sp.c[i];
        b.noalias() = sp.m[i] * r2;
        b += sp.c[i];
        if (bitwise_equal(a, b)) {
            dist[i] = 0.0;
            continue;
        }
        rho1 = mixed;
        basis.accumulate_traceless(a, rho1);
        rho2 = mixed;
        basis.accumulate_traceless(b, rho2);
        dist[i] = distance_eval(kind, rho1, rho2, tol, sp.times[i], tau_label);
    }
    return dist;
}

CurveIntegral assemble_curve(std::vector<double> times, std::vector<double> curve,
                             double h) {
    CurveIntegral out;
    out.derivative = numeric::central_differences(curve, h);
    auto seg = numeric::positive_part_integral(times, out.derivative);
    out.times = std::move(times);
    out.curve = std::move(curve);
    out.gain = seg.value;
    out.segments = std::move(seg.segments);
    return out;
}

double grid_step(const SampledProcess& sp) {
    return (sp.times.back() - sp.times.front()) /
           static_cast<double>(sp.times.size() - 1);
}

std::vector<double> purity_samples(const SampledProcess& sp, const RealVector& r0) {
    const std::size_t n = sp.times.size();
    std::vector<double> p(n);
    RealVector r(r0.size());
    for (std::size_t i = 0; i < n; ++i) {
        r.noalias() = sp.m[i] * r0;
        r += sp.c[i];
        p[i] = 1.0 / sp.dim + r.squaredNorm();
    }
    return p;
}

RealVector pure_qubit_bloch(double theta, double phi) {
    RealVector r(3);
    const double s = std::sin(theta);
    r << s * std::cos(phi) / std::sqrt(2.0), s * std::sin(phi) / std::sqrt(2.0),
        std::cos(theta) / std::sqrt(2.0);
    return r;
}

RealVector bloch_of_density(const Matrix& rho, const HermitianBasis& basis) {
    RealVector r(basis.size() - 1);
    for (int mu = 1; mu < basis.size(); ++mu)
        r[mu - 1] = (basis.op(mu) * rho).trace().real();
    return r;
}

RealVector bloch_of_unit_vector(const ComplexVector& psi_raw, const HermitianBasis& basis) {
    ComplexVector psi = psi_raw;
    const double norm = psi.norm();
    if (norm == 0) return RealVector::Zero(basis.size() - 1);
    psi /= norm;
    const Matrix rho = psi * psi.adjoint();
    return bloch_of_density(rho, basis);
}

std::string format_truncation(double t_max) {
    std::ostringstream s;
    s << "time integration truncated at t_max=" << t_max;
    return s.str();
}

constexpr const char* kHeuristicCaveat =
    "value is a heuristic lower bound (coarse grid + simplex + random restarts)";

} // namespace

CurveIntegral blp_sigma(const SampledProcess& sp, const HermitianBasis& basis,
                        const BlochState& s1, const BlochState& s2) {
    if (s1.dim != sp.dim || s2.dim != sp.dim)
        throw DimensionError("blp_sigma: state dimension does not match process");
    return assemble_curve(sp.times, pair_trace_distance_curve(sp, basis, s1.r, s2.r),
                          grid_step(sp));
}

CurveIntegral blp_sigma(const QuantumProcess& p, const BlochState& s1,
                        const BlochState& s2, const TimeGrid& grid) {
    const HermitianBasis basis(p.dim());
    return blp_sigma(sample_process(p, grid), basis, s1, s2);
}

CurveIntegral purity_curve(const SampledProcess& sp, const BlochState& s0) {
    if (s0.dim != sp.dim)
        throw DimensionError("purity_curve: state dimension does not match process");
    return assemble_curve(sp.times, purity_samples(sp, s0.r), grid_step(sp));
}

CurveIntegral purity_curve(const QuantumProcess& p, const BlochState& s0,
                           const TimeGrid& grid) {
    return purity_curve(sample_process(p, grid), s0);
}

std::vector<BlochState> trajectory_states(const QuantumProcess& p, const TimeGrid& grid) {
    const SampledProcess sp = sample_process(p, grid);
    std::vector<BlochState> states;
    states.reserve(sp.times.size());
    for (std::size_t j = 0; j < sp.times.size(); ++j) {
        if (j == 0)
            states.push_back(maximally_mixed(sp.dim)); // E_0 = id, exactly
        else
            states.push_back(BlochState{sp.dim, sp.c[j]});
    }
    return states;
}

CurveIntegral trajectory_pair_curve(const QuantumProcess& p, double tau,
                                    const TimeGrid& grid, DistanceKind kind) {
    const HermitianBasis basis(p.dim());
    const SampledProcess sp = sample_process(p, grid);
    const RealVector mm = RealVector::Zero(p.dim() * p.dim() - 1);
    RealVector rtau = mm;
    if (tau > 0) rtau = affine_from_transfer(p.eval(tau)).c;
    return assemble_curve(
        sp.times, pair_distance_curve(sp, basis, kind, mm, rtau, tau, Tolerances::standard()),
        grid_step(sp));
}

MeasureReport blp_measure(const QuantumProcess& p, const TimeGrid& grid,
                          const OptimizerConfig& opt) {
    const HermitianBasis basis(p.dim());
    const SampledProcess sp = sample_process(p, grid);
    const double h = grid.step();

    auto gain_of = [&](const RealVector& r1, const RealVector& r2) {
        const auto curve = pair_trace_distance_curve(sp, basis, r1, r2);
        const auto deriv = numeric::central_differences(curve, h);
        return numeric::positive_part_integral(sp.times, deriv).value;
    };

    double best_value = -1.0;
    RealVector best_r1, best_r2;
    std::string best_label;
    std::map<std::string, double> best_params;

    if (p.dim() == 2) {
        // stage 1: antipodal pure pairs on the coarse Bloch-angle grid
        const int nt = opt.coarse_polar, np = opt.coarse_azimuth;
        std::vector<double> gains(static_cast<std::size_t>(nt) * np);
        numeric::parallel_for_indices(static_cast<std::int64_t>(gains.size()), [&](std::int64_t idx) {
            const int a = static_cast<int>(idx) / np;
            const int b = static_cast<int>(idx) % np;
            const double theta = M_PI * (a + 0.5) / nt;
            const double phi = 2.0 * M_PI * b / np;
            const RealVector r1 = pure_qubit_bloch(theta, phi);
            gains[static_cast<std::size_t>(idx)] = gain_of(r1, -r1);
        });
        const auto best_it = std::max_element(gains.begin(), gains.end());
        const auto best_idx = static_cast<int>(best_it - gains.begin());
        double theta0 = M_PI * (best_idx / np + 0.5) / nt;
        double phi0 = 2.0 * M_PI * (best_idx % np) / np;

        // stage 2: simplex refinement in the angles
        auto neg_obj = [&](const RealVector& x) {
            const RealVector r1 = pure_qubit_bloch(x[0], x[1]);
            return -gain_of(r1, -r1);
        };
        RealVector x0(2);
        x0 << theta0, phi0;
        const auto refined = opt::nelder_mead(neg_obj, x0, M_PI / opt.coarse_polar,
                                              opt.simplex_max_iter, opt.simplex_ftol);
        best_value = -refined.value;
        best_r1 = pure_qubit_bloch(refined.x[0], refined.x[1]);
        best_r2 = -best_r1;
        {
            std::ostringstream label;
            label << "antipodal pure-state pair (theta=" << refined.x[0]
                  << ", phi=" << refined.x[1] << ")";
            best_label = label.str();
        }
        best_params = {{"theta", refined.x[0]}, {"phi", refined.x[1]}};
    }

    // random pair batch: mixed pairs as a safeguard for d=2, the primary
    // (lower-bound) search for d>2
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<RealVector, RealVector>> candidates;
    candidates.reserve(static_cast<std::size_t>(opt.random_candidates));
    std::vector<ComplexVector> pure_params; // kept for d>2 refinement
    for (int k = 0; k < opt.random_candidates; ++k) {
        if (p.dim() == 2) {
            candidates.emplace_back(bloch_of_density(random_density(2, rng), basis),
                                    bloch_of_density(random_density(2, rng), basis));
        } else {
            std::normal_distribution<double> gauss(0.0, 1.0);
            ComplexVector psi1(p.dim()), psi2(p.dim());
            for (Eigen::Index i = 0; i < psi1.size(); ++i)
                psi1[i] = Complex(gauss(rng), gauss(rng));
            for (Eigen::Index i = 0; i < psi2.size(); ++i)
                psi2[i] = Complex(gauss(rng), gauss(rng));
            pure_params.push_back(psi1);
            pure_params.push_back(psi2);
            candidates.emplace_back(bloch_of_unit_vector(psi1, basis),
                                    bloch_of_unit_vector(psi2, basis));
        }
    }
    std::vector<double> random_gains(candidates.size());
    numeric::parallel_for_indices(static_cast<std::int64_t>(candidates.size()),
                                  [&](std::int64_t k) {
                                      const auto& c = candidates[static_cast<std::size_t>(k)];
                                      random_gains[static_cast<std::size_t>(k)] =
                                          gain_of(c.first, c.second);
                                  });
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (random_gains[k] > best_value) {
            best_value = random_gains[k];
            best_r1 = candidates[k].first;
            best_r2 = candidates[k].second;
            best_label = (p.dim() == 2) ? "random mixed pair" : "random pure pair";
            best_params = {{"candidate_index", static_cast<double>(k)}};
        }
    }

    if (p.dim() > 2 && !candidates.empty()) {
        // refine the best random pure pair over the raw vector components
        const auto best_it = std::max_element(random_gains.begin(), random_gains.end());
        const auto k = static_cast<std::size_t>(best_it - random_gains.begin());
        const ComplexVector& psi1 = pure_params[2 * k];
        const ComplexVector& psi2 = pure_params[2 * k + 1];
        const int d = p.dim();
        RealVector x0(4 * d);
        for (int i = 0; i < d; ++i) {
            x0[2 * i] = psi1[i].real();
            x0[2 * i + 1] = psi1[i].imag();
            x0[2 * d + 2 * i] = psi2[i].real();
            x0[2 * d + 2 * i + 1] = psi2[i].imag();
        }
        auto neg_obj = [&](const RealVector& x) {
            ComplexVector a(d), b(d);
            for (int i = 0; i < d; ++i) {
                a[i] = Complex(x[2 * i], x[2 * i + 1]);
                b[i] = Complex(x[2 * d + 2 * i], x[2 * d + 2 * i + 1]);
            }
            return -gain_of(bloch_of_unit_vector(a, basis), bloch_of_unit_vector(b, basis));
        };
        const auto refined =
            opt::nelder_mead(neg_obj, x0, 0.1, opt.simplex_max_iter, opt.simplex_ftol);
        if (-refined.value > best_value) {
            best_value = -refined.value;
            ComplexVector a(d), b(d);
            for (int i = 0; i < d; ++i) {
                a[i] = Complex(refined.x[2 * i], refined.x[2 * i + 1]);
                b[i] = Complex(refined.x[2 * d + 2 * i], refined.x[2 * d + 2 * i + 1]);
            }
            best_r1 = bloch_of_unit_vector(a, basis);
            best_r2 = bloch_of_unit_vector(b, basis);
            best_label = "refined random pure pair";
            best_params = {{"candidate_index", static_cast<double>(k)}};
        }
    }

    const auto winner =
        assemble_curve(sp.times, pair_trace_distance_curve(sp, basis, best_r1, best_r2), h);

    MeasureReport report;
    report.measure = "blp";
    report.value = winner.gain;
    report.contributions = winner.segments;
    report.maximizer = best_label;
    report.maximizer_params = best_params;
    report.trace_name = "sigma";
    report.trace_times = winner.times;
    report.trace_values = winner.derivative;
    report.aux_trace_name = "D_tr";
    report.aux_trace_values = winner.curve;
    report.caveats = {format_truncation(grid.t_max), kHeuristicCaveat};
    if (p.dim() > 2)
        report.caveats.push_back("d>2 search uses random pure pairs with local refinement only");
    return report;
}

MeasureReport nonunitality_measure(const QuantumProcess& p, const TimeGrid& grid,
                                   const OptimizerConfig& opt) {
    const HermitianBasis basis(p.dim());
    const SampledProcess sp = sample_process(p, grid);
    const double h = grid.step();

    auto gain_of = [&](const RealVector& r0) {
        const auto curve = purity_samples(sp, r0);
        const auto deriv = numeric::central_differences(curve, h);
        return numeric::positive_part_integral(sp.times, deriv).value;
    };

    // mandatory candidate: the maximally mixed state, the natural probe
    // (unital maps cannot raise its purity)
    RealVector best_r = RealVector::Zero(p.dim() * p.dim() - 1);
    double best_value = gain_of(best_r);
    std::string best_label = "maximally mixed state";
    std::map<std::string, double> best_params;

    if (p.dim() == 2) {
        const int nt = opt.coarse_polar, np = opt.coarse_azimuth;
        std::vector<double> gains(static_cast<std::size_t>(nt) * np);
        numeric::parallel_for_indices(static_cast<std::int64_t>(gains.size()), [&](std::int64_t idx) {
            const int a = static_cast<int>(idx) / np;
            const int b = static_cast<int>(idx) % np;
            const double theta = M_PI * (a + 0.5) / nt;
            const double phi = 2.0 * M_PI * b / np;
            gains[static_cast<std::size_t>(idx)] = gain_of(pure_qubit_bloch(theta, phi));
        });
        const auto best_it = std::max_element(gains.begin(), gains.end());
        const auto idx = static_cast<int>(best_it - gains.begin());
        RealVector x0(2);
        x0 << M_PI * (idx / np + 0.5) / nt, 2.0 * M_PI * (idx % np) / np;
        auto neg_obj = [&](const RealVector& x) { return -gain_of(pure_qubit_bloch(x[0], x[1])); };
        const auto refined = opt::nelder_mead(neg_obj, x0, M_PI / opt.coarse_polar,
                                              opt.simplex_max_iter, opt.simplex_ftol);
        if (-refined.value > best_value) {
            best_value = -refined.value;
            best_r = pure_qubit_bloch(refined.x[0], refined.x[1]);
            std::ostringstream label;
            label << "pure state (theta=" << refined.x[0] << ", phi=" << refined.x[1] << ")";
            best_label = label.str();
            best_params = {{"theta", refined.x[0]}, {"phi", refined.x[1]}};
        }
    }

    std::mt19937_64 rng(opt.seed);
    std::vector<RealVector> candidates;
    candidates.reserve(static_cast<std::size_t>(opt.random_candidates));
    for (int k = 0; k < opt.random_candidates; ++k)
        candidates.push_back(bloch_of_density(random_density(p.dim(), rng), basis));
    std::vector<double> random_gains(candidates.size());
    numeric::parallel_for_indices(static_cast<std::int64_t>(candidates.size()),
                                  [&](std::int64_t k) {
                                      random_gains[static_cast<std::size_t>(k)] =
                                          gain_of(candidates[static_cast<std::size_t>(k)]);
                                  });
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (random_gains[k] > best_value) {
            best_value = random_gains[k];
            best_r = candidates[k];
            best_label = "random mixed state";
            best_params = {{"candidate_index", static_cast<double>(k)}};
        }
    }

    const auto winner = assemble_curve(sp.times, purity_samples(sp, best_r), h);

    MeasureReport report;
    report.measure = "nonunitality";
    report.value = winner.gain;
    report.contributions = winner.segments;
    report.maximizer = best_label;
    report.maximizer_params = best_params;
    report.trace_name = "dP/dt";
    report.trace_times = winner.times;
    report.trace_values = winner.derivative;
    report.aux_trace_name = "purity";
    report.aux_trace_values = winner.curve;
    report.caveats = {format_truncation(grid.t_max), kHeuristicCaveat};
    return report;
}

MeasureReport nonunital_nm_measure(const QuantumProcess& p, const TimeGrid& grid,
                                   DistanceKind kind, const OptimizerConfig& opt) {
    const Tolerances& tol = Tolerances::standard();
    const HermitianBasis basis(p.dim());
    const SampledProcess sp = sample_process(p, grid);
    const double h = grid.step();
    const RealVector mm = RealVector::Zero(p.dim() * p.dim() - 1);

    auto gain_for_state = [&](const RealVector& rtau, double tau_label) {
        const auto curve = pair_distance_curve(sp, basis, kind, mm, rtau, tau_label, tol);
        const auto deriv = numeric::central_differences(curve, h);
        return numeric::positive_part_integral(sp.times, deriv).value;
    };

    // sweep the trajectory states on the grid
    std::vector<double> values(sp.times.size());
    numeric::parallel_for_indices(static_cast<std::int64_t>(sp.times.size()),
                                  [&](std::int64_t j) {
                                      const auto jj = static_cast<std::size_t>(j);
                                      const RealVector& rtau = (jj == 0) ? mm : sp.c[jj];
                                      values[jj] = gain_for_state(rtau, sp.times[jj]);
                                  });
    const auto best_it = std::max_element(values.begin(), values.end());
    const auto j_star = static_cast<std::size_t>(best_it - values.begin());
    double tau_star = sp.times[j_star];
    double best_value = values[j_star];

    // golden-section refinement around the grid argmax
    if (best_value > 0 && sp.times.size() > 1) {
        const double lo = sp.times[j_star > 0 ? j_star - 1 : 0];
        const double hi = sp.times[std::min(j_star + 1, sp.times.size() - 1)];
        if (hi > lo) {
            auto objective = [&](double tau) {
                const RealVector rtau =
                    (tau == 0.0) ? mm : affine_from_transfer(p.eval(tau)).c;
                return gain_for_state(rtau, tau);
            };
            const double refined_tau =
                opt::golden_section_max(objective, lo, hi, opt.golden_iterations);
            const double refined_value = objective(refined_tau);
            if (refined_value > best_value) {
                best_value = refined_value;
                tau_star = refined_tau;
            }
        }
    }

    const RealVector rtau_star =
        (tau_star == 0.0) ? mm : affine_from_transfer(p.eval(tau_star)).c;
    const auto winner = assemble_curve(
        sp.times, pair_distance_curve(sp, basis, kind, mm, rtau_star, tau_star, tol), h);

    MeasureReport report;
    report.measure = "nonunital-nm";
    report.value = winner.gain;
    report.contributions = winner.segments;
    {
        std::ostringstream label;
        label << "trajectory state at tau=" << tau_star << " (distance: "
              << distance_kind_name(kind) << ")";
        report.maximizer = label.str();
    }
    report.maximizer_params = {{"tau", tau_star}};
    report.trace_name = "sigma_nu";
    report.trace_times = winner.times;
    report.trace_values = winner.derivative;
    report.aux_trace_name = "D";
    report.aux_trace_values = winner.curve;
    report.caveats = {format_truncation(grid.t_max),
                      "trajectory maximization restricted to tau in [0, t_max], "
                      "grid argmax plus golden-section refinement"};
    return report;
}

} // namespace qpdiag
