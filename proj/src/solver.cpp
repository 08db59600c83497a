#include "cellforge/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cellforge {

namespace {

using cd = std::complex<double>;

// Precompiled residual structure. Type I frames are kept for alpha <= alpha'
// (the swapped frame is the conjugate residual); type II frames module the
// swap (a1,a2,a3,a4) -> (a2,a1,a4,a3) for the same reason.
struct TermII {
    int t1, t2, t3, t4; // triangles: W(t1) conj(W(t2)) W(t3) conj(W(t4))
    double coeff;       // 1 / phi_x
};

struct FrameResidual {
    std::vector<std::pair<int, int>> terms_i; // type I: W(first) conj(W(second))
    std::vector<TermII> terms_ii;             // type II
    double rhs = 0.0;
    bool real_only = false; // self-conjugate frame
};

struct Problem {
    GraphPtr graph;
    std::vector<FrameResidual> frames;
    int n_tri = 0;
    std::vector<int> mag_var;            // triangle -> magnitude variable
    std::vector<int> phase_var;          // triangle -> phase variable or -1 (pinned)
    int n_vars = 0;
    std::vector<double> mag_scale;       // [2] phi phi budget per triangle
};

Problem build_problem(GraphPtr gp, const SolveOptions& opts) {
    const Graph& g = *gp;
    Problem pb;
    pb.graph = gp;
    pb.n_tri = static_cast<int>(g.triangles().size());
    double two = qint(graph_context(g), 2);

    for (const auto& f : g.type_i_frames()) {
        if (f.alpha > f.alpha_prime) continue;
        const auto& alpha = g.edge(f.alpha);
        FrameResidual fr;
        fr.real_only = f.alpha == f.alpha_prime;
        fr.rhs = fr.real_only ? two * g.pf_weight(alpha.source) * g.pf_weight(alpha.target) : 0.0;
        for (int beta : g.out_edges(alpha.target)) {
            int c = g.edge(beta).target;
            for (int gamma : g.edges_between(c, alpha.source))
                fr.terms_i.push_back({g.triangle_index(f.alpha, beta, gamma),
                                      g.triangle_index(f.alpha_prime, beta, gamma)});
        }
        pb.frames.push_back(std::move(fr));
    }

    for (const auto& f : g.type_ii_frames()) {
        std::array<int, 4> key{f.a1, f.a2, f.a3, f.a4};
        std::array<int, 4> swp{f.a2, f.a1, f.a4, f.a3};
        if (swp < key) continue; // conjugate partner carries the same data
        const auto& e1 = g.edge(f.a1);
        const auto& e2 = g.edge(f.a2);
        const auto& e3 = g.edge(f.a3);
        int a = e1.source, b = e1.target, c = e2.source, d = e3.target;
        FrameResidual fr;
        fr.real_only = key == swp;
        fr.rhs = 0.0;
        if (f.a1 == f.a2 && f.a3 == f.a4)
            fr.rhs += g.pf_weight(a) * g.pf_weight(b) * g.pf_weight(d);
        if (f.a1 == f.a4 && f.a2 == f.a3)
            fr.rhs += g.pf_weight(a) * g.pf_weight(b) * g.pf_weight(c);
        for (int beta : g.out_edges(b)) {
            int x = g.edge(beta).target;
            const auto& deltas = g.edges_between(d, x);
            const auto& g1s = g.edges_between(x, a);
            const auto& g2s = g.edges_between(x, c);
            double coeff = 1.0 / g.pf_weight(x);
            for (int delta : deltas)
                for (int g1 : g1s)
                    for (int g2 : g2s)
                        fr.terms_ii.push_back({g.triangle_index(f.a3, delta, g2),
                                               g.triangle_index(f.a4, delta, g1),
                                               g.triangle_index(f.a1, beta, g1),
                                               g.triangle_index(f.a2, beta, g2), coeff});
        }
        pb.frames.push_back(std::move(fr));
    }

    // Magnitude variables, optionally tied along automorphism orbits.
    pb.mag_var.assign(static_cast<size_t>(pb.n_tri), -1);
    std::vector<int> tri_rep(static_cast<size_t>(pb.n_tri));
    for (int t = 0; t < pb.n_tri; ++t) tri_rep[static_cast<size_t>(t)] = t;
    if (!opts.tie_rotation.empty()) {
        const auto& rho = opts.tie_rotation;
        auto edge_image = [&](int e) {
            const auto& ed = g.edge(e);
            const auto& cands = g.edges_between(rho[static_cast<size_t>(ed.source)],
                                                rho[static_cast<size_t>(ed.target)]);
            if (cands.size() != 1)
                throw std::invalid_argument("solve_cells: tie_rotation needs a simple graph");
            return cands[0];
        };
        for (int t = 0; t < pb.n_tri; ++t) {
            const auto& tr = g.triangles()[static_cast<size_t>(t)];
            int img = g.triangle_index(edge_image(tr.e[0]), edge_image(tr.e[1]),
                                       edge_image(tr.e[2]));
            int a = tri_rep[static_cast<size_t>(t)];
            int b = tri_rep[static_cast<size_t>(img)];
            if (a != b)
                for (auto& r : tri_rep)
                    if (r == b) r = a;
        }
    }
    for (int t = 0; t < pb.n_tri; ++t) {
        int rep = tri_rep[static_cast<size_t>(t)];
        if (pb.mag_var[static_cast<size_t>(rep)] < 0) pb.mag_var[static_cast<size_t>(rep)] = pb.n_vars++;
        pb.mag_var[static_cast<size_t>(t)] = pb.mag_var[static_cast<size_t>(rep)];
    }

    // Phase pinning: peel triangles with a fresh edge; each such triangle's
    // phase is freely gaugeable to zero without disturbing earlier pins.
    pb.phase_var.assign(static_cast<size_t>(pb.n_tri), -1);
    std::vector<char> edge_used(static_cast<size_t>(g.edge_count()), 0);
    for (int t = 0; t < pb.n_tri; ++t) {
        const auto& tr = g.triangles()[static_cast<size_t>(t)];
        bool fresh = false;
        for (int e : tr.e)
            if (!edge_used[static_cast<size_t>(e)]) fresh = true;
        if (opts.gauge_fixing && fresh) {
            for (int e : tr.e) edge_used[static_cast<size_t>(e)] = 1;
            continue; // phase pinned to zero
        }
        pb.phase_var[static_cast<size_t>(t)] = pb.n_vars++;
    }

    pb.mag_scale.resize(static_cast<size_t>(pb.n_tri));
    for (int t = 0; t < pb.n_tri; ++t) {
        const auto& tr = g.triangles()[static_cast<size_t>(t)];
        double budget = 1e300;
        for (int e : tr.e) {
            const auto& ed = g.edge(e);
            budget = std::min(budget, two * g.pf_weight(ed.source) * g.pf_weight(ed.target));
        }
        pb.mag_scale[static_cast<size_t>(t)] = budget;
    }
    return pb;
}

struct Evaluation {
    Eigen::VectorXd r;
    Eigen::MatrixXd j;
};

// Cells and their derivatives from the packed variable vector.
struct CellsView {
    std::vector<cd> w;
    std::vector<cd> dw_dmag;   // per triangle
    std::vector<cd> dw_dphase; // per triangle (zero for pinned)
};

CellsView cells_from_vars(const Problem& pb, const Eigen::VectorXd& v) {
    CellsView cv;
    cv.w.resize(static_cast<size_t>(pb.n_tri));
    cv.dw_dmag.resize(static_cast<size_t>(pb.n_tri));
    cv.dw_dphase.resize(static_cast<size_t>(pb.n_tri));
    for (int t = 0; t < pb.n_tri; ++t) {
        double a = v[pb.mag_var[static_cast<size_t>(t)]];
        int pv = pb.phase_var[static_cast<size_t>(t)];
        double th = pv >= 0 ? v[pv] : 0.0;
        cd phase = std::polar(1.0, th);
        cv.w[static_cast<size_t>(t)] = a * a * phase;
        cv.dw_dmag[static_cast<size_t>(t)] = 2.0 * a * phase;
        cv.dw_dphase[static_cast<size_t>(t)] = cd(0.0, 1.0) * cv.w[static_cast<size_t>(t)];
    }
    return cv;
}

// Residuals and Jacobian. Complex frames contribute two rows.
Evaluation evaluate(const Problem& pb, const Eigen::VectorXd& v) {
    CellsView cv = cells_from_vars(pb, v);
    int rows = 0;
    for (const auto& fr : pb.frames) rows += fr.real_only ? 1 : 2;
    Evaluation ev;
    ev.r = Eigen::VectorXd::Zero(rows);
    ev.j = Eigen::MatrixXd::Zero(rows, pb.n_vars);

    // Per-frame accumulation of the complex residual and its derivative with
    // respect to each involved triangle's (mag, phase) variables.
    std::vector<cd> dmag(static_cast<size_t>(pb.n_tri));
    std::vector<cd> dphase(static_cast<size_t>(pb.n_tri));
    std::vector<int> touched;

    int row = 0;
    for (const auto& fr : pb.frames) {
        cd res = -fr.rhs;
        touched.clear();
        auto touch = [&](int t) {
            if (dmag[static_cast<size_t>(t)] == cd(0.0) && dphase[static_cast<size_t>(t)] == cd(0.0))
                touched.push_back(t);
        };
        auto add_d = [&](int t, cd dm, cd dp) {
            touch(t);
            dmag[static_cast<size_t>(t)] += dm;
            dphase[static_cast<size_t>(t)] += dp;
        };
        for (const auto& [t1, t2] : fr.terms_i) {
            cd w1 = cv.w[static_cast<size_t>(t1)], w2c = std::conj(cv.w[static_cast<size_t>(t2)]);
            res += w1 * w2c;
            add_d(t1, cv.dw_dmag[static_cast<size_t>(t1)] * w2c,
                  cv.dw_dphase[static_cast<size_t>(t1)] * w2c);
            add_d(t2, w1 * std::conj(cv.dw_dmag[static_cast<size_t>(t2)]),
                  w1 * std::conj(cv.dw_dphase[static_cast<size_t>(t2)]));
        }
        for (const auto& tm : fr.terms_ii) {
            cd w1 = cv.w[static_cast<size_t>(tm.t1)];
            cd w2c = std::conj(cv.w[static_cast<size_t>(tm.t2)]);
            cd w3 = cv.w[static_cast<size_t>(tm.t3)];
            cd w4c = std::conj(cv.w[static_cast<size_t>(tm.t4)]);
            cd pre = tm.coeff;
            res += pre * w1 * w2c * w3 * w4c;
            add_d(tm.t1, pre * cv.dw_dmag[static_cast<size_t>(tm.t1)] * w2c * w3 * w4c,
                  pre * cv.dw_dphase[static_cast<size_t>(tm.t1)] * w2c * w3 * w4c);
            add_d(tm.t2, pre * w1 * std::conj(cv.dw_dmag[static_cast<size_t>(tm.t2)]) * w3 * w4c,
                  pre * w1 * std::conj(cv.dw_dphase[static_cast<size_t>(tm.t2)]) * w3 * w4c);
            add_d(tm.t3, pre * w1 * w2c * cv.dw_dmag[static_cast<size_t>(tm.t3)] * w4c,
                  pre * w1 * w2c * cv.dw_dphase[static_cast<size_t>(tm.t3)] * w4c);
            add_d(tm.t4, pre * w1 * w2c * w3 * std::conj(cv.dw_dmag[static_cast<size_t>(tm.t4)]),
                  pre * w1 * w2c * w3 * std::conj(cv.dw_dphase[static_cast<size_t>(tm.t4)]));
        }

        ev.r[row] = res.real();
        if (!fr.real_only) ev.r[row + 1] = res.imag();
        for (int t : touched) {
            int mv = pb.mag_var[static_cast<size_t>(t)];
            int pv = pb.phase_var[static_cast<size_t>(t)];
            ev.j(row, mv) += dmag[static_cast<size_t>(t)].real();
            if (pv >= 0) ev.j(row, pv) += dphase[static_cast<size_t>(t)].real();
            if (!fr.real_only) {
                ev.j(row + 1, mv) += dmag[static_cast<size_t>(t)].imag();
                if (pv >= 0) ev.j(row + 1, pv) += dphase[static_cast<size_t>(t)].imag();
            }
            dmag[static_cast<size_t>(t)] = 0.0;
            dphase[static_cast<size_t>(t)] = 0.0;
        }
        row += fr.real_only ? 1 : 2;
    }
    return ev;
}

CellSystem cells_from_solution(const Problem& pb, const Eigen::VectorXd& v) {
    CellSystem cs;
    cs.graph = pb.graph;
    cs.variant = Variant::Default;
    CellsView cv = cells_from_vars(pb, v);
    cs.w = std::move(cv.w);
    return cs;
}

} // namespace

SolveOutcome solve_cells(GraphPtr g, const SolveOptions& opts) {
    if (opts.restarts < 1) throw std::invalid_argument("solve_cells: restarts must be >= 1");
    if (!(opts.residual_tol > 0.0))
        throw std::invalid_argument("solve_cells: residual_tol must be positive");
    Problem pb = build_problem(g, opts);
    SolveOutcome out;

    for (int restart = 0; restart < opts.restarts; ++restart) {
        std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(restart) * 0x9e3779b97f4a7c15ULL);
        std::uniform_real_distribution<double> umag(0.05, 0.95);
        std::uniform_real_distribution<double> uang(0.0, 2.0 * M_PI);
        Eigen::VectorXd v = Eigen::VectorXd::Zero(pb.n_vars);
        for (int t = 0; t < pb.n_tri; ++t)
            v[pb.mag_var[static_cast<size_t>(t)]] =
                std::pow(umag(rng) * pb.mag_scale[static_cast<size_t>(t)], 0.25);
        for (int t = 0; t < pb.n_tri; ++t)
            if (pb.phase_var[static_cast<size_t>(t)] >= 0)
                v[pb.phase_var[static_cast<size_t>(t)]] = uang(rng);

        Evaluation ev = evaluate(pb, v);
        double obj = ev.r.squaredNorm();
        double lambda = 1e-3;
        int iter = 0;
        for (; iter < opts.max_iterations; ++iter) {
            Eigen::MatrixXd jtj = ev.j.transpose() * ev.j;
            Eigen::VectorXd jtr = ev.j.transpose() * ev.r;
            bool stepped = false;
            for (int tries = 0; tries < 10; ++tries) {
                Eigen::MatrixXd aug = jtj;
                for (int p = 0; p < pb.n_vars; ++p) aug(p, p) += lambda * (jtj(p, p) + 1e-12);
                Eigen::VectorXd step = aug.ldlt().solve(-jtr);
                Eigen::VectorXd vn = v + step;
                Evaluation en = evaluate(pb, vn);
                double on = en.r.squaredNorm();
                if (on < obj) {
                    v = vn;
                    ev = std::move(en);
                    obj = on;
                    lambda = std::max(lambda / 3.0, 1e-14);
                    stepped = true;
                    break;
                }
                lambda *= 5.0;
            }
            if (obj < 1e-26 || !stepped) break;
        }
        out.iterations += iter;
        ++out.restarts_used;
        if (out.objective < 0.0 || obj < out.objective) out.objective = obj;

        if (obj <= opts.residual_tol * opts.residual_tol) {
            CellSystem cs = cells_from_solution(pb, v);
            if (verify_type_i(cs) <= opts.residual_tol && verify_type_ii(cs) <= opts.residual_tol) {
                out.solved = true;
                out.fp = fingerprint(cs);
                out.cells = std::move(cs);
                break;
            }
        }
    }
    return out;
}

std::vector<SolutionBucket> classify_solutions(GraphPtr g, int trials, const SolveOptions& opts,
                                               double bucket_tol) {
    std::vector<SolutionBucket> buckets;
    for (int trial = 0; trial < trials; ++trial) {
        SolveOptions per = opts;
        per.seed = opts.seed + 0x51ed2701ULL * static_cast<std::uint64_t>(trial + 1);
        SolveOutcome oc = solve_cells(g, per);
        if (!oc.solved) continue;
        bool placed = false;
        for (auto& b : buckets)
            if (fingerprint_close(b.fp, *oc.fp, bucket_tol)) {
                ++b.count;
                if (oc.objective < b.best_objective) b.best_objective = oc.objective;
                placed = true;
                break;
            }
        if (!placed) {
            SolutionBucket b;
            b.fp = *oc.fp;
            b.count = 1;
            b.best_objective = oc.objective;
            b.representative = *oc.cells;
            buckets.push_back(std::move(b));
        }
    }
    return buckets;
}

} // namespace cellforge
