#include "cellforge/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cellforge {

namespace {

using cd = std::complex<double>;

std::pair<int, int> edge_class(const Graph& g, int e) {
    return {g.edge(e).source, g.edge(e).target};
}

int class_position(const Graph& g, int e) {
    const auto& list = g.edges_between(g.edge(e).source, g.edge(e).target);
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == e) return static_cast<int>(i);
    throw std::logic_error("class_position: edge not in its own class");
}

double round_to(double x, double quantum) { return std::round(x / quantum) * quantum; }

cd round_to(cd z, double quantum) { return {round_to(z.real(), quantum), round_to(z.imag(), quantum)}; }

// ---- Smith normal form over int64 -----------------------------------------

struct Snf {
    std::vector<std::vector<long long>> d; // diagonalized matrix
    std::vector<std::vector<long long>> u; // rows transform
    std::vector<std::vector<long long>> v; // cols transform, u*m*v = d
};

void add_row(std::vector<std::vector<long long>>& m, int dst, int src, long long f) {
    for (size_t j = 0; j < m[static_cast<size_t>(dst)].size(); ++j) {
        long long x = m[static_cast<size_t>(src)][j];
        if (x == 0) continue;
        long long add = x * f;
        m[static_cast<size_t>(dst)][j] += add;
        if (std::llabs(m[static_cast<size_t>(dst)][j]) > (1LL << 60))
            throw std::overflow_error("smith_normal_form: entry overflow");
    }
}

void add_col(std::vector<std::vector<long long>>& m, int dst, int src, long long f) {
    for (auto& row : m) {
        long long x = row[static_cast<size_t>(src)];
        if (x == 0) continue;
        row[static_cast<size_t>(dst)] += x * f;
        if (std::llabs(row[static_cast<size_t>(dst)]) > (1LL << 60))
            throw std::overflow_error("smith_normal_form: entry overflow");
    }
}

Snf smith_normal_form(std::vector<std::vector<long long>> m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    Snf s;
    s.u.assign(rows, std::vector<long long>(rows, 0));
    s.v.assign(cols, std::vector<long long>(cols, 0));
    for (size_t i = 0; i < rows; ++i) s.u[i][i] = 1;
    for (size_t j = 0; j < cols; ++j) s.v[j][j] = 1;

    size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero entry in the remaining block.
        size_t pi = t, pj = t;
        long long best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(m[t], m[pi]);
        std::swap(s.u[t], s.u[pi]);
        for (auto& row : m) std::swap(row[t], row[pj]);
        for (auto& row : s.v) std::swap(row[t], row[pj]);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i)
            if (m[i][t] != 0) {
                long long f = -(m[i][t] / m[t][t]);
                add_row(m, static_cast<int>(i), static_cast<int>(t), f);
                add_row(s.u, static_cast<int>(i), static_cast<int>(t), f);
                if (m[i][t] != 0) clean = false;
            }
        for (size_t j = t + 1; j < cols; ++j)
            if (m[t][j] != 0) {
                long long f = -(m[t][j] / m[t][t]);
                add_col(m, static_cast<int>(j), static_cast<int>(t), f);
                add_col(s.v, static_cast<int>(j), static_cast<int>(t), f);
                if (m[t][j] != 0) clean = false;
            }
        if (clean) {
            if (m[t][t] < 0) {
                for (auto& row : m) row[t] = -row[t];
                for (auto& row : s.v) row[t] = -row[t];
            }
            ++t;
        }
    }
    s.d = std::move(m);
    return s;
}

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

// Solve M theta = b (mod 2 pi) exactly via the Smith form. Returns false and
// the worst defect when inconsistent.
bool solve_phase_system(const std::vector<std::vector<long long>>& m, const std::vector<double>& b,
                        std::vector<double>& theta, double tol, double& defect) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    if (rows == 0) {
        theta.assign(cols, 0.0);
        defect = 0.0;
        return true;
    }
    Snf s = smith_normal_form(m);
    std::vector<double> c(rows, 0.0);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j)
            if (s.u[i][j] != 0) c[i] += static_cast<double>(s.u[i][j]) * b[j];
    std::vector<double> w(cols, 0.0);
    defect = 0.0;
    for (size_t i = 0; i < rows; ++i) {
        long long d = i < cols ? s.d[i][i] : 0;
        if (d != 0)
            w[i] = c[i] / static_cast<double>(d);
        else
            defect = std::max(defect, std::fabs(wrap_angle(c[i])));
    }
    if (defect > tol) return false;
    theta.assign(cols, 0.0);
    for (size_t j = 0; j < cols; ++j)
        for (size_t k = 0; k < cols; ++k)
            if (s.v[j][k] != 0) theta[j] += static_cast<double>(s.v[j][k]) * w[k];
    return true;
}

bool graph_is_simple(const Graph& g) {
    for (const auto& e : g.edges())
        if (g.edges_between(e.source, e.target).size() != 1) return false;
    return true;
}

double system_scale(const CellSystem& cs) {
    double s = 0.0;
    for (const auto& z : cs.w) s = std::max(s, std::abs(z));
    return s > 0.0 ? s : 1.0;
}

// ---- numerical gauge search -------------------------------------------------

struct GaugeParam {
    std::vector<std::pair<int, int>> classes;
    std::vector<int> sizes;   // class sizes
    std::vector<int> offsets; // into the parameter vector
    int total = 0;
};

GaugeParam gauge_param_layout(const Graph& g) {
    GaugeParam p;
    std::map<std::pair<int, int>, int> seen;
    for (const auto& e : g.edges()) {
        auto key = edge_class(g, e.id);
        if (seen.count(key)) continue;
        int sz = static_cast<int>(g.edges_between(key.first, key.second).size());
        seen[key] = 1;
        p.classes.push_back(key);
        p.sizes.push_back(sz);
        p.offsets.push_back(p.total);
        p.total += sz * sz; // Hermitian generator: n^2 real parameters
    }
    return p;
}

GaugeFamily gauge_from_params(const GaugeParam& layout, const Eigen::VectorXd& x) {
    GaugeFamily fam;
    for (size_t c = 0; c < layout.classes.size(); ++c) {
        int n = layout.sizes[c];
        int off = layout.offsets[c];
        Eigen::MatrixXcd h(n, n);
        int k = off;
        for (int i = 0; i < n; ++i) h(i, i) = cd(x[k++], 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double re = x[k++], im = x[k++];
                h(i, j) = cd(re, im);
                h(j, i) = cd(re, -im);
            }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        Eigen::VectorXcd phases(n);
        for (int i = 0; i < n; ++i)
            phases[i] = std::polar(1.0, es.eigenvalues()[i]);
        fam.u[layout.classes[c]] = es.eigenvectors() * phases.asDiagonal() *
                                   es.eigenvectors().adjoint();
    }
    return fam;
}

} // namespace

GaugeFamily GaugeFamily::identity(const Graph& g) {
    GaugeFamily fam;
    for (const auto& e : g.edges()) {
        auto key = edge_class(g, e.id);
        if (fam.u.count(key)) continue;
        int n = static_cast<int>(g.edges_between(key.first, key.second).size());
        fam.u[key] = Eigen::MatrixXcd::Identity(n, n);
    }
    return fam;
}

GaugeFamily GaugeFamily::random(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    GaugeFamily fam;
    for (const auto& e : g.edges()) {
        auto key = edge_class(g, e.id);
        if (fam.u.count(key)) continue;
        int n = static_cast<int>(g.edges_between(key.first, key.second).size());
        if (n == 1) {
            fam.u[key] = Eigen::MatrixXcd::Constant(1, 1, std::polar(1.0, angle(rng)));
            continue;
        }
        Eigen::MatrixXcd z(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) z(i, j) = cd(gauss(rng), gauss(rng));
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
        Eigen::MatrixXcd q = qr.householderQ();
        Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int i = 0; i < n; ++i) {
            cd d = r(i, i);
            q.col(i) *= d / std::abs(d);
        }
        fam.u[key] = q;
    }
    return fam;
}

double GaugeFamily::unitarity_defect() const {
    double worst = 0.0;
    for (const auto& [key, m] : u) {
        Eigen::MatrixXcd defect =
            m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
        worst = std::max(worst, defect.cwiseAbs().maxCoeff());
    }
    return worst;
}

CellSystem gauge_transform(const CellSystem& cs, const GaugeFamily& fam, double tol) {
    const Graph& g = *cs.graph;
    if (fam.unitarity_defect() > tol)
        throw std::invalid_argument("gauge_transform: gauge family is not unitary");
    for (const auto& e : g.edges())
        if (!fam.u.count(edge_class(g, e.id)))
            throw std::invalid_argument("gauge_transform: gauge family misses a parallel-edge class");

    CellSystem out = cs;
    for (size_t idx = 0; idx < g.triangles().size(); ++idx) {
        const auto& t = g.triangles()[idx];
        const Eigen::MatrixXcd* u[3];
        const std::vector<int>* cls[3];
        int pos[3];
        for (int s = 0; s < 3; ++s) {
            auto key = edge_class(g, t.e[s]);
            u[s] = &fam.u.at(key);
            cls[s] = &g.edges_between(key.first, key.second);
            pos[s] = class_position(g, t.e[s]);
        }
        cd sum = 0.0;
        for (size_t i0 = 0; i0 < cls[0]->size(); ++i0)
            for (size_t i1 = 0; i1 < cls[1]->size(); ++i1)
                for (size_t i2 = 0; i2 < cls[2]->size(); ++i2) {
                    cd coeff = (*u[0])(pos[0], static_cast<int>(i0)) *
                               (*u[1])(pos[1], static_cast<int>(i1)) *
                               (*u[2])(pos[2], static_cast<int>(i2));
                    if (std::abs(coeff) == 0.0) continue;
                    sum += coeff * cs.value((*cls[0])[i0], (*cls[1])[i1], (*cls[2])[i2]);
                }
        out.w[idx] = sum;
    }
    return out;
}

// The invariants are emitted in a fixed graph-determined order, anchored to
// vertex and edge ids: two systems are only ever compared on the same graph,
// and solutions related by a nontrivial graph automorphism (the W+/W- pairs)
// must not collapse, so nothing is pooled or sorted.
Fingerprint fingerprint(const CellSystem& cs) {
    const Graph& g = *cs.graph;
    Fingerprint f;
    const double rounding = 1e-9;

    // (a) triangle-class norms: cells grouped over parallel-edge choices
    std::map<std::array<std::pair<int, int>, 3>, double> norms;
    for (size_t idx = 0; idx < g.triangles().size(); ++idx) {
        const auto& t = g.triangles()[idx];
        std::array<std::pair<int, int>, 3> key[3];
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) key[r][static_cast<size_t>(s)] = edge_class(g, t.e[(r + s) % 3]);
        auto canon = *std::min_element(key, key + 3);
        norms[canon] += std::norm(cs.w[idx]);
    }
    for (const auto& [k, v] : norms) f.class_norms.push_back(round_to(std::sqrt(v), rounding));

    auto is_singleton = [&](int e) {
        return g.edges_between(g.edge(e).source, g.edge(e).target).size() == 1;
    };

    // (b) per-summand products over frames with a1 = a4, a2 = a3; these are
    // invariant under scalar gauges, so only singleton classes enter.
    for (const auto& e1 : g.edges()) {
        if (!is_singleton(e1.id)) continue;
        int a = e1.source, b = e1.target;
        for (int a2 : g.in_edges(b)) {
            if (!is_singleton(a2)) continue;
            int c = g.edge(a2).source;
            for (int beta : g.out_edges(b)) {
                if (!is_singleton(beta)) continue;
                int x = g.edge(beta).target;
                for (int delta : g.out_edges(b)) {
                    if (!is_singleton(delta)) continue;
                    if (g.edge(delta).target != x) continue;
                    for (int g1 : g.edges_between(x, a)) {
                        if (!is_singleton(g1)) continue;
                        for (int g2 : g.edges_between(x, c)) {
                            if (!is_singleton(g2)) continue;
                            cd p = cs.value(e1.id, beta, g1) * std::conj(cs.value(a2, beta, g2)) *
                                   cs.value(a2, delta, g2) * std::conj(cs.value(e1.id, delta, g1));
                            f.frame_values.push_back(round_to(p, rounding));
                        }
                    }
                }
            }
        }
    }

    // (c) per parallel class: Gram pairings of the cell vectors over
    // singleton completions (|G| entries and oriented 3-cycles), unchanged
    // under matrix gauges.
    std::map<std::pair<int, int>, int> visited;
    for (const auto& e : g.edges()) {
        auto key = edge_class(g, e.id);
        if (visited.count(key)) continue;
        visited[key] = 1;
        const auto& cls = g.edges_between(key.first, key.second);
        if (cls.size() < 2) continue;
        int s = key.first, t = key.second;
        struct Completion {
            int e_in, e_out;
        };
        std::vector<Completion> comps;
        for (int e_in : g.out_edges(t)) {
            if (!is_singleton(e_in)) continue;
            int v = g.edge(e_in).target;
            for (int e_out : g.edges_between(v, s)) {
                if (!is_singleton(e_out)) continue;
                comps.push_back({e_in, e_out});
            }
        }
        auto gram = [&](const Completion& c1, const Completion& c2) {
            cd sum = 0.0;
            for (int xi : cls)
                sum += cs.value(xi, c1.e_in, c1.e_out) * std::conj(cs.value(xi, c2.e_in, c2.e_out));
            return sum;
        };
        for (size_t i = 0; i < comps.size(); ++i)
            for (size_t j = 0; j < comps.size(); ++j)
                f.gram_cycles.push_back(round_to(cd(std::abs(gram(comps[i], comps[j])), 0.0), rounding));
        for (size_t i = 0; i < comps.size(); ++i)
            for (size_t j = i + 1; j < comps.size(); ++j)
                for (size_t k = j + 1; k < comps.size(); ++k) {
                    cd p = gram(comps[i], comps[j]) * gram(comps[j], comps[k]) *
                           gram(comps[k], comps[i]);
                    f.gram_cycles.push_back(round_to(p, rounding));
                }
    }
    return f;
}

bool fingerprint_close(const Fingerprint& a, const Fingerprint& b, double tol) {
    if (a.class_norms.size() != b.class_norms.size() ||
        a.frame_values.size() != b.frame_values.size() ||
        a.gram_cycles.size() != b.gram_cycles.size())
        return false;
    auto near = [&](double d, double m) { return d <= tol * std::max(1.0, m); };
    for (size_t i = 0; i < a.class_norms.size(); ++i)
        if (!near(std::fabs(a.class_norms[i] - b.class_norms[i]),
                  std::fabs(a.class_norms[i]) + std::fabs(b.class_norms[i])))
            return false;
    for (size_t i = 0; i < a.frame_values.size(); ++i)
        if (!near(std::abs(a.frame_values[i] - b.frame_values[i]),
                  std::abs(a.frame_values[i]) + std::abs(b.frame_values[i])))
            return false;
    for (size_t i = 0; i < a.gram_cycles.size(); ++i)
        if (!near(std::abs(a.gram_cycles[i] - b.gram_cycles[i]),
                  std::abs(a.gram_cycles[i]) + std::abs(b.gram_cycles[i])))
            return false;
    return true;
}

std::string fingerprint_digest(const Fingerprint& f, double rounding) {
    std::ostringstream os;
    os.precision(9);
    auto put = [&](double x) {
        double r = round_to(x, rounding);
        if (r == 0.0) r = 0.0; // normalize -0
        os << r << ";";
    };
    os << "n:";
    for (double x : f.class_norms) put(x);
    os << "f:";
    for (const auto& z : f.frame_values) {
        put(z.real());
        put(z.imag());
    }
    os << "g:";
    for (const auto& z : f.gram_cycles) {
        put(z.real());
        put(z.imag());
    }
    return os.str();
}

EquivalenceResult equivalent(const CellSystem& cs1, const CellSystem& cs2,
                             const EquivOptions& opts) {
    if (cs1.graph->name() != cs2.graph->name() ||
        cs1.graph->edge_count() != cs2.graph->edge_count() ||
        cs1.graph->vertex_count() != cs2.graph->vertex_count())
        throw std::invalid_argument("equivalent: cell systems live on different graphs");
    const Graph& g = *cs1.graph;
    EquivalenceResult res;
    double scale = std::max(system_scale(cs1), system_scale(cs2));

    if (graph_is_simple(g)) {
        // Exact route: gauge preserves each |W|; phases form a linear system
        // over the triangle-edge incidence.
        for (size_t i = 0; i < cs1.w.size(); ++i)
            if (std::fabs(std::abs(cs1.w[i]) - std::abs(cs2.w[i])) > opts.mag_tol * scale) {
                res.status = EquivStatus::Inequivalent;
                std::ostringstream os;
                os << "|W| differs on triangle " << i << ": " << std::abs(cs1.w[i]) << " vs "
                   << std::abs(cs2.w[i]);
                res.obstruction = os.str();
                return res;
            }
        std::vector<std::vector<long long>> m;
        std::vector<double> b;
        for (size_t i = 0; i < cs1.w.size(); ++i) {
            if (std::abs(cs1.w[i]) <= opts.mag_tol * scale) continue; // zero cells impose nothing
            std::vector<long long> row(static_cast<size_t>(g.edge_count()), 0);
            for (int e : g.triangles()[i].e) row[static_cast<size_t>(e)] += 1;
            m.push_back(std::move(row));
            b.push_back(std::arg(cs1.w[i] / cs2.w[i]));
        }
        std::vector<double> theta;
        double defect = 0.0;
        if (!solve_phase_system(m, b, theta, opts.phase_tol, defect)) {
            res.status = EquivStatus::Inequivalent;
            std::ostringstream os;
            os << "phase system inconsistent, cycle defect " << defect << " rad";
            res.obstruction = os.str();
            return res;
        }
        GaugeFamily fam;
        for (const auto& e : g.edges())
            fam.u[{e.source, e.target}] =
                Eigen::MatrixXcd::Constant(1, 1, std::polar(1.0, theta[static_cast<size_t>(e.id)]));
        // Confirm the witness numerically.
        CellSystem probe = gauge_transform(cs2, fam);
        double err = 0.0;
        for (size_t i = 0; i < cs1.w.size(); ++i) err = std::max(err, std::abs(probe.w[i] - cs1.w[i]));
        if (err > 1e-6 * scale)
            throw std::logic_error("equivalent: phase witness failed verification");
        res.status = EquivStatus::Equivalent;
        res.witness = std::move(fam);
        res.objective = err * err;
        return res;
    }

    // Parallel-edge route.
    if (!fingerprint_close(fingerprint(cs1), fingerprint(cs2), 1e-6)) {
        res.status = EquivStatus::Inequivalent;
        res.obstruction = "gauge-invariant fingerprints differ";
        return res;
    }

    GaugeParam layout = gauge_param_layout(g);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    double best = -1.0;
    GaugeFamily best_fam;

    auto objective = [&](const Eigen::VectorXd& x, Eigen::VectorXd* resid) {
        GaugeFamily fam = gauge_from_params(layout, x);
        CellSystem probe = gauge_transform(cs2, fam);
        double obj = 0.0;
        if (resid) resid->resize(2 * static_cast<int>(cs1.w.size()));
        for (size_t i = 0; i < cs1.w.size(); ++i) {
            cd dz = probe.w[i] - cs1.w[i];
            obj += std::norm(dz);
            if (resid) {
                (*resid)[2 * static_cast<int>(i)] = dz.real();
                (*resid)[2 * static_cast<int>(i) + 1] = dz.imag();
            }
        }
        return obj;
    };

    for (int restart = 0; restart < opts.restarts; ++restart) {
        Eigen::VectorXd x(layout.total);
        for (int i = 0; i < layout.total; ++i) x[i] = uni(rng);
        double lambda = 1e-2;
        Eigen::VectorXd r;
        double obj = objective(x, &r);
        for (int iter = 0; iter < opts.iterations; ++iter) {
            // numeric Jacobian
            Eigen::MatrixXd J(r.size(), layout.total);
            const double h = 1e-6;
            for (int p = 0; p < layout.total; ++p) {
                Eigen::VectorXd xp = x, rp;
                xp[p] += h;
                objective(xp, &rp);
                J.col(p) = (rp - r) / h;
            }
            Eigen::MatrixXd jtj = J.transpose() * J;
            Eigen::VectorXd jtr = J.transpose() * r;
            bool stepped = false;
            for (int tries = 0; tries < 8; ++tries) {
                Eigen::MatrixXd aug = jtj;
                for (int p = 0; p < layout.total; ++p) aug(p, p) += lambda * (jtj(p, p) + 1e-12);
                Eigen::VectorXd step = aug.ldlt().solve(-jtr);
                Eigen::VectorXd xn = x + step;
                Eigen::VectorXd rn;
                double on = objective(xn, &rn);
                if (on < obj) {
                    x = xn;
                    r = rn;
                    obj = on;
                    lambda = std::max(lambda / 3.0, 1e-12);
                    stepped = true;
                    break;
                }
                lambda *= 4.0;
            }
            if (!stepped || obj < 1e-24) break;
        }
        if (best < 0.0 || obj < best) {
            best = obj;
            best_fam = gauge_from_params(layout, x);
        }
        if (best < opts.objective_tol * scale * scale) break;
    }

    res.objective = best;
    if (best >= 0.0 && best < opts.objective_tol * scale * scale) {
        res.status = EquivStatus::Equivalent;
        res.witness = std::move(best_fam);
    } else {
        res.status = EquivStatus::Inconclusive;
    }
    return res;
}

} // namespace cellforge
