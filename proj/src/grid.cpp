#include "wsurf/grid.hpp"

#include <atomic>
#include <optional>
#include <sstream>
#include <thread>

#include "wsurf/path_planner.hpp"

namespace wsurf {

cplx GridSpec::node(int i, int j) const {
    const double s = n1 > 1 ? double(i) / (n1 - 1) : 0.0;
    const double t = n2 > 1 ? double(j) / (n2 - 1) : 0.0;
    const double a = a0 + s * (a1 - a0);
    const double b = b0 + t * (b1 - b0);
    if (kind == DomainSpec::Kind::Polar) return std::polar(a, b);
    return {a, b};
}

void GridSpec::validate() const {
    if (n1 < 2 || n2 < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 nodes per direction");
    if (!(a1 > a0) || !(b1 > b0)) throw Error(ErrorCode::InvalidArgument, "grid ranges must be nonempty and increasing");
    if (!std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(b0) || !std::isfinite(b1))
        throw Error(ErrorCode::InvalidArgument, "grid ranges must be finite");
}

GridSpec parse_grid(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "grid needs a 'polar:' or 'cartesian:' prefix");
    const std::string kind = text.substr(0, colon);
    GridSpec g;
    if (kind == "polar") g.kind = DomainSpec::Kind::Polar;
    else if (kind == "cartesian") g.kind = DomainSpec::Kind::Cartesian;
    else throw Error(ErrorCode::ParseError, "unknown grid kind '" + kind + "'");
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4 && parts.size() != 6) throw Error(ErrorCode::ParseError, "grid needs 4 ranges and optionally 2 counts");
    double v[4];
    for (int k = 0; k < 4; ++k) {
        std::size_t used = 0;
        try {
            v[k] = std::stod(parts[k], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != parts[k].size()) throw Error(ErrorCode::ParseError, "bad grid number '" + parts[k] + "'");
    }
    g.a0 = v[0], g.a1 = v[1], g.b0 = v[2], g.b1 = v[3];
    g.n1 = g.n2 = 60;
    if (parts.size() == 6) {
        int n[2];
        for (int k = 0; k < 2; ++k) {
            std::size_t used = 0;
            try {
                n[k] = std::stoi(parts[4 + k], &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != parts[4 + k].size()) throw Error(ErrorCode::ParseError, "bad grid count '" + parts[4 + k] + "'");
        }
        g.n1 = n[0], g.n2 = n[1];
    }
    try {
        g.validate();
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return g;
}

GridSpec grid_from_domain(const DomainSpec& d, int n1, int n2) { return {d.kind, d.a0, d.a1, d.b0, d.b1, n1, n2}; }

std::string to_string(const GridSpec& g) {
    std::ostringstream os;
    os.precision(17);
    os << (g.kind == DomainSpec::Kind::Polar ? "polar:" : "cartesian:") << g.a0 << ',' << g.a1 << ',' << g.b0 << ','
       << g.b1 << ',' << g.n1 << ',' << g.n2;
    return os.str();
}

const char* to_string(NodeStatus s) noexcept {
    switch (s) {
    case NodeStatus::Ok: return "ok";
    case NodeStatus::Excluded: return "excluded";
    case NodeStatus::OutsideRegion: return "outside_region";
    case NodeStatus::Failed: return "failed";
    }
    return "unknown";
}

namespace {

struct State {
    cplx z;
    PathIntegrals j;
    DataValue d;
};

State reach(const WeierstrassData& data, const State& from, cplx to) {
    if (to == from.z) return from;
    const Obstacles& obs = data.obstacles();
    if (!data.is_singular(from.z) && segment_admissible(from.z, to, obs)) {
        const TrackedIntegrals seg = data.integrate_segment(from.d, from.z, to);
        State s{to, from.j, seg.end};
        s.j += seg.integrals;
        return s;
    }
    const TrackedIntegrals tr = data.integrate_path(plan_path(from.z, to, obs), from.d);
    State s{to, from.j, tr.end};
    s.j += tr.integrals;
    return s;
}

ImmersionSample make_sample(const WeierstrassData& data, const State& st, int i, int j, bool geometry) {
    ImmersionSample s;
    s.i = i, s.j = j;
    s.z = st.z;
    s.F = immersion_from_integrals(st.j);
    if (!std::isfinite(s.F[0]) || !std::isfinite(s.F[1]) || !std::isfinite(s.F[2])) throw EvaluationFailure(st.z);
    s.Ftilde = quaternionic_from_integrals(st.j);
    s.chi = st.d.chi;
    s.Fst = sym_tafel(st.d.chi);
    const double half_scale = 0.5 * std::abs(st.d.eta_sq) * (1.0 + std::norm(st.d.chi));
    s.u = 2.0 * std::log(half_scale);
    if (const LinearODE* ode = data.ode())
        s.Q = 0.5 * coefficient_ratios(*ode, st.z).r_over_p / data.constants().lambda;
    if (geometry) {
        try {
            s.geometry = geometry_report(data.chart(st.z, st.d), data);
            s.has_geometry = true;
            s.u = s.geometry.u;
            s.Q = s.geometry.Q;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::StencilOutsideDomain) throw;
        }
    }
    return s;
}

State start_state(const WeierstrassData& data, cplx xi0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (data.is_singular(xi0)) return {xi0, {}, {cplx(nan, nan), cplx(nan, nan), cplx(nan, nan)}};
    return {xi0, {}, data.value(xi0)};
}

} // namespace

ImmersionSample sample_point(const WeierstrassData& data, cplx xi0, cplx xi, bool geometry) {
    if (const LinearODE* ode = data.ode(); ode && !ode->in_valid_region(xi))
        throw Error(ErrorCode::DomainError, format_complex(xi) + " is outside the admissible region (" + ode->valid_region_text + ")");
    if (data.is_singular(xi)) throw SingularPoint(xi);
    const State s0 = start_state(data, xi0);
    const State s = xi == xi0 ? s0 : reach(data, s0, xi);
    return make_sample(data, s, 0, 0, geometry);
}

GridResult sample_grid(const WeierstrassData& data, cplx xi0, const GridSpec& grid, const SampleOptions& opt) {
    grid.validate();
    GridResult res;
    res.spec = grid;
    res.xi0 = xi0;
    const std::size_t n = grid.size();
    res.status.assign(n, NodeStatus::Ok);
    res.errors.assign(n, {});
    const LinearODE* ode = data.ode();
    const auto idx = [&](int i, int j) { return std::size_t(i) * grid.n2 + j; };

    for (int i = 0; i < grid.n1; ++i)
        for (int j = 0; j < grid.n2; ++j) {
            const cplx z = grid.node(i, j);
            bool excluded = false;
            // Nodes on the rim count as inside; detours cannot reach them.
            for (const auto& d : data.obstacles().discs)
                excluded = excluded || std::abs(z - d.center) <= std::max(opt.exclusion_radius, d.radius) * (1.0 + 1e-9);
            if (excluded) res.status[idx(i, j)] = NodeStatus::Excluded;
            else if (ode && !ode->in_valid_region(z)) res.status[idx(i, j)] = NodeStatus::OutsideRegion;
        }

    std::vector<std::optional<State>> node_state(n);
    const State s0 = start_state(data, xi0);

    // Spine: first column.
    std::vector<State> row_anchor(grid.n1, s0);
    State prev = s0;
    for (int i = 0; i < grid.n1; ++i) {
        const std::size_t k = idx(i, 0);
        if (res.status[k] == NodeStatus::Ok) {
            try {
                node_state[k] = reach(data, prev, grid.node(i, 0));
                prev = *node_state[k];
            } catch (const Error& e) {
                res.status[k] = NodeStatus::Failed;
                res.errors[k] = e.what();
            }
        }
        row_anchor[i] = prev;
    }

    // Rows, each swept from its anchor; independent of one another.
    std::vector<std::optional<ImmersionSample>> samples(n);
    auto sweep = [&](int i) {
        State cur = row_anchor[i];
        for (int j = 0; j < grid.n2; ++j) {
            const std::size_t k = idx(i, j);
            if (res.status[k] != NodeStatus::Ok) continue;
            try {
                if (j > 0) node_state[k] = reach(data, cur, grid.node(i, j));
                cur = *node_state[k];
                samples[k] = make_sample(data, cur, i, j, opt.geometry);
            } catch (const Error& e) {
                res.status[k] = NodeStatus::Failed;
                res.errors[k] = e.what();
            }
        }
    };
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, unsigned(grid.n1));
    if (threads <= 1) {
        for (int i = 0; i < grid.n1; ++i) sweep(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int i = next++; i < grid.n1; i = next++) sweep(i);
            });
        for (auto& th : pool) th.join();
    }

    for (std::size_t k = 0; k < n; ++k) {
        switch (res.status[k]) {
        case NodeStatus::Ok: res.samples.push_back(std::move(*samples[k])); break;
        case NodeStatus::Excluded: ++res.excluded; break;
        case NodeStatus::OutsideRegion: ++res.outside_region; break;
        case NodeStatus::Failed: ++res.failed; break;
        }
    }
    if (2 * res.failed > n)
        throw Error(ErrorCode::EvaluationFailure,
                    std::to_string(res.failed) + " of " + std::to_string(n) + " grid nodes failed (first: " + [&] {
                        for (const auto& e : res.errors)
                            if (!e.empty()) return e;
                        return std::string();
                    }() + ")");
    return res;
}

} // namespace wsurf
