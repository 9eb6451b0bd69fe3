#include "sgqi/periodic_qi.hpp"

#include "sgqi/errors.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace sgqi {

namespace {
constexpr double kShapeCap = 0.36787944117144233; // e^{-1}

std::vector<std::int64_t> axis_sizes(const LevelIndex& l, EndpointPolicy ep) {
    std::vector<std::int64_t> m(l.dim());
    for (int k = 0; k < l.dim(); ++k)
        m[k] = (std::int64_t{1} << l.l[k]) + (ep == EndpointPolicy::duplicate ? 1 : 0);
    return m;
}

// Fixed-order dot product with four independent accumulators; deterministic
// for a given length, fast enough for the hot path.
double dot(const double* f, const double* u, std::size_t n) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += f[i] * u[i];
        s1 += f[i + 1] * u[i + 1];
        s2 += f[i + 2] * u[i + 2];
        s3 += f[i + 3] * u[i + 3];
    }
    for (; i < n; ++i) s0 += f[i] * u[i];
    return (s0 + s1) + (s2 + s3);
}
} // namespace

double pairwise_sum(std::span<const double> v) {
    if (v.empty()) return 0.0;
    if (v.size() == 1) return v[0];
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

std::vector<double> shape_parameters(const ShapePolicy& policy, const LevelIndex& l,
                                     int* clamped) {
    const int d = l.dim();
    if (static_cast<int>(policy.A.size()) != d)
        throw std::domain_error("shape_parameters: A has wrong length");
    if (policy.mode == ShapeMode::power_law && static_cast<int>(policy.alpha.size()) != d)
        throw std::domain_error("shape_parameters: alpha has wrong length");
    if (policy.r < 0) throw std::domain_error("shape_parameters: r must be >= 0");
    std::vector<double> c(d);
    int nclamp = 0;
    const std::vector<double> h = l.mesh();
    for (int k = 0; k < d; ++k) {
        if (!(policy.A[k] > 0.0))
            throw std::domain_error("shape_parameters: A_j must be positive");
        double exponent = 1.0;
        if (policy.mode == ShapeMode::power_law)
            exponent = double(policy.r + 2) / double(policy.r + 2 + policy.alpha[k]);
        c[k] = policy.A[k] * std::pow(h[k], exponent);
        if (c[k] > kShapeCap) {
            c[k] = kShapeCap;
            ++nclamp;
        }
    }
    if (clamped) *clamped = nclamp;
    return c;
}

std::uint64_t SampledField::total_nodes() const {
    std::uint64_t n = 0;
    for (const auto& sg : subgrids) n += sg.values.size();
    return n;
}

SampledField sample_periodic(const FieldFunction& f, int n, int d, const CombinationPlan& plan,
                             EndpointPolicy endpoint, std::uint64_t budget) {
    if (plan.n != n || plan.d != d)
        throw std::domain_error("sample_periodic: plan does not match (n, d)");
    SampledField field;
    field.d = d;
    field.n = n;
    field.endpoint = endpoint;
    std::uint64_t used = 0;
    std::vector<double> t(d);
    for (const auto& shell : plan.shells) {
        for (const LevelIndex& l : shell.levels) {
            SampledField::Subgrid sg;
            sg.level = l;
            sg.coeff = shell.coeff;
            const auto m = axis_sizes(l, endpoint);
            const std::vector<double> h = l.mesh();
            std::uint64_t total = 1;
            for (auto mk : m) total *= static_cast<std::uint64_t>(mk);
            used += total;
            if (used > budget)
                throw budget_error("sample_periodic: node budget " + std::to_string(budget) +
                                   " exceeded");
            sg.values.reserve(total);
            std::vector<std::int64_t> j(d, 0);
            for (;;) {
                for (int k = 0; k < d; ++k) {
                    // identify: the duplicate endpoint never occurs (torus range)
                    t[k] = static_cast<double>(j[k]) * h[k];
                    if (endpoint == EndpointPolicy::duplicate && j[k] == m[k] - 1) t[k] = 1.0;
                }
                const double v = f(t);
                if (!std::isfinite(v)) {
                    std::ostringstream oss;
                    oss << "sample_periodic: non-finite value at node (";
                    for (int k = 0; k < d; ++k) oss << (k ? ", " : "") << t[k];
                    oss << ")";
                    throw data_error(oss.str());
                }
                sg.values.push_back(v);
                int k = d - 1;
                while (k >= 0 && ++j[k] == m[k]) j[k--] = 0;
                if (k < 0) break;
            }
            field.subgrids.push_back(std::move(sg));
        }
    }
    return field;
}

QuasiInterpolant::QuasiInterpolant(SampledField field, const ShapePolicy& policy, WeightRule rule)
    : field_(std::move(field)), rule_(rule) {
    kernels_.reserve(field_.subgrids.size());
    for (const auto& sg : field_.subgrids) {
        KernelSpec spec;
        spec.c = shape_parameters(policy, sg.level);
        spec.h = sg.level.mesh();
        kernels_.push_back(std::move(spec));
    }
}

QuasiInterpolant::QuasiInterpolant(SampledField field, std::vector<KernelSpec> kernels,
                                   WeightRule rule)
    : field_(std::move(field)), kernels_(std::move(kernels)), rule_(rule) {
    if (kernels_.size() != field_.subgrids.size())
        throw std::domain_error("QuasiInterpolant: one KernelSpec per subgrid required");
    for (std::size_t i = 0; i < kernels_.size(); ++i) {
        kernels_[i].validate();
        if (kernels_[i].dim() != field_.d)
            throw std::domain_error("QuasiInterpolant: kernel dimension mismatch");
    }
}

namespace {
// Evaluate one block of points against every subgrid.  Streaming the (large)
// value arrays once per block instead of once per point keeps the hot loop
// compute-bound; per-point summation order is independent of the block split.
constexpr std::size_t kPointBlock = 16;

void eval_block(const SampledField& field, const std::vector<KernelSpec>& kernels,
                WeightRule rule, const std::vector<std::vector<double>>& points,
                std::size_t lo, std::size_t hi, std::span<const int> alpha, double* out) {
    const int d = field.d;
    const std::size_t np = hi - lo;
    std::vector<std::vector<double>> u(np * d);         // per point, per axis
    std::vector<std::vector<double>> partials(np);      // per point, per row
    std::vector<std::vector<double>> subgrid_sums(np);
    std::vector<double> totals(np, 0.0);
    long long cur_coeff = 0;
    bool have_shell = false;

    auto flush_shell = [&] {
        if (!have_shell) return;
        for (std::size_t p = 0; p < np; ++p) {
            totals[p] += static_cast<double>(cur_coeff) * pairwise_sum(subgrid_sums[p]);
            subgrid_sums[p].clear();
        }
    };

    for (std::size_t si = 0; si < field.subgrids.size(); ++si) {
        const auto& sg = field.subgrids[si];
        const KernelSpec& spec = kernels[si];
        if (!have_shell || sg.coeff != cur_coeff) {
            flush_shell();
            cur_coeff = sg.coeff;
            have_shell = true;
        }
        const auto m = axis_sizes(sg.level, field.endpoint);
        const std::vector<double> h = sg.level.mesh();
        for (std::size_t p = 0; p < np; ++p) {
            const auto& x = points[lo + p];
            for (int k = 0; k < d; ++k) {
                auto& uk = u[p * d + k];
                uk.resize(m[k]);
                for (std::int64_t j = 0; j < m[k]; ++j)
                    uk[j] = eval_weighted_psi_ch(spec.c[k], h[k], x[k] - double(j) * h[k],
                                                 alpha[k], rule);
            }
        }
        const std::size_t inner_m = static_cast<std::size_t>(m[d - 1]);
        const std::size_t outer = sg.values.size() / inner_m;
        for (std::size_t p = 0; p < np; ++p) partials[p].assign(outer, 0.0);
        std::vector<std::int64_t> idx(std::max(d - 1, 1), 0);
        for (std::size_t r = 0; r < outer; ++r) {
            const double* row = sg.values.data() + r * inner_m;
            for (std::size_t p = 0; p < np; ++p) {
                double pre = 1.0;
                for (int k = 0; k < d - 1; ++k) pre *= u[p * d + k][idx[k]];
                partials[p][r] = pre * dot(row, u[p * d + d - 1].data(), inner_m);
            }
            if (d > 1) {
                int k = d - 2;
                while (k >= 0 && ++idx[k] == m[k]) idx[k--] = 0;
            }
        }
        for (std::size_t p = 0; p < np; ++p)
            subgrid_sums[p].push_back(pairwise_sum(partials[p]));
    }
    flush_shell();
    for (std::size_t p = 0; p < np; ++p) out[p] = totals[p];
}
} // namespace

double QuasiInterpolant::evaluate(std::span<const double> x, std::span<const int> alpha) const {
    const int d = field_.d;
    if (static_cast<int>(x.size()) != d || static_cast<int>(alpha.size()) != d)
        throw std::domain_error("evaluate: dimension mismatch");
    for (int a : alpha)
        if (a < 0 || a > 2)
            throw std::invalid_argument("evaluate: derivative orders above 2 unsupported");
    const std::vector<std::vector<double>> pts = {std::vector<double>(x.begin(), x.end())};
    double out = 0.0;
    eval_block(field_, kernels_, rule_, pts, 0, 1, alpha, &out);
    return out;
}

std::vector<double> QuasiInterpolant::evaluate_batch(const std::vector<std::vector<double>>& points,
                                                     std::span<const int> alpha,
                                                     int threads) const {
    const int d = field_.d;
    if (static_cast<int>(alpha.size()) != d)
        throw std::domain_error("evaluate_batch: dimension mismatch");
    for (int a : alpha)
        if (a < 0 || a > 2)
            throw std::invalid_argument("evaluate_batch: derivative orders above 2 unsupported");
    for (const auto& x : points)
        if (static_cast<int>(x.size()) != d)
            throw std::domain_error("evaluate_batch: point dimension mismatch");
    std::vector<double> out(points.size());
    const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(points.size())));
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t b = lo; b < hi; b += kPointBlock) {
            const std::size_t e = std::min(hi, b + kPointBlock);
            eval_block(field_, kernels_, rule_, points, b, e, alpha, out.data() + b);
        }
    };
    if (nthreads == 1) {
        work(0, points.size());
        return out;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (points.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(points.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
    return out;
}

ScatteredQuasiInterpolant::ScatteredQuasiInterpolant(std::vector<std::vector<double>> nodes,
                                                     std::vector<double> weights,
                                                     std::vector<double> values, KernelSpec spec)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), values_(std::move(values)),
      spec_(std::move(spec)) {
    spec_.validate();
    if (nodes_.size() != weights_.size() || nodes_.size() != values_.size())
        throw std::domain_error("ScatteredQuasiInterpolant: nodes/weights/values sizes differ");
    for (const auto& node : nodes_)
        if (static_cast<int>(node.size()) != spec_.dim())
            throw std::domain_error("ScatteredQuasiInterpolant: node dimension mismatch");
}

double ScatteredQuasiInterpolant::evaluate(std::span<const double> x,
                                           std::span<const int> alpha) const {
    const int d = spec_.dim();
    if (static_cast<int>(x.size()) != d || static_cast<int>(alpha.size()) != d)
        throw std::domain_error("evaluate: dimension mismatch");
    std::vector<double> terms(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        double prod = values_[i] * weights_[i];
        for (int k = 0; k < d; ++k)
            prod *= eval_psi_ch(spec_.c[k], spec_.h[k], x[k] - nodes_[i][k], alpha[k]);
        terms[i] = prod;
    }
    return pairwise_sum(terms);
}

// ---------------------------------------------------------------------------
// serialization

namespace {
const char* endpoint_name(EndpointPolicy ep) {
    return ep == EndpointPolicy::identify ? "identify" : "duplicate";
}

void expect_token(std::istream& is, const std::string& want, const char* ctx) {
    std::string tok;
    if (!(is >> tok) || tok != want)
        throw data_error(std::string("load: expected '") + want + "' in " + ctx + ", got '" +
                         tok + "'");
}
} // namespace

void save_field(const SampledField& field, std::ostream& os) {
    os.precision(17);
    os << "sgqi-field 1\n"
       << "d " << field.d << "\nn " << field.n << "\nendpoint " << endpoint_name(field.endpoint)
       << "\nsubgrids " << field.subgrids.size() << "\n";
    for (const auto& sg : field.subgrids) {
        os << "subgrid";
        for (int lk : sg.level.l) os << ' ' << lk;
        os << "\ncoeff " << sg.coeff << "\nvalues " << sg.values.size() << "\n";
        for (std::size_t i = 0; i < sg.values.size(); ++i)
            os << sg.values[i] << ((i + 1) % 8 == 0 || i + 1 == sg.values.size() ? '\n' : ' ');
    }
}

SampledField load_field(std::istream& is) {
    expect_token(is, "sgqi-field", "header");
    expect_token(is, "1", "version");
    SampledField field;
    std::string tok;
    expect_token(is, "d", "field");
    is >> field.d;
    expect_token(is, "n", "field");
    is >> field.n;
    expect_token(is, "endpoint", "field");
    is >> tok;
    if (tok == "identify")
        field.endpoint = EndpointPolicy::identify;
    else if (tok == "duplicate")
        field.endpoint = EndpointPolicy::duplicate;
    else
        throw data_error("load_field: unknown endpoint policy '" + tok + "'");
    expect_token(is, "subgrids", "field");
    std::size_t nsub = 0;
    is >> nsub;
    for (std::size_t i = 0; i < nsub; ++i) {
        SampledField::Subgrid sg;
        expect_token(is, "subgrid", "subgrid");
        sg.level.l.resize(field.d);
        for (int& lk : sg.level.l) is >> lk;
        expect_token(is, "coeff", "subgrid");
        is >> sg.coeff;
        expect_token(is, "values", "subgrid");
        std::size_t nv = 0;
        is >> nv;
        sg.values.resize(nv);
        for (double& v : sg.values) is >> v;
        field.subgrids.push_back(std::move(sg));
    }
    if (!is) throw data_error("load_field: truncated input");
    return field;
}

void save_interpolant(const QuasiInterpolant& q, std::ostream& os) {
    os.precision(17);
    os << "sgqi-interpolant 1\nweight "
       << (q.weight_rule() == WeightRule::trig ? "trig" : "mesh") << "\n";
    for (const auto& spec : q.kernels()) {
        os << "kernel";
        for (double c : spec.c) os << ' ' << c;
        os << "\n";
    }
    save_field(q.field(), os);
}

QuasiInterpolant load_interpolant(std::istream& is) {
    expect_token(is, "sgqi-interpolant", "header");
    expect_token(is, "1", "version");
    expect_token(is, "weight", "header");
    std::string tok;
    is >> tok;
    const WeightRule rule = tok == "mesh" ? WeightRule::mesh : WeightRule::trig;
    std::vector<std::vector<double>> cs;
    while (is >> tok) {
        if (tok == "sgqi-field") break;
        if (tok != "kernel") throw data_error("load_interpolant: expected 'kernel' or field");
        std::vector<double> c;
        // read doubles until the next keyword; kernel lines hold exactly d values,
        // but d is not known until the field header, so parse the rest of the line
        std::string line;
        std::getline(is, line);
        std::istringstream ls(line);
        double v;
        while (ls >> v) c.push_back(v);
        cs.push_back(std::move(c));
    }
    if (tok != "sgqi-field") throw data_error("load_interpolant: missing field block");
    expect_token(is, "1", "version");
    // re-parse the field body (header already consumed)
    SampledField field;
    expect_token(is, "d", "field");
    is >> field.d;
    expect_token(is, "n", "field");
    is >> field.n;
    expect_token(is, "endpoint", "field");
    is >> tok;
    field.endpoint = tok == "duplicate" ? EndpointPolicy::duplicate : EndpointPolicy::identify;
    expect_token(is, "subgrids", "field");
    std::size_t nsub = 0;
    is >> nsub;
    for (std::size_t i = 0; i < nsub; ++i) {
        SampledField::Subgrid sg;
        expect_token(is, "subgrid", "subgrid");
        sg.level.l.resize(field.d);
        for (int& lk : sg.level.l) is >> lk;
        expect_token(is, "coeff", "subgrid");
        is >> sg.coeff;
        expect_token(is, "values", "subgrid");
        std::size_t nv = 0;
        is >> nv;
        sg.values.resize(nv);
        for (double& v : sg.values) is >> v;
        field.subgrids.push_back(std::move(sg));
    }
    if (!is) throw data_error("load_interpolant: truncated input");
    if (cs.size() != field.subgrids.size())
        throw data_error("load_interpolant: kernel count does not match subgrid count");
    std::vector<KernelSpec> kernels;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        KernelSpec spec;
        spec.c = cs[i];
        spec.h = field.subgrids[i].level.mesh();
        kernels.push_back(std::move(spec));
    }
    return QuasiInterpolant(std::move(field), std::move(kernels), rule);
}

} // namespace sgqi
