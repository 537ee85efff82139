#include "filament/spectral.hpp"

#include <fftw3.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace filament {
namespace {

std::mutex planner_mutex;

// One r2c/c2r plan pair with its own buffers. Cached per thread, so
// execution never shares buffers across threads.
class Transform {
public:
    explicit Transform(std::size_t m) : m_(m)
    {
        real_ = fftw_alloc_real(m);
        freq_ = fftw_alloc_complex(m / 2 + 1);
        std::lock_guard lock(planner_mutex);
        const int n = static_cast<int>(m);
        forward_ = fftw_plan_dft_r2c_1d(n, real_, freq_, FFTW_ESTIMATE);
        backward_ = fftw_plan_dft_c2r_1d(n, freq_, real_, FFTW_ESTIMATE);
    }
    ~Transform()
    {
        std::lock_guard lock(planner_mutex);
        fftw_destroy_plan(forward_);
        fftw_destroy_plan(backward_);
        fftw_free(real_);
        fftw_free(freq_);
    }
    Transform(const Transform&) = delete;
    Transform& operator=(const Transform&) = delete;

    double* real() { return real_; }
    std::complex<double>* freq() { return reinterpret_cast<std::complex<double>*>(freq_); }
    void forward() { fftw_execute(forward_); }
    void backward() { fftw_execute(backward_); }
    std::size_t size() const { return m_; }

private:
    std::size_t m_;
    double* real_;
    fftw_complex* freq_;
    fftw_plan forward_;
    fftw_plan backward_;
};

Transform& transform_for(std::size_t m)
{
    thread_local std::unordered_map<std::size_t, std::unique_ptr<Transform>> cache;
    auto& slot = cache[m];
    if (!slot)
        slot = std::make_unique<Transform>(m);
    return *slot;
}

template <class Symbol>
PeriodicField apply_symbol(const PeriodicField& w, Symbol symbol)
{
    const std::size_t m = w.size();
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("periodic field length must be even and >= 2");
    Transform& tr = transform_for(m);
    std::copy(w.values.begin(), w.values.end(), tr.real());
    tr.forward();
    std::complex<double>* f = tr.freq();
    const std::size_t half = m / 2;
    for (std::size_t k = 0; k < half; ++k)
        f[k] *= symbol(static_cast<double>(k));
    f[half] = 0.0;
    tr.backward();
    PeriodicField out;
    out.values.resize(m);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j)
        out.values[j] = tr.real()[j] * scale;
    return out;
}

}  // namespace

LinearPart linear_part(std::span<const double> u)
{
    if (u.empty())
        throw std::invalid_argument("linear_part: empty samples");
    return {u.front(), u.back()};
}

PeriodicField odd_extend_vanishing(std::span<const double> w)
{
    const std::size_t n = w.size();
    if (n < 3)
        throw std::invalid_argument("odd_extend: need at least 3 samples");
    const std::size_t m = 2 * n - 2;
    PeriodicField out;
    out.values.assign(m, 0.0);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        out.values[j] = w[j];
        out.values[m - j] = -w[j];
    }
    return out;
}

PeriodicField odd_extend(std::span<const double> u)
{
    const std::size_t n = u.size();
    if (n < 3)
        throw std::invalid_argument("odd_extend: need at least 3 samples");
    const double u0 = u.front();
    const double jump = u.back() - u0;
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 1; j + 1 < n; ++j)
        w[j] = u[j] - (u0 + static_cast<double>(j) / static_cast<double>(n - 1) * jump);
    return odd_extend_vanishing(w);
}

std::vector<double> restrict_field(const PeriodicField& w, std::size_t n)
{
    if (n > w.size())
        throw std::invalid_argument("restrict_field: n exceeds field length");
    return {w.values.begin(), w.values.begin() + static_cast<std::ptrdiff_t>(n)};
}

PeriodicField spectral_derivative(const PeriodicField& w)
{
    return apply_symbol(w, [](double k) { return std::complex<double>(0.0, k); });
}

PeriodicField semigroup_apply(const PeriodicField& w, double t)
{
    if (!(t >= 0.0))
        throw std::invalid_argument("semigroup_apply: negative time");
    return apply_symbol(w, [t](double k) { return std::complex<double>(std::exp(-t * k / 4.0), 0.0); });
}

PeriodicField abs_derivative(const PeriodicField& w)
{
    return apply_symbol(w, [](double k) { return std::complex<double>(k, 0.0); });
}

PeriodicField upsample(const PeriodicField& w, int refine)
{
    if (refine < 1)
        throw std::invalid_argument("upsample: refine must be >= 1");
    const std::size_t m = w.size();
    const std::size_t mf = m * static_cast<std::size_t>(refine);
    Transform& coarse = transform_for(m);
    std::copy(w.values.begin(), w.values.end(), coarse.real());
    coarse.forward();
    std::vector<std::complex<double>> spec(coarse.freq(), coarse.freq() + m / 2);

    Transform& fine = transform_for(mf);
    std::complex<double>* f = fine.freq();
    std::fill(f, f + mf / 2 + 1, std::complex<double>(0.0));
    std::copy(spec.begin(), spec.end(), f);
    fine.backward();
    PeriodicField out;
    out.values.resize(mf);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < mf; ++j)
        out.values[j] = fine.real()[j] * scale;
    return out;
}

std::vector<double> derivative_on_interval(std::span<const double> u)
{
    const std::size_t n = u.size();
    auto d = restrict_field(spectral_derivative(odd_extend(u)), n);
    const double slope = linear_part(u).slope();
    for (double& v : d)
        v += slope;
    return d;
}

std::vector<double> linear_operator_LD(std::span<const double> u)
{
    const std::size_t n = u.size();
    const PeriodicField d1 = spectral_derivative(odd_extend(u));
    const PeriodicField d2 = spectral_derivative(d1);
    const double slope = linear_part(u).slope();
    const double ds = pi / static_cast<double>(n - 1);
    const long twice = 2 * static_cast<long>(n - 1);
    const double unit = pi / static_cast<double>(twice);

    std::vector<double> up(n);
    for (std::size_t j = 0; j < n; ++j)
        up[j] = d1.values[j] + slope;

    // cot(m*pi/(2(N-1))) for m in (0, 2(N-1)); sin via the nearer endpoint.
    auto cot_index = [&](long m) {
        const long mm = std::min(m, twice - m);
        return std::cos(unit * static_cast<double>(m)) / std::sin(unit * static_cast<double>(mm));
    };

    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            const double wl = (l == 0 || l + 1 == n) ? 0.5 * ds : ds;
            const long diff = static_cast<long>(k) - static_cast<long>(l);
            const long plus = static_cast<long>(k + l);
            double kern = 0.0;
            if (diff != 0)
                kern += diff > 0 ? cot_index(diff) : -cot_index(-diff);
            if (plus != 0 && plus != twice)
                kern += cot_index(plus);
            sum += wl * kern * up[l];
        }
        sum -= 2.0 * ds * d2.values[k];
        out[k] = -sum / (8.0 * pi);
    }
    return out;
}

std::vector<double> component(std::span<const Vec2> x, int c)
{
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = x[j][c];
    return out;
}

Curve curve_tangent(std::span<const Vec2> x)
{
    Curve t(x.size());
    for (int c = 0; c < 2; ++c) {
        const auto d = derivative_on_interval(component(x, c));
        for (std::size_t j = 0; j < x.size(); ++j)
            t[j][c] = d[j];
    }
    return t;
}

Curve curve_second_derivative(std::span<const Vec2> x)
{
    const std::size_t n = x.size();
    Curve f(n);
    for (int c = 0; c < 2; ++c) {
        const auto d = spectral_derivative(spectral_derivative(odd_extend(component(x, c))));
        for (std::size_t j = 0; j < n; ++j)
            f[j][c] = d.values[j];
    }
    return f;
}

PoissonNorms poisson_line_norms(double t)
{
    if (!(t > 0.0))
        throw std::invalid_argument("poisson_line_norms: t must be positive");
    // |d/dx P_t(x)| = 2 t |x| / (pi (t^2 + x^2)^2), even in x
    auto g = [t](double x) {
        const double q = t * t + x * x;
        return 2.0 * t * x / (pi * q * q);
    };
    using boost::math::quadrature::gauss_kronrod;
    const double half = gauss_kronrod<double, 61>::integrate(
        g, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-14);

    const int samples = 20000;
    const double xmax = 10.0 * t;
    int best = 0;
    double best_val = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double v = g(xmax * i / samples);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = xmax * std::max(0, best - 1) / samples;
    const double hi = xmax * std::min(samples, best + 1) / samples;
    auto neg = [&](double x) { return -g(x); };
    const auto r = boost::math::tools::brent_find_minima(neg, lo, hi, 50);
    return {2.0 * half, std::max(best_val, -r.second)};
}

}  // namespace filament
