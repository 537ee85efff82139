#include "filament/remainder.hpp"

#include <cmath>
#include <string>

#include "filament/errors.hpp"
#include "filament/spectral.hpp"

namespace filament {
namespace {

struct Blocks {
    Mat2 h1, h2, h3;
};

// Per-filament data shared by every kernel entry.
class KernelContext {
public:
    explicit KernelContext(const Filament& f)
        : f_(f), n_(f.size()), tangent_(curve_tangent(f.nodes())), sin2_(f.size())
    {
        const double unit = pi / (2.0 * static_cast<double>(n_ - 1));
        for (std::size_t m = 0; m < n_; ++m)
            sin2_[m] = 2.0 * std::sin(unit * static_cast<double>(m));
    }

    std::size_t size() const { return n_; }

    Blocks at(std::size_t k, std::size_t l) const
    {
        const Mat2 id = Mat2::Identity();
        const Mat2 refl = reflection_matrix();
        const Vec2& x = f_[k];
        const Vec2& y = f_[l];
        Blocks b;

        if (k != l) {
            const Vec2 d = x - y;
            const double dd = d.squaredNorm();
            if (dd == 0.0)
                throw GeometryError("self-intersection: nodes " + std::to_string(k) + " and " + std::to_string(l)
                                    + " coincide");
            const double sm = sin2_[k > l ? k - l : l - k];
            b.h1 = -0.5 * std::log(dd / (sm * sm)) * id + d * d.transpose() / dd;
        } else {
            const Vec2& t = tangent_[k];
            const double tt = t.squaredNorm();
            b.h1 = -0.5 * std::log(tt) * id + t * t.transpose() / tt;
        }

        const bool corner = (k == l) && (k == 0 || k + 1 == n_);
        if (corner) {
            // one-sided limit along the diagonal at an anchor
            const Vec2& t = tangent_[k];
            const double tt = t.squaredNorm();
            b.h2 = 0.5 * std::log(tt) * id - t * t.transpose() / tt;
            b.h3.setZero();
            return b;
        }

        const Vec2 d = x - y;
        const Vec2 dr = x - reflect(y);
        const double r2 = dr.squaredNorm();
        if (r2 == 0.0)
            throw GeometryError("degenerate reflected pair: nodes " + std::to_string(k) + " and "
                                + std::to_string(l));
        const std::size_t m = std::min(k + l, 2 * (n_ - 1) - (k + l));
        const double sp = sin2_[m];
        b.h2 = 0.5 * std::log(r2 / (sp * sp)) * id - d * dr.transpose() * refl / r2;

        const double x2 = x.y();
        const double y2 = y.y();
        Mat2 wall;
        wall << 0.0, dr.x(), 0.0, dr.y();  // dr (x) e2
        b.h3 = -2.0 * x2 / r2 * wall - 2.0 * x2 * y2 * (id / r2 - 2.0 * dr * dr.transpose() / (r2 * r2)) * refl;
        return b;
    }

private:
    const Filament& f_;
    std::size_t n_;
    Curve tangent_;
    std::vector<double> sin2_;
};

std::vector<double> trapezoid_weights(std::size_t n)
{
    const double ds = pi / static_cast<double>(n - 1);
    std::vector<double> w(n, ds);
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

}  // namespace

KernelMatrices assemble_kernels(const Filament& f)
{
    const KernelContext ctx(f);
    const std::size_t n = f.size();
    KernelMatrices km;
    km.n = n;
    km.h1.resize(n * n);
    km.h2.resize(n * n);
    km.h3.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            const Blocks b = ctx.at(k, l);
            km.h1[k * n + l] = b.h1;
            km.h2[k * n + l] = b.h2;
            km.h3[k * n + l] = b.h3;
        }
    }
    return km;
}

Curve remainder_contract(const KernelMatrices& kernels, const Filament& f)
{
    const std::size_t n = f.size();
    const Curve tension = curve_second_derivative(f.nodes());
    const auto w = trapezoid_weights(n);
    Curve out(n, Vec2::Zero());
    for (std::size_t k = 0; k < n; ++k) {
        Vec2 acc = Vec2::Zero();
        for (std::size_t l = 0; l < n; ++l)
            acc += w[l] * ((kernels.h1_at(k, l) + kernels.h2_at(k, l) + kernels.h3_at(k, l)) * tension[l]);
        out[k] = acc / (4.0 * pi);
    }
    return out;
}

Curve remainder_assemble(const Filament& f)
{
    const KernelContext ctx(f);
    const std::size_t n = f.size();
    const Curve tension = curve_second_derivative(f.nodes());
    const auto w = trapezoid_weights(n);
    Curve out(n, Vec2::Zero());
    for (std::size_t k = 0; k < n; ++k) {
        Vec2 acc = Vec2::Zero();
        for (std::size_t l = 0; l < n; ++l) {
            const Blocks b = ctx.at(k, l);
            acc += w[l] * ((b.h1 + b.h2 + b.h3) * tension[l]);
        }
        out[k] = acc / (4.0 * pi);
    }
    return out;
}

Curve remainder_continuous_oracle(const Filament& f, int refine, unsigned terms)
{
    if (refine < 1)
        throw std::invalid_argument("oracle: refine must be >= 1");
    const std::size_t n = f.size();
    const std::size_t r = static_cast<std::size_t>(refine);
    const std::size_t nf = r * (n - 1) + 1;

    // band-limited fine curve: upsampled odd part plus the chord
    Curve xf(nf);
    for (int c = 0; c < 2; ++c) {
        const auto fine = upsample(odd_extend(component(f.nodes(), c)), refine);
        for (std::size_t j = 0; j < nf; ++j)
            xf[j][c] = fine.values[j];
    }
    for (std::size_t j = 0; j < nf; ++j)
        xf[j].x() += 1.0 - 2.0 * grid_point(j, nf) / pi;
    xf.front() = Vec2(1.0, 0.0);
    xf.back() = Vec2(-1.0, 0.0);

    const Curve t = curve_tangent(xf);
    const auto w = trapezoid_weights(nf);
    const double unit = pi / (2.0 * static_cast<double>(nf - 1));
    const double c4 = 1.0 / (4.0 * pi);
    const double c2 = 1.0 / (2.0 * pi);

    Curve out(n, Vec2::Zero());
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const std::size_t k = i * r;
        const Vec2& x = xf[k];
        const double x2 = x.y();
        Vec2 acc = Vec2::Zero();
        for (std::size_t l = 0; l < nf; ++l) {
            if (l == k)
                continue;
            const Vec2& y = xf[l];
            const double y2 = y.y();
            const Vec2 d = x - y;
            const Vec2 dr = x - reflect(y);
            const Vec2& tp = t[l];
            const Vec2 tpr = reflect(tp);
            const Vec2 dt = t[k] - t[l];
            const Vec2 dtr = reflect(dt);
            const double dd = d.squaredNorm();
            const double rr = dr.squaredNorm();
            if (dd == 0.0 || rr == 0.0)
                throw GeometryError("oracle: degenerate pair");
            const long diff = static_cast<long>(k) - static_cast<long>(l);
            const double cm = 0.5 / std::tan(unit * static_cast<double>(diff));
            const double cp = 0.5 / std::tan(unit * static_cast<double>(k + l));

            const Vec2 r1 = c4 * (d.dot(tp) / dd - cm) * dt - c4 * (dr.dot(tpr) / rr + cp) * dt;

            const Vec2 r2 = -c4 * (tp * (d.dot(dt) / dd) - tp * (dr.dot(dtr) / rr))
                            - c4 * (d * (tp.dot(dt) / dd) - d * (tpr.dot(dtr) / rr))
                            + c2 * (d * (d.dot(dt) * tp.dot(d) / (dd * dd)) - d * (dr.dot(dtr) * tpr.dot(dr) / (rr * rr)));

            const double rr2 = rr * rr;
            const Vec2 r3 = (x2 / (2.0 * pi)) * (dt.y() / rr) * tpr
                            - (x2 / pi) * (dt.y() * tpr.dot(dr) / rr2) * dr
                            - (x2 / (2.0 * pi)) * (tp.y() / rr2) * (rr * dtr - 2.0 * dr * dr.dot(dtr))
                            - (x2 / pi) * (y2 * tpr.dot(dr) / rr2) * dtr
                            - (x2 / pi) * (y2 * dr.dot(dtr) / rr2) * tpr
                            - (x2 / pi) * (y2 * tpr.dot(dtr) / rr2) * dr
                            + (4.0 * x2 / pi) * (y2 * dr.dot(dtr) * tpr.dot(dr) / (rr2 * rr)) * dr;

            if (terms & oracle_r1)
                acc += w[l] * r1;
            if (terms & oracle_r2)
                acc += w[l] * r2;
            if (terms & oracle_r3)
                acc += w[l] * r3;
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace filament
