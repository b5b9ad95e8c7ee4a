/// @file twisted.cpp
/// @brief Direct-summation kernel for the twisted convolution.
///
/// For an output node k the kernel phase factorizes over the summation axes:
/// (xi, theta eta) = sum_j v_j eta_j with v = theta^T xi, so one table of M
/// unit phases per axis replaces a complex exponential per term. The last
/// axis is the contiguous inner loop; x is read backwards and y forwards.

#include <algorithm>
#include <cmath>
#include <vector>

#include "qns/exec.hpp"
#include "qns/qelement.hpp"

namespace qns {
namespace {

struct KernelContext {
  int d;
  int K;
  std::size_t m;
  const double* x;  // interleaved re/im
  const double* y;
  const std::vector<std::size_t>* strides;
  double half_dxi2;
  const double* theta;  // row-major d x d
};

// Accumulates sum over the box [lo, hi] of axes >= axis.
void accumulate(const KernelContext& c, int axis, const int* k, const int* lo, const int* hi,
                const double* const* tables, std::size_t x_off, std::size_t y_off, double& acc_re,
                double& acc_im) {
  const std::size_t stride = (*c.strides)[static_cast<std::size_t>(axis)];
  const double* tab = tables[axis];
  const int K = c.K;
  if (axis == c.d - 1) {
    double s_re = 0.0;
    double s_im = 0.0;
    const int kk = k[axis];
    for (int l = lo[axis]; l <= hi[axis]; ++l) {
      const std::size_t xi = 2 * (x_off + static_cast<std::size_t>(kk - l + K));
      const std::size_t yi = 2 * (y_off + static_cast<std::size_t>(l + K));
      const double a_re = c.x[xi], a_im = c.x[xi + 1];
      const double b_re = c.y[yi], b_im = c.y[yi + 1];
      const double ab_re = a_re * b_re - a_im * b_im;
      const double ab_im = a_re * b_im + a_im * b_re;
      const std::size_t ti = 2 * static_cast<std::size_t>(l - lo[axis]);
      const double t_re = tab[ti], t_im = tab[ti + 1];
      s_re += t_re * ab_re - t_im * ab_im;
      s_im += t_re * ab_im + t_im * ab_re;
    }
    acc_re += s_re;
    acc_im += s_im;
    return;
  }
  for (int l = lo[axis]; l <= hi[axis]; ++l) {
    double s_re = 0.0;
    double s_im = 0.0;
    accumulate(c, axis + 1, k, lo, hi, tables, x_off + static_cast<std::size_t>(k[axis] - l + K) * stride,
               y_off + static_cast<std::size_t>(l + K) * stride, s_re, s_im);
    const std::size_t ti = 2 * static_cast<std::size_t>(l - lo[axis]);
    const double t_re = tab[ti], t_im = tab[ti + 1];
    acc_re += t_re * s_re - t_im * s_im;
    acc_im += t_re * s_im + t_im * s_re;
  }
}

}  // namespace

QElement twisted_convolution(const QElement& x, const QElement& y) {
  require_compatible(x, y, "twisted_convolution");
  const auto& g = x.grid();
  const int d = g.dim();
  const int K = g.half_width();
  const std::size_t m = static_cast<std::size_t>(g.nodes_per_axis());
  std::vector<std::size_t> strides(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) strides[static_cast<std::size_t>(j)] = g.stride(j);

  const KernelContext ctx{d,
                          K,
                          m,
                          reinterpret_cast<const double*>(x.coeffs().data()),
                          reinterpret_cast<const double*>(y.coeffs().data()),
                          &strides,
                          0.5 * g.spacing() * g.spacing(),
                          x.theta().entries().data()};
  const double w = g.cell_volume();
  std::vector<Complex> out(g.size());

  parallel_for(g.size(), [&](std::size_t begin, std::size_t end) {
    std::vector<int> k(static_cast<std::size_t>(d)), lo(k.size()), hi(k.size());
    std::vector<double> table_storage(2 * m * k.size());
    std::vector<const double*> tables(k.size());
    for (int j = 0; j < d; ++j) tables[static_cast<std::size_t>(j)] = table_storage.data() + 2 * m * static_cast<std::size_t>(j);
    for (std::size_t f = begin; f < end; ++f) {
      g.lattice(f, k);
      for (int j = 0; j < d; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        double v = 0.0;
        for (int i = 0; i < d; ++i) v += k[static_cast<std::size_t>(i)] * ctx.theta[static_cast<std::size_t>(i * d + j)];
        lo[ju] = std::max(-K, k[ju] - K);
        hi[ju] = std::min(K, k[ju] + K);
        double* tab = table_storage.data() + 2 * m * ju;
        for (int l = lo[ju]; l <= hi[ju]; ++l) {
          const double angle = ctx.half_dxi2 * v * l;
          const std::size_t ti = 2 * static_cast<std::size_t>(l - lo[ju]);
          tab[ti] = std::cos(angle);
          tab[ti + 1] = std::sin(angle);
        }
      }
      double re = 0.0;
      double im = 0.0;
      accumulate(ctx, 0, k.data(), lo.data(), hi.data(), tables.data(), 0, 0, re, im);
      out[f] = Complex(w * re, w * im);
    }
  });
  return QElement(g, x.theta(), std::move(out));
}

}  // namespace qns
