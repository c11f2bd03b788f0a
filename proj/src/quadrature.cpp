#include "periodlab/quadrature.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <sstream>
#include <vector>

#include "periodlab/errors.hpp"

namespace periodlab {
namespace {

// Kronrod nodes on [0,1) of the symmetric 15-point rule; odd indices are the
// embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double lo, hi, value, error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(mid);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double pair = f(mid - dx) + f(mid + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureOptions& opts) {
  if (lo == hi) return {0.0, 0.0, 0};
  std::vector<Piece> heap{gauss_kronrod(f, lo, hi)};
  double total = heap.front().value;
  double error = heap.front().error;
  while (error > opts.abs_tol) {
    if (heap.size() >= opts.max_intervals) {
      std::ostringstream msg;
      msg << "error estimate " << error << " above " << opts.abs_tol << " after " << heap.size()
          << " intervals";
      throw Error(Errc::QuadratureNoConvergence, msg.str());
    }
    std::pop_heap(heap.begin(), heap.end());
    const Piece worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    for (const Piece& half : {gauss_kronrod(f, worst.lo, mid), gauss_kronrod(f, mid, worst.hi)}) {
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end());
    }
    // Resum instead of updating incrementally so cancellation does not drift.
    total = 0.0;
    error = 0.0;
    for (const Piece& piece : heap) {
      total += piece.value;
      error += piece.error;
    }
  }
  const std::size_t count = heap.size();
  return {total, error, count};
}

QuadratureResult operator+(const QuadratureResult& a, const QuadratureResult& b) {
  return {a.value + b.value, a.abs_error + b.abs_error, a.intervals + b.intervals};
}

}  // namespace periodlab
