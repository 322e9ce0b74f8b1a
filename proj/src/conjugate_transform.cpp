#include "qpb/conjugate_transform.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "fft.hpp"
#include "qpb/errors.hpp"

namespace qpb {
namespace {

// (-1)^j along every axis of the flat index.
double checkerboard(const UniformGrid& g, std::size_t flat) {
  std::size_t parity = 0;
  for (int a = 0; a < g.dim(); ++a) parity += g.axis_index(flat, a);
  return (parity & 1U) ? -1.0 : 1.0;
}

WaveFunction transform(const WaveFunction& in, const UniformGrid& out_grid, Representation out_rep,
                       detail::FftSign sign) {
  const UniformGrid& g = in.grid();
  const std::size_t n = g.n_points();
  // exp(i n pi / 2) per axis is 1 because n is a multiple of 4.
  const double c = std::pow(g.spacing() / std::sqrt(2.0 * std::numbers::pi * g.hbar()), g.dim());

  std::vector<cplx> buf(in.values().begin(), in.values().end());
  for (std::size_t f = 0; f < buf.size(); ++f) buf[f] *= checkerboard(g, f);
  std::vector<cplx> out(buf.size());
  if (g.dim() == 1) {
    detail::fft(buf, out, sign);
  } else {
    detail::fft3(buf, out, n, sign);
  }
  for (std::size_t f = 0; f < out.size(); ++f) out[f] *= c * checkerboard(out_grid, f);
  return WaveFunction(out_grid, out_rep, std::move(out));
}

void require_reciprocal(const UniformGrid& in, const UniformGrid& out) {
  const UniformGrid expected = reciprocal_grid(in);
  const bool same_shape = out.dim() == expected.dim() && out.n_points() == expected.n_points();
  const bool same_hbar = out.hbar() == expected.hbar();
  const bool same_extent =
      std::abs(out.half_extent() - expected.half_extent()) <= 1e-12 * expected.half_extent();
  if (!same_shape || !same_hbar || !same_extent) {
    throw ConfigurationError("declared output grid violates reciprocity: expected half extent " +
                             std::to_string(expected.half_extent()) + ", got " +
                             std::to_string(out.half_extent()));
  }
}

}  // namespace

UniformGrid reciprocal_grid(const UniformGrid& grid) {
  const double n = static_cast<double>(grid.n_points());
  return make_uniform_grid(grid.dim(), grid.n_points(),
                           n * std::numbers::pi * grid.hbar() / (2.0 * grid.half_extent()),
                           grid.hbar());
}

WaveFunction to_position(const WaveFunction& psi_p) {
  return to_position(psi_p, reciprocal_grid(psi_p.grid()));
}

WaveFunction to_position(const WaveFunction& psi_p, const UniformGrid& output) {
  if (psi_p.representation() != Representation::momentum) {
    throw RepresentationError("to_position expects a momentum-representation state, got " +
                              std::string(to_string(psi_p.representation())));
  }
  require_reciprocal(psi_p.grid(), output);
  return transform(psi_p, output, Representation::position, detail::FftSign::backward);
}

WaveFunction to_momentum(const WaveFunction& chi_r) {
  return to_momentum(chi_r, reciprocal_grid(chi_r.grid()));
}

WaveFunction to_momentum(const WaveFunction& chi_r, const UniformGrid& output) {
  if (chi_r.representation() != Representation::position) {
    throw RepresentationError("to_momentum expects a position-representation state, got " +
                              std::string(to_string(chi_r.representation())));
  }
  require_reciprocal(chi_r.grid(), output);
  return transform(chi_r, output, Representation::momentum, detail::FftSign::forward);
}

WaveFunction to_conjugate(const WaveFunction& psi) {
  switch (psi.representation()) {
    case Representation::position: return to_momentum(psi);
    case Representation::momentum: return to_position(psi);
    default:
      throw RepresentationError("no conjugate transform for the " +
                                std::string(to_string(psi.representation())) +
                                " representation");
  }
}

CheckReport check_parseval(const WaveFunction& psi, double tolerance) {
  const WaveFunction image = to_conjugate(psi);
  const double n_in = psi.norm();
  const double n_out = image.norm();
  const double norm_gap = std::abs(n_out * n_out - n_in * n_in);
  const double edge_in = psi.boundary_mass();
  const double edge_out = image.boundary_mass();
  Context ctx{{"norm_gap", norm_gap},
              {"edge_mass_input", edge_in},
              {"edge_mass_image", edge_out},
              {"n_points", static_cast<std::int64_t>(psi.grid().n_points())},
              {"half_extent", psi.grid().half_extent()},
              {"image_half_extent", image.grid().half_extent()},
              {"hbar", psi.grid().hbar()}};
  return CheckReport::evaluate("parseval", norm_gap + edge_in + edge_out, tolerance,
                               std::move(ctx));
}

}  // namespace qpb
