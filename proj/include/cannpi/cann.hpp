#pragma once

#include <span>
#include <vector>

namespace cannpi::cann {

enum class KernelExponent {
  kSquared,  // exp(-|d|^2 / 2a^2): standard Gaussian, separable on the torus
  kLinear,   // exp(-|d|   / 2a^2): unsquared-norm variant
};

// Geometry and constants of the attractor network. Use defaults() to get a
// stable-bump configuration; validate() enforces the admissible region.
struct CannParams {
  int dims = 1;         // 1 (ring) or 3 (torus)
  int n_per_axis = 37;  // neurons per axis
  double tau = 1.0;     // synaptic time constant
  double dt = 0.05;     // integration step; must satisfy dt <= tau/10
  double rho = 0.0;     // neuron density; defaults() sets n_per_axis / (2*pi)
  double j0 = 4.0;      // recurrent kernel amplitude
  double a = 0.5;       // kernel width (radians)
  double k = 0.0;       // normalization constant; defaults() sets 0.3 * critical_k()
  double a_ext = 10.0;  // external input amplitude
  double b_ext = 1.0;   // external input width coefficient
  KernelExponent kernel_exponent = KernelExponent::kSquared;

  // Stable-bump defaults for the given geometry.
  static CannParams defaults(int dims, int n_per_axis = 37);

  // k_c = rho * j0^2 / (8 * sqrt(2*pi*a)); the bump regime requires 0 < k < k_c.
  double critical_k() const;

  int neuron_count() const;  // n_per_axis^dims

  // Throws InputDomainError when any invariant is violated.
  void validate() const;
};

// Synaptic inputs and firing rates, flattened with axis x slowest:
// index = (ix * n + iy) * n + iz for dims == 3.
struct BumpState {
  std::vector<double> u;
  std::vector<double> r;
};

// Per-axis sums of a 3D activity volume (SX, SY, SZ). Each sums to the
// grand total of the volume.
struct AxisReduction {
  std::vector<double> sx, sy, sz;
};

// Population-vector decode of a 1D activity array.
struct Decoded1d {
  double theta;  // atan2 of the activity-weighted sine/cosine sums, in (-pi, pi]
  double y;      // theta mapped to neuron coordinates, in [0, n)
  double num;    // sine-weighted sum (the arctangent numerator)
  double den;    // cosine-weighted sum (the arctangent denominator)
};

struct Decoded3d {
  Decoded1d x, y, z;
};

// Recurrent connection kernel. In squared mode the torus kernel factorizes
// into per-axis profiles (amplitude applied once); in linear mode the 3D
// kernel does not factorize and a full displacement stencil is kept.
struct Kernel {
  int dims = 1;
  int n = 0;
  KernelExponent mode = KernelExponent::kSquared;
  double amplitude = 0.0;                // j0 / sqrt(2*pi*a)
  std::vector<double> axis_profile;      // unit-amplitude per-axis profile, length n
  std::vector<double> stencil;           // linear 3D mode only: n^3 offsets, amplitude included

  // Kernel value for a displacement given per-axis index offsets.
  double at(std::span<const int> delta_idx) const;
};

Kernel build_kernel(const CannParams& params);

// r_i = [u_i]_+^2 / (1 + k * rho * sum_j [u_j]_+^2)
std::vector<double> firing_rates(const CannParams& params, std::span<const double> u);

// Decodes a 1D activity array (Eq.-7/8-style population vector).
// Throws ZeroActivityError when the weighted sums cancel.
Decoded1d decode_1d(std::span<const double> u, int n);

AxisReduction reduce_3d(std::span<const double> u, int n);

// decode_1d applied to each axis reduction of a 3D volume.
Decoded3d decode_3d(std::span<const double> u, int n);

// Outer product SX (x) SY (x) SZ, rescaled so its grand total equals the
// grand total of SX. Approximate inverse of reduce_3d, used for heatmaps.
std::vector<double> reconstruct_bump(const AxisReduction& red);

// Result of run_cann_sequence. `labels` has label_width doubles per frame:
// (num, den) for 1D, (num_x, den_x, num_y, den_y, num_z, den_z) for 3D.
// `decoded` has dims doubles per frame (theta per axis).
struct CannRun {
  int frames = 0;
  int label_width = 0;
  std::vector<double> labels;
  std::vector<double> decoded;
  std::vector<double> states;  // frames * n^dims synaptic inputs, when requested
};

// Reference simulator. Holds the geometry and prepared kernel; step state
// is owned by the caller, so distinct instances (and distinct states) may
// be used from distinct threads.
class Simulator {
 public:
  // dense_recurrent selects the O(N^2) pairwise evaluation of the
  // recurrent term (cross-check path, n_per_axis <= 17).
  explicit Simulator(const CannParams& params, bool dense_recurrent = false);

  const CannParams& params() const { return params_; }
  const Kernel& kernel() const { return kernel_; }

  // Preferred ring value of neuron i on any axis: i * 2*pi / n.
  double pref(int i) const { return prefs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& prefs() const { return prefs_; }

  BumpState zero_state() const;

  // External drive for a stimulus location (size dims, each in [0, 2*pi)
  // after wrapping). Throws InputDomainError on non-finite input.
  std::vector<double> external_input(std::span<const double> p_ext) const;

  // One explicit-Euler update:
  //   u += (dt/tau) * (-u + rho * (J (*) r) + i_ext)
  // with r recomputed from u before and after. Throws ShapeError on size
  // mismatch and NumericError if the state leaves the finite range.
  void step(BumpState& state, std::span<const double> i_ext) const;

  // rho * (J (*) r): the recurrent term of the update, exposed so tests can
  // compare the fast path against the dense pairwise evaluation.
  std::vector<double> recurrent_drive(std::span<const double> r) const;

 private:
  void convolve(std::span<const double> r, std::vector<double>& out) const;
  void convolve_dense(std::span<const double> r, std::vector<double>& out) const;

  CannParams params_;
  Kernel kernel_;
  std::vector<double> prefs_;
  bool dense_;
  mutable std::vector<double> scratch_a_, scratch_b_;
};

// Drives the simulator with one stimulus per frame (dims values each,
// wrapped internally to [0, 2*pi)), integrating settle_steps updates per
// frame from the zero state, and emits per-frame decode labels.
CannRun run_cann_sequence(const CannParams& params, std::span<const double> inputs,
                          int settle_steps = 10, bool keep_states = false);

}  // namespace cannpi::cann
