#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <variant>

#include "monogamy/linalg.hpp"

namespace monogamy {

// Named states. All multi-qubit states are built with dims {2, 2, ..., 2}.

PureState bell();  // (|00> + |11>)/sqrt(2)
PureState basis_state(const Dims& dims, long index);
PureState ghz3();
PureState w3();
PureState w_n(int n);     // 2 <= n <= 12
PureState ones_n(int n);  // |1...1>, 1 <= n <= 12

// p |GHZ3><GHZ3| + (1-p) |W3><W3|, p in [0, 1].
DensityMatrix ghzw_mixture(double p);

// sqrt(p) |GHZ3> - exp(2 pi i j / 3) sqrt(1-p) |W3>, j in {0, 1, 2}.
PureState psi_j_p(int j, double p);

// alpha |1^N><1^N| + (1-alpha) |W_N><W_N| with alpha = 1/(N+1), 3 <= N <= 12.
DensityMatrix wn_ones_mixture(int n);

// Canonical three-qubit form
//   l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
struct AcinParams {
  double l0 = 1.0, l1 = 0.0, l2 = 0.0, l3 = 0.0, l4 = 0.0;
  double phi = 0.0;
};
PureState acin_standard(const AcinParams& params);

// Single cavity-reservoir pair after time kappa*t: |phi_t> = xi|10> + chi|01>.
struct CavityParams {
  double alpha = 1.0;
  double kappa_t = 0.0;

  // Throws unless alpha in [0,1] and kappa_t >= 0.
  static CavityParams make(double alpha, double kappa_t);

  double beta() const;
  double xi() const;   // exp(-kappa t / 2)
  double chi() const;  // sqrt(1 - exp(-kappa t))
};

// Subsystem order of cavity_output states.
inline constexpr int kCavity1 = 0;
inline constexpr int kReservoir1 = 1;
inline constexpr int kCavity2 = 2;
inline constexpr int kReservoir2 = 3;

// alpha|0000> + beta |phi_t>_{c1 r1} |phi_t>_{c2 r2}, ordered (c1, r1, c2, r2).
PureState cavity_output(double alpha, double kappa_t);
PureState cavity_output(const CavityParams& params);

// ---------------------------------------------------------------------------
// Seeded randomness.

// Mixes (master, index) into an independent 64-bit stream seed (SplitMix64
// finalizer), so sample i of a sweep never depends on how many samples ran
// before it.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) from the top 53 bits; platform independent.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();
  // Real and imaginary parts independent N(0, 1/2).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

PureState haar_random_pure(const Dims& dims, std::uint64_t seed);

// Partial trace of a Haar state on system (x) C^rank. Almost surely rank
// exactly `rank`.
DensityMatrix random_mixed(const Dims& dims, int rank, std::uint64_t seed);

// Random m x r isometry (orthonormal columns) from the QR of a Gaussian matrix.
Matrix random_isometry(int rows, int cols, Rng& rng);

// ---------------------------------------------------------------------------
// Plain-text state files.
//
//   dims d1 d2 ... dk
//   re im            (one line per amplitude, pure states)
// or
//   dims d1 d2 ... dk
//   rows n
//   re im            (n*n lines, row-major, density matrices)

using StateFile = std::variant<PureState, DensityMatrix>;

void write_state(std::ostream& out, const PureState& psi);
void write_state(std::ostream& out, const DensityMatrix& rho);
void save_state(const std::string& path, const StateFile& state);

// Throws ParseError (with the offending line number) on malformed input.
StateFile read_state(std::istream& in);
StateFile load_state(const std::string& path);

}  // namespace monogamy
