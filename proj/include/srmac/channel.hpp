// SPDX-License-Identifier: Apache-2.0
//
// srmac — sparse regression codes over MIMO multiple-access channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace srmac {

using cplx = std::complex<double>;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;
using VecD = Eigen::VectorXd;

/// Tap-delay profile: K path delays (seconds) and average powers (dB),
/// plus the OFDM geometry used to turn taps into per-subcarrier gains.
struct ChannelProfile {
  std::vector<double> delays_s;
  std::vector<double> powers_db;
  double bandwidth_hz = 40e6;
  double carrier_hz = 4e9;

  /// The standard 23-tap TDL-A table (normalized delays scaled by
  /// delay_spread_s).
  static ChannelProfile tdl_a(double delay_spread_s = 100e-9,
                              double bandwidth_hz = 40e6,
                              double carrier_hz = 4e9);

  /// Single tap at delay 0 with 0 dB power: a flat channel.
  static ChannelProfile single_tap(double bandwidth_hz = 40e6,
                                   double carrier_hz = 4e9);

  static ChannelProfile from_file(const std::string& path);
  void to_file(const std::string& path) const;
};

/// One user's static MIMO channel. The full matrix H (of shape
/// (mr*m*n_blocks) x (mt*m*n_blocks)) is an mr x mt grid of block-diagonal
/// matrices, each repeating the same m x m block n_blocks times; only the
/// per-pair m x m blocks are stored.
///
/// Vector layout: transmit index = (t*n_blocks + blk)*m + chip for transmit
/// antenna t; receive index = (r*n_blocks + blk)*m + chip.
class BlockFadingChannel {
 public:
  /// General construction from an mr x mt grid (row-major over (r, t)) of
  /// dense m x m blocks.
  BlockFadingChannel(int user_id, int m, int n_blocks, int mr, int mt,
                     std::vector<MatC> blocks, double power_gain_db = 0.0);

  /// Diagonal-block construction (frequency-domain OFDM channels).
  BlockFadingChannel(int user_id, int m, int n_blocks, int mr, int mt,
                     std::vector<VecC> diag_blocks, double power_gain_db = 0.0);

  /// OFDM frequency response of a tapped-delay-line channel with
  /// independent per-(tap, antenna-pair) uniform phases against shared
  /// delays. Deterministic given seed.
  static BlockFadingChannel tdl(int user_id, std::uint64_t seed,
                                const ChannelProfile& profile, int m,
                                int n_blocks, int mr, int mt,
                                double power_gain_db);

  int user_id() const { return user_id_; }
  int m() const { return m_; }
  int n_blocks() const { return n_blocks_; }
  int mr() const { return mr_; }
  int mt() const { return mt_; }
  double power_gain_db() const { return power_gain_db_; }
  bool diagonal() const { return diagonal_; }
  int rows() const { return mr_ * m_ * n_blocks_; }
  int cols() const { return mt_ * m_ * n_blocks_; }

  /// y = H x, computed blockwise.
  VecC apply(const VecC& x) const;

  /// x = H^dagger y.
  VecC apply_adjoint(const VecC& y) const;

  /// The (m*mr) x (m*mt) representative chip-block of H (one of the
  /// n_blocks identical repetitions under blockwise ordering).
  MatC rep_block() const;

  /// Representative block of H H^dagger: (m*mr) x (m*mr), Hermitian PSD.
  MatC gram_rep() const;

  /// Portable text dump for reproducibility.
  std::string to_json_string() const;
  static BlockFadingChannel from_json_string(const std::string& text);

 private:
  void check_dims() const;
  const MatC& dense_block(int r, int t) const {
    return dense_blocks_[static_cast<std::size_t>(r) * mt_ + t];
  }
  const VecC& diag_block(int r, int t) const {
    return diag_blocks_[static_cast<std::size_t>(r) * mt_ + t];
  }

  int user_id_;
  int m_, n_blocks_, mr_, mt_;
  double power_gain_db_;
  bool diagonal_;
  std::vector<MatC> dense_blocks_;  // row-major (r, t); scaled by gain
  std::vector<VecC> diag_blocks_;
};

class GramResolvent;

/// The multi-user ensemble: all users share m, n_blocks and mr; sigma2 is
/// the complex noise variance (linear power).
class MacChannelSet {
 public:
  MacChannelSet(std::vector<BlockFadingChannel> users, double sigma2);

  int num_users() const { return static_cast<int>(users_.size()); }
  const BlockFadingChannel& user(int u) const { return users_.at(u); }
  double sigma2() const { return sigma2_; }
  double snr() const { return 1.0 / sigma2_; }
  int m() const { return users_.front().m(); }
  int n_blocks() const { return users_.front().n_blocks(); }
  int mr() const { return users_.front().mr(); }
  int m_bar() const { return m() * n_blocks(); }
  int rx_dim() const { return mr() * m_bar(); }

  MacChannelSet with_sigma2(double sigma2) const {
    return MacChannelSet(users_, sigma2);
  }

  /// Representative block of H_u H_u^dagger.
  const MatC& gram(int user) const;

  /// Sigma(v) = (sigma2 I + sum_u v_u H_u H_u^dagger)^{-1} in compressed
  /// block form; one (m*mr)^3 factorization.
  GramResolvent resolvent(const VecD& v) const;

 private:
  std::vector<BlockFadingChannel> users_;
  std::vector<MatC> grams_;  // cached per-user representative Gram blocks
  double sigma2_;
};

/// Compressed representation of Sigma(v): a single (m*mr) x (m*mr)
/// Hermitian positive definite block repeated across n_blocks.
class GramResolvent {
 public:
  GramResolvent(MatC block, VecD v, double sigma2, int m, int mr,
                int n_blocks);

  const MatC& rep_block() const { return block_; }
  const VecD& variances() const { return v_; }
  double sigma2() const { return sigma2_; }

  /// Apply Sigma to a full receive-side vector (length mr*m*n_blocks).
  VecC apply(const VecC& y) const;

  /// Trace of the full operator: n_blocks * tr(rep_block).
  double trace() const;

 private:
  MatC block_;
  VecD v_;
  double sigma2_;
  int m_, mr_, n_blocks_;
};

/// chi_u = (1/n_u) tr(Sigma H_u H_u^dagger), using compressed blocks.
double chi(const MacChannelSet& channels, const GramResolvent& resolvent,
           int user, int n_u);

}  // namespace srmac
