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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "srmac/channel.hpp"

namespace srmac {

/// Per-user code geometry: L sections of size B, signal length N = B*L,
/// codeword length M, rate R = L log(B) / m_bar nats per received block
/// symbol.
class CodeParams {
 public:
  CodeParams(int b, int l, int m_len, int m_bar);

  int b() const { return b_; }
  int l() const { return l_; }
  int n_len() const { return n_len_; }
  int m_len() const { return m_len_; }
  int m_bar() const { return m_bar_; }
  double beta() const { return static_cast<double>(m_len_) / n_len_; }
  double rate_nats() const { return rate_nats_; }

 private:
  int b_, l_, n_len_, m_len_, m_bar_;
  double rate_nats_;
};

/// Nonincreasing per-section squared amplitudes summing to N = B*L.
class PowerAllocation {
 public:
  PowerAllocation(VecD p, int n_len);

  const VecD& p() const { return p_; }
  int sections() const { return static_cast<int>(p_.size()); }
  int n_len() const { return n_len_; }

  /// Residual power P_l = sum_{k >= l} p_k / N (1-based l).
  VecD residual_powers() const;

 private:
  VecD p_;
  int n_len_;
};

struct Message {
  std::vector<int> indices;  // one position per section, each in [0, B)
};

enum class DictKind { kPartialHaar, kFastTransform };

DictKind dict_kind_from_string(const std::string& s);
std::string to_string(DictKind k);

/// Seeded semi-unitary dictionary Xi (m_len x n_len, orthonormal rows) with
/// matrix-free forward/adjoint application. Immutable and reentrant.
///
/// fast-transform: Xi = S F D P with P a random permutation, D a random
/// unit-modulus diagonal, F the normalized DFT and S a random coordinate
/// selection; applies in O(n log n). partial-haar: explicit row-orthonormal
/// Gaussian matrix, available up to n_len = 4096.
class DictionaryOp {
 public:
  static DictionaryOp build(DictKind kind, std::uint64_t seed, int m_len,
                            int n_len);

  DictKind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  int m_len() const { return m_len_; }
  int n_len() const { return n_len_; }

  /// x = Xi s (length m_len).
  VecC forward(const VecC& s) const;

  /// s = Xi^dagger x (length n_len).
  VecC adjoint(const VecC& x) const;

 private:
  DictionaryOp() = default;

  DictKind kind_ = DictKind::kFastTransform;
  std::uint64_t seed_ = 0;
  int m_len_ = 0, n_len_ = 0;
  std::vector<int> perm_;      // fast-transform permutation
  std::vector<int> selection_; // fast-transform selected rows
  VecC phase_;                 // fast-transform diagonal
  MatC rows_;                  // partial-haar explicit matrix
  struct FftPlans;
  std::shared_ptr<const FftPlans> plans_;
};

/// Uniform i.i.d. section indices; deterministic given seed.
Message sample_message(const CodeParams& params, std::uint64_t seed);

/// Position-modulated sparse signal: section l holds sqrt(p_l) at the
/// message index, zeros elsewhere; ||s||^2 = N.
VecC modulate(const Message& msg, const PowerAllocation& pa,
              const CodeParams& params);

/// x = Xi s.
VecC encode(const VecC& s, const DictionaryOp& dict);

/// Columnar debug dump (index, re, im) of a complex vector.
void export_columnar(const VecC& v, const std::string& path);

}  // namespace srmac
