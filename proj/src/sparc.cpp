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

#include "srmac/sparc.hpp"

#include <fftw3.h>

#include <cmath>
#include <fstream>
#include <mutex>
#include <numeric>

#include "srmac/errors.hpp"
#include "srmac/rng.hpp"

namespace srmac {

namespace {

constexpr int kPartialHaarCap = 4096;

// FFTW plan creation is not thread-safe; execution via fftw_execute_dft on
// caller-owned arrays is.
std::mutex& fftw_plan_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

CodeParams::CodeParams(int b, int l, int m_len, int m_bar)
    : b_(b), l_(l), m_len_(m_len), m_bar_(m_bar) {
  if (b_ < 2) throw std::invalid_argument("CodeParams: section size b >= 2");
  if (l_ < 1) throw std::invalid_argument("CodeParams: section count l >= 1");
  if (m_bar_ < 1) throw std::invalid_argument("CodeParams: m_bar >= 1");
  n_len_ = b_ * l_;
  if (m_len_ < 1 || m_len_ > n_len_)
    throw std::invalid_argument("CodeParams: need 1 <= m_len <= b*l");
  rate_nats_ = l_ * std::log(static_cast<double>(b_)) / m_bar_;
}

PowerAllocation::PowerAllocation(VecD p, int n_len)
    : p_(std::move(p)), n_len_(n_len) {
  const long n = p_.size();
  if (n < 1) throw std::invalid_argument("PowerAllocation: empty vector");
  double sum = 0.0;
  for (long i = 0; i < n; ++i) {
    if (!std::isfinite(p_(i)) || p_(i) < 0.0)
      throw std::invalid_argument("PowerAllocation: entries must be >= 0");
    if (i > 0 && p_(i) > p_(i - 1) * (1.0 + 1e-12) + 1e-12)
      throw std::invalid_argument("PowerAllocation: must be nonincreasing");
    sum += p_(i);
  }
  if (std::fabs(sum - n_len_) > 1e-9 * n_len_)
    throw std::invalid_argument("PowerAllocation: section powers must sum to N");
}

VecD PowerAllocation::residual_powers() const {
  const long L = p_.size();
  VecD out(L);
  double acc = 0.0;
  for (long l = L - 1; l >= 0; --l) {
    acc += p_(l);
    out(l) = acc / n_len_;
  }
  return out;
}

DictKind dict_kind_from_string(const std::string& s) {
  if (s == "partial-haar") return DictKind::kPartialHaar;
  if (s == "fast-transform") return DictKind::kFastTransform;
  throw config_error("unknown dictionary kind: " + s);
}

std::string to_string(DictKind k) {
  return k == DictKind::kPartialHaar ? "partial-haar" : "fast-transform";
}

struct DictionaryOp::FftPlans {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  int n = 0;
  ~FftPlans() {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
};

DictionaryOp DictionaryOp::build(DictKind kind, std::uint64_t seed, int m_len,
                                 int n_len) {
  if (m_len < 1 || n_len < 1 || m_len > n_len)
    throw std::invalid_argument("DictionaryOp: need 1 <= m_len <= n_len");
  DictionaryOp d;
  d.kind_ = kind;
  d.seed_ = seed;
  d.m_len_ = m_len;
  d.n_len_ = n_len;

  Rng rng(Rng::mix({seed, 0x5d1c7u, static_cast<std::uint64_t>(n_len)}));

  if (kind == DictKind::kPartialHaar) {
    if (n_len > kPartialHaarCap)
      throw std::invalid_argument(
          "partial-haar dictionary capped at n_len <= 4096; use "
          "fast-transform for larger codes");
    MatC g(n_len, m_len);  // columns will be orthonormalized
    for (int j = 0; j < m_len; ++j)
      for (int i = 0; i < n_len; ++i) g(i, j) = rng.cnormal();
    Eigen::HouseholderQR<MatC> qr(g);
    MatC q = qr.householderQ() * MatC::Identity(n_len, m_len);
    // Fix the phase convention so the factor is Haar-distributed.
    const MatC r = qr.matrixQR().topRows(m_len).triangularView<Eigen::Upper>();
    for (int j = 0; j < m_len; ++j) {
      const cplx diag = r(j, j);
      const double mag = std::abs(diag);
      if (mag > 0.0) q.col(j) *= diag / mag;
    }
    d.rows_ = q.adjoint();  // m_len x n_len with orthonormal rows
    return d;
  }

  // fast-transform
  d.perm_.resize(n_len);
  std::iota(d.perm_.begin(), d.perm_.end(), 0);
  for (int i = n_len - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i + 1)));
    std::swap(d.perm_[i], d.perm_[j]);
  }
  d.phase_ = VecC(n_len);
  for (int i = 0; i < n_len; ++i) {
    const double th = 6.283185307179586476925286766559 * rng.uniform();
    d.phase_(i) = cplx(std::cos(th), std::sin(th));
  }
  std::vector<int> all(n_len);
  std::iota(all.begin(), all.end(), 0);
  for (int i = n_len - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i + 1)));
    std::swap(all[i], all[j]);
  }
  d.selection_.assign(all.begin(), all.begin() + m_len);
  std::sort(d.selection_.begin(), d.selection_.end());

  auto plans = std::make_shared<FftPlans>();
  plans->n = n_len;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    std::vector<cplx> a(n_len), b(n_len);
    plans->fwd = fftw_plan_dft_1d(
        n_len, reinterpret_cast<fftw_complex*>(a.data()),
        reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans->bwd = fftw_plan_dft_1d(
        n_len, reinterpret_cast<fftw_complex*>(a.data()),
        reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  d.plans_ = std::move(plans);
  return d;
}

VecC DictionaryOp::forward(const VecC& s) const {
  if (s.size() != n_len_)
    throw std::invalid_argument("DictionaryOp::forward: wrong input length");
  if (kind_ == DictKind::kPartialHaar) return rows_ * s;

  VecC work(n_len_);
  for (int i = 0; i < n_len_; ++i) work(i) = phase_(i) * s(perm_[i]);
  VecC freq(n_len_);
  fftw_execute_dft(plans_->fwd,
                   reinterpret_cast<fftw_complex*>(work.data()),
                   reinterpret_cast<fftw_complex*>(freq.data()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_len_));
  VecC out(m_len_);
  for (int i = 0; i < m_len_; ++i) out(i) = freq(selection_[i]) * scale;
  return out;
}

VecC DictionaryOp::adjoint(const VecC& x) const {
  if (x.size() != m_len_)
    throw std::invalid_argument("DictionaryOp::adjoint: wrong input length");
  if (kind_ == DictKind::kPartialHaar) return rows_.adjoint() * x;

  const double scale = 1.0 / std::sqrt(static_cast<double>(n_len_));
  VecC freq = VecC::Zero(n_len_);
  for (int i = 0; i < m_len_; ++i) freq(selection_[i]) = x(i) * scale;
  VecC time(n_len_);
  fftw_execute_dft(plans_->bwd,
                   reinterpret_cast<fftw_complex*>(freq.data()),
                   reinterpret_cast<fftw_complex*>(time.data()));
  VecC out(n_len_);
  for (int i = 0; i < n_len_; ++i)
    out(perm_[i]) = std::conj(phase_(i)) * time(i);
  return out;
}

Message sample_message(const CodeParams& params, std::uint64_t seed) {
  Rng rng(Rng::mix({seed, 0x6d5647u}));
  Message msg;
  msg.indices.resize(params.l());
  for (int l = 0; l < params.l(); ++l)
    msg.indices[l] =
        static_cast<int>(rng.bounded(static_cast<std::uint64_t>(params.b())));
  return msg;
}

VecC modulate(const Message& msg, const PowerAllocation& pa,
              const CodeParams& params) {
  if (static_cast<int>(msg.indices.size()) != params.l())
    throw std::invalid_argument("modulate: message length != section count");
  if (pa.sections() != params.l() || pa.n_len() != params.n_len())
    throw std::invalid_argument("modulate: power allocation geometry mismatch");
  VecC s = VecC::Zero(params.n_len());
  for (int l = 0; l < params.l(); ++l) {
    const int idx = msg.indices[l];
    if (idx < 0 || idx >= params.b())
      throw std::invalid_argument("modulate: message index out of range");
    s(static_cast<long>(l) * params.b() + idx) = std::sqrt(pa.p()(l));
  }
  return s;
}

VecC encode(const VecC& s, const DictionaryOp& dict) {
  return dict.forward(s);
}

void export_columnar(const VecC& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot write columnar file: " + path);
  out << "index,re,im\n";
  char buf[96];
  for (long i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%ld,%.17g,%.17g\n", i, v(i).real(),
                  v(i).imag());
    out << buf;
  }
}

}  // namespace srmac
