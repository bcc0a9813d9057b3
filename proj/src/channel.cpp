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

#include "srmac/channel.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "srmac/errors.hpp"
#include "srmac/rng.hpp"

namespace srmac {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// TR 38.901 TDL-A: 23 taps, delays normalized by the RMS delay spread.
const double kTdlANormDelay[23] = {
    0.0000, 0.3819, 0.4025, 0.5868, 0.4610, 0.5375, 0.6708, 0.5750,
    0.7618, 1.5375, 1.8978, 2.2242, 2.1718, 2.4942, 2.5119, 3.0582,
    4.0810, 4.4579, 4.5695, 4.7966, 5.0066, 5.3043, 9.6586};
const double kTdlAPowerDb[23] = {
    -13.4, 0.0,   -2.2,  -4.0,  -6.0,  -8.2,  -9.9,  -10.5,
    -7.5,  -15.9, -6.6,  -16.7, -12.4, -15.2, -10.8, -11.3,
    -12.7, -16.2, -18.3, -18.9, -16.6, -19.9, -29.7};
}  // namespace

ChannelProfile ChannelProfile::tdl_a(double delay_spread_s,
                                     double bandwidth_hz, double carrier_hz) {
  ChannelProfile p;
  p.bandwidth_hz = bandwidth_hz;
  p.carrier_hz = carrier_hz;
  p.delays_s.assign(23, 0.0);
  p.powers_db.assign(23, 0.0);
  for (int k = 0; k < 23; ++k) {
    p.delays_s[k] = kTdlANormDelay[k] * delay_spread_s;
    p.powers_db[k] = kTdlAPowerDb[k];
  }
  return p;
}

ChannelProfile ChannelProfile::single_tap(double bandwidth_hz,
                                          double carrier_hz) {
  ChannelProfile p;
  p.bandwidth_hz = bandwidth_hz;
  p.carrier_hz = carrier_hz;
  p.delays_s = {0.0};
  p.powers_db = {0.0};
  return p;
}

ChannelProfile ChannelProfile::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open profile file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw config_error("profile parse error in " + path + ": " + e.what());
  }
  ChannelProfile p;
  try {
    p.delays_s = j.at("delays_s").get<std::vector<double>>();
    p.powers_db = j.at("powers_db").get<std::vector<double>>();
    p.bandwidth_hz = j.value("bandwidth_hz", 40e6);
    p.carrier_hz = j.value("carrier_hz", 4e9);
  } catch (const nlohmann::json::exception& e) {
    throw config_error("profile fields invalid in " + path + ": " + e.what());
  }
  if (p.delays_s.size() != p.powers_db.size() || p.delays_s.empty())
    throw config_error("profile needs matching nonempty delays_s/powers_db");
  return p;
}

void ChannelProfile::to_file(const std::string& path) const {
  nlohmann::json j;
  j["delays_s"] = delays_s;
  j["powers_db"] = powers_db;
  j["bandwidth_hz"] = bandwidth_hz;
  j["carrier_hz"] = carrier_hz;
  std::ofstream out(path);
  if (!out) throw config_error("cannot write profile file: " + path);
  out << j.dump(2) << "\n";
}

BlockFadingChannel::BlockFadingChannel(int user_id, int m, int n_blocks,
                                       int mr, int mt, std::vector<MatC> blocks,
                                       double power_gain_db)
    : user_id_(user_id),
      m_(m),
      n_blocks_(n_blocks),
      mr_(mr),
      mt_(mt),
      power_gain_db_(power_gain_db),
      diagonal_(false),
      dense_blocks_(std::move(blocks)) {
  check_dims();
  if (dense_blocks_.size() != static_cast<std::size_t>(mr_) * mt_)
    throw std::invalid_argument("BlockFadingChannel: need mr*mt blocks");
  const double scale = std::pow(10.0, power_gain_db_ / 20.0);
  double fro = 0.0;
  for (auto& b : dense_blocks_) {
    if (b.rows() != m_ || b.cols() != m_)
      throw std::invalid_argument("BlockFadingChannel: block is not m x m");
    b *= scale;
    fro += b.squaredNorm();
  }
  if (!(fro > 0.0) || !std::isfinite(fro))
    throw std::invalid_argument("degenerate channel: zero or non-finite gain");
}

BlockFadingChannel::BlockFadingChannel(int user_id, int m, int n_blocks,
                                       int mr, int mt,
                                       std::vector<VecC> diag_blocks,
                                       double power_gain_db)
    : user_id_(user_id),
      m_(m),
      n_blocks_(n_blocks),
      mr_(mr),
      mt_(mt),
      power_gain_db_(power_gain_db),
      diagonal_(true),
      diag_blocks_(std::move(diag_blocks)) {
  check_dims();
  if (diag_blocks_.size() != static_cast<std::size_t>(mr_) * mt_)
    throw std::invalid_argument("BlockFadingChannel: need mr*mt blocks");
  const double scale = std::pow(10.0, power_gain_db_ / 20.0);
  double fro = 0.0;
  for (auto& b : diag_blocks_) {
    if (b.size() != m_)
      throw std::invalid_argument("BlockFadingChannel: diag block length != m");
    b *= scale;
    fro += b.squaredNorm();
  }
  if (!(fro > 0.0) || !std::isfinite(fro))
    throw std::invalid_argument("degenerate channel: zero or non-finite gain");
}

void BlockFadingChannel::check_dims() const {
  if (m_ < 1) throw std::invalid_argument("BlockFadingChannel: m >= 1");
  if (n_blocks_ < 1)
    throw std::invalid_argument("BlockFadingChannel: n_blocks >= 1");
  if (mr_ < 1 || mt_ < 1)
    throw std::invalid_argument("BlockFadingChannel: mr, mt >= 1");
}

BlockFadingChannel BlockFadingChannel::tdl(int user_id, std::uint64_t seed,
                                           const ChannelProfile& profile,
                                           int m, int n_blocks, int mr, int mt,
                                           double power_gain_db) {
  if (m < 1) throw std::invalid_argument("tdl: m >= 1");
  const std::size_t K = profile.delays_s.size();
  if (K == 0 || profile.powers_db.size() != K)
    throw config_error("tdl: profile needs matching nonempty delays/powers");

  // Tap amplitudes, normalized to unit total power so power_gain_db is the
  // per-user scale.
  std::vector<double> amp(K);
  double total = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    const double pw = std::pow(10.0, profile.powers_db[k] / 10.0);
    amp[k] = pw;
    total += pw;
  }
  if (!(total > 0.0)) throw config_error("degenerate channel: zero-power profile");
  for (auto& a : amp) a = std::sqrt(a / total);

  const double df = profile.bandwidth_hz / m;
  std::vector<VecC> blocks;
  blocks.reserve(static_cast<std::size_t>(mr) * mt);
  Rng rng(Rng::mix({seed, static_cast<std::uint64_t>(user_id)}));
  for (int r = 0; r < mr; ++r) {
    for (int t = 0; t < mt; ++t) {
      VecC h = VecC::Zero(m);
      for (std::size_t k = 0; k < K; ++k) {
        const double theta = kTwoPi * rng.uniform();
        const cplx gain = amp[k] * cplx(std::cos(theta), std::sin(theta));
        const double tau = profile.delays_s[k];
        for (int i = 0; i < m; ++i) {
          const double f = profile.carrier_hz + i * df;
          const double phase = -kTwoPi * f * tau;
          // Subcarrier phases modulo 2*pi: reduce before cos/sin for accuracy
          // at multi-GHz carrier frequencies.
          const double reduced = phase - kTwoPi * std::floor(phase / kTwoPi);
          h(i) += gain * cplx(std::cos(reduced), std::sin(reduced));
        }
      }
      blocks.push_back(std::move(h));
    }
  }
  return BlockFadingChannel(user_id, m, n_blocks, mr, mt, std::move(blocks),
                            power_gain_db);
}

VecC BlockFadingChannel::apply(const VecC& x) const {
  if (x.size() != cols())
    throw std::invalid_argument("apply: x has wrong length");
  VecC y = VecC::Zero(rows());
  for (int r = 0; r < mr_; ++r) {
    for (int t = 0; t < mt_; ++t) {
      for (int b = 0; b < n_blocks_; ++b) {
        const auto xseg = x.segment((static_cast<long>(t) * n_blocks_ + b) * m_, m_);
        auto yseg = y.segment((static_cast<long>(r) * n_blocks_ + b) * m_, m_);
        if (diagonal_)
          yseg.noalias() += diag_block(r, t).cwiseProduct(xseg);
        else
          yseg.noalias() += dense_block(r, t) * xseg;
      }
    }
  }
  return y;
}

VecC BlockFadingChannel::apply_adjoint(const VecC& y) const {
  if (y.size() != rows())
    throw std::invalid_argument("apply_adjoint: y has wrong length");
  VecC x = VecC::Zero(cols());
  for (int r = 0; r < mr_; ++r) {
    for (int t = 0; t < mt_; ++t) {
      for (int b = 0; b < n_blocks_; ++b) {
        const auto yseg = y.segment((static_cast<long>(r) * n_blocks_ + b) * m_, m_);
        auto xseg = x.segment((static_cast<long>(t) * n_blocks_ + b) * m_, m_);
        if (diagonal_)
          xseg.noalias() += diag_block(r, t).conjugate().cwiseProduct(yseg);
        else
          xseg.noalias() += dense_block(r, t).adjoint() * yseg;
      }
    }
  }
  return x;
}

MatC BlockFadingChannel::rep_block() const {
  MatC h = MatC::Zero(static_cast<long>(m_) * mr_, static_cast<long>(m_) * mt_);
  for (int r = 0; r < mr_; ++r) {
    for (int t = 0; t < mt_; ++t) {
      auto blockref = h.block(static_cast<long>(r) * m_,
                              static_cast<long>(t) * m_, m_, m_);
      if (diagonal_)
        blockref = diag_block(r, t).asDiagonal();
      else
        blockref = dense_block(r, t);
    }
  }
  return h;
}

MatC BlockFadingChannel::gram_rep() const {
  const MatC h = rep_block();
  MatC g = h * h.adjoint();
  // Symmetrize away rounding asymmetry.
  g = 0.5 * (g + MatC(g.adjoint()));
  return g;
}

std::string BlockFadingChannel::to_json_string() const {
  nlohmann::json j;
  j["user_id"] = user_id_;
  j["m"] = m_;
  j["n_blocks"] = n_blocks_;
  j["mr"] = mr_;
  j["mt"] = mt_;
  j["power_gain_db"] = power_gain_db_;
  j["diagonal"] = diagonal_;
  auto dump_vec = [](const VecC& v) {
    nlohmann::json a = nlohmann::json::array();
    for (long i = 0; i < v.size(); ++i)
      a.push_back({v(i).real(), v(i).imag()});
    return a;
  };
  nlohmann::json blocks = nlohmann::json::array();
  for (int r = 0; r < mr_; ++r) {
    for (int t = 0; t < mt_; ++t) {
      if (diagonal_) {
        blocks.push_back(dump_vec(diag_block(r, t)));
      } else {
        nlohmann::json rows = nlohmann::json::array();
        const MatC& b = dense_block(r, t);
        for (int i = 0; i < m_; ++i) {
          VecC row = b.row(i).transpose();
          rows.push_back(dump_vec(row));
        }
        blocks.push_back(rows);
      }
    }
  }
  j["blocks"] = blocks;
  return j.dump();
}

BlockFadingChannel BlockFadingChannel::from_json_string(
    const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("channel dump parse error: ") + e.what());
  }
  const int m = j.at("m"), n = j.at("n_blocks"), mr = j.at("mr"),
            mt = j.at("mt");
  const int user_id = j.at("user_id");
  const bool diagonal = j.at("diagonal");
  auto load_vec = [](const nlohmann::json& a) {
    VecC v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      v(static_cast<long>(i)) = cplx(a[i][0].get<double>(), a[i][1].get<double>());
    return v;
  };
  // Stored blocks already include the power gain; pass 0 dB here.
  if (diagonal) {
    std::vector<VecC> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(load_vec(b));
    return BlockFadingChannel(user_id, m, n, mr, mt, std::move(blocks), 0.0);
  }
  std::vector<MatC> blocks;
  for (const auto& b : j.at("blocks")) {
    MatC mat(m, m);
    for (int i = 0; i < m; ++i) mat.row(i) = load_vec(b[i]).transpose();
    blocks.push_back(std::move(mat));
  }
  return BlockFadingChannel(user_id, m, n, mr, mt, std::move(blocks), 0.0);
}

MacChannelSet::MacChannelSet(std::vector<BlockFadingChannel> users,
                             double sigma2)
    : users_(std::move(users)), sigma2_(sigma2) {
  if (users_.empty()) throw std::invalid_argument("MacChannelSet: no users");
  if (!(sigma2_ > 0.0) || !std::isfinite(sigma2_))
    throw std::invalid_argument("MacChannelSet: sigma2 must be positive");
  const int m = users_.front().m();
  const int n = users_.front().n_blocks();
  const int mr = users_.front().mr();
  for (const auto& u : users_) {
    if (u.m() != m || u.n_blocks() != n || u.mr() != mr)
      throw std::invalid_argument(
          "MacChannelSet: users must share m, n_blocks, mr");
  }
  grams_.reserve(users_.size());
  for (const auto& u : users_) grams_.push_back(u.gram_rep());
}

const MatC& MacChannelSet::gram(int user) const {
  return grams_.at(static_cast<std::size_t>(user));
}

GramResolvent MacChannelSet::resolvent(const VecD& v) const {
  if (v.size() != num_users())
    throw std::invalid_argument("resolvent: v length != num_users");
  for (long u = 0; u < v.size(); ++u) {
    if (!std::isfinite(v(u)) || v(u) < 0.0 || v(u) > 1.0)
      throw std::invalid_argument("resolvent: v_u must be finite in [0, 1]");
  }
  const long d = static_cast<long>(m()) * mr();
  MatC a = sigma2_ * MatC::Identity(d, d);
  for (int u = 0; u < num_users(); ++u)
    if (v(u) != 0.0) a.noalias() += v(u) * grams_[u];
  Eigen::LLT<MatC> llt(a);
  if (llt.info() != Eigen::Success)
    throw numerical_error("resolvent: factorization failed");
  MatC inv = llt.solve(MatC::Identity(d, d));
  inv = 0.5 * (inv + MatC(inv.adjoint()));
  return GramResolvent(std::move(inv), v, sigma2_, m(), mr(), n_blocks());
}

GramResolvent::GramResolvent(MatC block, VecD v, double sigma2, int m, int mr,
                             int n_blocks)
    : block_(std::move(block)),
      v_(std::move(v)),
      sigma2_(sigma2),
      m_(m),
      mr_(mr),
      n_blocks_(n_blocks) {}

VecC GramResolvent::apply(const VecC& y) const {
  const long total = static_cast<long>(mr_) * m_ * n_blocks_;
  if (y.size() != total)
    throw std::invalid_argument("GramResolvent::apply: wrong length");
  const long d = static_cast<long>(m_) * mr_;
  VecC out(total);
  VecC buf(d);
  for (int b = 0; b < n_blocks_; ++b) {
    for (int r = 0; r < mr_; ++r)
      buf.segment(static_cast<long>(r) * m_, m_) =
          y.segment((static_cast<long>(r) * n_blocks_ + b) * m_, m_);
    VecC res = block_ * buf;
    for (int r = 0; r < mr_; ++r)
      out.segment((static_cast<long>(r) * n_blocks_ + b) * m_, m_) =
          res.segment(static_cast<long>(r) * m_, m_);
  }
  return out;
}

double GramResolvent::trace() const {
  return n_blocks_ * block_.trace().real();
}

double chi(const MacChannelSet& channels, const GramResolvent& resolvent,
           int user, int n_u) {
  if (n_u <= 0) throw std::invalid_argument("chi: n_u must be positive");
  const MatC& g = channels.gram(user);
  const double block_trace =
      resolvent.rep_block().cwiseProduct(g.conjugate()).sum().real();
  return channels.n_blocks() * block_trace / n_u;
}

}  // namespace srmac
