// Copyright 2026 The d2dcache Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "d2dcache/simulator.h"

#include <openssl/sha.h>

#include <algorithm>
#include <random>

namespace d2dcache {

FileLibrary::FileLibrary(std::vector<Bytes> files) : files_(std::move(files)) {
  if (files_.empty()) throw SimulationError("library has no files");
  const std::size_t size = files_.front().size();
  if (size == 0) throw SimulationError("library files are empty");
  for (const auto& f : files_) {
    if (f.size() != size) {
      throw SimulationError("library files differ in size");
    }
  }
}

FileLibrary FileLibrary::Synthetic(int N, std::size_t B, std::uint64_t seed) {
  if (N < 1) throw SimulationError("library needs N >= 1");
  if (B < 1) throw SimulationError("library needs B >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Bytes> files(N, Bytes(B));
  for (auto& f : files) {
    std::size_t i = 0;
    while (i < B) {
      std::uint64_t word = rng();
      for (int b = 0; b < 8 && i < B; ++b, ++i) {
        f[i] = static_cast<std::uint8_t>(word & 0xff);
        word >>= 8;
      }
    }
  }
  FileLibrary lib(std::move(files));
  lib.seed_ = seed;
  return lib;
}

std::size_t PacketLength(std::size_t file_bytes, int F) {
  if (F < 1) throw SimulationError("F must be positive");
  return (file_bytes + F - 1) / F;
}

std::vector<Bytes> SplitFile(const Bytes& file, int F) {
  const std::size_t len = PacketLength(file.size(), F);
  std::vector<Bytes> packets(F, Bytes(len, 0));
  for (std::size_t i = 0; i < file.size(); ++i) {
    packets[i / len][i % len] = file[i];
  }
  return packets;
}

Bytes JoinPackets(std::span<const Bytes> packets, std::size_t original_len) {
  Bytes out;
  for (const auto& p : packets) out.insert(out.end(), p.begin(), p.end());
  if (out.size() < original_len) {
    throw SimulationError("packets are shorter than the original file");
  }
  out.resize(original_len);
  return out;
}

std::size_t CacheContent::TotalBytes() const {
  std::size_t total = 0;
  for (const auto& [id, bytes] : packets) total += bytes.size();
  return total;
}

std::vector<CacheContent> Place(const Dpda& d, const FileLibrary& lib) {
  const PdaArray& a = d.array();
  std::vector<std::vector<Bytes>> split;
  split.reserve(lib.N());
  for (int n = 0; n < lib.N(); ++n) split.push_back(SplitFile(lib.file(n), a.rows()));

  std::vector<CacheContent> caches(a.cols());
  for (int k = 0; k < a.cols(); ++k) {
    caches[k].user = k;
    caches[k].num_files = lib.N();
    for (int j = 0; j < a.rows(); ++j) {
      if (!a.at(j, k).is_star()) continue;
      caches[k].cached_packets.push_back(j);
      for (int n = 0; n < lib.N(); ++n) {
        caches[k].packets.emplace(PacketId{n, j}, split[n][j]);
      }
    }
  }
  return caches;
}

namespace {

void XorInto(Bytes& acc, const Bytes& other) {
  if (acc.size() != other.size()) {
    throw SimulationError("packet length mismatch in XOR");
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= other[i];
}

}  // namespace

std::vector<Transmission> Deliver(const Dpda& d,
                                  const std::vector<CacheContent>& caches,
                                  const std::vector<int>& demand) {
  const PdaArray& a = d.array();
  if (static_cast<int>(demand.size()) != a.cols()) {
    throw SimulationError("demand has " + std::to_string(demand.size()) +
                          " entries, expected K = " + std::to_string(a.cols()));
  }
  if (static_cast<int>(caches.size()) != a.cols()) {
    throw SimulationError("cache count does not match K");
  }
  for (int k = 0; k < a.cols(); ++k) {
    if (demand[k] < 0 || demand[k] >= caches[k].num_files) {
      throw SimulationError("demand of user " + std::to_string(k + 1) +
                            " is out of range");
    }
  }

  std::vector<Transmission> out(d.params().S);
  for (int s = 1; s <= d.params().S; ++s) {
    out[s - 1].symbol = s;
    out[s - 1].sender = d.Sender(s);
  }
  for (int j = 0; j < a.rows(); ++j) {
    for (int k = 0; k < a.cols(); ++k) {
      const auto e = a.at(j, k);
      if (!e.is_star()) out[e.symbol() - 1].operands.push_back({k, j, demand[k]});
    }
  }
  for (auto& t : out) {
    const CacheContent& sender = caches[t.sender];
    for (const auto& op : t.operands) {
      auto it = sender.packets.find({op.file, op.packet});
      if (it == sender.packets.end()) {
        throw SimulationError("user " + std::to_string(t.sender + 1) +
                              " cannot send symbol " + std::to_string(t.symbol) +
                              ": packet " + std::to_string(op.packet + 1) +
                              " of file " + std::to_string(op.file + 1) +
                              " is not cached");
      }
      if (t.payload.empty()) {
        t.payload = it->second;
      } else {
        XorInto(t.payload, it->second);
      }
    }
  }
  return out;
}

bool DecodeResult::one_shot() const {
  return std::all_of(transmissions_used.begin(), transmissions_used.end(),
                     [](int used) { return used <= 1; });
}

DecodeResult Decode(int user, const CacheContent& cache,
                    std::span<const Transmission> transmissions,
                    int demanded_file, int F, std::size_t file_bytes) {
  DecodeResult result;
  result.transmissions_used.assign(F, 0);
  std::vector<Bytes> packets(F);
  for (int j = 0; j < F; ++j) {
    auto cached = cache.packets.find({demanded_file, j});
    if (cached != cache.packets.end()) {
      packets[j] = cached->second;
      ++result.cached_packets;
      continue;
    }
    const Transmission* match = nullptr;
    for (const auto& t : transmissions) {
      for (const auto& op : t.operands) {
        if (op.user != user || op.packet != j) continue;
        if (match != nullptr) {
          throw SimulationError("user " + std::to_string(user + 1) +
                                " has more than one transmission for packet " +
                                std::to_string(j + 1));
        }
        match = &t;
      }
    }
    if (match == nullptr) {
      throw SimulationError("user " + std::to_string(user + 1) +
                            " has no transmission for packet " +
                            std::to_string(j + 1));
    }
    Bytes value = match->payload;
    for (const auto& op : match->operands) {
      if (op.user == user && op.packet == j) continue;
      auto it = cache.packets.find({op.file, op.packet});
      if (it == cache.packets.end()) {
        throw SimulationError(
            "user " + std::to_string(user + 1) + " cannot cancel packet " +
            std::to_string(op.packet + 1) + " of file " +
            std::to_string(op.file + 1) + " in symbol " +
            std::to_string(match->symbol));
      }
      XorInto(value, it->second);
    }
    packets[j] = std::move(value);
    result.transmissions_used[j] = 1;
    ++result.recovered_packets;
  }
  result.file = JoinPackets(packets, file_bytes);
  return result;
}

bool SimulationReport::all_decoded() const {
  return std::all_of(users.begin(), users.end(),
                     [](const UserOutcome& u) { return u.decoded_ok; });
}

SimulationReport Run(const Dpda& d, const std::vector<int>& demand,
                     const FileLibrary& lib) {
  const PdaParams& p = d.params();
  for (std::size_t k = 0; k < demand.size(); ++k) {
    if (demand[k] < 0 || demand[k] >= lib.N()) {
      throw SimulationError("demand of user " + std::to_string(k + 1) +
                            " is not a file in [1, " +
                            std::to_string(lib.N()) + "]");
    }
  }
  SimulationReport report;
  report.demand = demand;
  report.F = p.F;
  report.packet_length = PacketLength(lib.B(), p.F);
  if (Rational(p.Z, p.F) < Rational(1, p.K)) {
    report.warnings.push_back("Z/F < 1/K: cache memory below N/K");
  }
  if (lib.B() % p.F != 0) {
    report.warnings.push_back("B is not a multiple of F; last packet padded");
  }

  const auto caches = Place(d, lib);
  report.transmissions = Deliver(d, caches, demand);
  report.measured_load =
      Rational(static_cast<long long>(report.transmissions.size()), p.F);

  bool one_shot = true;
  for (int k = 0; k < p.K; ++k) {
    UserOutcome u;
    u.user = k;
    u.demanded_file = demand[k];
    try {
      auto decoded = Decode(k, caches[k], report.transmissions, demand[k], p.F,
                            lib.B());
      u.cached_packets = decoded.cached_packets;
      u.recovered_packets = decoded.recovered_packets;
      for (int used : decoded.transmissions_used) u.transmissions_used += used;
      u.one_shot = decoded.one_shot() &&
                   u.transmissions_used == decoded.recovered_packets &&
                   decoded.cached_packets + decoded.recovered_packets == p.F;
      u.decoded_ok = decoded.file == lib.file(demand[k]);
      u.digest = Sha256Hex(decoded.file);
      if (!u.decoded_ok) u.error = "decoded bytes differ from the library file";
    } catch (const SimulationError& e) {
      u.error = e.what();
    }
    one_shot = one_shot && u.one_shot;
    report.users.push_back(std::move(u));
  }
  report.one_shot_verified = one_shot;
  return report;
}

SimulationReport Run(const Dpda& d, const std::vector<int>& demand,
                     const LibrarySpec& spec) {
  return Run(d, demand, FileLibrary::Synthetic(spec.N, spec.B, spec.seed));
}

std::vector<int> RandomDemand(int K, int N, std::uint64_t seed) {
  if (K < 1 || N < 1) throw SimulationError("random demand needs K, N >= 1");
  std::mt19937_64 rng(seed);
  const std::uint64_t n = static_cast<std::uint64_t>(N);
  const std::uint64_t limit = rng.max() - rng.max() % n;
  std::vector<int> demand(K);
  for (auto& d : demand) {
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    d = static_cast<int>(x % n);
  }
  return demand;
}

std::string Sha256Hex(std::span<const std::uint8_t> data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(data.data(), data.size(), digest);
  static const char* const kHex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * SHA256_DIGEST_LENGTH);
  for (unsigned char c : digest) {
    out.push_back(kHex[c >> 4]);
    out.push_back(kHex[c & 0xf]);
  }
  return out;
}

}  // namespace d2dcache
