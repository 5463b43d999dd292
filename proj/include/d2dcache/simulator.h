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

// Byte-level D2D placement and delivery driven by a DPDA.
//
// Placement: file n is cut into F packets of ceil(B/F) bytes (the last one
// zero padded) and user k caches packet j of every file iff P[j][k] is a star.
// Delivery: for each symbol s, user phi(s) broadcasts the XOR of packet j of
// file d_k over all cells (j, k) holding s. Decoding only looks at the
// receiving user's cache and the transmissions (payload plus operand header),
// never at the array.
//
// Users, files and packets are 0-based in this API.

#ifndef D2DCACHE_SIMULATOR_H_
#define D2DCACHE_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "d2dcache/pda.h"
#include "d2dcache/rational.h"

namespace d2dcache {

using Bytes = std::vector<std::uint8_t>;

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileLibrary {
 public:
  // Throws SimulationError unless there is at least one file and all files
  // share one nonzero size.
  explicit FileLibrary(std::vector<Bytes> files);

  // N files of B bytes drawn from mt19937_64(seed).
  static FileLibrary Synthetic(int N, std::size_t B, std::uint64_t seed);

  int N() const { return static_cast<int>(files_.size()); }
  std::size_t B() const { return files_.front().size(); }
  const Bytes& file(int n) const { return files_.at(n); }
  const std::optional<std::uint64_t>& seed() const { return seed_; }

 private:
  std::vector<Bytes> files_;
  std::optional<std::uint64_t> seed_;
};

std::size_t PacketLength(std::size_t file_bytes, int F);
std::vector<Bytes> SplitFile(const Bytes& file, int F);
// Concatenates packets and truncates to `original_len`.
Bytes JoinPackets(std::span<const Bytes> packets, std::size_t original_len);

struct PacketId {
  int file;
  int packet;

  friend auto operator<=>(const PacketId&, const PacketId&) = default;
};

struct CacheContent {
  int user = 0;
  int num_files = 0;
  // Packet indices j cached for every file.
  std::vector<int> cached_packets;
  std::map<PacketId, Bytes> packets;

  bool Has(const PacketId& id) const { return packets.contains(id); }
  std::size_t TotalBytes() const;
};

std::vector<CacheContent> Place(const Dpda& d, const FileLibrary& lib);

// One XOR operand: packet `packet` of file `file`, intended for `user`.
struct Operand {
  int user;
  int packet;
  int file;
};

struct Transmission {
  int symbol;
  int sender;
  std::vector<Operand> operands;
  Bytes payload;
};

// `demand[k]` is the file requested by user k. Throws SimulationError on a
// bad demand or if a sender lacks an operand.
std::vector<Transmission> Deliver(const Dpda& d,
                                  const std::vector<CacheContent>& caches,
                                  const std::vector<int>& demand);

struct DecodeResult {
  Bytes file;
  int cached_packets = 0;
  int recovered_packets = 0;
  // transmissions_used[j] = number of transmissions consumed for packet j
  // (0 for cached packets).
  std::vector<int> transmissions_used;

  bool one_shot() const;
};

// Reassembles `demanded_file` for `user`. Throws SimulationError when a
// packet has no usable transmission, more than one candidate, or an operand
// missing from the cache.
DecodeResult Decode(int user, const CacheContent& cache,
                    std::span<const Transmission> transmissions,
                    int demanded_file, int F, std::size_t file_bytes);

struct LibrarySpec {
  int N = 1;
  std::size_t B = 1;
  std::uint64_t seed = 0;
};

struct UserOutcome {
  int user = 0;
  int demanded_file = 0;
  bool decoded_ok = false;
  int cached_packets = 0;
  int recovered_packets = 0;
  int transmissions_used = 0;
  bool one_shot = false;
  std::string digest;
  std::string error;
};

struct SimulationReport {
  std::vector<int> demand;
  std::vector<Transmission> transmissions;
  std::vector<UserOutcome> users;
  int F = 0;
  std::size_t packet_length = 0;
  // Transmitted packets divided by F.
  Rational measured_load;
  bool one_shot_verified = false;
  std::vector<std::string> warnings;

  bool all_decoded() const;
};

SimulationReport Run(const Dpda& d, const std::vector<int>& demand,
                     const FileLibrary& lib);
SimulationReport Run(const Dpda& d, const std::vector<int>& demand,
                     const LibrarySpec& spec);

// K file indices drawn uniformly from [0, N) with mt19937_64(seed).
std::vector<int> RandomDemand(int K, int N, std::uint64_t seed);

std::string Sha256Hex(std::span<const std::uint8_t> data);

}  // namespace d2dcache

#endif  // D2DCACHE_SIMULATOR_H_
