#include "icnsim/workload.hpp"

#include <algorithm>
#include <cmath>

namespace icnsim {

MZipf::MZipf(double alpha, double beta, std::uint64_t n)
    : alpha_(alpha), beta_(beta), n_(n) {
  if (n == 0) throw WorkloadError("mzipf: catalog size must be positive");
  if (alpha < 0.0) throw WorkloadError("mzipf: alpha must be >= 0");
  if (beta < 0.0) throw WorkloadError("mzipf: beta must be >= 0");
  norm_ = 0.0;
  for (std::uint64_t i = 1; i <= n_; ++i)
    norm_ += std::pow(static_cast<double>(i) + beta_, -alpha_);
}

double MZipf::pmf(std::uint64_t rank) const {
  if (rank < 1 || rank > n_)
    throw WorkloadError("mzipf: rank " + std::to_string(rank) +
                        " out of range 1.." + std::to_string(n_));
  return std::pow(static_cast<double>(rank) + beta_, -alpha_) / norm_;
}

ZipfSampler::ZipfSampler(const MZipf& dist) {
  cumulative_.resize(dist.n());
  double acc = 0.0;
  for (std::uint64_t i = 1; i <= dist.n(); ++i) {
    acc += dist.pmf(i);
    cumulative_[i - 1] = acc;
  }
  cumulative_.back() = 1.0;  // guard against rounding at the tail
}

ObjectId ZipfSampler::sample(Rng& rng) const {
  const double u = rng.next_double();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return static_cast<ObjectId>(it - cumulative_.begin()) + 1;
}

std::uint64_t chunk_count(std::uint64_t filesize, std::uint64_t chunk_size) {
  if (filesize == 0) throw WorkloadError("chunk_count: filesize must be > 0");
  if (chunk_size == 0)
    throw WorkloadError("chunk_count: chunk size must be > 0");
  return (filesize + chunk_size - 1) / chunk_size;
}

Catalog make_catalog(std::uint64_t n_objects, std::uint64_t avg_filesize,
                     std::uint64_t chunk_size) {
  Catalog cat;
  cat.n_objects = n_objects;
  cat.avg_filesize = avg_filesize;
  cat.chunk_size = chunk_size;
  cat.chunks_per_object =
      static_cast<std::uint32_t>(chunk_count(avg_filesize, chunk_size));
  return cat;
}

std::vector<RequestEvent> generate_workload(double duration_s,
                                            double rate_per_client,
                                            const MZipf& dist,
                                            std::span<const NodeId> clients,
                                            std::uint64_t seed) {
  if (clients.empty()) throw WorkloadError("workload: empty client list");
  if (duration_s <= 0.0) throw WorkloadError("workload: duration must be > 0");
  if (rate_per_client < 0.0)
    throw WorkloadError("workload: negative request rate");
  if (rate_per_client == 0.0) return {};

  const ZipfSampler sampler(dist);
  std::vector<RequestEvent> events;
  // One independent substream per client: the merged stream does not depend
  // on client iteration order.
  struct Keyed {
    RequestEvent ev;
    NodeId client;
    std::uint64_t seq;
  };
  std::vector<Keyed> keyed;
  for (NodeId client : clients) {
    Rng rng(Rng::derive(seed, 0x636c69656e740000ULL + client));
    double t = 0.0;
    std::uint64_t seq = 0;
    while (true) {
      const double u = rng.next_double();
      t += -std::log1p(-u) / rate_per_client;
      if (t > duration_s) break;
      const ObjectId object = sampler.sample(rng);
      keyed.push_back({{t, client, object}, client, seq++});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.ev.time != b.ev.time) return a.ev.time < b.ev.time;
    if (a.client != b.client) return a.client < b.client;
    return a.seq < b.seq;
  });
  events.reserve(keyed.size());
  for (const Keyed& k : keyed) events.push_back(k.ev);
  return events;
}

}  // namespace icnsim
