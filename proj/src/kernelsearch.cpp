#include "burau4/kernelsearch.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>
#include <unordered_map>

#include "burau4/normalform.hpp"

namespace burau4 {

namespace {

UnitMonomial operator*(const UnitMonomial& a, const UnitMonomial& b) {
  return {a.sign * b.sign, a.exponent + b.exponent};
}

UnitMonomial unit_det(const Mat3& m) {
  auto u = m.det().as_unit_monomial();
  if (!u) {
    throw std::logic_error("search factor has non-unit determinant");
  }
  return *u;
}

// Factors of the search products with their determinants.
struct SearchFactors {
  Mat3                        head;  // T_bar^2 D
  std::array<Mat3, 4>         step;  // T_bar^i D, i = 0..3
  Mat3                        tail;  // T_bar^2
  UnitMonomial                head_det;
  std::array<UnitMonomial, 4> step_det;
  UnitMonomial                tail_det;
};

const SearchFactors& factors() {
  static const SearchFactors f = [] {
    const auto& c = burau_constants();
    SearchFactors s;
    s.tail = c.T_bar.pow(2);
    s.head = s.tail * c.D;
    for (unsigned i = 0; i < 4; ++i) {
      s.step[i] = c.T_bar.pow(i) * c.D;
      s.step_det[i] = unit_det(s.step[i]);
    }
    s.head_det = unit_det(s.head);
    s.tail_det = unit_det(s.tail);
    return s;
  }();
  return f;
}

void check_exps(std::span<const int> exps, int lowest) {
  for (int e : exps) {
    if (e < lowest || e > 3) {
      throw std::invalid_argument("search exponent out of range: " + std::to_string(e));
    }
  }
}

UnitMonomial tracked_det(std::span<const int> exps) {
  const auto& f = factors();
  UnitMonomial d = f.head_det;
  for (int e : exps) {
    d = d * f.step_det[static_cast<std::size_t>(e)];
  }
  return d * f.tail_det;
}

}  // namespace

Mat3 word_matrix(std::span<const int> exps) {
  check_exps(exps, 0);
  const auto& c = burau_constants();
  Mat3 m = c.T_bar.pow(2) * c.D;
  for (int e : exps) {
    m = m * c.T_bar.pow(static_cast<unsigned>(e)) * c.D;
  }
  return m * c.T_bar.pow(2);
}

BraidWord search_word_braid(std::span<const int> exps, long long m) {
  check_exps(exps, 0);
  BraidWord w = named::theta().pow(-m);
  w *= named::tau().pow(2);
  w *= named::delta();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    w *= named::tau().pow(*it);
    w *= named::delta();
  }
  w *= named::tau().pow(2);
  return w;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Nonscalar: return "nonscalar";
    case SearchStatus::ScalarHit: return "scalar_hit";
    case SearchStatus::ScalarOther: return "scalar_other";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::TrivialBraid: return "trivial braid";
    case CertificateKind::NontrivialKernelElement: return "NONTRIVIAL KERNEL ELEMENT";
    case CertificateKind::ContractViolation: return "contract violation";
  }
  return "?";
}

std::string format_record(const SearchRecord& r) {
  std::string exps;
  for (int e : r.exps) {
    exps += static_cast<char>('0' + e);
  }
  std::string line = std::to_string(r.k());
  line += '\t';
  line += exps.empty() ? "-" : exps;
  line += '\t';
  line += to_string(r.status);
  line += '\t';
  line += r.m ? std::to_string(*r.m) : "-";
  line += '\t';
  line += r.proj_key_id ? std::to_string(*r.proj_key_id) : "-";
  return line;
}

HitCertificate verify_hit(std::span<const int> exps, long long m, const BraidEvaluator& evaluate) {
  HitCertificate cert;
  cert.braid = search_word_braid(exps, m);
  Mat3 image = evaluate(cert.braid);
  if (!image.is_identity()) {
    cert.kind = CertificateKind::ContractViolation;
    cert.detail = "reconstructed braid does not map to the identity; Burau image is " +
                  image.to_string();
    return cert;
  }
  if (braid_eq(cert.braid, BraidWord{})) {
    cert.kind = CertificateKind::TrivialBraid;
    cert.detail = "Burau image is I and the braid is trivial";
  } else {
    cert.kind = CertificateKind::NontrivialKernelElement;
    cert.detail = "Burau image is I but the braid is NOT trivial: " + cert.braid.to_string();
  }
  return cert;
}

std::uint64_t level_size(int k) {
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= 3;
  }
  return n;
}

std::vector<int> exps_from_rank(int k, std::uint64_t rank) {
  std::vector<int> exps(static_cast<std::size_t>(k));
  for (int j = k - 1; j >= 0; --j) {
    exps[static_cast<std::size_t>(j)] = static_cast<int>(rank % 3) + 1;
    rank /= 3;
  }
  return exps;
}

LevelEnumerator::LevelEnumerator(int k, std::uint64_t first_rank)
    : k_(k),
      rank_(first_rank),
      prefix_(static_cast<std::size_t>(k) + 1),
      det_(static_cast<std::size_t>(k) + 1) {
  if (k < 0) {
    throw std::invalid_argument("negative sequence length");
  }
  if (first_rank >= level_size(k)) {
    done_ = true;
    return;
  }
  exps_ = exps_from_rank(k, first_rank);
  prefix_[0] = factors().head;
  det_[0] = factors().head_det;
  rebuild_from(0);
}

void LevelEnumerator::rebuild_from(std::size_t depth) {
  const auto& f = factors();
  for (std::size_t j = depth; j < exps_.size(); ++j) {
    auto e = static_cast<std::size_t>(exps_[j]);
    prefix_[j + 1] = prefix_[j] * f.step[e];
    det_[j + 1] = det_[j] * f.step_det[e];
  }
  product_ = prefix_.back() * f.tail;
  det_final_ = det_.back() * f.tail_det;
}

void LevelEnumerator::advance() {
  if (done_) {
    return;
  }
  ++rank_;
  if (rank_ >= level_size(k_)) {
    done_ = true;
    return;
  }
  std::size_t j = exps_.size();
  while (j > 0 && exps_[j - 1] == 3) {
    exps_[--j] = 1;
  }
  ++exps_[j - 1];
  rebuild_from(j - 1);
}

Classification classify(const Mat3& w, const UnitMonomial& det) {
  Classification c;
  const bool kernel_compatible = det.sign > 0 && det.exponent % 12 == 0;
  if (kernel_compatible) {
    const long long m = det.exponent / 12;
    if (w == Mat3::scalar(LaurentPoly::monomial(1, 4 * m))) {
      c.status = SearchStatus::ScalarHit;
      c.m = m;
      return c;
    }
  }
  if (w.off_diagonal_zero() && w.as_scalar()) {
    c.status = SearchStatus::ScalarOther;
  }
  return c;
}

namespace {

struct WorkItem {
  std::vector<int>       exps;
  Classification         cls;
  std::optional<ProjKey> key;
};

std::vector<WorkItem> run_range(int k, std::uint64_t lo, std::uint64_t hi, bool want_keys) {
  std::vector<WorkItem> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  LevelEnumerator it(k, lo);
  for (std::uint64_t r = lo; r < hi; ++r, it.advance()) {
    WorkItem item;
    item.exps.assign(it.exps().begin(), it.exps().end());
    item.cls = classify(it.product(), it.det());
    if (want_keys) {
      item.key = canonicalize(it.product());
    }
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<WorkItem> run_batch(int k, std::uint64_t lo, std::uint64_t hi, unsigned workers,
                                bool want_keys) {
  const std::uint64_t n = hi - lo;
  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, n));
  if (parts == 1) {
    return run_range(k, lo, hi, want_keys);
  }
  std::vector<std::future<std::vector<WorkItem>>> futures;
  for (std::uint64_t p = 0; p < parts; ++p) {
    std::uint64_t a = lo + n * p / parts;
    std::uint64_t b = lo + n * (p + 1) / parts;
    futures.push_back(std::async(std::launch::async, run_range, k, a, b, want_keys));
  }
  std::vector<WorkItem> out;
  out.reserve(static_cast<std::size_t>(n));
  for (auto& f : futures) {
    auto part = f.get();
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

class DedupTable {
 public:
  // Class id of the key; counts a collision when the class already exists.
  std::uint64_t assign(ProjKey key) {
    auto [it, inserted] = ids_.try_emplace(std::move(key), ids_.size());
    if (!inserted) {
      ++collisions_;
    }
    return it->second;
  }
  std::uint64_t classes() const noexcept { return ids_.size(); }
  std::uint64_t collisions() const noexcept { return collisions_; }

 private:
  std::unordered_map<ProjKey, std::uint64_t> ids_;
  std::uint64_t                              collisions_ = 0;
};

void validate(const SearchConfig& cfg) {
  if (cfg.max_k < 0) {
    throw std::invalid_argument("max_k must be >= 0");
  }
  if (cfg.workers == 0) {
    throw std::invalid_argument("workers must be >= 1");
  }
  if (cfg.batch_size == 0) {
    throw std::invalid_argument("batch_size must be >= 1");
  }
  for (const auto& p : cfg.planted) {
    check_exps(p, 0);
  }
}

}  // namespace

SearchSummary search(const SearchConfig& cfg, const RecordSink& sink) {
  validate(cfg);
  const auto started = std::chrono::steady_clock::now();
  SearchSummary summary;
  summary.per_k.assign(static_cast<std::size_t>(cfg.max_k) + 1, LevelTotals{});

  for (const auto& exps : cfg.planted) {
    SearchRecord rec;
    rec.exps = exps;
    auto cls = classify(word_matrix(exps), tracked_det(exps));
    rec.status = cls.status;
    rec.m = cls.m;
    CertifiedRecord cr{rec, std::nullopt};
    if (cls.status == SearchStatus::ScalarHit) {
      cr.certificate = verify_hit(exps, *cls.m);
      if (cr.certificate->kind == CertificateKind::NontrivialKernelElement) {
        summary.discovery = cr;
      }
    }
    summary.planted.push_back(std::move(cr));
  }

  int start_k = 0;
  std::uint64_t start_rank = 0;
  DedupTable dedup;

  if (cfg.checkpoint_path && std::filesystem::exists(*cfg.checkpoint_path)) {
    SearchCheckpoint cp = read_checkpoint(*cfg.checkpoint_path);
    if (cp.dedup != cfg.dedup) {
      throw CheckpointCorrupt("checkpoint was written with dedup=" +
                              std::to_string(cp.dedup ? 1 : 0) + ", run has dedup=" +
                              std::to_string(cfg.dedup ? 1 : 0));
    }
    summary.resumed = true;
    start_k = cp.next_k;
    start_rank = cp.next_rank;
    if (start_k <= cfg.max_k && start_rank >= level_size(start_k)) {
      throw CheckpointCorrupt("resume rank beyond level size");
    }
    for (std::size_t k = 0; k < cp.per_k.size() && k < summary.per_k.size(); ++k) {
      summary.per_k[k] = cp.per_k[k];
    }
    if (cfg.dedup) {
      // Class ids continue where the interrupted run stopped, so rebuild the
      // table by replaying the completed prefix of the enumeration.
      for (int k = 0; k <= std::min(start_k, cfg.max_k); ++k) {
        std::uint64_t end = k < start_k ? level_size(k) : start_rank;
        for (std::uint64_t r = 0; r < end; r += cfg.batch_size) {
          auto items = run_batch(k, r, std::min(end, r + cfg.batch_size), cfg.workers, true);
          for (auto& item : items) {
            dedup.assign(std::move(*item.key));
          }
        }
      }
      if (dedup.classes() != cp.dedup_classes || dedup.collisions() != cp.collisions) {
        throw CheckpointCorrupt("replayed dedup table disagrees with checkpoint");
      }
    }
  }

  auto save = [&](int next_k, std::uint64_t next_rank) {
    if (!cfg.checkpoint_path) {
      return;
    }
    SearchCheckpoint cp;
    cp.max_k = cfg.max_k;
    cp.dedup = cfg.dedup;
    cp.next_k = next_k;
    cp.next_rank = next_rank;
    cp.per_k = summary.per_k;
    cp.dedup_classes = dedup.classes();
    cp.collisions = dedup.collisions();
    write_checkpoint(*cfg.checkpoint_path, cp);
  };

  for (int k = start_k; k <= cfg.max_k && !summary.discovery; ++k) {
    const std::uint64_t total = level_size(k);
    auto& totals = summary.per_k[static_cast<std::size_t>(k)];
    for (std::uint64_t r = k == start_k ? start_rank : 0; r < total && !summary.discovery;) {
      const std::uint64_t end = std::min(total, r + cfg.batch_size);
      auto items = run_batch(k, r, end, cfg.workers, cfg.dedup);
      for (auto& item : items) {
        SearchRecord rec;
        rec.exps = std::move(item.exps);
        rec.status = item.cls.status;
        rec.m = item.cls.m;
        if (item.key) {
          rec.proj_key_id = dedup.assign(std::move(*item.key));
        }
        sink(rec);
        ++totals.sequences;
        if (rec.status == SearchStatus::ScalarOther) {
          ++totals.other_scalars;
        }
        if (rec.status == SearchStatus::ScalarHit) {
          ++totals.hits;
          CertifiedRecord cr{rec, verify_hit(rec.exps, *rec.m)};
          summary.hit_certificates.push_back(cr);
          if (cr.certificate->kind == CertificateKind::NontrivialKernelElement) {
            summary.discovery = std::move(cr);
            break;
          }
        }
      }
      if (summary.discovery) {
        break;
      }
      r = end;
      if (r == total) {
        save(k + 1, 0);
      } else {
        save(k, r);
      }
    }
  }

  for (const auto& l : summary.per_k) {
    summary.sequences += l.sequences;
    summary.hits += l.hits;
    summary.other_scalars += l.other_scalars;
  }
  summary.dedup_classes = dedup.classes();
  summary.collisions = dedup.collisions();
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

}  // namespace burau4
