#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/checkpoint.hpp"
#include "burau4/matrix3.hpp"

namespace burau4 {

/// The search family:
///
///   W(i1..ik) = T_bar^2 D T_bar^i1 D T_bar^i2 ... D T_bar^ik D T_bar^2
///
/// with each i_j in {1,2,3}.  Under the reversed-product evaluation rule,
/// W(i1..ik) is the Burau image of the braid
///
///   tau^2 Delta tau^ik Delta ... tau^i1 Delta tau^2
///
/// i.e. the exponent order is mirrored between the matrix product and the
/// braid spelling.  The enumeration covers all sequences, so the two orders
/// describe the same set.
///
/// Exponent 0 is accepted by word_matrix and verify_hit for planted control
/// words; the enumeration itself only produces 1..3.
Mat3 word_matrix(std::span<const int> exps);

/// theta^-m tau^2 Delta tau^ik ... Delta tau^i1 Delta tau^2: the braid whose
/// Burau image is t^(-4m) W(exps).
BraidWord search_word_braid(std::span<const int> exps, long long m);

enum class SearchStatus { Nonscalar, ScalarHit, ScalarOther };

std::string to_string(SearchStatus s);

struct SearchRecord {
  std::vector<int>             exps;
  SearchStatus                 status = SearchStatus::Nonscalar;
  std::optional<long long>     m;            // ScalarHit only: W = t^(4m) I
  std::optional<std::uint64_t> proj_key_id;  // dedup class, when dedup is on

  std::size_t k() const noexcept { return exps.size(); }
};

// "k<TAB>exps<TAB>status<TAB>m-or-dash<TAB>class-or-dash"; empty exps print "-".
std::string format_record(const SearchRecord& r);

enum class CertificateKind { TrivialBraid, NontrivialKernelElement, ContractViolation };

std::string to_string(CertificateKind k);

struct HitCertificate {
  CertificateKind kind = CertificateKind::ContractViolation;
  BraidWord       braid;
  std::string     detail;
};

using BraidEvaluator = std::function<Mat3(const BraidWord&)>;

/// Rebuilds the braid of a scalar hit, re-evaluates it from scratch and asks
/// the Artin oracle whether it is trivial.  The evaluator is injectable so
/// the discovery path can be exercised with a stand-in representation.
HitCertificate verify_hit(std::span<const int> exps, long long m,
                          const BraidEvaluator& evaluate = burau_eval);

/// Exponent sequence of length k at lexicographic rank r (0-based).
std::vector<int> exps_from_rank(int k, std::uint64_t rank);
std::uint64_t level_size(int k);  // 3^k

/// Walks the sequences of one length in lexicographic order, keeping the
/// partial products T_bar^2 D (T_bar^i D)... for every prefix so that each
/// step costs one product per changed position.
class LevelEnumerator {
 public:
  LevelEnumerator(int k, std::uint64_t first_rank);

  bool done() const noexcept { return done_; }
  std::uint64_t rank() const noexcept { return rank_; }
  std::span<const int> exps() const noexcept { return exps_; }
  // W(exps()), exact.
  const Mat3& product() const noexcept { return product_; }
  // det W(exps()) as sign * t^exponent, tracked without computing det.
  UnitMonomial det() const noexcept { return det_final_; }
  void advance();

 private:
  void rebuild_from(std::size_t depth);

  int                       k_;
  std::uint64_t             rank_;
  bool                      done_ = false;
  std::vector<int>          exps_;
  std::vector<Mat3>         prefix_;  // prefix_[j]: head times first j steps
  std::vector<UnitMonomial> det_;  // det_[j]: determinant of prefix_[j]
  Mat3                      product_;
  UnitMonomial              det_final_{1, 0};
};

struct Classification {
  SearchStatus             status = SearchStatus::Nonscalar;
  std::optional<long long> m;
};

/// A kernel hit needs W = t^(4m) I, so det W = +t^(12m).  Sequences whose
/// tracked determinant rules that out skip the kernel test and only get the
/// off-diagonal check that would expose some other scalar.
Classification classify(const Mat3& w, const UnitMonomial& det);

struct SearchConfig {
  int                                  max_k = 0;
  bool                                 dedup = false;
  unsigned                             workers = 1;
  std::optional<std::filesystem::path> checkpoint_path;
  // Control sequences evaluated before the enumeration, exponents in 0..3.
  std::vector<std::vector<int>> planted;
  // Sequences per unit of work between checkpoints.
  std::uint64_t batch_size = 6561;
};

struct CertifiedRecord {
  SearchRecord                  record;
  std::optional<HitCertificate> certificate;  // present for scalar hits
};

struct SearchSummary {
  std::vector<LevelTotals>       per_k;
  std::uint64_t                  sequences = 0;
  std::uint64_t                  hits = 0;
  std::uint64_t                  other_scalars = 0;
  std::uint64_t                  dedup_classes = 0;
  // Distinct sequences with projectively equal products.
  std::uint64_t                  collisions = 0;
  double                         wall_seconds = 0;
  bool                           resumed = false;
  std::vector<CertifiedRecord>   planted;
  // Every enumerated scalar hit, with its certificate.
  std::vector<CertifiedRecord>   hit_certificates;
  // Set when a hit certifies as a nontrivial braid; the run stops there.
  std::optional<CertifiedRecord> discovery;
};

using RecordSink = std::function<void(const SearchRecord&)>;

/// Enumerates every sequence with 0 <= k <= max_k in length-then-lex order
/// and hands each record to `sink` in that order.  Throws CheckpointCorrupt
/// when the resume file fails validation.
SearchSummary search(const SearchConfig& cfg, const RecordSink& sink);

}  // namespace burau4
