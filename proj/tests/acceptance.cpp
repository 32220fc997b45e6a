// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/identities.hpp"
#include "burau4/kernelsearch.hpp"
#include "burau4/normalform.hpp"
#include "burau4/word_syntax.hpp"

using namespace burau4;

namespace {

// Wall-clock limits, seconds.
constexpr double kIdentityLimit = 1.0;
constexpr double kFreenessLimit = 30.0;
constexpr double kSearchLimit = 300.0;

constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
  bool        pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %d  %s: %s  (%.3f s)\n", o.pass ? "PASS" : "FAIL", n, title, o.detail.c_str(),
              secs);
  std::fflush(stdout);
  if (!o.pass) {
    ++failures;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Mat3 M(std::string_view s) { return Mat3::parse(s); }

bool row_passed(const std::vector<IdentityCheck>& rows, const std::string& name) {
  for (const auto& r : rows) {
    if (r.name == name) {
      return r.passed;
    }
  }
  return false;
}

// Every freely reduced word over the four letters with 1 <= length <= max_len.
std::vector<GLWord> reduced_words(int max_len) {
  std::vector<GLWord> out;
  std::vector<GLWord> frontier{GLWord{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<GLWord> next;
    for (const auto& w : frontier) {
      for (int l = 0; l < 4; ++l) {
        const auto letter = static_cast<GLLetter>(l);
        if (!w.empty() && inverse(w.back()) == letter) {
          continue;
        }
        GLWord x = w;
        x.push_back(letter);
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

bool canonical(const AltWord& a) {
  const auto s = a.syllables();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].is_delta() == s[i - 1].is_delta()) {
      return false;
    }
  }
  return true;
}

Outcome constant_fidelity() {
  const auto& c = burau_constants();
  struct Pin {
    const char* what;
    Mat3        got;
    Mat3        want;
  };
  const std::vector<Pin> pins{
      {"s1", burau_eval(BraidWord{1}), M("-t, t, 0; 0, 1, 0; 0, 0, 1")},
      {"s2", burau_eval(BraidWord{2}), M("1, 0, 0; 1, -t, t; 0, 0, 1")},
      {"s3", burau_eval(BraidWord{3}), M("1, 0, 0; 0, 1, 0; 0, 1, -t")},
      {"alpha", burau_eval(named::alpha()), M("0, 0, -t^-1; 0, -t, -t^-1 + t; -1, 0, -t^-1 + 1")},
      {"beta", burau_eval(named::beta()), M("-t^-1, 1, 0; 0, 1, 0; 0, 1, -t")},
      {"tau", burau_eval(named::tau()), M("-t, t, 0; -t, 0, t; -t, 0, 0")},
      {"T^4", c.T.pow(4), Mat3::identity()},
  };
  Outcome o;
  int ok = 0;
  for (const auto& p : pins) {
    if (p.got == p.want) {
      ++ok;
    } else {
      o.pass = false;
      o.detail += std::string(p.what) + " mismatch; ";
    }
  }
  o.pass = o.pass && c.T == M("-1, 1, 0; -1, 0, 1; -1, 0, 0") && !(c.T.pow(2) == Mat3::identity());
  o.detail += std::to_string(ok) + "/" + std::to_string(pins.size()) + " exact matches";
  return o;
}

Outcome matrix_relations() {
  const auto rows = verify_matrix_identities();
  int ok = 0;
  for (const char* name : {"A = T B T^-1", "A^-1 = T^-1 B T", "B^-1 = T^2 B T^2"}) {
    ok += row_passed(rows, name) ? 1 : 0;
  }
  return {ok == 3, std::to_string(ok) + "/3 relations hold exactly"};
}

Outcome braid_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = verify_braid_identities();
  int ok = 0;
  std::string failed;
  for (const auto& r : rows) {
    if (r.passed) {
      ++ok;
    } else {
      failed += " [" + r.name + "]";
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/" << rows.size() << " identities certified by the Artin action" << failed
    << ", limit " << kIdentityLimit << " s";
  return {ok == static_cast<int>(rows.size()) && rows.size() >= 19 && secs < kIdentityLimit,
          d.str()};
}

Outcome scalar_facts() {
  const auto& c = burau_constants();
  const Mat3 t4 = Mat3::scalar(LaurentPoly::monomial(1, 4));
  const bool theta = burau_eval(named::theta()) == t4;
  const bool d2 = c.D * c.D == t4;
  const bool dt = det(c.T_bar) == LaurentPoly::monomial(-1, 3);
  return {theta && d2 && dt, std::string("rho(theta) = t^4 I ") + (theta ? "yes" : "NO") +
                                 ", D^2 = t^4 I " + (d2 ? "yes" : "NO") + ", det T_bar = " +
                                 det(c.T_bar).to_string()};
}

Outcome shape_at_desk_scale() {
  int tested = 0;
  int bad = 0;
  for (const auto& w : reduced_words(8)) {
    if (w.front() != GLLetter::BetaInv || w.back() != GLLetter::Beta || w.size() < 2) {
      continue;
    }
    ++tested;
    const AltWord a = gl_substitute(w);
    if (!canonical(a) || !theorem_shape(a) || !braid_eq(expand(a), gl_to_braid(w))) {
      ++bad;
    }
  }
  return {bad == 0 && tested == 816,
          std::to_string(tested) + " words (expected 816), " + std::to_string(bad) + " failures"};
}

Outcome freeness() {
  const auto t0 = std::chrono::steady_clock::now();
  int tested = 0;
  int identity = 0;
  for (const auto& w : reduced_words(6)) {
    ++tested;
    if (burau_eval(gl_to_braid(w)).is_identity()) {
      ++identity;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << tested << " words (expected 1456), " << identity << " identity images, limit "
    << kFreenessLimit << " s";
  return {tested == 1456 && identity == 0 && secs < kFreenessLimit, d.str()};
}

Outcome kernel_search() {
  SearchConfig cfg;
  cfg.max_k = 10;
  std::uint64_t records = 0;
  const auto s = search(cfg, [&](const SearchRecord&) { ++records; });

  std::mt19937_64 rng(kSeed);
  int sample_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const int k = std::uniform_int_distribution<int>(0, 10)(rng);
    const auto r = std::uniform_int_distribution<std::uint64_t>(0, level_size(k) - 1)(rng);
    LevelEnumerator it(k, r);
    const auto exps = exps_from_rank(k, r);
    if (!(it.product() == burau_eval(search_word_braid(exps, 0)))) {
      ++sample_bad;
    }
  }
  std::ostringstream d;
  d << records << " sequences (expected 88573), " << s.hits << " scalar hits, "
    << s.other_scalars << " other scalars, search " << s.wall_seconds << " s (limit "
    << kSearchLimit << " s), " << 50 - sample_bad << "/50 incremental products match";
  return {records == 88573 && s.sequences == 88573 && s.hits == 0 && !s.discovery &&
              s.wall_seconds < kSearchLimit && sample_bad == 0,
          d.str()};
}

Outcome positive_control() {
  SearchConfig cfg;
  cfg.max_k = 1;
  cfg.planted = {{0}};
  const auto s = search(cfg, [](const SearchRecord&) {});
  if (s.planted.size() != 1) {
    return {false, "planted control missing"};
  }
  const auto& p = s.planted[0];
  const bool hit = p.record.status == SearchStatus::ScalarHit && p.record.m == 2;
  const bool trivial = p.certificate && p.certificate->kind == CertificateKind::TrivialBraid;
  return {hit && trivial && s.hits == 0,
          "planted tau^2 Delta Delta tau^2: " + to_string(p.record.status) + ", m = " +
              (p.record.m ? std::to_string(*p.record.m) : "-") + ", " +
              (p.certificate ? to_string(p.certificate->kind) : "no certificate")};
}

Outcome normal_form_uniqueness() {
  std::mt19937_64 rng(kSeed + 9);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_alt = [&] {
    std::vector<Syllable> s;
    const int n = uni(0, 8);
    bool delta = uni(0, 1) == 1;
    for (int i = 0; i < n; ++i) {
      s.push_back(delta ? Syllable::delta() : Syllable::tau(uni(1, 3)));
      delta = !delta;
    }
    return AltWord(uni(-3, 3), std::move(s));
  };
  int equal_pairs = 0;
  int discrepancies = 0;
  for (int i = 0; i < 1000; ++i) {
    const AltWord u = random_alt();
    AltWord v;
    switch (i % 3) {
      case 0:  // same syllables, different center
        v = AltWord(uni(-3, 3), {u.syllables().begin(), u.syllables().end()});
        break;
      case 1:  // rebuilt through non-canonical appends, sometimes with one syllable changed
        v.shift_center(uni(-3, 3));
        for (const auto& s : u.syllables()) {
          if (s.is_delta()) {
            v.append_delta(uni(0, 3) == 0 ? 3 : 1);
          } else {
            v.append_tau(s.tau_exponent() + (uni(0, 3) == 0 ? 4 : 0));
          }
        }
        if (uni(0, 1) == 1 && !u.syllables().empty()) {
          v.append_tau(uni(1, 3));
        }
        break;
      default:
        v = random_alt();
        break;
    }
    const bool nf = alt_eq_mod_center(u, v);
    const long long dm = v.center_exponent() - u.center_exponent();
    const bool oracle = braid_eq(expand(u) * named::theta().pow(dm), expand(v));
    equal_pairs += nf ? 1 : 0;
    discrepancies += nf != oracle ? 1 : 0;
  }
  return {discrepancies == 0,
          "1000 pairs (" + std::to_string(equal_pairs) + " equal mod center), " +
              std::to_string(discrepancies) + " discrepancies"};
}

}  // namespace

int main() {
  criterion(1, "constant fidelity", constant_fidelity);
  criterion(2, "matrix relations", matrix_relations);
  criterion(3, "braid identities", braid_identities);
  criterion(4, "scalar facts", scalar_facts);
  criterion(5, "normal form shape, length <= 8", shape_at_desk_scale);
  criterion(6, "freeness spot check, length <= 6", freeness);
  criterion(7, "kernel search, max_k = 10", kernel_search);
  criterion(8, "positive control", positive_control);
  criterion(9, "normal form uniqueness", normal_form_uniqueness);
  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
