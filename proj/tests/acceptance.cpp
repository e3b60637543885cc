// Acceptance harness: runs each classification-level requirement exactly and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "test_util.hpp"

using namespace cdptest;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " [" << ms
            << " ms]";
  if (!ok && !error.empty()) std::cout << " error: " << error;
  std::cout << "\n";
  if (!ok) ++failures;
}

struct CertifiedCorpus {
  std::vector<std::pair<CDP, FanoCertificate>> items;
  void add(CDP c, FanoCertificate cert) { items.emplace_back(std::move(c), std::move(cert)); }
};

}  // namespace

int main() {
  ClassificationResult classification;
  std::vector<CDP> fixtures;
  std::vector<FanoCertificate> fixture_certs;
  CertifiedCorpus corpus;

  criterion(1, "classify-2d returns 34 classes with breakdown 7/4/9/9/5", [&] {
    classification = classify_2d();
    bool ok = classification.classes.size() == 34;
    const std::map<std::pair<int, int>, int> expected = {
        {{2, 3}, 7}, {{2, 4}, 4}, {{3, 3}, 9}, {{4, 3}, 9}, {{6, 3}, 5}};
    ok = ok && classification.breakdown == expected;
    for (const EnumeratedClass& ec : classification.classes)
      corpus.add(ec.cdp, ec.cert);
    return ok;
  });

  criterion(2, "fixtures certify Fano, test non-toric, and biject onto the classes", [&] {
    std::set<std::string> fixture_codes, class_codes;
    for (const std::string& name : table_fixture_names()) {
      CDP c = load_fixture(name);
      auto res = find_certificate(c);
      if (!certified(res)) return false;
      FanoCertificate cert = std::get<FanoCertificate>(res);
      if (!check_certificate(c, cert)) return false;
      if (is_toric(c).toric) return false;
      CanonicalCode code = canonical_code(c, cert);
      if (!fixture_codes.insert(code.bytes).second) return false;  // pairwise distinct
      corpus.add(c, cert);
      fixtures.push_back(std::move(c));
      fixture_certs.push_back(std::move(cert));
    }
    for (const EnumeratedClass& ec : classification.classes) class_codes.insert(ec.code.bytes);
    return fixture_codes.size() == 34 && fixture_codes == class_codes;
  });

  criterion(3, "branch equations give {(6,2,3),(4,2,4)} and m-range {3,4,6}", [&] {
    BranchSolutions bs = solve_branch_equation();
    std::set<std::array<Int, 3>> expect{{Int(6), Int(2), Int(3)}, {Int(4), Int(2), Int(4)}};
    return bs.worked_branch == expect && bs.m_values == std::set<Int>{Int(3), Int(4), Int(6)};
  });

  criterion(4, "cross constructions certify with n = 4d = c(box), sharp at d=2", [&] {
    for (int d : {1, 2, 3}) {
      auto [c, cert] = cross_example(d);
      if (static_cast<int>(c.n()) != 4 * d) return false;
      auto res = find_certificate(c);
      if (!certified(res)) return false;
      if (!check_certificate(c, cert)) return false;
      std::vector<Vec> basis;
      for (int j = 0; j < d; ++j) {
        Vec e(d, 0);
        e[j] = 1;
        basis.push_back(e);
      }
      if (c_of_box(c.base(), basis) != 4 * d) return false;
      for (const PLFunction& f : c.functions())
        if (f.is_linear() && f.has_integral_slope()) return false;  // normalized
      if (d == 2 && c.n() != 8) return false;  // saturates the dimension-two cap
      corpus.add(std::move(c), std::move(cert));
    }
    return true;
  });

  criterion(5, "n <= c(box) and directional caps hold on every certified CDP (>= 500)", [&] {
    // widen the corpus with randomly moved fixtures, re-certified from scratch
    MoveGen gen(4242);
    for (size_t i = 0; i < fixtures.size(); ++i) {
      for (int t = 0; t < 14; ++t) {
        CDP moved = gen.random_sequence(fixtures[i], 4);
        auto res = find_certificate(moved);
        if (!certified(res)) return false;
        corpus.add(std::move(moved), std::get<FanoCertificate>(res));
      }
    }
    if (corpus.items.size() < 500) return false;
    for (const auto& [c, cert] : corpus.items) {
      OriginPresentation pres = present_at_origin(c, cert);
      const int d = pres.cdp.base().dim();
      std::vector<Vec> basis;
      for (int j = 0; j < d; ++j) {
        Vec e(d, 0);
        e[j] = 1;
        basis.push_back(e);
      }
      if (Rat(Int(c.n())) > c_of_box(pres.cdp.base(), basis)) return false;
      for (const Vec& e : basis) {
        int r = directional_bound(c, cert, e);  // throws if a cap fails
        if (Rat(r) > Rat(4) / alpha_v(pres.cdp.base(), e)) return false;
      }
    }
    return true;
  });

  criterion(6, "integrality, origin-segment linearity, endpoint-sum and 1/lambda lemmas", [&] {
    for (const auto& [c, cert] : corpus.items) {
      OriginPresentation pres = present_at_origin(c, cert);
      const int d = pres.cdp.base().dim();
      for (const PLFunction& prime : pres.primes) {
        Rat at0 = prime.evaluate_at_origin();
        bool integral = at0 == 1;

        // brute-force integrality over (1/lambda)M for lambda <= 6
        bool brute = true;
        for (int lambda = 1; lambda <= 6 && brute; ++lambda) {
          Vec lo = pres.cdp.base().vertices().front(), hi = lo;
          for (const Vec& v : pres.cdp.base().vertices())
            for (int i = 0; i < d; ++i) {
              lo[i] = std::min(lo[i], v[i]);
              hi[i] = std::max(hi[i], v[i]);
            }
          std::vector<Int> cur(d);
          for (int i = 0; i < d; ++i) cur[i] = lo[i] * lambda;
          while (true) {
            RatVec u(d);
            for (int i = 0; i < d; ++i) u[i] = Rat(cur[i], lambda);
            if (pres.cdp.base().contains(u) && !is_integer(prime.evaluate(u) * lambda))
              brute = false;
            int i = 0;
            while (i < d) {
              if (cur[i] < hi[i] * lambda) {
                ++cur[i];
                break;
              }
              cur[i] = lo[i] * lambda;
              ++i;
            }
            if (i == d || !brute) break;
          }
        }
        if (integral != brute) return false;

        if (!integral && (numerator(at0) != 1 || denominator(at0) < 2)) return false;

        if (integral) {
          for (const Vec& v : pres.cdp.base().vertices()) {
            RatVec mid(d);
            for (int i = 0; i < d; ++i) mid[i] = Rat(v[i]) / 2;
            if (prime.evaluate(mid) * 2 != at0 + prime.evaluate(to_rat(v))) return false;
          }
        }

        for (int j = 0; j < d; ++j) {
          for (Int k = 1;; ++k) {
            Vec v(d, 0);
            v[j] = k;
            if (!pres.cdp.base().contains(v) || !pres.cdp.base().contains(negate(v))) break;
            Rat sum = prime.evaluate(to_rat(v)) + prime.evaluate(to_rat(negate(v)));
            Vec unit(d, 0);
            unit[j] = 1;
            if (!integral) {
              if (sum > 1) return false;
            } else if (!is_linear_along(prime, unit)) {
              if (sum > Rat(2) - Rat(k)) return false;
            } else if (sum != 2) {
              return false;
            }
          }
        }
      }
    }
    return true;
  });

  criterion(7, "toric/reflexive correspondence and polytope round-trip on 200 samples", [&] {
    std::mt19937_64 rng(1234);
    MoveGen gen(1235);
    const std::vector<std::vector<Vec>> reflexive_seeds = {
        {{Int(1), Int(0)}, {Int(-1), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(-1)}},
        {{Int(-1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(0)}, {Int(1), Int(-1)}},
        {{Int(1), Int(1)}, {Int(1), Int(-1)}, {Int(-1), Int(1)}, {Int(-1), Int(-1)}}};
    int reflexive = 0;
    for (int t = 0; t < 200; ++t) {
      LatticePolytope p = [&] {
        if (t % 10 != 9) return random_polytope_2d(rng);
        // every tenth draw: a random unimodular image of a reflexive seed,
        // so both sides of the correspondence appear in the sample
        std::vector<Vec> mat{{Int(1), gen.pick(-2, 2)}, {Int(0), Int(1)}};
        UnimodularAffineMap u(std::move(mat), {gen.pick(-1, 1), gen.pick(-1, 1)});
        std::vector<Vec> pts;
        for (const Vec& v : reflexive_seeds[t % reflexive_seeds.size()])
          pts.push_back(u.apply(v));
        return LatticePolytope::from_points(std::move(pts));
      }();
      CDP c = polytope_to_cdp(p);
      bool fano = certified(find_certificate(c));
      if (fano != is_reflexive(p)) return false;
      if (!(cdp_to_polytope(c) == p)) return false;
      reflexive += is_reflexive(p) ? 1 : 0;
    }
    return reflexive > 0 && reflexive < 200;
  });

  criterion(8, "canonical codes survive 1000 random move sequences per fixture", [&] {
    MoveGen gen(77);
    for (size_t i = 0; i < fixtures.size(); ++i) {
      std::string code = canonical_code(fixtures[i], fixture_certs[i]).bytes;
      for (int t = 0; t < 1000; ++t) {
        CDP moved = gen.random_sequence(fixtures[i], 6);
        auto res = find_certificate(moved);
        if (!certified(res)) return false;
        if (canonical_code(moved, std::get<FanoCertificate>(res)).bytes != code) return false;
      }
    }
    CDP left = load_fixture("fig_eq_left.cdp.json");
    CDP right = load_fixture("fig_eq_right.cdp.json");
    if (!equivalent(left, right)) return false;
    CDP s1 = load_fixture("fig_ineq_1.cdp.json");
    CDP s2 = load_fixture("fig_ineq_2.cdp.json");
    CDP s3 = load_fixture("fig_ineq_3.cdp.json");
    return !equivalent(s1, s2) && !equivalent(s1, s3) && !equivalent(s2, s3);
  });

  // conjecture monitor (not an acceptance criterion: open problems); flag any
  // counterexample to the 2^d cap on the corpora built above
  {
    bool ok = true;
    for (const auto& [c, cert] : corpus.items) {
      int dim = c.base().dim() + 1;
      if (dim <= 3 && Int(c.n()) > (Int(1) << dim)) ok = false;
    }
    std::cout << (ok ? "OK" : "ALERT") << " monitor: no counterexample to the 2^d function cap\n";
    if (!ok) ++failures;
  }

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
