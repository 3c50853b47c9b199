// Runs the twelve acceptance checks one at a time at full scale and prints one
// PASS/FAIL line each. Every check is exact; the only tolerance is the
// wall-clock limit, measured per check on a single thread.

#include "og6/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>

namespace {

struct Criterion {
  const char* title;
  const char* claim;
  double limit_seconds;
};

const Criterion kCriteria[] = {
    {"transvection calculus, 1000 samples in U^3 and U^2+(-2)", "transvection-calculus", 5},
    {"stabilizer transvection identities, d = 1..10", "stabilizer-transvection-identities", 1},
    {"discriminant form of U^3+(-2)^2 vs coset brute force", "og6-discriminant-form", 1},
    {"div-2 norms mod 8, box [-3,3]", "isotropic-div2-mod8-scan", 60},
    {"Eichler criterion vs BFS orbits in U^2+(-2), box [-3,3]", "eichler-criterion-bfs", 300},
    {"transport round trip, 200 pairs", "transport-round-trip", 60},
    {"monodromy decomposition, 100 words", "monodromy-generation", 120},
    {"phi and varrho preserve the Mukai pairing", "phi-varrho-isometries", 5},
    {"norm-2 extension image of (1,0,1), 100 samples", "square2-extension-arithmetic", 30},
    {"wall classification table and proof forms", "wall-classification-table", 1},
    {"wall enumeration vs box brute force, 50 instances", "wall-enumeration-completeness", 300},
    {"lagrangian detector", "lagrangian-detector", 1},
};

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  auto ctx = og6::verify::make_context(seed, og6::verify::Scale::Full, false);
  std::map<std::string, const og6::verify::Claim*> by_id;
  for (const auto& c : og6::verify::claims()) by_id[c.id] = &c;

  int failed = 0, index = 0;
  for (const auto& cr : kCriteria) {
    ++index;
    auto it = by_id.find(cr.claim);
    if (it == by_id.end()) {
      std::printf("FAIL %2d %s [%s]: claim not registered\n", index, cr.title, cr.claim);
      ++failed;
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    auto r = it->second->run(ctx);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < cr.limit_seconds;
    bool ok = r.pass && in_time;
    failed += !ok;
    std::printf("%s %2d %s [%s]: %s; %.3f s (limit %.0f s%s)\n", ok ? "PASS" : "FAIL", index, cr.title, cr.claim,
                r.detail.c_str(), secs, cr.limit_seconds, in_time ? "" : ", exceeded");
  }
  std::printf("%d of %d acceptance checks passed (seed %llu)\n", index - failed, index,
              static_cast<unsigned long long>(seed));
  return failed == 0 ? 0 : 1;
}
