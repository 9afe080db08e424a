// Acceptance gate: one line per check, all exact, exit 0 only if every
// check passes.  Shared filtrations are built once and reused.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shuffles/verify.hpp"

using namespace shuffles;

namespace {

constexpr unsigned long long kSeed = 42;

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Line {
  bool pass;
  std::string text;
};

bool fold(std::string& msg, const verify::Outcome& o) {
  if (!msg.empty()) msg += "; ";
  msg += o.detail;
  return o.pass;
}

}  // namespace

int main() {
  std::vector<Line> lines;
  auto run = [&](int id, const std::string& label, auto&& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string msg;
    bool ok = body(msg);
    char buf[512];
    std::snprintf(buf, sizeof buf, "[%s] %2d %s: %s (%.2fs)", ok ? "PASS" : "FAIL", id,
                  label.c_str(), msg.c_str(), secs_since(t0));
    std::puts(buf);
    std::fflush(stdout);
    lines.push_back({ok, buf});
  };

  // Shared filtrations for checks 3,4,5,6,8.
  std::vector<Filtration> F;  // F[n-1] is the degree-n filtration
  for (int n = 1; n <= 6; ++n) F.push_back(build_filtration(n));

  run(1, "lacunar census", [&](std::string& msg) {
    auto t0 = std::chrono::steady_clock::now();
    verify::Outcome o = verify::census(25);
    double d = secs_since(t0);
    bool ok = fold(msg, o) && d < 1.0;
    msg += d < 1.0 ? " within 1s" : " OVER the 1s limit";
    return ok;
  });

  run(2, "worked examples", [&](std::string& msg) {
    return fold(msg, verify::worked_examples());
  });

  run(3, "filtration ranks", [&](std::string& msg) {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) ok &= fold(msg, verify::filtration_ranks(F[n - 1]));
    return ok;
  });

  run(4, "right stability", [&](std::string& msg) {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) ok &= fold(msg, verify::stability(F[n - 1], 1.0, kSeed));
    ok &= fold(msg, verify::stability(F[5], 0.2, kSeed));
    return ok;
  });

  run(5, "subquotient characters", [&](std::string& msg) {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) ok &= fold(msg, verify::subquotient_characters_all(F[n - 1]));
    return ok;
  });

  run(6, "anchored sums and fixed vectors", [&](std::string& msg) {
    bool ok = true;
    for (int n = 2; n <= 5; ++n) ok &= fold(msg, verify::nabla_properties_all(F[n - 1], kSeed));
    for (int n = 2; n <= 4; ++n) ok &= fold(msg, verify::fixed_inclusion_all(F[n - 1]));
    return ok;
  });

  run(7, "eigenvalue prediction", [&](std::string& msg) {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) ok &= fold(msg, verify::spectrum_sweep(n, kSeed));
    return ok;
  });

  run(8, "module annihilator chains", [&](std::string& msg) {
    bool ok = true;
    for (int n = 2; n <= 5; ++n) ok &= fold(msg, verify::specht_chain(n, kSeed, &F[n - 1]));
    return ok;
  });

  run(9, "module isomorphisms and induction", [&](std::string& msg) {
    bool ok = fold(msg, verify::cyclic_module_isos(6));
    ok &= fold(msg, verify::hom_delta(5));
    ok &= fold(msg, verify::induction_associativity());
    return ok;
  });

  run(10, "oracle coherence", [&](std::string& msg) {
    bool ok = true;
    int pairs = 0;
    for (int sz = 0; sz <= 8 && ok; ++sz)
      for (const Partition& lam : partitions_of(sz)) {
        for (int m = 1; m <= 4; ++m, ++pairs)
          if (!oracle::pieri_check(lam, m)) {
            ok = false;
            msg += "Pieri mismatch at " + partition_str(lam) + " * h_" + std::to_string(m);
            break;
          }
        if (!ok) break;
      }
    if (ok) msg += "Pieri vs tableau counts on " + std::to_string(pairs) + " products";
    ok &= fold(msg, verify::mn_vs_traces(5));
    ok &= fold(msg, verify::global_dimension_sum(8));
    return ok;
  });

  int failed = 0;
  for (const Line& l : lines)
    if (!l.pass) ++failed;
  if (failed == 0)
    std::printf("all %zu checks passed\n", lines.size());
  else
    std::printf("%d of %zu checks FAILED\n", failed, lines.size());
  return failed == 0 ? 0 : 1;
}
