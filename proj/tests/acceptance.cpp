// One line per acceptance criterion; exit status 0 iff all pass.

#include <cstdio>
#include <cstring>

#include "gwa/verify.hpp"

int main(int argc, char** argv) {
  bool serial = argc > 1 && std::strcmp(argv[1], "--serial") == 0;
  int failed = 0;
  double total = 0.0;
  for (const auto& r : gwa::run_acceptance(!serial)) {
    std::printf("[%s] criterion %2d: %-36s %5d checks  %7.3f s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.checks, r.seconds);
    for (const auto& f : r.failures) std::printf("         %s\n", f.c_str());
    if (!r.pass) ++failed;
    total += r.seconds;
  }
  std::printf("%d of %d criteria passed (%.3f s of work)\n", gwa::criterion_count() - failed, gwa::criterion_count(),
              total);
  return failed == 0 ? 0 : 1;
}
