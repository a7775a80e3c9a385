// Runs the acceptance manifest and prints one line per criterion.
#include <iostream>

#include "agrp/harness.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: agrp_acceptance <manifest> [--cli <agrp executable>] [--sequential]\n";
    return 2;
  }
  agrp::AcceptanceOptions opts;
  for (int i = 2; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) opts.cli_path = argv[++i];
    else if (a == "--sequential") opts.parallel = false;
  }
  const auto report = agrp::run_acceptance(agrp::read_manifest_file(argv[1]), opts);
  int entries = 0, bad_entries = 0;
  for (const auto& l : report.lines) {
    if (l.id.rfind("entry:", 0) == 0) {
      ++entries;
      if (!l.pass) {
        ++bad_entries;
        std::cout << "FAIL " << l.id << "  " << l.detail << "\n";
      }
      continue;
    }
    std::cout << (l.pass ? "PASS " : "FAIL ") << l.id << "  " << l.detail << "  [" << l.seconds << " s]\n";
  }
  std::cout << (bad_entries ? "FAIL" : "PASS") << " manifest entries: " << entries - bad_entries << " of " << entries
            << " as expected\n";
  return report.ok() ? 0 : 1;
}
