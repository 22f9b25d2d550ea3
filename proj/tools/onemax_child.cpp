// Line-protocol child evaluator used by the external-bridge tests and the
// README example. Reads one genome per line and replies with a cost.
//
//   idcopt-child [onemax|constant|malformed|exit-after N|hang]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "onemax";
  const long exit_after = argc > 2 ? std::atol(argv[2]) : 0;
  long served = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (mode == "hang") {
      std::this_thread::sleep_for(std::chrono::hours(1));
    }
    if (mode == "exit-after" && served >= exit_after) return 3;
    ++served;
    if (mode == "malformed") {
      std::cout << "abc\n" << std::flush;
      continue;
    }
    if (mode == "constant") {
      std::cout << "1.0\n" << std::flush;
      continue;
    }
    long zeros = 0;
    for (char c : line) zeros += c == '0';
    std::printf("%ld\n", zeros);
    std::fflush(stdout);
  }
  return 0;
}
