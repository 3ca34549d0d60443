#include <cstdio>
#include <string>
#include <vector>

#include "abduce/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  abduce::CommandResult res = abduce::run_command(args);
  std::fputs(res.payload.c_str(), stdout);
  return res.exit_code;
}
