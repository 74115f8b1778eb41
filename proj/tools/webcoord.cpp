#include <iostream>

#include "webcoord/cli.hpp"

int main(int argc, char** argv) {
  const webcoord::cli::DispatchResult result =
      webcoord::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}
