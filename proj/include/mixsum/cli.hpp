#ifndef MIXSUM_CLI_HPP
#define MIXSUM_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace mixsum {

// Placeholder during bring-up; the real dispatcher is filled in below in this
// file's final form.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  (void)args;
  (void)err;
  out << "mixsum: not yet wired\n";
  return 2;
}

}  // namespace mixsum

#endif  // MIXSUM_CLI_HPP
