// Command-line front end.  Filled in as the library lands; see README.
#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (!std::strcmp(argv[i], "--help") || !std::strcmp(argv[i], "-h")) {
      std::printf("usage: nsmac <subcommand> [options]\n"
                  "subcommands are still being filled in\n");
      return 0;
    }
  std::fprintf(stderr, "nsmac: not yet implemented\n");
  return 2;
}
