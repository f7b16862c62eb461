#include <matroidcharset.h>

#include <cstdio>

int main(int argc, char** argv) {
  mcs_result* r = mcs_run(argc - 1, argv + 1);
  if (!r) {
    std::fputs("out of memory\n", stderr);
    return 1;
  }
  std::fputs(mcs_result_json(r), stdout);
  int code = mcs_result_exit_code(r);
  mcs_result_free(r);
  return code;
}
