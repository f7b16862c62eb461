#include "matroidcharset.h"

#include <new>
#include <string>
#include <vector>

#include "commands.hpp"

struct mcs_result {
  int exit_code = 1;
  std::string status = "error";
  std::string text;
};

extern "C" {

mcs_result* mcs_run(int argc, const char* const* argv) {
  auto* r = new (std::nothrow) mcs_result;
  if (!r) return nullptr;
  try {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<size_t>(argc) : 0);
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i] ? argv[i] : "");
    mcs::CommandOutcome out = mcs::run_command(args);
    r->exit_code = out.exit_code;
    r->status = out.status;
    r->text = std::move(out.text);
  } catch (...) {
    r->exit_code = 1;
    r->status = "error";
    r->text =
        "{\"schema_version\":\"1\",\"status\":\"error\",\"payload\":"
        "{\"code\":\"internal\",\"message\":\"unexpected failure\"}}\n";
  }
  return r;
}

const char* mcs_result_json(const mcs_result* r) {
  return r ? r->text.c_str() : "";
}

const char* mcs_result_status(const mcs_result* r) {
  return r ? r->status.c_str() : "error";
}

int mcs_result_exit_code(const mcs_result* r) { return r ? r->exit_code : 1; }

void mcs_result_free(mcs_result* r) { delete r; }

const char* mcs_version(void) { return mcs::kVersion; }

}  // extern "C"
