#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "doctest.h"
#include "dynorb/verify.hpp"

using namespace dynorb;

namespace {

// Public functions whose return type is a check bundle.
std::set<std::string> declared_checks() {
  std::set<std::string> out;
  const std::regex decl(R"((?:VerificationReport|FFFamilyChecks)\s+([A-Za-z_][A-Za-z0-9_]*)\s*\()");
  for (const auto& entry : std::filesystem::directory_iterator(DYNORB_INCLUDE_DIR "/dynorb")) {
    if (entry.path().extension() != ".hpp") continue;
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    for (std::sregex_iterator it(text.begin(), text.end(), decl), end; it != end; ++it) out.insert((*it)[1]);
  }
  out.erase("run_verify");
  return out;
}

}  // namespace

TEST_CASE("every public check function is registered") {
  std::set<std::string> registered;
  for (const auto& r : verify_registry()) registered.insert(r.function);
  const auto declared = declared_checks();
  CHECK(declared.size() >= 10);
  for (const auto& name : declared) CHECK_MESSAGE(registered.count(name), name << " missing from verify");
  for (const auto& name : registered) CHECK_MESSAGE(declared.count(name), name << " registered but not declared");
}

TEST_CASE("the registry runs clean") {
  const auto rep = run_verify({1, 1});
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.ok, c.name << " | " << c.detail);
  CHECK(rep.ok());
}

TEST_CASE("sampled checks pass for other seeds") {
  for (std::uint64_t seed : {7u, 99u}) {
    CHECK(cofactor_checks(seed, 10, 20).ok());
    CHECK(canonical_height_checks(seed, 5).ok());
    CHECK(ff_checks(seed, 6).ok());
  }
}
