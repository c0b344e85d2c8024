#pragma once

#include <string_view>

namespace coverkit {

enum class Verdict { pass, fail, not_applicable };

constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::not_applicable: return "NOT-APPLICABLE";
  }
  return "ERROR";
}

}  // namespace coverkit
