#pragma once

#include <string_view>
#include <vector>

namespace cubiclab::detail {

struct EmbeddedFixture {
  std::string_view name;
  std::string_view content;
  std::string_view sha256;
};

const std::vector<EmbeddedFixture>& embedded_fixtures();

}  // namespace cubiclab::detail
