#pragma once

#include <memory>
#include <string>

#include "qsr/registry.hpp"

namespace fixture {

inline std::shared_ptr<const qsr::CalculusSpec> calc(const std::string &name) {
  return std::make_shared<const qsr::CalculusSpec>(qsr::builtin(name));
}

inline std::string data(const std::string &file) { return std::string(QSR_DATA_DIR) + "/" + file; }

} // namespace fixture
