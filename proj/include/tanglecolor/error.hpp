#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tc {

// Every validation or bound failure carries a stable machine-readable kind
// ("NotAssociative", "ColumnNotBijective", "OrderOverflow", ...) plus a
// message holding the first offending witness.  Witness labels in messages
// are 1-based, matching the file formats.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string message)
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        detail_(std::move(message)) {}

  const std::string& kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

}  // namespace tc
