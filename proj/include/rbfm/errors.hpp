#pragma once

#include <stdexcept>
#include <string>

namespace rbfm {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonStochasticRow : Error {
  int s, a;
  double rowsum;
  NonStochasticRow(int s_, int a_, double rowsum_)
      : Error("kernel row (" + std::to_string(s_) + "," + std::to_string(a_) +
              ") sums to " + std::to_string(rowsum_)),
        s(s_), a(a_), rowsum(rowsum_) {}
};

struct BadDiscount : Error {
  explicit BadDiscount(double gamma)
      : Error("discount must lie in (0,1), got " + std::to_string(gamma)) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct NonFinite : Error {
  explicit NonFinite(const std::string& msg) : Error(msg) {}
};

struct NotDistribution : Error {
  explicit NotDistribution(const std::string& msg) : Error(msg) {}
};

struct EmptyDataset : Error {
  explicit EmptyDataset(const std::string& msg) : Error(msg) {}
};

struct ZeroVector : Error {
  explicit ZeroVector(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct SingularSystem : Error {
  explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

struct BadSpec : Error {
  explicit BadSpec(const std::string& msg) : Error(msg) {}
};

struct BadMagnitude : Error {
  explicit BadMagnitude(const std::string& msg) : Error(msg) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

}  // namespace rbfm
