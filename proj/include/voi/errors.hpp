#pragma once

#include <stdexcept>
#include <string>

namespace voi {

// Problem-file parse or validation failure, anchored to a source line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

// A requested information amount exceeds the admissible budget cap: amounts
// must stay strictly below the cheapest way of reaching the full-information
// value, otherwise the binding lemma has no content.
class BudgetCapError : public std::runtime_error {
 public:
  BudgetCapError(double eta, double cap)
      : std::runtime_error("information amount " + std::to_string(eta) +
                           " exceeds the admissible cap " + std::to_string(cap) +
                           " (amounts must stay below the cheapest full-information amount)"),
        eta_(eta),
        cap_(cap) {}

  double eta() const { return eta_; }
  double cap() const { return cap_; }

 private:
  double eta_;
  double cap_;
};

// No distribution on the posterior grid can carry the requested amount.
class InfeasibleEtaError : public std::runtime_error {
 public:
  InfeasibleEtaError(double eta, double max_attainable)
      : std::runtime_error("information amount " + std::to_string(eta) +
                           " is not attainable on this grid (maximum " +
                           std::to_string(max_attainable) + ")"),
        eta_(eta),
        max_attainable_(max_attainable) {}

  double eta() const { return eta_; }
  double max_attainable() const { return max_attainable_; }

 private:
  double eta_;
  double max_attainable_;
};

}  // namespace voi
