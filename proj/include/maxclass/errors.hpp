#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxclass {

/// Base class for all maxclass errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition (wrong length, bad rank, ...).
class contract_violation : public error {
 public:
  using error::error;
};

/// A sin^2 factor of the volume vanished where a derivative was requested.
/// Carries the index of the offending positive root in the documented order.
class singularity_error : public error {
 public:
  singularity_error(const std::string& what, std::size_t root_index)
      : error(what), root_index_(root_index) {}
  std::size_t root_index() const noexcept { return root_index_; }

 private:
  std::size_t root_index_;
};

/// Root isolation found fewer roots than the degree demands; carries the
/// isolation intervals located so far.
class root_count_error : public error {
 public:
  root_count_error(const std::string& what,
                   std::vector<std::pair<double, double>> intervals)
      : error(what), intervals_(std::move(intervals)) {}
  const std::vector<std::pair<double, double>>& isolation_intervals() const noexcept {
    return intervals_;
  }

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// The ODE integrator could not advance; carries the last x reached.
class integration_error : public error {
 public:
  integration_error(const std::string& what, double reached_x)
      : error(what), reached_x_(reached_x) {}
  double reached_x() const noexcept { return reached_x_; }

 private:
  double reached_x_;
};

/// A named certificate check failed.
class certificate_error : public error {
 public:
  certificate_error(std::string check, const std::string& what)
      : error(what), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

/// Every optimizer start failed to converge.
class optimizer_failure : public error {
 public:
  using error::error;
};

}  // namespace maxclass
