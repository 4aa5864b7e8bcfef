#pragma once

#include <stdexcept>

namespace hawkesflow {

struct invalid_params : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct wrong_form : std::logic_error {
  using std::logic_error::logic_error;
};

struct mixed_forms : std::logic_error {
  using std::logic_error::logic_error;
};

struct out_of_session : std::domain_error {
  using std::domain_error::domain_error;
};

struct reversed_interval : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unsorted_history : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct time_regression : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct insufficient_events : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct too_few_samples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct nonstationary_model : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct missing_field : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct csv_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hawkesflow
