#pragma once

#include <stdexcept>
#include <string>

namespace ga {

// Root of every error the kernel raises.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class dimension_error : public error {
public:
  using error::error;
};

class grade_error : public error {
public:
  using error::error;
};

// A blade name with a repeated index (v ^ v = 0 is not a basis blade).
class degenerate_blade_error : public error {
public:
  using error::error;
};

class rank_error : public error {
public:
  using error::error;
};

class shape_error : public error {
public:
  using error::error;
};

class invariant_error : public error {
public:
  using error::error;
};

class degenerate_metric_error : public error {
public:
  using error::error;
};

class invalid_metric_error : public error {
public:
  using error::error;
};

class invalid_euclidean_error : public error {
public:
  using error::error;
};

} // namespace ga
