// Copyright 2026 The gazelidar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gazelidar
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's mathematical domain.
class DomainError : public Error
{
public:
  using Error::Error;
};

/// The region of focus covers none or all of the circle, so there is no
/// complementary region to rebalance power or spin rate into.
class DegeneratePartitionError : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Solved high power level exceeds the configured eye-safety cap.
class EyeSafetyError : public DomainError
{
public:
  using DomainError::DomainError;
};

class ValidationError : public Error
{
public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based; 0 when not line-addressable.
class ParseError : public Error
{
public:
  ParseError(const std::string & source, std::size_t line, const std::string & what)
  : Error(source + ":" + std::to_string(line) + ": " + what), source_(source), line_(line)
  {
  }

  const std::string & source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::string source_;
  std::size_t line_;
};

}  // namespace gazelidar
