// Copyright 2026 The tripscore Authors
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

#ifndef TRIPSCORE__ERRORS_HPP_
#define TRIPSCORE__ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tripscore
{

/// Base class of every error the engine raises. Violations found while
/// checking a plan are data (see Violation), never exceptions.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// ingest

class ParseError : public Error
{
public:
  ParseError(const std::string & where, const std::string & what)
  : Error("parse error at " + where + ": " + what), where_(where)
  {
  }
  const std::string & where() const noexcept { return where_; }

private:
  std::string where_;
};

/// Schema violation; path() names the first offending field, e.g.
/// "dayInfos[1].scheduleDetail[0].period".
class SchemaError : public Error
{
public:
  SchemaError(const std::string & path, const std::string & what)
  : Error("schema error at " + path + ": " + what), path_(path)
  {
  }
  const std::string & path() const noexcept { return path_; }

private:
  std::string path_;
};

class DuplicateIdError : public Error
{
public:
  using Error::Error;
};

class InvalidCoordinateError : public Error
{
public:
  using Error::Error;
};

class UnsupportedViolation : public Error
{
public:
  using Error::Error;
};

// checking / aggregation

class PreconditionError : public Error
{
public:
  using Error::Error;
};

class InvalidGateState : public Error
{
public:
  using Error::Error;
};

class EmptyCorpus : public Error
{
public:
  EmptyCorpus() : Error("corpus is empty") {}
};

// statistics / calibration

class NoPairs : public Error
{
public:
  NoPairs() : Error("no labeled pairs") {}
  using Error::Error;
};

class TooFewPairs : public Error
{
public:
  using Error::Error;
};

class LengthMismatch : public Error
{
public:
  using Error::Error;
};

class DomainError : public Error
{
public:
  using Error::Error;
};

// judge

class JudgeUnavailable : public Error
{
public:
  using Error::Error;
};

class JudgeMalformedResponse : public Error
{
public:
  using Error::Error;
};

class UnknownPlaceholder : public Error
{
public:
  explicit UnknownPlaceholder(const std::string & name)
  : Error("no binding for placeholder {" + name + "}"), name_(name)
  {
  }
  const std::string & name() const noexcept { return name_; }

private:
  std::string name_;
};

}  // namespace tripscore

#endif  // TRIPSCORE__ERRORS_HPP_
