// Copyright 2026 The qkneser Authors
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

#include <stdexcept>
#include <string>

namespace qkneser {

// Base class for every error raised by the library. Resource-limit errors
// derive from ResourceLimit so callers (the CLI) can map them to a distinct
// exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

#define QKNESER_DEFINE_ERROR(Name, Base) \
  class Name : public Base {             \
   public:                               \
    using Base::Base;                    \
  }

QKNESER_DEFINE_ERROR(NotPrimePower, Error);
QKNESER_DEFINE_ERROR(Unsupported, Error);
QKNESER_DEFINE_ERROR(DivisionByZero, Error);
QKNESER_DEFINE_ERROR(EmptyMatrix, Error);
QKNESER_DEFINE_ERROR(AmbientMismatch, Error);
QKNESER_DEFINE_ERROR(BadQ, Error);
QKNESER_DEFINE_ERROR(OutOfRange, Error);
QKNESER_DEFINE_ERROR(DimMismatch, Error);
QKNESER_DEFINE_ERROR(NotIndependent, Error);
QKNESER_DEFINE_ERROR(MalformedTree, Error);
QKNESER_DEFINE_ERROR(ParseError, Error);
QKNESER_DEFINE_ERROR(TooLarge, ResourceLimit);
QKNESER_DEFINE_ERROR(SearchSpaceTooLarge, ResourceLimit);

#undef QKNESER_DEFINE_ERROR

}  // namespace qkneser
