// core/include/phonoscore/error.hpp

// Copyright 2026  Phonoscore Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PHONOSCORE_ERROR_HPP_
#define PHONOSCORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace phonoscore {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// Profile file could not be parsed or failed validation.
class ProfileError : public Error {
 public:
  explicit ProfileError(const std::string& what) : Error(what) {}
};

// Strict-mode segmentation failure: a character the profile cannot map.
class SegmentationError : public Error {
 public:
  SegmentationError(const std::string& what, std::string character, int offset)
      : Error(what), character_(std::move(character)), offset_(offset) {}

  // The offending character (UTF-8) and its code point offset in the
  // normalized word.
  const std::string& character() const { return character_; }
  int offset() const { return offset_; }

 private:
  std::string character_;
  int offset_;
};

}  // namespace phonoscore

#endif  // PHONOSCORE_ERROR_HPP_
