// Copyright 2026 The AuthROS Simulator Authors
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

namespace authros::protocol {

enum class ErrorCode {
  kInvalidCiphertext,
  kAuthenticityFailed,
  kStaleSystemKey,
  kDuplicateName,
  kNoPendingAlloc,
  kUnknownUser,
  kIdentityCheckFailed,
  kCorruptEnvelope,
  kForgedNodeData,
  kUploadUnconfirmed,
  kAccessDenied,
  kTampered,
  kCacheMiss,
  kLedgerRejected,
  kLedgerRevert,
  kDecryptFailed,
};

const char* error_text(ErrorCode code);

class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(ErrorCode code) : std::runtime_error(error_text(code)), code_(code) {}
  ProtocolError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_text(code)) + ": " + detail), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace authros::protocol
