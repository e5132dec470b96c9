// Copyright 2026 The ScriptSync Authors
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

// Truncated-hash token encryption.
//
// A token is replaced by the first `digits` lowercase hex characters of the
// SHA-256 digest of its UTF-8 bytes. With the default of 3 digits the code
// space has 4096 values, so distinct words collide; alignment tolerates this
// because colliding words rarely sit next to each other.

#pragma once

#include <openssl/evp.h>

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "scriptsync/core/model.hpp"
#include "scriptsync/core/text.hpp"
#include "scriptsync/util/error.hpp"

namespace scriptsync {

inline constexpr int kDefaultDigits = 3;
inline constexpr int kMaxDigits = 64;

// A truncated lowercase hex digest.
class Code {
 public:
  Code() = default;

  // Throws if `value` is not 1..64 lowercase hex characters.
  explicit Code(std::string value) : value_(std::move(value)) {
    if (value_.empty() || value_.size() > static_cast<std::size_t>(kMaxDigits)) {
      throw Error("code length must be within [1, 64]");
    }
    for (char c : value_) {
      if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) throw Error("code must be lowercase hex: " + value_);
    }
  }

  const std::string& value() const { return value_; }
  std::size_t digits() const { return value_.size(); }

  friend auto operator<=>(const Code&, const Code&) = default;

 private:
  std::string value_;
};

inline std::array<unsigned char, 32> sha256(std::string_view bytes) {
  std::array<unsigned char, 32> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1 || length != 32) {
    throw Error("SHA-256 computation failed");
  }
  return digest;
}

inline std::string sha256_hex(std::string_view bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  const auto digest = sha256(bytes);
  std::string out(64, '0');
  for (std::size_t i = 0; i < digest.size(); ++i) {
    out[2 * i] = kHex[digest[i] >> 4];
    out[2 * i + 1] = kHex[digest[i] & 0xf];
  }
  return out;
}

inline void check_digits(int digits) {
  if (digits < 1 || digits > kMaxDigits) throw Error("digits must be within [1, 64], got " + std::to_string(digits));
}

// Case-sensitive; the token is NFC-normalized before hashing.
inline Code encrypt_token(std::string_view token, int digits = kDefaultDigits) {
  check_digits(digits);
  if (token.empty()) throw Error("cannot encrypt an empty token");
  return Code(sha256_hex(text::nfc(token)).substr(0, static_cast<std::size_t>(digits)));
}

inline std::vector<Code> encrypt_tokens(const std::vector<Token>& tokens, int digits = kDefaultDigits) {
  std::vector<Code> codes;
  codes.reserve(tokens.size());
  for (const auto& t : tokens) codes.push_back(encrypt_token(t.text, digits));
  return codes;
}

// Token-for-token replacement; every non-text field is copied unchanged.
inline Episode encrypt_episode(const Episode& clear, int digits = kDefaultDigits) {
  check_digits(digits);
  if (clear.encrypted) throw Error(clear.id() + ": episode is already encrypted");
  Episode out = clear;
  out.encrypted = true;
  out.digits = digits;
  for (auto& turn : out.turns) {
    for (auto& tok : turn.tokens) {
      if (tok.tag != TokenTag::kPlain) throw Error(clear.id() + ": recovery markers cannot be encrypted");
      tok = Token::code(encrypt_token(tok.text, digits).value());
    }
  }
  return out;
}

}  // namespace scriptsync
