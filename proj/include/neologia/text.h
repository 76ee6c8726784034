//
// Copyright 2026 The Neologia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef NEOLOGIA_TEXT_H_
#define NEOLOGIA_TEXT_H_

#include <string>
#include <string_view>

namespace neologia {

// Decodes UTF-8 into code points. Invalid bytes are passed through as
// U+FFFD so that offsets stay monotone.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

// Simple case folding: ASCII and the Latin-1 / Latin Extended-A upper-case
// ranges. Diacritics are preserved (dénouement stays dénouement).
char32_t FoldCase(char32_t c);
std::string FoldCase(std::string_view text);

bool IsSpace(char32_t c);

// SHA-256 of a byte string, lower-case hex.
std::string Sha256Hex(std::string_view bytes);

}  // namespace neologia

#endif  // NEOLOGIA_TEXT_H_
